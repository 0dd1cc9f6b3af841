from whitney import verify


def test_all_suites_pass_at_small_scale():
    for suite in ("calculus", "stiefel", "polar", "axioms"):
        report = verify.run_suite(suite, seed=9, trials=10)
        assert report.ok, (suite, [p.name for p in report.properties if p.failures])
        assert report.properties


def test_suite_reports_deterministic():
    r1 = verify.run_suite("calculus", seed=4, trials=20)
    r2 = verify.run_suite("calculus", seed=4, trials=20)
    assert [(p.name, p.trials, p.failures) for p in r1.properties] == [
        (p.name, p.trials, p.failures) for p in r2.properties
    ]


def test_random_euler_functions_are_euler(corpus):
    import random

    from whitney import calculus as cal

    rng = random.Random(1)
    for entry in corpus.values():
        for _ in range(5):
            assert cal.is_euler_function(verify.random_euler_function(rng, entry.complex))
