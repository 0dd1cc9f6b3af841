import pytest

from whitney import homology as hom
from whitney.errors import HomologyError
from whitney.homology import Mod2Chain, chain
from whitney.simplicial import barycentric_subdivision


def sympy_betti(k):
    """Independent GF(2) rank oracle built on sympy's DomainMatrix."""
    from sympy.polys.domains import GF
    from sympy.polys.matrices import DomainMatrix

    gf2 = GF(2)
    ranks = [0] * (k.dim + 2)  # ranks[d] = rank of boundary_d
    for d in range(1, k.dim + 1):
        rows = k.by_dim.get(d - 1, [])
        cols = k.by_dim.get(d, [])
        if not rows or not cols:
            continue
        row_index = {s: i for i, s in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, s in enumerate(cols):
            for drop in range(len(s)):
                facet = s[:drop] + s[drop + 1:]
                mat[row_index[facet]][j] = 1
        dm = DomainMatrix([[gf2(x) for x in row] for row in mat], (len(rows), len(cols)), gf2)
        ranks[d] = dm.rank()
    betti = []
    for d in range(k.dim + 1):
        cycles = len(k.by_dim.get(d, [])) - ranks[d]
        betti.append(cycles - ranks[d + 1])
    return tuple(betti)


@pytest.mark.parametrize(
    "name,expected",
    [
        ("point", (1,)),
        ("s1_3", (1, 1)),
        ("s1_6", (1, 1)),
        ("boundary_delta3", (1, 0, 1)),
        ("delta2", (1, 0, 0)),
        ("rp2_6", (1, 1, 1)),
        ("torus_7", (1, 2, 1)),
        ("wedge_spheres", (1, 0, 2)),
        ("wedge_circles", (1, 2)),
        ("pinched_torus", (1, 1, 1)),
    ],
)
def test_betti_known_values(corpus, name, expected):
    assert hom.betti_mod2(corpus[name].complex).betti == expected


def test_betti_matches_sympy_oracle(corpus):
    for entry in corpus.values():
        assert hom.betti_mod2(entry.complex).betti == sympy_betti(entry.complex)


def test_betti_matches_sympy_oracle_on_subdivision(rp2):
    sub = barycentric_subdivision(rp2)
    assert hom.betti_mod2(sub.complex).betti == sympy_betti(sub.complex)


def test_boundary_of_boundary_vanishes(corpus):
    for entry in corpus.values():
        k = entry.complex
        for d in range(2, k.dim + 1):
            c = Mod2Chain(d, frozenset(k.by_dim[d]))
            assert hom.boundary(k, hom.boundary(k, c)).support == frozenset()


def test_fundamental_cycle(corpus):
    fc = hom.fundamental_cycle(corpus["rp2_6"].complex)
    assert len(fc.support) == 10
    assert hom.is_cycle(corpus["rp2_6"].complex, fc)
    with pytest.raises(HomologyError):
        hom.fundamental_cycle(corpus["delta2"].complex)  # top chain is not a cycle


def test_is_boundary_with_witness(circle, sphere):
    loop = chain(1, [["1", "2"], ["2", "3"], ["1", "3"]])
    bounds, witness = hom.is_boundary(circle, loop)
    assert not bounds and witness is None
    bounds, witness = hom.is_boundary(sphere, loop)
    assert bounds
    assert hom.boundary(sphere, witness).support == loop.support


def test_is_boundary_rejects_non_cycle(circle):
    with pytest.raises(HomologyError):
        hom.is_boundary(circle, chain(1, [["1", "2"]]))


def test_homologous(sphere):
    c1 = chain(1, [["1", "2"], ["2", "3"], ["1", "3"]])
    c2 = chain(1, [["1", "2"], ["2", "4"], ["1", "4"]])
    assert hom.homologous(sphere, c1, c2)
    assert hom.homologous(sphere, c1, c1)


def test_chain_pushforward_drops_collapsed(map_suite):
    by_name = {m.name: m for m in map_suite}
    fold = by_name["fold"].map
    c = chain(1, [["a", "b"], ["b", "c"]])
    # both edges map onto pq, cancelling mod 2
    assert hom.chain_pushforward(fold, c).support == frozenset()
    collapse = by_name["collapse_s1_3"].map
    c = chain(1, [["1", "2"]])
    assert hom.chain_pushforward(collapse, c).support == frozenset()


def test_deterministic_witness(sphere):
    loop = chain(1, [["1", "2"], ["2", "3"], ["1", "3"]])
    w1 = hom.is_boundary(sphere, loop)[1]
    w2 = hom.is_boundary(sphere, loop)[1]
    assert w1.support == w2.support
