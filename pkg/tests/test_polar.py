from fractions import Fraction

import pytest

from whitney import calculus as cal
from whitney import homology as hom
from whitney import polar, sw
from whitney.errors import DegenerateMapError, NotEulerError, PolarError
from whitney.simplicial import barycentric_subdivision


def height_map(k, heights):
    return polar.AffineVertexMap(k, 1, {v: (Fraction(h),) for v, h in heights.items()})


def test_degenerate_height_map_detected(circle):
    f = height_map(circle, {"1": 0, "2": 0, "3": 1})
    ok, offender = polar.is_nondegenerate(f, 0)
    assert not ok and offender in {("1",), ("2",)}
    with pytest.raises(DegenerateMapError):
        polar.euler_singularity_chain(f, cal.constant(circle, 1, cal.RING_Z2), 0)


def test_nondegenerate_height_map_chain(circle):
    f = height_map(circle, {"1": 0, "2": 2, "3": 1})
    c = polar.euler_singularity_chain(f, cal.constant(circle, 1, cal.RING_Z2), 0)
    # min and max of the circle are the only singular vertices of a height map
    assert c.support == {("1",), ("2",)}


def test_half_link_census_values(circle):
    f = height_map(circle, {"1": 0, "2": 2, "3": 1})
    ones = cal.constant(circle, 1, cal.RING_Z2)
    r = polar.half_link_report(ones, ("3",), f)
    assert {c.link_simplex for c in r.cells} == {("1",), ("2",)}
    assert r.chi_plus == 1 and r.chi_minus == 1


def test_half_link_parity_even_spaces(corpus, subdivisions):
    for name in ("s1_3", "boundary_delta3", "rp2_6"):
        k = corpus[name].complex
        sub = subdivisions[name]
        ones = cal.constant(sub.complex, 1)
        for i in range(k.dim + 1):
            f = polar.moment_map(sub, i)
            for s in sub.complex.by_dim[i]:
                r = polar.half_link_report(ones, s, f)
                assert r.chi_plus % 2 == r.chi_minus % 2


def test_half_link_parity_fails_off_euler(subdivisions):
    # on the closed 2-simplex the two sides of a boundary vertex disagree
    sub = subdivisions["delta2"]
    ones = cal.constant(sub.complex, 1)
    f = polar.moment_map(sub, 0)
    r = polar.half_link_report(ones, ("b(1)",), f)
    assert r.chi_plus % 2 != r.chi_minus % 2


def test_moment_map_images(subdivisions):
    sub = subdivisions["rp2_6"]
    f = polar.moment_map(sub, 1)
    assert f.point("b(1)") == (Fraction(0), Fraction(0))
    assert f.point("b(1,2)") == (Fraction(1), Fraction(1))
    assert f.point("b(1,2,3)") == (Fraction(2), Fraction(4))


def test_moment_map_nondegenerate_everywhere(corpus, subdivisions):
    for name, entry in corpus.items():
        sub = subdivisions[name]
        for i in range(entry.complex.dim + 1):
            ok, offender = polar.is_nondegenerate(polar.moment_map(sub, i), i)
            assert ok, (name, i, offender)


def test_singularity_chain_requires_euler_function(subdivisions):
    sub = subdivisions["delta2"]
    with pytest.raises(NotEulerError):
        polar.euler_singularity_chain(
            polar.moment_map(sub, 0), cal.constant(sub.complex, 1, cal.RING_Z2), 0
        )


def test_projection_map_requires_coordinates(corpus):
    with pytest.raises(PolarError):
        polar.projection_map(corpus["torus_7"].complex, [(Fraction(1),)])


def test_projection_chain_on_circle(circle):
    basis = [(Fraction(2), Fraction(1))]
    c = polar.euler_singularity_chain(
        polar.projection_map(circle, basis), cal.constant(circle, 1, cal.RING_Z2), 0
    )
    assert c.support == {("1",), ("2",)}


def test_sample_generic_subspace_deterministic(corpus):
    k = corpus["rp2_6_embedded"].complex
    b1 = polar.sample_generic_subspace(k, 2, seed=11)
    b2 = polar.sample_generic_subspace(k, 2, seed=11)
    assert b1 == b2
    ok, _ = polar.is_nondegenerate(polar.projection_map(k, b1), 1)
    assert ok


def test_projection_chain_homologous_to_stiefel(corpus, subdivisions):
    k = corpus["boundary_delta3"].complex
    sub = subdivisions["boundary_delta3"]
    ones = cal.constant(k, 1, cal.RING_Z2)
    for i in range(k.dim + 1):
        basis = polar.sample_generic_subspace(k, i + 1, seed=5 + i)
        sig = polar.euler_singularity_chain(polar.projection_map(k, basis), ones, i)
        assert hom.homologous(
            sub.complex,
            sw.subdivision_chain_map(sub, sig),
            sw.stiefel_chain(sub, i),
        )
