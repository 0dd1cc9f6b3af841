from fractions import Fraction

import pytest

from whitney.errors import ComplexError, InputError, MapError
from whitney.simplicial import (
    barycentric_subdivision,
    build_complex,
    compose,
    euler_characteristic,
    faces,
    induced_subdivided_map,
    link,
    star,
    validate_map,
)


def test_face_closure():
    k = build_complex(["1", "2", "3"], [["1", "2", "3"]])
    assert len(k.simplices) == 7
    assert ("1", "3") in k.simplex_set
    assert k.dim == 2


def test_duplicate_vertex_rejected():
    with pytest.raises((InputError, ComplexError)):
        build_complex(["a", "a"], [["a"]])


def test_degenerate_simplex_rejected():
    with pytest.raises((InputError, ComplexError)):
        build_complex(["a", "b"], [["a", "a"]])


def test_unknown_vertex_rejected():
    with pytest.raises((InputError, ComplexError)):
        build_complex(["a"], [["a", "b"]])


def test_affinely_dependent_coordinates_rejected():
    coords = {
        "1": (Fraction(0), Fraction(0)),
        "2": (Fraction(1), Fraction(1)),
        "3": (Fraction(2), Fraction(2)),
    }
    with pytest.raises((InputError, ComplexError)):
        build_complex(["1", "2", "3"], [["1", "2", "3"]], coords)


def test_link_and_star(sphere):
    lk = link(sphere, ("1",))
    # link of a vertex in the 2-sphere boundary is a triangle circle
    assert euler_characteristic(lk) == 0
    assert lk.dim == 1
    st = star(sphere, ("1",))
    assert ("2", "3", "4") not in st.simplex_set
    assert ("1", "2", "3") in st.simplex_set


def test_euler_characteristic(corpus):
    assert euler_characteristic(corpus["rp2_6"].complex) == 1
    assert euler_characteristic(corpus["torus_7"].complex) == 0
    assert euler_characteristic(corpus["boundary_delta3"].complex) == 2
    assert euler_characteristic(corpus["pinched_torus"].complex) == 1


def test_subdivision_counts(circle):
    sub = barycentric_subdivision(circle)
    # 3 + 3 vertices, each edge split in two
    assert len(sub.complex.by_dim[0]) == 6
    assert len(sub.complex.by_dim[1]) == 6
    assert euler_characteristic(sub.complex) == euler_characteristic(circle)


def test_subdivision_carriers(sphere):
    sub = barycentric_subdivision(sphere)
    for v in sub.complex.vertices:
        assert sub.carrier((v,)) in sphere.simplex_set
    for s in sub.complex.simplices:
        flag = sub.flag(s)
        assert len(flag) == len(s)
        for small, big in zip(flag, flag[1:]):
            assert set(small) < set(big)


def test_subdivision_coordinates(circle):
    sub = barycentric_subdivision(circle)
    coords = sub.complex.coordinates
    mid = coords["b(1,2)"]
    assert mid == tuple(
        (a + b) / 2 for a, b in zip(coords["b(1)"], coords["b(2)"])
    )


def test_validate_map_rejects_non_simplicial(circle, sphere):
    with pytest.raises(MapError):
        validate_map(sphere, circle, {"1": "1", "2": "2", "3": "3", "4": "1"})


def test_validate_map_requires_total_vertex_map(circle):
    with pytest.raises(MapError):
        validate_map(circle, circle, {"1": "1", "2": "2"})


def test_compose(map_suite):
    by_name = {m.name: m for m in map_suite}
    gf = compose(by_name["collapse_s1_3"].map, by_name["double_cover"].map)
    assert all(gf.vertex_map[v] == "p" for v in gf.domain.vertices)


def test_induced_subdivided_map(map_suite):
    by_name = {m.name: m for m in map_suite}
    f = by_name["double_cover"].map
    sd = barycentric_subdivision(f.domain)
    sc = barycentric_subdivision(f.codomain)
    fp = induced_subdivided_map(f, sd, sc)
    # the subdivided map sends barycenters to barycenters of image simplices
    assert fp.vertex_map["b(0,1)"] == "b(1,2)"
    assert fp.vertex_map["b(3)"] == "b(1)"
    validate_map(sd.complex, sc.complex, fp.vertex_map)


def test_faces_enumeration():
    fs = faces(("a", "b", "c"))
    assert len(fs) == 7
    assert ("a",) in fs and ("a", "b", "c") in fs
