"""Finite abstract simplicial complexes.

Vertex identifiers are opaque strings; the canonical order is
lexicographic, and every enumeration in the package derives from it, so
all outputs are bit-deterministic.  Optional vertex coordinates are exact
rationals (``fractions.Fraction``); no predicate in the package touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .errors import ComplexError, MapError

Simplex = tuple[str, ...]
Point = tuple[Fraction, ...]


def make_simplex(vertices: Iterable[str]) -> Simplex:
    """Canonicalize a vertex collection into a sorted, duplicate-free tuple."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise ComplexError("a simplex needs at least one vertex")
    if len(set(vs)) != len(vs):
        raise ComplexError(f"duplicate vertex inside simplex {list(vertices)!r}")
    return vs


def faces(s: Simplex) -> list[Simplex]:
    """All nonempty faces of s, including s itself."""
    out = []
    for k in range(1, len(s) + 1):
        out.extend(combinations(s, k))
    return out


def facets(s: Simplex) -> list[Simplex]:
    """Codimension-one faces of s."""
    return [s[:i] + s[i + 1:] for i in range(len(s))]


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices over a finite vertex set.

    ``simplices`` is canonically sorted.  ``coordinates``, when present,
    assigns each vertex an exact rational point of a common ambient
    dimension, with every simplex affinely independent.
    """

    vertices: tuple[str, ...]
    simplices: tuple[Simplex, ...]
    coordinates: Optional[Mapping[str, Point]] = field(default=None, compare=True)

    @cached_property
    def simplex_set(self) -> frozenset[Simplex]:
        return frozenset(self.simplices)

    @cached_property
    def dim(self) -> int:
        """Max simplex dimension; -1 for the empty complex."""
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @cached_property
    def by_dim(self) -> dict[int, tuple[Simplex, ...]]:
        out: dict[int, list[Simplex]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return {d: tuple(ss) for d, ss in out.items()}

    @cached_property
    def cofaces(self) -> dict[Simplex, tuple[Simplex, ...]]:
        """simplex -> all simplices containing it (itself included)."""
        out: dict[Simplex, list[Simplex]] = {s: [] for s in self.simplices}
        for t in self.simplices:
            for f in faces(t):
                out[f].append(t)
        return {s: tuple(ts) for s, ts in out.items()}

    @property
    def ambient_dim(self) -> Optional[int]:
        if self.coordinates is None:
            return None
        return len(next(iter(self.coordinates.values()))) if self.coordinates else 0

    def n_simplices(self, d: int) -> int:
        return len(self.by_dim.get(d, ()))

    def has(self, s: Simplex) -> bool:
        return s in self.simplex_set

    def require(self, s: Simplex) -> Simplex:
        if s not in self.simplex_set:
            raise ComplexError(f"simplex {list(s)} is not in the complex")
        return s


def _affinely_independent(points: list[Point]) -> bool:
    from .exactlin import matrix_rank

    if len(points) <= 1:
        return True
    p0 = points[0]
    rows = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    return matrix_rank(rows) == len(points) - 1


def build_complex(
    vertex_ids: Iterable[str],
    maximal_simplices: Iterable[Iterable[str]],
    coordinates: Optional[Mapping[str, Iterable[Fraction]]] = None,
) -> SimplicialComplex:
    """Face closure of the given simplices, canonically enumerated."""
    listed = list(vertex_ids)
    vertices = tuple(sorted(set(listed)))
    if len(vertices) != len(listed):
        raise ComplexError("duplicate vertex ids in vertex list")
    vertex_set = set(vertices)
    closure: set[Simplex] = set()
    for raw in maximal_simplices:
        raw = list(raw)
        if len(set(raw)) != len(raw):
            raise ComplexError(f"duplicate vertex inside simplex {raw!r}")
        for v in raw:
            if v not in vertex_set:
                raise ComplexError(f"simplex {raw!r} references unknown vertex {v!r}")
        closure.update(faces(make_simplex(raw)))
    coords = None
    if coordinates is not None:
        coords = {v: tuple(coordinates[v]) for v in vertices if v in coordinates}
        missing = [v for v in vertices if v not in coords]
        if missing:
            raise ComplexError(f"missing coordinates for vertices {missing}")
        dims = {len(p) for p in coords.values()}
        if len(dims) > 1:
            raise ComplexError("vertex coordinates have mixed ambient dimensions")
        k = SimplicialComplex(vertices, tuple(sorted(closure)), coords)
        for s in k.simplices:
            if not _affinely_independent([coords[v] for v in s]):
                raise ComplexError(
                    f"simplex {list(s)} is not affinely independent in the embedding"
                )
        return k
    return SimplicialComplex(vertices, tuple(sorted(closure)), None)


def complex_from_simplices(simplices: Iterable[Simplex]) -> SimplicialComplex:
    """Complex spanned by an already face-closed simplex set (re-closed here)."""
    closure: set[Simplex] = set()
    for s in simplices:
        closure.update(faces(s))
    vertices = tuple(sorted({v for s in closure for v in s}))
    return SimplicialComplex(vertices, tuple(sorted(closure)))


def is_face_closed(k: SimplicialComplex, simplices: Iterable[Simplex]) -> Optional[Simplex]:
    """Return a missing face if the set is not face-closed in k, else None."""
    sset = set(simplices)
    for s in sset:
        k.require(s)
        for f in faces(s):
            if f not in sset:
                return f
    return None


def link(k: SimplicialComplex, s: Simplex) -> SimplicialComplex:
    """Lk(s, k) = {t : t disjoint from s and t+s in k}, on the ambient vertex set."""
    k.require(s)
    sset = set(s)
    out = []
    for t in k.simplices:
        if sset.isdisjoint(t) and tuple(sorted(sset.union(t))) in k.simplex_set:
            out.append(t)
    return SimplicialComplex(k.vertices, tuple(out), k.coordinates)


def star(k: SimplicialComplex, s: Simplex) -> SimplicialComplex:
    """Closed star: faces of simplices containing s."""
    k.require(s)
    out: set[Simplex] = set()
    for t in k.cofaces[s]:
        out.update(faces(t))
    return SimplicialComplex(k.vertices, tuple(sorted(out)), k.coordinates)


def euler_characteristic(k: SimplicialComplex) -> int:
    """Alternating simplex count."""
    return sum((-1) ** (len(s) - 1) for s in k.simplices)


@dataclass(frozen=True)
class SimplicialMap:
    """Vertex assignment inducing a simplexwise-linear map."""

    domain: SimplicialComplex
    codomain: SimplicialComplex
    vertex_map: Mapping[str, str]

    def image(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.vertex_map[v] for v in s}))


def validate_map(
    domain: SimplicialComplex,
    codomain: SimplicialComplex,
    vertex_assignment: Mapping[str, str],
) -> SimplicialMap:
    """Check that every simplex image is a codomain simplex."""
    for v in domain.vertices:
        if v not in vertex_assignment:
            raise MapError(f"vertex {v!r} has no image")
        if vertex_assignment[v] not in set(codomain.vertices):
            raise MapError(f"image vertex {vertex_assignment[v]!r} is not in the codomain")
    f = SimplicialMap(domain, codomain, dict(vertex_assignment))
    for s in domain.simplices:
        if f.image(s) not in codomain.simplex_set:
            raise MapError(
                f"image {list(f.image(s))} of simplex {list(s)} is not a codomain simplex"
            )
    return f


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """g after f."""
    if f.codomain != g.domain:
        raise MapError("composition mismatch: codomain of f is not domain of g")
    vm = {v: g.vertex_map[f.vertex_map[v]] for v in f.domain.vertices}
    return SimplicialMap(f.domain, g.codomain, vm)


def barycenter_name(s: Simplex) -> str:
    return "b(" + ",".join(s) + ")"


@dataclass(frozen=True)
class Subdivision:
    """Barycentric subdivision with carrier bookkeeping.

    Vertices of the subdivided complex biject with simplices of the base;
    a set of new vertices spans a simplex iff their carriers form a strict
    flag in the base.  The carrier of a subdivided simplex is the maximal
    flag member.
    """

    base: SimplicialComplex
    complex: SimplicialComplex
    carriers: Mapping[str, Simplex]

    def flag(self, s: Simplex) -> tuple[Simplex, ...]:
        """Chain of base simplices carried by the vertices of s, by dimension."""
        return tuple(sorted((self.carriers[v] for v in s), key=len))

    def carrier(self, s: Simplex) -> Simplex:
        return max((self.carriers[v] for v in s), key=len)


def barycentric_subdivision(k: SimplicialComplex) -> Subdivision:
    """Subdivided complex on the strict flags of k."""
    names = {s: barycenter_name(s) for s in k.simplices}
    # flags ending at a given simplex, built up the face poset
    flags_at: dict[Simplex, list[tuple[Simplex, ...]]] = {}
    for s in sorted(k.simplices, key=lambda t: (len(t), t)):
        fl: list[tuple[Simplex, ...]] = [(s,)]
        for f in faces(s):
            if f != s:
                fl.extend(sub + (s,) for sub in flags_at[f])
        flags_at[s] = fl
    simplices = set()
    for fls in flags_at.values():
        for fl in fls:
            simplices.add(tuple(sorted(names[t] for t in fl)))
    coords = None
    if k.coordinates is not None:
        coords = {}
        for s in k.simplices:
            pts = [k.coordinates[v] for v in s]
            coords[names[s]] = tuple(
                sum(col, Fraction(0)) / len(pts) for col in zip(*pts)
            )
    prime = SimplicialComplex(
        tuple(sorted(names.values())), tuple(sorted(simplices)), coords
    )
    carriers = {names[s]: s for s in k.simplices}
    return Subdivision(k, prime, carriers)


def induced_subdivided_map(
    f: SimplicialMap, sub_dom: Subdivision, sub_cod: Subdivision
) -> SimplicialMap:
    """Map of subdivisions sending the barycenter of s to the barycenter of f(s)."""
    if sub_dom.base != f.domain or sub_cod.base != f.codomain:
        raise MapError("subdivisions do not match the map's domain/codomain")
    vm = {
        barycenter_name(s): barycenter_name(f.image(s)) for s in f.domain.simplices
    }
    return validate_map(sub_dom.complex, sub_cod.complex, vm)
