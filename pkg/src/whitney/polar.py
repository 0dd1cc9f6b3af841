"""Exact simplexwise-linear maps and Euler-singularity (polar) chains.

A map to R^(i+1) is nondegenerate when the image of every i-simplex spans
an affine hyperplane that misses all of its link-vertex images.  The
coefficient of an i-simplex in the singularity chain is the weighted
half-link Euler integral subtracted from the function value on the
simplex, mod 2; with the constant function 1 this is the classical
1 - chi(upper half-link).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .calculus import ConstructibleFunction, is_euler_function, reduce_mod2
from .errors import DegenerateMapError, NotEulerError, PolarError
from .exactlin import affine_hyperplane, dot, matrix_rank
from .homology import Mod2Chain
from .simplicial import Simplex, SimplicialComplex, Subdivision, link


@dataclass(frozen=True)
class AffineVertexMap:
    """Exact rational images of all vertices in R^(target_dim)."""

    domain: SimplicialComplex
    target_dim: int
    images: Mapping[str, tuple[Fraction, ...]]

    def __post_init__(self):
        if self.target_dim < 1:
            raise PolarError("target dimension must be at least 1")
        missing = [v for v in self.domain.vertices if v not in self.images]
        if missing:
            raise PolarError(f"missing images for vertices {missing}")
        for v, p in self.images.items():
            if len(p) != self.target_dim:
                raise PolarError(f"image of {v!r} has wrong dimension")

    def point(self, v: str) -> tuple[Fraction, ...]:
        return self.images[v]


def _hyperplane_at(f: AffineVertexMap, s: Simplex):
    points = [f.point(v) for v in s]
    if len(points) != f.target_dim:
        raise PolarError(
            f"simplex {list(s)} has dimension {len(s) - 1}, expected {f.target_dim - 1}"
        )
    return affine_hyperplane(points)


def _link_signs(f: AffineVertexMap, s: Simplex) -> tuple[dict[str, int], tuple, Fraction]:
    """Hyperplane of f(s) and the strict side of every link vertex."""
    plane = _hyperplane_at(f, s)
    if plane is None:
        raise DegenerateMapError(
            f"image of simplex {list(s)} does not span a hyperplane", offender=s
        )
    normal, offset = plane
    lk = link(f.domain, s)
    signs: dict[str, int] = {}
    for (w,) in lk.by_dim.get(0, ()):
        h = dot(normal, f.point(w)) - offset
        if h == 0:
            raise DegenerateMapError(
                f"link vertex {w!r} of {list(s)} maps into the hyperplane", offender=s
            )
        signs[w] = 1 if h > 0 else -1
    return signs, normal, offset


def is_nondegenerate(f: AffineVertexMap, i: int) -> tuple[bool, Optional[Simplex]]:
    """Per-simplex test over all i-simplices; returns the first offender."""
    if f.target_dim != i + 1:
        raise PolarError(f"target dimension {f.target_dim} does not match i+1={i + 1}")
    for s in f.domain.by_dim.get(i, ()):
        try:
            _link_signs(f, s)
        except DegenerateMapError as e:
            return False, e.offender
    return True, None


@dataclass(frozen=True)
class HalfLinkCell:
    """Census entry for one link simplex."""

    link_simplex: Simplex
    positive_cell: bool   # open part strictly on the positive side
    negative_cell: bool
    zero_cell: bool       # slice by the hyperplane (vertices on both sides)
    weight: int           # function value on the joined simplex


@dataclass(frozen=True)
class HalfLinkReport:
    simplex: Simplex
    normal: tuple[int, ...]
    offset: Fraction
    cells: tuple[HalfLinkCell, ...]
    chi_plus: int
    chi_minus: int


def half_link_report(a: ConstructibleFunction, s: Simplex, f: AffineVertexMap) -> HalfLinkReport:
    """Weighted Euler integrals of both half-links of s under f.

    Each link simplex U contributes its strictly-one-sided open cell (dim
    U, present iff some vertex of U lies strictly on that side) and its
    hyperplane slice (dim U - 1, present iff U has vertices strictly on
    both sides); each present cell is weighted by the function value on
    the joined simplex.
    """
    k = f.domain
    if a.base != k:
        raise PolarError("function is not based on the map's domain")
    k.require(tuple(sorted(s)))
    signs, normal, offset = _link_signs(f, s)
    lk = link(k, s)
    cells = []
    chi_plus = 0
    chi_minus = 0
    sset = set(s)
    for u in lk.simplices:
        pos = any(signs[w] > 0 for w in u)
        neg = any(signs[w] < 0 for w in u)
        joined = tuple(sorted(sset.union(u)))
        weight = a(joined)
        d = len(u) - 1
        if pos:
            chi_plus += (-1) ** d * weight
        if neg:
            chi_minus += (-1) ** d * weight
        if pos and neg:
            chi_plus += (-1) ** (d - 1) * weight
            chi_minus += (-1) ** (d - 1) * weight
        cells.append(HalfLinkCell(u, pos, neg, pos and neg, weight))
    if a.ring == "Z2":
        chi_plus %= 2
        chi_minus %= 2
    return HalfLinkReport(tuple(sorted(s)), normal, offset, tuple(cells), chi_plus, chi_minus)


def half_link_chi(a: ConstructibleFunction, s: Simplex, f: AffineVertexMap, side: str = "+") -> int:
    """Weighted half-link Euler integral on the chosen side of the hyperplane."""
    report = half_link_report(a, s, f)
    if side == "+":
        return report.chi_plus
    if side == "-":
        return report.chi_minus
    raise PolarError(f"side must be '+' or '-', got {side!r}")


def euler_singularity_chain(
    f: AffineVertexMap, a: ConstructibleFunction, i: int
) -> Mod2Chain:
    """Singularity chain: coefficient a(S) - chi_plus_S(a) mod 2 at each i-simplex."""
    ok, offender = is_nondegenerate(f, i)
    if not ok:
        raise DegenerateMapError(
            f"map is degenerate at simplex {list(offender)}", offender=offender
        )
    a2 = reduce_mod2(a)
    if not is_euler_function(a2):
        raise NotEulerError("singularity chain requires an Euler function")
    support = set()
    for s in f.domain.by_dim.get(i, ()):
        coeff = (a2(s) - half_link_chi(a2, s, f, "+")) % 2
        if coeff:
            support.add(s)
    return Mod2Chain(i, frozenset(support))


def moment_map(sub: Subdivision, i: int) -> AffineVertexMap:
    """Barycenter of each k-simplex goes to (k, k^2, ..., k^(i+1))."""
    if not 0 <= i <= sub.base.dim:
        raise PolarError(f"i={i} out of range for a {sub.base.dim}-complex")
    images = {}
    for v in sub.complex.vertices:
        k = len(sub.carriers[v]) - 1
        images[v] = tuple(Fraction(k ** (j + 1)) for j in range(i + 1))
    return AffineVertexMap(sub.complex, i + 1, images)


def projection_map(k: SimplicialComplex, basis: Sequence[Sequence[Fraction]]) -> AffineVertexMap:
    """x -> (<b_1, x>, ..., <b_m, x>) on the vertex coordinates.

    Differs from orthogonal projection onto span(basis) by an invertible
    change of target coordinates, which the mod 2 chain cannot see.
    """
    if k.coordinates is None:
        raise PolarError("complex has no coordinates; cannot project")
    n = k.ambient_dim
    basis = [tuple(Fraction(x) for x in b) for b in basis]
    for b in basis:
        if len(b) != n:
            raise PolarError("basis vector has wrong ambient dimension")
    if matrix_rank(basis) != len(basis):
        raise PolarError("basis vectors are linearly dependent")
    images = {
        v: tuple(dot(b, k.coordinates[v]) for b in basis) for v in k.vertices
    }
    return AffineVertexMap(k, len(basis), images)


def sample_generic_subspace(
    k: SimplicialComplex, rank: int, seed: int, max_retries: int = 200
) -> list[tuple[Fraction, ...]]:
    """Seeded rational basis, resampled until the induced map is nondegenerate.

    The stream is Python's Mersenne Twister seeded with `seed`; identical
    (seed, complex) pairs give identical bases.
    """
    if k.coordinates is None:
        raise PolarError("complex has no coordinates; cannot sample a subspace")
    n = k.ambient_dim
    if not 1 <= rank <= n:
        raise PolarError(f"rank {rank} out of range for ambient dimension {n}")
    rng = random.Random(seed)
    last_offender = None
    for attempt in range(max_retries):
        bound = 9 + attempt
        basis = [
            tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
            for _ in range(rank)
        ]
        if matrix_rank(basis) != rank:
            continue
        f = projection_map(k, basis)
        ok, offender = is_nondegenerate(f, rank - 1)
        if ok:
            return basis
        last_offender = offender
    raise PolarError(
        f"no nondegenerate basis found in {max_retries} tries; "
        f"last offending simplex: {list(last_offender) if last_offender else None}"
    )
