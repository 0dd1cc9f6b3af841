"""Combinatorial calculus of constructible functions.

A constructible function assigns a value (integer, or 0/1 in mod 2 mode)
to every open simplex of a fixed complex.  The Euler integral is the
alternating open-cell sum; duality and pushforward are the closed-form
coface/fiber sums, cross-checked elsewhere against the link formula and a
fiber oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import CalculusError
from .simplicial import (
    Simplex,
    SimplicialComplex,
    SimplicialMap,
    Subdivision,
    euler_characteristic,
    is_face_closed,
    link,
)

RING_Z = "Z"
RING_Z2 = "Z2"


@dataclass(frozen=True)
class ConstructibleFunction:
    """Total assignment open simplex -> coefficient in the tagged ring."""

    base: SimplicialComplex
    ring: str
    values: Mapping[Simplex, int]

    def __post_init__(self):
        if self.ring not in (RING_Z, RING_Z2):
            raise CalculusError(f"unknown ring tag {self.ring!r}")
        if set(self.values) != set(self.base.simplices):
            raise CalculusError("values must cover every simplex exactly once")
        if self.ring == RING_Z2 and any(v not in (0, 1) for v in self.values.values()):
            raise CalculusError("mod 2 values must be 0 or 1")

    def __call__(self, s: Simplex) -> int:
        return self.values[s]

    @property
    def support(self) -> tuple[Simplex, ...]:
        return tuple(s for s in self.base.simplices if self.values[s] != 0)

    def support_dim(self) -> int:
        return max((len(s) - 1 for s in self.support), default=-1)


def constant(k: SimplicialComplex, value: int = 1, ring: str = RING_Z) -> ConstructibleFunction:
    if ring == RING_Z2:
        value %= 2
    return ConstructibleFunction(k, ring, {s: value for s in k.simplices})


def from_values(k: SimplicialComplex, values: Mapping[Simplex, int], ring: str = RING_Z) -> ConstructibleFunction:
    vals = {s: values.get(s, 0) for s in k.simplices}
    if ring == RING_Z2:
        vals = {s: v % 2 for s, v in vals.items()}
    return ConstructibleFunction(k, ring, vals)


def indicator(k: SimplicialComplex, closed_subcomplex: Iterable[Simplex], ring: str = RING_Z) -> ConstructibleFunction:
    """Value 1 on the simplices of a face-closed subset, 0 elsewhere."""
    sub = {tuple(sorted(s)) for s in closed_subcomplex}
    missing = is_face_closed(k, sub)
    if missing is not None:
        raise CalculusError(f"subcomplex is not face-closed: missing face {list(missing)}")
    return ConstructibleFunction(k, ring, {s: 1 if s in sub else 0 for s in k.simplices})


def indicator_sum(
    k: SimplicialComplex,
    terms: Iterable[tuple[int, Iterable[Simplex]]],
    ring: str = RING_Z,
) -> ConstructibleFunction:
    """Per-simplex expansion of a sum of weighted closed indicators."""
    vals = {s: 0 for s in k.simplices}
    for coeff, sub in terms:
        ind = indicator(k, sub, RING_Z)
        for s in k.simplices:
            vals[s] += coeff * ind(s)
    if ring == RING_Z2:
        vals = {s: v % 2 for s, v in vals.items()}
    return ConstructibleFunction(k, ring, vals)


def _check_compatible(a: ConstructibleFunction, b: ConstructibleFunction) -> None:
    if a.base != b.base:
        raise CalculusError("functions live on different complexes")
    if a.ring != b.ring:
        raise CalculusError("functions have different ring tags")


def combine(op: str, a: ConstructibleFunction, b: ConstructibleFunction) -> ConstructibleFunction:
    """Pointwise ring operation (op in {'add', 'multiply'})."""
    _check_compatible(a, b)
    if op == "add":
        vals = {s: a(s) + b(s) for s in a.base.simplices}
    elif op == "multiply":
        vals = {s: a(s) * b(s) for s in a.base.simplices}
    else:
        raise CalculusError(f"unknown operation {op!r}")
    if a.ring == RING_Z2:
        vals = {s: v % 2 for s, v in vals.items()}
    return ConstructibleFunction(a.base, a.ring, vals)


def reduce_mod2(a: ConstructibleFunction) -> ConstructibleFunction:
    if a.ring == RING_Z2:
        return a
    return ConstructibleFunction(a.base, RING_Z2, {s: v % 2 for s, v in a.values.items()})


def chi(a: ConstructibleFunction) -> int:
    """Euler integral: alternating open-cell sum (plain sum mod 2 in Z2 mode)."""
    if a.ring == RING_Z2:
        return sum(a.values.values()) % 2
    return sum((-1) ** (len(s) - 1) * v for s, v in a.values.items())


def dual(a: ConstructibleFunction) -> ConstructibleFunction:
    """Duality operator: signed coface sum on each open simplex."""
    k = a.base
    vals = {}
    for s in k.simplices:
        total = sum((-1) ** (len(t) - 1) * a(t) for t in k.cofaces[s])
        if a.ring == RING_Z2:
            total %= 2
        vals[s] = total
    return ConstructibleFunction(k, a.ring, vals)


def pushforward(f: SimplicialMap, a: ConstructibleFunction) -> ConstructibleFunction:
    """Fiberwise Euler integral over a generic point of each codomain simplex."""
    if a.base != f.domain:
        raise CalculusError("function is not based on the map's domain")
    vals = {s: 0 for s in f.codomain.simplices}
    for t in f.domain.simplices:
        img = f.image(t)
        vals[img] += (-1) ** (len(t) - len(img)) * a(t)
    if a.ring == RING_Z2:
        vals = {s: v % 2 for s, v in vals.items()}
    return ConstructibleFunction(f.codomain, a.ring, vals)


def pullback(f: SimplicialMap, b: ConstructibleFunction) -> ConstructibleFunction:
    """Composition with the map: value at t is the value at f(t)."""
    if b.base != f.codomain:
        raise CalculusError("function is not based on the map's codomain")
    vals = {t: b(f.image(t)) for t in f.domain.simplices}
    return ConstructibleFunction(f.domain, b.ring, vals)


def fiber_chi_oracle(f: SimplicialMap, q: str) -> int:
    """Euler characteristic of the closed vertex fiber {t : f(t) = {q}}.

    Independent check of the pushforward closed form at vertices.
    """
    if q not in set(f.codomain.vertices):
        raise CalculusError(f"{q!r} is not a vertex of the codomain")
    fiber = [t for t in f.domain.simplices if f.image(t) == (q,)]
    return sum((-1) ** (len(t) - 1) for t in fiber)


def euler_offenders(a: ConstructibleFunction) -> list[Simplex]:
    """Simplices where the mod 2 duality fixed-point condition fails."""
    a2 = reduce_mod2(a)
    d = dual(a2)
    return [s for s in a2.base.simplices if d(s) != a2(s)]


def is_euler_function(a: ConstructibleFunction) -> bool:
    """True iff the mod 2 reduction is fixed by the duality operator."""
    return not euler_offenders(a)


@dataclass(frozen=True)
class EulerSpaceReport:
    is_euler: bool
    offenders: tuple[Simplex, ...]


def is_euler_space(k: SimplicialComplex) -> EulerSpaceReport:
    """Euler-space test: every simplex link has even Euler characteristic."""
    offenders = tuple(euler_offenders(constant(k, 1, RING_Z2)))
    return EulerSpaceReport(not offenders, offenders)


def subdivide_function(sub: Subdivision, a: ConstructibleFunction) -> ConstructibleFunction:
    """The same function on the subdivided complex, via carriers.

    Each open simplex of the subdivision lies inside the open simplex of
    its carrier, so the carrier pullback represents the identical function
    on the underlying space.
    """
    if a.base != sub.base:
        raise CalculusError("function is not based on the subdivision's base")
    vals = {s: a(sub.carrier(s)) for s in sub.complex.simplices}
    return ConstructibleFunction(sub.complex, a.ring, vals)


def link_dual_oracle(k: SimplicialComplex, closed_subcomplex: Iterable[Simplex], s: Simplex) -> int:
    """(-1)^dim(s) * (1 - chi(Lk(s, X))) for s in the closed set X.

    Independent link-formula evaluation of the dual of an indicator.
    """
    sub = {tuple(sorted(t)) for t in closed_subcomplex}
    x = SimplicialComplex(k.vertices, tuple(sorted(sub)))
    lk = link(x, tuple(sorted(s)))
    return (-1) ** (len(s) - 1) * (1 - euler_characteristic(lk))
