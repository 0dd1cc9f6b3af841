"""Mod 2 chains and homology over a fixed complex.

Boundary operators, cycle/boundary decision procedures with exact
witnesses, GF(2) Betti numbers, fundamental cycles, and chain pushforward
along simplicial maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import HomologyError
from .gf2 import Gf2System
from .simplicial import Simplex, SimplicialComplex, SimplicialMap, facets


@dataclass(frozen=True)
class Mod2Chain:
    """GF(2) formal sum of same-dimension simplices (coefficient 1 each)."""

    dim: int
    support: frozenset[Simplex]

    def __post_init__(self):
        for s in self.support:
            if len(s) - 1 != self.dim:
                raise HomologyError(
                    f"simplex {list(s)} has dimension {len(s) - 1}, chain has {self.dim}"
                )

    def __add__(self, other: "Mod2Chain") -> "Mod2Chain":
        if self.dim != other.dim:
            raise HomologyError("cannot add chains of different dimensions")
        return Mod2Chain(self.dim, self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def sorted_support(self) -> list[Simplex]:
        return sorted(self.support)


def chain(dim: int, simplices: Iterable[Iterable[str]]) -> Mod2Chain:
    return Mod2Chain(dim, frozenset(tuple(sorted(s)) for s in simplices))


def zero_chain(dim: int) -> Mod2Chain:
    return Mod2Chain(dim, frozenset())


def _check_chain(k: SimplicialComplex, c: Mod2Chain) -> None:
    for s in c.support:
        if s not in k.simplex_set:
            raise HomologyError(f"chain simplex {list(s)} is not in the complex")


def boundary(k: SimplicialComplex, c: Mod2Chain) -> Mod2Chain:
    """Mod 2 sum of facets of the support simplices."""
    _check_chain(k, c)
    out: set[Simplex] = set()
    for s in c.support:
        for f in facets(s):
            out.symmetric_difference_update({f})
    return Mod2Chain(c.dim - 1, frozenset(out))


def is_cycle(k: SimplicialComplex, c: Mod2Chain) -> bool:
    if c.dim == 0:
        _check_chain(k, c)
        return True
    return not boundary(k, c)


def _boundary_system(k: SimplicialComplex, d: int) -> tuple[Gf2System, dict[Simplex, int], list[Simplex]]:
    """Columns of the boundary matrix C_d -> C_{d-1} in canonical order."""
    rows = {s: i for i, s in enumerate(k.by_dim.get(d - 1, ()))}
    cols = list(k.by_dim.get(d, ()))
    columns = []
    for s in cols:
        v = 0
        for f in facets(s):
            v ^= 1 << rows[f]
        columns.append(v)
    return Gf2System(columns), rows, cols


@dataclass(frozen=True)
class HomologySummary:
    """Per-dimension boundary ranks and mod 2 Betti numbers."""

    ranks: tuple[int, ...]   # ranks[d] = rank of boundary C_d -> C_{d-1}
    betti: tuple[int, ...]


def betti_mod2(k: SimplicialComplex) -> HomologySummary:
    """Exact mod 2 Betti numbers by GF(2) elimination."""
    top = k.dim
    ranks = [0] * (top + 2)
    for d in range(1, top + 1):
        ranks[d] = _boundary_system(k, d)[0].rank
    betti = tuple(
        k.n_simplices(d) - ranks[d] - ranks[d + 1] for d in range(top + 1)
    )
    return HomologySummary(tuple(ranks[: top + 1]), betti)


def is_boundary(
    k: SimplicialComplex, c: Mod2Chain
) -> tuple[bool, Optional[Mod2Chain]]:
    """Decide solvability of (boundary x = c); witness under canonical pivots."""
    _check_chain(k, c)
    if not is_cycle(k, c):
        raise HomologyError("is_boundary requires a cycle")
    if not c:
        return True, zero_chain(c.dim + 1)
    system, rows, cols = _boundary_system(k, c.dim + 1)
    b = 0
    for s in c.support:
        b ^= 1 << rows[s]
    combo = system.solve(b)
    if combo is None:
        return False, None
    witness = frozenset(cols[j] for j in range(len(cols)) if combo >> j & 1)
    return True, Mod2Chain(c.dim + 1, witness)


def homologous(k: SimplicialComplex, c1: Mod2Chain, c2: Mod2Chain) -> bool:
    if c1.dim != c2.dim:
        raise HomologyError("chains of different dimensions are never homologous")
    for c in (c1, c2):
        if not is_cycle(k, c):
            raise HomologyError("homologous requires cycles")
    return is_boundary(k, c1 + c2)[0]


def chain_pushforward(f: SimplicialMap, c: Mod2Chain) -> Mod2Chain:
    """Images f(S) summed mod 2, dropping dimension-collapsing simplices."""
    _check_chain(f.domain, c)
    out: set[Simplex] = set()
    for s in c.support:
        img = f.image(s)
        if len(img) == len(s):
            out.symmetric_difference_update({img})
    return Mod2Chain(c.dim, frozenset(out))


def fundamental_cycle(k: SimplicialComplex) -> Mod2Chain:
    """Sum of all top simplices of a pure-dimensional complex, when a cycle."""
    d = k.dim
    if d < 0:
        raise HomologyError("empty complex has no fundamental cycle")
    tops = set(k.by_dim[d])
    for s in k.simplices:
        if not any(set(s) <= set(t) for t in k.cofaces[s] if len(t) - 1 == d):
            raise HomologyError(
                f"complex is not pure-dimensional: {list(s)} has no top coface"
            )
    c = Mod2Chain(d, frozenset(tops))
    if not is_cycle(k, c):
        raise HomologyError("top-dimensional chain is not a cycle mod 2")
    return c
