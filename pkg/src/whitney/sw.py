"""Stiefel chains and Stiefel-Whitney class representatives.

The canonical representative of the i-th class of an Euler function is
the Euler-singularity chain of the moment map on the barycentric
subdivision; for the constant function 1 it coincides, simplex by
simplex, with the sum of all i-simplices of the subdivision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .calculus import (
    ConstructibleFunction,
    chi,
    is_euler_function,
    pushforward,
    reduce_mod2,
    subdivide_function,
)
from .errors import HomologyError, NotEulerError
from .homology import Mod2Chain, chain_pushforward, homologous
from .polar import euler_singularity_chain, moment_map
from .simplicial import (
    Simplex,
    SimplicialMap,
    Subdivision,
    barycentric_subdivision,
    induced_subdivided_map,
)


def stiefel_chain(sub: Subdivision, i: int) -> Mod2Chain:
    """Sum of all i-simplices of the barycentric subdivision."""
    if not 0 <= i <= sub.base.dim:
        raise HomologyError(f"i={i} out of range for a {sub.base.dim}-complex")
    return Mod2Chain(i, frozenset(sub.complex.by_dim.get(i, ())))


def sw_representative(sub: Subdivision, a: ConstructibleFunction, i: int) -> Mod2Chain:
    """Canonical chain representative of the i-th class of an Euler function.

    Computed as the singularity chain of the moment map on the
    subdivision, with the function carried over by carriers.  Linear in
    the function, and equal to the Stiefel chain when the function is
    identically 1.
    """
    a2 = reduce_mod2(a)
    if not is_euler_function(a2):
        raise NotEulerError("Stiefel-Whitney representatives require an Euler function")
    if not 0 <= i <= sub.base.dim:
        raise HomologyError(f"i={i} out of range for a {sub.base.dim}-complex")
    ap = subdivide_function(sub, a2)
    return euler_singularity_chain(moment_map(sub, i), ap, i)


def subdivision_chain_map(sub: Subdivision, c: Mod2Chain) -> Mod2Chain:
    """Each i-simplex to the sum of the i-simplices of the subdivision inside it.

    Those are the flags using one face of every dimension 0..i, so this is
    a chain map.
    """
    from .simplicial import barycenter_name, faces

    support: set[Simplex] = set()
    for s in c.support:
        sub.base.require(s)
        # flags of faces of s hitting each dimension 0..dim(s)
        by_d: dict[int, list[Simplex]] = {}
        for f in faces(s):
            by_d.setdefault(len(f) - 1, []).append(f)
        stack: list[tuple[Simplex, ...]] = [(f,) for f in by_d[0]]
        for d in range(1, len(s)):
            stack = [
                fl + (g,)
                for fl in stack
                for g in by_d[d]
                if set(fl[-1]) < set(g)
            ]
        for fl in stack:
            support.symmetric_difference_update(
                {tuple(sorted(barycenter_name(t) for t in fl))}
            )
    return Mod2Chain(c.dim, frozenset(support))


@dataclass(frozen=True)
class W0Report:
    degree: int      # sum of coefficients of the 0-dimensional representative, mod 2
    chi_mod2: int    # Euler integral of the function, mod 2


def w0_degree(sub: Subdivision, a: ConstructibleFunction) -> W0Report:
    """Augmentation of the 0-th class, reported next to chi mod 2."""
    rep = sw_representative(sub, a, 0)
    return W0Report(len(rep.support) % 2, chi(reduce_mod2(a)) % 2)


def verify_pushforward_axiom(
    f: SimplicialMap,
    a: ConstructibleFunction,
    i: int,
    sub_dom: Optional[Subdivision] = None,
    sub_cod: Optional[Subdivision] = None,
) -> bool:
    """Pushforward compatibility of class representatives, decided up to boundaries."""
    a2 = reduce_mod2(a)
    if not is_euler_function(a2):
        raise NotEulerError("pushforward axiom is about Euler functions")
    fa = pushforward(f, a2)
    if not is_euler_function(fa):
        raise NotEulerError("pushforward of the function is not Euler")
    sub_dom = sub_dom or barycentric_subdivision(f.domain)
    sub_cod = sub_cod or barycentric_subdivision(f.codomain)
    fp = induced_subdivided_map(f, sub_dom, sub_cod)
    lhs = chain_pushforward(fp, sw_representative(sub_dom, a2, i))
    if i <= f.codomain.dim:
        rhs = sw_representative(sub_cod, fa, i)
    else:
        rhs = Mod2Chain(i, frozenset())
    return homologous(sub_cod.complex, lhs, rhs)
