"""Enumeration of normalized relative ideals and the rootset search.

The rootset of H collects the translation classes of ideals L whose n-fold
sumset is isomorphic to the canonical ideal K.  Every class has a unique
normalized representative with least element 0, i.e. a union of H with a
subset of its gaps that stays closed under adding generators, so the search
space is a pruned DFS over gap subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import LimitExceeded, SearchBudgetExceeded
from .relideal import (RelativeIdeal, _normalize, canonical_ideal,
                       module_generators)
from .semigroup import NumericalSemigroup

DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_NMAX = 4


def enumerate_ideals(H: NumericalSemigroup,
                     limit: int | None = None) -> Iterator[RelativeIdeal]:
    """Every normalized relative ideal (least element 0), each exactly once.

    Gaps are decided largest-first with the exclude branch explored first,
    so ideals stream in increasing order of their membership bit-vector; the
    first one is always H itself.  With `limit` set, raises LimitExceeded as
    soon as more than `limit` ideals exist.
    """
    count = 0
    for I in _dfs_ideals(H):
        if limit is not None and count >= limit:
            raise LimitExceeded(
                f"more than {limit} normalized ideals over {H}")
        count += 1
        yield I


def _dfs_ideals(H: NumericalSemigroup) -> Iterator[RelativeIdeal]:
    gaps = sorted(H.gaps, reverse=True)
    gens = H.gens
    conductor = H.conductor

    def member(bits: int, z: int) -> bool:
        return z >= conductor or bool(bits >> z & 1)

    def rec(i: int, bits: int) -> Iterator[RelativeIdeal]:
        if i == len(gaps):
            yield _normalize(H, 0, conductor, bits)
            return
        yield from rec(i + 1, bits)
        g = gaps[i]
        # adding gap g is allowed only if g + a is already present; larger
        # sums were all decided earlier, so closure checking is incremental
        if all(member(bits, g + a) for a in gens):
            yield from rec(i + 1, bits | 1 << g)

    yield from rec(0, H.bits)


def nfold(I: RelativeIdeal, n: int) -> RelativeIdeal:
    """The n-fold sumset I + ... + I, the value set of the ideal power."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    acc = I
    for _ in range(n - 1):
        acc = acc.add(I)
    return acc


@dataclass(frozen=True)
class RootClass:
    """One translation class L in the rootset, with its least exponent.

    `irreducible` flags the principal class (one module generator): the only
    one whose ideal representatives are irreducible, since the socle of the
    quotient by the canonical dual of L has dimension nu(L).
    """
    representative: RelativeIdeal
    n: int
    irreducible: bool

    def to_dict(self) -> dict:
        return {"ideal": self.representative.to_dict(), "n": self.n,
                "irreducible": self.irreducible}


def rootset(H: NumericalSemigroup, nmax: int = DEFAULT_NMAX, *,
            node_budget: int = DEFAULT_NODE_BUDGET) -> list[RootClass]:
    """All classes L with some n-fold sumset (n <= nmax) isomorphic to K.

    Classes are listed by increasing representative bit-vector.  Work is
    metered: each enumerated ideal and each sumset costs one node against
    `node_budget`.
    """
    if nmax < 1:
        raise ValueError(f"nmax must be positive, got {nmax}")
    K = canonical_ideal(H)
    found = []
    nodes = 0
    for L in _dfs_ideals(H):
        nodes += 1
        power = L
        for n in range(1, nmax + 1):
            if n > 1:
                power = power.add(L)
                nodes += 1
            if power.iso_equal(K):
                found.append(RootClass(L, n, module_generators(L) == 1))
                break
        if nodes > node_budget:
            raise SearchBudgetExceeded(
                f"rootset search over {H} exceeded {node_budget} nodes")
    found.sort(key=lambda rc: (rc.representative.conductor,
                               rc.representative.bits))
    return found
