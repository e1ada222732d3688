"""Numerical semigroups with cached elementary invariants.

A numerical semigroup H is a cofinite additive submonoid of the nonnegative
integers.  Membership on [0, conductor) is materialized as a dense
bit-vector stored in a single Python int (bit z set iff z in H), which makes
sieving, generator reduction and all downstream ideal arithmetic cheap
shift-and-mask work.  Instances are immutable after construction.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

from .errors import EmptyGenerators, NonCoprime, NotMember, SieveCapExceeded

DEFAULT_SIEVE_CAP = 1_000_000


def _mask(width: int) -> int:
    return (1 << width) - 1


def iter_bits(bits: int, base: int = 0) -> Iterator[int]:
    """Positions of the set bits of `bits`, ascending, offset by `base`."""
    while bits:
        low = bits & -bits
        yield base + low.bit_length() - 1
        bits ^= low


def close_under(gens: Iterable[int], width: int) -> int:
    """Membership bits of the monoid generated by `gens` on [0, width)."""
    m = _mask(width)
    bits = 1
    while True:
        prev = bits
        for g in gens:
            bits |= bits << g
        bits &= m
        if bits == prev:
            return bits


def _find_conductor(bits: int, e0: int, width: int) -> int | None:
    """Start of the first run of e0 consecutive members, or None.

    A run of multiplicity-many consecutive members certifies everything to
    its right, so its start is exactly the conductor (the run cannot be
    extended one step left, or it would not be the first).
    """
    run = bits
    for i in range(1, e0):
        run &= bits >> i
    run &= _mask(max(width - e0 + 1, 0))
    if run == 0:
        return None
    return (run & -run).bit_length() - 1


def parse_generators(text: str) -> list[int]:
    """Parse a comma-separated generator list such as "5,7,9"."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise EmptyGenerators(f"no generators in {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad generator list {text!r}: {exc}") from None


class NumericalSemigroup:
    """H = <gens>, reduced to its canonical minimal generating system."""

    __slots__ = ("gens", "bits", "conductor", "frobenius", "multiplicity",
                 "genus", "gaps", "pf", "type")

    def __init__(self, gens: Iterable[int], *, cap: int = DEFAULT_SIEVE_CAP):
        gens = sorted({int(g) for g in gens})
        if not gens:
            raise EmptyGenerators("generator list is empty")
        if gens[0] <= 0:
            raise EmptyGenerators(f"generators must be positive, got {gens[0]}")
        g = 0
        for a in gens:
            g = math.gcd(g, a)
        if g != 1:
            raise NonCoprime(f"gcd of generators {gens} is {g}, not 1")
        bits, conductor = _sieve(gens, cap)
        self._fill(bits, conductor)
        # the minimal system is always a subset of any generating set
        self.gens = tuple(a for a in gens if not self._is_sum_of_two(a))
        self._fill_pf()

    @classmethod
    def _from_membership(cls, bits: int, width: int,
                         gens: tuple[int, ...] | None = None) -> "NumericalSemigroup":
        """Trusted constructor from membership bits on [0, width).

        Everything at or beyond `width` must belong to the semigroup and the
        bit-vector must already be closed under addition.
        """
        inv = ~bits & _mask(width)
        conductor = inv.bit_length()  # one past the largest gap
        self = cls.__new__(cls)
        self._fill(bits & _mask(conductor), conductor)
        self.gens = gens if gens is not None else self._scan_generators()
        self._fill_pf()
        return self

    def _fill(self, bits: int, conductor: int) -> None:
        self.bits = bits
        self.conductor = conductor
        self.frobenius = conductor - 1
        self.genus = conductor - bits.bit_count()
        self.gaps = tuple(iter_bits(~bits & _mask(conductor)))
        nonzero = bits & ~1
        if nonzero:
            self.multiplicity = (nonzero & -nonzero).bit_length() - 1
        else:
            self.multiplicity = conductor if conductor > 0 else 1

    def _fill_pf(self) -> None:
        gens = self.gens
        self.pf = tuple(z for z in self.gaps
                        if all(self.contains(z + a) for a in gens))
        self.type = len(self.pf) if self.pf else 1

    def _is_sum_of_two(self, a: int) -> bool:
        """True iff a = x + y with x, y nonzero members."""
        for m in iter_bits(self.bits & ~1 & _mask(a // 2 + 1)):
            if self.contains(a - m):
                return True
        # members at or beyond the stored window
        return a - self.multiplicity >= self.conductor and a > self.multiplicity

    def _scan_generators(self) -> tuple[int, ...]:
        """Minimal system from scratch: members not in (H\\{0}) + (H\\{0})."""
        e0 = self.multiplicity
        bound = self.conductor + e0 + 1  # all larger members are e0 + member
        w = _mask(bound)
        ext = (self.bits | (w & ~_mask(self.conductor))) & ~1
        sums = 0
        for m in iter_bits(ext & _mask(bound - e0 + 1)):
            sums |= ext << m
        return tuple(iter_bits(ext & ~sums & w))

    # -- queries ---------------------------------------------------------

    def contains(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= self.conductor:
            return True
        return bool(self.bits >> z & 1)

    __contains__ = contains

    def members_upto(self, hi: int) -> Iterator[int]:
        """Members of H in [0, hi), ascending."""
        for z in iter_bits(self.bits):
            if z >= hi:
                return
            yield z
        yield from range(self.conductor, hi)

    def apery(self, a: int) -> list[int]:
        """Least member in each residue class mod a, listed by residue."""
        if a <= 0 or not self.contains(a):
            raise NotMember(f"{a} is not a nonzero element of the semigroup")
        out = []
        for r in range(a):
            z = r
            while not self.contains(z):
                z += a
            out.append(z)
        return out

    def is_symmetric(self) -> bool:
        """Symmetric iff z in H <=> F - z not in H, iff genus = conductor/2."""
        return 2 * self.genus == self.conductor

    # -- plumbing --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "gens": list(self.gens),
            "frobenius": self.frobenius,
            "conductor": self.conductor,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "type": self.type,
            "pf": list(self.pf),
            "symmetric": self.is_symmetric(),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.conductor, self.bits))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.gens)})"

    def __str__(self) -> str:
        return "<" + ",".join(str(g) for g in self.gens) + ">"


def _sieve(gens: list[int], cap: int) -> tuple[int, int]:
    """Membership bits and conductor of <gens>, scanning until the first
    run of multiplicity-many consecutive members (cap-guarded)."""
    e0 = gens[0]
    width = max(4 * gens[-1], 64)
    while True:
        bits = close_under(gens, width)
        c = _find_conductor(bits, e0, width)
        if c is not None:
            return bits & _mask(c), c
        if width >= cap:
            raise SieveCapExceeded(
                f"no conductor found for {gens} scanning [0, {width}); "
                f"cap is {cap}")
        width = min(2 * width, cap + 2 * e0)
