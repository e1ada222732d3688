"""Exact arithmetic of relative (fractional monomial) ideals as value sets.

A relative ideal of a numerical semigroup H is a nonempty set I of integers,
bounded below, with I + H contained in I.  It models a fractional monomial
ideal of the semigroup ring; lengths of quotients are plain set-difference
cardinalities because the ring is residually rational.

Normal form is the triple (lo, conductor, bits): lo = min(I), everything at
or beyond `conductor` belongs to I, and bit i of `bits` records membership
of lo + i on the window [lo, conductor).  For a ray [lo, inf) the window is
empty and bits = 0.  Structural equality of normal forms is set equality.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (AmbientMismatch, EmptyGenerators,
                     InternalInvariantViolation, NotContained, NotMPrimary)
from .semigroup import NumericalSemigroup, iter_bits, _mask


def _window_of(lo0: int, conductor: int, bits: int, lo: int, hi: int) -> int:
    """Membership bits of the normal form (lo0, conductor, bits) on [lo, hi)."""
    w = hi - lo
    if w <= 0:
        return 0
    m = _mask(w)
    off = lo0 - lo
    if off >= 0:
        part = (bits << off) & m
    else:
        part = (bits >> -off) & m
    t = conductor - lo
    if t < w:
        part |= m & ~_mask(max(t, 0))
    return part


class RelativeIdeal:
    """A fractional monomial ideal of H in normal form."""

    __slots__ = ("sg", "lo", "conductor", "bits")

    def __init__(self, sg: NumericalSemigroup, lo: int, conductor: int, bits: int):
        # trusts its arguments; use from_generators / the module constructors
        self.sg = sg
        self.lo = lo
        self.conductor = conductor
        self.bits = bits

    @classmethod
    def from_generators(cls, sg: NumericalSemigroup,
                        gens: Iterable[int]) -> "RelativeIdeal":
        """The ideal generated by `gens`: the union of the sets g + H."""
        gens = sorted({int(g) for g in gens})
        if not gens:
            raise EmptyGenerators("ideal generator list is empty")
        lo = gens[0]
        hi = lo + sg.conductor
        acc = 0
        for g in gens:
            acc |= _window_of(0, sg.conductor, sg.bits, lo - g, hi - g)
        return _normalize(sg, lo, hi, acc)

    # -- membership ------------------------------------------------------

    def contains(self, z: int) -> bool:
        if z < self.lo:
            return False
        if z >= self.conductor:
            return True
        return bool(self.bits >> (z - self.lo) & 1)

    __contains__ = contains

    def window(self, lo: int, hi: int) -> int:
        """Membership bits of this ideal on [lo, hi)."""
        return _window_of(self.lo, self.conductor, self.bits, lo, hi)

    def members_upto(self, hi: int) -> Iterator[int]:
        """Elements of the ideal below hi, ascending."""
        for z in iter_bits(self.bits, self.lo):
            if z >= hi:
                return
            yield z
        yield from range(self.conductor, hi)

    def elements(self) -> list[int]:
        """The finite part [lo, conductor) of the value set."""
        return list(iter_bits(self.bits, self.lo))

    # -- arithmetic ------------------------------------------------------

    def add(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Value-set sum {i + j}; the product of the monomial ideals."""
        _same_ambient(self, other)
        lo = self.lo + other.lo
        hi = min(self.conductor + other.lo, other.conductor + self.lo)
        acc = 0
        for j in other.members_upto(hi - self.lo):
            acc |= self.window(lo - j, hi - j)
        return _normalize(self.sg, lo, hi, acc)

    def colon(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """The colon ideal {z : z + other contained in self}."""
        _same_ambient(self, other)
        lo = self.lo - max(0, other.lo) - self.sg.conductor
        hi = self.conductor - other.lo
        acc = _mask(hi - lo)
        for j in other.members_upto(self.conductor - lo):
            acc &= self.window(lo + j, hi + j)
            if not acc:
                break
        return _normalize(self.sg, lo, hi, acc)

    def dual(self) -> "RelativeIdeal":
        """Hom into the ring: H - I."""
        return unit_ideal(self.sg).colon(self)

    def bidual(self) -> "RelativeIdeal":
        """H - (H - I); contains I, with equality measuring reflexivity."""
        return self.dual().dual()

    def trace(self) -> "RelativeIdeal":
        """The trace ideal I + (H - I)."""
        return self.add(self.dual())

    def translate(self, s: int) -> "RelativeIdeal":
        return RelativeIdeal(self.sg, self.lo + s, self.conductor + s, self.bits)

    # -- comparisons -----------------------------------------------------

    def contains_ideal(self, other: "RelativeIdeal") -> bool:
        """True iff other is a subset of self."""
        _same_ambient(self, other)
        lo = min(self.lo, other.lo)
        hi = max(self.conductor, other.conductor)
        return other.window(lo, hi) & ~self.window(lo, hi) == 0

    def iso_equal(self, other: "RelativeIdeal") -> bool:
        """Module isomorphism: equality up to translation of value sets."""
        _same_ambient(self, other)
        return (self.conductor - self.lo == other.conductor - other.lo
                and self.bits == other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (self.sg == other.sg and self.lo == other.lo
                and self.conductor == other.conductor and self.bits == other.bits)

    def __hash__(self) -> int:
        return hash((self.lo, self.conductor, self.bits))

    def to_dict(self) -> dict:
        return {"min": self.lo, "conductor": self.conductor,
                "elements": self.elements()}

    def __repr__(self) -> str:
        return (f"RelativeIdeal(min={self.lo}, conductor={self.conductor}, "
                f"elements={self.elements()})")


def _same_ambient(a: RelativeIdeal, b: RelativeIdeal) -> None:
    if a.sg != b.sg:
        raise AmbientMismatch(
            f"ideals live over different semigroups {a.sg} and {b.sg}")


def _normalize(sg: NumericalSemigroup, lo: int, hi: int, bits: int) -> RelativeIdeal:
    """Normal form from window bits on [lo, hi) plus the ray [hi, inf)."""
    if bits == 0:
        return RelativeIdeal(sg, hi, hi, 0)
    drop = (bits & -bits).bit_length() - 1
    lo += drop
    bits >>= drop
    inv = ~bits & _mask(hi - lo)
    if inv == 0:
        return RelativeIdeal(sg, lo, lo, 0)
    width = inv.bit_length()  # one past the highest non-member
    return RelativeIdeal(sg, lo, lo + width, bits & _mask(width))


# -- distinguished ideals -------------------------------------------------

def unit_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """H itself as a relative ideal."""
    return RelativeIdeal(H, 0, H.conductor, H.bits)


def maximal_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """The maximal ideal: H without 0."""
    if H.conductor == 0:
        return RelativeIdeal(H, 1, 1, 0)
    e0 = H.multiplicity
    return _normalize(H, e0, H.conductor, (H.bits & ~1) >> e0)


def canonical_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """The canonical ideal K = {z : F - z not in H}; K = H iff H symmetric."""
    f = H.frobenius
    bits = 0
    for g in H.gaps:
        bits |= 1 << (f - g)
    return _normalize(H, 0, H.conductor, bits)


def rebase(I: RelativeIdeal, sg: NumericalSemigroup) -> RelativeIdeal:
    """Reinterpret the same value set over a larger ambient semigroup."""
    for g in sg.gens:
        if I.bits & ~I.window(I.lo + g, I.conductor + g):
            raise InternalInvariantViolation(
                f"value set is not closed under adding {g}; not an ideal over {sg}")
    return RelativeIdeal(sg, I.lo, I.conductor, I.bits)


# -- lengths and recognition ----------------------------------------------

def length_between(I: RelativeIdeal, J: RelativeIdeal) -> int:
    """lambda(J/I) = |J \\ I| for I contained in J."""
    _same_ambient(I, J)
    lo = min(I.lo, J.lo)
    hi = max(I.conductor, J.conductor)
    bi = I.window(lo, hi)
    bj = J.window(lo, hi)
    if bi & ~bj:
        raise NotContained("length_between(I, J) needs I contained in J")
    return (bj & ~bi).bit_count()


def module_generators(I: RelativeIdeal) -> int:
    """Minimal number of generators: |I \\ (M + I)| with M the maximal ideal."""
    mi = maximal_ideal(I.sg).add(I)
    return length_between(mi, I)


def socle_dim(I: RelativeIdeal) -> int:
    """dim of the socle of R/I for an ideal I of the ring: |((I - M) & H) \\ I|."""
    H = I.sg
    if I.lo < 1 or not unit_ideal(H).contains_ideal(I):
        raise NotMPrimary(
            f"socle_dim needs a proper ideal of the ring, got min {I.lo}")
    q = I.colon(maximal_ideal(H))
    lo = min(q.lo, I.lo, 0)
    hi = max(q.conductor, I.conductor, H.conductor)
    hb = _window_of(0, H.conductor, H.bits, lo, hi)
    return (q.window(lo, hi) & hb & ~I.window(lo, hi)).bit_count()


def is_canonical(I: RelativeIdeal) -> bool:
    """Whether an m-primary ideal I is a canonical ideal.

    Tests the colon criterion (I - M) contained in H with |(I - M) \\ I| = 1
    and cross-checks it against translation-isomorphism with K; disagreement
    is an internal bug.
    """
    H = I.sg
    if I.lo < 1 or not unit_ideal(H).contains_ideal(I):
        raise NotMPrimary(
            f"is_canonical needs a proper ideal of the ring, got min {I.lo}")
    q = I.colon(maximal_ideal(H))
    by_colon = (unit_ideal(H).contains_ideal(q)
                and length_between(I, q) == 1)
    by_iso = I.iso_equal(canonical_ideal(H))
    if by_colon != by_iso:
        raise InternalInvariantViolation(
            f"canonical-ideal tests disagree over {H}: colon={by_colon}, "
            f"iso={by_iso} for {I!r}")
    return by_colon
