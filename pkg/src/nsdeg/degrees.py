"""Canonical degrees cdeg, bideg, tdeg and the classification flags.

All three degrees are computed from one concrete canonical ideal C = s + K
embedded in H with the least possible shift s.  The multiplicity of C is its
least valuation s (a generic element of least valuation generates a minimal
reduction), so

    cdeg = s - lambda(H/C),   bideg = lambda(C**/C),
    tdeg = lambda(H / (C + (H - C))).

Every value is independent of the embedding shift; the test suite checks
this on translated copies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .relideal import (RelativeIdeal, canonical_ideal, length_between,
                       unit_ideal)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class DegreeReport:
    gens: tuple[int, ...]
    type: int
    multiplicity: int
    genus: int
    frobenius: int
    shift: int
    cdeg: int
    bideg: int
    tdeg: int
    gorenstein: bool
    almost_gorenstein: bool
    nearly_gorenstein: bool
    goto: bool

    def to_dict(self) -> dict:
        return {
            "gens": list(self.gens),
            "type": self.type,
            "multiplicity": self.multiplicity,
            "genus": self.genus,
            "frobenius": self.frobenius,
            "shift": self.shift,
            "cdeg": self.cdeg,
            "bideg": self.bideg,
            "tdeg": self.tdeg,
            "gorenstein": self.gorenstein,
            "almost_gorenstein": self.almost_gorenstein,
            "nearly_gorenstein": self.nearly_gorenstein,
            "goto": self.goto,
        }


def canonical_shift(H: NumericalSemigroup) -> int:
    """Least s with s + K contained in H; at most the conductor."""
    K = canonical_ideal(H)
    kb = K.bits
    width = H.conductor - K.lo  # = conductor; K.lo is 0
    for s in H.members_upto(H.conductor + 1):
        if kb & ~_sg_window(H, s, s + width) == 0:
            return s
    raise AssertionError("unreachable: the conductor shift always embeds K")


def _sg_window(H: NumericalSemigroup, lo: int, hi: int) -> int:
    return unit_ideal(H).window(lo, hi)


def embed_canonical(H: NumericalSemigroup) -> RelativeIdeal:
    """The distinguished canonical ideal C = s + K inside H."""
    return canonical_ideal(H).translate(canonical_shift(H))


def degrees_from_canonical(H: NumericalSemigroup,
                           C: RelativeIdeal) -> tuple[int, int, int]:
    """(cdeg, bideg, tdeg) computed from an arbitrary embedded copy of K."""
    unit = unit_ideal(H)
    cstar = C.dual()
    cd = C.lo - length_between(C, unit)
    bd = length_between(C, cstar.dual())
    td = length_between(C.add(cstar), unit)
    return cd, bd, td


def cdeg(H: NumericalSemigroup) -> int:
    """Canonical degree e0(C) - lambda(H/C); zero iff H is symmetric."""
    C = embed_canonical(H)
    return C.lo - length_between(C, unit_ideal(H))


def bideg(H: NumericalSemigroup) -> int:
    """Bi-canonical degree lambda(C**/C)."""
    C = embed_canonical(H)
    return length_between(C, C.bidual())


def tdeg(H: NumericalSemigroup) -> int:
    """Trace degree lambda(H / trace(C))."""
    C = embed_canonical(H)
    return length_between(C.trace(), unit_ideal(H))


def classify(H: NumericalSemigroup) -> DegreeReport:
    """Full degree report with the classification flags."""
    s = canonical_shift(H)
    C = canonical_ideal(H).translate(s)
    cd, bd, td = degrees_from_canonical(H, C)
    r = H.type
    return DegreeReport(
        gens=H.gens,
        type=r,
        multiplicity=H.multiplicity,
        genus=H.genus,
        frobenius=H.frobenius,
        shift=s,
        cdeg=cd,
        bideg=bd,
        tdeg=td,
        gorenstein=H.is_symmetric(),
        almost_gorenstein=cd == r - 1,
        nearly_gorenstein=td == 1,
        goto=bd == 1,
    )
