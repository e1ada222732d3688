"""Exact calculator for the canonical degrees of numerical semigroup rings.

Core objects: NumericalSemigroup (the value semigroup H) and RelativeIdeal
(fractional monomial ideals as value sets).  On top of them: the degrees
cdeg/bideg/tdeg with classification flags, the m:m construction, Herzog
matrix exponents, the rootset search, and an exhaustive survey harness.
"""

from .degrees import (DegreeReport, bideg, canonical_shift, cdeg, classify,
                      degrees_from_canonical, embed_canonical, tdeg)
from .derived import (FormulaInputs, HerzogData, augmented_bideg,
                      herzog_all_orderings, herzog_exponents, herzog_report,
                      herzog_sweep, iter_three_generated, mm_as_ideal,
                      mm_canonical_check, mm_module_generators, mm_report,
                      mm_ring, product_degrees, semilocal_cdeg, tcdeg_formula)
from .errors import (AmbientMismatch, BudgetExceeded, EmptyGenerators,
                     GorensteinInput, InternalInvariantViolation, IsDVR,
                     LimitExceeded, NonCoprime, NotContained, NotMember,
                     NotMPrimary, NotThreeGenerated, NsdegError,
                     SearchBudgetExceeded, SieveCapExceeded,
                     SymmetricSemigroup)
from .relideal import (RelativeIdeal, canonical_ideal, is_canonical,
                       length_between, maximal_ideal, module_generators,
                       rebase, socle_dim, unit_ideal)
from .roots import RootClass, enumerate_ideals, nfold, rootset
from .semigroup import NumericalSemigroup, parse_generators
from .survey import (ALL_CHECKS, SurveyConfig, SurveyRecord, SurveySummary,
                     enumerate_by_genus, format_summary, genus_counts,
                     survey_run, tree_children, verify_record)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
