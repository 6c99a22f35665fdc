# app/analysis/rees.py

"""
The Rees algebra R(I) = ⊕ I^k t^k of a monomial ideal, seen as the affine
semigroup generated by e_1..e_n and (a_j, 1) in Z^(n+1).

For the h-vector every algebra generator (the variables and the u_j t) sits in
degree 1, which needs I equigenerated of some degree δ. Then x^a t^k has degree
k + |a| - δk, and
    HF(d) = sum_{k=0..d} #{monomials of degree d + (δ-1)k in I^k}.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from app.algebra.hilbert import IntPolynomial, count_in_ideal
from app.algebra.lattice import AffineMonoid
from app.algebra.monomials import Exponents, MonomialIdeal, power, unit_vector
from app.algebra.semigroup import NormalityVerdict, algebra_dim, monoid_of, normality_check
from app.config import ResourceLimits, default_limits
from app.errors import (
    InvalidInputError,
    InvariantViolation,
    NotEquigeneratedError,
    ResourceLimitExceeded,
    UnitIdealError,
    ZeroIdealError,
)

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 4

CERTIFIED_CM = "CertifiedCM"
CERTIFIED_NOT_CM = "CertifiedNotCM"
INCONCLUSIVE = "Inconclusive"


def default_degree_bound(nvars: int) -> int:
    return max(4 * (nvars + 1), 20)


@dataclass(frozen=True)
class ReesSemigroup:
    nvars: int
    generators: tuple[Exponents, ...]
    delta: Optional[int]

    @property
    def ambient_dim(self) -> int:
        return self.nvars + 1

    def monoid(self) -> AffineMonoid:
        return AffineMonoid.from_vectors(self.generators, self.ambient_dim)


@dataclass(frozen=True)
class HVectorReport:
    coefficients: IntPolynomial
    degree_bound: int
    window: int
    stable: bool
    hilbert_function: tuple[int, ...] = ()

    @property
    def negative_index(self) -> Optional[int]:
        return next((i for i, a in enumerate(self.coefficients.coeffs) if a < 0), None)


@dataclass(frozen=True)
class CmStatus:
    kind: str
    normality: Optional[NormalityVerdict] = None
    negative_index: Optional[int] = None
    reason: Optional[str] = None
    hvector: Optional[HVectorReport] = field(default=None, compare=False)

    @property
    def certified_cm(self) -> bool:
        return self.kind == CERTIFIED_CM


def _check_proper(I: MonomialIdeal):
    if I.is_zero:
        raise ZeroIdealError("the Rees algebra of the zero ideal is S itself")
    if I.is_unit:
        raise UnitIdealError("the unit ideal is not proper")


def _delta(I: MonomialIdeal) -> int:
    if not I.is_equigenerated:
        raise NotEquigeneratedError(
            f"generators have degrees {sorted(set(I.degrees))}; the standard grading needs one degree"
        )
    return I.degrees[0]


def _rees_generators(I: MonomialIdeal) -> tuple[Exponents, ...]:
    n = I.nvars
    variables = [unit_vector(n + 1, j) for j in range(n)]
    return tuple(variables + [g + (1,) for g in I.gens])


def rees_semigroup(I: MonomialIdeal) -> ReesSemigroup:
    _check_proper(I)
    return ReesSemigroup(I.nvars, _rees_generators(I), _delta(I))


def rees_hilbert_function(I: MonomialIdeal, d: int) -> int:
    _check_proper(I)
    delta = _delta(I)
    if d < 0:
        raise InvalidInputError("degree must be nonnegative")
    return sum(count_in_ideal(power(I, k), d + (delta - 1) * k) for k in range(d + 1))


def rees_hvector(
    I: MonomialIdeal, degree_bound: Optional[int] = None, window: int = DEFAULT_WINDOW
) -> HVectorReport:
    """
    Coefficients of (sum_{d<=D} HF(d) t^d) (1-t)^(n+1), cut at D. The report is
    stable when the last `window` of them vanish; that is a confidence statement
    about D, not a proof.
    """
    _check_proper(I)
    _delta(I)
    D = degree_bound if degree_bound is not None else default_degree_bound(I.nvars)
    if not D >= window >= 1:
        raise InvalidInputError(f"need degree bound >= window >= 1, got D={D}, w={window}")

    values = tuple(rees_hilbert_function(I, d) for d in range(D + 1))
    series = IntPolynomial.from_coeffs(values)
    h_full = (series * IntPolynomial.one_minus_t_power(I.nvars + 1)).truncate(D)
    stable = all(h_full.coefficient(i) == 0 for i in range(D - window + 1, D + 1))
    logger.debug("rees h-vector up to %d: %s (stable=%s)", D, h_full.coeffs, stable)
    return HVectorReport(h_full, D, window, stable, values)


def rees_normality(I: MonomialIdeal, limits: Optional[ResourceLimits] = None) -> NormalityVerdict:
    _check_proper(I)
    M = AffineMonoid.from_vectors(_rees_generators(I), I.nvars + 1)
    return normality_check(M, limits)


def rees_cm_status(
    I: MonomialIdeal,
    degree_bound: Optional[int] = None,
    window: int = DEFAULT_WINDOW,
    limits: Optional[ResourceLimits] = None,
) -> CmStatus:
    """
    Normal semigroup rings are Cohen-Macaulay, so normality certifies CM. A
    negative coefficient of a stable h-vector refutes it. Anything else stays
    inconclusive.
    """
    _check_proper(I)
    limits = limits or default_limits()
    reasons = []

    normality = None
    try:
        normality = rees_normality(I, limits)
    except ResourceLimitExceeded as exc:
        logger.warning("rees normality stopped: %s", exc)
        reasons.append(f"normality: {exc}")

    hvector = None
    if I.is_equigenerated:
        hvector = rees_hvector(I, degree_bound, window)
    else:
        reasons.append("mixed generator degrees: no h-vector in the standard grading")

    if normality is not None and normality.holds:
        if hvector is not None and hvector.stable and hvector.negative_index is not None:
            raise InvariantViolation(
                f"normal Rees algebra with negative h-coefficient at index {hvector.negative_index}"
            )
        return CmStatus(CERTIFIED_CM, normality=normality, hvector=hvector)

    if hvector is not None:
        if hvector.stable and hvector.negative_index is not None:
            return CmStatus(
                CERTIFIED_NOT_CM,
                normality=normality,
                negative_index=hvector.negative_index,
                hvector=hvector,
            )
        if not hvector.stable:
            reasons.append(f"h-vector not stable at D={hvector.degree_bound}, w={hvector.window}")
        else:
            reasons.append("not normal, h-vector nonnegative")

    return CmStatus(INCONCLUSIVE, normality=normality, reason="; ".join(reasons), hvector=hvector)


def analytic_spread(I: MonomialIdeal) -> int:
    """For equigenerated monomial ideals the fiber cone is K[u_1..u_r]."""
    _check_proper(I)
    _delta(I)
    return algebra_dim(monoid_of(I))


@dataclass(frozen=True)
class FiberDimension:
    algebra_dim: int
    analytic_spread: Optional[int]
    holds: Optional[bool]


def fiber_dimension_check(I: MonomialIdeal) -> FiberDimension:
    """dim A >= dim F(I), with equality for equigenerated ideals."""
    _check_proper(I)
    dim_a = algebra_dim(monoid_of(I))
    if not I.is_equigenerated:
        return FiberDimension(dim_a, None, None)
    spread = analytic_spread(I)
    return FiberDimension(dim_a, spread, dim_a >= spread)
