# app/analysis/summand.py

"""
Structural tests on the generators u_1..u_r of a monomial ideal: is
A = K[u_1..u_r] an algebra retract of S, and is it a direct summand.

A retract needs each u_i = x_l * v_i where x_l occurs in no other generator and
v_i avoids every such chosen variable. A column qualifying for generator i
vanishes on all other rows, so the candidate sets of distinct generators are
disjoint and picking the smallest index per generator is enough.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from app.algebra.monomials import Exponents, MonomialIdeal
from app.algebra.semigroup import SummandVerdict, monoid_of, summand_check
from app.config import ResourceLimits
from app.errors import InvariantViolation, ResourceLimitExceeded, UnitIdealError, ZeroIdealError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RetractCertificate:
    generators: tuple[Exponents, ...]
    # 1-based; private_variables[i] is the variable x_l with u_i = x_l * v_i
    private_variables: tuple[int, ...]

    @property
    def U(self) -> tuple[int, ...]:
        """The chosen variables as a sorted set, detached from generator order."""
        return tuple(sorted(self.private_variables))

    def verify(self) -> bool:
        chosen = [j - 1 for j in self.private_variables]
        if len(set(chosen)) != len(chosen):
            return False
        for i, g in enumerate(self.generators):
            for k, col in enumerate(chosen):
                if g[col] != (1 if k == i else 0):
                    return False
        return True


def _check_proper(I: MonomialIdeal):
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no generators to test")
    if I.is_unit:
        raise UnitIdealError("the unit ideal is not proper")


def retract_check(I: MonomialIdeal) -> Optional[RetractCertificate]:
    _check_proper(I)
    gens = I.gens
    chosen = []
    for i, g in enumerate(gens):
        private = [
            j for j, a in enumerate(g)
            if a == 1 and all(h[j] == 0 for k, h in enumerate(gens) if k != i)
        ]
        if not private:
            logger.debug("generator %d has no private unit variable", i + 1)
            return None
        chosen.append(private[0] + 1)

    cert = RetractCertificate(gens, tuple(chosen))
    if len(set(chosen)) != len(chosen) or not cert.verify():
        raise InvariantViolation(f"retract certificate {chosen} fails its own check")
    return cert


def retraction_map(I: MonomialIdeal, cert: RetractCertificate) -> dict[int, Exponents]:
    """x_l ↦ u_i for l = l_i in U, x_j ↦ 1 otherwise (keys are 1-based variables)."""
    n = I.nvars
    images = {j: (0,) * n for j in range(1, n + 1)}
    for g, j in zip(cert.generators, cert.private_variables):
        images[j] = g
    return images


def apply_map(images: dict[int, Exponents], u: Exponents) -> Exponents:
    out = [0] * len(u)
    for j, e in enumerate(u, start=1):
        if e:
            for k, a in enumerate(images[j]):
                out[k] += e * a
    return tuple(out)


def check_retraction(I: MonomialIdeal, cert: RetractCertificate) -> bool:
    """The map fixes every generator, so it restricts to the identity on A."""
    images = retraction_map(I, cert)
    return all(apply_map(images, g) == g for g in cert.generators)


def is_summand(I: MonomialIdeal, limits: Optional[ResourceLimits] = None) -> SummandVerdict:
    _check_proper(I)
    cert = retract_check(I)
    if cert is not None:
        return SummandVerdict(True, method="retract", reason=f"U = {list(cert.U)}")
    try:
        verdict = summand_check(monoid_of(I), limits)
    except ResourceLimitExceeded as exc:
        logger.warning("summand check stopped: %s", exc)
        return SummandVerdict(None, method="hilbert-basis", reason=str(exc))
    return verdict
