# app/algebra/hilbert.py

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from app.algebra.monomials import Exponents, MonomialIdeal, minimal_generators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in t; coeffs[i] is the coefficient of t^i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def one_minus_t_power(cls, e: int) -> "IntPolynomial":
        return cls(tuple((-1) ** i * comb(e, i) for i in range(e + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def shift(self, k: int) -> "IntPolynomial":
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def truncate(self, degree: int) -> "IntPolynomial":
        return IntPolynomial(self.coeffs[: degree + 1])

    def evaluate(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def divide_by_one_minus_t(self) -> "IntPolynomial":
        # exact only when evaluate(1) == 0; q(t)(1 - t) = p(t)
        if self.evaluate(1) != 0:
            raise ValueError("(1 - t) does not divide this polynomial")
        q = []
        running = 0
        for a in self.coeffs[:-1]:
            running += a
            q.append(running)
        return IntPolynomial(tuple(q))

    def root_one_multiplicity(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has every root")
        p, mult = self, 0
        while p.evaluate(1) == 0:
            p = p.divide_by_one_minus_t()
            mult += 1
        return mult

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            body = "" if (mag == 1 and i > 0) else str(mag)
            if i == 1:
                body += "t"
            elif i > 1:
                body += f"t^{i}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


# =====================================================
# PIVOT RECURSION
# =====================================================

def _pure_power_product(gens: tuple[Exponents, ...]) -> IntPolynomial:
    out = IntPolynomial((1,))
    for g in gens:
        out = out * (IntPolynomial((1,)) - IntPolynomial((1,)).shift(sum(g)))
    return out


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple[Exponents, ...]) -> IntPolynomial:
    if not gens:
        return IntPolynomial((1,))
    if len(gens) == 1:
        d = sum(gens[0])
        if d == 0:
            return IntPolynomial()
        return IntPolynomial((1,)) - IntPolynomial((1,)).shift(d)

    mixed = [g for g in gens if sum(1 for a in g if a) > 1]
    if not mixed:
        return _pure_power_product(gens)

    n = len(gens[0])
    counts = [sum(1 for g in mixed if g[j]) for j in range(n)]
    j = max(range(n), key=lambda i: (counts[i], -i))
    exps = sorted(g[j] for g in mixed if g[j])
    e = exps[(len(exps) - 1) // 2]

    pivot = tuple(e if i == j else 0 for i in range(n))
    colon = minimal_generators(
        tuple(max(a - e, 0) if i == j else a for i, a in enumerate(g)) for g in gens
    )
    widened = minimal_generators(gens + (pivot,))

    return _numerator(widened) + _numerator(colon).shift(e)


def hilbert_numerator(I: MonomialIdeal) -> IntPolynomial:
    """
    Numerator h(t) of HS(S/I) = h(t) / (1 - t)^n, by pivot splitting
    HS(S/I) = HS(S/(I + p)) + t^deg(p) HS(S/(I : p)).
    """
    result = _numerator(I.gens)
    logger.debug("hilbert numerator of %d generators: %s", len(I.gens), result)
    return result


def count_quotient(I: MonomialIdeal, d: int) -> int:
    """Number of degree-d monomials outside I."""
    if d < 0:
        return 0
    h = hilbert_numerator(I)
    n = I.nvars
    return sum(a * comb(d - i + n - 1, n - 1) for i, a in enumerate(h.coeffs) if i <= d)


def count_in_ideal(I: MonomialIdeal, d: int) -> int:
    if d < 0:
        return 0
    return comb(d + I.nvars - 1, I.nvars - 1) - count_quotient(I, d)


def krull_dim(I: MonomialIdeal) -> int:
    """dim(S/I); the zero ring (unit ideal) reports -1."""
    h = hilbert_numerator(I)
    if h.is_zero:
        return -1
    return I.nvars - h.root_one_multiplicity()
