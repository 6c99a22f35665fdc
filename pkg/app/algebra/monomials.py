# app/algebra/monomials.py

"""
Monomials of S = K[x1..xn] as exponent tuples and monomial ideals as canonical
minimal generator lists.

Variables are 0-based inside exponent tuples; everything user-facing (symbolic
names, graph vertices, retract certificates) is 1-based like x1..xn.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Sequence

from sympy import isprime

from app.errors import ContextMismatchError, InvalidInputError

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Field:
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise InvalidInputError(f"field characteristic {self.characteristic} is not prime")

    @classmethod
    def parse(cls, spec: str) -> "Field":
        spec = (spec or "rational").strip().lower()
        if spec in ("rational", "rationals", "q", "qq"):
            return cls(0)
        if spec.startswith("fp:"):
            try:
                return cls(int(spec[3:]))
            except ValueError:
                raise InvalidInputError(f"bad prime in field spec '{spec}'")
        raise InvalidInputError(f"unknown field spec '{spec}' (use rational or fp:<p>)")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self) -> str:
        return "rational" if self.is_rational else f"fp:{self.characteristic}"


RATIONALS = Field(0)


@dataclass(frozen=True)
class PolyContext:
    nvars: int
    field: Field = RATIONALS

    def __post_init__(self):
        if self.nvars < 1:
            raise InvalidInputError("a polynomial ring needs at least one variable")

    def check(self, vector: Sequence[int]) -> Exponents:
        vec = tuple(int(a) for a in vector)
        if len(vec) != self.nvars:
            raise ContextMismatchError(
                f"exponent vector {vec} has length {len(vec)}, expected {self.nvars}"
            )
        if any(a < 0 for a in vec):
            raise InvalidInputError(f"negative exponent in {vec}")
        return vec


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Canonical form: generators pairwise non-divisible, in lex order with
    x1 > x2 > ... > xn, largest first.
    The zero ideal has no generators, the unit ideal is the single zero vector.
    Build instances through `minimalize` (or the ops below), not directly.
    """

    context: PolyContext
    gens: tuple[Exponents, ...]

    @property
    def nvars(self) -> int:
        return self.context.nvars

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(g) for g in self.gens)

    @property
    def is_equigenerated(self) -> bool:
        return len(set(self.degrees)) == 1

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.nvars) if any(g[j] for g in self.gens))

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


@dataclass(frozen=True)
class Graph:
    nvertices: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        seen = set()
        normalized = []
        for i, j in self.edges:
            if i == j:
                raise InvalidInputError(f"loop at vertex {i}")
            if not (1 <= i <= self.nvertices and 1 <= j <= self.nvertices):
                raise InvalidInputError(f"edge {i}-{j} outside 1..{self.nvertices}")
            e = (min(i, j), max(i, j))
            if e in seen:
                raise InvalidInputError(f"duplicate edge {e[0]}-{e[1]}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    def components(self) -> list[tuple[int, ...]]:
        parent = list(range(self.nvertices + 1))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for i, j in self.edges:
            parent[find(i)] = find(j)

        groups: dict[int, list[int]] = {}
        for v in range(1, self.nvertices + 1):
            groups.setdefault(find(v), []).append(v)
        return sorted(tuple(g) for g in groups.values())


# =====================================================
# MONOMIAL ARITHMETIC
# =====================================================

def divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def format_monomial(a: Exponents) -> str:
    parts = []
    for j, e in enumerate(a):
        if e == 1:
            parts.append(f"x{j + 1}")
        elif e > 1:
            parts.append(f"x{j + 1}^{e}")
    return "*".join(parts) if parts else "1"


def unit_vector(n: int, j: int) -> Exponents:
    return tuple(1 if i == j else 0 for i in range(n))


def minimal_generators(gens: Iterable[Exponents]) -> tuple[Exponents, ...]:
    kept: list[Exponents] = []
    for g in sorted(set(gens), key=lambda v: (sum(v), v)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, reverse=True))


# =====================================================
# IDEAL OPERATIONS
# =====================================================

def minimalize(gens: Iterable[Sequence[int]], ctx: PolyContext) -> MonomialIdeal:
    checked = [ctx.check(g) for g in gens]
    return MonomialIdeal(ctx, minimal_generators(checked))


def unit_ideal(ctx: PolyContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, ((0,) * ctx.nvars,))


def zero_ideal(ctx: PolyContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, ())


def maximal_ideal(ctx: PolyContext) -> MonomialIdeal:
    return minimalize([unit_vector(ctx.nvars, j) for j in range(ctx.nvars)], ctx)


def _same_context(I: MonomialIdeal, J: MonomialIdeal):
    if I.context != J.context:
        raise ContextMismatchError(f"ideals live in different rings: {I.context} vs {J.context}")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_context(I, J)
    return MonomialIdeal(
        I.context, minimal_generators(monomial_mul(a, b) for a in I.gens for b in J.gens)
    )


@lru_cache(maxsize=512)
def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise InvalidInputError("negative power")
    if k == 0:
        return unit_ideal(I.context)
    if I.is_zero:
        return I

    n = I.nvars
    products = []
    for combo in combinations_with_replacement(I.gens, k):
        acc = [0] * n
        for g in combo:
            for j in range(n):
                acc[j] += g[j]
        products.append(tuple(acc))
    return MonomialIdeal(I.context, minimal_generators(products))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_context(I, J)
    return MonomialIdeal(I.context, minimal_generators(I.gens + J.gens))


def colon_monomial(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    m = I.context.check(m)
    return MonomialIdeal(
        I.context,
        minimal_generators(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in I.gens),
    )


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    m = I.context.check(m)
    return any(divides(g, m) for g in I.gens)


def edge_ideal(G: Graph, ctx: PolyContext | None = None) -> MonomialIdeal:
    ctx = ctx or PolyContext(max(G.nvertices, 1))
    if ctx.nvars < G.nvertices:
        raise ContextMismatchError("graph has more vertices than the ring has variables")
    gens = []
    for i, j in G.edges:
        v = [0] * ctx.nvars
        v[i - 1] = v[j - 1] = 1
        gens.append(v)
    return minimalize(gens, ctx)


def permute_variables(I: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """perm[j] is the new position of variable j (0-based)."""
    if sorted(perm) != list(range(I.nvars)):
        raise InvalidInputError(f"{perm} is not a permutation of 0..{I.nvars - 1}")
    moved = []
    for g in I.gens:
        v = [0] * I.nvars
        for j, e in enumerate(g):
            v[perm[j]] = e
        moved.append(tuple(v))
    return MonomialIdeal(I.context, tuple(sorted(moved, reverse=True)))


def canonical_form_under_permutation(I: MonomialIdeal) -> MonomialIdeal:
    if I.nvars > 8:
        raise InvalidInputError("permutation canonical form is limited to n <= 8")
    best = None
    for perm in permutations(range(I.nvars)):
        candidate = permute_variables(I, perm)
        if best is None or candidate.gens < best.gens:
            best = candidate
    return best
