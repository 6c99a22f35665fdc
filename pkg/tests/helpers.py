# tests/helpers.py

from app.algebra.monomials import PolyContext, minimalize


def ideal(n, *gens, field=None):
    ctx = PolyContext(n) if field is None else PolyContext(n, field)
    return minimalize(gens, ctx)


EX_NO_TEXT = "vars: 6\nx1*x4^3\nx2*x5^3\nx3*x4*x5*x6\n"
TRIANGLE_TEXT = "vars: 3\nx1*x2\nx1*x3\nx2*x3\n"


def random_ideal(rng, n, ngens, top=2):
    """Nonzero, proper ideal from `ngens` random nonzero exponent vectors."""
    gens = []
    while len(gens) < ngens:
        v = tuple(rng.randint(0, top) for _ in range(n))
        if any(v):
            gens.append(v)
    return ideal(n, *gens)
