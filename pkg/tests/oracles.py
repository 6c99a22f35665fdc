# tests/oracles.py

"""
Slow, obviously-correct reference computations. Nothing here imports the code
under test.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(vectors, n):
    out = [0] * n
    for v in vectors:
        out = [max(a, b) for a, b in zip(out, v)]
    return tuple(out)


def rank_q(rows):
    m = [[Fraction(a) for a in r] for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


# --------------------------------------------------
# Betti numbers from the Taylor complex
# --------------------------------------------------

def taylor_betti_totals(gens, n):
    """
    Total Betti numbers of S/I. The Taylor complex tensored with K splits by
    multidegree; in degree b it has a basis of subsets with lcm b, and only
    the faces keeping the lcm survive in the differential.
    """
    gens = list(gens)
    groups = {}
    for size in range(len(gens) + 1):
        for sigma in combinations(range(len(gens)), size):
            b = _lcm([gens[i] for i in sigma], n)
            groups.setdefault(b, []).append(sigma)

    totals = {}
    for b, subsets in groups.items():
        by_size = {}
        for s in subsets:
            by_size.setdefault(len(s), []).append(s)
        ranks = {}
        for size, faces in by_size.items():
            lower = {f: i for i, f in enumerate(by_size.get(size - 1, []))}
            rows = []
            for face in faces:
                row = [0] * len(lower)
                for pos in range(len(face)):
                    smaller = face[:pos] + face[pos + 1:]
                    if smaller in lower:
                        row[lower[smaller]] = (-1) ** pos
                rows.append(row)
            ranks[size] = rank_q(rows) if lower else 0
        for size, faces in by_size.items():
            beta = len(faces) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if beta:
                totals[size] = totals.get(size, 0) + beta

    top = max(totals)
    return tuple(totals.get(i, 0) for i in range(top + 1))


# --------------------------------------------------
# Monomial enumeration
# --------------------------------------------------

def monomials_of_degree(n, d):
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def quotient_count(gens, n, d):
    return sum(1 for m in monomials_of_degree(n, d) if not any(_divides(g, m) for g in gens))


def semigroup_degree_count(generators, d):
    """Number of distinct sums of d generators (all generators in degree 1)."""
    level = {tuple(0 for _ in generators[0])}
    for _ in range(d):
        level = {tuple(a + b for a, b in zip(v, g)) for v in level for g in generators}
    return len(level)


# --------------------------------------------------
# Lattices and monoids
# --------------------------------------------------

def in_integer_span(rows, v):
    """v in Z-span of linearly independent integer rows, by exact solving."""
    r = len(rows)
    if r == 0:
        return not any(v)
    n = len(v)
    cols = []
    for j in range(n):
        trial = cols + [j]
        if rank_q([[row[c] for c in trial] for row in rows]) == len(trial):
            cols = trial
        if len(cols) == r:
            break
    # solve lam . A[:, cols] = v[cols]
    m = [[Fraction(rows[i][c]) for i in range(r)] + [Fraction(v[c])] for c in cols]
    for col in range(r):
        pivot = next(i for i in range(col, r) if m[i][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        for i in range(r):
            if i != col and m[i][col] != 0:
                f = m[i][col] / m[col][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    lam = [m[i][r] / m[i][i] for i in range(r)]
    if any(x.denominator != 1 for x in lam):
        return False
    return all(sum(lam[i] * rows[i][k] for i in range(r)) == v[k] for k in range(n))


def box_points(rows, N, B):
    return [v for v in product(range(B + 1), repeat=N) if any(v) and in_integer_span(rows, v)]


def box_irreducibles(points):
    point_set = set(points)
    out = []
    for v in points:
        split = any(
            tuple(a - b for a, b in zip(v, s)) in point_set
            for s in points
            if s != v and _divides(s, v)
        )
        if not split:
            out.append(v)
    return out


def exhaustive_membership(generators, v):
    bounds = []
    for g in generators:
        ratios = [v[k] // a for k, a in enumerate(g) if a]
        bounds.append(min(ratios) if ratios else 0)
    for coeffs in product(*(range(b + 1) for b in bounds)):
        total = [0] * len(v)
        for c, g in zip(coeffs, generators):
            for k, a in enumerate(g):
                total[k] += c * a
        if tuple(total) == tuple(v):
            return True
    return False


def power_membership(gens, k, m):
    """m lies in I^k when some product of k generators (repeats allowed) divides it."""
    for chosen in combinations_with_replacement(gens, k):
        total = [0] * len(m)
        for g in chosen:
            total = [a + b for a, b in zip(total, g)]
        if _divides(total, m):
            return True
    return False
