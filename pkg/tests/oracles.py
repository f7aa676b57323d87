"""Independent brute-force oracles. Nothing here imports the package's algorithms."""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd


def det_leibniz(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, p in enumerate(perm):
            term *= m[i][p]
        total += term
    return total


def minor_gcd(a, k):
    if k == 0:
        return 1
    rows, cols = len(a), len(a[0]) if a else 0
    g = 0
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            g = gcd(g, det_leibniz([[a[i][j] for j in ci] for i in ri]))
    return g


def invariant_factors_by_minors(a):
    """d_i = g_i / g_{i-1} where g_i is the gcd of the i x i minors."""
    rows, cols = len(a), len(a[0]) if a else 0
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = minor_gcd(a, k)
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def rational_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def solve_in_span(basis, v):
    """Rational x with x @ basis == v, or None. Basis rows must be independent."""
    k = len(basis)
    if k == 0:
        return [] if not any(v) else None
    n = len(v)
    # columns are the unknowns' equations: sum_i x_i basis[i][j] = v[j]
    aug = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    row = 0
    pivcols = []
    for c in range(k):
        piv = next((i for i in range(row, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        p = aug[row][c]
        aug[row] = [x / p for x in aug[row]]
        for i in range(n):
            if i != row and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivcols.append(c)
        row += 1
    if any(aug[i][k] for i in range(row, n)):
        return None
    x = [Fraction(0)] * k
    for r, c in enumerate(pivcols):
        x[c] = aug[r][k]
    return x


def in_integer_span(basis, v):
    x = solve_in_span(basis, v)
    return x is not None and all(t.denominator == 1 for t in x)


def same_lattice(b1, b2):
    return all(in_integer_span(b1, v) for v in b2) and all(in_integer_span(b2, v) for v in b1)


def brute_kernel(a, bound):
    """All integer row vectors m with |m_i| <= bound and m @ a == 0."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    out = []
    for m in product(range(-bound, bound + 1), repeat=rows):
        if all(sum(m[i] * a[i][j] for i in range(rows)) == 0 for j in range(cols)):
            out.append(m)
    return out


def coset_count(c):
    """|Z^r / rowspan(c)| for a nonsingular r x r integer matrix, by counting the
    integer points in the half-open fundamental parallelepiped."""
    r = len(c)
    det = det_leibniz(c)
    assert det != 0
    # adj(c) via cofactors; x in parallelepiped iff 0 <= (x @ adj) * sign < |det|
    adj = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            minor = [[c[a][b] for b in range(r) if b != j] for a in range(r) if a != i]
            adj[j][i] = (-1) ** (i + j) * (det_leibniz(minor) if minor else 1)
    lo = [sum(min(0, c[i][j]) for i in range(r)) for j in range(r)]
    hi = [sum(max(0, c[i][j]) for i in range(r)) for j in range(r)]
    sign = 1 if det > 0 else -1
    count = 0
    for x in product(*[range(l, h + 1) for l, h in zip(lo, hi)]):
        t = [sign * sum(x[a] * adj[a][b] for a in range(r)) for b in range(r)]
        if all(0 <= s < abs(det) for s in t):
            count += 1
    return count
