"""Independent reference computations used by the tests.

Nothing here imports the package under test.  Permutations are tuples of
0-based images and compose left to right, matching the package convention
``(f * g)(i) = g(f(i))``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


# -- finite operation tables -------------------------------------------------------


def axiom_violations(rhd):
    n = len(rhd)
    out = []
    for x in range(n):
        if rhd[x][x] != x:
            out.append(("idempotence", (x,)))
    for y in range(n):
        if sorted(rhd[x][y] for x in range(n)) != list(range(n)):
            out.append(("right-inverse", (y,)))
    for x, y, z in itertools.product(range(n), repeat=3):
        if rhd[rhd[x][y]][z] != rhd[rhd[x][z]][rhd[y][z]]:
            out.append(("self-distributivity", (x, y, z)))
    return out


def brute_homs(src, tgt):
    """All maps f (as tuples) with f(x ▷ y) = f(x) ▷ f(y), in lexicographic order."""
    n, m = len(src), len(tgt)
    return [f for f in itertools.product(range(m), repeat=n)
            if all(f[src[x][y]] == tgt[f[x]][f[y]] for x in range(n) for y in range(n))]


def orbit_count(rhd):
    """Connected components of the graph x -- x ▷ y (union-find)."""
    n = len(rhd)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(n):
        for y in range(n):
            parent[find(x)] = find(rhd[x][y])
    return len({find(x) for x in range(n)})


# -- permutations --------------------------------------------------------------------


def compose(f, g):
    return tuple(g[f[i]] for i in range(len(f)))


def perm_inverse(f):
    out = [0] * len(f)
    for i, j in enumerate(f):
        out[j] = i
    return tuple(out)


def transposition(d, a, b):
    """0-based swap of a and b."""
    p = list(range(d))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


def all_transpositions(d):
    return [transposition(d, a, b) for a, b in itertools.combinations(range(d), 2)]


def all_cyclic(d):
    """Permutations with exactly one nontrivial cycle."""
    out = []
    for p in itertools.permutations(range(d)):
        moved = [i for i in range(d) if p[i] != i]
        if not moved:
            continue
        orbit, i = {moved[0]}, p[moved[0]]
        while i != moved[0]:
            orbit.add(i)
            i = p[i]
        if orbit == set(moved):
            out.append(p)
    return out


def sphere_closure_count(d, m, simple=True):
    """Number of m-tuples of transpositions (or cyclic perms) whose product is the identity."""
    gens = all_transpositions(d) if simple else all_cyclic(d)
    e = tuple(range(d))
    count = 0
    for tup in itertools.product(gens, repeat=m):
        p = e
        for g in tup:
            p = compose(p, g)
        count += p == e
    return count


# -- 2x2 integer matrices --------------------------------------------------------------


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def matpow(A, k):
    out = [[1, 0], [0, 1]]
    for _ in range(k):
        out = matmul(out, A)
    return out


# -- ranks ---------------------------------------------------------------------------------


def _rank(rows, reduce, inv):
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if reduce(rows[r][c]) != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        iv = inv(rows[rank][c])
        rows[rank] = [reduce(a * iv) for a in rows[rank]]
        for r in range(len(rows)):
            if r != rank and reduce(rows[r][c]) != 0:
                f = rows[r][c]
                rows[r] = [reduce(a - f * b) for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rank_q(M):
    return _rank([[Fraction(int(a)) for a in row] for row in M], lambda a: a, lambda a: 1 / a)


def rank_mod_p(M, p):
    return _rank([[int(a) % p for a in row] for row in M], lambda a: a % p,
                 lambda a: pow(int(a), -1, p))


def det(M):
    """Exact determinant by fraction-valued elimination."""
    A = [[Fraction(int(a)) for a in row] for row in M]
    n, out = len(A), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            out = -out
        out *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return int(out)


def torsion_from_modular_ranks(M, primes=(2, 3, 5)):
    """For each p, the number of invariant factors divisible by p: rank_Q - rank_p."""
    rq = rank_q(M)
    return {p: rq - rank_mod_p(M, p) for p in primes}


# -- braids via the reduced Burau representation at a rational point ----------------------


def burau(n, word, t=Fraction(2)):
    """Unreduced Burau matrix of a braid word at a rational t (exact)."""
    def gen(i, e):
        M = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        k = i - 1
        if e > 0:
            M[k][k], M[k][k + 1], M[k + 1][k], M[k + 1][k + 1] = 1 - t, t, Fraction(1), Fraction(0)
        else:
            M[k][k], M[k][k + 1] = Fraction(0), Fraction(1)
            M[k + 1][k], M[k + 1][k + 1] = 1 / t, 1 - 1 / t
        return M

    out = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for i, e in word:
        G = gen(i, e)
        out = [[sum(out[r][k] * G[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
    return out


def braid_permutation(n, word):
    p = tuple(range(n))
    for i, _ in word:
        p = compose(p, transposition(n, i - 1, i))
    return p


def gcd_all(values):
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g
