"""Independent reference values for the test suite.

Recomputes ranks and greedy selections with dense numpy elimination modulo
several primes and exact sympy arithmetic, using its own enumeration code.
Writes crates/core/tests/fixtures/oracle.json.
"""
import json
import random
from itertools import combinations
from math import comb
from pathlib import Path

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def random_primes(rng, count):
    out = []
    while len(out) < count:
        c = rng.randrange(2**30 + 1, 2**31) | 1
        if is_prime(c) and c not in out:
            out.append(c)
    return out


def rank_and_pivots_mod(a, p):
    """Rank of an integer matrix mod p, and its pivot columns (first
    nonzero row per column, columns in order)."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        f = m[r + 1:, c].copy()
        if f.any():
            m[r + 1:] = (m[r + 1:] - (f[:, None] * m[r]) % p) % p
        pivots.append(c)
        r += 1
    return r, pivots


# Latin squares.

def latin_matrix(n):
    cols = [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
    rows = []
    for (x, y) in [(0, 1), (0, 2), (1, 2)]:
        for a in range(n):
            for b in range(n):
                rows.append([1 if (t[x], t[y]) == (a, b) else 0 for t in cols])
    return rows


def intercalate_vec(n, i, j, k):
    def d(x):
        v = [0] * n
        v[0] += 1
        v[x] -= 1
        return v
    a, b, c = d(i), d(j), d(k)
    return [a[x] * b[y] * c[z] for x in range(n) for y in range(n) for z in range(n)]


# 4-cycles.

def canon(c):
    i = c.index(min(c))
    r = c[i:] + c[:i]
    if r[1] > r[3]:
        r = [r[0], r[3], r[2], r[1]]
    return tuple(r)


def cycles(n):
    out = []
    for w, x, y, z in combinations(range(n), 4):
        out += [canon([w, x, y, z]), canon([w, x, z, y]), canon([w, y, x, z])]
    return out


def cycle_edges(c):
    return [tuple(sorted((c[i], c[(i + 1) % 4]))) for i in range(4)]


def cycle_matrix(n):
    cs = cycles(n)
    es = list(combinations(range(n), 2))
    return [[1 if e in cycle_edges(c) else 0 for c in cs] for e in es]


def diamonds(n):
    cs = cycles(n)
    col = {c: i for i, c in enumerate(cs)}
    out = []
    for a, b in combinations(range(n), 2):
        rest = [v for v in range(n) if v not in (a, b)]
        for m in combinations(rest, 4):
            pairings = [[(m[0], m[1]), (m[2], m[3])], [(m[0], m[2]), (m[1], m[3])], [(m[0], m[3]), (m[1], m[2])]]
            for s, t in [(0, 1), (0, 2), (1, 2)]:
                v = [0] * len(cs)
                for x, y in pairings[s]:
                    v[col[canon([a, x, b, y])]] += 1
                for x, y in pairings[t]:
                    v[col[canon([a, x, b, y])]] -= 1
                out.append(v)
    return out


def main():
    rng = random.Random(20240611)
    primes = random_primes(rng, 3)
    res = {"primes": primes}

    res["latin_rank"] = {}
    for n in range(1, 6):
        m = latin_matrix(n)
        ranks = [rank_and_pivots_mod(m, p)[0] for p in primes]
        assert len(set(ranks)) == 1
        if n <= 3:
            assert Matrix(m).rank() == ranks[0]
        res["latin_rank"][n] = ranks[0]
    res["latin_rank_n3_mod_1000003"] = rank_and_pivots_mod(latin_matrix(3), 1_000_003)[0]
    stack3 = [intercalate_vec(3, i, j, k) for i in range(1, 3) for j in range(1, 3) for k in range(1, 3)]
    res["intercalate_stack_rank_n3"] = Matrix(stack3).rank()
    k2 = Matrix(latin_matrix(2)).nullspace()
    assert len(k2) == 1
    v = k2[0] / k2[0][0]
    res["latin_kernel_n2"] = [int(x) for x in v]

    res["cycle_rank"] = {}
    for n in range(4, 10):
        m = cycle_matrix(n)
        ranks = [rank_and_pivots_mod(m, p)[0] for p in primes]
        assert len(set(ranks)) == 1
        if n <= 6:
            assert Matrix(m).rank() == ranks[0]
        res["cycle_rank"][n] = ranks[0]

    res["diamond_span"] = {}
    res["greedy_basis"] = {}
    for n in (6, 7, 9):
        d = diamonds(n)
        rp = [rank_and_pivots_mod(np.array(d).T, p) for p in primes]
        assert len({r for r, _ in rp}) == 1 and len({tuple(pv) for _, pv in rp}) == 1
        if n == 6:
            assert Matrix(d).rank() == rp[0][0]
        res["diamond_span"][n] = {"count": len(d), "rank": rp[0][0]}
        res["greedy_basis"][n] = rp[0][1]

    d6 = diamonds(6)
    snf = smith_normal_form(Matrix(d6), domain=ZZ)
    inv = [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]
    res["diamond_smith_n6"] = sorted(inv)

    out = Path(__file__).resolve().parent.parent / "crates/core/tests/fixtures/oracle.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(res, indent=1) + "\n")
    print(json.dumps({k: v for k, v in res.items() if k != "greedy_basis"}))

    # The integer kernel is saturated, so the diamond lattice equals it iff
    # every invariant factor of the diamond family is 1.
    index = 1
    for x in inv:
        index *= x
    integrality = {
        "n": 6,
        "generators": len(d6),
        "kernel_rank": len(inv),
        "lattice_equal": index == 1,
        "index": index,
    }
    (out.parent / "integrality_n6.json").write_text(json.dumps(integrality, indent=2) + "\n")


if __name__ == "__main__":
    main()
