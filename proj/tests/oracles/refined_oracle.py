#!/usr/bin/env python3
"""Independent brute-force / exact-rational oracle used to freeze expected
values in the C++ tests. Pure Python, no shared code with the library."""
from fractions import Fraction as F
from itertools import permutations
import sys


def des(p):
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def refined_counts(n):
    """counts[d][k] by enumeration (k is 1-based)."""
    c = [[0] * (n + 1) for _ in range(n)]
    for p in permutations(range(1, n + 1)):
        c[des(p)][p[0]] += 1
    return c


def refined_by_rec1(nmax):
    """Table via insertion of a new first letter; used for n beyond enumeration."""
    t = {1: [[0, 1]]}
    for n in range(2, nmax + 1):
        prev = t[n - 1]
        cur = [[0] * (n + 1) for _ in range(n)]
        for d in range(n):
            for k in range(1, n + 1):
                s = 0
                for l in range(1, n):
                    dd = d - (1 if l < k else 0)
                    if 0 <= dd <= n - 2:
                        s += prev[dd][l]
                cur[d][k] = s
        t[n] = cur
    return t


def first_dist(t, n, d):
    row = t[n][d][1:]
    tot = sum(row)
    return [F(x, tot) for x in row]


def geom(d, k):
    return F(d ** (k - 1), (d + 1) ** k)


def ratio_sup(t, n, d):
    P = first_dist(t, n, d)
    return max(abs(P[k - 1] / geom(d, k) - 1) for k in range(1, n + 1))


def tvd(t, n, d):
    P = first_dist(t, n, d)
    p = F(d, d + 1)
    return (sum(abs(P[k - 1] - geom(d, k)) for k in range(1, n + 1)) + p ** n) / 2


if __name__ == "__main__":
    t = refined_by_rec1(80)
    for n in (3, 4, 5):
        assert [r[1:] for r in refined_counts(n)] == [r[1:] for r in t[n]]
    for d in (1, 2, 3):
        for n in (16, 32, 64, 80):
            rs, tv = ratio_sup(t, n, d), tvd(t, n, d)
            print(f"d={d} n={n} sup={float(rs):.12g} tvd={float(tv):.12g}")
    print("tvd(2,1) =", tvd(t, 2, 1))
    print("rising m=2 (3,1):", sum(F(k * (k + 1)) * q for k, q in zip(range(1, 4), first_dist(t, 3, 1))))
    # both-ends brute force
    for n in (3, 4):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                if k == l:
                    continue
                poly = [0] * n
                for p in permutations(range(1, n + 1)):
                    if p[0] == k and p[-1] == l:
                        poly[des(p)] += 1
                print(f"both n={n} k={k} l={l} poly={poly}")
    sys.exit(0)
