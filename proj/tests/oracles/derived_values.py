#!/usr/bin/env python3
"""Independent recomputation of the constants frozen into the C++ tests.

Uses only brute force over small vector spaces, fractions and direct formula
evaluation; nothing here shares code with the library. Run it and compare the
printed values with the constants in tests/*.cpp.
"""

from fractions import Fraction
from itertools import product, combinations
from math import isqrt


def gauss_product(v, k, q):
    if k < 0 or k > v:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (v - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def qint(n, q):
    return (q ** n - 1) // (q - 1)


# Subspaces of F_2^v as frozensets of vectors (ints as bit vectors).
def span(gens):
    s = {0}
    for g in gens:
        s |= {x ^ g for x in s}
    return frozenset(s)


def all_subspaces_f2(v):
    seen = set()
    vecs = range(1, 2 ** v)
    for k in range(v + 1):
        for gens in combinations(vecs, k):
            sp = span(gens)
            if len(sp) == 2 ** k:
                seen.add(sp)
    return seen


def dim_f2(s):
    return len(s).bit_length() - 1


def dist_f2(a, b):
    return 2 * dim_f2(span(list(a | b))) - dim_f2(a) - dim_f2(b)


def realizable(q, r, n):
    gens = [q ** i * qint(r - i + 1, q) for i in range(r + 1)]
    ok = [False] * (n + 1)
    ok[0] = True
    for m in range(1, n + 1):
        ok[m] = any(m >= g and ok[m - g] for g in gens)
    return ok[n]


def thm2(q, v, k):
    r = v % k
    l = (q ** (v - k) - q ** r) // (q ** k - 1)
    z = qint(r, q) + 1 - k
    best = None
    for y in range(max(r, 2), k + 1):
        lam = q ** y
        disc = 1 + 4 * lam * (lam - (z + y - 1) * (q - 1) - 1)
        if disc < 0:
            continue
        # smallest integer c >= lam - 1/2 - sqrt(disc)/2, i.e. 2(lam-c) - 1 <= sqrt(disc)
        c = lam - 10
        while not (2 * (lam - c) - 1 <= 0 or (2 * (lam - c) - 1) ** 2 <= disc):
            c += 1
        val = l * q ** k + c
        best = val if best is None else min(best, val)
    return best


def lp_vertex_max():
    # maximize x+y, x+2y<=4, 3x+y<=6, x,y>=0 over the four vertices
    verts = [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(0)),
             (Fraction(0), Fraction(2))]
    # intersection of x+2y=4 and 3x+y=6
    y = Fraction(6, 5)
    x = 4 - 2 * y
    verts.append((x, y))
    return max((a + b, (a, b)) for a, b in verts)


def ilp_enum_max():
    return max(x + y for x in range(5) for y in range(5)
               if x + 2 * y <= 4 and 3 * x + y <= 6)


def ball_count_brute(v, i_dim, k_dim, e, fixed):
    subs = all_subspaces_f2(v)
    return sum(1 for s in subs if dim_f2(s) == k_dim and dist_f2(s, fixed) <= e)


def main():
    out = {}
    out["gauss(7,1,2)"] = gauss_product(7, 1, 2)
    subs4 = all_subspaces_f2(4)
    out["#2-subspaces F_2^4"] = sum(1 for s in subs4 if dim_f2(s) == 2)
    out["#subspaces F_2^4"] = len(subs4)
    out["#1-subspaces F_2^2"] = sum(1 for s in all_subspaces_f2(2) if dim_f2(s) == 1)
    out["floor(17374/15)"] = 17374 // 15
    out["realizable(3,3,40)"] = realizable(3, 3, 40)
    out["realizable(3,3,7)"] = realizable(3, 3, 7)
    out["realizable(3,3,47)"] = realizable(3, 3, 47)
    out["1+2^4+2^7"] = 1 + 2 ** 4 + 2 ** 7
    out["18*2^3+1"] = 18 * 2 ** 3 + 1
    out["thm2(2,5,2)"] = thm2(2, 5, 2)
    out["thm2(2,11,4)"] = thm2(2, 11, 4)
    out["thm2(2,13,5)"] = thm2(2, 13, 5)
    out["4*16+1"] = 4 * 16 + 1
    out["[12]_2/[4]_2"] = qint(12, 2) // qint(4, 2)
    out["LP max"] = lp_vertex_max()
    out["ILP max"] = ilp_enum_max()
    out["floor(511*34/15)"] = 511 * 34 // 15
    out["floor([7 2]/[3 2])"] = gauss_product(7, 2, 2) // gauss_product(3, 2, 2)
    out["[8 1]_q/[4 1]_q q=2..5"] = [gauss_product(8, 1, q) // gauss_product(4, 1, q)
                                     for q in (2, 3, 4, 5)]
    zero = span([])
    out["ball(2,4,0,1,1)"] = ball_count_brute(4, 0, 1, 1, zero)
    line = span([1, 2])
    out["ball(2,4,2,2,2)"] = ball_count_brute(4, 2, 2, 2, line)
    out["sum odd gauss(6,i,2)"] = sum(gauss_product(6, i, 2) for i in (1, 3, 5))
    p73 = lambda q: 2 * (q ** 8 + q ** 6 + 2 * q ** 5 + 2 * q ** 3 + q ** 2 - q + 2)
    out["A_q(7,3) formula q=2,3,4,5"] = [p73(q) for q in (2, 3, 4, 5)]
    # even v-4 lemma, m=4, q=2 with A_2(6,4;2)=21
    x = (qint(7, 2) - qint(1, 2)) * 21 // qint(3, 2)
    val = Fraction(qint(8, 2) * x, qint(4, 2)) + Fraction(2 * qint(8, 2), qint(2, 2))
    out["m=4 q=2 branch"] = (x, val.numerator // val.denominator)
    # m=5, q=3 with A_3(8,6;3) <= 248
    b = qint(9, 3) * 248 // qint(4, 3)
    out["m=5 q=3 branch"] = (b, qint(10, 3) * b // qint(5, 3))
    c83 = [-1, 2, 4, 1, 3, 5, 3, 3, 3, 1, 3, 0, 1]
    out["A_q(8,3) polynomial q=2,3,4"] = [sum(c * q ** i for i, c in enumerate(c83))
                                          for q in (2, 3, 4)]
    # divisible quotients by downward search
    def quot(a, k, q):
        b = a // qint(k, q)
        while b >= 0 and not realizable(q, k - 1, a - b * qint(k, q)):
            b -= 1
        return b
    out["{511*34/[4]_2}"] = quot(511 * 34, 4, 2)
    out["{1023*73/[4]_2}"] = quot(1023 * 73, 4, 2)
    out["{1023*1156/[5]_2}"] = quot(1023 * 1156, 5, 2)
    out["{247*[9]_3/[4]_3}"] = quot(247 * qint(9, 3), 4, 3)
    out["floor(247*[9]_3/[4]_3)"] = 247 * qint(9, 3) // qint(4, 3)
    for k, v in out.items():
        print(f"{k}: {v}")


if __name__ == "__main__":
    main()
