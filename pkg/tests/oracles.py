"""Small independent reference implementations used to cross-check the library."""
from __future__ import annotations

import itertools
from fractions import Fraction


# -- polynomials over F_q, coefficient lists low degree first ------------------

def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b, q):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return poly_trim(out)


def poly_mod(a, m, q):
    a = poly_trim([x % q for x in a])
    m = poly_trim(m)
    inv_lead = pow(m[-1], -1, q)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % q
        shift = len(a) - len(m)
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % q
        a = poly_trim(a)
    return a


def is_irreducible(poly, q):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(q), repeat=deg):
            if not poly_mod(poly, list(low) + [1], q):
                return False
    return True


def smallest_irreducible(q, k):
    for low in itertools.product(range(q), repeat=k):
        poly = list(low) + [1]
        if is_irreducible(poly, q):
            return tuple(poly)


def ext_mul(a, b, modulus, q):
    """Product of coefficient vectors in F_q[X]/(modulus), padded to length deg."""
    k = len(modulus) - 1
    out = poly_mod(poly_mul(poly_trim(a), poly_trim(b), q), modulus, q)
    return tuple(out + [0] * (k - len(out)))


def ext_pow(a, e, modulus, q):
    k = len(modulus) - 1
    out = tuple([1] + [0] * (k - 1))
    for _ in range(e):
        out = ext_mul(out, a, modulus, q)
    return out


# -- 2x2 matrices mod p and the projective line ---------------------------------

INF = "inf"


def mat_mul(m, n, p):
    a, b, c, d = m
    e, f, g, h = n
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def mobius(m, z, p):
    """z -> (az + c) / (bz + d) on F_p u {inf}."""
    a, b, c, d = m
    if z == INF:
        num, den = a % p, b % p
    else:
        num, den = (a * z + c) % p, (b * z + d) % p
    if den == 0:
        return INF
    return num * pow(den, -1, p) % p


def sl2(p):
    return [m for m in itertools.product(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p == 1]


def proj_points(p):
    return list(range(p)) + [INF]


# -- permutation groups -------------------------------------------------------

def perm_mul(x, y):
    """Left to right: apply x, then y."""
    return tuple(y[x[i]] for i in range(len(x)))


def perm_inv(x):
    out = [0] * len(x)
    for i, j in enumerate(x):
        out[j] = i
    return tuple(out)


def perm_closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def sym(n):
    return sorted(itertools.permutations(range(n)))


def is_even(x):
    sign = 1
    seen = set()
    for i in range(len(x)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = x[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign == 1


def eval_word(word, images, mul, inv, ident):
    acc = ident
    for letter in word:
        g = images[abs(letter) - 1]
        acc = mul(acc, g if letter > 0 else inv(g))
    return acc


def brute_hom_count(ngens, relators, elements, mul, inv, ident):
    """Plain product scan; relators are lists of signed 1-based generator indices."""
    count = 0
    for images in itertools.product(elements, repeat=ngens):
        if all(eval_word(r, images, mul, inv, ident) == ident for r in relators):
            count += 1
    return count


__all__ = [name for name in dir() if not name.startswith("_")] + ["Fraction"]
