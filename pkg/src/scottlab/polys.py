"""Dense univariate polynomials over GF(p^m).

Coefficient vectors are numpy int64 arrays of field codes, low degree
first, trimmed so the zero polynomial is the empty array.
"""

from __future__ import annotations

import numpy as np

from .gf import FieldCtx


class PolynomialError(ValueError):
    pass


def poly(coeffs):
    return poly_trim(np.asarray(coeffs, dtype=np.int64))


def poly_trim(f):
    f = np.asarray(f, dtype=np.int64)
    nz = np.nonzero(f)[0]
    return f[: nz[-1] + 1] if len(nz) else f[:0]


def poly_deg(f):
    return len(f) - 1  # zero polynomial has degree -1


def poly_eq(f, g):
    return np.array_equal(poly_trim(f), poly_trim(g))


def poly_add(F: FieldCtx, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(f)] = f
    b[: len(g)] = g
    return poly_trim(F.add(a, b))


def poly_sub(F, f, g):
    return poly_add(F, f, F.neg(np.asarray(g, dtype=np.int64)))


def poly_scale(F, f, c):
    return poly_trim(F.mul(np.asarray(f, dtype=np.int64), c))


def poly_mul(F, f, g):
    f, g = poly_trim(f), poly_trim(g)
    if len(f) == 0 or len(g) == 0:
        return f[:0]
    out = np.zeros(len(f) + len(g) - 1, dtype=np.int64)
    for i, c in enumerate(f):
        if c:
            out[i : i + len(g)] = F.add(out[i : i + len(g)], F.mul(int(c), g))
    return poly_trim(out)


def poly_divmod(F, f, g):
    f, g = poly_trim(f), poly_trim(g)
    if len(g) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    r = f.copy()
    q = np.zeros(max(len(f) - len(g) + 1, 0), dtype=np.int64)
    inv_lead = F.inv(int(g[-1]))
    while len(r) >= len(g):
        c = F.mul(int(r[-1]), inv_lead)
        k = len(r) - len(g)
        q[k] = c
        r[k:] = F.sub(r[k:], F.mul(int(c), g))
        r = poly_trim(r)
    return poly_trim(q), r


def poly_mod(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_monic(F, f):
    f = poly_trim(f)
    if len(f) == 0:
        return f
    return poly_scale(F, f, int(F.inv(int(f[-1]))))


def poly_gcd(F, f, g):
    f, g = poly_trim(f), poly_trim(g)
    while len(g):
        f, g = g, poly_mod(F, f, g)
    return poly_monic(F, f)


def poly_xgcd(F, f, g):
    """(d, u, v) with u f + v g = d = monic gcd(f, g)."""
    r0, r1 = poly_trim(f), poly_trim(g)
    u0, u1 = poly(np.array([1])), poly(np.array([]))
    v0, v1 = poly(np.array([])), poly(np.array([1]))
    while len(r1):
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, poly_sub(F, u0, poly_mul(F, q, u1))
        v0, v1 = v1, poly_sub(F, v0, poly_mul(F, q, v1))
    if len(r0):
        c = int(F.inv(int(r0[-1])))
        r0, u0, v0 = poly_scale(F, r0, c), poly_scale(F, u0, c), poly_scale(F, v0, c)
    return r0, u0, v0


def poly_powmod(F, f, e, mod):
    """f**e mod `mod`, by square and multiply; e any nonnegative int."""
    result = poly(np.array([1]))
    base = poly_mod(F, f, mod)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        e >>= 1
    return result


def poly_derivative(F, f):
    f = poly_trim(f)
    if len(f) <= 1:
        return f[:0]
    mults = np.arange(1, len(f), dtype=np.int64) % F.p
    return poly_trim(F.mul(f[1:], mults))


def poly_eval(F, f, x):
    """Evaluate f at code(s) x by Horner."""
    x = np.asarray(x, dtype=np.int64)
    acc = np.zeros_like(x)
    for c in poly_trim(f)[::-1]:
        acc = F.add(F.mul(acc, x), int(c))
    return acc


_X = np.array([0, 1], dtype=np.int64)


def poly_is_irreducible(f, p):
    """Irreducibility over the prime field GF(p) (used to pick moduli)."""
    return is_irreducible(FieldCtx(p, 1), np.asarray(f, dtype=np.int64))


def is_irreducible(F: FieldCtx, f):
    f = poly_trim(f)
    n = poly_deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    # x^(q^n) == x mod f, and gcd(x^(q^(n/l)) - x, f) == 1 for primes l | n
    xqn = poly_powmod(F, _X, F.q**n, f)
    if not poly_eq(xqn, poly_mod(F, _X, f)):
        return False
    for l in _prime_divisors(n):
        g = poly_powmod(F, _X, F.q ** (n // l), f)
        if poly_deg(poly_gcd(F, poly_sub(F, g, _X), f)) > 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _pth_root(F, f):
    """For f with f' = 0 (all exponents multiples of p), the g with g^p = f."""
    f = poly_trim(f)
    idx = np.arange(0, len(f), F.p)
    coeffs = f[idx]
    return poly_trim(F.frobenius_inverse(coeffs, 1))


def _candidate_polys(F, max_deg):
    """Deterministic sweep of nonconstant monic polynomials by degree, then code."""
    for d in range(1, max_deg + 1):
        for tail in range(F.q**d):
            coeffs = [(tail // F.q**i) % F.q for i in range(d)] + [1]
            yield poly(np.array(coeffs))


def _edf(F, f, d):
    """Split a monic squarefree product of irreducibles of equal degree d."""
    f = poly_monic(F, f)
    if poly_deg(f) == d:
        return [f]
    for h in _candidate_polys(F, 2 * d):
        if F.p == 2:
            # trace map over GF(2^(m*d))
            t = poly_mod(F, h, f)
            acc = t
            for _ in range(F.m * d - 1):
                t = poly_mod(F, poly_mul(F, t, t), f)
                acc = poly_add(F, acc, t)
            g = poly_gcd(F, acc, f)
        else:
            u = poly_powmod(F, h, (F.q**d - 1) // 2, f)
            g = poly_gcd(F, poly_sub(F, u, poly(np.array([1]))), f)
        if 0 < poly_deg(g) < poly_deg(f):
            left = _edf(F, g, d)
            right = _edf(F, poly_divmod(F, f, g)[0], d)
            return left + right
    raise PolynomialError("equal-degree splitting sweep exhausted")  # pragma: no cover


def _distinct_irreducible_factors(F, f):
    """Distinct monic irreducible factors of f (multiplicities ignored)."""
    f = poly_monic(F, f)
    if poly_deg(f) <= 0:
        return []
    df = poly_derivative(F, f)
    if len(df) == 0:
        return _distinct_irreducible_factors(F, _pth_root(F, f))
    sf = poly_divmod(F, f, poly_gcd(F, f, df))[0]  # squarefree part
    rest = _distinct_irreducible_factors(F, poly_gcd(F, f, poly_divmod(F, f, sf)[0])) if poly_deg(sf) < poly_deg(f) else []
    # distinct-degree on the squarefree part
    out = []
    h = poly_mod(F, _X, sf)
    rem = sf
    d = 0
    while poly_deg(rem) > 0:
        d += 1
        if 2 * d > poly_deg(rem):
            out.append(rem)
            break
        h = poly_powmod(F, h, F.q, rem)
        g = poly_gcd(F, poly_sub(F, h, _X), rem)
        if poly_deg(g) > 0:
            out.extend(_edf(F, g, d))
            rem = poly_divmod(F, rem, g)[0]
            h = poly_mod(F, h, rem)
    seen = {}
    for w in out + rest:
        seen[tuple(int(c) for c in w)] = w
    return list(seen.values())


def factor_poly(F: FieldCtx, f):
    """Factor f into monic irreducibles: returns (unit, [(factor, mult), ...]).

    Factors are sorted by (degree, coefficient codes) for determinism.
    """
    f = poly_trim(f)
    if len(f) == 0:
        raise PolynomialError("cannot factor the zero polynomial")
    unit = int(f[-1])
    g = poly_monic(F, f)
    factors = _distinct_irreducible_factors(F, g)
    out = []
    for w in factors:
        mult = 0
        while True:
            q, r = poly_divmod(F, g, w)
            if len(r):
                break
            g = q
            mult += 1
        out.append((w, mult))
    if poly_deg(g) != 0:
        raise PolynomialError("factorization lost a factor")  # pragma: no cover
    out.sort(key=lambda t: (poly_deg(t[0]), tuple(int(c) for c in t[0])))
    return unit, out
