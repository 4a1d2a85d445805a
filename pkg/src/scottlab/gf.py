"""Arithmetic for the finite fields GF(p^m), vectorized over numpy code arrays.

Field elements are encoded as integers in [0, p^m): the code of an element
sum_i c_i x^i (c_i in GF(p), x the class of the modulus variable) is
sum_i c_i p^i.  Codes 0..p-1 therefore always denote the prime-subfield
constants, in every extension of the same characteristic.
"""

from __future__ import annotations

import numpy as np
from sympy import isprime


class FieldError(ValueError):
    pass


def _poly_mul_mod(a, b, modulus, p):
    """Multiply two coefficient vectors mod (modulus, p).  Scalar helper."""
    m = len(modulus) - 1
    conv = np.convolve(a, b) % p
    res = np.zeros(m, dtype=np.int64)
    res[: min(m, len(conv))] = conv[: min(m, len(conv))]
    for k in range(len(conv) - 1, m - 1, -1):
        c = conv[k]
        if c:
            # x^k = x^(k-m) * (x^m mod modulus)
            conv[k] = 0
            conv[k - m : k] = (conv[k - m : k] - c * np.asarray(modulus[:m])) % p
    res = conv[:m] % p
    return res


def _find_irreducible(p, m):
    """Lexicographically least monic irreducible of degree m over GF(p)."""
    from .polys import poly_is_irreducible  # deferred, polys imports gf

    if m == 1:
        return np.array([0, 1], dtype=np.int64)  # x
    for tail in range(p**m):
        coeffs = [(tail // p**i) % p for i in range(m)] + [1]
        f = np.array(coeffs, dtype=np.int64)
        if poly_is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible of degree {m} over GF({p})")  # unreachable


class FieldCtx:
    """The field GF(p^m) with table-backed vectorized arithmetic.

    All element operations accept and return numpy integer arrays (or
    scalars) of codes.  Immutable after construction.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not isprime(p):
            raise FieldError(f"{p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        self.p = int(p)
        self.m = int(m)
        self.q = self.p**self.m
        if modulus is None:
            modulus = _find_irreducible(self.p, self.m)
        else:
            modulus = np.asarray(modulus, dtype=np.int64) % p
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            from .polys import poly_is_irreducible

            if m > 1 and not poly_is_irreducible(modulus, p):
                raise FieldError("modulus is reducible")
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        pows = p ** np.arange(m, dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        self._digits = (codes[:, None] // pows[None, :]) % p
        self._pows = pows
        if m == 1:
            self._log = None
            self._exp = None
            inv = np.zeros(p, dtype=np.int64)
            for i in range(1, p):
                inv[i] = pow(i, p - 2, p)
            self._inv_table = inv
            return
        # exp/log tables from a multiplicative generator
        mod = self.modulus
        gen = None
        for g in range(1, q):
            seen_one_at = None
            cur = np.zeros(m, dtype=np.int64)
            cur[0] = 1
            gd = self._digits[g]
            for i in range(1, q):
                cur = _poly_mul_mod(cur, gd, mod, p)
                if cur[0] == 1 and not cur[1:].any():
                    seen_one_at = i
                    break
            if seen_one_at == q - 1:
                gen = g
                break
        if gen is None:
            raise FieldError("modulus is not irreducible (no generator found)")
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = np.zeros(m, dtype=np.int64)
        cur[0] = 1
        gd = self._digits[gen]
        for i in range(q - 1):
            code = int(cur @ self._pows)
            exp[i] = code
            log[code] = i
            cur = _poly_mul_mod(cur, gd, mod, p)
        self._exp = exp
        self._log = log
        self.generator = gen

    # -- elementwise operations ------------------------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pows

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        return ((-self._digits[a]) % self.p) @ self._pows

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        mask = (a != 0) & (b != 0)
        if mask.any():
            out[mask] = self._exp[(self._log[a[mask]] + self._log[b[mask]]) % (self.q - 1)]
        return out if out.shape else out[()]

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        if self.m == 1:
            return self._inv_table[a]
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def power(self, a, e):
        """a**e elementwise; e a python int (may be negative for units)."""
        a = np.asarray(a, dtype=np.int64)
        e = int(e)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            return self.power(self.inv(a), -e)
        if self.m == 1:
            return self._powmod(a, e)
        out = np.zeros(a.shape, dtype=np.int64)
        mask = a != 0
        out[mask] = self._exp[(self._log[a[mask]] * e) % (self.q - 1)]
        return out if out.shape else out[()]

    def _powmod(self, a, e):
        out = np.ones_like(a)
        base = a % self.p
        while e:
            if e & 1:
                out = (out * base) % self.p
            base = (base * base) % self.p
            e >>= 1
        return out

    def frobenius(self, a, k=1):
        """a ** (p**k), elementwise."""
        if self.m == 1:
            return np.asarray(a, dtype=np.int64) % self.p
        return self.power(a, self.p**k)

    def frobenius_inverse(self, a, k=1):
        """Inverse of the k-fold Frobenius (bijective on a finite field)."""
        k = k % self.m
        if k == 0:
            return np.asarray(a, dtype=np.int64)
        return self.frobenius(a, self.m - k)

    def sum(self, a, axis=None):
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        d = self._digits[a]  # shape a.shape + (m,)
        if axis is None:
            s = d.reshape(-1, self.m).sum(axis=0) % self.p
            return int(s @ self._pows)
        s = d.sum(axis=axis % a.ndim) % self.p
        return s @ self._pows

    # -- structure -------------------------------------------------------

    def embed_map(self, big: "FieldCtx") -> np.ndarray:
        """Code-mapping array realizing the embedding of self into big.

        Requires same characteristic and self.m | big.m.  The image of the
        small field's generator-of-representation x is the least root of
        self's modulus in big (deterministic choice).
        """
        if big.p != self.p or big.m % self.m != 0:
            raise FieldError("no embedding: incompatible fields")
        if big.m == self.m:
            if np.array_equal(big.modulus, self.modulus):
                return np.arange(self.q, dtype=np.int64)
        # least root of self.modulus in big, by Horner scan
        codes = np.arange(big.q, dtype=np.int64)
        acc = np.zeros(big.q, dtype=np.int64)
        for c in self.modulus[::-1]:
            acc = big.add(big.mul(acc, codes), int(c))
        roots = np.nonzero(acc == 0)[0]
        if len(roots) == 0:
            raise FieldError("no embedding: modulus has no root")
        r = int(roots[0])
        # map sum c_i x^i -> sum c_i r^i
        rpows = [1]
        for _ in range(1, self.m):
            rpows.append(int(big.mul(rpows[-1], r)))
        out = np.zeros(self.q, dtype=np.int64)
        for i in range(self.m):
            out = big.add(out, big.mul(self._digits[:, i], rpows[i]))
        return np.asarray(out, dtype=np.int64)

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.m == other.m
            and np.array_equal(self.modulus, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, tuple(int(c) for c in self.modulus)))
