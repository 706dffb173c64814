"""Small finite fields F_q with deterministic, table-free arithmetic.

Elements are integers 0..q-1. For prime q this is plain modular arithmetic;
for prime powers, elements encode polynomials over F_p in base-p digits,
reduced modulo a fixed irreducible polynomial so runs are reproducible.
"""

from __future__ import annotations

from functools import lru_cache

# fixed irreducibles (ascending coefficients, monic) for the prime powers we use
_IRREDUCIBLE = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 6, 1),
}


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


@lru_cache(maxsize=None)
def GF(q):
    return _GaloisField(q)


class _GaloisField:
    def __init__(self, q):
        self.q = q
        self.p, self.e = _factor_prime_power(q)
        if self.e > 1:
            if q not in _IRREDUCIBLE:
                raise ValueError(f"no fixed irreducible configured for q={q}")
            self.modulus = _IRREDUCIBLE[q]

    def __repr__(self):
        return f"GF({self.q})"

    def _digits(self, a):
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(a % p)
            a //= p
        return out

    def _undigits(self, digits):
        val = 0
        for d in reversed(digits):
            val = val * self.p + d
        return val

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return self._undigits([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        p = self.p
        return self._undigits([(x - y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(len(prod) - 1, self.e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.e):
                    prod[i - self.e + j] = (prod[i - self.e + j] - c * mod[j]) % p
        return self._undigits(prod[: self.e])

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    # -- polynomial helpers over this field (ascending coefficient tuples) --------

    def poly_eval(self, coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_mul(self, a, b, cap):
        """Product of coefficient tuples, padded to length cap + 1."""
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = self.add(out[i + j], self.mul(x, y))
        if any(out[cap + 1:]):
            raise ValueError("product degree exceeds the cap")
        out = out[: cap + 1]
        return tuple(out) + (0,) * (cap + 1 - len(out))

    def poly_degree(self, coeffs):
        for i in range(len(coeffs) - 1, -1, -1):
            if coeffs[i]:
                return i
        return -1

    def poly_str(self, coeffs):
        terms = []
        for i, c in enumerate(coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms) if terms else "0"
