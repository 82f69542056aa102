"""Small finite fields F_{p^k} with deterministic construction.

Prime fields use plain integers; extensions use little-endian coefficient
tuples modulo the lexicographically least monic irreducible polynomial of
degree k, so two runs (or two processes) always build identical fields.
Sizes here stay small -- these fields back the Jacobian group-law validator,
not the bulk point counting.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product


class PrimeField:
    """F_p with int elements in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.k = 1
        self.q = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def from_int(self, n: int) -> int:
        return n % self.p

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        return pow(a, e, self.p)

    def is_square(self, a) -> bool:
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        """A square root of a, or None.  Tonelli-Shanks for p = 1 mod 4."""
        p = self.p
        if p == 2 or a == 0:
            return a
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        # Tonelli-Shanks
        s, m = p - 1, 0
        while s % 2 == 0:
            s //= 2
            m += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        c = pow(z, s, p)
        t = pow(a, s, p)
        r = pow(a, (s + 1) // 2, p)
        while t != 1:
            t2 = t
            i = 0
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m = i
            c = b * b % p
            t = t * c % p
            r = r * b % p
        return r


class ExtensionField:
    """F_{p^k}, elements as little-endian k-tuples over F_p."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus  # monic, little-endian, length k+1
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.k - 1)

    def elements(self):
        return (tuple(reversed(t)) for t in product(range(self.p), repeat=self.k))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        prod_ = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] += x * y
        # reduce by the monic modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod_[i] % p
            if c:
                for j in range(k + 1):
                    prod_[i - k + j] -= c * self.modulus[j]
        return tuple(c % p for c in prod_[:k])

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.q - 2)

    def is_square(self, a) -> bool:
        return a == self.zero or self.pow(a, (self.q - 1) // 2) == self.one

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def sqrt(self, a):
        """A square root of a, or None (generic Tonelli-Shanks)."""
        if a == self.zero:
            return a
        if not self.is_square(a):
            return None
        q = self.q
        if q % 4 == 3:
            return self.pow(a, (q + 1) // 4)
        s, m = q - 1, 0
        while s % 2 == 0:
            s //= 2
            m += 1
        import random as _random
        rng = _random.Random(q)
        while True:
            z = self.random_element(rng)
            if z != self.zero and not self.is_square(z):
                break
        c = self.pow(z, s)
        t = self.pow(a, s)
        r = self.pow(a, (s + 1) // 2)
        while t != self.one:
            t2, i = t, 0
            while t2 != self.one:
                t2 = self.mul(t2, t2)
                i += 1
            b = self.pow(c, 1 << (m - i - 1))
            m = i
            c = self.mul(b, b)
            t = self.mul(t, c)
            r = self.mul(r, b)
        return r


@lru_cache(maxsize=128)
def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over F_p
    (compared by the coefficient tuple (c_0, ..., c_{k-1}))."""
    K = PrimeField(p)
    # c_0 = 0 means x divides the polynomial, so the least irreducible has
    # c_0 >= 1; skipping that block preserves the lex order.  A root in F_p
    # also forces a linear factor (k >= 2 here), so test all p points before
    # the full irreducibility check.
    for c0 in range(1, p):
        for rest in product(range(p), repeat=k - 1):
            poly = (c0,) + rest + (1,)
            if any(_eval_mod(poly, a, p) == 0 for a in range(p)):
                continue
            if _is_irreducible(poly, K):
                return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _eval_mod(poly: tuple[int, ...], a: int, p: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = (acc * a + c) % p
    return acc


def _is_irreducible(poly: tuple[int, ...], K: PrimeField) -> bool:
    """x^{p^i} = x tests: poly (monic, deg k) irreducible over F_p."""
    k = len(poly) - 1
    p = K.p

    def mulmod(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        for i in range(len(out) - 1, k - 1, -1):
            c = out[i]
            if c:
                for j in range(k + 1):
                    out[i - k + j] = (out[i - k + j] - c * poly[j]) % p
        while len(out) > k:
            out.pop()
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def powmod(a, e):
        r = [1]
        while e:
            if e & 1:
                r = mulmod(r, a)
            a = mulmod(a, a)
            e >>= 1
        return r

    def polygcd(a, b):
        a, b = list(a), list(b)
        while len(b) > 1 or b[0] != 0:
            # a mod b, with b made monic on the fly
            inv = pow(b[-1], p - 2, p)
            while len(a) >= len(b) and (len(a) > 1 or a[0] != 0):
                c = a[-1] * inv % p
                off = len(a) - len(b)
                for j, y in enumerate(b):
                    a[off + j] = (a[off + j] - c * y) % p
                while len(a) > 1 and a[-1] == 0:
                    a.pop()
                if len(a) == 1 and a[0] == 0:
                    break
            a, b = b, a
        return a

    x = [0, 1]
    # Rabin's criterion: irreducible iff x^{p^k} = x mod poly and, for every
    # prime r | k, gcd(x^{p^{k/r}} - x, poly) = 1.  The gcd is essential: a
    # product of irreducibles of distinct degrees (e.g. 1*2*3 for k = 6) has
    # x^{p^{k/r}} != x mod poly for each r yet shares a factor with it.
    if powmod(x, p**k) != x:
        return False
    r = 2
    kk = k
    primes = set()
    while r * r <= kk:
        while kk % r == 0:
            primes.add(r)
            kk //= r
        r += 1
    if kk > 1:
        primes.add(kk)
    for r in primes:
        w = powmod(x, p ** (k // r))
        # w - x mod poly
        diff = [0] * max(len(w), 2)
        for i, c in enumerate(w):
            diff[i] = c
        diff[1] = (diff[1] - 1) % p
        while len(diff) > 1 and diff[-1] == 0:
            diff.pop()
        if diff == [0]:
            return False
        g = polygcd(list(poly), diff)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=128)
def GF(p: int, k: int = 1):
    """The field with p^k elements (p an odd prime or 2, k >= 1)."""
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k, _least_irreducible(p, k))
