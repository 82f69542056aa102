"""Real quadratic fields: Kronecker symbols, fundamental discriminants,
and the candidate discriminants allowed by a curve's model discriminant.

A mod-p representation induced from Q(sqrt(D)) forces the quadratic
character chi_D to ramify only within the bad primes of the curve, and the
screen only considers fields unramified at p.  Candidate enumeration
therefore walks the squarefree divisors assembled from the model
discriminant's odd prime support, attaching the 2-part that fundamentality
requires (1, 4, or 8) only when the model discriminant's 2-adic valuation
permits it.
"""
from __future__ import annotations

import random
from functools import lru_cache


class FactorizationError(ValueError):
    """The integer could not be fully factored with certified primality."""


# ---------------------------------------------------------------------------
# primality and factorization

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Miller-Rabin with these bases is a deterministic primality test for all
# n < 3,317,044,064,679,887,385,961,981 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_SPLIT_LIMIT = 1 << 64


def is_prime(n: int) -> bool:
    """Certified primality for n < ~3.3e24; raises above that."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise FactorizationError(f"cannot certify primality of {n} (>= 3.3e24)")
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    from math import gcd
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: e} of |n|, n != 0.

    Certified: trial division, then deterministic Miller-Rabin, with
    Pollard-Brent splitting reserved for composites below 2^64.  Raises
    FactorizationError when a remaining part cannot be handled.
    """
    if n == 0:
        raise ValueError("0 has no factorization")
    n = abs(n)
    out: dict[int, int] = {}
    for p in range(2, 100_000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return dict(sorted(out.items()))
    stack = [n]
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if is_prime(m):  # may raise for m >= 3.3e24
            out[m] = out.get(m, 0) + 1
            continue
        if m > _SPLIT_LIMIT:
            raise FactorizationError(f"composite part {m} exceeds 2^64")
        d = _pollard_brent(m, rng)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


@lru_cache(maxsize=64)
def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes <= bound (simple sieve)."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, b in enumerate(sieve) if b)


# ---------------------------------------------------------------------------
# Kronecker symbol and fundamental discriminants

def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n), fully general."""
    if n == 0:
        return 1 if D in (1, -1) else 0
    if D % 2 == 0 and n % 2 == 0:
        return 0
    sign = 1
    if n < 0:
        n = -n
        if D < 0:
            sign = -sign
    # peel the 2-part of n:  (D/2) depends on D mod 8
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if D % 8 in (3, 5):
            if t % 2:
                sign = -sign
        elif D % 8 not in (1, 7):  # even D: symbol vanishes
            return 0
    a = D % n
    # now n odd positive; standard Jacobi with reciprocity
    while a != 0:
        t = 0
        while a % 2 == 0:
            a //= 2
            t += 1
        if t % 2 and n % 8 in (3, 5):
            sign = -sign
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a, n = n % a, a
    return sign if n == 1 else 0


def is_fundamental(D: int) -> bool:
    """Whether D is a fundamental quadratic discriminant (either sign, D != 1)."""
    if D == 1 or D == 0:
        return False

    def squarefree(m):
        return all(e == 1 for e in factorize(m).values())

    if D % 4 == 1:
        return squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def candidate_discriminants(delta: int, p: int,
                            factors: dict[int, int] | None = None) -> list[int]:
    """Fundamental discriminants D > 1 of real quadratic fields that a curve
    with model discriminant delta can possibly induce from, at the prime p.

    Rules: D ramifies only at primes dividing 2*delta; the odd part of D is a
    squarefree product S of odd primes dividing delta; the 2-part of D (4 when
    S = 3 mod 4, or 8) requires the matching power of 2 inside delta itself
    (v_2 >= 2, resp. >= 3); and p must not divide D.
    """
    if delta == 0:
        raise ValueError("zero discriminant")
    if factors is None:
        factors = factorize(delta)
    v2 = factors.get(2, 0)
    odd = [q for q in factors if q != 2]
    cands: set[int] = set()
    for mask in range(1 << len(odd)):
        S = 1
        for i, q in enumerate(odd):
            if mask >> i & 1:
                S *= q
        if S > 1 and S % 4 == 1:
            cands.add(S)
        if S % 4 == 3 and v2 >= 2:
            cands.add(4 * S)
        if v2 >= 3:
            cands.add(8 * S)
    return sorted(D for D in cands if D % p != 0)


def inert_primes(D: int, bound: int) -> list[int]:
    """Primes q <= bound with chi_D(q) = -1 (inert in Q(sqrt(D)))."""
    return [q for q in primes_up_to(bound) if kronecker(D, q) == -1]
