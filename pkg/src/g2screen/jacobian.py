"""Jacobian group law on genus-2 curves over small odd-characteristic fields.

This module is a validator: it exists to confirm, by explicit Mumford
arithmetic, that the group order predicted by an L-polynomial actually
annihilates random divisors.  Divisors are Mumford pairs (u, v) with u monic
of degree <= 2, deg v < deg u, and u | v^2 - g, on an odd-degree model
y^2 = g(x) with g a monic quintic.

Any curve with good reduction at an odd prime q admits such a model over a
small extension: complete the square, and if 4f + h^2 has degree 6, move a
root (over F_{q^k} for the least k in {1, 2, 3, 6} that contains one) to
infinity and rescale to a monic quintic.  The group order over F_{q^k} is
the resultant of the Frobenius characteristic polynomial with T^k - 1, so
the validation closes the loop between counting and group structure.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .counting import CountingError, lpolynomial
from .curve import GenusTwoCurve, reduce_mod
from .fields import GF


# ---------------------------------------------------------------------------
# polynomials over a field K: little-endian lists of K elements

def _ptrim(K, a):
    a = list(a)
    while a and a[-1] == K.zero:
        a.pop()
    return a


def _pdeg(a):
    return len(a) - 1


def _padd(K, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.add(x, y))
    return _ptrim(K, out)


def _psub(K, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.sub(x, y))
    return _ptrim(K, out)


def _pmul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x != K.zero:
            for j, y in enumerate(b):
                out[i + j] = K.add(out[i + j], K.mul(x, y))
    return _ptrim(K, out)


def _pscale(K, a, c):
    return _ptrim(K, [K.mul(x, c) for x in a])


def _pdivmod(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    binv = K.inv(b[-1])
    q = [K.zero] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = K.mul(a[i + len(b) - 1], binv)
        if c != K.zero:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = K.sub(a[i + j], K.mul(c, y))
    return _ptrim(K, q), _ptrim(K, a)


def _pmod(K, a, b):
    return _pdivmod(K, a, b)[1]


def _pmonic(K, a):
    if not a:
        return a
    return _pscale(K, a, K.inv(a[-1]))


def _pxgcd(K, a, b):
    """(g, s, t) with g = s*a + t*b, g monic (or empty when a = b = 0)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = _pdivmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(K, s0, _pmul(K, q, s1))
        t0, t1 = t1, _psub(K, t0, _pmul(K, q, t1))
    if r0:
        c = K.inv(r0[-1])
        r0, s0, t0 = _pscale(K, r0, c), _pscale(K, s0, c), _pscale(K, t0, c)
    return r0, s0, t0


def _peval(K, a, x):
    v = K.zero
    for c in reversed(a):
        v = K.add(K.mul(v, x), c)
    return v


def _pshift(K, a, r):
    """Coefficients of a(X + r)."""
    b = list(a)
    n = len(b)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            b[j] = K.add(b[j], K.mul(r, b[j + 1]))
    return b


# ---------------------------------------------------------------------------
# odd-degree models

@dataclass(frozen=True)
class OddModel:
    """y^2 = g(x) with g monic of degree 5 over the field K = F_{q^k}."""

    K: object
    g: tuple
    q: int
    k: int

    def identity(self):
        return ((self.K.one,), ())


class ModelError(ValueError):
    pass


def _monic_quintic(K, c):
    """Rescale y^2 = c(x) (deg 5, little-endian over K) to monic form."""
    lead = c[5]
    if lead == K.zero:
        raise ModelError("not degree 5")
    out = [K.zero] * 6
    out[5] = K.one
    for i in range(5):
        out[i] = K.mul(c[i], K.pow(lead, 4 - i))
    return tuple(out)


def _from_root(K, F, root, q, k) -> OddModel:
    """Move a root of the sextic F (over K) to infinity: G(t) = t^6 F(root + 1/t)."""
    b = _pshift(K, F, root)         # F(root + s); b[0] = 0
    G = list(reversed(b[1:7]))      # coefficient of t^{6-j} is b_j
    G = _ptrim(K, G)
    if _pdeg(G) != 5:
        raise ModelError("unexpected degree after moving root to infinity")
    return OddModel(K, _monic_quintic(K, G), q, k)


def _reduced_sextic(curve: GenusTwoCurve, q: int):
    if q == 2:
        raise ModelError("odd-degree models require odd characteristic")
    cmq = reduce_mod(curve, q)
    if not cmq.good:
        raise ModelError(f"bad reduction at {q}")
    return cmq.F()


def odd_model(curve: GenusTwoCurve, q: int, k: int = 1) -> OddModel | None:
    """An odd-degree model of the reduction at good odd q, over F_{q^k},
    locating a root of 4f+h^2 by scanning the field (small q^k only).

    Returns None when deg(4f+h^2) = 6 and no root exists in F_{q^k}.
    """
    Fint = _reduced_sextic(curve, q)
    K = GF(q, k)
    F = _ptrim(K, [K.from_int(c) for c in Fint])
    if _pdeg(F) == 5:
        return OddModel(K, _monic_quintic(K, F), q, k)
    if q**k > 200_000:
        raise ModelError(f"field of size {q}^{k} too large to scan; "
                         "use smallest_odd_model")
    root = next((x for x in K.elements() if _peval(K, F, x) == K.zero), None)
    if root is None:
        return None
    return _from_root(K, F, root, q, k)


def _min_degree_factor(q: int, Fint) -> tuple[int, list[int]]:
    """(d, w): an irreducible factor w (monic, int coeffs) of minimal degree d
    of the squarefree polynomial Fint over F_q, via distinct-degree splitting."""
    K = GF(q)
    F = _pmonic(K, _ptrim(K, [c % q for c in Fint]))
    x = [0, 1]
    for d in range(1, _pdeg(F) + 1):
        # gcd(F, x^{q^d} - x) collects the factors of degree dividing d;
        # minimality of d makes every factor of the gcd exactly degree d
        xq = _powmod_poly(K, x, q**d, F)
        g, _, _ = _pxgcd(K, _psub(K, xq, x), F)
        if _pdeg(g) < 1:
            continue
        w = g
        rng = random.Random(q * 1_000_003 + d)
        while _pdeg(w) > d:  # Cantor-Zassenhaus equal-degree splitting
            a = [rng.randrange(q) for _ in range(_pdeg(w))]
            a = _ptrim(K, a)
            if _pdeg(a) < 1:
                continue
            b = _psub(K, _powmod_poly(K, a, (q**d - 1) // 2, w), [K.one])
            h, _, _ = _pxgcd(K, b, w)
            if 0 < _pdeg(h) < _pdeg(w):
                other, r = _pdivmod(K, w, h)
                assert not r
                w = h if _pdeg(h) <= _pdeg(other) else other
        return d, w
    raise AssertionError("squarefree polynomial has an irreducible factor")


def _powmod_poly(K, a, e: int, m):
    r = [K.one]
    a = _pmod(K, a, m)
    while e:
        if e & 1:
            r = _pmod(K, _pmul(K, r, a), m)
        a = _pmod(K, _pmul(K, a, a), m)
        e >>= 1
    return r


def smallest_odd_model(curve: GenusTwoCurve, q: int) -> OddModel:
    """Odd-degree model over F_{q^k} for the least possible k.

    For a degree-6 reduction with no rational root, the minimal-degree
    irreducible factor w of 4f+h^2 serves as the extension's modulus, so the
    image of x is a known root and no field scan is needed.  The minimal
    factor degree of a sextic is always one of 1, 2, 3, 6.
    """
    Fint = _reduced_sextic(curve, q)
    K1 = GF(q)
    F1 = _ptrim(K1, [K1.from_int(c) for c in Fint])
    if _pdeg(F1) == 5:
        return OddModel(K1, _monic_quintic(K1, F1), q, 1)
    d, w = _min_degree_factor(q, Fint)
    if d == 1:
        root = K1.neg(w[0])
        return _from_root(K1, F1, root, q, 1)
    from .fields import ExtensionField
    K = ExtensionField(q, d, tuple(w))
    F = _ptrim(K, [K.from_int(c) for c in Fint])
    root = (0, 1) + (0,) * (d - 2)  # the class of x, a root of w | F
    return _from_root(K, F, root, q, d)


# ---------------------------------------------------------------------------
# Mumford arithmetic (Cantor composition and reduction, h = 0)

def is_on_jacobian(model: OddModel, D) -> bool:
    K = model.K
    u, v = [list(x) for x in D]
    if not u or u[-1] != K.one or _pdeg(u) > 2 or _pdeg(v) >= _pdeg(u):
        return False
    rem = _pmod(K, _psub(K, _pmul(K, v, v), list(model.g)), u)
    return not rem


def neg(model: OddModel, D):
    u, v = D
    K = model.K
    return (tuple(u), tuple(K.neg(c) for c in v))


def add(model: OddModel, D1, D2):
    """Cantor composition + reduction of Mumford pairs."""
    K = model.K
    g = list(model.g)
    u1, v1 = [list(x) for x in D1]
    u2, v2 = [list(x) for x in D2]
    if _pdeg(u1) == 0:
        return tuple(tuple(x) for x in D2)
    if _pdeg(u2) == 0:
        return tuple(tuple(x) for x in D1)
    d1, e1, e2 = _pxgcd(K, u1, u2)
    vsum = _padd(K, v1, v2)
    d, c1, c2 = _pxgcd(K, d1, vsum)
    s1 = _pmul(K, c1, e1)
    s2 = _pmul(K, c1, e2)
    s3 = c2
    u, r = _pdivmod(K, _pmul(K, u1, u2), _pmul(K, d, d))
    assert not r
    num = _padd(K, _padd(K, _pmul(K, _pmul(K, s1, u1), v2),
                         _pmul(K, _pmul(K, s2, u2), v1)),
                _pmul(K, s3, _padd(K, _pmul(K, v1, v2), g)))
    vq, vr = _pdivmod(K, num, d)
    assert not vr
    v = _pmod(K, vq, u)
    # reduction to degree <= 2
    while _pdeg(u) > 2:
        unew, r = _pdivmod(K, _psub(K, g, _pmul(K, v, v)), u)
        assert not r
        u = _pmonic(K, unew)
        v = _pmod(K, [K.neg(c) for c in v], u)
    return (tuple(_pmonic(K, u)), tuple(v))


def scalar_mul(model: OddModel, n: int, D):
    if n < 0:
        return scalar_mul(model, -n, neg(model, D))
    acc = model.identity()
    base = tuple(tuple(x) for x in D)
    while n:
        if n & 1:
            acc = add(model, acc, base)
        base = add(model, base, base)
        n >>= 1
    return acc


def random_divisor(model: OddModel, rng: random.Random):
    """A pseudo-random divisor: the sum of up to two random point divisors."""
    K = model.K
    D = model.identity()
    for _ in range(2):
        for _attempt in range(64):
            a = K.random_element(rng)
            y2 = _peval(K, list(model.g), a)
            y = K.sqrt(y2)
            if y is not None:
                if rng.random() < 0.5:
                    y = K.neg(y)
                point = ((K.neg(a), K.one), (y,) if y != K.zero else ())
                D = add(model, D, point)
                break
    return D


def enumerate_jacobian(model: OddModel):
    """All Mumford pairs (small fields only); the identity included."""
    K = model.K
    if K.q > 32:
        raise ModelError(f"enumeration over {K.q} elements is not sensible")
    g = list(model.g)
    out = [model.identity()]
    elements = list(K.elements())
    for a in elements:
        y2 = _peval(K, g, a)
        y = K.sqrt(y2)
        if y is None:
            continue
        u = (K.neg(a), K.one)
        if y == K.zero:
            out.append((u, ()))
        else:
            out.append((u, (y,)))
            out.append((u, (K.neg(y),)))
    for u0 in elements:
        for u1 in elements:
            u = [u0, u1, K.one]
            for w0 in elements:
                for w1 in elements:
                    v = _ptrim(K, [w0, w1])
                    if _pdeg(v) >= 2:
                        continue
                    diff = _psub(K, _pmul(K, v, v), g)
                    if not _pmod(K, diff, u):
                        out.append((tuple(u), tuple(v)))
    return out


def verify_group_order(curve: GenusTwoCurve, q: int, trials: int = 5,
                       rng: random.Random | None = None) -> int:
    """Check that the L-polynomial's predicted order annihilates random
    divisors over the field of the smallest odd-degree model.

    Returns the extension degree k used.  Raises CountingError for bad q,
    AssertionError on an annihilation failure (which would mean the counting
    and the group law disagree).
    """
    rng = rng or random.Random(0)
    model = smallest_odd_model(curve, q)
    L = lpolynomial(curve, q)
    N = L.jacobian_order(model.k)
    for _ in range(trials):
        D = random_divisor(model, rng)
        assert is_on_jacobian(model, D)
        assert scalar_mul(model, N, D) == model.identity(), \
            f"order {N} fails to annihilate at q={q}, k={model.k}"
    return model.k
