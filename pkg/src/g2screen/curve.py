"""Genus-2 curve models y^2 + h(x)*y = f(x) over Z.

A model is valid when deg(4f + h^2) is 5 or 6 and its discriminant is
nonzero.  The discriminant used throughout is the integral model
discriminant

    Delta(f, h) = 2^-12 * disc6(4f + h^2),

where disc6 is the discriminant of a binary sextic: for c6 != 0 it is
-Res(F, F')/c6, and for c6 = 0 (degree 5) it degenerates to
c5^2 * disc5(F) = c5 * Res(F, F').  This normalization agrees with the
common computer-algebra convention for y^2 = F(x) (disc = 2^8 * disc6(F))
and is pinned by the test fixture |Delta| = 2^16 * 5^3 for
y^2 = 2x^5 - 8x^4 + 26x^2 - 7x - 26.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache


class CurveError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer polynomial helpers (little-endian coefficient tuples)

def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_degree(c) -> int:
    """Degree of a trimmed coefficient tuple; -1 for the zero polynomial."""
    return len(_trim(c)) - 1


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_scale(a, k):
    return _trim([k * x for x in a])


def _det_bareiss(rows) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(a, b) -> int:
    """Resultant of two integer polynomials via the Sylvester determinant."""
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    n = da + db
    rows = []
    ra = list(reversed(a))
    rb = list(reversed(b))
    for i in range(db):
        rows.append([0] * i + ra + [0] * (n - da - 1 - i))
    for i in range(da):
        rows.append([0] * i + rb + [0] * (n - db - 1 - i))
    return _det_bareiss(rows)


def poly_derivative(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def _disc6(F) -> int:
    """Discriminant of F as a binary form of degree 6 (deg F in {5, 6})."""
    F = _trim(F)
    d = len(F) - 1
    if d == 6:
        r = resultant(F, poly_derivative(F))
        q, rem = divmod(-r, F[6])
        assert rem == 0
        return q
    if d == 5:
        return F[5] * resultant(F, poly_derivative(F))
    return 0


@lru_cache(maxsize=4096)
def _model_discriminant(f: tuple, h: tuple) -> int:
    F = poly_add(poly_scale(f, 4), poly_mul(h, h))
    d6 = _disc6(F)
    q, rem = divmod(d6, 1 << 12)
    if rem:
        raise CurveError("discriminant normalization failed (non-integral)")
    return q


# ---------------------------------------------------------------------------
# the curve type

@dataclass(frozen=True)
class GenusTwoCurve:
    """y^2 + h(x)*y = f(x), coefficients little-endian, deg f <= 6, deg h <= 3."""

    f: tuple[int, ...]
    h: tuple[int, ...] = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "f", _trim(self.f))
        object.__setattr__(self, "h", _trim(self.h))
        if len(self.f) > 7:
            raise CurveError(f"deg f = {len(self.f) - 1} > 6")
        if len(self.h) > 4:
            raise CurveError(f"deg h = {len(self.h) - 1} > 3")
        F = self.F()
        if poly_degree(F) not in (5, 6):
            raise CurveError(f"deg(4f + h^2) = {poly_degree(F)}, need 5 or 6 (not genus 2)")
        if self.discriminant() == 0:
            raise CurveError("zero discriminant (singular model)")

    def F(self) -> tuple[int, ...]:
        """4f + h^2, the completed-square right-hand side."""
        return poly_add(poly_scale(self.f, 4), poly_mul(self.h, self.h))

    def discriminant(self) -> int:
        return _model_discriminant(self.f, self.h)

    def with_label(self, label: str) -> "GenusTwoCurve":
        return GenusTwoCurve(self.f, self.h, label)


def discriminant(curve: GenusTwoCurve) -> int:
    return curve.discriminant()


@dataclass(frozen=True)
class CurveModQ:
    """Coefficientwise reduction of a curve at a prime q, with a goodness flag."""

    q: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    good: bool

    def F(self) -> tuple[int, ...]:
        Fc = poly_add(poly_scale(self.f, 4), poly_mul(self.h, self.h))
        return _trim([c % self.q for c in Fc])


def reduce_mod(curve: GenusTwoCurve, q: int) -> CurveModQ:
    fbar = _trim([c % q for c in curve.f])
    hbar = _trim([c % q for c in curve.h])
    return CurveModQ(q, fbar, hbar, good=curve.discriminant() % q != 0)


# ---------------------------------------------------------------------------
# quadratic twists

def _is_squarefree_small(d: int) -> bool:
    d = abs(d)
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def twist(curve: GenusTwoCurve, d: int) -> GenusTwoCurve:
    """Quadratic twist by squarefree d: y^2 = d*f, or y^2 = d*(4f+h^2) when h != 0."""
    if d == 0 or not _is_squarefree_small(d):
        raise CurveError(f"twist parameter {d} is not a nonzero squarefree integer")
    base = curve.f if not curve.h else curve.F()
    return GenusTwoCurve(poly_scale(base, d), (), curve.label and f"{curve.label}_twist{d}")


# ---------------------------------------------------------------------------
# parsing and rendering

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*\*?\s*(?P<var1>x)(?:\s*\^\s*(?P<exp1>\d+))?
          | (?P<var2>x)(?:\s*\^\s*(?P<exp2>\d+))?
          | (?P<const>\d+)
        )\s*""",
    re.VERBOSE,
)


def _parse_poly(text: str) -> tuple[int, ...]:
    text = text.strip().replace("**", "^")
    if not text:
        raise CurveError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise CurveError(f"cannot parse polynomial near {text[pos:pos+20]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise CurveError(f"missing +/- near {text[pos:pos+20]!r}")
        s = -1 if sign == "-" else 1
        if m.group("const") is not None:
            coeffs[0] = coeffs.get(0, 0) + s * int(m.group("const"))
        else:
            e = m.group("exp1") or m.group("exp2")
            e = int(e) if e else 1
            c = int(m.group("coef")) if m.group("coef") else 1
            coeffs[e] = coeffs.get(e, 0) + s * c
        pos = m.end()
        first = False
    deg = max(coeffs)
    return _trim([coeffs.get(i, 0) for i in range(deg + 1)])


_LHS_RE = re.compile(
    r"""^\s*y\s*\^\s*2\s*
        (?P<hy>\+\s*(?P<h>.*?)\s*\*?\s*y)?\s*$""",
    re.VERBOSE | re.IGNORECASE,
)


def parse_curve(text: str, label: str = "") -> GenusTwoCurve:
    """Parse 'y^2 = f(x)' or 'y^2 + h(x)*y = f(x)' (h may be parenthesized)."""
    if ";" in text:
        return parse_curve_line(text)
    text = text.strip().replace("**", "^")
    if text.count("=") != 1:
        raise CurveError(f"expected exactly one '=' in {text!r}")
    lhs, rhs = text.split("=")
    m = _LHS_RE.match(lhs)
    if not m:
        raise CurveError(f"left side {lhs.strip()!r} is not y^2 [+ h(x) y]")
    h: tuple[int, ...] = ()
    if m.group("hy") is not None:
        htxt = m.group("h").strip()
        if htxt.startswith("(") and htxt.endswith(")"):
            htxt = htxt[1:-1]
        h = _parse_poly(htxt) if htxt else (1,)
    return GenusTwoCurve(_parse_poly(rhs), h, label)


def parse_curve_line(line: str) -> GenusTwoCurve:
    """Parse the list-file format 'label;f0,f1,...,f6;h0,h1,h2,h3'."""
    parts = line.strip().split(";")
    if len(parts) not in (2, 3):
        raise CurveError(f"expected 2 or 3 ';'-separated fields, got {len(parts)}")
    label = parts[0].strip()
    try:
        f = tuple(int(t) for t in parts[1].split(",") if t.strip() != "")
        h = tuple(int(t) for t in parts[2].split(",") if t.strip() != "") if len(parts) == 3 else ()
    except ValueError as e:
        raise CurveError(f"bad coefficient in {line!r}: {e}") from None
    if len(f) > 7 or len(h) > 4:
        raise CurveError("too many coefficients")
    return GenusTwoCurve(f, h, label)


def _render_poly(c: tuple[int, ...]) -> str:
    if not c:
        return "0"
    parts = []
    for i in range(len(c) - 1, -1, -1):
        a = c[i]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = "x" if mag == 1 else f"{mag}x"
        else:
            body = f"x^{i}" if mag == 1 else f"{mag}x^{i}"
        parts.append((sign, body))
    out = ""
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out = ("-" if sign == "-" else "") + body
        else:
            out += f" {sign} {body}"
    return out


def render_curve(curve: GenusTwoCurve) -> str:
    if not curve.h:
        return f"y^2 = {_render_poly(curve.f)}"
    htxt = _render_poly(curve.h)
    if htxt == "1":
        return f"y^2 + y = {_render_poly(curve.f)}"
    if " " in htxt or htxt.startswith("-"):
        htxt = f"({htxt})"
    return f"y^2 + {htxt}y = {_render_poly(curve.f)}"


def curve_to_line(curve: GenusTwoCurve) -> str:
    f = ",".join(str(c) for c in curve.f)
    if curve.h:
        return f"{curve.label};{f};{','.join(str(c) for c in curve.h)}"
    return f"{curve.label};{f}"
