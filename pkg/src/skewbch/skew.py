"""The Ore ring K[x; σ] over any :class:`~skewbch.funcfield.SigmaField`.

Coefficients are written on the left and ``x * c == σ(c) * x``.  Division
naming follows Jacobson: *right division* of f by g gives ``f = g*q + r``
(g on the left), *left division* gives ``f = q*g + r``.  Consequently the
REEA accumulates right quotients and ends at the greatest common left
divisor, while the LEEA ends at the greatest common right divisor.

The zero polynomial has degree ``-math.inf``.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Any, Iterable, NamedTuple, Sequence

from . import parsing
from .errors import DivisionByZero, FieldMismatch
from .funcfield import SigmaField, negative_norms, norms


class SkewPolyRing:
    """K[x; σ] for a given sigma field; builds, parses and renders elements."""

    def __init__(self, sigma_field: SigmaField, var: str = "x"):
        self.field = sigma_field
        self.var = var
        self.zero = SkewPoly(self, ())
        self.one = SkewPoly(self, (sigma_field.one,))
        self.x = SkewPoly(self, (sigma_field.zero, sigma_field.one))

    def __call__(self, value: Any) -> "SkewPoly":
        if isinstance(value, SkewPoly):
            if value.ring != self:
                raise FieldMismatch("skew polynomial from a different ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (list, tuple)):
            return SkewPoly(self, tuple(self.field(c) for c in value))
        return SkewPoly(self, (self.field(value),))

    def linear(self, constant: Any, x_coeff: Any = 1) -> "SkewPoly":
        """``x_coeff * x + constant``."""
        return SkewPoly(self, (self.field(constant), self.field(x_coeff)))

    def monomial(self, coeff: Any, degree: int) -> "SkewPoly":
        zero = self.field.zero
        return SkewPoly(self, (zero,) * degree + (self.field(coeff),))

    def parse(self, text: str) -> "SkewPoly":
        symbols = dict(self.field.symbols())
        symbols[self.var] = self.x
        value = parsing.evaluate(text, symbols, self.field)
        return value if isinstance(value, SkewPoly) else self(value)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewPolyRing) and self.field is other.field and self.var == other.var

    def __hash__(self) -> int:
        return hash((id(self.field), self.var))

    def __repr__(self) -> str:
        return f"SkewPolyRing({self.field!r}, var={self.var!r})"


def _trim(c: Sequence[Any]) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _atomic(text: str) -> bool:
    return all(ch.isalnum() or ch in "^" for ch in text)


class SkewPoly:
    """An immutable skew polynomial; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewPolyRing, coeffs: Sequence[Any]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("SkewPoly is immutable")

    @property
    def field(self) -> SigmaField:
        return self.ring.field

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _coerce(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise FieldMismatch("skew polynomials from different rings")
            return other
        try:
            return SkewPoly(self.ring, (self.field(other),))
        except (TypeError, FieldMismatch):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = out[i] + bi
        return SkewPoly(self.ring, out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return SkewPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sp_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sp_mul(other, self)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of skew polynomials are undefined")
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewPoly):
            return self.coeffs == other.coeffs and self.ring == other.ring
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self == other

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        var = self.ring.var
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            text = self.field.render(c)
            if i == 0:
                terms.append(text if _atomic(text) else f"({text})")
                continue
            mono = var if i == 1 else f"{var}^{i}"
            if c == self.field.one:
                terms.append(mono)
            else:
                terms.append(f"{text if _atomic(text) else f'({text})'}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"SkewPoly({str(self)!r})"


def sp_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """(a x^i)(b x^j) = a σ^i(b) x^{i+j}, extended bilinearly."""
    if f.ring is not g.ring and f.ring != g.ring:
        raise FieldMismatch("skew polynomials from different rings")
    if not f.coeffs or not g.coeffs:
        return f.ring.zero
    K = f.field
    zero = K.zero
    out = [zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = out[i + j] + a * K.sigma(b, i)
    return SkewPoly(f.ring, out)


def _shifted_times(g: SkewPoly, a, d: int) -> list:
    """Coefficients of g * (a x^d) = sum g_i σ^i(a) x^{i+d}."""
    K = g.field
    return [K.zero] * d + [gi * K.sigma(a, i) if gi else gi for i, gi in enumerate(g.coeffs)]


def _times_shifted(a, d: int, g: SkewPoly, cache: dict[int, list]) -> list:
    """Coefficients of (a x^d) * g = sum a σ^d(g_i) x^{i+d}."""
    K = g.field
    conj = cache.get(d)
    if conj is None:
        conj = cache[d] = [K.sigma(gi, d) if gi else gi for gi in g.coeffs]
    return [K.zero] * d + [a * c if c else c for c in conj]


def _subtract_into(r: list, s: list) -> None:
    for i, si in enumerate(s):
        if si:
            r[i] = r[i] - si
    while r and not r[-1]:
        r.pop()


def right_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with ``f = g*q + r`` and ``deg r < deg g``."""
    if not g:
        raise DivisionByZero("right division by the zero skew polynomial")
    K = f.field
    dg = len(g.coeffs) - 1
    inv_lc = 1 / g.lc
    r = list(f.coeffs)
    q = [K.zero] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg:
        d = len(r) - 1 - dg
        a = K.sigma(inv_lc * r[-1], -dg)
        q[d] = a
        _subtract_into(r, _shifted_times(g, a, d))
    return SkewPoly(f.ring, q), SkewPoly(f.ring, r)


def left_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(q, r) with ``f = q*g + r`` and ``deg r < deg g``."""
    if not g:
        raise DivisionByZero("left division by the zero skew polynomial")
    K = f.field
    dg = len(g.coeffs) - 1
    r = list(f.coeffs)
    q = [K.zero] * max(len(r) - dg, 0)
    cache: dict[int, list] = {}
    while len(r) - 1 >= dg:
        d = len(r) - 1 - dg
        a = r[-1] / K.sigma(g.lc, d)
        q[d] = a
        _subtract_into(r, _times_shifted(a, d, g, cache))
    return SkewPoly(f.ring, q), SkewPoly(f.ring, r)


def rquot(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return right_divide(f, g)[0]


def rrem(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return right_divide(f, g)[1]


def lquot(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return left_divide(f, g)[0]


def lrem(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return left_divide(f, g)[1]


class BezoutRow(NamedTuple):
    u: SkewPoly
    v: SkewPoly
    r: SkewPoly


def reea(f: SkewPoly, g: SkewPoly, stop_below: int | None = None) -> list[BezoutRow]:
    """Right extended Euclidean algorithm.

    Returns rows ``(u_i, v_i, r_i)`` for i = 0..h+1 with ``f*u_i + g*v_i == r_i``,
    where ``r_h`` is a greatest common left divisor and ``r_{h+1} == 0``.
    With ``stop_below`` the run ends at the first row whose remainder has
    degree below that bound.
    """
    if not f or not g:
        raise DivisionByZero("REEA needs two nonzero polynomials")
    ring = f.ring
    rows = [BezoutRow(ring.one, ring.zero, f), BezoutRow(ring.zero, ring.one, g)]
    while rows[-1].r:
        prev, cur = rows[-2], rows[-1]
        if stop_below is not None and cur.r.degree < stop_below:
            break
        q, rem = right_divide(prev.r, cur.r)
        rows.append(BezoutRow(prev.u - cur.u * q, prev.v - cur.v * q, rem))
    return rows


def leea(f: SkewPoly, g: SkewPoly) -> list[BezoutRow]:
    """Left extended Euclidean algorithm: rows with ``u_i*f + v_i*g == r_i``.

    ``r_h`` is a greatest common right divisor and ``u_{h+1}*f`` is a least
    common left multiple.
    """
    if not f or not g:
        raise DivisionByZero("LEEA needs two nonzero polynomials")
    ring = f.ring
    rows = [BezoutRow(ring.one, ring.zero, f), BezoutRow(ring.zero, ring.one, g)]
    while rows[-1].r:
        prev, cur = rows[-2], rows[-1]
        q, rem = left_divide(prev.r, cur.r)
        rows.append(BezoutRow(prev.u - q * cur.u, prev.v - q * cur.v, rem))
    return rows


def monic_normalize(f: SkewPoly) -> SkewPoly:
    """The left associate ``lc(f)^{-1} * f``."""
    if not f:
        raise DivisionByZero("cannot normalize the zero polynomial")
    inv = 1 / f.lc
    return SkewPoly(f.ring, [inv * c for c in f.coeffs])


def monic_right(f: SkewPoly) -> SkewPoly:
    """The right associate ``f * c`` with leading coefficient 1."""
    if not f:
        raise DivisionByZero("cannot normalize the zero polynomial")
    K = f.field
    c = K.sigma(1 / f.lc, -(len(f.coeffs) - 1))
    return SkewPoly(f.ring, [fi * K.sigma(c, i) for i, fi in enumerate(f.coeffs)])


def gcrd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    if not f and not g:
        raise DivisionByZero("gcrd of two zero polynomials")
    if not f or not g:
        return monic_normalize(f or g)
    return monic_normalize(leea(f, g)[-2].r)


def gcld(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    if not f and not g:
        raise DivisionByZero("gcld of two zero polynomials")
    if not f or not g:
        return monic_right(f or g)
    return monic_right(reea(f, g)[-2].r)


def lclm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic least common left multiple (f and g are right divisors of it)."""
    if not f and not g:
        raise DivisionByZero("lclm of two zero polynomials")
    if not f or not g:
        return f.ring.zero
    return monic_normalize(leea(f, g)[-1].u * f)


def lcrm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic least common right multiple (f and g are left divisors of it)."""
    if not f and not g:
        raise DivisionByZero("lcrm of two zero polynomials")
    if not f or not g:
        return f.ring.zero
    return monic_right(f * reea(f, g)[-1].u)


def lclm_many(factors: Iterable[SkewPoly]) -> SkewPoly:
    factors = list(factors)
    if not factors:
        raise ValueError("lclm of an empty family")
    return reduce(lclm, factors[1:], monic_normalize(factors[0]))


def lcrm_many(factors: Iterable[SkewPoly]) -> SkewPoly:
    factors = list(factors)
    if not factors:
        raise ValueError("lcrm of an empty family")
    return reduce(lcrm, factors[1:], monic_right(factors[0]))


def right_eval(f: SkewPoly, gamma) -> Any:
    """Remainder of the left division of f by x - γ: sum f_i N_i(γ)."""
    K = f.field
    acc = K.zero
    for fi, n in zip(f.coeffs, norms(K, gamma, len(f.coeffs))):
        if fi:
            acc = acc + fi * n
    return acc


def left_eval(f: SkewPoly, gamma) -> Any:
    """Remainder of the right division of f by x - γ: sum σ^{-i}(f_i) N_{-i}(γ)."""
    K = f.field
    acc = K.zero
    for i, (fi, n) in enumerate(zip(f.coeffs, negative_norms(K, gamma, len(f.coeffs)))):
        if fi:
            acc = acc + K.sigma(fi, -i) * n
    return acc


def is_right_root(f: SkewPoly, gamma) -> bool:
    return not right_eval(f, gamma)


def is_left_root(f: SkewPoly, gamma) -> bool:
    return not left_eval(f, gamma)
