"""Exact arithmetic in prime fields F_p and extension fields F_{p^m}.

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` are the
coefficients of ``1, a, ..., a^(m-1)`` and ``a`` is a root of the modulus.
The integer layer (``add``, ``mul``, ``mul_row``...) is what the polynomial
code in :mod:`skewbch.funcfield` runs on; :class:`FieldElement` wraps it with
operators for everyday use.
"""

from __future__ import annotations

import itertools
import operator
import random
from typing import Iterator, Sequence

from . import parsing
from .errors import DivisionByZero, ExpressionSyntaxError, FieldMismatch, NotIrreducible

MAX_ORDER = 1 << 16
_FULL_TABLE_LIMIT = 256
_ADD_TABLE_LIMIT = 512
_POWER_DISPLAY_LIMIT = 256


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem_mod_p(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    """Remainder of f by g over F_p (coefficient lists, low degree first)."""
    r = _trim(list(f))
    g = _trim(list(g))
    inv_lc = pow(g[-1], p - 2, p)
    while len(r) >= len(g):
        c = r[-1] * inv_lc % p
        shift = len(r) - len(g)
        for i, gi in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gi) % p
        _trim(r)
    return r


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _poly_rem_mod_p(modulus, list(tail) + [1], p):
                return False
    return True


class GaloisField:
    """The finite field F_p[a]/(modulus(a)) with q = p^m elements.

    Construction validates that ``p`` is prime and that the modulus is monic
    of degree ``m`` and irreducible, then builds exp/log tables.  Two fields
    compare equal when they have the same ``p`` and modulus.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None, name: str = "a"):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            if m != 1:
                raise ValueError("an explicit modulus is required for m > 1")
            modulus = (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus {modulus} is not monic of degree {m}")
        if p**m > MAX_ORDER:
            raise ValueError(f"field order {p}^{m} exceeds the supported {MAX_ORDER}")
        if m > 1 and not _is_irreducible(modulus, p):
            raise NotIrreducible(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.generator_name = name
        self._build_tables()
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    # -- table construction -------------------------------------------------

    def _digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.m):
            v, c = divmod(v, self.p)
            out.append(c)
        return out

    def _from_digits(self, c: Sequence[int]) -> int:
        v = 0
        for x in reversed(c):
            v = v * self.p + x
        return v

    def _mul_slow(self, x: int, y: int) -> int:
        a, b, p = self._digits(x), self._digits(y), self.p
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        rem = _poly_rem_mod_p(prod, self.modulus, p)
        return self._from_digits(rem + [0] * (self.m - len(rem)))

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        # Try the class generator first so that powers of `a` index the log table.
        candidates = ([p] if self.m > 1 else []) + list(range(2 if q > 2 else 1, q))
        for g in candidates:
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_slow(x, g)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise RuntimeError("no primitive element found")
        self._primitive = g
        self.generator_is_primitive = self.m > 1 and g == p
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp + exp
        self._log = log

        if p == 2:
            self.add = operator.xor
            self.sub = operator.xor
            self._neg = list(range(q))
        elif self.m == 1:
            self.add = lambda x, y: (x + y) % p
            self.sub = lambda x, y: (x - y) % p
            self._neg = [(-x) % p for x in range(q)]
        else:
            neg = [self._from_digits([(-c) % p for c in self._digits(x)]) for x in range(q)]
            self._neg = neg
            if q <= _ADD_TABLE_LIMIT:
                digits = [self._digits(x) for x in range(q)]
                table = [
                    [self._from_digits([(u + v) % p for u, v in zip(digits[x], digits[y])]) for y in range(q)]
                    for x in range(q)
                ]
                self.add = lambda x, y: table[x][y]
                self.sub = lambda x, y: table[x][neg[y]]
            else:
                def add(x: int, y: int) -> int:
                    out, scale = 0, 1
                    while x or y:
                        x, cx = divmod(x, p)
                        y, cy = divmod(y, p)
                        out += ((cx + cy) % p) * scale
                        scale *= p
                    return out

                self.add = add
                self.sub = lambda x, y: add(x, neg[y])

        self._rows: dict[int, list[int]] = {}
        if q <= _FULL_TABLE_LIMIT:
            for x in range(q):
                self._rows[x] = self._make_row(x)

    def _make_row(self, x: int) -> list[int]:
        if x == 0:
            return [0] * self.q
        exp, log, lx = self._exp, self._log, self._log[x]
        return [0] + [exp[lx + log[y]] for y in range(1, self.q)]

    # -- integer layer ------------------------------------------------------

    def neg(self, x: int) -> int:
        return self._neg[x]

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def mul_row(self, x: int) -> list[int]:
        """Multiplication table row of ``x``: ``mul_row(x)[y] == mul(x, y)``."""
        row = self._rows.get(x)
        if row is None:
            row = self._rows[x] = self._make_row(x)
        return row

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero in " + repr(self))
        return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]

    def pow_int(self, x: int, e: int) -> int:
        if e == 0:
            return 1
        if x == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    # -- element layer ------------------------------------------------------

    def __call__(self, value: "int | str | FieldElement") -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} does not belong to {self!r}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        raise TypeError(f"cannot convert {type(value).__name__} to a field element")

    @property
    def gen(self) -> "FieldElement":
        """The root ``a`` of the modulus (equal to ``0`` for prime fields)."""
        return FieldElement(self, self.p if self.m > 1 else 0)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.m:
            raise ValueError(f"expected at most {self.m} coefficients")
        return FieldElement(self, self._from_digits(c + [0] * (self.m - len(c))))

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.q):
            yield FieldElement(self, v)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> "FieldElement":
        return FieldElement(self, rng.randrange(1 if nonzero else 0, self.q))

    def parse(self, text: str) -> "FieldElement":
        symbols = {self.generator_name: self.gen} if self.m > 1 else {}
        value = parsing.evaluate(text, symbols, self)
        if not isinstance(value, FieldElement):  # pragma: no cover - evaluate always yields elements
            raise ExpressionSyntaxError(f"{text!r} is not a field element")
        return value

    @property
    def power_display(self) -> bool:
        return self.generator_is_primitive and self.q <= _POWER_DISPLAY_LIMIT

    def render_int(self, v: int, style: str = "coeffs") -> str:
        """Text form of the encoded element ``v``.

        ``style="power"`` writes nonzero, non-unit elements as ``a^k`` when the
        generator is primitive and the field is small; otherwise the
        coefficient form ``c_k*a^k+...+c_0`` is used.
        """
        if v == 0 or self.m == 1:
            return str(v)
        if style == "power" and self.power_display:
            k = self._log[v]
            return "1" if k == 0 else (self.generator_name if k == 1 else f"{self.generator_name}^{k}")
        terms = []
        for i, c in reversed(list(enumerate(self._digits(v)))):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = self.generator_name if i == 1 else f"{self.generator_name}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaloisField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GaloisField({self.p})"
        return f"GaloisField({self.p}, {self.m}, modulus={self.modulus})"

    def spec_line(self) -> str:
        return f"field p={self.p} m={self.m} modulus={','.join(map(str, self.modulus))}"


class FieldElement:
    """An immutable element of a :class:`GaloisField`."""

    __slots__ = ("field", "value")

    def __init__(self, field: GaloisField, value: int):
        if not 0 <= value < field.q:
            raise ValueError(f"encoded value {value} out of range for {field!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.value))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(v, self.field.inv(self.value)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_int(self.value, e))

    def frobenius(self, k: int = 1) -> "FieldElement":
        """``x -> x^(p^k)``."""
        return self ** (self.field.p ** (k % self.field.m))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return self.field.render_int(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.field.render_int(self.value)!r})"


def ff_add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def ff_sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def ff_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def ff_inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def ff_pow(x: FieldElement, e: int) -> FieldElement:
    return x**e


def ff_parse(field: GaloisField, text: str) -> FieldElement:
    return field.parse(text)


def ff_render(x: FieldElement, style: str = "coeffs") -> str:
    return x.field.render_int(x.value, style)


def parse_field_line(line: str) -> GaloisField:
    """Parse ``field p=<prime> m=<int> modulus=<c0,...,cm>``."""
    parts = line.split()
    if not parts or parts[0] != "field":
        raise ExpressionSyntaxError(f"not a field line: {line!r}")
    opts = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep:
            raise ExpressionSyntaxError(f"expected key=value, got {part!r}")
        opts[key] = value
    try:
        p = int(opts.pop("p"))
        m = int(opts.pop("m", "1"))
        modulus = opts.pop("modulus", None)
        coeffs = tuple(int(c) for c in modulus.split(",")) if modulus else None
    except (KeyError, ValueError) as exc:
        raise ExpressionSyntaxError(f"bad field line {line!r}: {exc}") from None
    name = opts.pop("name", "a")
    if opts:
        raise ExpressionSyntaxError(f"unknown field options {sorted(opts)}")
    return GaloisField(p, m, coeffs, name=name)
