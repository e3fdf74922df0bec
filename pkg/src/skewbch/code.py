"""Skew BCH convolutional codes: construction, encoding, parity checks.

A code is the left ideal of K[x;σ]/<x^n - 1> generated by
``g = lclm{x - σ^{r+i}(β) : 0 <= i <= δ-2}`` where ``β = σ(α)/α`` and α
generates a normal basis.  Words are coordinate vectors over 1, x, ..., x^{n-1}.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass
from typing import Any, Sequence

from . import linalg
from .errors import (
    BadDelta,
    ExpressionSyntaxError,
    LengthMismatch,
    NotNormalBasis,
    SearchExhausted,
    SpecValidationError,
    TooManyMinors,
)
from .funcfield import SigmaField, is_normal_basis, norms, parse_sigma_line
from .galois import parse_field_line
from .skew import SkewPoly, SkewPolyRing, lclm_many, left_divide, right_eval


@dataclass(frozen=True)
class Word:
    """A length-n coordinate vector; ``coeffs[i]`` multiplies x^i."""

    coeffs: tuple

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other: "Word") -> "Word":
        if len(other) != len(self):
            raise LengthMismatch(f"cannot add words of lengths {len(self)} and {len(other)}")
        return Word(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Word") -> "Word":
        if len(other) != len(self):
            raise LengthMismatch(f"cannot subtract words of lengths {len(self)} and {len(other)}")
        return Word(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def to_poly(self, ring: SkewPolyRing) -> SkewPoly:
        return SkewPoly(ring, self.coeffs)

    @classmethod
    def from_poly(cls, poly: SkewPoly, n: int) -> "Word":
        if len(poly.coeffs) > n:
            raise LengthMismatch(f"polynomial of degree {poly.degree} does not fit in length {n}")
        zero = poly.field.zero
        return cls(tuple(poly.coeffs) + (zero,) * (n - len(poly.coeffs)))

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def render(self, sigma_field: SigmaField | None = None) -> str:
        if sigma_field is None:
            return ",".join(str(c) for c in self.coeffs)
        return ",".join(sigma_field.render(c) for c in self.coeffs)


def parse_word(sigma_field: SigmaField, text: str, n: int | None = None) -> Word:
    """Comma-separated elements in coordinate order 0..n-1."""
    items = [s.strip() for s in text.strip().split(",")]
    if any(not s for s in items):
        raise ExpressionSyntaxError(f"empty coordinate in word {text!r}")
    word = Word(tuple(sigma_field.parse(s) for s in items))
    if n is not None and len(word) != n:
        raise LengthMismatch(f"word has {len(word)} coordinates, expected {n}")
    return word


@dataclass(frozen=True, eq=False)
class CodeSpec:
    sigma_field: SigmaField
    ring: SkewPolyRing
    alpha: Any
    beta: Any
    r: int
    delta: int
    n: int
    k: int
    tau: int
    generator: SkewPoly

    @property
    def shifted_alpha(self):
        """α' = σ^r(α); the decoder works with it so formulas keep their r = 0 shape."""
        return self.sigma_field.sigma(self.alpha, self.r)

    @property
    def shifted_beta(self):
        return self.sigma_field.sigma(self.beta, self.r)

    def root(self, i: int):
        """σ^{r+i}(β)."""
        return self.sigma_field.sigma(self.beta, self.r + i)

    def zero_word(self) -> Word:
        return Word((self.sigma_field.zero,) * self.n)

    def summary(self) -> str:
        return f"n={self.n} k={self.k} delta={self.delta} tau={self.tau}"


def conjugate_factors(sigma_field: SigmaField, ring: SkewPolyRing, beta, indices) -> list[SkewPoly]:
    return [ring.linear(-sigma_field.sigma(beta, i)) for i in indices]


def build_code(sigma_field: SigmaField, alpha, r: int = 0, delta: int = 2, verify: bool = True) -> CodeSpec:
    """Construct the skew BCH code of designed distance ``delta``.

    With ``verify`` the structural invariants are re-checked: the generator
    has degree δ-1, each σ^{r+i}(β) is a right root, and the lclm of all n
    conjugate factors is x^n - 1.
    """
    alpha = sigma_field(alpha)
    n = sigma_field.order
    if not 2 <= delta <= n:
        raise BadDelta(f"designed distance must satisfy 2 <= delta <= n = {n}, got {delta}")
    if r < 0:
        raise BadDelta(f"starting index must be >= 0, got {r}")
    if not is_normal_basis(sigma_field, alpha):
        raise NotNormalBasis(f"alpha = {sigma_field.render(alpha)} does not generate a normal basis")
    ring = SkewPolyRing(sigma_field)
    beta = sigma_field.sigma(alpha) / alpha
    generator = lclm_many(conjugate_factors(sigma_field, ring, beta, range(r, r + delta - 1)))
    spec = CodeSpec(
        sigma_field=sigma_field,
        ring=ring,
        alpha=alpha,
        beta=beta,
        r=r,
        delta=delta,
        n=n,
        k=n - delta + 1,
        tau=(delta - 1) // 2,
        generator=generator,
    )
    if verify:
        _verify(spec)
    return spec


def _verify(spec: CodeSpec) -> None:
    g = spec.generator
    if g.degree != spec.delta - 1:
        raise SpecValidationError(f"generator has degree {g.degree}, expected {spec.delta - 1}")
    for i in range(spec.delta - 1):
        if right_eval(g, spec.root(i)):
            raise SpecValidationError(f"sigma^{spec.r + i}(beta) is not a right root of the generator")
    full = lclm_many(conjugate_factors(spec.sigma_field, spec.ring, spec.beta, range(spec.n)))
    expected = spec.ring.monomial(1, spec.n) - spec.ring.one
    if full != expected:
        raise SpecValidationError("lclm of all conjugate factors is not x^n - 1")


def random_normal_alpha(sigma_field: SigmaField, degree_bound: int, rng: random.Random, max_attempts: int = 500):
    """Sample α with numerator/denominator degree <= ``degree_bound`` generating a normal basis."""
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    for _ in range(max_attempts):
        alpha = sigma_field.random_element(rng, degree_bound, nonzero=True)
        if is_normal_basis(sigma_field, alpha):
            return alpha
    raise SearchExhausted(f"no normal-basis generator found in {max_attempts} attempts")


def encode(spec: CodeSpec, message: Sequence[Any]) -> Word:
    """Coefficients of (sum u_i x^i) * g; no reduction modulo x^n - 1 is needed."""
    if len(message) != spec.k:
        raise LengthMismatch(f"message has {len(message)} symbols, expected k = {spec.k}")
    u = spec.ring([spec.sigma_field(m) for m in message])
    return Word.from_poly(u * spec.generator, spec.n)


def message_of(spec: CodeSpec, word: Word) -> tuple:
    """Inverse of :func:`encode` for codewords (left quotient by g)."""
    q, rem = left_divide(word.to_poly(spec.ring), spec.generator)
    if rem:
        raise SpecValidationError("word is not a codeword")
    return tuple(q[i] for i in range(spec.k))


def is_codeword(spec: CodeSpec, word: Word) -> bool:
    y = word.to_poly(spec.ring)
    return all(not right_eval(y, spec.root(i)) for i in range(spec.delta - 1))


def parity_check_matrix(spec: CodeSpec) -> list[list]:
    """n x (δ-1) matrix with entry (i, j) = N_i(σ^{r+j}(β))."""
    columns = [norms(spec.sigma_field, spec.root(j), spec.n) for j in range(spec.delta - 1)]
    return [[col[i] for col in columns] for i in range(spec.n)]


def verify_designed_distance(spec: CodeSpec, matrix: Sequence[Sequence[Any]] | None = None, max_minors: int = 20000) -> bool:
    """True iff every (δ-1)-row minor of the parity-check matrix is nonzero."""
    H = parity_check_matrix(spec) if matrix is None else [list(row) for row in matrix]
    size = spec.delta - 1
    total = math.comb(len(H), size)
    if total > max_minors:
        raise TooManyMinors(f"{total} minors exceed the cap of {max_minors}")
    for rows in itertools.combinations(range(len(H)), size):
        if not linalg.det([H[i] for i in rows]):
            return False
    return True


# -- code-spec files ------------------------------------------------------------

_KV = re.compile(r"(\w+)=(\S+)")


def parse_code_spec(text: str, verify: bool = True) -> CodeSpec:
    """Parse the three-line ``field`` / ``sigma`` / ``code`` format."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    by_kind: dict[str, str] = {}
    for ln in lines:
        kind = ln.split(None, 1)[0]
        if kind in by_kind:
            raise ExpressionSyntaxError(f"duplicate {kind!r} line")
        by_kind[kind] = ln
    missing = {"field", "sigma", "code"} - by_kind.keys()
    if missing:
        raise ExpressionSyntaxError(f"code spec is missing {sorted(missing)} line(s)")
    extra = by_kind.keys() - {"field", "sigma", "code"}
    if extra:
        raise ExpressionSyntaxError(f"unknown line kind(s) {sorted(extra)}")
    base = parse_field_line(by_kind["field"])
    sigma_field = parse_sigma_line(base, by_kind["sigma"])
    opts = dict(_KV.findall(by_kind["code"]))
    try:
        alpha = sigma_field.parse(opts["alpha"])
        delta = int(opts["delta"])
        r = int(opts.get("r", "0"))
    except KeyError as exc:
        raise ExpressionSyntaxError(f"code line is missing {exc.args[0]!r}") from None
    except ValueError as exc:
        raise ExpressionSyntaxError(f"bad code line: {exc}") from None
    return build_code(sigma_field, alpha, r=r, delta=delta, verify=verify)


def render_code_spec(spec: CodeSpec) -> str:
    lines = spec.sigma_field.spec_lines()
    lines.append(f"code alpha={spec.sigma_field.render(spec.alpha)} r={spec.r} delta={spec.delta}")
    return "\n".join(lines) + "\n"
