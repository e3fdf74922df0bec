"""Sugiyama-like decoding of skew BCH convolutional codes.

Pipeline: syndromes -> REEA on (x^{2τ}, S) -> error positions from the left
roots of v_I -> (if v_I is only a proper left divisor of the locator) the
failure solver -> error values from a linear system -> y - e.

All formulas are written for r = 0; a code with r != 0 is handled by using
σ^r(α) and σ^r(β) in place of α and β.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Sequence

from . import linalg
from .code import CodeSpec, Word, is_codeword
from .errors import (
    KeyEquationFailure,
    LengthMismatch,
    NoPositionFound,
    SingularSystem,
    UndecodableWord,
    ZeroErrorValue,
)
from .funcfield import norms
from .skew import SkewPoly, lcrm, lcrm_many, left_eval, monic_right, reea, right_divide


class Status(enum.Enum):
    CLEAN = "clean"
    CORRECTED = "corrected"
    CORRECTED_AFTER_RECOVERY = "corrected-after-recovery"


@dataclass(frozen=True)
class SyndromeData:
    values: tuple
    poly: SkewPoly


@dataclass(frozen=True)
class KeyEquationSolution:
    u: SkewPoly
    v: SkewPoly
    r: SkewPoly
    index: int


@dataclass(frozen=True)
class ErrorEstimate:
    positions: tuple[int, ...]
    values: tuple
    locator: SkewPoly
    evaluator: SkewPoly
    cofactors: tuple
    recovered_via_failure_solver: bool = False


@dataclass(frozen=True)
class DecodeOutcome:
    corrected: Word
    estimate: ErrorEstimate | None
    status: Status


# -- building blocks -------------------------------------------------------------


def locator_factor(spec: CodeSpec, k: int) -> SkewPoly:
    """1 - σ^k(β') x."""
    K = spec.sigma_field
    return spec.ring.linear(K.one, -K.sigma(spec.shifted_beta, k))


def error_locator(spec: CodeSpec, positions: Sequence[int]) -> SkewPoly:
    """λ = lcrm{1 - σ^{k_j}(β') x}, monic."""
    return lcrm_many([locator_factor(spec, k) for k in positions])


def cofactors(spec: CodeSpec, locator: SkewPoly, positions: Sequence[int]) -> list[SkewPoly]:
    """p_j with ``locator = (1 - σ^{k_j}(β') x) * p_j``."""
    out = []
    for k in positions:
        p, rem = right_divide(locator, locator_factor(spec, k))
        if rem:
            raise SingularSystem(f"1 - sigma^{k}(beta)x does not left divide the locator")
        out.append(p)
    return out


def error_evaluator(spec: CodeSpec, positions: Sequence[int], values: Sequence[Any], locator: SkewPoly | None = None) -> SkewPoly:
    """ω = sum e_j σ^{k_j}(α') p_j for the given (or definitional) locator."""
    if locator is None:
        locator = error_locator(spec, positions)
    K = spec.sigma_field
    omega = spec.ring.zero
    for k, e, p in zip(positions, values, cofactors(spec, locator, positions)):
        omega = omega + (e * K.sigma(spec.shifted_alpha, k)) * p
    return omega


def error_word(spec: CodeSpec, positions: Sequence[int], values: Sequence[Any]) -> Word:
    coeffs = [spec.sigma_field.zero] * spec.n
    for k, e in zip(positions, values):
        if not 0 <= k < spec.n:
            raise ValueError(f"error position {k} outside 0..{spec.n - 1}")
        coeffs[k] = coeffs[k] + spec.sigma_field(e)
    return Word(tuple(coeffs))


def _right_scale(f: SkewPoly, c) -> SkewPoly:
    """f * c for a scalar c."""
    K = f.field
    return SkewPoly(f.ring, [fi * K.sigma(c, i) for i, fi in enumerate(f.coeffs)])


# -- the decoder steps -----------------------------------------------------------


def syndromes(spec: CodeSpec, y: Word) -> SyndromeData:
    """S_i = sum_j y_j N_j(σ^i(β')) for i < 2τ and S = sum σ^i(α') S_i x^i."""
    if len(y) != spec.n:
        raise LengthMismatch(f"received word has length {len(y)}, expected {spec.n}")
    K = spec.sigma_field
    values = []
    for i in range(2 * spec.tau):
        acc = K.zero
        for yj, nj in zip(y, norms(K, K.sigma(spec.shifted_beta, i), spec.n)):
            if yj:
                acc = acc + yj * nj
        values.append(acc)
    poly = spec.ring([K.sigma(spec.shifted_alpha, i) * s for i, s in enumerate(values)])
    return SyndromeData(tuple(values), poly)


def solve_key_equation(spec: CodeSpec, S: SkewPoly) -> KeyEquationSolution:
    """Row I of REEA(x^{2τ}, S): the first row whose remainder has degree < τ.

    The row is returned right-normalized so that ``v`` is monic; multiplying
    a whole Bezout row on the right by a nonzero scalar keeps every identity.
    """
    if not S:
        raise ValueError("the key equation is only solved for a nonzero syndrome polynomial")
    rows = reea(spec.ring.monomial(1, 2 * spec.tau), S, stop_below=spec.tau)
    index = next(i for i, row in enumerate(rows) if row.r.degree < spec.tau)
    u, v, r = rows[index]
    K = spec.sigma_field
    c = K.sigma(1 / v.lc, -(len(v.coeffs) - 1))
    return KeyEquationSolution(_right_scale(u, c), _right_scale(v, c), _right_scale(r, c), index)


def left_root_candidate(spec: CodeSpec, d: int):
    """σ^{d-1}(β'^{-1}); it is a left root of λ exactly when d is an error position."""
    return spec.sigma_field.sigma(1 / spec.shifted_beta, d - 1)


def locate_positions(spec: CodeSpec, v: SkewPoly) -> tuple[int, ...]:
    return tuple(d for d in range(spec.n) if not left_eval(v, left_root_candidate(spec, d)))


def failure_detected(v: SkewPoly, positions: Sequence[int]) -> bool:
    """True when v has more degree than located roots (a proper left divisor of λ)."""
    return len(positions) < v.degree


def find_a_position(spec: CodeSpec, f: SkewPoly, pos: Sequence[int]) -> int:
    """Scan unknown indices, growing f by lcrm, until the degree stalls."""
    known = set(pos)
    expected = f.degree
    for i in range(spec.n):
        if i in known:
            continue
        f = lcrm(f, locator_factor(spec, i))
        if f.degree == expected:
            return i
        expected += 1
    raise NoPositionFound("no new error position; the word has more than tau errors")


def recover_from_failure(spec: CodeSpec, v: SkewPoly, r: SkewPoly, pos: Sequence[int]) -> tuple[SkewPoly, SkewPoly, tuple[int, ...]]:
    """Complete v_I to the locator λ and r_I to the matching evaluator ω.

    Returns ``(λ, ω, positions)``; when v already has as many located roots as
    its degree it is returned unchanged with r.
    """
    f = v
    known = set(pos)
    while len(known) < f.degree:
        d = find_a_position(spec, f, known)
        f = lcrm(f, locator_factor(spec, d))
        if f.degree > spec.tau:
            raise NoPositionFound("locator degree exceeds the correction capacity")
        for i in range(spec.n):
            if i not in known and not left_eval(f, left_root_candidate(spec, i)):
                known.add(i)
    g, rem = right_divide(f, v)
    if rem:
        raise NoPositionFound("recovered polynomial is not a right multiple of v_I")
    return f, r * g, tuple(sorted(known))


def solve_error_values(spec: CodeSpec, locator: SkewPoly, evaluator: SkewPoly, positions: Sequence[int]) -> dict[int, Any]:
    """Solve ω = sum e_j σ^{k_j}(α') p_j for the e_j."""
    nu = len(positions)
    if locator.degree != nu:
        raise SingularSystem(f"locator degree {locator.degree} does not match {nu} positions")
    if evaluator.degree >= nu:
        raise SingularSystem("evaluator degree is not below the number of errors")
    K = spec.sigma_field
    ps = cofactors(spec, locator, positions)
    columns = [[K.sigma(spec.shifted_alpha, k) * p[i] for i in range(nu)] for k, p in zip(positions, ps)]
    matrix = [[col[i] for col in columns] for i in range(nu)]
    values = linalg.solve(matrix, [evaluator[i] for i in range(nu)])
    if any(not e for e in values):
        raise ZeroErrorValue("a located position received a zero error value")
    return dict(zip(positions, values))


def gcrd_failure_criterion(spec: CodeSpec, error_values: Sequence[Any], positions: Sequence[int]) -> bool:
    """det(σ^i(e_j)) != 0, which holds exactly when gcrd(λ, ω) = 1."""
    if len(error_values) != len(positions):
        raise ValueError("one error value per position is required")
    nu = len(error_values)
    if nu == 0:
        return True
    K = spec.sigma_field
    return bool(linalg.det([[K.sigma(K(e), i) for e in error_values] for i in range(nu)]))


def decode(spec: CodeSpec, y: Word, auto_recover: bool = True) -> DecodeOutcome:
    syn = syndromes(spec, y)
    if not syn.poly:
        return DecodeOutcome(y, None, Status.CLEAN)
    sol = solve_key_equation(spec, syn.poly)
    if sol.v.degree < 1:
        raise UndecodableWord("key equation solution has a constant locator")
    positions = locate_positions(spec, sol.v)
    recovered = failure_detected(sol.v, positions)
    if recovered:
        if not auto_recover:
            raise KeyEquationFailure(
                f"deg v_I = {sol.v.degree} but only {len(positions)} error position(s) located"
            )
        try:
            locator, evaluator, positions = recover_from_failure(spec, sol.v, sol.r, positions)
        except NoPositionFound as exc:
            raise UndecodableWord(str(exc)) from exc
    else:
        locator, evaluator = sol.v, sol.r
    if not positions or len(positions) > spec.tau:
        raise UndecodableWord(f"{len(positions)} located positions is outside 1..tau")
    # report the monic locator; scale ω by the same right factor to keep the pair consistent
    K = spec.sigma_field
    c = K.sigma(1 / locator.lc, -(len(locator.coeffs) - 1))
    locator, evaluator = monic_right(locator), _right_scale(evaluator, c)
    try:
        values = solve_error_values(spec, locator, evaluator, positions)
    except (SingularSystem, ZeroErrorValue) as exc:
        raise UndecodableWord(str(exc)) from exc
    e = error_word(spec, positions, [values[k] for k in positions])
    corrected = y - e
    if not is_codeword(spec, corrected):
        raise UndecodableWord("correction did not produce a codeword")
    estimate = ErrorEstimate(
        positions=tuple(positions),
        values=tuple(values[k] for k in positions),
        locator=locator,
        evaluator=evaluator,
        cofactors=tuple(cofactors(spec, locator, positions)),
        recovered_via_failure_solver=recovered,
    )
    return DecodeOutcome(corrected, estimate, Status.CORRECTED_AFTER_RECOVERY if recovered else Status.CORRECTED)
