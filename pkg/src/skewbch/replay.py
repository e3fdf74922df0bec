"""Replay of the published worked examples against transcribed values.

Every expected value is kept as text exactly as displayed (rewritten with
explicit ``*`` and ``^``), parsed into the relevant field or ring, and compared
after canonicalization.  Displayed fractions often have non-monic
denominators, so comparison is by value, never by string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Mapping

from .code import CodeSpec, Word, build_code, verify_designed_distance
from .decode import (
    error_evaluator,
    error_locator,
    error_word,
    failure_detected,
    find_a_position,
    gcrd_failure_criterion,
    locate_positions,
    recover_from_failure,
    solve_error_values,
    solve_key_equation,
    syndromes,
)
from .funcfield import RationalFunction, RationalSigmaField, is_normal_basis, normal_basis_determinant
from .galois import GaloisField
from .skew import SkewPoly, gcrd, lcrm, right_divide

F8_MODULUS = (1, 1, 0, 1)  # a^3 + a + 1

EXPECTED: dict[str, str] = {
    # F_8, t -> 1/t, alpha = t
    "inverse/order": "2",
    "inverse/determinant": "t^2+1/t^2",
    "inverse/beta": "1/t^2",
    "inverse/generator": "x+1/t^2",
    "inverse/parameters": "n=2 k=1 delta=2 tau=0",
    "inverse/distance": "True",
    # F_3, t -> 2t, alpha = t+1, generator x - sigma(beta)
    "scaling/order": "2",
    "scaling/beta": "(2*t+1)/(t+1)",
    "scaling/generator": "x-(t+1)/(2*t+1)",
    "scaling/parameters": "n=2 k=1 delta=2 tau=0",
    "scaling/distance": "True",
    # F_8, t -> (t+a)/t, alpha = t, delta = 5; error e = 1 + x
    "dependent/order": "7",
    "dependent/beta": "(t+a)/t^2",
    "dependent/normal_basis": "True",
    "dependent/parameters": "n=7 k=3 delta=5 tau=2",
    "dependent/distance": "True",
    "dependent/locator": "x^2 + (t^3/(a^3*t^3+a^3*t^2+a^2*t+a^2))*x + (a*t^3+a^4*t)/(t^4+a*t^3+t^2+a^2*t+a^4)",
    "dependent/evaluator": "((t^2+t+a)/(t+1))*x + (a^4*t^4+a^4*t^3+a^4*t^2+t+a)/(a^3*t^4+a^4*t^3+a^3*t^2+a^5*t+1)",
    "dependent/gcrd": "x + (a*t^2+a^4)/(t^3+a^3*t^2+a*t+a^4)",
    "dependent/determinant_full_rank": "False",
    # received word = generator without its x and x^2 coefficients
    "two_errors/received": (
        "x^4 + ((a^2*t+1)/(a^5*t^4+a^3))*x^3"
        " + (t^6+a^2*t^5+t^4+t^3+a^6*t)/(a^5*t^6+a^4*t^5+a^5*t^4+a^3*t^2+a^2*t+a^3)"
    ),
    "two_errors/syndrome": (
        "((a^2*t^7+t^6+a^3*t^5+t^3+t^2+a^3*t+a)/(a^2*t^6+a^3*t^5+a^5*t^4+t^2+a*t+a^3))*x^3"
        " + ((a^4*t^7+t^6+a^2*t^5+a^5*t^4+a^2*t^2+t+a)"
        "/(a^6*t^7+a*t^6+a*t^5+a^6*t^4+a^4*t^3+a^6*t^2+a^6*t+a^4))*x^2"
        " + ((a^2*t^5+a^6*t^4+a*t^3+a^6*t^2+a^2)/(a^5*t^5+a*t^4+a^3*t+a^6))*x"
        " + (a^4*t^6+a^4*t^5+a^2*t^4+a^4*t^3+t^2+a^5*t+a)/(a^2*t^5+a^5*t^4+t+a^3)"
    ),
    "two_errors/v_I": (
        "x^2 + ((a*t^3+a^2*t^2+a^3*t+a^4)/(t^2+1))*x"
        " + (a^6*t^4+t^3+t^2+a*t)/(a^2*t^3+a^2*t^2+a*t+a)"
    ),
    "two_errors/r_I": (
        "((t^9+a^5*t^7+a^3*t^6+a^5*t^5+a^6*t^4+a^6*t^3+t^2+t+a^6)"
        "/(a^4*t^7+a^5*t^6+t^5+a^2*t^3+a^3*t^2+a^5*t))*x"
        " + (a^5*t^10+a*t^9+a^3*t^8+a^6*t^7+a^3*t^5+t^3+t^2+a^4*t)"
        "/(a^6*t^8+t^7+a^3*t^6+a^6*t^5+a^2*t^4+a^5*t^3+a*t^2+a^4*t+a^6)"
    ),
    "two_errors/positions": "{1,2}",
    "two_errors/e1": "(a^2*t^7+a*t^6+a*t^5+a^4*t^3+a^3*t^2+a^3*t)/(a^6*t^6+t^5+a^2*t^4+a^4*t^2+a^5*t+1)",
    "two_errors/e2": "(a^2*t^6+a*t^5+a*t^4+a^6*t^2+a^5*t+a^5)/(t^5+t^4+a^5*t+a^5)",
    "two_errors/corrected_is_generator": "True",
    # failure solver on the e = 1 + x word
    "recovery/v_I": "x + t/(t+1)",
    "recovery/r_I": "(t^2+t+a)/(t+1)",
    "recovery/failure_detected": "True",
    "recovery/first_lcrm": "x^2 + (t^3/(a^3*t^3+a^3*t^2+a^2*t+a^2))*x + (a*t^3+a^4*t)/(t^4+a*t^3+t^2+a^2*t+a^4)",
    "recovery/position": "1",
    "recovery/locator": "x^2 + (t^3/(a^3*t^3+a^3*t^2+a^2*t+a^2))*x + (a*t^3+a^4*t)/(t^4+a*t^3+t^2+a^2*t+a^4)",
    "recovery/positions": "{0,1}",
    "recovery/cofactor": "x + (a^4*t^2+1)/(a^3*t^3+a^6*t^2+a^4*t+1)",
    "recovery/evaluator": (
        "((t^2+t+a)/(t+1))*x"
        " + ((a^2+1)*t^4+(a^2+1)*t^3+(a^2+1)*t^2+a^2*t+a+1)"
        "/((a^2+a+1)*t^4+(a^2+1)*t^3+(a^2+a+1)*t^2+t+a^2)"
    ),
}


@dataclass(frozen=True)
class CheckResult:
    key: str
    passed: bool
    expected: str
    got: str


def _as_text(value: Any) -> str:
    if isinstance(value, (set, frozenset, tuple)) and all(isinstance(v, int) for v in value):
        return "{" + ",".join(str(v) for v in sorted(value)) + "}"
    return str(value)


def _compare(value: Any, expected: str, spec: CodeSpec | None) -> bool:
    if isinstance(value, SkewPoly):
        return value == value.ring.parse(expected)
    if isinstance(value, RationalFunction):
        return value == value.field.parse(expected)
    if isinstance(value, Word) and spec is not None:
        return value == Word.from_poly(spec.ring.parse(expected), spec.n)
    return _as_text(value) == expected


def _f8() -> GaloisField:
    return GaloisField(2, 3, F8_MODULUS)


def _inverse_example() -> tuple[CodeSpec, dict[str, Callable[[], Any]]]:
    K = RationalSigmaField.from_image(_f8(), "1/t")
    spec = build_code(K, K.parse("t"), r=0, delta=2)
    return spec, {
        "order": lambda: K.order,
        "determinant": lambda: normal_basis_determinant(K, spec.alpha),
        "beta": lambda: spec.beta,
        "generator": lambda: spec.generator,
        "parameters": spec.summary,
        "distance": lambda: verify_designed_distance(spec),
    }


def _scaling_example() -> tuple[CodeSpec, dict[str, Callable[[], Any]]]:
    K = RationalSigmaField.from_image(GaloisField(3), "2*t")
    spec = build_code(K, K.parse("t+1"), r=1, delta=2)
    return spec, {
        "order": lambda: K.order,
        "beta": lambda: spec.beta,
        "generator": lambda: spec.generator,
        "parameters": spec.summary,
        "distance": lambda: verify_designed_distance(spec),
    }


def paper_code() -> CodeSpec:
    """The n = 7, δ = 5 code over F_8(t) with σ(t) = (t+a)/t and α = t."""
    K = RationalSigmaField.from_image(_f8(), "(t+a)/t")
    return build_code(K, K.parse("t"), r=0, delta=5)


def _dependent_example(spec: CodeSpec) -> dict[str, Callable[[], Any]]:
    K = spec.sigma_field
    ones = [K.one, K.one]
    return {
        "order": lambda: K.order,
        "beta": lambda: spec.beta,
        "normal_basis": lambda: is_normal_basis(K, spec.alpha),
        "parameters": spec.summary,
        "distance": lambda: verify_designed_distance(spec),
        "locator": lambda: error_locator(spec, [0, 1]),
        "evaluator": lambda: error_evaluator(spec, [0, 1], ones),
        "gcrd": lambda: gcrd(error_locator(spec, [0, 1]), error_evaluator(spec, [0, 1], ones)),
        "determinant_full_rank": lambda: gcrd_failure_criterion(spec, ones, [0, 1]),
    }


def _two_error_example(spec: CodeSpec) -> dict[str, Callable[[], Any]]:
    g = spec.generator
    K = spec.sigma_field
    received = Word.from_poly(spec.ring([g[0], K.zero, K.zero, g[3], g[4]]), spec.n)
    syn = syndromes(spec, received)
    sol = solve_key_equation(spec, syn.poly)
    positions = locate_positions(spec, sol.v)
    values = solve_error_values(spec, sol.v, sol.r, positions)
    corrected = received - error_word(spec, list(values), list(values.values()))
    return {
        "received": lambda: received.to_poly(spec.ring),
        "syndrome": lambda: syn.poly,
        "v_I": lambda: sol.v,
        "r_I": lambda: sol.r,
        "positions": lambda: positions,
        "e1": lambda: values[1],
        "e2": lambda: values[2],
        "corrected_is_generator": lambda: corrected == Word.from_poly(g, spec.n),
    }


def _recovery_example(spec: CodeSpec) -> dict[str, Callable[[], Any]]:
    K = spec.sigma_field
    received = Word.from_poly(spec.generator + spec.ring([K.one, K.one]), spec.n)
    sol = solve_key_equation(spec, syndromes(spec, received).poly)
    known = locate_positions(spec, sol.v)
    locator, evaluator, positions = recover_from_failure(spec, sol.v, sol.r, known)
    return {
        "v_I": lambda: sol.v,
        "r_I": lambda: sol.r,
        "failure_detected": lambda: failure_detected(sol.v, known),
        "first_lcrm": lambda: lcrm(sol.v, spec.ring.linear(K.one, -spec.beta)),
        "position": lambda: find_a_position(spec, sol.v, known),
        "locator": lambda: locator,
        "positions": lambda: positions,
        "cofactor": lambda: right_divide(locator, sol.v)[0],
        "evaluator": lambda: evaluator,
    }


def run_paper_examples(expected: Mapping[str, str] | None = None) -> list[CheckResult]:
    """Evaluate every check; ``expected`` overrides entries of :data:`EXPECTED`."""
    table = dict(EXPECTED)
    if expected:
        unknown = set(expected) - table.keys()
        if unknown:
            raise KeyError(f"unknown check(s): {sorted(unknown)}")
        table.update(expected)
    builders: list[tuple[str, Callable[[], tuple[CodeSpec, dict[str, Callable[[], Any]]]]]] = [
        ("inverse", _inverse_example),
        ("scaling", _scaling_example),
        ("dependent", lambda: _with_paper_code(_dependent_example)),
        ("two_errors", lambda: _with_paper_code(_two_error_example)),
        ("recovery", lambda: _with_paper_code(_recovery_example)),
    ]
    results = []
    for prefix, build in builders:
        try:
            group_spec, checks = build()
        except Exception as exc:  # the whole group fails, one line per check
            reason = f"{type(exc).__name__}: {exc}"
            for key in (k for k in table if k.startswith(prefix + "/")):
                results.append(CheckResult(key, False, table[key], reason))
            continue
        for name, compute in checks.items():
            key = f"{prefix}/{name}"
            want = table[key]
            try:
                value = compute()
                ok = _compare(value, want, group_spec)
                got = _as_text(value)
            except Exception as exc:  # a crash is reported as a failed check
                ok, got = False, f"{type(exc).__name__}: {exc}"
            results.append(CheckResult(key, ok, want, got))
    return results


def _with_paper_code(make: Callable[[CodeSpec], dict[str, Callable[[], Any]]]):
    spec = paper_code()
    return spec, make(spec)


def format_results(results: list[CheckResult], verbose: bool = False) -> str:
    lines = []
    for res in results:
        lines.append(f"{'PASS' if res.passed else 'FAIL'}  {res.key}")
        if not res.passed:
            lines.append(f"      expected: {res.expected}")
            lines.append(f"      got:      {res.got}")
        elif verbose:
            lines.append(f"      value: {res.got}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
