"""Command-line front end.

Exit codes: 0 success, 1 paper-example mismatch, 2 input error,
3 key equation failure (``--no-recover``), 4 undecodable word.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Sequence

from .code import CodeSpec, Word, encode, parse_code_spec, parse_word, render_code_spec
from .decode import Status, decode, error_word
from .errors import KeyEquationFailure, SkewBCHError, UndecodableWord
from .replay import format_results, run_paper_examples
from .simulate import VALUE_MODES, SimConfig, simulate

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_KEY_EQUATION_FAILURE = 3
EXIT_UNDECODABLE = 4


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _read_spec(path: str) -> tuple[str, CodeSpec]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read spec file {path!r}: {exc.strerror or exc}") from None
    return text, parse_code_spec(text)


def _word_arg(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _emit(pairs: list[tuple[str, str]], machine: bool) -> None:
    if machine:
        for key, value in pairs:
            print(f"{key}={value}")
    else:
        width = max(len(k) for k, _ in pairs)
        for key, value in pairs:
            print(f"{key.replace('_', ' '):<{width}}  {value}")


# -- commands ---------------------------------------------------------------------


def cmd_build(args) -> int:
    _, spec = _read_spec(args.spec)
    K = spec.sigma_field
    if args.machine:
        _emit(
            [("n", str(spec.n)), ("k", str(spec.k)), ("delta", str(spec.delta)), ("tau", str(spec.tau)),
             ("generator", str(spec.generator))],
            True,
        )
    else:
        print(spec.summary())
        print(f"beta = {K.render(spec.beta)}")
        print(f"g = {spec.generator}")
        print("canonical spec:")
        print(render_code_spec(spec), end="")
    return EXIT_OK


def cmd_encode(args) -> int:
    _, spec = _read_spec(args.spec)
    message = parse_word(spec.sigma_field, _word_arg(args.message), spec.k)
    print(encode(spec, list(message)).render(spec.sigma_field))
    return EXIT_OK


def cmd_corrupt(args) -> int:
    _, spec = _read_spec(args.spec)
    K = spec.sigma_field
    word = parse_word(K, _word_arg(args.word), spec.n)
    if args.positions is not None:
        positions = _int_list(args.positions)
    else:
        nu = _error_count(args.errors, spec)
        positions = sorted(random.Random(f"corrupt:{args.seed}").sample(range(spec.n), nu))
    if len(set(positions)) != len(positions):
        raise InputError("error positions must be distinct")
    if any(not 0 <= p < spec.n for p in positions):
        raise InputError(f"error positions must lie in 0..{spec.n - 1}")
    if args.values is not None:
        values = [K.parse(v.strip()) for v in args.values.split(",")] if args.values.strip() else []
        if len(values) != len(positions):
            raise InputError(f"{len(positions)} position(s) but {len(values)} value(s)")
        if any(not v for v in values):
            raise InputError("error values must be nonzero")
    else:
        rng = random.Random(f"values:{args.seed}")
        values = [K.random_element(rng, args.degree_bound, nonzero=True) for _ in positions]
    print((word + error_word(spec, positions, values)).render(K))
    return EXIT_OK


def cmd_decode(args) -> int:
    _, spec = _read_spec(args.spec)
    K = spec.sigma_field
    word = parse_word(K, _word_arg(args.word), spec.n)
    try:
        outcome = decode(spec, word, auto_recover=not args.no_recover)
    except KeyEquationFailure as exc:
        _emit([("status", "key-equation-failure"), ("detail", str(exc))], args.machine)
        return EXIT_KEY_EQUATION_FAILURE
    except UndecodableWord as exc:
        _emit([("status", "undecodable"), ("detail", str(exc))], args.machine)
        return EXIT_UNDECODABLE
    est = outcome.estimate
    pairs = [("status", outcome.status.value)]
    if est is not None:
        pairs += [
            ("positions", ",".join(str(p) for p in est.positions)),
            ("values", ",".join(K.render(v) for v in est.values)),
            ("locator", str(est.locator)),
        ]
    pairs.append(("corrected", outcome.corrected.render(K)))
    _emit(pairs, args.machine)
    return EXIT_OK


def cmd_simulate(args) -> int:
    text, spec = _read_spec(args.spec)
    bounds = tuple(_int_list(args.degree_bound))
    errors: int | str = "random" if args.errors == "random" else _error_count(args.errors, spec)
    config = SimConfig(
        spec_text=text,
        trials=args.trials,
        num_errors=errors,
        degree_bounds=bounds,
        seed=args.seed,
        jobs=args.jobs,
        auto_recover=not args.no_recover,
        values=args.values,
    )
    try:
        report = simulate(config)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print("\n".join(report.machine_lines()) if args.machine else report.table())
    return EXIT_OK


def cmd_paper_examples(args) -> int:
    results = run_paper_examples()
    if args.machine:
        for res in results:
            print(f"check={res.key} result={'pass' if res.passed else 'fail'}")
    else:
        print(format_results(results, verbose=args.verbose))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def _error_count(text: str, spec: CodeSpec) -> int:
    try:
        nu = int(text)
    except ValueError:
        raise InputError(f"--errors must be an integer or 'random', got {text!r}") from None
    if not 0 <= nu <= spec.tau:
        raise InputError(f"--errors must lie in 0..tau = {spec.tau}")
    return nu


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewbch", description="Skew BCH convolutional codes over F_q(t).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, spec: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if spec:
            p.add_argument("--spec", required=True, help="code-spec file (field / sigma / code lines)")
        p.add_argument("--machine", action="store_true", help="key=value output")
        p.set_defaults(handler=handler)
        return p

    add("build", cmd_build, "validate a spec and print the code parameters")

    p = add("encode", cmd_encode, "encode a message of k comma-separated elements")
    p.add_argument("message", help="message, or '-' for stdin")

    p = add("corrupt", cmd_corrupt, "add an error pattern to a word")
    p.add_argument("word", help="word, or '-' for stdin")
    p.add_argument("--positions", help="comma-separated error positions")
    p.add_argument("--values", help="comma-separated error values (default: random)")
    p.add_argument("--errors", default="1", help="number of random positions when --positions is absent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree-bound", type=int, default=1)

    p = add("decode", cmd_decode, "decode a received word")
    p.add_argument("word", help="word, or '-' for stdin")
    p.add_argument("--no-recover", action="store_true", help="report key equation failures instead of repairing them")

    p = add("simulate", cmd_simulate, "Monte-Carlo decoding experiment")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--errors", default="random", help="errors per trial (0..tau) or 'random'")
    p.add_argument("--degree-bound", default="1", help="degree bound, or a comma-separated sweep")
    p.add_argument("--values", choices=VALUE_MODES, default="random", help="error value distribution")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-recover", action="store_true")

    p = add("paper-examples", cmd_paper_examples, "replay the published worked examples", spec=False)
    p.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KeyEquationFailure as exc:
        print(f"key equation failure: {exc}", file=sys.stderr)
        return EXIT_KEY_EQUATION_FAILURE
    except UndecodableWord as exc:
        print(f"undecodable: {exc}", file=sys.stderr)
        return EXIT_UNDECODABLE
    except (SkewBCHError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
