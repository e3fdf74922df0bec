"""Monte-Carlo channel simulation of the decoder.

Each trial draws its own ``random.Random`` from ``(seed, degree bound, trial
index)``, so results never depend on how trials are scheduled across workers.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .code import CodeSpec, encode, parse_code_spec
from .decode import Status, decode, error_word
from .errors import KeyEquationFailure, UndecodableWord
from .funcfield import RationalSigmaField

VALUE_MODES = ("random", "ones", "dependent")


@dataclass(frozen=True)
class SimConfig:
    spec_text: str
    trials: int = 100
    num_errors: int | str = "random"
    degree_bounds: tuple[int, ...] = (1,)
    seed: int = 0
    jobs: int = 1
    auto_recover: bool = True
    values: str = "random"

    def validate(self, tau: int) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if not self.degree_bounds or any(d < 0 for d in self.degree_bounds):
            raise ValueError("degree bounds must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.values not in VALUE_MODES:
            raise ValueError(f"value mode must be one of {', '.join(VALUE_MODES)}")
        if self.num_errors != "random":
            if not isinstance(self.num_errors, int) or not 0 <= self.num_errors <= tau:
                raise ValueError(f"number of errors must be 'random' or an integer in 0..{tau}")


@dataclass
class BoundStats:
    degree_bound: int
    trials_run: int = 0
    decode_successes: int = 0
    key_equation_failures: int = 0
    recoveries_succeeded: int = 0
    undecodable: int = 0

    @property
    def failure_rate(self) -> float:
        return self.key_equation_failures / self.trials_run if self.trials_run else 0.0

    def add(self, outcome: tuple[bool, bool]) -> None:
        success, failure = outcome
        self.trials_run += 1
        self.decode_successes += success
        self.undecodable += not success
        self.key_equation_failures += failure
        self.recoveries_succeeded += failure and success


@dataclass
class SimReport:
    config: SimConfig
    rows: list[BoundStats]
    wall_time: float = 0.0
    totals: BoundStats = field(init=False)

    def __post_init__(self):
        self.totals = BoundStats(-1)
        for row in self.rows:
            for name in ("trials_run", "decode_successes", "key_equation_failures", "recoveries_succeeded", "undecodable"):
                setattr(self.totals, name, getattr(self.totals, name) + getattr(row, name))

    def machine_lines(self) -> list[str]:
        """Deterministic key=value lines (wall time is deliberately left out)."""
        cfg = self.config
        lines = [
            f"seed={cfg.seed}",
            f"trials={cfg.trials}",
            f"errors={cfg.num_errors}",
            f"values={cfg.values}",
            f"auto_recover={str(cfg.auto_recover).lower()}",
        ]
        for name in ("trials_run", "decode_successes", "key_equation_failures", "recoveries_succeeded", "undecodable"):
            lines.append(f"{name}={getattr(self.totals, name)}")
        for row in self.rows:
            lines.append(
                f"bound={row.degree_bound} trials_run={row.trials_run} decode_successes={row.decode_successes} "
                f"key_equation_failures={row.key_equation_failures} recoveries_succeeded={row.recoveries_succeeded} "
                f"undecodable={row.undecodable} failure_rate={row.failure_rate:.4f}"
            )
        return lines

    def table(self) -> str:
        head = f"{'bound':>5}  {'trials':>6}  {'ok':>6}  {'kef':>6}  {'recov':>6}  {'undec':>6}  {'kef rate':>8}"
        out = [head, "-" * len(head)]
        for row in self.rows:
            out.append(
                f"{row.degree_bound:>5}  {row.trials_run:>6}  {row.decode_successes:>6}  {row.key_equation_failures:>6}  "
                f"{row.recoveries_succeeded:>6}  {row.undecodable:>6}  {row.failure_rate:>8.4f}"
            )
        out.append(f"wall time {self.wall_time:.2f}s")
        return "\n".join(out)


def trial_rng(seed: int, bound: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{bound}:{index}")


def fixed_field_scalar(spec: CodeSpec, rng: random.Random, degree_bound: int):
    """A nonzero element of the σ-fixed field: a base constant or a trace."""
    K = spec.sigma_field
    while True:
        if isinstance(K, RationalSigmaField) and (degree_bound == 0 or rng.random() < 0.5):
            c = K(rng.randrange(1, K.base.q))
        else:
            c = K.trace(K.random_element(rng, max(degree_bound, 1)))
        if c:
            return c


def error_values(spec: CodeSpec, rng: random.Random, count: int, degree_bound: int, mode: str) -> list:
    K = spec.sigma_field
    if mode == "ones":
        return [K.one] * count
    if mode == "dependent" and count >= 2:
        first = K.random_element(rng, degree_bound, nonzero=True)
        return [first] + [fixed_field_scalar(spec, rng, degree_bound) * first for _ in range(count - 1)]
    return [K.random_element(rng, degree_bound, nonzero=True) for _ in range(count)]


def run_trial(spec: CodeSpec, config: SimConfig, bound: int, index: int) -> tuple[bool, bool]:
    """Returns ``(decoded correctly, key equation failure occurred)``."""
    rng = trial_rng(config.seed, bound, index)
    K = spec.sigma_field
    message = [K.random_element(rng, bound) for _ in range(spec.k)]
    codeword = encode(spec, message)
    nu = rng.randint(0, spec.tau) if config.num_errors == "random" else config.num_errors
    positions = sorted(rng.sample(range(spec.n), nu))
    values = error_values(spec, rng, nu, bound, config.values)
    received = codeword + error_word(spec, positions, values)
    try:
        outcome = decode(spec, received, auto_recover=config.auto_recover)
    except KeyEquationFailure:
        return False, True
    except UndecodableWord:
        return False, False
    return outcome.corrected == codeword, outcome.status is Status.CORRECTED_AFTER_RECOVERY


@lru_cache(maxsize=4)
def _spec_from_text(text: str) -> CodeSpec:
    return parse_code_spec(text, verify=False)


def _run_chunk(config: SimConfig, bound: int, indices: Sequence[int]) -> list[tuple[bool, bool]]:
    spec = _spec_from_text(config.spec_text)
    return [run_trial(spec, config, bound, i) for i in indices]


def simulate(config: SimConfig) -> SimReport:
    spec = _spec_from_text(config.spec_text)
    config.validate(spec.tau)
    start = time.perf_counter()
    rows = [BoundStats(b) for b in config.degree_bounds]
    if config.jobs == 1:
        for row in rows:
            for outcome in _run_chunk(config, row.degree_bound, range(config.trials)):
                row.add(outcome)
    else:
        chunk = max(1, config.trials // (config.jobs * 4))
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [
                (row, pool.submit(_run_chunk, config, row.degree_bound, range(lo, min(lo + chunk, config.trials))))
                for row in rows
                for lo in range(0, config.trials, chunk)
            ]
            for row, fut in futures:
                for outcome in fut.result():
                    row.add(outcome)
    return SimReport(config, rows, wall_time=time.perf_counter() - start)
