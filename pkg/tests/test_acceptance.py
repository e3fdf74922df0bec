"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import random
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from skewbch.code import encode, parse_code_spec, random_normal_alpha, verify_designed_distance
from skewbch.decode import (
    Status,
    decode,
    error_evaluator,
    error_locator,
    error_word,
    failure_detected,
    gcrd_failure_criterion,
    locate_positions,
    solve_key_equation,
    syndromes,
)
from skewbch.funcfield import RationalSigmaField
from skewbch.galois import GaloisField
from skewbch.replay import paper_code, run_paper_examples
from skewbch.simulate import SimConfig, simulate
from skewbch.skew import SkewPolyRing, gcrd, lclm_many, left_divide, reea, right_divide

SPECS = Path(__file__).resolve().parent.parent / "specs"
F8 = GaloisField(2, 3, (1, 1, 0, 1))
PAPER = paper_code()


@pytest.fixture
def criterion(capsys):
    """Context manager factory printing one verdict line per criterion."""

    def report(line):
        with capsys.disabled():
            print("\n" + line, flush=True)

    @contextmanager
    def run(number, title):
        with _verdict(number, title, report) as note:
            yield note

    return run


@contextmanager
def _verdict(number, title, report):
    start = time.perf_counter()
    note = {}
    try:
        yield note
    except BaseException as exc:
        detail = f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        report(f"[acceptance {number}] FAIL {title} ({time.perf_counter() - start:.1f}s) {detail}")
        raise
    extra = f" {note['info']}" if "info" in note else ""
    report(f"[acceptance {number}] PASS {title} ({time.perf_counter() - start:.1f}s){extra}")


def random_pattern(spec, rng, nu, bound):
    K = spec.sigma_field
    positions = sorted(rng.sample(range(spec.n), nu))
    return positions, [K.random_element(rng, bound, nonzero=True) for _ in positions]


def test_criterion_1_paper_examples(criterion):
    with criterion(1, "paper-example replay") as note:
        start = time.perf_counter()
        results = run_paper_examples()
        elapsed = time.perf_counter() - start
        failed = [r.key for r in results if not r.passed]
        assert not failed, f"mismatched checks: {failed}"
        assert elapsed < 10, f"replay took {elapsed:.1f}s"
        note["info"] = f"{len(results)} checks"


def test_criterion_2_lclm_of_conjugates_is_x_n_minus_1(criterion):
    with criterion(2, "lclm of conjugate factors equals x^n - 1") as note:
        start = time.perf_counter()
        rng = random.Random(2)
        checked = 0
        for image in ("(t+a)/t", "1/t"):
            K = RationalSigmaField.from_image(F8, image)
            R = SkewPolyRing(K)
            target = R.monomial(1, K.order) - 1
            for _ in range(20):
                alpha = random_normal_alpha(K, 2, rng)
                beta = K.sigma(alpha) / alpha
                factors = [R.linear(-K.sigma(beta, i)) for i in range(K.order)]
                assert lclm_many(factors) == target, f"alpha = {K.render(alpha)}"
                checked += 1
        elapsed = time.perf_counter() - start
        assert elapsed < 30, f"took {elapsed:.1f}s"
        note["info"] = f"{checked} alphas"


def test_criterion_3_round_trip_decoding(criterion):
    with criterion(3, "round-trip decoding, nu in {0,1,2}, degree bound 3") as note:
        start = time.perf_counter()
        rng = random.Random(3)
        K = PAPER.sigma_field
        counts = {}
        for nu in (0, 1, 2):
            ok = 0
            for _ in range(200):
                c = encode(PAPER, [K.random_element(rng, 3) for _ in range(PAPER.k)])
                positions, values = random_pattern(PAPER, rng, nu, 3)
                outcome = decode(PAPER, c + error_word(PAPER, positions, values), auto_recover=True)
                ok += outcome.corrected == c
            counts[nu] = ok
        elapsed = time.perf_counter() - start
        assert all(v == 200 for v in counts.values()), f"corrected per nu: {counts}"
        assert elapsed < 120, f"took {elapsed:.1f}s"
        note["info"] = f"corrected {counts}"


def test_criterion_4_reea_properties(criterion):
    with criterion(4, "REEA and division properties on 500 pairs") as note:
        rng = random.Random(4)
        K, R = PAPER.sigma_field, PAPER.ring

        def random_poly(degree):
            coeffs = [K.random_element(rng, 1) for _ in range(degree)]
            return R(coeffs + [K.random_element(rng, 1, nonzero=True)])

        rows_checked = 0
        for _ in range(500):
            f, g = random_poly(rng.randint(0, 6)), random_poly(rng.randint(0, 6))
            if f.degree < g.degree:
                f, g = g, f
            rows = reea(f, g)
            assert not rows[-1].r
            for i, (u, v, r) in enumerate(rows):
                assert f * u + g * v == r
                if i >= 1:
                    assert gcrd(u, v) == R.one
                    assert f.degree == rows[i - 1].r.degree + v.degree
                rows_checked += 1
            for divide, combine in ((right_divide, lambda q: g * q), (left_divide, lambda q: q * g)):
                q, r = divide(f, g)
                assert combine(q) + r == f and r.degree < g.degree
                # any other quotient leaves a remainder of degree >= deg g
                other = q + R.one
                assert (f - combine(other)).degree >= g.degree
        note["info"] = f"{rows_checked} Bezout rows"


def test_criterion_5_key_equation_identity(criterion):
    with criterion(5, "key equation identity on 200 patterns") as note:
        rng = random.Random(5)
        two_tau = 2 * PAPER.tau
        for _ in range(200):
            nu = rng.randint(1, PAPER.tau)
            positions, values = random_pattern(PAPER, rng, nu, rng.randint(0, 3))
            S = syndromes(PAPER, error_word(PAPER, positions, values)).poly
            lam = error_locator(PAPER, positions)
            diff = error_evaluator(PAPER, positions, values) - S * lam
            assert all(not diff[i] for i in range(two_tau))
            cofactor = PAPER.ring(list(diff.coeffs[two_tau:]))
            assert cofactor.degree < nu
        note["info"] = "200 patterns"


def test_criterion_6_failure_criterion_equivalence(criterion):
    with criterion(6, "failure criterion equivalence, 200 random + 50 forced") as note:
        rng = random.Random(6)
        K = PAPER.sigma_field
        failures = {"random": 0, "forced": 0}
        fixed_scalars = [K.parse(s) for s in ("1", "a", "a^2", "a+1", "a^2+a+1")]
        for kind, count in (("random", 200), ("forced", 50)):
            for _ in range(count):
                c = encode(PAPER, [K.random_element(rng, 2) for _ in range(PAPER.k)])
                positions = sorted(rng.sample(range(PAPER.n), 2))
                if kind == "forced":
                    first = K.one if rng.random() < 0.4 else K.random_element(rng, 2, nonzero=True)
                    values = [first, rng.choice(fixed_scalars) * first]
                else:
                    bound = rng.choice([0, 1, 2, 3])
                    values = [K.random_element(rng, bound, nonzero=True) for _ in positions]
                sol = solve_key_equation(PAPER, syndromes(PAPER, error_word(PAPER, positions, values)).poly)
                detected = failure_detected(sol.v, locate_positions(PAPER, sol.v))
                singular = not gcrd_failure_criterion(PAPER, values, positions)
                lam = error_locator(PAPER, positions)
                common = gcrd(lam, error_evaluator(PAPER, positions, values)) != PAPER.ring.one
                assert detected == singular == common, (positions, [K.render(v) for v in values])
                failures[kind] += detected
                if kind == "forced":
                    assert detected
                    outcome = decode(PAPER, c + error_word(PAPER, positions, values))
                    assert outcome.status is Status.CORRECTED_AFTER_RECOVERY and outcome.corrected == c
        note["info"] = f"failures {failures}"


def test_criterion_7_designed_distance(criterion):
    with criterion(7, "designed distance of the three example codes") as note:
        start = time.perf_counter()
        names = ["paper_delta5.txt", "inverse_delta2.txt", "f3_delta2.txt"]
        shapes = []
        for name in names:
            spec = parse_code_spec((SPECS / name).read_text())
            assert verify_designed_distance(spec), name
            shapes.append(f"n={spec.n}/delta={spec.delta}/q={spec.sigma_field.base.q}")
        assert shapes == ["n=7/delta=5/q=8", "n=2/delta=2/q=8", "n=2/delta=2/q=3"]
        elapsed = time.perf_counter() - start
        assert elapsed < 10, f"took {elapsed:.1f}s"
        note["info"] = ", ".join(shapes)


def test_criterion_8_simulator_determinism(criterion):
    with criterion(8, "simulator reports identical at 1 and 8 workers") as note:
        text = (SPECS / "paper_delta5.txt").read_text()
        cfg = dict(spec_text=text, trials=40, degree_bounds=(0, 1, 2), seed=8)
        serial = "\n".join(simulate(SimConfig(jobs=1, **cfg)).machine_lines()).encode()
        parallel = "\n".join(simulate(SimConfig(jobs=8, **cfg)).machine_lines()).encode()
        assert serial == parallel
        note["info"] = f"{len(serial)} bytes"


def test_criterion_9_failure_rate_trend(criterion):
    with criterion(9, "key-equation-failure rate trend over degree bounds") as note:
        text = (SPECS / "paper_delta5.txt").read_text()
        report = simulate(SimConfig(text, trials=500, num_errors=2, degree_bounds=(0, 1, 2, 4), seed=9))
        rates = {row.degree_bound: row.failure_rate for row in report.rows}
        assert rates[4] <= rates[0], rates
        for row in report.rows:
            assert row.recoveries_succeeded == row.key_equation_failures, f"bound {row.degree_bound}"
            assert row.undecodable == 0, f"bound {row.degree_bound}"
        note["info"] = "rates " + ", ".join(f"{b}:{r:.3f}" for b, r in rates.items())
