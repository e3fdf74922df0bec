import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbch.code import (
    Word,
    build_code,
    encode,
    is_codeword,
    message_of,
    parity_check_matrix,
    parse_code_spec,
    parse_word,
    random_normal_alpha,
    render_code_spec,
    verify_designed_distance,
)
from skewbch.errors import (
    BadDelta,
    ExpressionSyntaxError,
    LengthMismatch,
    NotNormalBasis,
    TooManyMinors,
)
from skewbch.replay import paper_code
from skewbch.skew import left_divide

SPECS = Path(__file__).resolve().parent.parent / "specs"
PAPER = paper_code()


def random_message(spec, rng, bound=2):
    return [spec.sigma_field.random_element(rng, bound) for _ in range(spec.k)]


def test_paper_code_parameters():
    K = PAPER.sigma_field
    assert (PAPER.n, PAPER.k, PAPER.delta, PAPER.tau) == (7, 3, 5, 2)
    assert PAPER.beta == K.parse("(t+a)/t^2")
    assert PAPER.generator.degree == 4


def test_inverse_code_parameters(spec2):
    assert spec2.beta == spec2.sigma_field.parse("1/t^2")
    assert (spec2.n, spec2.k, spec2.tau) == (2, 1, 0)


def test_generator_right_divides_x_n_minus_one():
    for spec in (PAPER, parse_code_spec((SPECS / "f3_delta2.txt").read_text())):
        modulus = spec.ring.monomial(1, spec.n) - 1
        assert not left_divide(modulus, spec.generator)[1]


@pytest.mark.parametrize("name", ["paper_delta5.txt", "inverse_delta2.txt", "f3_delta2.txt"])
def test_spec_files_round_trip(name):
    spec = parse_code_spec((SPECS / name).read_text())
    again = parse_code_spec(render_code_spec(spec))
    assert again.generator.coeffs == spec.generator.coeffs
    assert verify_designed_distance(spec)


@settings(max_examples=40)
@given(st.integers(0, 2**32))
def test_encode_round_trip(seed):
    rng = random.Random(seed)
    msg = random_message(PAPER, rng)
    word = encode(PAPER, msg)
    assert len(word) == PAPER.n
    assert is_codeword(PAPER, word)
    assert message_of(PAPER, word) == tuple(PAPER.sigma_field(m) for m in msg)


@settings(max_examples=30)
@given(st.integers(0, 2**32))
def test_code_is_a_left_module(seed):
    rng = random.Random(seed)
    K, R = PAPER.sigma_field, PAPER.ring
    c1, c2 = encode(PAPER, random_message(PAPER, rng)), encode(PAPER, random_message(PAPER, rng))
    assert is_codeword(PAPER, c1 + c2)
    # x * c reduced modulo x^n - 1 stays in the code
    shifted = R.x * c1.to_poly(R)
    top = shifted[PAPER.n] if shifted.degree >= PAPER.n else K.zero
    coeffs = [shifted[i] for i in range(PAPER.n)]
    coeffs[0] = coeffs[0] + top
    assert is_codeword(PAPER, Word(tuple(coeffs)))


@settings(max_examples=40)
@given(st.integers(0, 2**32))
def test_parity_checks_agree_with_generator_division(seed):
    rng = random.Random(seed)
    K = PAPER.sigma_field
    word = Word(tuple(K.random_element(rng, 1) for _ in range(PAPER.n)))
    if rng.random() < 0.5:
        word = encode(PAPER, random_message(PAPER, rng))
    divisible = not left_divide(word.to_poly(PAPER.ring), PAPER.generator)[1]
    assert is_codeword(PAPER, word) == divisible
    H = parity_check_matrix(PAPER)
    syndromes = [sum((word[i] * H[i][j] for i in range(PAPER.n)), K.zero) for j in range(PAPER.delta - 1)]
    assert (not any(syndromes)) == divisible


def test_low_weight_words_are_not_codewords():
    K = PAPER.sigma_field
    rng = random.Random(5)
    for weight in range(1, PAPER.delta):
        for _ in range(10):
            positions = rng.sample(range(PAPER.n), weight)
            coeffs = [K.zero] * PAPER.n
            for p in positions:
                coeffs[p] = K.random_element(rng, 2, nonzero=True)
            assert not is_codeword(PAPER, Word(tuple(coeffs)))


def test_designed_distance_three_codes(spec2):
    f3 = parse_code_spec((SPECS / "f3_delta2.txt").read_text())
    assert verify_designed_distance(PAPER)
    assert verify_designed_distance(spec2)
    assert verify_designed_distance(f3)


def test_designed_distance_detects_singular_minor():
    H = parity_check_matrix(PAPER)
    H[3] = list(H[0])
    assert not verify_designed_distance(PAPER, matrix=H)
    with pytest.raises(TooManyMinors):
        verify_designed_distance(PAPER, max_minors=3)


def test_random_normal_alpha_builds_valid_codes(mobius7, inverse2):
    rng = random.Random(11)
    for K in (mobius7, inverse2):
        alpha = random_normal_alpha(K, 2, rng)
        spec = build_code(K, alpha, r=1, delta=K.order, verify=True)
        assert spec.generator.degree == K.order - 1


def test_construction_errors(mobius7):
    t = mobius7.parse("t")
    with pytest.raises(BadDelta):
        build_code(mobius7, t, delta=1)
    with pytest.raises(BadDelta):
        build_code(mobius7, t, delta=8)
    with pytest.raises(BadDelta):
        build_code(mobius7, t, r=-1, delta=3)
    with pytest.raises(NotNormalBasis):
        build_code(mobius7, mobius7.parse("a"), delta=3)
    with pytest.raises(LengthMismatch):
        encode(PAPER, [1, 2])
    with pytest.raises(ValueError):
        random_normal_alpha(mobius7, 0, random.Random(0))


def test_spec_text_errors():
    good = (SPECS / "paper_delta5.txt").read_text()
    with pytest.raises(ExpressionSyntaxError):
        parse_code_spec("\n".join(good.splitlines()[:2]))
    with pytest.raises(ExpressionSyntaxError):
        parse_code_spec(good + "code alpha=t delta=3\n")
    with pytest.raises(ExpressionSyntaxError):
        parse_code_spec(good + "bogus x=1\n")
    with pytest.raises(ExpressionSyntaxError):
        parse_code_spec(good.replace("delta=5", ""))


def test_word_parsing():
    K = PAPER.sigma_field
    w = parse_word(K, "1, t, 0, a, (t+1)/t, 0, 1", PAPER.n)
    assert w[4] == K.parse("(t+1)/t") and w.weight() == 5
    assert parse_word(K, w.render(K)) == w
    with pytest.raises(LengthMismatch):
        parse_word(K, "1,2", PAPER.n)
    with pytest.raises(ExpressionSyntaxError):
        parse_word(K, "1,,2")
    with pytest.raises(LengthMismatch):
        w + Word((K.zero,))
