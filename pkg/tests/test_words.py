import pytest
from hypothesis import given, strategies as st

from conftest import TABLE_F, naive_fib
from hofstadter_g import words
from hofstadter_g.errors import InsufficientHorizonError, RangeError, ValidationError
from hofstadter_g.recurrence import eval_g, frequency, table_for_frequencies
from hofstadter_g.tree import build_explicit, level_size
from hofstadter_g.words import (
    COROLLARY,
    INTRO_VARIANT,
    PLAIN_FROM_3,
    FactorizationSpec,
    build_level_word,
    build_w,
    frequency_word,
    parse_spec,
    verify_factorization,
)

TABLE2_WORD = "".join(map(str, TABLE_F))


@pytest.fixture(scope="module")
def w_prefix_1e5():
    return frequency_word(10**5, frequency(table_for_frequencies(10**5)))


def test_build_w_examples():
    assert build_w(1) == "2"
    assert build_w(4) == "12"
    assert build_w(5) == "212"
    assert [build_w(n) for n in (2, 3, 6)] == ["1", "2", "12212"]


def test_build_w_caps():
    with pytest.raises(ValidationError):
        build_w(0)
    with pytest.raises(RangeError):
        build_w(41)


def test_length_law():
    for n in range(1, 31):
        expected = 1 if n <= 3 else len(build_w(n - 2)) + len(build_w(n - 1))
        assert len(build_w(n)) == expected
    for h in range(0, 31):
        assert len(build_level_word(h)) == naive_fib(h + 2) == level_size(h)


def test_level_word_examples():
    assert build_level_word(0) == "2"
    assert build_level_word(1) == "12"
    assert build_level_word(2) == "212"
    assert build_level_word(3) == "12212"


def test_level_words_match_tree_children():
    t = build_explicit(16)
    for h in range(16):
        observed = "".join(str(len(t.children[v])) for v in sorted(t.levels[h]))
        assert observed == build_level_word(h), h


def test_level_word_bridges_to_w():
    for h in range(1, 31):
        assert build_level_word(h) == build_w(h + 1) + build_w(h + 2)


def test_frequency_word_examples():
    f = frequency(table_for_frequencies(20))
    assert frequency_word(20, f) == TABLE2_WORD
    assert frequency_word(1, f) == "2"


def test_frequency_word_needs_complete_counts():
    f = frequency(eval_g(20))  # complete to 11
    assert frequency_word(11, f) == TABLE2_WORD[:11]
    with pytest.raises(InsufficientHorizonError, match="larger horizon"):
        frequency_word(12, f)


def test_corollary_factorization_on_table2():
    report = verify_factorization(COROLLARY, TABLE2_WORD)
    assert report.ok and report.matched == 20 and report.target_length == 20


def test_intro_variant_is_recorded_not_assumed():
    # w_n = w_{n-1} w_{n-2} gives w_4 = 21, so the product reads 2 1 2 2 2 1 ...
    report = verify_factorization(INTRO_VARIANT, TABLE2_WORD)
    assert report.status == "mismatch"
    assert (report.position, report.expected, report.found) == (5, "1", "2")
    assert report.matched == 4


def test_plain_product_on_1e4():
    target = frequency_word(10**4, frequency(table_for_frequencies(10**4)))
    assert verify_factorization(PLAIN_FROM_3, target).ok


def test_both_products_on_1e5(w_prefix_1e5):
    assert verify_factorization(COROLLARY, w_prefix_1e5).ok
    assert verify_factorization(PLAIN_FROM_3, w_prefix_1e5).ok


def test_intertwining_identity():
    for m in range(3, 31):
        squares = build_w(1) + build_w(2) + "".join(build_w(n) * 2 for n in range(3, m + 1))
        for m2 in (m, m + 1, 30):
            plain = "".join(build_w(n) for n in range(3, m2 + 1))
            common = min(len(squares), len(plain))
            assert squares[:common] == plain[:common]


def test_exhausted_and_mismatch_reports():
    finite = parse_spec("1,2,3")
    report = verify_factorization(finite, TABLE2_WORD)
    assert report.status == "exhausted" and report.matched == 3
    wrong = parse_spec("seeds=1,2,1")
    report = verify_factorization(wrong, TABLE2_WORD)
    assert report.status == "mismatch" and report.position == 1
    assert verify_factorization(COROLLARY, "").ok


def test_report_never_claims_past_target():
    report = verify_factorization(COROLLARY, "212")
    assert report.matched == 3 == report.target_length


def test_parse_spec_forms():
    assert parse_spec("") == COROLLARY
    assert parse_spec("squares-from-3") == COROLLARY
    assert parse_spec("seeds=2,1,2;rule=2,1;scheme=1,2,3..^2") == COROLLARY
    assert parse_spec("plain-from-3") == PLAIN_FROM_3
    assert parse_spec("rule=1,2") == INTRO_VARIANT
    spec = parse_spec("seeds=2,11;rule=1,2;scheme=1^3,2,4..")
    assert spec.seeds == ("2", "11")
    assert spec.prefix == ((1, 3), (2, 1)) and spec.tail == (4, 1)


@pytest.mark.parametrize(
    "text",
    ["rule=3,1;seeds=2,1", "rule=0,1", "seeds=2,3", "seeds=2,,1", "scheme=3..,4", "scheme=x", "color=red", "rule=1"],
)
def test_parse_spec_rejects(text):
    with pytest.raises(ValidationError):
        parse_spec(text)


def test_spec_back_references_only_point_back():
    with pytest.raises(ValidationError):
        FactorizationSpec(seeds=("2",), rule=(2, 1))
    FactorizationSpec(seeds=("2", "1"), rule=(2, 1), prefix=(), tail=(1, 1))


@given(st.integers(1, 30))
def test_alphabet_closed(n):
    assert set(build_w(n)) <= {"1", "2"}
    assert set(build_level_word(n)) <= {"1", "2"}


@given(
    st.lists(st.text("12", min_size=1, max_size=3), min_size=2, max_size=4),
    st.integers(1, 2),
    st.integers(1, 2),
    st.integers(1, 200),
)
def test_truncated_expansion_matches_full(seeds, a, b, length):
    spec = FactorizationSpec(seeds=tuple(seeds), rule=(a, b), prefix=(), tail=(1, 2))
    full = "".join(w * 2 for w in (words._Family(spec)[n] for n in range(1, 15)))[:length]
    report = verify_factorization(spec, full)
    assert report.ok and report.matched == len(full)
