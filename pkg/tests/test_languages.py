import itertools
import re

import pytest

from waasync import ConstraintPdfa, classify_constraint, pdfa_accepts, reference_pdfa, rename_letters
from waasync.errors import UnsupportedForClassification
from waasync.generate import random_pdfa
from waasync.languages import (
    BUILTIN_NAMES,
    NP_HARD_LANGUAGES,
    POLY_LANGUAGES,
    PSPACE_LANGUAGES,
    a_sigma_star_b,
    builtin_constraint,
    equivalent,
    minimize,
    sigma_star,
    trim_size,
)

from conftest import all_words, naive_accepts


def as_regex(expr):
    return re.compile(expr.replace("+", "|"))


@pytest.mark.parametrize("name", PSPACE_LANGUAGES)
def test_reference_pdfa_matches_regex(name):
    B = reference_pdfa(name)
    rx = as_regex(name)
    assert B.n == 2
    for w in all_words("abc", 6):
        assert pdfa_accepts(B, w) == bool(rx.fullmatch("".join(w))), w


def test_inventory():
    assert len(PSPACE_LANGUAGES) == 12
    assert len(NP_HARD_LANGUAGES) == 9
    assert set(POLY_LANGUAGES) | set(NP_HARD_LANGUAGES) == set(PSPACE_LANGUAGES)
    assert "sigma-star" in BUILTIN_NAMES and "a-sigma-star-b" in BUILTIN_NAMES


def test_sigma_star_and_a_sigma_star_b():
    S = sigma_star("ab")
    assert all(pdfa_accepts(S, w) for w in all_words("ab", 4))
    B = a_sigma_star_b("abxy", "x", "y")
    rx = re.compile("x[ab]*y")
    for w in all_words("abxy", 5):
        assert pdfa_accepts(B, w) == bool(rx.fullmatch("".join(w)))
    assert builtin_constraint("a-sigma-star-b", "abc").n == 3


@pytest.mark.parametrize("name", PSPACE_LANGUAGES)
def test_classifier_table_all_permutations(name):
    base = reference_pdfa(name)
    expected_waa = "P" if name in POLY_LANGUAGES else "NP-complete"
    for perm in itertools.permutations("abc"):
        B = rename_letters(base, dict(zip("abc", perm)), order="abc")
        label = classify_constraint(B)
        assert label.language_id == name
        assert label.general_complexity == "PSPACE-complete"
        assert label.waa_complexity == expected_waa
        # the reported renaming maps the canonical letters onto B's letters
        back = rename_letters(reference_pdfa(name), dict(label.renaming), order="abc")
        assert equivalent(back, B)


def test_small_constraints_are_polynomial():
    one = ConstraintPdfa("abc", [[0, 0, None]], 0, [0])
    label = classify_constraint(one)
    assert (label.language_id, label.general_complexity, label.waa_complexity) == ("Other", "P", "P")
    binary = ConstraintPdfa("ab", [[0, 1], [None, 1]], 0, [1])
    assert classify_constraint(binary).general_complexity == "P"
    other = ConstraintPdfa("abc", [[1, None, None], [None, 1, None]], 0, [1])  # ab*
    assert classify_constraint(other).language_id == "Other"


def test_classifier_uses_language_not_shape():
    # (a+b)*c written with a redundant copy of the start state
    padded = ConstraintPdfa("abc", [[1, 0, 2], [0, 1, 2], [None, None, None]], 0, [2])
    assert classify_constraint(padded).language_id == "(a+b)*c"


def test_classifier_rejects_large_constraints():
    three = ConstraintPdfa("abc", [[1, None, None], [None, 2, None], [None, None, 0]], 0, [2])
    with pytest.raises(UnsupportedForClassification):
        classify_constraint(three)


def test_minimize_preserves_language():
    for seed in range(150):
        B = random_pdfa(1 + seed % 5, "ab", seed)
        rows, acc, init = minimize(B)
        M = ConstraintPdfa("ab", rows, init, [q for q, f in enumerate(acc) if f])
        assert trim_size(B) <= B.n + 1
        for w in all_words("ab", 6):
            assert pdfa_accepts(M, w) == naive_accepts(B, w)
        assert equivalent(B, M)


def test_equivalent_detects_difference():
    assert not equivalent(reference_pdfa("(a+b)*c"), reference_pdfa("(a+b)*cc*"))
    assert equivalent(reference_pdfa("(a+b)*cc*"), reference_pdfa("(a+b)*cc*"))
