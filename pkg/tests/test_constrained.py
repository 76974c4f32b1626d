import itertools
import zlib

import numpy as np
import pytest

from waasync import (
    ConstraintPdfa,
    SemiAutomaton,
    dispatch_solve,
    image,
    reference_pdfa,
    rename_letters,
    shortest_bound,
    solve_c_then_tail,
    solve_generic,
    solve_suffix_c,
    verify_witness,
    witness_length_bound,
)
from waasync.errors import AlphabetMismatch, InstanceTooLarge, WaaRequired
from waasync.generate import random_automaton, random_pdfa, random_waa
from waasync.languages import POLY_LANGUAGES, sigma_star

from conftest import constrained_oracle


def test_shortest_bound_formula(W1):
    assert shortest_bound(W1, reference_pdfa("(a+b)*c")) == 6
    assert shortest_bound(SemiAutomaton("a", [[0]]), random_pdfa(4, "a", 0)) == 0
    chain4 = SemiAutomaton("ab", [[1, 1], [2, 2], [3, 3], [3, 3]])
    assert shortest_bound(chain4, ConstraintPdfa("ab", [[1, 1], [1, 1]], 0, [1])) == 12
    with pytest.raises(WaaRequired):
        shortest_bound(SemiAutomaton("a", [[1], [0]]), sigma_star("a"))


def test_verify_witness_examples(W1, single):
    B = sigma_star("ab")
    assert verify_witness(B, W1, "aa")
    assert not verify_witness(B, W1, "b")
    assert verify_witness(sigma_star("abc"), single, "")
    with pytest.raises(AlphabetMismatch):
        verify_witness(sigma_star("abc"), W1, "a")


def test_solve_generic_examples(W1, W3, single):
    assert solve_generic(sigma_star("ab"), W1) == ("a", "a")
    assert solve_generic(reference_pdfa("(a+b)*c"), W3) is None
    assert solve_generic(sigma_star("abc"), single) == ()


def test_solve_generic_size_guard():
    A = random_automaton(21, 3, 0)
    with pytest.raises(InstanceTooLarge):
        solve_generic(sigma_star("abc"), A)


def test_empty_language(W1, single):
    empty = ConstraintPdfa("ab", [[None, None]], 0, [])
    assert solve_generic(empty, W1) is None
    eps_only = ConstraintPdfa("abc", [[None, None, None]], 0, [0])
    assert solve_generic(eps_only, single) == ()
    assert solve_generic(ConstraintPdfa("ab", [[None, None]], 0, [0]), W1) is None


def test_solve_suffix_c_examples(W2, W3):
    w = solve_suffix_c(W2)
    assert w is not None and w[-1] == "c"
    assert verify_witness(reference_pdfa("(a+b)*c"), W2, w)
    assert solve_suffix_c(W3) is None
    one = SemiAutomaton("abc", [[0, 0, 0]])
    assert solve_suffix_c(one) == ("c",)


def test_solve_c_then_tail_examples(W2, W3):
    assert solve_c_then_tail(W3, "c") == ("c", "c")
    assert solve_c_then_tail(W3, "a") is None
    w = solve_c_then_tail(W2, "a")
    assert w is not None and verify_witness(reference_pdfa("(a+b)*ca*"), W2, w)
    with pytest.raises(AlphabetMismatch):
        solve_c_then_tail(W2, "b")


def test_dispatch_examples(W1, W2, b_star, single):
    r = dispatch_solve(reference_pdfa("(a+b)*c"), W2)
    assert r.decision and r.method == "poly/suffix-c"
    assert r.label.waa_complexity == "P"
    r = dispatch_solve(b_star, W1)
    assert not r.decision and r.witness is None and r.method == "generic"
    r = dispatch_solve(reference_pdfa("a(b+c)*"), single)
    assert r.decision and r.witness == ("a",)


def test_dispatch_routes_renamed_constraints():
    # (b+c)*a is (a+b)*c with a and c swapped
    B = rename_letters(reference_pdfa("(a+b)*c"), {"a": "c", "b": "b", "c": "a"}, order="abc")
    rng = np.random.default_rng(31)
    for _ in range(50):
        A = random_waa(int(rng.integers(1, 8)), 3, rng)
        r = dispatch_solve(B, A)
        assert r.method == "poly/suffix-c"
        assert r.decision == (solve_generic(B, A) is not None)
        if r.decision:
            assert r.witness[-1] == "a"


SAMPLE_POLY = [
    (name, perm) for name in POLY_LANGUAGES for perm in itertools.permutations("abc")
]


@pytest.mark.parametrize("name,perm", SAMPLE_POLY)
def test_polynomial_solvers_match_generic(name, perm):
    B = rename_letters(reference_pdfa(name), dict(zip("abc", perm)), order="abc")
    rng = np.random.default_rng(zlib.crc32((name + "".join(perm)).encode()))
    for _ in range(40):
        A = random_waa(int(rng.integers(1, 9)), 3, rng)
        r = dispatch_solve(B, A)
        assert r.method.startswith("poly/")
        assert r.decision == (solve_generic(B, A) is not None)


def test_generic_finds_shortest_constrained_word():
    rng = np.random.default_rng(37)
    for _ in range(150):
        A = random_waa(int(rng.integers(1, 5)), 2, rng)
        B = random_pdfa(2, "ab", rng)
        w = solve_generic(B, A)
        d = constrained_oracle(B, A, 8)
        if d is None:
            assert w is None or len(w) > 8
        else:
            assert len(w) == d


def test_quadratic_estimate_counterexamples():
    # one state: the only witness is the shortest word of L(B), which can be nonempty
    one = SemiAutomaton("ab", [[0, 0]])
    B = ConstraintPdfa("ab", [[1, None], [None, None]], 0, [1])  # language {a}
    assert solve_generic(B, one) == ("a",)
    assert shortest_bound(one, B) == 0
    # two states, |P| = 2: shortest witness in b(ab)* is "bab"
    A = SemiAutomaton("ab", [[1, 0], [1, 1]])
    B = ConstraintPdfa("ab", [[None, 1], [0, None]], 0, [1])
    w = solve_generic(B, A)
    assert w == ("b", "a", "b")
    assert len(w) > shortest_bound(A, B) == 2
    assert len(w) <= witness_length_bound(A, B) == 3


def test_corrected_bound_holds():
    rng = np.random.default_rng(41)
    checked = 0
    for _ in range(600):
        A = random_waa(int(rng.integers(1, 9)), int(rng.integers(1, 4)), rng)
        B = random_pdfa(int(rng.integers(1, 4)), tuple(A.alphabet), rng)
        w = solve_generic(B, A)
        if w is not None:
            checked += 1
            assert len(w) <= witness_length_bound(A, B)
    assert checked > 50


def test_every_route_returns_verified_witnesses():
    rng = np.random.default_rng(43)
    for _ in range(300):
        A = random_waa(int(rng.integers(1, 8)), 3, rng) if rng.random() < 0.7 else random_automaton(
            int(rng.integers(1, 6)), 3, rng
        )
        B = random_pdfa(int(rng.integers(1, 4)), "abc", rng)
        r = dispatch_solve(B, A)
        if r.decision:
            assert verify_witness(B, A, r.witness)
            assert len(image(A, None, r.witness)) == 1
        assert r.decision == (solve_generic(B, A) is not None)


def test_sigma_star_route(W1):
    r = dispatch_solve(sigma_star("ab"), W1)
    assert r.method == "waa/greedy" and r.witness == ("a", "a")
