import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from qmindeg import curves, weyl
from qmindeg.models import (
    Space, all_indices, all_windows, contains, convert, is_pprime, kstrict_to_window,
    models_for, window_to_word, word_to_window,
)

from conftest import spaces_up_to

FIXTURES = Path(__file__).parent / "fixtures"


# -- worked examples ----------------------------------------------------------

def test_type_a_partition_chain():
    lam = (11, 11, 11, 4, 4)
    assert curves.chain("partition", Space("A", 5, 16), lam, 3) == [
        lam, (10, 10, 3, 3, 0), (9, 2, 2, 0, 0), (1, 1, 0, 0, 0)]


def test_type_a_window_and_word():
    sp = Space("A", 4, 12)
    assert curves.nbhd("window", sp, (3, 10, 11, 12), 1) == (9, 10, 11, 12)
    assert curves.nbhd("window", sp, (9, 10, 11, 12), 5) == (9, 10, 11, 12)
    assert curves.step_a_word("001101010000") == "000101010001"
    word = window_to_word((3, 10, 11, 12), sp)
    assert word_to_window(curves.nbhd("word", sp, word, 1)) == (9, 10, 11, 12)


def test_type_c_kstrict_chain():
    sp = Space("C", 5, 8)
    # frozen from the Weyl group oracle
    assert curves.chain("kstrict", sp, (5, 3, 2, 2, 1), 2) == [
        (5, 3, 2, 2, 1), (3, 1, 1, 0, 0), (0, 0, 0, 0, 0)]
    assert curves.chain("pprime", sp, (11, 11, 11, 4, 4), 3) == [
        (11, 11, 11, 4, 4), (10, 10, 3, 3, 0), (9, 2, 2, 0, 0), (1, 1, 0, 0, 0)]


def test_type_c_window_example():
    sp = Space("C", 5, 8)
    u = kstrict_to_window((5, 3, 2, 2, 1), sp)
    assert curves.nbhd("window", sp, u, 1) == kstrict_to_window((3, 1, 1, 0, 0), sp)
    top = tuple(range(12, 17))
    assert curves.step_c_window(top, sp) == top


def test_type_b_pprime_chain():
    sp = Space("B", 5, 8)
    assert curves.chain("pprime", sp, (11, 11, 11, 4, 4), 4) == [
        (11, 11, 11, 4, 4), (10, 10, 3, 3, 3), (9, 2, 2, 0, 0), (1, 1, 1, 0, 0), (0,) * 5]
    assert curves.nbhd("pprime", sp, (10, 8, 3, 1, 0), 1) == (7, 2, 1, 1, 0)


def test_type_b_degree_one_in_each_model():
    sp = Space("B", 5, 8)
    lam = (11, 7, 3, 1, 0)
    u = kstrict_to_window(lam, sp)
    assert u == (1, 5, 9, 13, 15)
    assert curves.step_b_window_1(u, sp) == (5, 9, 13, 14, 15)
    mu = convert("kstrict", "pprime", lam, sp)
    assert convert("pprime", "window", curves.step_b_pprime_1(mu, sp), sp) == (5, 9, 13, 14, 15)
    assert kstrict_to_window(curves.step_b_kstrict_1(lam, sp), sp) == (5, 9, 13, 14, 15)
    # degree 3 from (9,2,2) agrees with the oracle through kstrict
    lam3 = convert("pprime", "kstrict", (9, 2, 2, 0, 0), sp)
    back = convert("kstrict", "pprime", curves.step_b_kstrict_1(lam3, sp), sp)
    assert back == (1, 1, 1, 0, 0)


def test_top_coset_fixed_in_type_b():
    sp = Space("B", 3, 5)
    top = (8, 9, 10)
    assert curves.step_b_window_1(top, sp) == top
    assert curves.step_b_pprime_1((0, 0, 0), sp) == (0, 0, 0)
    assert curves.step_b_kstrict_1((0, 0, 0), sp) == (0, 0, 0)


def test_cominuscule_rules():
    assert curves.cominuscule_step_c((5, 3, 2, 1), 1) == (3, 2, 1, 0)
    assert curves.cominuscule_step_b((5, 3, 2, 1), 1) == (2, 1, 0, 0)
    assert curves.cominuscule_step_b((5, 3, 2, 1), 2) == (0, 0, 0, 0)


def test_negative_degree():
    with pytest.raises(ValueError):
        curves.nbhd("window", Space("C", 2, 4), (1, 2), -1)


def test_inconsistent_branch_type():
    assert issubclass(curves.InconsistentBranch, AssertionError)


# -- agreement with the Weyl group oracle ---------------------------------------

@pytest.mark.parametrize("space", spaces_up_to(12), ids=str)
def test_every_model_matches_oracle(space):
    dmax = 2 * space.k
    for u in all_windows(space):
        expected = weyl.oracle_chain(u, space, dmax)
        for model in models_for(space):
            delta = convert("window", model, u, space)
            got = [convert(model, "window", x, space) for x in curves.chain(model, space, delta, dmax)]
            assert got == expected, (model, delta)


@pytest.mark.parametrize("space", spaces_up_to(10, "C"), ids=str)
def test_c_word_uses_the_type_a_rule(space):
    for u in all_windows(space):
        word = window_to_word(u, space)
        assert curves.nbhd("word", space, word, 1) == curves.step_a_word(word)


def test_fixture_b_threshold_boundary():
    cases = json.loads((FIXTURES / "b_kstrict_boundary.json").read_text())["cases"]
    assert len(cases) >= 100
    assert any(c["ell1"] == c["j"] - 1 for c in cases)
    for c in cases:
        sp = Space("B", c["k"], c["n"])
        got = curves.step_b_kstrict_1(tuple(c["lambda"]), sp)
        assert got == tuple(c["expected"]), c


# -- structural properties ----------------------------------------------------

@pytest.mark.parametrize("space", spaces_up_to(10), ids=str)
def test_shrinks_and_stabilizes(space):
    model = "partition" if space.family == "A" else "pprime"
    empty = (0,) * space.k
    for lam in all_indices(model, space):
        ch = curves.chain(model, space, lam, 2 * space.k + 1)
        for a, b in zip(ch, ch[1:]):
            assert contains(a, b)
            if model == "pprime":
                assert is_pprime(b, space)
        assert ch[2 * space.k] == ch[-1] == empty


@pytest.mark.parametrize("space", [Space("C", 4, 4), Space("C", 5, 5), Space("C", 3, 3)], ids=str)
def test_cominuscule_c_agrees_with_general_rule(space):
    for lam in all_indices("kstrict", space):
        for d in range(3):
            assert curves.nbhd_c_kstrict(lam, d, space) == curves.cominuscule_step_c(lam, d)


@given(st.integers(2, 14).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))), st.data())
def test_word_step_keeps_k_ones(nk, data):
    n, k = nk
    ones = data.draw(st.sets(st.integers(0, n - 1), min_size=k, max_size=k))
    word = "".join("1" if i in ones else "0" for i in range(n))
    out = curves.step_a_word(word)
    assert len(out) == n and out.count("1") == k
    sp = Space("A", k, n)
    assert word_to_window(out) == curves.step_a_window(word_to_window(word), sp)


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
       st.data(), st.integers(0, 4), st.integers(0, 4))
def test_type_a_semigroup(nk, data, d1, d2):
    n, k = nk
    lam = tuple(sorted(data.draw(st.lists(st.integers(0, n - k), min_size=k, max_size=k)), reverse=True))
    assert curves.nbhd_a_partition(curves.nbhd_a_partition(lam, d1), d2) == curves.nbhd_a_partition(lam, d1 + d2)
