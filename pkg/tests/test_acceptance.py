"""Acceptance gate: one PASS/FAIL line per criterion, all at exact tolerance."""

import time

import pytest

from qmindeg import curves, weyl
from qmindeg.mindeg import cross_verify, min_degree_diagram
from qmindeg.models import (
    Space, all_indices, all_kstrict, all_pprime, all_windows, boundary_word, contains,
    convert, is_pprime, kstrict_to_window, models_for, parse_window, window_to_kstrict,
    word_to_partition,
)

from conftest import spaces_up_to


@pytest.fixture
def report(capsys):
    def emit(number, title, failures, detail=""):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n{status} criterion {number}: {title} {detail}".rstrip())
            for f in failures[:10]:
                print(f"    {f}")
        assert not failures, failures[:10]
    return emit


def _check(failures, label, got, expected):
    if got != expected:
        failures.append(f"{label}: got {got!r}, expected {expected!r}")


def test_criterion_1_worked_examples(report):
    bad = []
    lam, mu = (11, 11, 11, 4, 4), (7, 7, 0, 0, 0)
    ig, og, gr = Space("C", 5, 8), Space("B", 5, 8), Space("A", 5, 16)

    _check(bad, "Gr(5,16) d", min_degree_diagram(gr, lam, mu).d, 3)
    a = min_degree_diagram(ig, lam, mu)
    _check(bad, "IG(5,16) d", a.d, 3)
    _check(bad, "IG(5,16) chain", a.chain[1:], ((10, 10, 3, 3, 0), (9, 2, 2, 0, 0), (1, 1, 0, 0, 0)))
    b = min_degree_diagram(og, lam, mu)
    _check(bad, "OG(5,17) d", b.d, 4)
    for step in [(9, 2, 2, 0, 0), (1, 1, 1, 0, 0), (0, 0, 0, 0, 0)]:
        _check(bad, f"OG(5,17) chain has {step}", step in b.chain, True)
    _check(bad, "IG(5,10) d", min_degree_diagram(Space("C", 5, 5), (4, 3, 2, 1, 0), (3, 1, 0, 0, 0)).d, 2)
    _check(bad, "OG(5,11) d", min_degree_diagram(Space("B", 5, 5), (4, 3, 2, 1, 0), (3, 1, 0, 0, 0)).d, 1)

    u_c = parse_window("7,-8,-5,-4,-2", ig)
    u_b = parse_window("1,5,-8,-4,-2", og)
    _check(bad, "kstrict->window C", kstrict_to_window((5, 3, 2, 2, 1), ig), u_c)
    _check(bad, "window->kstrict C", window_to_kstrict(u_c, ig), (5, 3, 2, 2, 1))
    _check(bad, "kstrict->window B", kstrict_to_window((11, 7, 3, 1, 0), og), u_b)
    _check(bad, "window->kstrict B", window_to_kstrict(u_b, og), (11, 7, 3, 1, 0))

    _check(bad, "lambda_C^1", curves.nbhd("kstrict", ig, (5, 3, 2, 2, 1), 1), (3, 1, 1, 0, 0))
    _check(bad, "lambda_B^1", curves.nbhd("kstrict", og, (11, 7, 3, 1, 0), 1), (7, 3, 1, 1, 1))
    _check(bad, "mu_B^1", curves.nbhd("pprime", og, (10, 8, 3, 1, 0), 1), (7, 2, 1, 1, 0))
    _check(bad, "u_C^1", curves.nbhd("window", ig, u_c, 1), parse_window("-8,-5,-4,-2,-1", ig))
    _check(bad, "u_B^1", curves.nbhd("window", og, u_b, 1), parse_window("5,-8,-4,-3,-2", og))

    c3, b3 = Space("C", 3, 5), Space("B", 3, 5)
    u = parse_window("1,2,-4", c3)
    e = weyl.lift(u, c3)
    w = weyl.hecke_mul(e, weyl.z_word(c3, 1), c3)
    _check(bad, "u_C.z1", w[:5], (10, 2, 7, 3, 5))
    _check(bad, "u_C^1 rep", weyl.min_coset_rep(w, c3), parse_window("2,-4,-1", c3))
    w = weyl.hecke_mul(e, weyl.z_word(b3, 1), b3)
    _check(bad, "u_B.z1", w[:5], (8, 2, 7, 10, 5))
    _check(bad, "u_B^1 rep", weyl.min_coset_rep(w, b3), parse_window("2,-4,-3", b3))
    w = weyl.hecke_mul(e, weyl.z_word(b3, 2), b3)
    _check(bad, "u_B.z2", w[:5], (9, 10, 7, 3, 5))
    _check(bad, "u_B^2 rep", weyl.min_coset_rep(w, b3), parse_window("-4,-2,-1", b3))

    a4 = Space("A", 4, 12)
    _check(bad, "type A window step", curves.nbhd("window", a4, (3, 4, 6, 8), 1), (4, 6, 8, 12))
    _check(bad, "type A word step", curves.nbhd("word", a4, "001101010000", 1), "000101010001")
    _check(bad, "type A word->partition", word_to_partition("001101010000", a4), (6, 6, 5, 4))

    c8 = Space("C", 3, 4)
    _check(bad, "(5,2,1) word", boundary_word((5, 2, 1), c8), "10001010")
    _check(bad, "(5,2,1) in P'", is_pprime((5, 2, 1), c8), True)
    _check(bad, "(5,5,1) not in P'", is_pprime((5, 5, 1), c8), False)
    report(1, "worked examples", bad)


def test_criterion_2_oracle_equivalence(report):
    bad, checked = [], 0
    start = time.perf_counter()
    for sp in spaces_up_to(12):
        dmax = 2 * sp.k
        for u in all_windows(sp):
            expected = weyl.oracle_chain(u, sp, dmax)
            for model in models_for(sp):
                delta = convert("window", model, u, sp)
                got = [convert(model, "window", x, sp) for x in curves.chain(model, sp, delta, dmax)]
                checked += len(got)
                if got != expected:
                    bad.append(f"{sp} {model} {delta}: {got} != {expected}")
    report(2, "operators equal the Weyl oracle in every model", bad,
           f"({checked} evaluations, {time.perf_counter() - start:.1f}s)")


def test_criterion_3_bruhat_is_inclusion(report):
    bad, pairs = [], 0
    for sp in spaces_up_to(10, "BC"):
        diagrams = list(all_pprime(sp))
        windows = {mu: convert("pprime", "window", mu, sp) for mu in diagrams}
        for a in diagrams:
            for b in diagrams:
                pairs += 1
                if weyl.bruhat_leq(windows[b], windows[a]) != contains(b, a):
                    bad.append(f"{sp} {a} {b}")
    report(3, "Bruhat order equals reverse inclusion on P'", bad, f"({pairs} pairs)")


def test_criterion_4_min_degree_agreement(report):
    bad, pairs = [], 0
    start = time.perf_counter()
    for sp in spaces_up_to(10):
        r = cross_verify(sp, max_letters=10)
        pairs += r.pairs
        bad += [f"{sp} {m}" for m in r.mismatches]
    report(4, "diagram and oracle minimum degrees agree", bad,
           f"({pairs} pairs, {time.perf_counter() - start:.1f}s)")


def test_criterion_5_codimension(report):
    # |lambda| is the codimension of the Schubert variety, the length of the
    # minimal representative of w0 u W_P (u indexes its dimension)
    bad, count = [], 0
    for sp in spaces_up_to(10, "BC"):
        for lam in all_kstrict(sp):
            count += 1
            u = kstrict_to_window(lam, sp)
            if weyl.codimension(u, sp) != sum(lam):
                bad.append(f"{sp} {lam}")
    report(5, "|lambda| equals the codimension length", bad, f"({count} classes)")


def test_criterion_6_structural_suite(report):
    bad = []
    for sp in spaces_up_to(10):
        for model in models_for(sp):
            for x in all_indices(model, sp):
                for other in models_for(sp):
                    if convert(other, model, convert(model, other, x, sp), sp) != x:
                        bad.append(f"round trip {sp} {model}->{other} {x}")
        model = "partition" if sp.family == "A" else "pprime"
        for lam in all_indices(model, sp):
            ch = curves.chain(model, sp, lam, 2 * sp.k)
            if any(not contains(a, b) for a, b in zip(ch, ch[1:])):
                bad.append(f"shrinking {sp} {lam}")
            if ch[-1] != (0,) * sp.k:
                bad.append(f"stabilization {sp} {lam}")
        for word in all_indices("word", sp):
            if curves.nbhd("word", sp, word, 1).count("1") != sp.k:
                bad.append(f"k-preservation {sp} {word}")
    for n in range(3, 6):
        for k in range(2, n):
            sp = Space("B", k, n)
            e = weyl.identity(sp)
            z1 = weyl.z_word(sp, 1)
            if weyl.hecke_mul(e, z1 + z1, sp) == weyl.hecke_mul(e, weyl.z_word(sp, 2), sp):
                bad.append(f"z2 == z1.z1 in {sp}")
    report(6, "structural properties", bad)
