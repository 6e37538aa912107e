import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from biquandles.braids import (BraidLetter, BraidWord, SwitchPair, commutator, conjugate,
                               evaluate, fixed_point_count, format_word, inverse, load_words,
                               parse, power, stabilize, theorem53_braid, writhe)
from biquandles.catalog import builtin
from biquandles.core import check_B1, switch_apply, twist
from biquandles.errors import CapacityError, DomainError, ParseError
from biquandles.pairs import check_V


def pair(s, t):
    return SwitchPair(builtin(s).birack, builtin(t).birack)


# --- parsing -------------------------------------------------------------------------

def test_parse_examples():
    w = parse("s1 s1 s1")
    assert w.letters == (BraidLetter("s", 1),) * 3
    w46 = parse("-s1 -s2 t3 -s2 s1 -s4 t3 -s2 -s3 s4 -s3 s2")
    assert len(w46) == 12 and w46.strands == 5
    assert parse("s1^3") == parse("s1 s1 s1")
    assert parse("s2^-2") == parse("-s2 -s2")


def test_parse_errors_report_offset():
    with pytest.raises(ParseError) as e:
        parse("s1 x2 s1")
    assert e.value.offset == 4
    with pytest.raises(ParseError):
        parse("s0")


def test_negative_virtual_letter_warns():
    with pytest.warns(UserWarning):
        w = parse("-t2")
    assert w == parse("t2")


def test_declared_strands_checked():
    with pytest.raises(DomainError):
        BraidWord(parse("s3").letters, 3)


letters = st.builds(lambda k, i, s: BraidLetter(k, i, s if k == "s" else 1),
                    st.sampled_from("st"), st.integers(1, 5), st.sampled_from([1, -1]))


@given(st.lists(letters, max_size=20))
def test_format_parse_round_trip(ls):
    w = BraidWord(tuple(ls))
    assert parse(format_word(w)) == w


# --- word operations ----------------------------------------------------------------------

def test_word_ops():
    assert format_word(inverse(parse("s1 -s2"))) == "s2 -s1"
    assert power(parse("s1 t2"), -2) == parse("t2 -s1 t2 -s1")


@given(st.lists(letters, max_size=10), st.lists(letters, max_size=10))
def test_commutator_writhe_zero(x, y):
    assert writhe(commutator(BraidWord(tuple(x)), BraidWord(tuple(y)))) == 0


def test_writhe_examples():
    assert writhe("s1 s1 s1") == 3
    assert writhe("s1 -s2 t1") == 0
    assert writhe(builtin("w3.1")) == -1


def test_bigelow_words():
    assert builtin("psi1") == parse("-s3 s2 s1 s1 s2 s4 s4 s4 s3 s2")
    assert builtin("b1").strands == 5 and builtin("b2").strands == 6
    assert writhe(builtin("b1")) == 0


# --- evaluation -----------------------------------------------------------------------------

def test_evaluate_examples():
    p = pair("BQ^3_3", "Q^3_1")
    assert evaluate("", p, (1, 2, 3), 3) == (1, 2, 3)
    assert evaluate("s1", p, (2, 1)) == switch_apply(builtin("BQ^3_3").birack, 2, 1) == (3, 3)
    for a, b in itertools.product(range(1, 4), repeat=2):
        assert evaluate("t1", p, (a, b)) == (b, a)
    with pytest.raises(DomainError):
        evaluate("s1", p, (1, 2, 3))
    with pytest.raises(DomainError):
        evaluate("s1", p, (1, 4))


@settings(max_examples=30, deadline=None)
@given(st.lists(letters, min_size=1, max_size=12), st.data())
def test_inverse_undoes_word(ls, data):
    w = BraidWord(tuple(ls))
    p = builtin("P3").pair
    m = w.strands
    tup = tuple(data.draw(st.lists(st.integers(1, 4), min_size=m, max_size=m)))
    assert evaluate(inverse(w), p, evaluate(w, p, tup, m), m) == tup


def test_unlink_baseline():
    for n, pname in ((3, "P1"), (4, "P3")):
        p = builtin(pname).pair
        for c in (1, 2, 3):
            assert fixed_point_count(BraidWord((), c), p, c) == n ** c


def test_trefoil_example():
    assert fixed_point_count("s1 s1 s1", SwitchPair(builtin("BQ^3_3").birack, twist(3)), 2) == 9


def test_bigelow_counts():
    p = builtin("bigelow-pair").pair
    assert fixed_point_count(builtin("b1"), p, 5) == 736
    assert fixed_point_count(builtin("b2"), p, 6) == 1648


def test_theorem53():
    w = theorem53_braid()
    assert w.strands == 7
    assert fixed_point_count(w, builtin("theorem53-pair").pair) == 9
    assert fixed_point_count(w, builtin("theorem53-essential").pair) == 9


def test_parallel_count_matches():
    p = builtin("bigelow-pair").pair
    assert fixed_point_count(builtin("b2"), p, 6, workers=3) == 1648


def test_budget():
    with pytest.raises(CapacityError):
        fixed_point_count("s1", builtin("P3").pair, 10, budget=1000)


# --- Markov moves ------------------------------------------------------------------------------

WORDS = ["s1 s1 s1", "s1 -s2 s1 -s2", "t1 -s2 t1 -s1 -s1 t2", "s1 t1 -s1 s2 s1 t1 -s1 -s2"]


def _virtual_pairs_n3():
    out = []
    for s in ("Q^3_1", "Q^3_2", "Q^3_3", "BQ^3_1", "BQ^3_3", "BQ^3_5", "BQ^3_6"):
        for t in ("Q^3_1", "BQ^3_5", "BQ^3_1"):
            p = pair(s, t)
            # stabilization needs the kink condition on the real switch
            if check_V(p) and check_B1(p.s):
                out.append(p)
    return out


def test_stabilization_invariance():
    for p in _virtual_pairs_n3():
        for w in WORDS:
            w = parse(w)
            m = w.strands
            base = fixed_point_count(w, p, m)
            for extra in ("sk", "-sk", "tk"):
                w2, m2 = stabilize(w, extra, m)
                assert fixed_point_count(w2, p, m2) == base, (w, extra)


def test_conjugation_invariance():
    rng = np.random.default_rng(7)
    p = builtin("P3").pair
    for w in WORDS:
        w = parse(w)
        m = w.strands
        base = fixed_point_count(w, p, m)
        for _ in range(10):
            k = rng.integers(1, 6)
            u = BraidWord(tuple(BraidLetter(str(rng.choice(["s", "t"])), int(rng.integers(1, m)),
                                            1) for _ in range(k)))
            u = BraidWord(tuple(BraidLetter(l.kind, l.index, int(rng.choice([1, -1])) if l.kind == "s" else 1)
                                for l in u.letters))
            assert fixed_point_count(conjugate(w, u), p, m) == base


def test_twist_pairs_are_virtual(catalogs):
    for n in (2, 3):
        for e in catalogs[n]:
            if e.classification.cls in ("quandle", "biquandle"):
                assert check_V(SwitchPair(e.birack, twist(n)))


def test_load_words(tmp_path):
    f = tmp_path / "words.txt"
    f.write_text("# test\ntrefoil: s1 s1 s1\n\nfig8: s1 -s2 s1 -s2\n")
    assert load_words(str(f)) == {"trefoil": parse("s1 s1 s1"), "fig8": parse("s1 -s2 s1 -s2")}
    f.write_text("ok: s1\nbad s1\n")
    with pytest.raises(ParseError) as e:
        load_words(str(f))
    assert e.value.line == 2
