import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from biquandles import perm
from biquandles.catalog import builtin
from biquandles.core import (BIQUANDLE, QUANDLE, AlexanderParams, FiniteBirack, GroupTable,
                             alexander, burau, canonical_form, check_B1, check_B2, check_B3,
                             check_derived_relations, class_key, classify, cyclic_group,
                             order_by_repeated_composition, orientation_swap, relabel,
                             sideways_P, sideways_Q, switch_apply, switch_inverse_apply,
                             switch_order, symmetry, twist, wada)
from biquandles.errors import CapacityError, DomainError, ParseError, StructuralError


def entry(name):
    return builtin(name).birack


# --- permutations -----------------------------------------------------------------

def test_cycle_notation_round_trip():
    p = perm.parse_cycles("(1 3 2)(4 5)", 5)
    assert perm.format_cycles(p) == "(1 3 2)(4 5)"
    assert perm.parse_cycles("(132)", 3) == perm.parse_cycles("(1 3 2)", 3)
    for sym in ("ι", "i", "I", "\\iota"):
        assert perm.parse_cycles(sym, 3) == (0, 1, 2)


def test_cycle_notation_errors():
    with pytest.raises(DomainError):
        perm.parse_cycles("(1 2)(2 3)", 3)
    with pytest.raises(DomainError):
        perm.parse_cycles("(1 4)", 3)
    with pytest.raises(ParseError):
        perm.parse_cycles("(1 2) x", 3)


@given(st.permutations(range(6)))
def test_cycles_round_trip_property(p):
    p = tuple(p)
    assert perm.parse_cycles(perm.format_cycles(p), 6) == p
    assert perm.compose(p, perm.inverse(p)) == tuple(range(6))


# --- switch evaluation ----------------------------------------------------------------

def test_switch_apply_examples():
    assert switch_apply(twist(3), 1, 2) == (2, 1)
    A = alexander(3, 1, 2)
    assert switch_apply(A, 2, 1) == (3, 3)
    assert switch_apply(A, 1, 1) == (1, 1)
    with pytest.raises(DomainError):
        switch_apply(A, 0, 1)


def test_switch_inverse_apply():
    assert switch_inverse_apply(twist(3), 2, 1) == (1, 2)
    A = alexander(3, 1, 2)
    assert switch_inverse_apply(A, 3, 3) == (2, 1)
    for a, b in itertools.product(range(1, 4), repeat=2):
        assert switch_inverse_apply(A, *switch_apply(A, a, b)) == (a, b)


def _non_b2_table():
    for P in itertools.product(perm.all_perms(2), repeat=4):
        B = FiniteBirack(np.array(P[:2]), np.array(P[2:]))
        if not check_B2(B):
            return B
    raise AssertionError("every n=2 table is invertible")


def test_switch_inverse_needs_b2():
    bad = _non_b2_table()
    with pytest.raises(StructuralError):
        switch_inverse_apply(bad, 1, 1)
    with pytest.raises(StructuralError):
        symmetry(bad, "crossing_sign")
    assert classify(bad).cls == "invalid"


def test_sideways_examples():
    T = twist(4)
    for a, b in itertools.product(range(1, 5), repeat=2):
        assert sideways_P(T, a, b) == (b, a)
        assert sideways_Q(T, a, b) == (b, a)
    assert sideways_P(entry("R^3_1"), 1, 1) == (1, 3)
    assert sideways_P(entry("BQ^3_3"), 2, 2) == (3, 3)


# --- axioms ----------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_twist_axioms(n):
    T = twist(n)
    assert check_B1(T) and check_B2(T) and check_B3(T) and check_derived_relations(T)


def test_b1_examples():
    assert not check_B1(entry("R^3_1"))
    assert check_B1(entry("BQ^3_3"))


def test_b2_example_n2():
    # up row 1 is (1 2), everything else trivial: outputs are pairwise distinct
    B = FiniteBirack.from_cycles(2, ["(1 2)", "ι"], "ι")
    outs = {switch_apply(B, a, b) for a in (1, 2) for b in (1, 2)}
    assert check_B2(B) == (len(outs) == 4)
    assert not check_B3(B)


def test_b3_example_and_failure():
    assert check_B3(entry("BQ^3_6"))
    rng = np.random.default_rng(1)
    P = perm.all_perms(3)
    for _ in range(200):
        B = FiniteBirack(P[rng.integers(0, 6, 3)], P[rng.integers(0, 6, 3)])
        if not check_B3(B):
            break
    else:
        pytest.fail("no B3 failure among random tables")
    assert classify(B).cls == "invalid"


def test_derived_relations_on_catalogs(catalogs):
    for n in (2, 3):
        for e in catalogs[n]:
            assert check_derived_relations(e.birack), e.name
    assert check_derived_relations(alexander(5, 2, 3))


def test_b1_unique_solutions(catalogs):
    for e in catalogs[3]:
        B = e.birack
        if e.classification.cls not in (QUANDLE, BIQUANDLE):
            continue
        U, D = B.up, B.down
        for a in range(3):
            assert sum(U[x, a] == x and D[a, x] == a for x in range(3)) == 1
            assert sum(D[y, a] == y and U[a, y] == a for y in range(3)) == 1


# --- classification --------------------------------------------------------------------

def test_classify_examples():
    c = classify(twist(3))
    assert (c.cls, c.flags, c.order, c.c1, c.c2) == (QUANDLE, ("S",), 2, 6, 0)
    c = classify(entry("BQ^3_5"))
    assert (c.cls, set(c.flags), c.order, c.c1, c.c2) == (BIQUANDLE, {"S", "DPQ"}, 2, 6, 0)
    c = classify(entry("BQ^3_1"))
    assert (c.cls, c.flags, c.order, c.u, c.d, c.c1, c.c2) == (BIQUANDLE, ("S",), 2, 1, 1, 2, 0)


def test_classify_degenerate():
    c = classify(twist(1))
    assert (c.cls, c.order, c.c1, c.c2) == (QUANDLE, 1, 2, 0)


def test_constant_points_of_a12():
    c = classify(alexander(3, 1, 2))
    assert (c.u, c.d, c.c1, c.c2) == (0, 3, 3, 3)


def test_order_cross_check_n2():
    for P in itertools.product(perm.all_perms(2), repeat=4):
        B = FiniteBirack(np.array(P[:2]), np.array(P[2:]))
        if check_B2(B):
            assert switch_order(B) == order_by_repeated_composition(B)


# --- relabeling and canonical forms --------------------------------------------------------

def test_relabel_example():
    B = FiniteBirack.from_cycles(3, ["(2 3)", "ι", "ι"], ["(2 3)", "ι", "ι"])
    R = relabel(B, "(1 2 3)")
    assert R == FiniteBirack.from_cycles(3, ["ι", "(1 3)", "ι"], ["ι", "(1 3)", "ι"])
    assert relabel(B, "ι") == B
    B3 = entry("BQ^3_3")
    s = "(1 3 2)"
    assert relabel(relabel(B3, s), perm.format_cycles(perm.inverse(perm.parse_cycles(s, 3)))) == B3


def test_relabel_rejects_non_bijection():
    with pytest.raises(DomainError):
        relabel(twist(3), [1, 1, 2])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["Q^3_2", "R^3_1", "BQ^3_3", "BQ^3_6", "BR^3_1", "BR^3_2"]),
       st.permutations([1, 2, 3]), st.permutations([1, 2, 3]))
def test_relabel_is_group_action(name, s, r):
    B = entry(name)
    sr = tuple(s[r[i] - 1] for i in range(3))        # s after r
    assert relabel(B, sr) == relabel(relabel(B, r), s)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["Q^3_3", "R^3_2", "BQ^3_2", "BQ^3_7", "BR^3_3", "BQ^4_19", "BQ^4_53"]),
       st.data())
def test_canonical_form_and_classify_invariant(name, data):
    B = entry(name)
    s = data.draw(st.permutations(list(range(1, B.n + 1))))
    R = relabel(B, s)
    assert canonical_form(R) == canonical_form(B)
    assert classify(R) == classify(B)


def test_canonical_form_examples():
    for n in (1, 2, 3, 4):
        assert canonical_form(twist(n)) == twist(n).encoding()
    assert canonical_form(alexander(3, 2, 2)) == canonical_form(entry("BQ^3_5"))


def test_canonical_form_burau_example():
    # stated identification of B_2(Z_3) with Q^3_2
    assert canonical_form(burau(3, 2)) == canonical_form(entry("Q^3_2"))


def test_burau_class_computed():
    assert canonical_form(burau(3, 2)) == canonical_form(entry("Q^3_3"))


def test_canonical_form_bound():
    with pytest.raises(CapacityError):
        canonical_form(twist(5), bound=4)


def test_class_key_merges_symmetries():
    B = entry("BQ^3_3")
    assert class_key(orientation_swap(B)) == class_key(B)
    assert class_key(symmetry(B, "crossing_sign")) == class_key(B)


# --- symmetries ------------------------------------------------------------------------------

def test_symmetry_examples(catalogs):
    for n in (2, 3, 4):
        T = twist(n)
        for kind in ("crossing_sign", "orientation", "both"):
            assert symmetry(T, kind) == T
    B7 = entry("BQ^3_7")
    assert relabel(symmetry(B7, "orientation"), "(1 2)") == B7
    for e in catalogs[3]:
        B = e.birack
        assert symmetry(symmetry(B, "crossing_sign"), "crossing_sign") == B
        for kind in ("crossing_sign", "orientation", "both"):
            img = symmetry(B, kind)
            assert check_B2(img) and check_B3(img)
            a, b = classify(img), classify(B)
            assert (a.order, a.c1, a.c2) == (b.order, b.c1, b.c2)
    with pytest.raises(DomainError):
        symmetry(twist(2), "mirror")


# --- constructors ------------------------------------------------------------------------------

def test_alexander_examples():
    assert alexander(3, 1, 2) == FiniteBirack.from_cycles(3, ["ι", "(1 3 2)", "(1 2 3)"], "(2 3)")
    for m in (2, 3, 5, 7):
        assert alexander(m, 1, 1) == twist(m)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_alexander_is_biquandle(m):
    for lam in range(1, m):
        for mu in range(1, m):
            B = alexander(m, lam, mu)
            assert check_B1(B) and check_B2(B) and check_B3(B)


def test_alexander_rejects_non_units():
    with pytest.raises(DomainError):
        alexander(4, 2, 1)
    with pytest.raises(DomainError):
        AlexanderParams(6, 1, 3)
    with pytest.raises(DomainError):
        burau(1, 1)


def test_wada():
    assert wada(cyclic_group(2)) == twist(2)
    for m in (3, 4, 5):
        W = wada(cyclic_group(m))
        assert check_B2(W) and check_B3(W)


def test_group_table_validation():
    with pytest.raises(DomainError):
        GroupTable([[0, 1], [0, 1]])


def test_table_rows_must_be_permutations():
    with pytest.raises(DomainError):
        FiniteBirack([[0, 0], [0, 1]], [[0, 1], [0, 1]])
