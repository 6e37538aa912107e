import warnings

import pytest

from biquandles.braids import SwitchPair, fixed_point_count, parse
from biquandles.catalog import builtin
from biquandles.core import twist
from biquandles.errors import CapacityError, DomainError, StructuralError
from biquandles.plat import (LevelOp, PlatProgram, assign_orientations, closure_to_plat, diagonal,
                             extend, parse_program, phi, phi_negative, phi_unknot_formula,
                             program_writhe, series, tower_program, unknot_tower)


def B(name):
    return builtin(name).birack


def test_tower_examples():
    assert unknot_tower(3) == ["P", "Q", "P"]
    assert tower_program(0).ops == ()
    with pytest.raises(DomainError):
        unknot_tower(0)
    inv = tower_program(-2)
    assert [op.kind for op in inv.ops] == ["Q_inv", "P_inv"]
    assert inv.base_writhe == -2
    assert program_writhe(tower_program(5)) == 5


def test_diagonal():
    D = diagonal(3, 2)
    assert D.shape == (9, 4)
    assert (D[:, 0] == D[:, 1]).all() and (D[:, 2] == D[:, 3]).all()
    assert len({tuple(r) for r in D}) == 9


def test_phi_examples():
    assert phi(tower_program(1), twist(4)) == 4
    assert phi(tower_program(0), B("BQ^3_3")) == 3
    assert phi(tower_program(1), B("R^3_1")) == 0
    assert phi(tower_program(1), B("BQ^3_3")) == 3


@pytest.mark.parametrize("n", [2, 3])
def test_phi_one_matches_formula(n, catalogs):
    for e in catalogs[n]:
        assert phi(tower_program(1), e.birack) == phi_unknot_formula(e.birack), e.name


@pytest.mark.parametrize("name", ["BQ^3_3", "BQ^3_6", "R^3_1", "BR^3_2", "BQ^4_19"])
def test_phi_symmetric_in_writhe(name):
    b = B(name)
    for w in range(1, 7):
        assert phi(tower_program(w), b) == phi_negative(tower_program(w), b)
        assert phi(tower_program(-w), b) == phi(tower_program(w), b)


CLOSURES = ["s1", "-s1", "s1 s1 s1", "s1 -s2 s1 -s2", "s1 s2", "-s1 -s2 -s1 -s2 -s1"]


@pytest.mark.parametrize("word", CLOSURES)
def test_closure_matches_braid_count(word):
    w = parse(word)
    for name in ("BQ^3_3", "BQ^3_5", "Q^3_2", "BQ^4_3"):
        b = B(name)
        prog = closure_to_plat(w)
        assert phi(prog, b) == fixed_point_count(w, SwitchPair(b, twist(b.n)), w.strands)


def test_closure_with_virtual_letters():
    w = parse("t1 -s2 t1 -s1 -s1 t2")
    for name in ("BQ^3_3", "Q^3_3"):
        b = B(name)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            got = phi(closure_to_plat(w), b)
        assert got == fixed_point_count(w, SwitchPair(b, twist(b.n)), w.strands)


def test_all_virtual_word_counts_components():
    b = B("BQ^3_3")
    assert phi(closure_to_plat(parse("t1"), 3), b) == 3 ** 2
    assert phi(closure_to_plat(parse("t1 t2"), 3), b) == 3
    assert phi(closure_to_plat(parse(""), 3), b) == 3 ** 3


def test_negative_kink_closure_is_tower():
    b = B("BQ^4_19")
    assert phi(closure_to_plat(parse("-s1"), 2), b) == phi(tower_program(-1), b)
    assert phi(closure_to_plat(parse("s1"), 2), b) == phi(tower_program(1), b)


def test_route_round_trip_invariance():
    r = LevelOp("route", perm=(2, 3, 4, 1))
    prog = closure_to_plat(parse("s1 s1 s1"))
    padded = PlatProgram(prog.strands, (r, r.inverse()) + prog.ops, prog.base_writhe, prog.orientations)
    assert phi(padded, B("BQ^3_3")) == phi(prog, B("BQ^3_3"))


def test_orientations_anchor():
    prog = closure_to_plat(parse("-s1 -s1 -s1"))
    assert prog.orientations[0] == 1
    assert prog.base_writhe == -3
    assert program_writhe(prog) == -3


def test_unassigned_crossing_rejected():
    raw = PlatProgram(2, (LevelOp("crossing", 1, sign=1),))
    with pytest.raises(StructuralError):
        phi(raw, twist(2))
    assert [op.kind for op in assign_orientations(raw).ops] == ["P_inv"]


def test_program_validation():
    with pytest.raises(DomainError):
        PlatProgram(3)
    with pytest.raises(DomainError):
        PlatProgram(2, (LevelOp("S", 2),))
    with pytest.raises(DomainError):
        LevelOp("X", 1)
    with pytest.raises(DomainError):
        LevelOp("route", perm=(1, 1))


def test_dump_parse_round_trip():
    prog = closure_to_plat(parse("s1 -s2 s1 -s2"))
    again = parse_program(prog.dump())
    assert again == prog
    assert phi(again, B("BQ^3_3")) == phi(prog, B("BQ^3_3"))


def test_series_output():
    s = series(tower_program(0), twist(3), 3)
    assert s.forward() == [3, 3, 3, 3]
    assert s.to_text() == "3 3 3 3 (period 1)"
    csv = s.to_csv().splitlines()
    assert csv[0] == "writhe,phi" and csv[1] == "-3,3" and len(csv) == 8


def test_series_matches_towers():
    b = B("BQ^3_3")
    s = series(tower_program(0), b, 6)
    for w in range(-6, 7):
        assert s.coefficients[w] == phi(tower_program(w), b)
    assert 1 <= s.period <= 3
    assert extend(tower_program(0), 2).base_writhe == 2


def test_series_rejects_zero_width():
    with pytest.raises(DomainError):
        series(tower_program(0), twist(2), 0)


def test_budget():
    with pytest.raises(CapacityError):
        phi(closure_to_plat(parse("s1 s2 s3 s4")), twist(4), budget=100)
