import itertools
import json

import numpy as np
import pytest

from biquandles.catalog import build_named_catalog, builtin, dumps
from biquandles.core import (BIQUANDLE, BIRACK, QUANDLE, RACK, FiniteBirack, check_B2, check_B3,
                             class_key, class_members, identity_table,
                             lex_argmin, relabel_all)
from biquandles.enumeration import (CHECKPOINT_VERSION, SearchConfig, enumerate_full,
                                    enumerate_quandles, enumerate_racks,
                                    enumerate_racks_and_quandles, enumerate_related, full_downs,
                                    run_search)
from biquandles.errors import CapacityError, DomainError, ValidationError
from biquandles.perm import all_perms


def counts(build):
    c = build.counts()
    return c[QUANDLE], c[RACK], c[BIQUANDLE], c[BIRACK]


@pytest.mark.parametrize("n,expected", [(1, (1, 0, 0, 0)), (2, (1, 1, 1, 0)), (3, (3, 3, 7, 3))])
def test_small_counts(n, expected):
    assert counts(enumerate_full(n)) == expected


def test_n4_counts(builds):
    assert counts(builds[4]) == (7, 12, 57, 71)


def test_brute_force_n2(builds):
    """All row-permutation table pairs, filtered by the axioms, grouped into classes."""
    P = all_perms(2)
    keys = set()
    for rows in itertools.product(P, repeat=4):
        B = FiniteBirack(np.array(rows[:2]), np.array(rows[2:]))
        if check_B2(B) and check_B3(B):
            keys.add(class_key(B))
    assert keys == {class_key(b) for b, _ in builds[2].entries}


def test_entries_pairwise_distinct(builds):
    for b in builds.values():
        keys = [class_key(B) for B, _ in b.entries]
        assert len(set(keys)) == len(keys)


def test_racks_stored_with_trivial_down(builds):
    ident = identity_table(4)
    for B, c in builds[4].entries:
        if c.cls in (QUANDLE, RACK):
            assert (B.down == ident).all()


def test_quandles_n3_match_printed(builds):
    got = {class_key(b) for b, _ in enumerate_quandles(3).entries}
    assert got == {class_key(builtin(k).birack) for k in ("Q^3_1", "Q^3_2", "Q^3_3")}


def test_quandle_rack_counts_n5():
    b = enumerate_racks_and_quandles(5)
    assert counts(b)[:2] == (21, 52)
    assert len(enumerate_quandles(5)) == 21
    assert len(enumerate_racks(5)) == 52


def test_quandle_rack_counts_n6():
    assert counts(enumerate_racks_and_quandles(6))[:2] == (72, 280)


def test_related_n5():
    c = enumerate_related(5).counts()
    assert (c[BIQUANDLE], c[BIRACK]) == (113, 517)


def test_related_trivial_source_n3(builds):
    rel = enumerate_related(3, [identity_table(3)])
    assert len(rel) == 6
    want = {class_key(b) for b, c in builds[3].entries if c.cls in (QUANDLE, RACK)}
    assert {class_key(b) for b, _ in rel.entries} == want


def test_related_restricts_to_racks_and_quandles():
    rel = enumerate_related(4)
    trivial = {class_key(b) for b, c in rel.entries if c.cls in (QUANDLE, RACK)}
    rq = {class_key(b) for b, _ in enumerate_racks_and_quandles(4).entries}
    assert trivial == rq


def test_related_rejects_bad_tables():
    with pytest.raises(DomainError):
        enumerate_related(3, [[[0, 0, 1], [0, 1, 2], [0, 1, 2]]])
    with pytest.raises(DomainError):
        enumerate_related(3, "groups")


def test_config_validation():
    with pytest.raises(CapacityError):
        SearchConfig(5, "full")
    SearchConfig(5, "full", allow_large=True)
    with pytest.raises(CapacityError):
        SearchConfig(7, "quandles_only")
    with pytest.raises(DomainError):
        SearchConfig(3, "related")
    with pytest.raises(DomainError):
        SearchConfig(3, "sideways")
    with pytest.raises(DomainError):
        SearchConfig(3, worker_count=0)


def test_workers_do_not_change_output(builds):
    one = dumps(build_named_catalog(builds[3]))
    two = dumps(build_named_catalog(enumerate_full(3, worker_count=2)))
    assert one == two


def test_checkpoint_resume(tmp_path):
    path = str(tmp_path / "ck.json")
    first = enumerate_full(3, checkpoint_path=path)
    data = json.loads(open(path).read())
    assert data["version"] == CHECKPOINT_VERSION and len(data["done"]) == data["partitions"]
    # drop half the progress and resume
    data["done"] = data["done"][: len(data["done"]) // 2]
    open(path, "w").write(json.dumps(data))
    again = enumerate_full(3, checkpoint_path=path)
    assert dumps(build_named_catalog(first)) == dumps(build_named_catalog(again))


def test_checkpoint_mismatch(tmp_path):
    path = str(tmp_path / "ck.json")
    enumerate_full(2, checkpoint_path=path)
    with pytest.raises(ValidationError):
        enumerate_full(3, checkpoint_path=path)
    data = json.loads(open(path).read())
    data["version"] = 99
    open(path, "w").write(json.dumps(data))
    with pytest.raises(ValidationError):
        enumerate_full(2, checkpoint_path=path)


def test_full_downs_are_orbit_minimal():
    downs = full_downs(3)
    assert len(downs) > 0
    perms = all_perms(3)
    for d in downs:
        rel = relabel_all(d, perms).reshape(len(perms), -1)
        assert lex_argmin(rel) == 0
    # every class has a member whose down table is one of them
    keep = {d.tobytes() for d in downs}
    for B, _ in enumerate_full(3).entries:
        _, Ds = class_members(B)
        assert any(D.tobytes() in keep for D in Ds)


def test_run_search_with_single_down():
    b = run_search(SearchConfig(3, "racks_only"), identity_table(3)[None])
    assert counts(b)[:2] == (3, 3)
