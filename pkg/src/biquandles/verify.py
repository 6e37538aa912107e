"""Verification suites: recompute printed results and compare.

Each suite yields :class:`Check` records; a suite passes when all do.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import _data
from .braids import fixed_point_count
from .catalog import build_named_catalog, builtin, builtin_catalog, builtin_entries
from .core import BIQUANDLE, BIRACK, QUANDLE, RACK
from .enumeration import (enumerate_full, enumerate_racks_and_quandles, enumerate_related)
from .pairs import find_essential, welded_table
from .plat import phi, phi_negative, phi_unknot_formula, series, tower_program


@dataclass(frozen=True)
class Check:
    label: str
    ok: bool | None          # None: skipped
    detail: str = ""

    def line(self) -> str:
        tag = {True: "PASS", False: "FAIL", None: "SKIP"}[self.ok]
        return f"{tag}  {self.label}" + (f"  ({self.detail})" if self.detail else "")


def _counts(build) -> tuple:
    c = build.counts()
    return c[QUANDLE], c[RACK], c[BIQUANDLE], c[BIRACK]


def _appendix(n: int, expected: tuple, workers: int) -> Iterator[Check]:
    build = enumerate_full(n, worker_count=workers)
    got = build_named_catalog(build)
    ref = builtin_catalog(n)
    yield Check(f"n={n} counts {expected}", _counts(build) == expected, f"got {_counts(build)}")
    for e in ref:
        mine = got.get(e.name)
        same = mine.birack == e.birack and mine.classification == e.classification
        yield Check(f"{e.name}  {e.classification.line()}", same,
                    "" if same else f"computed {mine.paper_line()}")


def suite_appendix2(workers: int = 1, extended: bool = False):
    yield from _appendix(2, (1, 1, 1, 0), workers)


def suite_appendix3(workers: int = 1, extended: bool = False):
    yield from _appendix(3, (3, 3, 7, 3), workers)


def suite_counts4(workers: int = 1, extended: bool = False):
    build = enumerate_full(4, worker_count=workers)
    yield Check("n=4 counts (7, 12, 57, 71)", _counts(build) == (7, 12, 57, 71),
                f"got {_counts(build)}")
    got = build_named_catalog(build)
    for e in builtin_entries(4):
        yield Check(f"{e.name} at its printed position", got.get(e.name).birack == e.birack)


def suite_counts56(workers: int = 1, extended: bool = False):
    sizes = (5, 6) if extended else (5,)
    expect = {5: ((21, 52), (113, 517)), 6: ((72, 280), (1506, 11704))}
    for n in sizes:
        rq = enumerate_racks_and_quandles(n, worker_count=workers)
        c = _counts(rq)
        yield Check(f"n={n} quandles/racks {expect[n][0]}", c[:2] == expect[n][0], f"got {c[:2]}")
        rel = enumerate_related(n, "quandles", worker_count=workers)
        c = rel.counts()
        got = (c[BIQUANDLE], c[BIRACK])
        yield Check(f"n={n} quandle-related biquandles/biracks {expect[n][1]}",
                    got == expect[n][1], f"got {got}")
    if not extended:
        yield Check("n=6 (pass --extended)", None)


def _named_pairs(n: int) -> list:
    cat = build_named_catalog(enumerate_full(n))
    return find_essential([(e.name, e.birack) for e in cat])


def suite_essential34(workers: int = 1, extended: bool = False):
    for n, names in ((3, ("P1", "P2")), (4, tuple(f"P{i}" for i in range(3, 11)))):
        want = sorted(_data.PAIRS[p] for p in names)
        got = sorted(_named_pairs(n))
        yield Check(f"n={n} essential pairs {', '.join(names)}", got == want,
                    f"{len(got)} found" + ("" if got == want else f": {got}"))


def suite_bigelow(workers: int = 1, extended: bool = False):
    pair = builtin("bigelow-pair").pair
    for name, m, want in (("b1", 5, 736), ("b2", 6, 1648)):
        got = fixed_point_count(builtin(name), pair, m, workers=workers)
        yield Check(f"{name} on {m} strands = {want} (identity {4 ** m})", got == want,
                    f"got {got}")


def suite_theorem53(workers: int = 1, extended: bool = False):
    w = builtin("theorem53")
    for pname in ("theorem53-pair", "theorem53-essential"):
        got = fixed_point_count(w, builtin(pname).pair, 7, workers=workers)
        yield Check(f"bbb closure with {pname} = 9", got == 9, f"got {got}")
    base = fixed_point_count("", builtin("theorem53-pair").pair, 1)
    yield Check("unknot baseline 3", base == 3, f"got {base}")


def suite_welded(workers: int = 1, extended: bool = False):
    pairs = {p: builtin(p).pair for p in _data.WELDED_PAIRS}
    words = {w: builtin(w) for w in _data.WELDED_WORDS}
    only = {w: [p for p, v in zip(_data.WELDED_PAIRS, vals) if v is not None]
            for w, vals in _data.WELDED_TABLE.items()}
    tab = welded_table(pairs, words, only=only)
    for w, vals in _data.WELDED_TABLE.items():
        for p, v in zip(_data.WELDED_PAIRS, vals):
            if v is None:
                continue
            got = tab.cells[(w, p)]
            yield Check(f"{w} / {p} = {v}", got == v, "" if got == v else f"got {got}")


def lemma61_checks(B, label: str) -> list:
    n = B.n
    out = []
    empty = tower_program(0)
    out.append(Check(f"{label}: phi_0 = |X|", phi(empty, B) == n))
    p1, f1 = phi(tower_program(1), B), phi_unknot_formula(B)
    out.append(Check(f"{label}: phi_1 = set formula", p1 == f1, f"{p1} vs {f1}"))
    s = series(empty, B, 2 * n)
    sym = all(s.coefficients[w] == s.coefficients[-w] for w in range(1, 2 * n + 1))
    sym = sym and all(phi(tower_program(w), B) == phi_negative(tower_program(w), B)
                      for w in range(1, 2 * n + 1))
    out.append(Check(f"{label}: phi_w = phi_-w for w <= {2 * n}", sym))
    out.append(Check(f"{label}: unknot period <= |X|", s.period <= n, f"period {s.period}"))
    return out


def lemma61_sample(sample: int = 50, seed: int = 0) -> list:
    """Every n <= 3 catalog birack plus a seeded sample of n = 4 ones."""
    picks = []
    for n in (2, 3):
        picks += [(e.name, e.birack) for e in build_named_catalog(enumerate_full(n))]
    cat4 = list(build_named_catalog(enumerate_full(4)))
    rng = np.random.default_rng(seed)
    idx = sorted(rng.choice(len(cat4), size=min(sample, len(cat4)), replace=False))
    picks += [(cat4[i].name, cat4[i].birack) for i in idx]
    return picks


def suite_lemma61(workers: int = 1, extended: bool = False):
    for name, B in lemma61_sample():
        yield from lemma61_checks(B, name)


SUITES: dict[str, Callable] = {
    "appendix2": suite_appendix2,
    "appendix3": suite_appendix3,
    "counts4": suite_counts4,
    "counts56": suite_counts56,
    "essential34": suite_essential34,
    "bigelow": suite_bigelow,
    "theorem53": suite_theorem53,
    "welded": suite_welded,
    "lemma61": suite_lemma61,
}


def run_suite(name: str, workers: int = 1, extended: bool = False) -> list:
    return list(SUITES[name](workers=workers, extended=extended))
