"""Virtual, weld and essential switch pairs, and welded-knot tables.

Composites are read leftmost first: ``T1 S2 S1`` applies ``T`` on
coordinates (1, 2), then ``S`` on (2, 3), then ``S`` on (1, 2).
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .braids import SwitchPair, as_word, fixed_point_count
from .core import FiniteBirack, check_B1, compose_on_triples, switch_order


@dataclass(frozen=True)
class PairStatus:
    v: bool
    w1: bool
    w2: bool
    order_t: int

    @property
    def essential(self) -> bool:
        return self.v and self.w1 and not self.w2

    @property
    def label(self) -> str:
        if not self.v:
            return "none"
        if self.essential:
            return "essential"
        return "weld" if self.w1 else "virtual"


def _same(n, lhs, rhs) -> bool:
    return bool((compose_on_triples(n, lhs) == compose_on_triples(n, rhs)).all())


def _tables(pair: SwitchPair):
    return pair.s.switch_table(), pair.t.switch_table()


def check_V(pair: SwitchPair) -> bool:
    """T has order two and ``T1 S2 T1 = T2 S1 T2``."""
    if switch_order(pair.t) != 2:
        return False
    S, T = _tables(pair)
    return _same(pair.n, [(T, 0), (S, 1), (T, 0)], [(T, 1), (S, 0), (T, 1)])


def check_W1(pair: SwitchPair) -> bool:
    """``T1 S2 S1 = S2 S1 T2``."""
    S, T = _tables(pair)
    return _same(pair.n, [(T, 0), (S, 1), (S, 0)], [(S, 1), (S, 0), (T, 1)])


def check_W2(pair: SwitchPair) -> bool:
    """``S1 S2 T1 = T2 S1 S2``."""
    S, T = _tables(pair)
    return _same(pair.n, [(S, 0), (S, 1), (T, 0)], [(T, 1), (S, 0), (S, 1)])


def pair_status(pair: SwitchPair) -> PairStatus:
    return PairStatus(check_V(pair), check_W1(pair), check_W2(pair), switch_order(pair.t))


def twist_weld_criterion(S: FiniteBirack) -> bool:
    """Elementwise test that (S, twist) satisfies W1.

    Expanding ``T1 S2 S1 = S2 S1 T2`` with T the flip gives: the up action
    commutes, ``(c^a)^b = (c^b)^a``, and the down action ignores up-moved
    arguments, ``a_(c^b) = a_c``.
    """
    U, D = S.up, S.down
    a, b, c = np.indices((S.n,) * 3).reshape(3, -1)
    commutes = (U[b, U[a, c]] == U[a, U[b, c]]).all()
    blind = (D[U[b, c], a] == D[c, a]).all()
    return bool(commutes and blind)


def twist_w2_criterion(S: FiniteBirack) -> bool:
    """Elementwise form of W2 for (S, twist): ``(a_b)_c = (a_c)_b`` and ``c^(a_b) = c^a``."""
    U, D = S.up, S.down
    a, b, c = np.indices((S.n,) * 3).reshape(3, -1)
    commutes = (D[c, D[b, a]] == D[b, D[c, a]]).all()
    blind = (U[D[b, a], c] == U[a, c]).all()
    return bool(commutes and blind)


def find_essential(entries: Sequence[tuple[str, FiniteBirack]], biquandles_only: bool = True) -> list:
    """Ordered pairs ``(s_name, t_name)`` of catalog entries forming essential pairs.

    Entries are taken exactly as stored.  Two labeled pairs related by one
    relabeling applied to both components cannot both consist of stored
    entries unless the relabeling fixes them, so no further identification is
    needed.  By default only entries satisfying B1 are paired.
    """
    pool = [(nm, B) for nm, B in entries if not biquandles_only or check_B1(B)]
    # T must be an involutive switch; filter once
    ts = [(nm, B) for nm, B in pool if switch_order(B) == 2]
    out = []
    for sn, S in pool:
        for tn, T in ts:
            st = pair_status(SwitchPair(S, T))
            if st.essential:
                out.append((sn, tn))
    return out


@dataclass
class WeldedTable:
    words: list
    pairs: list
    baselines: dict
    cells: dict = field(default_factory=dict)     # (word, pair) -> count, None if skipped

    def nontrivial(self, word: str) -> bool:
        return any(v is not None and v != self.baselines[p]
                   for (w, p), v in self.cells.items() if w == word)

    def to_text(self) -> str:
        head = ["knot"] + list(self.pairs)
        rows = [head]
        for w in self.words:
            rows.append([w] + ["" if self.cells.get((w, p)) is None else str(self.cells[(w, p)])
                               for p in self.pairs])
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        lines = ["  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in rows]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["knot"] + list(self.pairs))
        for w in self.words:
            wr.writerow([w] + ["" if self.cells.get((w, p)) is None else self.cells[(w, p)]
                              for p in self.pairs])
        return buf.getvalue()


def welded_table(pairs: Mapping[str, SwitchPair], words: Mapping, strands: int | None = None,
                 only: Mapping[str, Sequence[str]] | None = None) -> WeldedTable:
    """Fixed-point counts for every word under every pair.

    ``only`` optionally limits a word to a subset of the pairs (cells left
    empty otherwise).  A word is nontrivial when some cell differs from the
    unknot value |X|.
    """
    tab = WeldedTable(list(words), list(pairs), {p: pr.n for p, pr in pairs.items()})
    for wname, w in words.items():
        w = as_word(w)
        for pname, pr in pairs.items():
            if only is not None and wname in only and pname not in only[wname]:
                tab.cells[(wname, pname)] = None
                continue
            tab.cells[(wname, pname)] = fixed_point_count(w, pr, strands)
    return tab
