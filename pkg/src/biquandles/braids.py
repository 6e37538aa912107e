"""Virtual braid words and the fixed-point invariant of their closures.

Grammar: whitespace-separated tokens ``[-](s|t)<i>[^k]``.  ``s`` is a
classical generator, ``t`` a virtual one; ``-`` inverts a classical letter.
Virtual letters are involutions, so ``-t2`` is accepted and read as ``t2``.

Strand convention: on ``m`` strands the letter with index ``i`` acts on the
adjacent tuple positions ``m - i`` and ``m - i + 1`` (1-based), i.e. strands
are numbered from the right.  This is the reading under which the reference
welded-knot table is reproduced; fixed-point counts of Markov-closed words
(the Bigelow braids, the 7-strand example) are the same under either reading.
Letters act leftmost first.
"""
from __future__ import annotations

import re
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .core import FiniteBirack, check_B2
from .errors import CapacityError, DomainError, ParseError, StructuralError

DEFAULT_BUDGET = 1 << 26   # tuples per count

_TOKEN = re.compile(r"^(-?)([st])(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class BraidLetter:
    kind: str        # "s" classical, "t" virtual
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in ("s", "t"):
            raise DomainError(f"letter kind must be 's' or 't', not {self.kind!r}")
        if self.index < 1:
            raise DomainError("generator index must be positive")
        if self.sign not in (1, -1) or (self.kind == "t" and self.sign != 1):
            raise DomainError("bad sign")

    def inverse(self) -> "BraidLetter":
        return self if self.kind == "t" else BraidLetter("s", self.index, -self.sign)

    def __str__(self):
        return ("-" if self.sign < 0 else "") + f"{self.kind}{self.index}"


@dataclass(frozen=True)
class BraidWord:
    letters: tuple = ()
    declared_strands: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.declared_strands is not None and self.letters:
            top = max(l.index for l in self.letters)
            if self.declared_strands <= top:
                raise DomainError(f"{self.declared_strands} strands cannot carry generator index {top}")

    @property
    def strands(self) -> int:
        if self.declared_strands is not None:
            return self.declared_strands
        return max((l.index for l in self.letters), default=0) + 1

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __str__(self):
        return format_word(self)


def parse(text: str, strands: int | None = None) -> BraidWord:
    """Parse a word; raises :class:`ParseError` with the 1-based offset of a bad token."""
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        g = _TOKEN.match(tok)
        if not g:
            raise ParseError(f"malformed braid token {tok!r}", offset=m.start() + 1)
        neg, kind, idx, power = g.groups()
        idx = int(idx)
        if idx < 1:
            raise ParseError(f"generator index must be positive in {tok!r}", offset=m.start() + 1)
        k = 1 if power is None else int(power)
        if kind == "t":
            if neg:
                warnings.warn(f"{tok!r}: virtual generators are involutions; reading as t{idx}", stacklevel=2)
            letters += [BraidLetter("t", idx)] * abs(k)
        else:
            sign = (-1 if neg else 1) * (1 if k >= 0 else -1)
            letters += [BraidLetter("s", idx, sign)] * abs(k)
    return BraidWord(tuple(letters), strands)


def format_word(word: BraidWord) -> str:
    return " ".join(str(l) for l in word.letters)


def as_word(w) -> BraidWord:
    if isinstance(w, BraidWord):
        return w
    if isinstance(w, str):
        return parse(w)
    return BraidWord(tuple(w))


def inverse(word) -> BraidWord:
    word = as_word(word)
    return BraidWord(tuple(l.inverse() for l in reversed(word.letters)), word.declared_strands)


def power(word, k: int) -> BraidWord:
    word = as_word(word)
    base = word if k >= 0 else inverse(word)
    return BraidWord(base.letters * abs(k), word.declared_strands)


def commutator(x, y) -> BraidWord:
    """``x^-1 y^-1 x y``.  The other convention is a conjugate, with the same invariants."""
    x, y = as_word(x), as_word(y)
    return inverse(x) + inverse(y) + x + y


def writhe(word) -> int:
    return sum(l.sign for l in as_word(word).letters if l.kind == "s")


# --- evaluation ----------------------------------------------------------------

@dataclass(frozen=True)
class SwitchPair:
    """``s`` drives classical letters, ``t`` virtual ones."""

    s: FiniteBirack
    t: FiniteBirack

    def __post_init__(self):
        if self.s.n != self.t.n:
            raise DomainError(f"pair carriers differ: {self.s.n} vs {self.t.n}")

    @property
    def n(self) -> int:
        return self.s.n

    def tables(self) -> np.ndarray:
        """Stacked operator tables (S, S^-1, T), shape (3, 2, n, n)."""
        if not check_B2(self.s):
            raise StructuralError("classical switch is not invertible")
        f = np.stack(self.s.switch_table())
        g = np.stack(self.s.inverse_switch_table())
        h = np.stack(self.t.switch_table())
        return np.stack([f, g, h])


def letter_position(letter: BraidLetter, strands: int) -> int:
    """0-based left column acted on by ``letter`` on ``strands`` strands."""
    return strands - letter.index - 1


def word_ops(word, strands: int) -> np.ndarray:
    """Rows ``(table, column)`` for :func:`kernels.apply_ops` (tables as in SwitchPair.tables)."""
    word = as_word(word)
    if word.letters and strands <= max(l.index for l in word.letters):
        raise DomainError(f"{strands} strands cannot carry generator index {max(l.index for l in word.letters)}")
    ops = [((0 if l.sign > 0 else 1) if l.kind == "s" else 2, letter_position(l, strands))
           for l in word.letters]
    return np.array(ops, dtype=np.int64).reshape(-1, 2)


def evaluate(word, pair: SwitchPair, tup: Sequence[int], strands: int | None = None) -> tuple:
    """Image of the 1-based tuple ``tup`` under the word."""
    word = as_word(word)
    m = strands or word.strands
    if len(tup) != m:
        raise DomainError(f"tuple has length {len(tup)}, expected {m}")
    x = np.array(tup, dtype=np.int64)[None, :] - 1
    if x.min() < 0 or x.max() >= pair.n:
        raise DomainError(f"tuple entries must lie in 1..{pair.n}")
    kernels.apply_ops(x, pair.tables(), word_ops(word, m))
    return tuple(int(v) + 1 for v in x[0])


def _count_block(args) -> int:
    tables, ops, n, m, first = args
    rest = m - 1
    idx = np.arange(n ** rest, dtype=np.int64)
    X = np.empty((len(idx), m), dtype=np.int64)
    X[:, 0] = first
    for k in range(m - 1, 0, -1):
        X[:, k] = idx % n
        idx //= n
    Y = X.copy()
    kernels.apply_ops(Y, tables, ops)
    return int((Y == X).all(axis=1).sum())


def fixed_point_count(word, pair: SwitchPair, strands: int | None = None,
                      budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Number of tuples in X^strands fixed by the word's operator."""
    word = as_word(word)
    m = strands or word.strands
    n = pair.n
    if n ** m > budget:
        raise CapacityError(f"{n}^{m} tuples exceed the budget {budget}; raise it or use workers")
    tables = pair.tables()
    ops = word_ops(word, m)
    if workers > 1 and m > 1:
        jobs = [(tables, ops, n, m, v) for v in range(n)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return sum(ex.map(_count_block, jobs))
    return int(kernels.count_fixed(tables, ops, n, m))


# --- named constructions ---------------------------------------------------------

def _s(i: int, k: int = 1) -> BraidWord:
    return power(BraidWord((BraidLetter("s", i),)), k)


def _seq(*parts) -> BraidWord:
    out = BraidWord()
    for p in parts:
        out = out + p
    return out


def bigelow_words() -> dict:
    """The words psi1, psi2, phi1, phi2 and the kernel braids b1 (5 strands), b2 (6 strands)."""
    psi1 = _seq(_s(3, -1), _s(2), _s(1, 2), _s(2), _s(4, 3), _s(3), _s(2))
    psi2 = _seq(_s(4, -1), _s(3), _s(2), _s(1, -2), _s(2), _s(1, 2), _s(2, 2), _s(1), _s(4, 5))
    phi1 = _seq(_s(4), _s(5, -1), _s(2, -1), _s(1))
    phi2 = _seq(_s(4, -1), _s(5, 2), _s(2), _s(1, -2))
    b1 = commutator(_seq(inverse(psi1), _s(4), psi1),
                    _seq(inverse(psi2), _s(4), _s(3), _s(2), _s(1, 2), _s(2), _s(3), _s(4), psi2))
    b2 = commutator(_seq(inverse(phi1), _s(3), phi1), _seq(inverse(phi2), _s(3), phi2))
    return {"psi1": psi1, "psi2": psi2, "phi1": phi1, "phi2": phi2,
            "b1": BraidWord(b1.letters, 5), "b2": BraidWord(b2.letters, 6)}


def theorem53_braid() -> BraidWord:
    """``b b b`` with ``b = b2 t1 s2 t3 t4 t5 t6``, on 7 strands."""
    b = bigelow_words()["b2"].letters + parse("t1 s2 t3 t4 t5 t6").letters
    return BraidWord(b * 3, 7)


def load_words(path: str) -> dict:
    """Read ``name: word`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.split("#", 1)[0].strip()
            if not s:
                continue
            if ":" not in s:
                raise ParseError("expected 'name: word'", line=lineno)
            name, text = s.split(":", 1)
            try:
                out[name.strip()] = parse(text)
            except ParseError as e:
                raise ParseError(str(e), line=lineno) from None
    return out


def stabilize(word, letter: str, strands: int | None = None) -> tuple[BraidWord, int]:
    """Append ``s_k``, ``-s_k`` or ``t_k`` with ``k`` = strands; returns (word, strands + 1)."""
    word = as_word(word)
    m = strands or word.strands
    extra = parse(letter.replace("k", str(m)))
    return BraidWord(word.letters + extra.letters), m + 1


def conjugate(word, by) -> BraidWord:
    by = as_word(by)
    return inverse(by) + as_word(word) + by


__all__ = [
    "BraidLetter", "BraidWord", "SwitchPair", "parse", "format_word", "inverse", "power",
    "commutator", "writhe", "evaluate", "fixed_point_count", "theorem53_braid", "bigelow_words",
    "load_words", "word_ops", "stabilize", "conjugate",
]

