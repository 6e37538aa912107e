"""Plat closures, the pair diagonal and writhe coefficient series.

A :class:`PlatProgram` acts on ``2k`` strand positions capped in adjacent
pairs ``(1,2), (3,4), ...`` at the top and bottom.  Operations run from the
top caps downward (leftmost first).  Classical crossings are stored with a
sign and become S/P/Q operators once strand orientations are known:

=========  ========================  ==========================
strands    sign -1                   sign +1
=========  ========================  ==========================
(v, v)     S^-1                      S
(v, ^)     P                         P^-1
(^, v)     Q                         Q^-1
(^, ^)     flip S flip   (sign +1)   flip S^-1 flip  (experimental)
=========  ========================  ==========================

``v`` is a downward strand.  The (^, ^) row has no reference value to
check against and raises a warning when used.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import kernels
from .braids import as_word, letter_position, writhe as braid_writhe
from .core import FiniteBirack, sideways_tables
from .errors import CapacityError, DomainError, ParseError, StructuralError

DEFAULT_BUDGET = 1 << 24

PAIR_KINDS = ("S", "S_inv", "P", "P_inv", "Q", "Q_inv", "S_rot", "S_rot_inv")
KINDS = PAIR_KINDS + ("route", "crossing")
_INV = {"S": "S_inv", "S_inv": "S", "P": "P_inv", "P_inv": "P", "Q": "Q_inv", "Q_inv": "Q",
        "S_rot": "S_rot_inv", "S_rot_inv": "S_rot"}


@dataclass(frozen=True)
class LevelOp:
    """One level of a plat program.

    ``index`` is the 1-based left position for pair operators and crossings;
    ``perm`` (1-based, route only) sends the strand at position j to
    ``perm[j-1]``; ``sign`` is the sign of a classical crossing.
    """

    kind: str
    index: int = 0
    perm: tuple = ()
    sign: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown level operator {self.kind!r}")
        if self.kind == "route":
            p = tuple(self.perm)
            if sorted(p) != list(range(1, len(p) + 1)):
                raise DomainError(f"route {p} is not a bijection")
            object.__setattr__(self, "perm", p)
        elif self.index < 1:
            raise DomainError("operator index must be >= 1")
        if self.kind == "crossing" and self.sign not in (1, -1):
            raise DomainError("crossing sign must be +1 or -1")

    def inverse(self) -> "LevelOp":
        if self.kind == "route":
            inv = [0] * len(self.perm)
            for j, t in enumerate(self.perm):
                inv[t - 1] = j + 1
            return LevelOp("route", perm=tuple(inv))
        if self.kind == "crossing":
            return replace(self, sign=-self.sign)
        return LevelOp(_INV[self.kind], self.index)

    def __str__(self):
        if self.kind == "route":
            return "route " + " ".join(map(str, self.perm))
        if self.kind == "crossing":
            return f"crossing {self.index} {self.sign:+d}"
        return f"{self.kind} {self.index}"


@dataclass(frozen=True)
class PlatProgram:
    strands: int
    ops: tuple = ()
    base_writhe: int = 0
    orientations: tuple = ()     # per top position: +1 down, -1 up; empty until assigned

    def __post_init__(self):
        if self.strands < 2 or self.strands % 2:
            raise DomainError("a plat needs an even, positive number of strands")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            if op.kind == "route":
                if len(op.perm) != self.strands:
                    raise DomainError("route length differs from strand count")
            elif op.index + 1 > self.strands:
                raise DomainError(f"operator {op} runs past {self.strands} strands")

    def inverse(self) -> "PlatProgram":
        return PlatProgram(self.strands, tuple(op.inverse() for op in reversed(self.ops)),
                           -self.base_writhe, ())

    def dump(self) -> str:
        lines = [f"strands {self.strands}", f"writhe {self.base_writhe}"]
        if self.orientations:
            lines.append("orient " + " ".join("d" if o > 0 else "u" for o in self.orientations))
        lines += [str(op) for op in self.ops]
        return "\n".join(lines) + "\n"


def parse_program(text: str) -> PlatProgram:
    strands = None
    bw = 0
    orient: tuple = ()
    ops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        head, args = line[0], line[1:]
        try:
            if head == "strands":
                strands = int(args[0])
            elif head == "writhe":
                bw = int(args[0])
            elif head == "orient":
                orient = tuple(1 if a == "d" else -1 for a in args)
            elif head == "route":
                ops.append(LevelOp("route", perm=tuple(int(a) for a in args)))
            elif head == "crossing":
                ops.append(LevelOp("crossing", int(args[0]), sign=int(args[1])))
            elif head in PAIR_KINDS:
                ops.append(LevelOp(head, int(args[0])))
            else:
                raise ParseError(f"unknown operator {head!r}", line=lineno)
        except (IndexError, ValueError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(f"bad arguments for {head!r}", line=lineno) from None
    if strands is None:
        raise ParseError("missing 'strands' line")
    return PlatProgram(strands, tuple(ops), bw, orient)


# --- operator tables -----------------------------------------------------------

def operator_tables(B: FiniteBirack) -> dict:
    """Pair-operator tables (first, second), 0-based, for every kind."""
    out = {"S": B.switch_table()}
    try:
        out["S_inv"] = B.inverse_switch_table()
    except StructuralError:
        pass
    side = sideways_tables(B)
    out["P"], out["P_inv"] = side["P"], side["P_inv"]
    out["Q"], out["Q_inv"] = side["Q"], side["Q_inv"]
    for name, src in (("S_rot", "S_inv"), ("S_rot_inv", "S")):
        # flip . S^-+ . flip
        if src in out:
            f1, f2 = out[src]
            out[name] = (f2.T, f1.T)
    return out


# --- construction ----------------------------------------------------------------

def unknot_tower(w: int) -> list:
    """``[P, Q, P, ...]`` with w factors."""
    if w < 1:
        raise DomainError("w must be at least 1")
    return ["P" if i % 2 == 0 else "Q" for i in range(w)]


def tower_program(w: int) -> PlatProgram:
    """Two-strand program for the unknot with writhe ``w`` (w = 0: empty)."""
    if w < 0:
        return tower_program(-w).inverse()
    ops = tuple(LevelOp(k, 1) for k in unknot_tower(w)) if w else ()
    return PlatProgram(2, ops, w, (1, -1))


def _nest_route(k: int) -> LevelOp:
    """Adjacent caps (2i-1, 2i) -> nested caps (i, 2k+1-i)."""
    perm = [0] * (2 * k)
    for i in range(1, k + 1):
        perm[2 * i - 2] = i
        perm[2 * i - 1] = 2 * k + 1 - i
    return LevelOp("route", perm=tuple(perm))


def closure_to_plat(word, k: int | None = None) -> PlatProgram:
    """Plat presentation of the closure of a virtual braid word on k strands.

    Braid strands sit at positions 1..k and their return strands at
    k+1..2k.  Virtual letters become position swaps, classical letters become
    crossings.  The result has orientations assigned.
    """
    word = as_word(word)
    k = k or word.strands
    if word.letters and k <= max(l.index for l in word.letters):
        raise DomainError(f"{k} strands cannot carry the word")
    nest = _nest_route(k)
    ops = [nest]
    for l in word.letters:
        pos = letter_position(l, k) + 1
        if l.kind == "t":
            perm = list(range(1, 2 * k + 1))
            perm[pos - 1], perm[pos] = pos + 1, pos
            ops.append(LevelOp("route", perm=tuple(perm)))
        else:
            ops.append(LevelOp("crossing", pos, sign=l.sign))
    ops.append(nest.inverse())
    return assign_orientations(PlatProgram(2 * k, tuple(ops), braid_writhe(word)))


def _strand_paths(prog: PlatProgram):
    """Track strands (named by their top position) through the program.

    Returns (bottom position -> strand, per-op list of the strand names at
    the op's two positions).
    """
    at = list(range(prog.strands))             # at[pos] = strand id
    seen = []
    for op in prog.ops:
        if op.kind == "route":
            new = [0] * prog.strands
            for j, t in enumerate(op.perm):
                new[t - 1] = at[j]
            at = new
        else:
            i = op.index - 1
            seen.append((at[i], at[i + 1]))
            at[i], at[i + 1] = at[i + 1], at[i]
    return at, seen


def _orient(prog: PlatProgram, flip_seed: bool = False) -> tuple:
    """Orientation (+1 down, -1 up) of each strand, by walking components."""
    bottom, _ = _strand_paths(prog)
    bottom_pos = {s: p for p, s in enumerate(bottom)}
    orient = [0] * prog.strands
    for start in range(0, prog.strands, 2):
        if orient[start]:
            continue
        s, d = start, (-1 if flip_seed else 1)
        while not orient[s]:
            orient[s] = d
            if d > 0:
                # leave through the bottom cap, climb the partner strand
                s, d = bottom[bottom_pos[s] ^ 1], -1
            else:
                s, d = s ^ 1, 1
    return tuple(orient)


def assign_orientations(prog: PlatProgram, flip_seed: bool = False) -> PlatProgram:
    """Orient every component and turn crossings into S/P/Q operators.

    Each component is seeded downward at its smallest top position
    (upward with ``flip_seed``).
    """
    orient = _orient(prog, flip_seed)
    _, seen = _strand_paths(prog)
    ops = []
    j = 0
    for op in prog.ops:
        if op.kind == "route":
            ops.append(op)
            continue
        left, right = seen[j]
        j += 1
        if op.kind != "crossing":
            ops.append(op)
            continue
        a, b = orient[left], orient[right]
        neg = op.sign < 0
        if a > 0 and b > 0:
            kind = "S_inv" if neg else "S"
        elif a > 0 > b:
            kind = "P" if neg else "P_inv"
        elif a < 0 < b:
            kind = "Q" if neg else "Q_inv"
        else:
            warnings.warn("upward-upward crossing uses the experimental flip-conjugated operator",
                          stacklevel=2)
            kind = "S_rot" if neg else "S_rot_inv"
        ops.append(LevelOp(kind, op.index))
    return PlatProgram(prog.strands, tuple(ops), prog.base_writhe, orient)


def program_writhe(prog: PlatProgram) -> int:
    """Writhe from operator kinds: parallel crossings count their sign, antiparallel minus it."""
    w = 0
    for op in prog.ops:
        if op.kind in ("S", "S_rot_inv"):
            w += 1
        elif op.kind in ("S_inv", "S_rot"):
            w -= 1
        elif op.kind in ("P", "Q"):
            w += 1
        elif op.kind in ("P_inv", "Q_inv"):
            w -= 1
    return w


# --- evaluation ------------------------------------------------------------------

def diagonal(n: int, k: int) -> np.ndarray:
    """All tuples ``(x1, x1, ..., xk, xk)``, shape (n**k, 2k)."""
    idx = np.arange(n ** k, dtype=np.int64)
    X = np.empty((len(idx), 2 * k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        X[:, 2 * j] = X[:, 2 * j + 1] = idx % n
        idx //= n
    return X


def run_program(prog: PlatProgram, B: FiniteBirack, X: np.ndarray) -> np.ndarray:
    """Apply the program to each row of X (0-based colours); returns a new array."""
    tabs = operator_tables(B)
    names = [k for k in PAIR_KINDS if k in tabs]
    stack = np.stack([np.stack(tabs[k]) for k in names])
    slot = {k: i for i, k in enumerate(names)}
    Y = np.array(X, dtype=np.int64, copy=True)
    pending = []

    def flush():
        if pending:
            kernels.apply_ops(Y, stack, np.array(pending, dtype=np.int64))
            pending.clear()

    for op in prog.ops:
        if op.kind == "route":
            flush()
            new = np.empty_like(Y)
            new[:, np.array(op.perm) - 1] = Y
            Y[:] = new
        elif op.kind == "crossing":
            raise StructuralError("program has unoriented crossings; call assign_orientations")
        else:
            if op.kind not in slot:
                raise StructuralError(f"{op.kind} needs an invertible switch")
            pending.append((slot[op.kind], op.index - 1))
    flush()
    return Y


def phi(prog: PlatProgram, B: FiniteBirack, budget: int = DEFAULT_BUDGET) -> int:
    """Number of diagonal tuples sent into the diagonal."""
    k = prog.strands // 2
    if B.n ** k > budget:
        raise CapacityError(f"{B.n}^{k} diagonal tuples exceed the budget {budget}")
    Y = run_program(prog, B, diagonal(B.n, k))
    return int((Y[:, 0::2] == Y[:, 1::2]).all(axis=1).sum())


def phi_negative(prog: PlatProgram, B: FiniteBirack, budget: int = DEFAULT_BUDGET) -> int:
    """phi of the inverse operator word (the mirror-writhe coefficient)."""
    return phi(prog.inverse(), B, budget)


def phi_unknot_formula(B: FiniteBirack) -> int:
    """``|{x : x^(x_(x^-1)) = x_(x^-1)}|`` read as: y = delta_x^-1(x), count x with upsilon_y(x) = y."""
    n = B.n
    Dinv = np.empty_like(B.down)
    Dinv[np.arange(n)[:, None], B.down] = np.arange(n)[None, :]
    x = np.arange(n)
    y = Dinv[x, x]
    return int((B.up[y, x] == y).sum())


# --- series ----------------------------------------------------------------------

@dataclass
class WritheSeries:
    base_writhe: int
    coefficients: dict = field(default_factory=dict)
    period: int = 0

    def forward(self) -> list:
        ks = sorted(w for w in self.coefficients if w >= self.base_writhe)
        return [self.coefficients[w] for w in ks]

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.forward()) + f" (period {self.period})"

    def to_csv(self) -> str:
        lines = ["writhe,phi"] + [f"{w},{self.coefficients[w]}" for w in sorted(self.coefficients)]
        return "\n".join(lines) + "\n"


def kink_ops(prog: PlatProgram) -> tuple[LevelOp, LevelOp]:
    """The two alternating kink operators appended at the bottom cap (1, 2)."""
    if not prog.orientations:
        raise StructuralError("program needs orientations")
    bottom, _ = _strand_paths(prog)
    first = prog.orientations[bottom[0]]
    return (LevelOp("P", 1), LevelOp("Q", 1)) if first > 0 else (LevelOp("Q", 1), LevelOp("P", 1))


def extend(prog: PlatProgram, k: int) -> PlatProgram:
    """Append k kinks (each raises the writhe by one)."""
    a, b = kink_ops(prog)
    extra = tuple(a if i % 2 == 0 else b for i in range(k))
    return PlatProgram(prog.strands, prog.ops + extra, prog.base_writhe + k, prog.orientations)


def _min_period(seq: Sequence[int], cycle: int) -> int:
    for p in range(1, cycle + 1):
        if cycle % p == 0 and all(seq[i] == seq[(i + p) % cycle] for i in range(cycle)):
            return p
    return cycle


def kink_cycle(prog: PlatProgram, B: FiniteBirack) -> int:
    """A period of the kink sequence: twice the order of the two-kink operator."""
    tabs = operator_tables(B)
    a, b = kink_ops(prog)
    f = tabs[a.kind]
    g = tabs[b.kind]
    n = B.n
    x, y = np.indices((n, n))
    x0, y0 = x.copy(), y.copy()
    order = 0
    while True:
        x, y = f[0][x, y], f[1][x, y]
        x, y = g[0][x, y], g[1][x, y]
        order += 1
        if (x == x0).all() and (y == y0).all():
            return 2 * order


def series(prog: PlatProgram, B: FiniteBirack, half_width: int,
           budget: int = DEFAULT_BUDGET) -> WritheSeries:
    """phi at base +- k for k = 0..half_width, plus the exact period.

    The kink sequence is periodic with period dividing ``kink_cycle``; the
    minimal period is read off one full cycle.
    """
    if half_width < 1:
        raise DomainError("half-width must be at least 1")
    if not prog.orientations:
        prog = assign_orientations(prog)
    base = prog.base_writhe
    out = WritheSeries(base)
    cycle = kink_cycle(prog, B)
    upto = max(half_width, cycle - 1)
    fwd = []
    for k in range(upto + 1):
        v = phi(extend(prog, k), B, budget)
        fwd.append(v)
        if k <= half_width:
            out.coefficients[base + k] = v
    for k in range(1, half_width + 1):
        out.coefficients[base - k] = phi_negative(extend(prog, k), B, budget)
    out.period = _min_period(fwd, cycle)
    return out


def orientation_sensitivity(prog: PlatProgram, B: FiniteBirack) -> tuple[int, int]:
    """phi with the default orientation seed and with every seed flipped."""
    raw = PlatProgram(prog.strands, tuple(_unassign(prog)), prog.base_writhe)
    return phi(assign_orientations(raw), B), phi(assign_orientations(raw, flip_seed=True), B)


def _unassign(prog: PlatProgram):
    for op in prog.ops:
        if op.kind in ("S", "P_inv", "Q_inv", "S_rot_inv"):
            yield LevelOp("crossing", op.index, sign=1)
        elif op.kind in ("S_inv", "P", "Q", "S_rot"):
            yield LevelOp("crossing", op.index, sign=-1)
        else:
            yield op
