"""Pure numpy/Python versions of the hot kernels.

The compiled module ``_kernels`` exposes the same four functions with the
same signatures; :mod:`biquandles.kernels` picks one at import time.
"""
from __future__ import annotations

import numpy as np

from .perm import all_perms

COMPILED = False


def _candidate_mask(down: np.ndarray) -> np.ndarray | None:
    """``mask[b, c, x]``: row ``x`` of ``up`` may equal ``x`` at ``up[b, c]``.

    Row ``x`` of down must equal the permutation ``a -> Dinv[c_b][D[c][D[b][a]]]``.
    Returns None when some cell has no candidate.
    """
    n = down.shape[0]
    dinv = np.empty_like(down)
    dinv[np.arange(n)[:, None], down] = np.arange(n)[None, :]
    b, c, a = np.indices((n, n, n))
    p = dinv[down[c, b], down[c, down[b, a]]]           # (b, c, a)
    mask = (p[:, :, None, :] == down[None, None, :, :]).all(axis=3)
    if not mask.any(axis=2).all():
        return None
    return mask


def _full_check(up: np.ndarray, down: np.ndarray) -> bool:
    n = up.shape[0]
    a, b = np.indices((n, n))
    if len(np.unique(up[a, b] * n + down[b, a])) != n * n:
        return False
    a, b, c = np.indices((n, n, n)).reshape(3, -1)
    U, D = up, down
    if not (U[U[a, b], U[D[b, a], c]] == U[a, U[b, c]]).all():
        return False
    if not (D[U[D[b, a], c], U[a, b]] == U[D[U[b, c], a], D[c, b]]).all():
        return False
    return bool((D[D[c, b], D[U[b, c], a]] == D[c, D[b, a]]).all())


def solve_up(down) -> np.ndarray:
    """All ``up`` tables forming a birack with the given ``down`` table.

    Backtracks over rows of ``up``.  The mixed relation of down actions
    restricts each cell to a set of row indices; the pure up relation forces
    whole rows once three rows are known.  Returns shape (k, n, n), in the
    order the search meets them.
    """
    down = np.ascontiguousarray(down, dtype=np.int64)
    n = down.shape[0]
    mask = _candidate_mask(down)
    if mask is None:
        return np.empty((0, n, n), dtype=np.int64)
    P = all_perms(n)
    cols = np.arange(n)
    rowcands = [P[mask[b][cols[None, :], P].all(axis=1)] for b in range(n)]
    if any(len(r) == 0 for r in rowcands):
        return np.empty((0, n, n), dtype=np.int64)
    maskl = mask.tolist()
    D = down.tolist()
    out: list = []

    def propagate(U):
        changed = True
        while changed:
            changed = False
            for a in range(n):
                ua = U[a]
                if ua is None:
                    continue
                for b in range(n):
                    ub = U[b]
                    if ub is None:
                        continue
                    e = D[b][a]
                    ue = U[e]
                    if ue is None:
                        continue
                    inv = [0] * n
                    for i, x in enumerate(ue):
                        inv[x] = i
                    r = [ua[ub[inv[c]]] for c in range(n)]
                    t = ua[b]
                    if U[t] is None:
                        mt = maskl[t]
                        if not all(mt[c][r[c]] for c in range(n)):
                            return False
                        U[t] = r
                        changed = True
                    elif U[t] != r:
                        return False
        return True

    def rec(U):
        try:
            r = U.index(None)
        except ValueError:
            arr = np.array(U, dtype=np.int64)
            if _full_check(arr, down):
                out.append(arr)
            return
        for p in rowcands[r].tolist():
            V = list(U)
            V[r] = p
            if propagate(V):
                rec(V)

    rec([None] * n)
    if not out:
        return np.empty((0, n, n), dtype=np.int64)
    return np.stack(out)


def admissible_downs(n: int, chunk: int = 1 << 15) -> np.ndarray:
    """Down tables that admit at least one up table cell-wise.

    Scans all ``(n!)^n`` row tuples in lexicographic order and keeps those
    for which every cell candidate set is non-empty.  Shape (k, n, n).
    """
    P = all_perms(n)
    g = len(P)
    total = g ** n
    keep = []
    ar = np.arange(n)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = np.empty((len(idx), n), dtype=np.int64)
        rem = idx.copy()
        for k in range(n - 1, -1, -1):
            digits[:, k] = rem % g
            rem //= g
        D = P[digits]                                   # (N, n, n)
        N = len(D)
        dinv = np.empty_like(D)
        dinv[np.arange(N)[:, None, None], ar[None, :, None], D] = ar[None, None, :]
        b, c, a = np.indices((n, n, n))
        rows = np.arange(N)[:, None, None, None]
        p = dinv[rows, D[:, c, b], D[rows, c, D[rows, b, a]]]   # (N, b, c, a)
        hit = (p[:, :, :, None, :] == D[:, None, None, :, :]).all(axis=4).any(axis=3)
        ok = hit.all(axis=(1, 2))
        if ok.any():
            keep.append(D[ok])
    if not keep:
        return np.empty((0, n, n), dtype=np.int64)
    return np.concatenate(keep)


def apply_ops(X, tables, ops) -> None:
    """Apply pair operators to every row of ``X`` in place, leftmost first.

    ``tables`` has shape (K, 2, n, n): operator k sends ``(a, b)`` to
    ``(tables[k, 0, a, b], tables[k, 1, a, b])``.  ``ops`` rows are
    ``(k, pos)`` acting on columns ``pos, pos + 1``.
    """
    for k, pos in np.asarray(ops, dtype=np.int64).tolist():
        a = X[:, pos].copy()
        b = X[:, pos + 1]
        f = tables[k]
        X[:, pos] = f[0][a, b]
        X[:, pos + 1] = f[1][a, b]


def count_fixed(tables, ops, n: int, m: int, chunk: int = 1 << 16) -> int:
    """Number of tuples in ``range(n)**m`` fixed by ``ops``."""
    total = n ** m
    hits = 0
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        X = np.empty((len(idx), m), dtype=np.int64)
        rem = idx.copy()
        for k in range(m - 1, -1, -1):
            X[:, k] = rem % n
            rem //= n
        Y = X.copy()
        apply_ops(Y, tables, ops)
        hits += int((Y == X).all(axis=1).sum())
    return hits
