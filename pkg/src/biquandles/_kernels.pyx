# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same API as ``_pykernels``."""
import numpy as np
cimport numpy as cnp

from .perm import all_perms

cnp.import_array()

COMPILED = True

cdef enum:
    MAXN = 8


cdef bint _propagate(long[:, :] U, char[:] assigned, long[:, :] D,
                     char[:, :, :] mask, int n) noexcept:
    cdef int a, b, c, e, t, i
    cdef long inv[MAXN]
    cdef long r[MAXN]
    cdef bint changed = True, same
    while changed:
        changed = False
        for a in range(n):
            if not assigned[a]:
                continue
            for b in range(n):
                if not assigned[b]:
                    continue
                e = D[b, a]
                if not assigned[e]:
                    continue
                for i in range(n):
                    inv[U[e, i]] = i
                for c in range(n):
                    r[c] = U[a, U[b, inv[c]]]
                t = U[a, b]
                if not assigned[t]:
                    for c in range(n):
                        if not mask[t, c, r[c]]:
                            return False
                    for c in range(n):
                        U[t, c] = r[c]
                    assigned[t] = 1
                    changed = True
                else:
                    same = True
                    for c in range(n):
                        if U[t, c] != r[c]:
                            same = False
                            break
                    if not same:
                        return False
    return True


cdef bint _full_check(long[:, :] U, long[:, :] D, int n, char[:] seen) noexcept:
    cdef int a, b, c
    for a in range(n * n):
        seen[a] = 0
    for a in range(n):
        for b in range(n):
            c = U[a, b] * n + D[b, a]
            if seen[c]:
                return False
            seen[c] = 1
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if U[U[a, b], U[D[b, a], c]] != U[a, U[b, c]]:
                    return False
                if D[U[D[b, a], c], U[a, b]] != U[D[U[b, c], a], D[c, b]]:
                    return False
                if D[D[c, b], D[U[b, c], a]] != D[c, D[b, a]]:
                    return False
    return True


cdef class _Search:
    cdef int n
    cdef long[:, :] D
    cdef char[:, :, :] mask
    cdef long[:, :] cands
    cdef long[:] offsets
    cdef char[:] seen
    cdef long[:, :, :] Us
    cdef char[:, :] As
    cdef list out

    def __init__(self, D, mask, cands, offsets):
        self.n = D.shape[0]
        self.D = D
        self.mask = mask
        self.cands = cands
        self.offsets = offsets
        self.seen = np.zeros(self.n * self.n, dtype=np.int8)
        # one (table, assigned-flags) slot per search depth
        self.Us = np.zeros((self.n + 2, self.n, self.n), dtype=np.int64)
        self.As = np.zeros((self.n + 2, self.n), dtype=np.int8)
        self.out = []

    cdef void rec(self, int depth):
        cdef int n = self.n
        cdef int r = -1, i, j
        cdef long k
        for i in range(n):
            if not self.As[depth, i]:
                r = i
                break
        if r < 0:
            if _full_check(self.Us[depth], self.D, n, self.seen):
                self.out.append(np.asarray(self.Us[depth]).copy())
            return
        for k in range(self.offsets[r], self.offsets[r + 1]):
            for i in range(n):
                self.As[depth + 1, i] = self.As[depth, i]
                for j in range(n):
                    self.Us[depth + 1, i, j] = self.Us[depth, i, j]
            for i in range(n):
                self.Us[depth + 1, r, i] = self.cands[k, i]
            self.As[depth + 1, r] = 1
            if _propagate(self.Us[depth + 1], self.As[depth + 1], self.D, self.mask, n):
                self.rec(depth + 1)


def solve_up(down):
    down = np.array(down, dtype=np.int64, order='C', copy=True)
    cdef int n = down.shape[0]
    if n > MAXN:
        raise ValueError(f"n={n} exceeds compiled limit {MAXN}")
    dinv = np.empty_like(down)
    dinv[np.arange(n)[:, None], down] = np.arange(n)[None, :]
    b, c, a = np.indices((n, n, n))
    p = dinv[down[c, b], down[c, down[b, a]]]
    mask = (p[:, :, None, :] == down[None, None, :, :]).all(axis=3)
    if not mask.any(axis=2).all():
        return np.empty((0, n, n), dtype=np.int64)
    P = all_perms(n)
    cols = np.arange(n)
    rows = [P[mask[r][cols[None, :], P].all(axis=1)] for r in range(n)]
    if any(len(x) == 0 for x in rows):
        return np.empty((0, n, n), dtype=np.int64)
    offsets = np.zeros(n + 1, dtype=np.int64)
    offsets[1:] = np.cumsum([len(x) for x in rows])
    cands = np.ascontiguousarray(np.concatenate(rows), dtype=np.int64)
    s = _Search(down, mask.astype(np.int8), cands, offsets)
    s.rec(0)
    if not s.out:
        return np.empty((0, n, n), dtype=np.int64)
    return np.stack(s.out)


def admissible_downs(int n, chunk=None):
    P = np.array(all_perms(n), dtype=np.int64, copy=True)
    cdef long[:, :] perms = P
    cdef int g = P.shape[0]
    cdef long total = 1
    cdef int k, b, c, a, x, i
    for k in range(n):
        total *= g
    cdef long[:] digits = np.zeros(n, dtype=np.int64)
    cdef long D[MAXN][MAXN]
    cdef long Di[MAXN][MAXN]
    cdef long p[MAXN]
    cdef long idx
    cdef bint ok, hit, eq
    keep = []
    for idx in range(total):
        # digits of idx in base g, most significant first
        x = idx
        for k in range(n - 1, -1, -1):
            digits[k] = x % g
            x = x // g
        for b in range(n):
            for a in range(n):
                D[b][a] = perms[digits[b], a]
                Di[b][perms[digits[b], a]] = a
        ok = True
        for b in range(n):
            if not ok:
                break
            for c in range(n):
                for a in range(n):
                    p[a] = Di[D[c][b]][D[c][D[b][a]]]
                hit = False
                for x in range(n):
                    eq = True
                    for a in range(n):
                        if D[x][a] != p[a]:
                            eq = False
                            break
                    if eq:
                        hit = True
                        break
                if not hit:
                    ok = False
                    break
        if ok:
            keep.append([[D[b][a] for a in range(n)] for b in range(n)])
    if not keep:
        return np.empty((0, n, n), dtype=np.int64)
    return np.array(keep, dtype=np.int64)


def apply_ops(X, tables, ops):
    cdef long[:, :] Xv = X
    cdef long[:, :, :, :] T = np.array(tables, dtype=np.int64, order='C', copy=True)
    cdef long[:, :] O = np.array(ops, dtype=np.int64, order='C', copy=True).reshape(-1, 2)
    cdef Py_ssize_t r, j
    cdef long k, pos, a, bb
    for r in range(Xv.shape[0]):
        for j in range(O.shape[0]):
            k = O[j, 0]
            pos = O[j, 1]
            a = Xv[r, pos]
            bb = Xv[r, pos + 1]
            Xv[r, pos] = T[k, 0, a, bb]
            Xv[r, pos + 1] = T[k, 1, a, bb]


def count_fixed(tables, ops, int n, int m, chunk=None):
    cdef long[:, :, :, :] T = np.array(tables, dtype=np.int64, order='C', copy=True)
    cdef long[:, :] O = np.array(ops, dtype=np.int64, order='C', copy=True).reshape(-1, 2)
    cdef long[:] x = np.zeros(m, dtype=np.int64)
    cdef long[:] y = np.zeros(m, dtype=np.int64)
    cdef long hits = 0
    cdef long total = 1
    cdef long idx, k, pos, a, bb
    cdef Py_ssize_t i, j
    cdef bint same
    for i in range(m):
        total *= n
    for idx in range(total):
        for i in range(m):
            y[i] = x[i]
        for j in range(O.shape[0]):
            k = O[j, 0]
            pos = O[j, 1]
            a = y[pos]
            bb = y[pos + 1]
            y[pos] = T[k, 0, a, bb]
            y[pos + 1] = T[k, 1, a, bb]
        same = True
        for i in range(m):
            if y[i] != x[i]:
                same = False
                break
        if same:
            hits += 1
        # odometer, last coordinate fastest
        i = m - 1
        while i >= 0:
            x[i] += 1
            if x[i] < n:
                break
            x[i] = 0
            i -= 1
    return int(hits)
