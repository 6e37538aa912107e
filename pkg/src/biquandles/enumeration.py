"""Exhaustive search for biracks, racks and quandle-related biracks.

The search fixes a down table and backtracks over up tables
(:func:`biquandles.kernels.solve_up`).  Isomorphism classes are taken under
relabeling combined with the U/D exchange and switch inversion (see
:func:`biquandles.core.class_members`); each class is reported once,
through the representative and list position of
:func:`biquandles.core.summarize_class`.
"""
from __future__ import annotations

import json
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .core import (BIQUANDLE, BIRACK, QUANDLE, RACK, Classification, FiniteBirack,
                   class_members, classify, identity_table, lex_argmin, relabel_all,
                   summarize_class)
from .errors import CapacityError, DomainError, ValidationError
from .perm import all_perms, is_perm

log = logging.getLogger(__name__)

FULL_BOUND = 4
QUANDLE_BOUND = 6
CHECKPOINT_VERSION = 1
MODES = ("full", "quandles_only", "racks_only", "related")


@dataclass(frozen=True)
class SearchConfig:
    n: int
    mode: str = "full"
    related_down_source: tuple | None = None
    worker_count: int = 1
    checkpoint_path: str | None = None
    allow_large: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"unknown search mode {self.mode!r}")
        if self.n < 1:
            raise DomainError("n must be positive")
        if self.worker_count < 1:
            raise DomainError("worker_count must be positive")
        if self.mode == "full" and self.n > FULL_BOUND and not self.allow_large:
            raise CapacityError(f"full search is limited to n <= {FULL_BOUND}; pass allow_large to override")
        if self.mode in ("quandles_only", "racks_only") and self.n > QUANDLE_BOUND and not self.allow_large:
            raise CapacityError(f"rack search is limited to n <= {QUANDLE_BOUND}")
        if self.mode == "related" and not self.related_down_source:
            raise DomainError("related mode needs a down-table source")


@dataclass
class CatalogBuild:
    """Classes found by a search, in catalog naming order."""

    n: int
    entries: list = field(default_factory=list)   # (FiniteBirack, Classification)
    order_keys: list = field(default_factory=list)
    class_keys: list = field(default_factory=list)

    def counts(self) -> dict:
        c = Counter(cl.cls for _, cl in self.entries)
        return {k: c.get(k, 0) for k in (QUANDLE, RACK, BIQUANDLE, BIRACK)}

    def of_class(self, cls: str) -> list:
        return [(b, c) for b, c in self.entries if c.cls == cls]

    def __len__(self):
        return len(self.entries)


# --- down-table sources --------------------------------------------------------

def _orbit_min(tables: np.ndarray) -> np.ndarray:
    """Keep tables that are lexicographically least among their relabelings."""
    if len(tables) == 0:
        return tables
    n = tables.shape[1]
    perms = all_perms(n)
    keep = []
    for t in tables:
        rel = relabel_all(t, perms).reshape(len(perms), -1)
        if lex_argmin(rel) == 0:    # row 0 is the identity relabeling
            keep.append(t)
    return np.array(keep, dtype=np.int64).reshape(-1, n, n)


def _dedupe_tables(tables: Iterable[np.ndarray], n: int) -> np.ndarray:
    """One orbit-minimal representative per relabeling class of tables."""
    perms = all_perms(n)
    seen = {}
    for t in tables:
        rel = relabel_all(np.asarray(t, dtype=np.int64), perms).reshape(len(perms), -1)
        key = rel[lex_argmin(rel)].tobytes()
        seen.setdefault(key, rel[lex_argmin(rel)].reshape(n, n))
    return np.array([seen[k] for k in sorted(seen)], dtype=np.int64).reshape(-1, n, n)


def validate_action_table(t, n: int | None = None) -> np.ndarray:
    arr = np.asarray(t, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or (n is not None and arr.shape[0] != n):
        raise DomainError(f"action table has shape {arr.shape}")
    for r, row in enumerate(arr):
        if not is_perm(row, arr.shape[0]):
            raise DomainError(f"action table row {r + 1} is not a permutation")
    return arr


def full_downs(n: int) -> np.ndarray:
    """Orbit representatives of every down table that can carry a birack."""
    return _orbit_min(kernels.admissible_downs(n))


# --- the search proper ---------------------------------------------------------

def _search_partition(args) -> dict:
    """Classes met while solving for up tables over one down table.

    Returns ``{class key bytes: (up, down)}`` with one member per class.
    Labeled members of classes already met are remembered (only those whose
    down table is itself a partition) so repeats skip the relabeling scan.
    """
    down, keep_down = args
    n = down.shape[0]
    found: dict = {}
    seen: set = set()
    keep_down = set(keep_down)
    for up in kernels.solve_up(down):
        code = up.tobytes() + down.tobytes()
        if code in seen:
            continue
        B = FiniteBirack(up, down)
        Us, Ds = class_members(B)
        flat = np.concatenate([Us.reshape(len(Us), -1), Ds.reshape(len(Ds), -1)], axis=1)
        key = flat[lex_argmin(flat)].tobytes()
        found.setdefault(key, (up, down))
        for u, d in zip(Us, Ds):
            db = d.tobytes()
            if db in keep_down:
                seen.add(u.tobytes() + db)
    return found


def _finish(n: int, classes: dict) -> CatalogBuild:
    rows = []
    for up, down in classes.values():
        ckey, okey, rep = summarize_class(*class_members(FiniteBirack(up, down)))
        rows.append((okey, ckey, rep))
    rows.sort(key=lambda r: (r[0], r[1]))
    build = CatalogBuild(n)
    for okey, ckey, rep in rows:
        build.entries.append((rep, classify(rep)))
        build.order_keys.append(okey)
        build.class_keys.append(ckey)
    return build


def _load_checkpoint(path: str, cfg: SearchConfig, n_parts: int) -> tuple[set, dict]:
    if not path or not os.path.exists(path):
        return set(), {}
    with open(path) as fh:
        data = json.load(fh)
    if data.get("version") != CHECKPOINT_VERSION:
        raise ValidationError(f"checkpoint {path} has unsupported version {data.get('version')!r}")
    if data.get("n") != cfg.n or data.get("mode") != cfg.mode or data.get("partitions") != n_parts:
        raise ValidationError(f"checkpoint {path} belongs to a different search")
    classes = {}
    for up, down in data["classes"]:
        u = np.array(up, dtype=np.int64) - 1
        d = np.array(down, dtype=np.int64) - 1
        Us, Ds = class_members(FiniteBirack(u, d))
        flat = np.concatenate([Us.reshape(len(Us), -1), Ds.reshape(len(Ds), -1)], axis=1)
        classes[flat[lex_argmin(flat)].tobytes()] = (u, d)
    return set(data["done"]), classes


def _save_checkpoint(path: str, cfg: SearchConfig, n_parts: int, done: set, classes: dict) -> None:
    data = {
        "version": CHECKPOINT_VERSION,
        "n": cfg.n,
        "mode": cfg.mode,
        "partitions": n_parts,
        "done": sorted(done),
        "classes": [[(u + 1).tolist(), (d + 1).tolist()] for _, (u, d) in sorted(classes.items())],
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def run_search(cfg: SearchConfig, downs: np.ndarray) -> CatalogBuild:
    """Solve over every down table in ``downs`` and merge the classes found.

    Each down table is one partition; partitions run in a process pool when
    ``worker_count > 1``.  The merged result does not depend on the worker
    count.  With ``checkpoint_path`` set, finished partitions are recorded
    after each completes and skipped on the next run.
    """
    n = cfg.n
    n_parts = len(downs)
    done, classes = _load_checkpoint(cfg.checkpoint_path, cfg, n_parts)
    keep = [d.tobytes() for d in downs]
    todo = [i for i in range(n_parts) if i not in done]
    jobs = [(downs[i], keep) for i in todo]

    def absorb(i, part):
        for k, v in part.items():
            classes.setdefault(k, v)
        done.add(i)
        if cfg.checkpoint_path:
            _save_checkpoint(cfg.checkpoint_path, cfg, n_parts, done, classes)
        log.info("partition %d/%d done, %d classes", len(done), n_parts, len(classes))

    if cfg.worker_count > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as ex:
            for i, part in zip(todo, ex.map(_search_partition, jobs)):
                absorb(i, part)
    else:
        for i, job in zip(todo, jobs):
            absorb(i, _search_partition(job))
    return _finish(n, classes)


def enumerate_full(n: int, worker_count: int = 1, checkpoint_path: str | None = None,
                   allow_large: bool = False) -> CatalogBuild:
    """Every birack of size n up to isomorphism."""
    cfg = SearchConfig(n, "full", worker_count=worker_count,
                       checkpoint_path=checkpoint_path, allow_large=allow_large)
    return run_search(cfg, full_downs(n))


def _racks_and_quandles(n: int, mode: str, worker_count: int, allow_large: bool) -> CatalogBuild:
    cfg = SearchConfig(n, mode, worker_count=worker_count, allow_large=allow_large)
    return run_search(cfg, identity_table(n)[None, :, :])


def _restrict(build: CatalogBuild, cls: str) -> CatalogBuild:
    out = CatalogBuild(build.n)
    for (b, c), ok, ck in zip(build.entries, build.order_keys, build.class_keys):
        if c.cls == cls:
            out.entries.append((b, c))
            out.order_keys.append(ok)
            out.class_keys.append(ck)
    return out


def enumerate_quandles(n: int, worker_count: int = 1, allow_large: bool = False) -> CatalogBuild:
    return _restrict(_racks_and_quandles(n, "quandles_only", worker_count, allow_large), QUANDLE)


def enumerate_racks(n: int, worker_count: int = 1, allow_large: bool = False) -> CatalogBuild:
    """Racks that are not quandles."""
    return _restrict(_racks_and_quandles(n, "racks_only", worker_count, allow_large), RACK)


def enumerate_racks_and_quandles(n: int, worker_count: int = 1, allow_large: bool = False) -> CatalogBuild:
    return _racks_and_quandles(n, "racks_only", worker_count, allow_large)


def enumerate_related(n: int, down_source: Sequence | str = "quandles", worker_count: int = 1,
                      checkpoint_path: str | None = None) -> CatalogBuild:
    """Biracks whose down table is isomorphic to a member of ``down_source``.

    ``down_source`` is a list of 0-based action tables, or ``"quandles"`` for
    every quandle of size n.  The result holds all classes met, including
    racks and quandles (from trivial up or down tables).
    """
    if isinstance(down_source, str):
        if down_source != "quandles":
            raise DomainError(f"unknown down source {down_source!r}")
        tables = [b.up for b, _ in enumerate_quandles(n, worker_count).entries]
    else:
        tables = [validate_action_table(t, n) for t in down_source]
    downs = _dedupe_tables(tables, n)
    cfg = SearchConfig(n, "related", related_down_source=tuple(map(bytes, (d.tobytes() for d in downs))),
                       worker_count=worker_count, checkpoint_path=checkpoint_path)
    return run_search(cfg, downs)
