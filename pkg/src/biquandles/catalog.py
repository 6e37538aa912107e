"""Named catalogs: Q/R/BQ/BR naming, JSON and appendix-style text files,
and the registry of printed structures, pairs and braid words.

Names follow ``BQ^n_k``; lookups also accept ``BQ^{n}_{k}``, ``BQn_k`` and
``BQⁿₖ`` spellings.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import _data
from .braids import BraidWord, SwitchPair, bigelow_words, parse, theorem53_braid
from .core import (BIQUANDLE, BIRACK, QUANDLE, RACK, Classification, FiniteBirack,
                   class_key, classify, is_trivial_table)
from .errors import BiquandleError, DomainError, ParseError, ValidationError
from .pairs import pair_status
from .perm import IOTA, format_cycles, parse_cycles

PREFIX = {QUANDLE: "Q", RACK: "R", BIQUANDLE: "BQ", BIRACK: "BR"}
CLASS_OF_PREFIX = {v: k for k, v in PREFIX.items()}
FORMAT_TAG = "biquandles-catalog"
FORMAT_VERSION = 1
KISHINO_ENV = "BIQUANDLES_KISHINO_K3"
CATALOG_DIR_ENV = "BIQUANDLES_CATALOG_DIR"

_SUP = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_SUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_NAME = re.compile(r"^(BQ|BR|Q|R)\^?(\d+)_(\d+)$")


def normalize_name(name: str) -> str:
    """Canonical spelling of an entry name; other names are returned stripped."""
    s = name.strip().replace("{", "").replace("}", "")
    out = []
    mode = ""
    for ch in s:
        if ch in "⁰¹²³⁴⁵⁶⁷⁸⁹":
            if mode != "^":
                out.append("^")
                mode = "^"
            out.append(ch.translate(_SUP))
        elif ch in "₀₁₂₃₄₅₆₇₈₉":
            if mode != "_":
                out.append("_")
                mode = "_"
            out.append(ch.translate(_SUB))
        else:
            out.append(ch)
            mode = ""
    s = "".join(out)
    m = _NAME.match(s)
    if m:
        return f"{m.group(1)}^{int(m.group(2))}_{int(m.group(3))}"
    return s


def entry_name(cls: str, n: int, k: int) -> str:
    return f"{PREFIX[cls]}^{n}_{k}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    aliases: tuple
    birack: FiniteBirack
    classification: Classification

    @property
    def n(self) -> int:
        return self.birack.n

    def paper_line(self) -> str:
        return paper_line(self.birack, self.classification)


@dataclass(frozen=True)
class NamedPair:
    name: str
    s_ref: CatalogEntry
    t_ref: CatalogEntry
    status: str

    @property
    def pair(self) -> SwitchPair:
        return SwitchPair(self.s_ref.birack, self.t_ref.birack)


@dataclass
class Catalog:
    entries: list = field(default_factory=list)

    def __post_init__(self):
        self._index = {}
        for e in self.entries:
            for key in (e.name,) + tuple(e.aliases):
                self._index.setdefault(normalize_name(key), e)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, Catalog) and self.entries == other.entries

    def get(self, name: str) -> CatalogEntry:
        try:
            return self._index[normalize_name(name)]
        except KeyError:
            raise DomainError(f"no entry named {name!r} in the catalog") from None

    def names(self) -> list:
        return [e.name for e in self.entries]

    def of_class(self, cls: str) -> list:
        return [e for e in self.entries if e.classification.cls == cls]


def build_named_catalog(build, extra_aliases: dict | None = None) -> Catalog:
    """Name the classes of a search result by class and list position."""
    counters: dict = {}
    aliases = _alias_map(build.n)
    if extra_aliases:
        for k, v in extra_aliases.items():
            aliases.setdefault(v, []).append(k)
    entries = []
    for B, cl in build.entries:
        counters[cl.cls] = counters.get(cl.cls, 0) + 1
        name = entry_name(cl.cls, build.n, counters[cl.cls])
        entries.append(CatalogEntry(name, tuple(aliases.get(name, ())), B, cl))
    return Catalog(entries)


# --- text format ------------------------------------------------------------------

def format_table(t: np.ndarray) -> str:
    if is_trivial_table(t):
        return IOTA
    return "(" + ", ".join(format_cycles(row) for row in t) + ")"


def parse_table(text: str, n: int) -> list:
    """Inverse of :func:`format_table`; rows as 0-based tuples."""
    s = text.strip()
    if s in ("ι", "I", "i", "\\iota"):
        return [tuple(range(n))] * n
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"table {s!r} is neither an identity symbol nor a row tuple")
    body = s[1:-1]
    rows, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            rows.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    rows.append("".join(cur))
    if len(rows) != n:
        raise ParseError(f"table has {len(rows)} rows, expected {n}")
    return [parse_cycles(r, n) for r in rows]


def paper_line(B: FiniteBirack, cl: Classification | None = None) -> str:
    """``U=... D=... order k FLAGS, c1 = .., c2 = ..`` in cycle notation."""
    cl = cl or classify(B)
    return f"U={format_table(B.up)}  D={format_table(B.down)}  {cl.line()}"


_LINE = re.compile(r"^(\S+)\s+n=(\d+)\s+U=(.*?)\s+D=(.*?)\s+(order\s.*?c2 = \d+)(?:\s+aka\s+(.*))?$")


def _entry_text(e: CatalogEntry) -> str:
    s = f"{e.name}  n={e.n}  {e.paper_line()}"
    if e.aliases:
        s += "  aka " + "; ".join(e.aliases)
    return s


def _parse_text(text: str) -> list:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise ParseError("expected 'NAME  n=N  U=...  D=...  order ...'", line=lineno, offset=1)
        name, n, u, d, cline, aka = m.groups()
        n = int(n)
        try:
            up = parse_table(u, n)
            down = parse_table(d, n)
        except (ParseError, DomainError) as e:
            raise ParseError(f"entry {name}: {e}", line=lineno, offset=line.index("U=") + 1) from None
        aliases = tuple(a.strip() for a in aka.split(";")) if aka else ()
        out.append(dict(name=name, aliases=aliases, up=up, down=down, line=cline, lineno=lineno))
    return out


# --- validation --------------------------------------------------------------------

def _validate(name: str, B: FiniteBirack, cls: str | None, line: str | None,
              where: str) -> Classification:
    cl = classify(B)
    if cl.cls == "invalid":
        raise ValidationError(f"{where}entry {name}: tables fail B2 or B3")
    m = _NAME.match(normalize_name(name))
    if m and CLASS_OF_PREFIX[m.group(1)] != cl.cls:
        raise ValidationError(f"{where}entry {name}: name says {CLASS_OF_PREFIX[m.group(1)]} "
                              f"but the tables form a {cl.cls}")
    if cls is not None and cls != cl.cls:
        raise ValidationError(f"{where}entry {name}: stored class {cls} but tables form a {cl.cls}")
    if line is not None and " ".join(line.split()) != cl.line():
        raise ValidationError(f"{where}entry {name}: stored line {line!r} but computed {cl.line()!r}")
    return cl


def _check_injective(entries: list) -> None:
    seen = {}
    for e in entries:
        k = class_key(e.birack)
        if k in seen:
            raise ValidationError(f"entries {seen[k]} and {e.name} are isomorphic")
        seen[k] = e.name


# --- persistence -----------------------------------------------------------------

def dumps(cat: Catalog, format: str = "json") -> str:
    if format == "json":
        recs = []
        for e in cat.entries:
            cl = e.classification
            recs.append({"n": e.n, "name": e.name, "aliases": list(e.aliases), "class": cl.cls,
                         "flags": list(cl.flags), "order": cl.order, "u": cl.u, "d": cl.d,
                         "U": e.birack.up_rows(), "D": e.birack.down_rows()})
        return json.dumps({"format": FORMAT_TAG, "version": FORMAT_VERSION, "entries": recs},
                          ensure_ascii=False, indent=1) + "\n"
    if format == "paper_text":
        return "".join(_entry_text(e) + "\n" for e in cat.entries)
    raise DomainError(f"unknown catalog format {format!r}")


def save(cat: Catalog, path: str, format: str = "json") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(cat, format))


def loads(text: str, check_injective: bool = True) -> Catalog:
    """Parse either format (detected from the first character)."""
    if text.lstrip().startswith("{"):
        entries = _load_json(text)
    else:
        entries = []
        for r in _parse_text(text):
            where = f"line {r['lineno']}: "
            try:
                B = FiniteBirack(r["up"], r["down"])
            except BiquandleError as e:
                raise ValidationError(f"{where}entry {r['name']}: {e}") from None
            cl = _validate(r["name"], B, None, r["line"], where)
            entries.append(CatalogEntry(r["name"], r["aliases"], B, cl))
    if check_injective:
        _check_injective(entries)
    names = [normalize_name(e.name) for e in entries]
    if len(set(names)) != len(names):
        raise ValidationError("duplicate entry names")
    return Catalog(entries)


def _load_json(text: str) -> list:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, offset=e.colno) from None
    if data.get("format") != FORMAT_TAG or data.get("version") != FORMAT_VERSION:
        raise ValidationError("not a catalog file of a supported version")
    out = []
    for i, rec in enumerate(data.get("entries", [])):
        name = rec.get("name", f"#{i + 1}")
        where = f"entry {i + 1}: "
        try:
            U = np.asarray(rec["U"], dtype=np.int64) - 1
            D = np.asarray(rec["D"], dtype=np.int64) - 1
            B = FiniteBirack(U, D)
        except (KeyError, ValueError, TypeError) as e:
            raise ValidationError(f"{where}entry {name}: {e}") from None
        if B.n != rec.get("n"):
            raise ValidationError(f"{where}entry {name}: n={rec.get('n')} but tables have size {B.n}")
        cl = _validate(name, B, rec.get("class"), None, where)
        stored = Classification(rec.get("class"), tuple(rec.get("flags", ())), rec.get("order"),
                                rec.get("u"), rec.get("d"))
        if stored != cl:
            raise ValidationError(f"{where}entry {name}: stored classification {stored} differs from {cl}")
        out.append(CatalogEntry(name, tuple(rec.get("aliases", ())), B, cl))
    return out


def load(path: str, check_injective: bool = True) -> Catalog:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), check_injective)


def resolve_catalog_path(ref: str) -> str:
    """A path as given, else ``$BIQUANDLES_CATALOG_DIR/<ref>[.json]``."""
    if os.path.exists(ref):
        return ref
    base = os.environ.get(CATALOG_DIR_ENV)
    if base:
        for cand in (os.path.join(base, ref), os.path.join(base, ref + ".json")):
            if os.path.exists(cand):
                return cand
    raise DomainError(f"catalog {ref!r} not found")


# --- built-ins ----------------------------------------------------------------------

def _alias_map(n: int | None = None) -> dict:
    out: dict = {}
    for alias, target in _data.CONSTRUCTOR_ALIASES.items():
        out.setdefault(target, []).append(alias)
    out.setdefault("Q^2_1", []).append("I_2")
    out.setdefault("Q^3_1", []).append("I_3")
    out.setdefault("Q^4_1", []).append("I_4")
    if n is not None:
        out = {k: v for k, v in out.items() if k.split("^")[1].split("_")[0] == str(n)}
    return out


def _make_entry(name: str, n: int, up, down, line: str | None) -> CatalogEntry:
    B = FiniteBirack.from_cycles(n, up, down)
    cl = _validate(name, B, None, line, "builtin ")
    return CatalogEntry(name, tuple(_alias_map().get(name, ())), B, cl)


@lru_cache(maxsize=None)
def _entries() -> dict:
    out = {}
    for name, (n, up, down, line) in _data.APPENDIX.items():
        out[name] = _make_entry(name, n, up, down, line)
    for name, (n, up, down) in _data.QUOTED.items():
        out[name] = _make_entry(name, n, up, down, None)
    return out


@lru_cache(maxsize=None)
def _pairs() -> dict:
    ents = _entries()
    out = {}
    for name, (s, t) in list(_data.PAIRS.items()) + list(_data.EXTRA_PAIRS.items()):
        S, T = ents[s], ents[t]
        st = pair_status(SwitchPair(S.birack, T.birack)).label
        if name in _data.PAIRS and st != "essential":
            raise ValidationError(f"builtin pair {name} is {st}, not essential")
        out[name] = NamedPair(name, S, T, st)
    return out


@lru_cache(maxsize=None)
def _words() -> dict:
    out = {k: parse(v) for k, v in _data.WORDS.items()}
    bw = bigelow_words()
    out.update(bw)
    out["bigelow-b1"] = bw["b1"]
    out["bigelow-b2"] = bw["b2"]
    out["theorem53"] = theorem53_braid()
    return out


def kishino_k3_path() -> str | None:
    """Location of the externally supplied K3 word, if any."""
    p = os.environ.get(KISHINO_ENV)
    if p and os.path.exists(p):
        return p
    return None


def load_kishino_k3(path: str | None = None) -> BraidWord:
    path = path or kishino_k3_path()
    if not path:
        raise DomainError(f"the K3 word is not bundled; point {KISHINO_ENV} at a file holding it")
    with open(path) as fh:
        text = " ".join(l.split("#", 1)[0] for l in fh)
    if ":" in text:
        text = text.split(":", 1)[1]
    return parse(text)


def builtin(name: str):
    """A printed structure, pair or braid word by name."""
    key = normalize_name(name)
    ents = _entries()
    if key in ents:
        return ents[key]
    for e in ents.values():
        if key in e.aliases:
            return e
    if key in _data.PAIRS or key in _data.EXTRA_PAIRS:
        return _pairs()[key]
    words = _words()
    if key in words:
        return words[key]
    if key == "K3":
        return load_kishino_k3()
    raise DomainError(f"unknown builtin {name!r}")


def builtin_names() -> list:
    return (list(_data.APPENDIX) + list(_data.QUOTED) + list(_data.PAIRS)
            + list(_data.EXTRA_PAIRS) + list(_words()))


def builtin_catalog(n: int) -> Catalog:
    """The printed n = 2 or n = 3 list, in printed order."""
    ents = [e for k, e in _entries().items() if k in _data.APPENDIX and e.n == n]
    if not ents:
        raise DomainError(f"no printed catalog of size {n}")
    return Catalog(ents)


def builtin_entries(n: int | None = None) -> Iterable[CatalogEntry]:
    return [e for e in _entries().values() if n is None or e.n == n]


__all__ = [
    "CatalogEntry", "NamedPair", "Catalog", "build_named_catalog", "dumps", "loads", "save", "load",
    "builtin", "builtin_names", "builtin_catalog", "paper_line", "normalize_name", "format_table",
    "parse_table", "builtin_entries", "load_kishino_k3", "kishino_k3_path", "resolve_catalog_path",
]
