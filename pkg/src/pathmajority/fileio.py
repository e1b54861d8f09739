"""Tree files, query files and the serialized index format.

Tree files (``.lt``): a line with ``n`` then ``n`` lines ``parent label``;
node ids are the 1-based line order and parent ``0`` marks the root.
Multi-label files (``.mlt``) use ``parent k l_1 ... l_k`` instead.

Index files start with the magic bytes ``PMIX``, a 4-byte big-endian header
length and a JSON header; the body is zlib-compressed JSON holding the tree
and the candidate tables.  Everything else is rebuilt on load.  Output is
byte-for-byte deterministic for a given input.
"""
from __future__ import annotations

import json
import struct
import zlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .basic import BasicMajorityIndex, CandidateTable
from .multilabel import MultiLabelIndex
from .stratified import Mode, StratifiedMajorityIndex
from .tree import build_tree

MAGIC = b"PMIX"
FORMAT_VERSION = 1
INDEX_KINDS = ("basic", "stratified", "stratified-super")


class FormatError(ValueError):
    """A malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.line = line


@dataclass
class TreeData:
    parents: list
    labels: Optional[list] = None  # single-label trees
    label_lists: Optional[list] = None  # multi-label trees

    @property
    def multi(self) -> bool:
        return self.label_lists is not None

    @property
    def n(self) -> int:
        return len(self.parents)


def _ints(line: str, lineno: int, source: str) -> list:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {line.strip()!r}", lineno, source) from None


def parse_tree_text(text: str, multi: bool = False, source: str = "<input>") -> TreeData:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise FormatError("missing node count", 1, source)
    head = _ints(lines[0], 1, source)
    if len(head) != 1 or head[0] < 1:
        raise FormatError("first line must be a single positive node count", 1, source)
    n = head[0]
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != n:
        raise FormatError(f"expected {n} node lines, found {len(body)}", min(len(body), n) + 2, source)
    parents, labels, lists = [], [], []
    roots = 0
    for i, line in enumerate(body, start=2):
        vals = _ints(line, i, source)
        if multi:
            if len(vals) < 3 or vals[1] < 1 or len(vals) != 2 + vals[1]:
                raise FormatError("expected 'parent k l_1 ... l_k' with k >= 1", i, source)
            lists.append(vals[2:])
        elif len(vals) != 2:
            raise FormatError("expected 'parent label'", i, source)
        else:
            labels.append(vals[1])
        p = vals[0]
        if not 0 <= p <= n:
            raise FormatError(f"parent {p} outside [0, {n}]", i, source)
        if p == i - 1:
            raise FormatError("node is its own parent", i, source)
        roots += p == 0
        if roots > 1:
            raise FormatError("second root (parent 0)", i, source)
        if any(l < 1 for l in (vals[2:] if multi else vals[1:])):
            raise FormatError("labels must be positive", i, source)
        parents.append(p)
    if roots == 0:
        raise FormatError("no root (parent 0)", None, source)
    return TreeData(parents, None, lists) if multi else TreeData(parents, labels)


def read_tree_file(path: str) -> TreeData:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_tree_text(text, multi=path.endswith(".mlt"), source=path)


def format_tree(data: TreeData) -> str:
    out = [str(data.n)]
    if data.multi:
        out.extend(f"{p} {len(ls)} {' '.join(map(str, ls))}" for p, ls in zip(data.parents, data.label_lists))
    else:
        out.extend(f"{p} {l}" for p, l in zip(data.parents, data.labels))
    return "\n".join(out) + "\n"


def parse_queries(text: str, n: int, source: str = "<queries>") -> list:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        vals = _ints(line, i, source)
        if len(vals) != 2:
            raise FormatError("expected 'u v'", i, source)
        for x in vals:
            if not 1 <= x <= n:
                raise FormatError(f"node {x} outside [1, {n}]", i, source)
        out.append((vals[0], vals[1]))
    return out


def _tau_str(tau: Fraction) -> str:
    return f"{tau.numerator}/{tau.denominator}"


def _dumps(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


class LoadedIndex:
    """An index read back from disk; ``query`` speaks original node labels."""

    def __init__(self, header: dict, data: TreeData, majority):
        self.header = header
        self.data = data
        self.majority = majority
        self._minority = None

    @property
    def tau(self) -> Fraction:
        return Fraction(self.header["tau"])

    def minority(self):
        from .minority import MinorityIndex

        if self.data.multi:
            raise ValueError("minority queries need a single-label tree")
        if self._minority is None:
            m = self.majority
            self._minority = MinorityIndex(m.tree, nav=m.nav, labels=m.labels)
        return self._minority


def build_index(data: TreeData, tau: Fraction, kind: str, kappa: Optional[int] = None, mode: Optional[str] = None,
                candidates: Optional[CandidateTable] = None):
    if kind not in INDEX_KINDS:
        raise ValueError(f"unknown index kind {kind!r}")
    if kind == "basic":
        def factory(tree, t):
            return BasicMajorityIndex(tree, t, candidates=candidates)
    else:
        m = Mode(mode) if mode else (Mode.SUPERLINEAR if kind == "stratified-super" else Mode.LINEAR)

        def factory(tree, t):
            return StratifiedMajorityIndex(tree, t, kappa=kappa, mode=m, candidates=candidates)
    if data.multi:
        return MultiLabelIndex(data.parents, data.label_lists, tau, factory)
    return factory(build_tree(data.parents, data.labels), tau)


def _single(index):
    return index.index if isinstance(index, MultiLabelIndex) else index


def index_mode(index) -> Optional[str]:
    inner = _single(index)
    return inner.mode.value if isinstance(inner, StratifiedMajorityIndex) else None


def serialize_index(data: TreeData, index, kind: str, kappa: Optional[int]) -> bytes:
    inner = _single(index)
    table = inner.candidates
    if isinstance(inner, StratifiedMajorityIndex):
        table = table.decoded()
    header = {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "tau": _tau_str(inner.tau),
        "kappa": kappa,
        "kappa_effective": getattr(inner, "kappa", None),
        "mode": index_mode(index),
        "multi_label": data.multi,
        "n": data.n,
        "sigma": inner.tree.sigma,
    }
    body = {
        "parents": data.parents,
        "labels": data.label_lists if data.multi else data.labels,
        "candidates": [[x, [list(c) for c in table.sets[x]]] for x in sorted(table.sets)],
    }
    head = _dumps(header)
    return MAGIC + struct.pack(">I", len(head)) + head + zlib.compress(_dumps(body), 9)


def deserialize_index(blob: bytes, source: str = "<index>") -> LoadedIndex:
    if blob[:4] != MAGIC or len(blob) < 8:
        raise FormatError("not an index file (bad magic)", None, source)
    (hlen,) = struct.unpack(">I", blob[4:8])
    try:
        header = json.loads(blob[8 : 8 + hlen])
    except ValueError:
        raise FormatError("corrupt header", None, source) from None
    version = header.get("format_version")
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported index format version {version!r} (expected {FORMAT_VERSION})", None, source)
    try:
        body = json.loads(zlib.decompress(blob[8 + hlen :]))
    except (ValueError, zlib.error):
        raise FormatError("corrupt body", None, source) from None
    if header["multi_label"]:
        data = TreeData(body["parents"], None, body["labels"])
    else:
        data = TreeData(body["parents"], body["labels"])
    table = CandidateTable({x: [tuple(c) for c in sets] for x, sets in body["candidates"]})
    index = build_index(data, Fraction(header["tau"]), header["kind"], header["kappa"], header["mode"], table)
    return LoadedIndex(header, data, index)


def save_index(path: str, data: TreeData, index, kind: str, kappa: Optional[int]) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_index(data, index, kind, kappa))


def load_index(path: str) -> LoadedIndex:
    with open(path, "rb") as fh:
        return deserialize_index(fh.read(), path)
