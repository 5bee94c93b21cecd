"""Small-graph enumeration, stream verification and reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .cycles import DEFAULT_CYCLE_CAP, Undecided
from .graph import Graph, Graph6Error, canonical_form, parse_graph6, write_graph6
from .invariants import is_connected
from .theorems import (
    TAGS,
    Analysis,
    TheoremId,
    VerdictKind,
    check_all,
    theorem_ids,
)

__all__ = [
    "ENUM_MAX_N",
    "SCHEMA_VERSION",
    "enumerate_graphs",
    "VerificationReport",
    "verify_graphs",
    "verify_stream",
]

ENUM_MAX_N = 8
SCHEMA_VERSION = 1
KINDS = [k.value for k in VerdictKind]


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class, grown by adding a vertex in every way."""
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[bytes, Graph] = {}
    new = 1 << (n - 1)
    for g in _all_graphs(n - 1):
        for nbrs in range(new):
            rows = [row | new if nbrs >> u & 1 else row for u, row in enumerate(g.rows)]
            rows.append(nbrs)
            key_graph = Graph(n, tuple(rows))
            key = canonical_form(key_graph)
            if key not in seen:
                seen[key] = parse_graph6(key)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (len(k), k)))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Non-isomorphic graphs of order n (1 <= n <= 8), canonically labelled,
    in a fixed order."""
    if not 1 <= n <= ENUM_MAX_N:
        raise ValueError(f"built-in enumeration covers 1 <= n <= {ENUM_MAX_N}; pipe graph6 for larger n")
    for g in _all_graphs(n):
        if not connected_only or is_connected(g):
            yield g


# --------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    """Aggregated verdicts over a stream of graphs.

    ``merge`` is associative and commutative: counts add and the witness
    lists are kept sorted by input line.
    """

    theorems: list[str] = field(default_factory=list)
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    graphs: int = 0
    violations: list[dict] = field(default_factory=list)
    exceptions: list[dict] = field(default_factory=list)
    undecided: list[dict] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    seconds: float = 0.0

    @classmethod
    def empty(cls, ids: Iterable[TheoremId], metadata: dict | None = None) -> "VerificationReport":
        names = [str(t) for t in ids]
        return cls(theorems=names, counts={t: dict.fromkeys(KINDS, 0) for t in names},
                   metadata=dict(metadata or {}))

    @property
    def violated(self) -> int:
        return sum(c["violated"] for c in self.counts.values())

    @property
    def exit_code(self) -> int:
        """1 iff some verdict is violated; parse errors and undecided graphs
        are reported but do not change the status."""
        return 1 if self.violated else 0

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        names = list(self.theorems) + [t for t in other.theorems if t not in self.theorems]
        counts = {t: dict.fromkeys(KINDS, 0) for t in names}
        for src in (self.counts, other.counts):
            for t, c in src.items():
                for k, v in c.items():
                    counts[t][k] += v

        def key(item):
            return item.get("line", 0), item.get("theorem", "")

        return VerificationReport(
            theorems=names,
            counts=counts,
            graphs=self.graphs + other.graphs,
            violations=sorted(self.violations + other.violations, key=key),
            exceptions=sorted(self.exceptions + other.exceptions, key=key),
            undecided=sorted(self.undecided + other.undecided, key=key),
            parse_errors=sorted(self.parse_errors + other.parse_errors, key=key),
            metadata={**other.metadata, **self.metadata},
            seconds=self.seconds + other.seconds,
        )

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "metadata": self.metadata,
            "graphs": self.graphs,
            "theorems": self.theorems,
            "counts": self.counts,
            "violations": self.violations,
            "exceptions": self.exceptions,
            "undecided": self.undecided,
            "parse_errors": self.parse_errors,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=True)

    def to_text(self, timing: bool = True) -> str:
        lines = [f"graphs: {self.graphs}"]
        for k, v in sorted(self.metadata.items()):
            lines.append(f"{k}: {v}")
        width = max([len(t) for t in self.theorems] + [7])
        lines.append(f"{'theorem':<{width}}  {'inapplic':>9} {'holds':>9} {'exception':>9} {'violated':>9}")
        for t in self.theorems:
            c = self.counts[t]
            lines.append(f"{t:<{width}}  {c['inapplicable']:>9} {c['holds']:>9} {c['exception']:>9} {c['violated']:>9}")
        lines.append(f"violated verdicts: {self.violated}")
        for v in self.violations:
            lines.append(f"  VIOLATED {v['theorem']} line {v['line']}: {v['graph6']} {v.get('detail', '')}")
        if self.exceptions:
            lines.append(f"allowed exceptions: {len(self.exceptions)}")
            for v in self.exceptions:
                lines.append(f"  exception {v['theorem']} line {v['line']}: {v['graph6']} cycle={v.get('cycle')}")
        for u in self.undecided:
            lines.append(f"  undecided line {u['line']}: {u['graph6']} ({u['message']})")
        for e in self.parse_errors:
            lines.append(f"  parse error line {e['line']}: {e['message']}")
        if timing:
            lines.append(f"seconds: {self.seconds:.2f}")
        return "\n".join(lines)


def _verify_chunk(args) -> VerificationReport:
    items, ids, cycle_cap = args
    rep = VerificationReport.empty(ids)
    t0 = time.perf_counter()
    for line, payload in items:
        if isinstance(payload, Graph):
            g = payload
        else:
            try:
                g = parse_graph6(payload)
            except Graph6Error as exc:
                rep.parse_errors.append({"line": line, "message": str(exc), "offset": exc.offset})
                continue
        rep.graphs += 1
        if g.n == 0:
            rep.parse_errors.append({"line": line, "message": "graph has no vertices"})
            continue
        try:
            verdicts = check_all(Analysis(g, cycle_cap), theorems=ids)
        except Undecided as exc:
            rep.undecided.append({"line": line, "graph6": write_graph6(g), "message": str(exc)})
            continue
        for tid, v in verdicts.items():
            rep.counts[str(tid)][v.kind.value] += 1
            if v.kind in (VerdictKind.VIOLATED, VerdictKind.EXCEPTION_ALLOWED):
                entry = {"line": line, "theorem": str(tid), **(v.witness or {})}
                (rep.violations if v.kind is VerdictKind.VIOLATED else rep.exceptions).append(entry)
    rep.seconds = time.perf_counter() - t0
    return rep


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    buf = []
    for item in items:
        buf.append(item)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def _numbered(source: Iterable) -> Iterator[tuple[int, object]]:
    for line, item in enumerate(source, start=1):
        if isinstance(item, str):
            item = item.strip()
            if not item:
                continue
        yield line, item


def verify_graphs(source: Iterable, theorems: Iterable[TheoremId] | None = None,
                  lambdas: Iterable[int] = range(1, 6), jobs: int = 1,
                  cycle_cap: int = DEFAULT_CYCLE_CAP, metadata: dict | None = None,
                  chunk_size: int = 256) -> VerificationReport:
    """Run the selected theorems over graphs or graph6 lines.

    Items of ``source`` are ``Graph`` objects or graph6 strings; blank lines
    are skipped but still counted for line numbers.  With ``jobs > 1`` the
    stream is split into chunks checked by a process pool; the merged report
    is identical to the serial one apart from timing.
    """
    lambdas = list(lambdas)
    ids = list(theorems) if theorems is not None else theorem_ids(TAGS, lambdas)
    meta = {"lambda": f"{lambdas[0]}..{lambdas[-1]}" if lambdas else "", **(metadata or {})}
    report = VerificationReport.empty(ids, meta)
    tasks = ((chunk, ids, cycle_cap) for chunk in _chunks(_numbered(source), chunk_size))
    if jobs <= 1:
        for task in tasks:
            report = report.merge(_verify_chunk(task))
    else:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            for part in pool.imap(_verify_chunk, tasks):
                report = report.merge(part)
    return report


def verify_stream(lines: Iterable[str], theorems: Iterable[TheoremId] | None = None,
                  lambdas: Iterable[int] = range(1, 6), **kwargs) -> VerificationReport:
    """:func:`verify_graphs` over graph6 text lines."""
    return verify_graphs(lines, theorems, lambdas, **kwargs)
