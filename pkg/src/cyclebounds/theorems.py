"""Hypotheses, conclusions and bound formulas for the classical Hamilton /
dominating-cycle theorems (A-G) and their analogs T1-T18.

Every threshold with a fraction is compared by cross-multiplying the exact
inequality; the T3 bound is an exact ``Fraction``.  Expensive invariants are
computed once per graph by :class:`Analysis`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable

from . import cycles
from .cycles import DEFAULT_CYCLE_CAP, Undecided
from .graph import Graph, canonical_form, write_graph6
from .invariants import (
    independence_number,
    is_connected,
    min_degree,
    toughness,
    vertex_connectivity,
)

__all__ = [
    "TAGS",
    "LAMBDA_TAGS",
    "TheoremId",
    "VerdictKind",
    "Verdict",
    "Analysis",
    "THEOREMS",
    "bound_t1",
    "bound_t2",
    "bound_t3",
    "check",
    "check_all",
    "theorem_ids",
    "parse_theorem_id",
    "parse_theorem_list",
    "parse_lambda_range",
]

TAGS = ("A", "B", "C", "D", "E", "F", "G") + tuple(f"T{i}" for i in range(1, 19))
LAMBDA_TAGS = ("T11", "T12", "T13")


@dataclass(frozen=True, order=True)
class TheoremId:
    tag: str
    lam: int | None = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown theorem {self.tag!r}")
        if (self.lam is not None) != (self.tag in LAMBDA_TAGS):
            raise ValueError(f"{self.tag}: lambda is required exactly for {', '.join(LAMBDA_TAGS)}")
        if self.lam is not None and self.lam < 1:
            raise ValueError("lambda must be a positive integer")

    def __str__(self) -> str:
        return self.tag if self.lam is None else f"{self.tag}[{self.lam}]"

    def sort_key(self) -> tuple[int, int]:
        return TAGS.index(self.tag), self.lam or 0


def parse_theorem_id(text: str) -> TheoremId:
    """``"A"``, ``"T4"``, ``"T11[2]"`` (also ``T11:2`` / ``T11@2``)."""
    m = re.fullmatch(r"\s*([A-Ga-g]|[Tt]\d{1,2})\s*(?:[\[:@]\s*(\d+)\s*\]?)?\s*", text)
    if not m:
        raise ValueError(f"cannot parse theorem id {text!r}")
    tag = m.group(1).upper()
    lam = int(m.group(2)) if m.group(2) else None
    return TheoremId(tag, lam)


def parse_lambda_range(text: str) -> range:
    """``"1..5"`` or ``"3"``."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*", text)
    if not m:
        raise ValueError(f"cannot parse lambda range {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo < 1 or hi < lo:
        raise ValueError(f"empty or nonpositive lambda range {text!r}")
    return range(lo, hi + 1)


def theorem_ids(tags: Iterable[str] = TAGS, lambdas: Iterable[int] = range(1, 6)) -> list[TheoremId]:
    lambdas = list(lambdas)
    out = []
    for tag in tags:
        if tag in LAMBDA_TAGS:
            out.extend(TheoremId(tag, lam) for lam in lambdas)
        else:
            out.append(TheoremId(tag))
    return out


def parse_theorem_list(text: str, lambdas: Iterable[int] = range(1, 6)) -> list[TheoremId]:
    """``"all"`` or a comma list such as ``"A,B,T11,T12[3]"``.

    A lambda-parameterised tag without an explicit lambda expands over
    ``lambdas``.
    """
    lambdas = list(lambdas)
    if text.strip().lower() == "all":
        return theorem_ids(TAGS, lambdas)
    out: list[TheoremId] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"([A-Ga-g]|[Tt]\d{1,2})", part)
        if m and m.group(1).upper() in LAMBDA_TAGS:
            out.extend(theorem_ids([m.group(1).upper()], lambdas))
        else:
            out.append(parse_theorem_id(part))
    return out


# --------------------------------------------------------------------------
# bound formulas


def bound_t1(p_bar: int, delta: int) -> int:
    """Longest cycle lower bound from the residual longest path (edges)."""
    if delta < 0 or p_bar < -1:
        raise ValueError(f"bound_t1 needs delta >= 0 and p_bar >= -1; got {p_bar}, {delta}")
    return (p_bar + 2) * (delta - p_bar)


def bound_t2(c_bar: int, delta: int) -> int:
    """Longest cycle lower bound from the residual circumference (vertices)."""
    if delta < 0 or c_bar < 0:
        raise ValueError(f"bound_t2 needs delta >= 0 and c_bar >= 0; got {c_bar}, {delta}")
    return (c_bar + 1) * (delta - c_bar + 1)


def bound_t3(c_bar: int, kappa: int, delta: int) -> Fraction:
    """Piecewise bound, switching on whether c_bar reaches kappa."""
    if kappa < 2 or delta < 0 or c_bar < 0:
        raise ValueError(f"bound_t3 needs kappa >= 2, delta >= 0, c_bar >= 0; got {c_bar}, {kappa}, {delta}")
    if c_bar >= kappa:
        return Fraction((c_bar + 1) * kappa * (delta + 2), c_bar + kappa + 1)
    return Fraction((c_bar + 1) * c_bar * (delta + 2), 2 * c_bar + 1)


def _t15_size_ok(q: int, delta: int) -> bool:
    if delta == 2:
        return q <= 8
    if delta >= 3:
        return 2 * q <= 3 * (delta - 1) * (delta + 2) - 1
    return False


# --------------------------------------------------------------------------
# per-graph analysis


class Analysis:
    """Lazily computed invariants of one graph, shared by all checkers."""

    def __init__(self, G: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP):
        if G.n == 0:
            raise ValueError("theorem checks need a graph with at least one vertex")
        self.G = G
        self.cycle_cap = cycle_cap

    @cached_property
    def n(self) -> int:
        return self.G.n

    @cached_property
    def q(self) -> int:
        return self.G.num_edges()

    @cached_property
    def delta(self) -> int:
        return min_degree(self.G)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.G)

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.G)

    @cached_property
    def tau(self):
        return toughness(self.G)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.G)

    @cached_property
    def c(self) -> int:
        return cycles.circumference(self.G)[0]

    @cached_property
    def hamiltonian(self) -> bool:
        return self.c == self.n

    @cached_property
    def longest_masks(self) -> list[int]:
        masks, truncated = cycles.longest_cycle_masks(self.G, self.cycle_cap)
        if truncated:
            raise Undecided(
                f"more than {self.cycle_cap} longest cycles in {write_graph6(self.G)}; "
                "universal conclusions cannot be decided"
            )
        return masks

    @cached_property
    def residuals(self) -> dict[int, cycles.ResidualParams]:
        return {m: cycles.residual_params_mask(self.G, m) for m in self.longest_masks}

    @cached_property
    def has_dominating_cycle(self) -> bool:
        return cycles.has_dominating_cycle(self.G)

    @cached_property
    def is_petersen(self) -> bool:
        if self.n != 10 or self.q != 15:
            return False
        from .families import petersen

        return canonical_form(self.G) == canonical_form(petersen())

    def record(self) -> dict:
        """Invariants computed so far (nothing new is evaluated)."""
        out = {"n": self.n, "q": self.q}
        for name in ("delta", "kappa", "alpha", "c", "connected"):
            if name in self.__dict__:
                out[name] = self.__dict__[name]
        if "tau" in self.__dict__:
            out["tau"] = str(self.__dict__["tau"])
        return out

    # conclusion helpers; each returns an offending longest-cycle mask or None

    def first_longest(self, ok: Callable[[int, cycles.ResidualParams], bool]) -> int | None:
        for m in self.longest_masks:
            if not ok(m, self.residuals[m]):
                return m
        return None

    def first_non_dominating(self) -> int | None:
        return self.first_longest(lambda m, r: r.c_bar <= 1)

    def first_not_cd(self, mu: int) -> int | None:
        # CD_mu for mu <= 1 asks C to meet every vertex, i.e. be Hamilton
        return self.first_longest(lambda m, r: r.c_bar <= max(mu, 1) - 1)


# --------------------------------------------------------------------------
# verdicts


class VerdictKind(str, enum.Enum):
    INAPPLICABLE = "inapplicable"
    HOLDS = "holds"
    EXCEPTION_ALLOWED = "exception"
    VIOLATED = "violated"


@dataclass
class Verdict:
    theorem: TheoremId
    kind: VerdictKind
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {"theorem": str(self.theorem), "kind": self.kind.value, "witness": self.witness}


@dataclass(frozen=True)
class Outcome:
    """Conclusion result: ``ok`` plus an offending longest cycle if any."""

    ok: bool
    cycle: int | None = None
    detail: str = ""


def _min_n(a: Analysis, value) -> Outcome:
    return Outcome(a.c >= min(a.n, value), None, f"c={a.c}, min(n, {value})={min(a.n, value)}")


def _hamilton(a: Analysis) -> Outcome:
    return Outcome(a.hamiltonian, None, f"c={a.c}, n={a.n}")


def _all_dominating(a: Analysis) -> Outcome:
    m = a.first_non_dominating()
    return Outcome(m is None, m, "" if m is None else "longest cycle leaves an edge uncovered")


def _either(a: Analysis, value: int, other: Callable[[], Outcome]) -> Outcome:
    if a.c >= value:
        return Outcome(True)
    res = other()
    return Outcome(res.ok, res.cycle, f"c={a.c} < {value}; {res.detail}")


def _all_cd(a: Analysis, mu: int) -> Outcome:
    m = a.first_not_cd(mu)
    return Outcome(m is None, m, "" if m is None else f"longest cycle is not CD_{mu}")


def _t1(a: Analysis, lam) -> Outcome:
    m = a.first_longest(lambda m, r: m.bit_count() >= bound_t1(r.p_bar, a.delta))
    return Outcome(m is None, m, "" if m is None else f"bound {bound_t1(a.residuals[m].p_bar, a.delta)}")


def _t2(a: Analysis, lam) -> Outcome:
    m = a.first_longest(lambda m, r: m.bit_count() >= bound_t2(r.c_bar, a.delta))
    return Outcome(m is None, m, "" if m is None else f"bound {bound_t2(a.residuals[m].c_bar, a.delta)}")


def _t3(a: Analysis, lam) -> Outcome:
    m = a.first_longest(lambda m, r: m.bit_count() >= bound_t3(r.c_bar, a.kappa, a.delta))
    return Outcome(m is None, m, "" if m is None else f"bound {bound_t3(a.residuals[m].c_bar, a.kappa, a.delta)}")


def _t9_dominating_exists(a: Analysis) -> Outcome:
    ok = a.has_dominating_cycle
    return Outcome(ok, None, "" if ok else "no dominating cycle")


@dataclass(frozen=True)
class TheoremSpec:
    """Hypothesis and conclusion of one statement.

    ``bound`` (optional) gives the quantity that the circumference is
    compared with, for sharpness reports.
    """

    tag: str
    hypothesis: Callable[[Analysis, int | None], bool]
    conclusion: Callable[[Analysis, int | None], Outcome]
    bound: Callable[[Analysis, int | None], object] | None = None
    exception: Callable[[Analysis], bool] | None = None
    statement: str = ""


def _spec(tag, hyp, concl, bound=None, exception=None, statement=""):
    return TheoremSpec(tag, hyp, concl, bound, exception, statement)


THEOREMS: dict[str, TheoremSpec] = {
    s.tag: s
    for s in [
        _spec("A", lambda a, l: 2 * a.delta >= a.n, lambda a, l: _hamilton(a),
              statement="delta >= n/2 => hamiltonian"),
        _spec("B", lambda a, l: a.kappa >= 2, lambda a, l: _min_n(a, 2 * a.delta),
              bound=lambda a, l: 2 * a.delta, statement="2-connected => c >= min(n, 2 delta)"),
        _spec("C", lambda a, l: a.kappa >= 2 and 3 * a.delta >= a.n + 2, lambda a, l: _all_dominating(a),
              statement="2-connected, delta >= (n+2)/3 => every longest cycle dominating"),
        _spec("D", lambda a, l: a.kappa >= 3, lambda a, l: _either(a, 3 * a.delta - 3, lambda: _all_dominating(a)),
              bound=lambda a, l: 3 * a.delta - 3,
              statement="3-connected => c >= 3 delta - 3 or every longest cycle dominating"),
        _spec("E", lambda a, l: a.kappa >= 2 and 3 * a.delta >= a.n + 2 and a.delta >= a.alpha,
              lambda a, l: _hamilton(a),
              statement="2-connected, delta >= alpha, delta >= (n+2)/3 => hamiltonian"),
        _spec("F", lambda a, l: a.kappa >= 3 and a.delta >= a.alpha, lambda a, l: _min_n(a, 3 * a.delta - 3),
              bound=lambda a, l: 3 * a.delta - 3,
              statement="3-connected, delta >= alpha => c >= min(n, 3 delta - 3)"),
        _spec("G", lambda a, l: a.kappa >= a.alpha, lambda a, l: _hamilton(a),
              statement="kappa >= alpha => hamiltonian"),
        _spec("T1", lambda a, l: True, _t1, statement="|C| >= (p+2)(delta-p) for every longest C"),
        _spec("T2", lambda a, l: True, _t2, statement="|C| >= (c+1)(delta-c+1) for every longest C"),
        _spec("T3", lambda a, l: a.kappa >= 2, _t3, statement="kappa >= 2 => |C| >= piecewise bound"),
        _spec("T4", lambda a, l: a.kappa >= 2 and 3 * a.delta >= a.n + a.kappa, lambda a, l: _hamilton(a),
              statement="2-connected, delta >= (n+kappa)/3 => hamiltonian"),
        _spec("T5", lambda a, l: a.kappa >= 3 and 4 * a.delta >= a.n + 2 * a.kappa and a.delta >= a.alpha,
              lambda a, l: _hamilton(a),
              statement="3-connected, delta >= max((n+2kappa)/4, alpha) => hamiltonian"),
        _spec("T6", lambda a, l: a.kappa >= 3, lambda a, l: _min_n(a, 3 * a.delta - a.kappa),
              bound=lambda a, l: 3 * a.delta - a.kappa,
              statement="3-connected => c >= min(n, 3 delta - kappa)"),
        _spec("T7", lambda a, l: a.kappa >= 4 and a.delta >= a.alpha,
              lambda a, l: _min_n(a, 4 * a.delta - 2 * a.kappa),
              bound=lambda a, l: 4 * a.delta - 2 * a.kappa,
              statement="4-connected, delta >= alpha => c >= min(n, 4 delta - 2 kappa)"),
        _spec("T8", lambda a, l: a.kappa >= 4 and a.delta >= a.alpha,
              lambda a, l: _min_n(a, 4 * a.delta - a.kappa - 4),
              bound=lambda a, l: 4 * a.delta - a.kappa - 4,
              statement="4-connected, delta >= alpha => c >= min(n, 4 delta - kappa - 4)"),
        _spec("T9", lambda a, l: a.kappa >= 4,
              lambda a, l: _either(a, 4 * a.delta - 2 * a.kappa, lambda: _t9_dominating_exists(a)),
              bound=lambda a, l: 4 * a.delta - 2 * a.kappa,
              statement="4-connected => c >= 4 delta - 2 kappa or G has a dominating cycle"),
        _spec("T10", lambda a, l: a.kappa >= 4,
              lambda a, l: _either(a, 4 * a.delta - a.kappa - 4, lambda: _all_dominating(a)),
              bound=lambda a, l: 4 * a.delta - a.kappa - 4,
              statement="4-connected => c >= 4 delta - kappa - 4 or every longest cycle dominating"),
        _spec("T11", lambda a, l: a.kappa >= l and (a.delta - l + 2) * (l + 1) >= a.n + 2,
              lambda a, l: _all_cd(a, min(l, a.delta - l + 1)),
              statement="delta >= (n+2)/(l+1) + l - 2, kappa >= l => every longest cycle CD_min(l, delta-l+1)"),
        _spec("T12", lambda a, l: a.kappa >= l + 1,
              lambda a, l: _either(a, (l + 1) * (a.delta - l + 1), lambda: _all_cd(a, min(l, a.delta - l))),
              bound=lambda a, l: (l + 1) * (a.delta - l + 1),
              statement="kappa >= l+1 => c >= (l+1)(delta-l+1) or every longest cycle CD_min(l, delta-l)"),
        _spec("T13", lambda a, l: a.kappa >= l + 2 and a.delta >= a.alpha + l - 1,
              lambda a, l: _min_n(a, (l + 2) * (a.delta - l)),
              bound=lambda a, l: (l + 2) * (a.delta - l),
              statement="kappa >= l+2, delta >= alpha+l-1 => c >= min(n, (l+2)(delta-l))"),
        _spec("T14", lambda a, l: a.q <= a.delta ** 2 + a.delta - 1, lambda a, l: _hamilton(a),
              statement="q <= delta^2 + delta - 1 => hamiltonian"),
        _spec("T15", lambda a, l: a.kappa >= 2 and _t15_size_ok(a.q, a.delta), lambda a, l: _all_dominating(a),
              statement="2-connected, q <= 8 (delta=2) or (3(delta-1)(delta+2)-1)/2 => every longest cycle dominating"),
        _spec("T16", lambda a, l: a.tau.exceeds(1), lambda a, l: _min_n(a, 2 * a.delta + 5),
              bound=lambda a, l: 2 * a.delta + 5, exception=lambda a: a.is_petersen,
              statement="tau > 1 => c >= min(n, 2 delta + 5) or G is Petersen"),
        _spec("T17", lambda a, l: a.tau.exceeds(1) and 3 * a.delta >= a.n - 2, lambda a, l: _all_dominating(a),
              statement="tau > 1, delta >= (n-2)/3 => every longest cycle dominating"),
        _spec("T18", lambda a, l: a.tau.at_least(1) and 3 * a.delta >= a.n - 2, lambda a, l: _all_dominating(a),
              exception=lambda a: True,
              statement="1-tough, delta >= (n-2)/3 => every longest cycle dominating, up to an exceptional class"),
    ]
}


def _witness(a: Analysis, tid: TheoremId, out: Outcome) -> dict:
    w = {"graph6": write_graph6(a.G), "invariants": a.record(), "detail": out.detail}
    mask = out.cycle if out.cycle is not None else a.longest_masks[0]
    w["cycle"] = list(cycles.cycle_certificate(a.G, mask).vertices)
    res = a.residuals[mask]
    w["residual"] = {"p_bar": res.p_bar, "c_bar": res.c_bar}
    return w


def evaluate(a: Analysis, tid: TheoremId) -> tuple[bool, Outcome | None]:
    """Hypothesis flag and (when it holds) the conclusion outcome."""
    spec = THEOREMS[tid.tag]
    if not spec.hypothesis(a, tid.lam):
        return False, None
    return True, spec.conclusion(a, tid.lam)


def _verdict(a: Analysis, tid: TheoremId) -> Verdict:
    spec = THEOREMS[tid.tag]
    applies, out = evaluate(a, tid)
    if not applies:
        return Verdict(tid, VerdictKind.INAPPLICABLE)
    if out.ok:
        return Verdict(tid, VerdictKind.HOLDS)
    if spec.exception is not None and spec.exception(a):
        return Verdict(tid, VerdictKind.EXCEPTION_ALLOWED, _witness(a, tid, out))
    return Verdict(tid, VerdictKind.VIOLATED, _witness(a, tid, out))


def check(tid: TheoremId | str, G: Graph | Analysis, cycle_cap: int = DEFAULT_CYCLE_CAP) -> Verdict:
    """Verdict of one theorem on one graph.  Raises ``Undecided`` when the
    longest-cycle enumeration hits ``cycle_cap``."""
    if isinstance(tid, str):
        tid = parse_theorem_id(tid)
    a = G if isinstance(G, Analysis) else Analysis(G, cycle_cap)
    return _verdict(a, tid)


def check_all(G: Graph | Analysis, lambdas: Iterable[int] = range(1, 6),
              theorems: Iterable[TheoremId] | None = None,
              cycle_cap: int = DEFAULT_CYCLE_CAP) -> dict[TheoremId, Verdict]:
    """Verdicts for every selected theorem, sharing one :class:`Analysis`."""
    a = G if isinstance(G, Analysis) else Analysis(G, cycle_cap)
    ids = list(theorems) if theorems is not None else theorem_ids(TAGS, lambdas)
    return {tid: _verdict(a, tid) for tid in ids}
