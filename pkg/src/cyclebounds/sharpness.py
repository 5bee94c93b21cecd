"""Sharpness audits: evaluate a theorem on a grid of extremal-family instances.

For statements bounding the circumference the audit records whether the
bound is attained exactly.  For statements with a threshold hypothesis it
records whether the instance satisfies a slightly relaxed hypothesis while
failing the conclusion, i.e. whether it falsifies the relaxed statement.

Grids and family arguments are small integer expressions, e.g.::

    audit("h", "delta=3..6,kappa=2..5", "T4",
          args="a=1,b=delta-kappa+1,t=delta,k=kappa", where="kappa<delta")
"""

from __future__ import annotations

import ast
import itertools
import operator
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import cycles
from .cycles import Undecided
from .families import FAMILIES, FamilySpec, family_params
from .graph import write_graph6
from .theorems import (
    THEOREMS,
    Analysis,
    Outcome,
    TheoremId,
    _hamilton,
    _t15_size_ok,
    bound_t1,
    bound_t2,
    bound_t3,
    check,
    evaluate,
    parse_theorem_id,
)

__all__ = [
    "AUDIT_MAX_N",
    "RELAXATIONS",
    "SHARPNESS_EXAMPLES",
    "SharpnessInstance",
    "SharpnessReport",
    "parse_grid",
    "evaluate_expr",
    "audit",
    "audit_claim",
]

AUDIT_MAX_N = 24

# --------------------------------------------------------------------------
# integer expressions

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.FloorDiv: operator.floordiv,
           ast.Mod: operator.mod}
_CMPOPS = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt, ast.GtE: operator.ge,
           ast.Eq: operator.eq, ast.NotEq: operator.ne}


def evaluate_expr(text: str, env: dict[str, int]):
    """Evaluate integer arithmetic / comparisons over ``env`` (no calls)."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise ValueError(f"unknown name {node.id!r} in {text!r}")
            return env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.BoolOp):
            vals = [ev(v) for v in node.values]
            return all(vals) if isinstance(node.op, ast.And) else any(vals)
        if isinstance(node, ast.Compare):
            left = ev(node.left)
            for op, right in zip(node.ops, node.comparators):
                if type(op) not in _CMPOPS:
                    break
                r = ev(right)
                if not _CMPOPS[type(op)](left, r):
                    return False
                left = r
            else:
                return True
        raise ValueError(f"unsupported expression {text!r}")

    return ev(ast.parse(text.strip(), mode="eval"))


def parse_grid(text: str) -> dict[str, list[int]]:
    """``"kappa=2..5,delta=3..6,b=1|3"`` -> ordered value lists."""
    grid: dict[str, list[int]] = {}
    for part in filter(None, (p.strip() for p in (text or "").split(","))):
        m = re.fullmatch(r"([A-Za-z_]\w*)\s*=\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)|((?:\s*\|\s*-?\d+)+))?", part)
        if not m:
            raise ValueError(f"cannot parse grid entry {part!r}")
        name, lo = m.group(1), int(m.group(2))
        if m.group(3) is not None:
            values = list(range(lo, int(m.group(3)) + 1))
        elif m.group(4):
            values = [lo] + [int(v) for v in m.group(4).split("|") if v.strip()]
        else:
            values = [lo]
        grid[name] = values
    return grid


def _parse_args(text: str | None) -> dict[str, str]:
    out = {}
    for part in filter(None, (p.strip() for p in (text or "").split(","))):
        name, _, expr = part.partition("=")
        if not expr:
            raise ValueError(f"family argument {part!r} must look like name=expression")
        out[name.strip()] = expr.strip()
    return out


# --------------------------------------------------------------------------
# relaxed statements


@dataclass(frozen=True)
class Relaxation:
    """A weaker hypothesis and/or stronger conclusion for one theorem."""

    tag: str
    name: str
    hypothesis: Callable[[Analysis, int | None], bool] | None = None
    conclusion: Callable[[Analysis, int | None], Outcome] | None = None

    def falsified_by(self, a: Analysis, lam: int | None) -> bool:
        spec = THEOREMS[self.tag]
        hyp = self.hypothesis or spec.hypothesis
        concl = self.conclusion or spec.conclusion
        return hyp(a, lam) and not concl(a, lam).ok


def _relax(tag: str, name: str, hypothesis=None, conclusion=None) -> Relaxation:
    return Relaxation(tag, name, hypothesis, conclusion)


def _t15_size_relaxed(q: int, delta: int) -> bool:
    # one more edge than the largest size the hypothesis allows
    if delta == 2:
        return q <= 9
    if delta >= 3:
        return 2 * q <= 3 * (delta - 1) * (delta + 2)
    return False


RELAXATIONS: dict[str, dict[str, Relaxation]] = {
    "T4": {
        "delta": _relax("T4", "delta", lambda a, l: a.kappa >= 2 and 3 * a.delta >= a.n + a.kappa - 1),
        "connectivity": _relax("T4", "connectivity", lambda a, l: a.kappa >= 1 and 3 * a.delta >= a.n + a.kappa),
    },
    "T5": {
        "delta": _relax("T5", "delta", lambda a, l: a.kappa >= 3 and 4 * a.delta >= a.n + 2 * a.kappa - 1
                        and a.delta >= a.alpha),
        "connectivity": _relax("T5", "connectivity", lambda a, l: a.kappa >= 2 and 4 * a.delta >= a.n + 2 * a.kappa
                               and a.delta >= a.alpha),
        "alpha": _relax("T5", "alpha", lambda a, l: a.kappa >= 3 and 4 * a.delta >= a.n + 2 * a.kappa
                        and a.delta >= a.alpha - 1),
    },
    "T11": {
        "delta": _relax("T11", "delta", lambda a, l: a.kappa >= l and (a.delta - l + 2) * (l + 1) >= a.n + 1),
        "connectivity": _relax("T11", "connectivity",
                               lambda a, l: a.kappa >= l - 1 and (a.delta - l + 2) * (l + 1) >= a.n + 2),
    },
    "T14": {
        "size": _relax("T14", "size", lambda a, l: a.q <= a.delta ** 2 + a.delta),
    },
    "T15": {
        "size": _relax("T15", "size", lambda a, l: a.kappa >= 2 and _t15_size_relaxed(a.q, a.delta)),
        "connectivity": _relax("T15", "connectivity", lambda a, l: a.kappa >= 1 and _t15_size_ok(a.q, a.delta)),
        "conclusion": _relax("T15", "conclusion", conclusion=lambda a, l: _hamilton(a)),
    },
    "T17": {
        "toughness": _relax("T17", "toughness", lambda a, l: a.tau.at_least(1) and 3 * a.delta >= a.n - 2),
    },
    "T6": {"connectivity": _relax("T6", "connectivity", lambda a, l: a.kappa >= 2)},
    "T7": {"connectivity": _relax("T7", "connectivity", lambda a, l: a.kappa >= 3 and a.delta >= a.alpha)},
    "T8": {"connectivity": _relax("T8", "connectivity", lambda a, l: a.kappa >= 3 and a.delta >= a.alpha)},
    "T9": {"connectivity": _relax("T9", "connectivity", lambda a, l: a.kappa >= 3)},
    "T10": {"connectivity": _relax("T10", "connectivity", lambda a, l: a.kappa >= 3)},
    "T12": {"connectivity": _relax("T12", "connectivity", lambda a, l: a.kappa >= l)},
    "T13": {"connectivity": _relax("T13", "connectivity", lambda a, l: a.kappa >= l + 1 and a.delta >= a.alpha + l - 1)},
}


def _threshold(a: Analysis, tag: str, lam: int | None):
    """(computed quantity, claimed threshold) for threshold statements."""
    if tag == "T4":
        return a.delta, Fraction(a.n + a.kappa, 3)
    if tag == "T5":
        return a.delta, max(Fraction(a.n + 2 * a.kappa, 4), Fraction(a.alpha))
    if tag == "T11":
        return a.delta, Fraction(a.n + 2, lam + 1) + lam - 2
    if tag == "T14":
        return a.q, a.delta ** 2 + a.delta - 1
    if tag == "T15":
        if a.delta == 2:
            return a.q, 8
        return a.q, Fraction(3 * (a.delta - 1) * (a.delta + 2) - 1, 2) if a.delta >= 3 else None
    if tag in ("A",):
        return a.delta, Fraction(a.n, 2)
    if tag in ("C", "E"):
        return a.delta, Fraction(a.n + 2, 3)
    if tag in ("T17", "T18"):
        return a.delta, Fraction(a.n - 2, 3)
    return None, None


def _per_cycle_bounds(a: Analysis, tag: str) -> list[tuple[int, object]]:
    out = []
    for m in a.longest_masks:
        r = a.residuals[m]
        if tag == "T1":
            b = bound_t1(r.p_bar, a.delta)
        elif tag == "T2":
            b = bound_t2(r.c_bar, a.delta)
        else:
            b = bound_t3(r.c_bar, a.kappa, a.delta) if a.kappa >= 2 else None
        out.append((m, b))
    return out


# --------------------------------------------------------------------------
# reports


def _fmt(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x


@dataclass
class SharpnessInstance:
    family: str
    params: dict
    graph6: str
    invariants: dict
    verdict: str
    hypothesis: bool
    conclusion: bool | None
    computed: object = None
    bound: object = None
    equality: bool | None = None
    relaxed_fails: dict = field(default_factory=dict)
    residuals: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "graph6": self.graph6,
            "invariants": self.invariants,
            "verdict": self.verdict,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "computed": _fmt(self.computed),
            "bound": _fmt(self.bound),
            "equality": self.equality,
            "relaxed_fails": self.relaxed_fails,
            "residuals": self.residuals,
        }


@dataclass
class SharpnessReport:
    family: str
    theorem: str
    grid: dict
    args: dict
    instances: list[SharpnessInstance] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    description: str = ""

    @property
    def all_equal(self) -> bool:
        return bool(self.instances) and all(i.equality for i in self.instances)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "theorem": self.theorem,
            "description": self.description,
            "grid": self.grid,
            "args": self.args,
            "instances": [i.as_dict() for i in self.instances],
            "skipped": self.skipped,
        }

    def to_text(self) -> str:
        head = f"{self.theorem} on {self.family}"
        if self.description:
            head += f"  ({self.description})"
        lines = [head]
        for i in self.instances:
            inv = i.invariants
            rel = " ".join(f"{k}:{'FAILS' if v else 'ok'}" for k, v in i.relaxed_fails.items())
            lines.append(
                f"  {FamilySpec(self.family, i.params).label():<34} n={inv['n']:<3} q={inv['q']:<4} "
                f"delta={inv['delta']:<2} kappa={inv['kappa']:<2} c={inv['c']:<3} "
                f"verdict={i.verdict:<12} computed={_fmt(i.computed)} bound={_fmt(i.bound)} "
                f"equality={i.equality} {rel}".rstrip()
            )
        for s in self.skipped:
            lines.append(f"  skipped {s['params']}: {s['reason']}")
        return "\n".join(lines)


def _instance(family: str, params: dict, tid: TheoremId) -> SharpnessInstance:
    g = FamilySpec(family, params).build()
    if g.n > AUDIT_MAX_N:
        raise ValueError(f"order {g.n} exceeds the audit limit {AUDIT_MAX_N}")
    a = Analysis(g)
    verdict = check(tid, a)
    applies, out = evaluate(a, tid)
    spec = THEOREMS[tid.tag]
    # conclusion is reported even when the hypothesis fails
    conclusion_ok = out.ok if out is not None else spec.conclusion(a, tid.lam).ok

    computed = bound = equality = None
    if tid.tag in ("T1", "T2", "T3"):
        pairs = [(m, b) for m, b in _per_cycle_bounds(a, tid.tag) if b is not None]
        if pairs:
            values = sorted({b for _, b in pairs})
            computed = a.c
            bound = values[0] if len(values) == 1 else values
            equality = all(m.bit_count() == b for m, b in pairs)
    elif spec.bound is not None:
        computed, bound = a.c, spec.bound(a, tid.lam)
        equality = computed == bound
    else:
        computed, bound = _threshold(a, tid.tag, tid.lam)
        equality = None if bound is None else computed == bound

    relaxed = {name: r.falsified_by(a, tid.lam) for name, r in RELAXATIONS.get(tid.tag, {}).items()}
    residuals = [
        {"cycle": list(cycles.cycle_certificate(g, m).vertices), "p_bar": r.p_bar, "c_bar": r.c_bar}
        for m, r in sorted(a.residuals.items())[:8]
    ]
    inv = {"n": a.n, "q": a.q, "delta": a.delta, "kappa": a.kappa, "alpha": a.alpha, "c": a.c,
           "tau": str(a.tau), "hamiltonian": a.hamiltonian}
    return SharpnessInstance(
        family=family, params=dict(params), graph6=write_graph6(g), invariants=inv,
        verdict=verdict.kind.value, hypothesis=applies, conclusion=conclusion_ok,
        computed=computed, bound=bound, equality=equality, relaxed_fails=relaxed, residuals=residuals,
    )


def audit(family: str, grid: str | dict, theorem: str | TheoremId, args: str | dict | None = None,
          where: str | None = None, description: str = "") -> SharpnessReport:
    """Evaluate ``theorem`` on every instance of ``family`` over ``grid``.

    ``args`` maps family parameters to expressions in the grid variables
    (default: grid variables are the family parameters).  Combinations
    failing ``where`` are dropped silently; invalid or oversized instances
    are skipped with a notice.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    tid = parse_theorem_id(theorem) if isinstance(theorem, str) else theorem
    grid_d = parse_grid(grid) if isinstance(grid, str) else dict(grid)
    arg_d = _parse_args(args) if isinstance(args, str) or args is None else dict(args)
    if not arg_d:
        arg_d = {p: p for p in family_params(family)}
    report = SharpnessReport(family, str(tid), {k: list(v) for k, v in grid_d.items()}, arg_d,
                             description=description)
    names = list(grid_d)
    for combo in itertools.product(*(grid_d[k] for k in names)):
        env = dict(zip(names, combo))
        if where and not evaluate_expr(where, env):
            continue
        try:
            params = {p: int(evaluate_expr(expr, env)) for p, expr in arg_d.items()}
            report.instances.append(_instance(family, params, tid))
        except (ValueError, Undecided) as exc:
            report.skipped.append({"params": env, "reason": str(exc)})
    return report


# --------------------------------------------------------------------------
# the sharpness examples attached to each theorem


@dataclass(frozen=True)
class Claim:
    theorem: str
    family: str
    grid: str
    args: str | None = None
    where: str | None = None
    description: str = ""


_HUB = "kappa=kappa,delta=delta"

SHARPNESS_EXAMPLES: list[Claim] = [
    Claim("T1", "hub", "kappa=2..5,delta=3..6", _HUB, "kappa<delta", "(k+1)K_{d-k+1}+K_k attains the bound"),
    Claim("T2", "hub", "kappa=2..5,delta=3..6", _HUB, "kappa<delta", "(k+1)K_{d-k+1}+K_k attains the bound"),
    Claim("T3", "hub", "kappa=2..5,delta=3..6", _HUB, "kappa<delta", "(k+1)K_{d-k+1}+K_k attains the bound"),
    Claim("T4", "mka_plus_kb", "delta=2..6", "m=2,a=delta,b=1", None, "2K_d+K_1: 2-connectivity needed"),
    Claim("T4", "h", "delta=3..6,kappa=2..5", "a=1,b=delta-kappa+1,t=delta,k=kappa",
          "kappa<delta and 2*kappa<3*delta-kappa+1", "H(1,d-k+1,d,k): degree bound tight"),
    Claim("T5", "mka_plus_kb", "x=0", "m=3,a=2,b=2", None, "3K_2+K_2"),
    Claim("T5", "mka_plus_kb", "x=0", "m=4,a=2,b=3", None, "4K_2+K_3: (n+2k)/4 cannot drop to (n+2k-1)/4"),
    Claim("T5", "h", "kappa=3..5", "a=1,b=2,t=kappa+1,k=kappa", None, "H(1,2,k+1,k)"),
    Claim("T6", "mka_plus_kb", "delta=3..7", "m=3,a=delta-1,b=2", None, "3K_{d-1}+K_2"),
    Claim("T6", "h", "delta=3..6,kappa=3..5", "a=1,b=delta-kappa+1,t=delta,k=kappa", "kappa<delta",
          "H(1,d-k+1,d,k)"),
    Claim("T7", "mka_plus_kb", "x=0", "m=4,a=2,b=3", None, "4K_2+K_3"),
    Claim("T7", "h", "delta=4..6,kappa=4..6,b=1..6", "a=1,b=b,t=delta,k=kappa", "kappa<=delta",
          "H(1,n-2d,d,k)"),
    Claim("T7", "mka_plus_kb", "x=0", "m=5,a=2,b=4", None, "5K_2+K_4"),
    Claim("T8", "mka_plus_kb", "delta=4..6", "m=4,a=delta-2,b=3", None, "4K_{d-2}+K_3"),
    Claim("T8", "h", "kappa=4..6", "a=1,b=2,t=kappa+1,k=kappa", None, "H(1,2,k+1,k)"),
    Claim("T8", "h", "delta=5..7,kappa=4..6,b=1..4", "a=2,b=b,t=delta-1,k=kappa", "kappa<=delta-1",
          "H(2,n-3d+3,d-1,k)"),
    Claim("T9", "mka_plus_kb", "x=0", "m=4,a=2,b=3", None, "4K_2+K_3"),
    Claim("T9", "mka_plus_kb", "x=0", "m=5,a=2,b=4", None, "5K_2+K_4"),
    Claim("T9", "h", "delta=4..6,kappa=4..6,b=1..6", "a=1,b=b,t=delta,k=kappa", "kappa<=delta",
          "H(1,n-2d,d,k)"),
    Claim("T10", "mka_plus_kb", "delta=4..6", "m=4,a=delta-2,b=3", None, "4K_{d-2}+K_3"),
    Claim("T10", "h", "delta=5..7,kappa=4..6", "a=2,b=delta-kappa+1,t=delta-1,k=kappa", "kappa<=delta-1",
          "H(2,d-k+1,d-1,k)"),
    Claim("T10", "h", "kappa=4..6", "a=1,b=2,t=kappa+1,k=kappa", None, "H(1,2,k+1,k)"),
    Claim("T11[2]", "mka_plus_kb", "x=0", "m=2,a=3,b=1", None, "lK_{l+1}+K_{l-1}"),
    Claim("T11[3]", "mka_plus_kb", "x=0", "m=3,a=4,b=2", None, "lK_{l+1}+K_{l-1}"),
    Claim("T11[1]", "hub", "delta=2..6", "kappa=1,delta=delta", None, "(l+1)K_{d-l+1}+K_l"),
    Claim("T11[2]", "hub", "delta=3..6", "kappa=2,delta=delta", None, "(l+1)K_{d-l+1}+K_l"),
    Claim("T11[3]", "hub", "delta=4..6", "kappa=3,delta=delta", None, "(l+1)K_{d-l+1}+K_l"),
    Claim("T11[2]", "h", "x=0", "a=1,b=2,t=4,k=3", None, "H(l-1,l,l+2,l+1)"),
    Claim("T11[3]", "h", "x=0", "a=2,b=3,t=5,k=4", None, "H(l-1,l,l+2,l+1)"),
    Claim("T12[1]", "mka_plus_kb", "x=0", "m=2,a=2,b=1", None, "(l+1)K_{l+1}+K_l"),
    Claim("T12[2]", "mka_plus_kb", "x=0", "m=3,a=3,b=2", None, "(l+1)K_{l+1}+K_l"),
    Claim("T12[3]", "mka_plus_kb", "x=0", "m=4,a=4,b=3", None, "(l+1)K_{l+1}+K_l"),
    Claim("T12[2]", "mka_plus_kb", "x=0", "m=5,a=1,b=4", None, "(l+3)K_{l-1}+K_{l+2}"),
    Claim("T12[3]", "mka_plus_kb", "x=0", "m=6,a=2,b=5", None, "(l+3)K_{l-1}+K_{l+2}"),
    Claim("T12[1]", "mka_plus_kb", "x=0", "m=3,a=1,b=2", None, "(l+2)K_l+K_{l+1}"),
    Claim("T12[2]", "mka_plus_kb", "x=0", "m=4,a=2,b=3", None, "(l+2)K_l+K_{l+1}"),
    Claim("T12[3]", "mka_plus_kb", "x=0", "m=5,a=3,b=4", None, "(l+2)K_l+K_{l+1}"),
    Claim("T13[1]", "mka_plus_kb", "x=0", "m=3,a=3,b=2", None, "(l+2)K_{l+2}+K_{l+1}"),
    Claim("T13[2]", "mka_plus_kb", "x=0", "m=4,a=4,b=3", None, "(l+2)K_{l+2}+K_{l+1}"),
    Claim("T13[1]", "mka_plus_kb", "x=0", "m=5,a=1,b=4", None, "(l+4)K_l+K_{l+3}"),
    Claim("T13[2]", "mka_plus_kb", "x=0", "m=6,a=2,b=5", None, "(l+4)K_l+K_{l+3}"),
    Claim("T13[1]", "mka_plus_kb", "x=0", "m=4,a=2,b=3", None, "(l+3)K_{l+1}+K_{l+2}"),
    Claim("T13[2]", "mka_plus_kb", "x=0", "m=5,a=3,b=4", None, "(l+3)K_{l+1}+K_{l+2}"),
    Claim("T14", "k1_plus_2kd", "delta=2..5", None, None, "K_1+2K_d: q=d^2+d, not hamiltonian"),
    Claim("T15", "mka_plus_kb", "x=0", "m=2,a=2,b=1", None, "K_1+2K_2: kappa >= 2 needed"),
    Claim("T15", "t15", "x=0", "", None, "q <= 8 cannot become q <= 9"),
    Claim("T15", "mka_plus_kb", "x=0", "m=3,a=1,b=2", None, "K_2+3K_1: conclusion cannot become hamiltonian"),
    Claim("T15", "k1_plus_2kd", "delta=3..5", None, None, "K_1+2K_d (delta >= 3)"),
    Claim("T15", "mka_plus_kb", "delta=3..5", "m=3,a=delta-1,b=2", None, "K_2+3K_{d-1} (delta >= 3)"),
    Claim("T15", "mka_plus_kb", "delta=3..5", "m=delta+1,a=1,b=delta", None, "K_d+(d+1)K_1 (delta >= 3)"),
    Claim("T16", "petersen", "x=0", "", None, "the Petersen exception"),
    Claim("T17", "g_n", "x=0", "n=15,delta=5", None, "G_15: 1-tough, not hamiltonian"),
    Claim("T18", "g_n", "x=0", "n=15,delta=5", None, "G_15"),
    Claim("T18", "g_star", "x=0", "n=15", None, "G*_15"),
    Claim("T18", "l", "delta=2..5", None, None, "L_d"),
]


def audit_claim(claim: Claim) -> SharpnessReport:
    args = claim.args
    if args == "":
        args = {}
    return audit(claim.family, claim.grid, claim.theorem, args=args, where=claim.where,
                 description=claim.description)
