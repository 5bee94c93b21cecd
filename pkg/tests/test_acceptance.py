"""Acceptance criteria 1-8.  Each test prints one ``criterion N: PASS|FAIL`` line."""

from fractions import Fraction

import pytest

from cyclebounds.cycles import (
    all_longest_cycles,
    circumference,
    is_cd,
    is_dominating,
    is_hamiltonian,
    residual_params,
)
from cyclebounds.families import hub, k1_plus_2kd, mka_plus_kb, petersen, t15_graph
from cyclebounds.harness import enumerate_graphs, verify_graphs
from cyclebounds.invariants import (
    independence_number,
    min_degree,
    toughness,
    vertex_connectivity,
)
from cyclebounds.theorems import (
    THEOREMS,
    Analysis,
    VerdictKind,
    bound_t1,
    bound_t2,
    bound_t3,
    check,
    parse_theorem_list,
)

import oracles


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def connected_sweep():
    return {n: list(enumerate_graphs(n, connected_only=True)) for n in range(1, 9)}


def test_criterion_1_exhaustive_sweep(connected_sweep, verdict):
    counts = [len(connected_sweep[n]) for n in range(1, 9)]
    expected = oracles.count_connected(8)
    graphs = [g for n in range(1, 9) for g in connected_sweep[n]]
    lambdas = range(1, 5)
    report = verify_graphs(graphs, parse_theorem_list("all", lambdas), lambdas)
    non_t18 = {t: c["violated"] for t, c in report.counts.items() if not t.startswith("T18")}
    ok = (counts == expected == [1, 1, 2, 6, 21, 112, 853, 11117]
          and sum(non_t18.values()) == 0 and report.counts["T18"]["violated"] == 0
          and not report.undecided and report.exit_code == 0)
    verdict(1, ok, f"counts={counts} graphs={report.graphs} violated={report.violated} "
                   f"t18_exceptions={report.counts['T18']['exception']} undecided={len(report.undecided)} "
                   f"seconds={report.seconds:.1f}")


def test_criterion_2_hub_equality(verdict):
    bad = []
    cases = 0
    for delta in range(3, 7):
        for kappa in range(2, delta):
            cases += 1
            g = hub(kappa, delta)
            target = kappa * (delta - kappa + 2)
            c = circumference(g)[0]
            b1 = bound_t1(delta - kappa, delta)
            b2 = bound_t2(delta - kappa + 1, delta)
            b3 = bound_t3(delta - kappa + 1, kappa, delta)
            if not (c == target == b1 == b2 == b3):
                bad.append(f"(k={kappa},d={delta}: c={c} t1={b1} t2={b2} t3={b3})")
    verdict(2, not bad, f"{cases - len(bad)}/{cases} instances equal" + (f"; mismatches {' '.join(bad)}" if bad else ""))


def test_criterion_3_t14_threshold(connected_sweep, verdict):
    rows = []
    ok = True
    for d in range(2, 6):
        g = k1_plus_2kd(d)
        q, ham = g.num_edges(), is_hamiltonian(g)
        rows.append(f"d={d}:q={q},ham={ham}")
        ok &= min_degree(g) == d and q == d * d + d and not ham
    offenders = 0
    for n in range(1, 9):
        for g in connected_sweep[n]:
            d = min_degree(g)
            if g.num_edges() <= d * d + d - 1 and not is_hamiltonian(g):
                offenders += 1
    verdict(3, ok and offenders == 0, f"{' '.join(rows)} sparse_non_hamiltonian={offenders}")


def test_criterion_4_t15_tightness(verdict):
    g = t15_graph()
    shape = (g.n, g.num_edges(), min_degree(g), vertex_connectivity(g)) == (8, 9, 2, 2)
    c = circumference(g)[0]
    hexagon = next((cyc for cyc in all_longest_cycles(g) if set(cyc.vertices) == set(range(6))), None)
    hex_ok = (hexagon is not None and c == 6 and not is_dominating(g, hexagon)
              and residual_params(g, hexagon).p_bar == 1 and g.has_edge(6, 7))
    relaxed = (check("T15", g).kind is VerdictKind.INAPPLICABLE
               and THEOREMS["T15"].conclusion(Analysis(g), None).ok is False)

    # K_1 + 2K_2: q=6 <= 8 and kappa=1; a longest cycle is not dominating
    bowtie = mka_plus_kb(2, 2, 1)
    a = Analysis(bowtie)
    bowtie_ok = (a.kappa == 1 and a.q <= 8 and a.delta == 2
                 and check("T15", a).kind is VerdictKind.INAPPLICABLE
                 and not THEOREMS["T15"].conclusion(a, None).ok)

    # K_2 + 3K_1: inside the hypothesis, every longest cycle dominating, yet not hamiltonian
    k23 = mka_plus_kb(3, 1, 2)
    b = Analysis(k23)
    k23_ok = (b.kappa == 2 and b.q <= 8 and b.delta == 2
              and check("T15", b).kind is VerdictKind.HOLDS and not b.hamiltonian)
    ok = shape and hex_ok and relaxed and bowtie_ok and k23_ok
    verdict(4, ok, f"t15 shape={shape} hexagon_not_dominating={hex_ok} q<=9_fails={relaxed} "
                   f"K1+2K2={bowtie_ok} K2+3K1={k23_ok}")


def test_criterion_5_petersen(verdict):
    p = petersen()
    tau = toughness(p)
    c = circumference(p)[0]
    v = check("T16", p)
    ok = tau.value == Fraction(4, 3) and c == 9 and v.kind is VerdictKind.EXCEPTION_ALLOWED
    verdict(5, ok, f"tau={tau} c={c} T16={v.kind.value}")


def test_criterion_6_specialisations(verdict):
    graphs = [g for n in range(1, 8) for g in enumerate_graphs(n, connected_only=True)]
    t11 = THEOREMS["T11"].conclusion
    concl_c = THEOREMS["C"].conclusion
    hyp_c = THEOREMS["C"].hypothesis
    hyp_t11 = THEOREMS["T11"].hypothesis
    mismatch_ham = mismatch_c = hyp_mismatch = cycles_seen = cd_bad = 0
    delta_two = literal_diverge = 0
    for g in graphs:
        a = Analysis(g)
        mismatch_ham += t11(a, 1).ok != a.hamiltonian
        hyp_mismatch += hyp_t11(a, 2) != hyp_c(a, None)
        if a.delta >= 3 or hyp_c(a, None):
            # min{2, delta-1} = 2 here, so the two conclusions are the same statement
            mismatch_c += t11(a, 2).ok != concl_c(a, None).ok
        else:
            delta_two += 1
            mismatch_c += t11(a, 2).ok != a.hamiltonian
            literal_diverge += t11(a, 2).ok != concl_c(a, None).ok
        for cyc in all_longest_cycles(g):
            cycles_seen += 1
            cd_bad += is_cd(g, cyc, 1) != (len(cyc) == g.n)
            cd_bad += is_cd(g, cyc, 2) != is_dominating(g, cyc)
    ok = mismatch_ham == mismatch_c == hyp_mismatch == cd_bad == 0
    verdict(6, ok, f"graphs={len(graphs)} T11[1]/ham mismatches={mismatch_ham} T11[2]/C mismatches={mismatch_c} "
                   f"(delta<=2 outside C's hypothesis: {delta_two}, compared with CD_1; {literal_diverge} of them differ from C's conclusion since min{{2,delta-1}}=1) "
                   f"hypothesis mismatches={hyp_mismatch} longest cycles={cycles_seen} CD identity failures={cd_bad}")


def test_criterion_7_bound_shape(verdict):
    bad = []
    for delta in range(0, 51):
        vals = [bound_t2(c, delta) for c in range(delta + 1)]
        up = all(vals[c] < vals[c + 1] for c in range(delta // 2))
        down = all(vals[c] > vals[c + 1] for c in range((delta + 1) // 2, delta))
        peak = max(vals) == vals[delta // 2]
        if not (up and down and peak):
            bad.append(delta)
    verdict(7, not bad, f"delta 0..50 checked, failures={bad}")


def test_criterion_8_oracles(verdict):
    graphs = [g for n in range(1, 7) for g in enumerate_graphs(n)]
    miss = {"c": 0, "alpha": 0, "kappa": 0, "tau": 0}
    for g in graphs:
        miss["c"] += circumference(g)[0] != oracles.circumference(g)
        miss["alpha"] += independence_number(g) != oracles.independence_number(g)
        miss["kappa"] += vertex_connectivity(g) != oracles.vertex_connectivity(g)
        miss["tau"] += toughness(g).value != oracles.toughness(g)
    verdict(8, not any(miss.values()), f"graphs={len(graphs)} mismatches={miss}")
