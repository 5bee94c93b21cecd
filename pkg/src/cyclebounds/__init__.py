"""Exact graph invariants and verification of dominating-cycle and
circumference bounds on small graphs."""

from .cycles import (
    CycleCertificate,
    ResidualParams,
    Undecided,
    all_longest_cycles,
    circumference,
    has_dominating_cycle,
    is_cd,
    is_dominating,
    is_hamiltonian,
    is_pd,
    longest_path_edges,
    residual_params,
)
from .families import FAMILIES, FamilySpec
from .graph import Graph, Graph6Error, canonical_form, parse_graph6, write_graph6
from .harness import VerificationReport, enumerate_graphs, verify_graphs, verify_stream
from .invariants import (
    InvariantRecord,
    Toughness,
    independence_number,
    invariant_record,
    is_t_tough,
    min_degree,
    toughness,
    vertex_connectivity,
)
from .sharpness import SharpnessReport, audit
from .theorems import TheoremId, Verdict, VerdictKind, check, check_all, parse_theorem_id

__version__ = "0.1.0"
