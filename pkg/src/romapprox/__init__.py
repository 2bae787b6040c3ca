"""Space-frugal approximation algorithms over read-only instances.

Instances (graphs, digraphs, bounded-size set families) are immutable
and metered; algorithms charge every word of auxiliary state to a
workspace meter and reach deleted-structure views through layered
deletion oracles instead of materializing them.
"""

from .dominating import (
    c4free_ds_approx,
    c4free_ds_bounded_k,
    dgn_dom_set,
    dgn_rounds,
    regular_ds_derand,
)
from .errors import (
    DomainError,
    LedgerError,
    ParseError,
    RefusalError,
    RoundLimitError,
)
from .exact import ProblemKind, StructureKind, exact_opt, validate
from .hashing import HashFamily, avg_degree_is, cw_family
from .instances import (
    DigraphInstance,
    GraphInstance,
    SetFamilyInstance,
    load_digraph,
    load_family,
    load_graph,
    serialize_digraph,
    serialize_family,
    serialize_graph,
)
from .kernels import buss_vc_kernel, fk_hs_kernel, kernel_family, retention_scan
from .layered import bd_maximal_is, bd_vc_2approx, bounded_mult_hs
from .layers import (
    LayeredFamilyView,
    LayeredGraphView,
    StagePredicate,
    enumerate_stage,
)
from .meter import NULL_METER, MeterSnapshot, WorkspaceMeter, with_meter
from .staggered import (
    del_pi_approx,
    forbidden_family,
    hs_bounded_k,
    hs_eps_approx,
    hs_sqrt_approx,
)
from .treefunc import (
    functional_max_is,
    functional_min_vc,
    tree_max_is,
    tree_min_vc,
)

__version__ = "0.1.0"

__all__ = [
    "DigraphInstance",
    "DomainError",
    "GraphInstance",
    "HashFamily",
    "LayeredFamilyView",
    "LayeredGraphView",
    "LedgerError",
    "MeterSnapshot",
    "NULL_METER",
    "ParseError",
    "ProblemKind",
    "RefusalError",
    "RoundLimitError",
    "SetFamilyInstance",
    "StagePredicate",
    "StructureKind",
    "WorkspaceMeter",
    "avg_degree_is",
    "bd_maximal_is",
    "bd_vc_2approx",
    "bounded_mult_hs",
    "buss_vc_kernel",
    "c4free_ds_approx",
    "c4free_ds_bounded_k",
    "cw_family",
    "del_pi_approx",
    "dgn_dom_set",
    "dgn_rounds",
    "enumerate_stage",
    "exact_opt",
    "fk_hs_kernel",
    "forbidden_family",
    "functional_max_is",
    "functional_min_vc",
    "hs_bounded_k",
    "hs_eps_approx",
    "hs_sqrt_approx",
    "kernel_family",
    "load_digraph",
    "load_family",
    "load_graph",
    "regular_ds_derand",
    "retention_scan",
    "serialize_digraph",
    "serialize_family",
    "serialize_graph",
    "tree_max_is",
    "tree_min_vc",
    "validate",
    "with_meter",
]
