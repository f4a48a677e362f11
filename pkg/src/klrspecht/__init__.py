"""Exact computations with KLR algebras, row permutation modules and their
Specht filtrations."""

from .cartan import (
    Adjacency,
    Multicharge,
    PositiveRoot,
    Quiver,
    adjacency,
    as_multicharge,
    cartan_entry,
    format_weight,
)
from .decomp import (
    DecompQuery,
    block_of,
    decomposition_number,
    is_kleshchev,
    scan_std_mu_unique,
    std_mu_set,
    unique_tableau,
    verify_decomposition_chain,
)
from .filtration import (
    FiltrationLayer,
    SpechtResolution,
    filtration_for,
    general_layers,
    hook_dim_identity,
    hook_filtration,
    hook_inequality,
    layers_from_json,
    layers_to_json,
    level_ell_combine,
    skew_chain,
    two_row_filtration,
    verify_filtration,
)
from .garnir import garnir_belt, garnir_datum, garnir_nodes, garnir_tableau, garnir_word
from .identities import REGISTRY, UsageError, verify_identity
from .klr import E, KLRAlgebra, KLRElement, Psi, Y
from .modules import (
    DEFAULT_CAP,
    CapExceeded,
    ModuleContext,
    check_defining_relations,
    eval_word,
    garnir_element,
    span,
    specht_quotient_dim,
)
from .partitions import (
    Multipartition,
    Node,
    count_std,
    dim_perm,
    dominates,
    multipartitions,
    partitions,
    residue_content,
)
from .tableaux import Tableau, enumerate_row_standard, enumerate_standard, initial, std_mu

__version__ = "0.1.0"
