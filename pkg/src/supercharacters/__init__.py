"""Exact supercharacter theories of C_p, C_2xC_2, C_pxC_2, (C_2)^3, and
C_pxC_2xC_2: construction, verification, duality, enumeration, counting,
and an independent brute-force cross-check."""

from .cyclotomic import CycInt, is_odd_prime
from .groups import (
    AutMap,
    Character,
    Element,
    GroupSpec,
    QuotientMap,
    Subgroup,
    SubgroupEmbedding,
    aut_generating_subset,
    close_aut_set,
)
from .theories import (
    Partition,
    Theory,
    TheoryRecord,
    Violation,
    canonical_key,
    dual,
    induced_character_partition,
    invariant_subgroups,
    maximal_theory,
    minimal_theory,
    refines,
    restriction,
    supercharacter_table,
    theory_from_classes,
    theory_from_json,
    theory_to_json,
    verify,
    verify_algebra,
)
from .constructions import (
    WedgeSpec,
    automorphism_witness,
    character_side_wedge,
    direct_decompositions,
    direct_product,
    from_automorphisms,
    wedge,
    wedge_decompositions,
)
from .enumeration import (
    CountMismatchError,
    CountReport,
    all_scts_c2_cubed,
    all_scts_cp,
    all_scts_cp_c2,
    all_scts_cp_c2_c2,
    all_scts_klein,
    all_theories,
    divisor_count,
    factor_pm1,
    predicted_counts,
)
from .bruteforce import BudgetExhaustedError, brute_force_count, brute_force_enumerate
from .lattice import lattice_dot, refinement_edges

__all__ = [
    "AutMap",
    "BudgetExhaustedError",
    "Character",
    "CountMismatchError",
    "CountReport",
    "CycInt",
    "Element",
    "GroupSpec",
    "Partition",
    "QuotientMap",
    "Subgroup",
    "SubgroupEmbedding",
    "Theory",
    "TheoryRecord",
    "Violation",
    "WedgeSpec",
    "all_scts_c2_cubed",
    "all_scts_cp",
    "all_scts_cp_c2",
    "all_scts_cp_c2_c2",
    "all_scts_klein",
    "all_theories",
    "aut_generating_subset",
    "automorphism_witness",
    "brute_force_count",
    "brute_force_enumerate",
    "canonical_key",
    "character_side_wedge",
    "close_aut_set",
    "direct_decompositions",
    "direct_product",
    "divisor_count",
    "dual",
    "factor_pm1",
    "from_automorphisms",
    "induced_character_partition",
    "invariant_subgroups",
    "is_odd_prime",
    "lattice_dot",
    "maximal_theory",
    "minimal_theory",
    "predicted_counts",
    "refinement_edges",
    "refines",
    "restriction",
    "supercharacter_table",
    "theory_from_classes",
    "theory_from_json",
    "theory_to_json",
    "verify",
    "verify_algebra",
    "wedge",
    "wedge_decompositions",
]
