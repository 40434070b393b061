"""nilcoh: nonabelian first cohomology of finite nilpotent group actions.

Finite groups live as dense multiplication tables; cohomology sets are
enumerated exactly and checked against brute-force oracles; the conjugacy and
fixed-point verifiers report hypotheses and conclusions separately.
"""

from .actions import (
    ActionOnGroup,
    GSet,
    SemidirectProduct,
    action_from_generator_images,
    conjugation_action,
    coset_gset,
    fixed_points,
    is_transitive,
    semidirect,
    stabilizer,
    trivial_action,
)
from .cohomology import (
    AbelianH1,
    ClassMap,
    Cocycle,
    CohomologySet,
    DecompositionReport,
    abelian_h1_group,
    cocycle_to_complement,
    cocycles,
    cocycles_bruteforce,
    cohomologous,
    complement_to_cocycle,
    conjugate_cocycle,
    decomposition_map,
    eq3_check,
    extend_from_sylow,
    fixed_classes,
    h1,
    include_coefficients,
    invariant_classes,
    primary_part,
    project_to_primary,
    res_h1,
    restrict,
    shared_primes,
    twist,
)
from .groups import (
    Group,
    GroupHom,
    Subgroup,
    are_conjugate_subgroups,
    center,
    centralizer,
    full_subgroup,
    group_from_permutations,
    group_from_table,
    normalizer,
    quotient,
    subgroup_generated,
    trivial_subgroup,
)
from .structure import (
    NilpotentDecomposition,
    complements,
    enumerate_subgroups_of_order,
    hall_pprime,
    is_nilpotent,
    is_nilpotent_subgroup,
    locally_conjugate,
    lower_central_series,
    nilpotent_decomposition,
    prime_factors,
    subgroup_conjugacy_classes,
    sylow_subgroup,
)
from .theorems import (
    VerificationReport,
    find_conjugator,
    intersection_lemma_check,
    verify_lemma1,
    verify_prop2,
    verify_prop3,
    verify_prop5,
    verify_thm4,
)

__version__ = "0.1.0"
