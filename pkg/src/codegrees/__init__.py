"""Exact character tables, codegrees, codegree prime graphs, and
Frobenius-structure classification for finite permutation groups."""

from .chartable import (
    CharacterTable,
    character_kernel,
    character_table,
    inertia_group,
)
from .classify import Certificate, classify, is_star_group
from .codegree import (
    CodegreeReport,
    PrimeGraph,
    cod_relative,
    cod_set,
    codegree,
    codegree_report,
    p_part,
    prime_graph,
    prime_set,
)
from .constructions import (
    GroupSpec,
    build_from_spec,
    cyclic_group,
    default_manifest,
    dihedral_group,
    direct_product,
    generalized_quaternion_group,
    group_from_file,
    parse_spec_line,
    read_manifest,
    symmetric_group,
    alternating_group,
    cpk_q8_group,
    vector_semidirect,
)
from .cyclotomic import CyclotomicInt
from .groups import (
    ConjClass,
    GroupHandle,
    SubgroupHandle,
    build_group,
    centralizer,
    count_sylow,
    derived_subgroup,
    normal_subgroups,
    quotient_group,
    sylow_subgroup,
)
from .perm import Permutation
from .report import RunReport, run_group, run_suite
from .structure import (
    FrobeniusWitness,
    TwoFrobeniusWitness,
    frobenius_kernel,
    is_cyclic,
    is_elementary_abelian,
    is_nilpotent,
    is_quaternion8,
    is_solvable,
    two_frobenius,
)

__version__ = "0.1.0"
