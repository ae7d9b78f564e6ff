"""Finite loops, their principal isotopes, and checks of inverse-property
claims across exhaustive enumerations of small loops."""

from .core import (
    FiniteLoop,
    Permutation,
    Quasigroup,
    compose,
    cyclic_group,
    dihedral_group,
    direct_product,
    from_table,
    inverse_maps,
    left_translation,
    loop_from_table,
    right_translation,
    symmetric_group_3,
)
from .enumeration import (
    EnumerationCursor,
    enumerate_loops,
    enumerate_loops_parallel,
    enumerate_up_to_isomorphism,
    random_loop,
)
from .errors import (
    DegreeMismatch,
    GenerationFailure,
    LatinViolation,
    LoopforgeError,
    NotALoop,
    NotAnIsotopism,
    NotCommuting,
    NotWeakInverse,
    OrderTooLarge,
    ShapeError,
    UnknownClaim,
)
from .formats import dumps_loop, loads_loop, read_loop, write_loop
from .isomorphy import are_isotopic, automorphisms, canonical_form, find_isomorphism
from .isotopy import (
    IsotopismTriple,
    TConditionReport,
    apply_isotopism,
    find_t_witnesses,
    is_autotopism,
    is_isotopism,
    principal_isotope,
    t_conditions,
    weak_t21,
)
from .properties import (
    PropertyReport,
    centrum,
    element_traits,
    has_aip,
    has_cip,
    has_ip,
    has_lip,
    has_rip,
    has_wip,
    m_inverse_check,
    nuclei,
    weak_inverse_permutations,
)

__version__ = "0.1.0"
