"""osgkit: exact analysis of finite ordered semigroups."""

from .core import (
    Diagnostic,
    ElementSet,
    OrderedSemigroup,
    StructureError,
    Verdict,
    diagnose,
    downward_closure,
    dual,
    from_order_pairs,
    induced,
    parse,
    set_product,
    to_osg,
    validate,
)
from .green import (
    EquivalenceRelation,
    green_class,
    green_relation,
    is_ideal,
    minimal_ideal_oracle,
    principal_ideal,
)
from .regularity import inverses, is_regular, ordered_idempotents, regularity_variant
from .classify import (
    CLASS_KEYS,
    ConditionPair,
    classify,
    is_clifford,
    is_group_like,
    is_right_inverse,
    is_simple,
    is_union_of_group_like,
)
from .congruence import (
    congruence_closure,
    is_complete_semilattice_congruence,
    is_complete_semilattice_of,
    is_congruence,
    is_semilattice_congruence,
    least_complete_semilattice_congruence,
)
from .constructions import from_plain, is_right_inverse_plain, power_semigroup
from .enumeration import (
    canonical_key,
    compatible_orders,
    enumerate_structures,
    enumerate_tables,
    search,
)
from .verify import THEOREM_IDS, corpus_verify, theorem_suite

__version__ = "0.1.0"
