"""polyad: finite n-ary (polyadic) groups.

Constructions, exhaustive verification, Post covers, Gluskin retracts,
subgroup lattices, the invariance/center/normalizer families, axiom-system
equivalences, n-ary permutations, and a PGF-speaking CLI.
"""

from . import bingroup
from .core import (
    NaryGroup,
    NaryGroupoid,
    is_associative,
    is_group,
    nary_eval,
)
from .constructions import (
    catalog,
    coset_construction,
    derived,
    direct_product,
    gluskin,
    idempotent_from_splitting,
    named_example,
)
from .post_cover import build_cover, correspondent_group, embed_subgroup
from .retract import retract_at, verify_hossu
from .subgroups import (
    all_subgroups,
    check_normality,
    coset_decomposition,
    factor_group,
    generate,
    is_conjugate,
    is_semiconjugate,
)
from .structure import (
    abelianness,
    center_family,
    classify_cyclic,
    classify_solvability,
    idempotents,
    nadic_order,
    nadic_power,
    normalizer_family,
    units,
)

__all__ = [
    "NaryGroup", "NaryGroupoid", "is_associative", "is_group", "nary_eval",
    "bingroup", "catalog", "coset_construction", "derived", "direct_product",
    "gluskin", "idempotent_from_splitting", "named_example",
    "build_cover", "correspondent_group", "embed_subgroup",
    "retract_at", "verify_hossu",
    "all_subgroups", "check_normality", "coset_decomposition", "factor_group",
    "generate", "is_conjugate", "is_semiconjugate",
    "abelianness", "center_family", "classify_cyclic", "classify_solvability",
    "idempotents", "nadic_order", "nadic_power", "normalizer_family", "units",
]

__version__ = "0.1.0"
