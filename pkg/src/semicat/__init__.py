"""Finite categories, semifunctors, seminatural transformations and
semiadjunctions, with exhaustive and constraint-search decision procedures
for separability, natural semifullness and semiseparability."""

from .coident import coidentifier, coidentifier_semiadjunction
from .completion import (
    complete_semifunctor,
    complete_transformation,
    idempotent_completion,
    iota,
    is_idempotent_complete,
    split_idempotent,
    upsilon,
)
from .errors import *  # noqa: F401,F403
from .kernel import (
    FinCategory,
    FinSetObject,
    Morphism,
    full_finset_subcategory,
    hom_set,
    monoid_category,
    opposite,
    product_category,
    terminal_category,
    validate_category,
)
from .morphprop import (
    cc_semi_isomorphism,
    cc_semisplit_epi,
    cc_semisplit_mono,
    fc_semisplit_epi_witness,
    fc_semisplit_mono_witness,
    is_fc_semi_epi,
    is_fc_semi_mono,
)
from .props import (
    PSolution,
    Verdict,
    associated_idempotent,
    is_faithful,
    is_full,
    is_naturally_semifull,
    is_semifull,
    is_semifully_faithful,
    is_semiseparable,
    is_separable,
    maschke_transfer,
    property_report,
    solve_P,
    verify_P,
)
from .semiadj import (
    Semiadjunction,
    char_unit_counit,
    compose_semiadjunctions,
    idempotent_from_self_semiadjoint,
    identity_semiadjunction,
    promote_left_semiadjoint,
    promote_right_semiadjoint,
    rafael,
    right_adjoints_semiiso,
    self_semiadjunction,
    sigma,
    tau,
    triple_transfer,
    validate_semiadjunction,
)
from .semifunctor import (
    IdemNatTransf,
    Semifunctor,
    canonical_E,
    compose_semifunctors,
    constant_semifunctor,
    idem_nat,
    identity_semifunctor,
    image_identities,
    is_functor,
    validate_semifunctor,
)
from .transform import (
    Transformation,
    enumerate_seminatural,
    find_semi_inverse,
    is_natural,
    is_seminatural,
    natural_semisplit_epi_witness,
    natural_semisplit_mono_witness,
    vertical_compose,
    whisker_left,
    whisker_right,
)

__version__ = "0.1.0"
