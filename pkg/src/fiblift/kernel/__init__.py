"""Finite sets, categories, and every (co)limit the fibration instances need."""

from .finset import (
    EnumerationBudgetExceeded,
    FinMap,
    FinSet,
    IndexedSet,
    StructureError,
    all_maps,
    constant,
    count_maps,
    empty_map,
    identity,
    terminal_map,
)
from .fincat import (
    Diagram,
    FinCat,
    FunctorData,
    NatTransData,
    all_functors,
    all_nat_trans,
    arrow_cat,
    constant_diagram,
    discrete_cat,
    empty_cat,
    identity_functor,
    identity_nat,
    functor_to_terminal,
    parallel_pair_cat,
    span_cat,
    terminal_cat,
)
from .limits import (
    VerifyOutcome,
    coequalizer,
    coproduct,
    iso_between,
    iso_over,
    pair_into_product,
    pair_into_pullback,
    product,
    pullback,
    pushout,
    verify_pullback,
    verify_pushout,
)
from .exponentials import (
    dependent_product,
    presheaf_exponential,
    slice_exponential,
    slice_hom_count,
    verify_dependent_product_adjunction,
)
from .kan import (
    colimit,
    comma_category,
    diagram_comma,
    functor_comma_to_object,
    lan_induce,
    left_kan,
)

__all__ = [name for name in dir() if not name.startswith("_")]
