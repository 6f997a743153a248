"""Fibration instances with cleavage, opcleavage, hom objects and verifiers."""

from .base import (
    BasePullback,
    FiberCoequalizer,
    FiberCoproduct,
    FiberPushout,
    Fibration,
    HomObject,
    OpcartData,
    TotalMor,
    VertMap,
)
from .checks import CheckResult, is_cartesian, is_opcartesian, verify_hom_universal
from .codomain import CodomainFibration
from .fam_cat import FamCatFibration, all_diagrams, corpus_categories
from .fam_set import FamObj, FamSetFibration
from .presheaf import PresheafCodomainFibration, elements_category
from .vertical import Square, VerticalArrowFibration

INSTANCE_KINDS = ("fam_set", "fam_cat", "codomain", "presheaf_codomain")


def make_instance(kind: str, **kwargs) -> Fibration:
    if kind == "fam_set":
        return FamSetFibration()
    if kind == "fam_cat":
        return FamCatFibration()
    if kind == "codomain":
        return CodomainFibration()
    if kind == "presheaf_codomain":
        return PresheafCodomainFibration(kwargs["shape"])
    raise ValueError(f"unknown fibration kind: {kind}")


def vertical_arrow_fib(fib: Fibration) -> VerticalArrowFibration:
    return VerticalArrowFibration(fib)
