"""Desk-scale CCHM ingredients over a truncated cube category."""

from .classifiers import (
    Classifier,
    classifier_presheaf,
    extensionality_check,
    face_classifier,
    interval_classifier,
    quotient_matches_syntactic,
    trivial_classifier,
)
from .cubes import (
    TRUNCATION_BANNER,
    CubeCatTrunc,
    check_kleisli_laws,
    cube_cat_as_fincat,
    cube_cat_trunc,
)
from .demorgan import (
    DMAlg,
    check_de_morgan_laws,
    dm_free,
    dm_free_size_oracle,
    substitute,
)
from .faces import (
    FaceLat,
    check_lattice_laws,
    dm_to_face,
    face_lattice,
    face_lattice_size_oracle,
    face_substitute,
)
from .kan import (
    KanReport,
    KanSetup,
    composition_structures,
    kan_setup,
    kan_structures,
    presheaf_map_as_vertical,
)
