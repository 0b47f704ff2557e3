from .constructions import (
    ConstructionParams,
    Feasibility,
    LabeledConstruction,
    build_H,
    build_radially_maximal,
    build_self_centered,
    classify,
    extend,
    extend_many,
    lemma1_precondition,
    x_label,
)
