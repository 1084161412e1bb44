"""Serial coalgebra workbench: valued quivers, localization, comodules and AR quivers."""

from .quiver import (
    ArrowKey,
    FamilyDecl,
    ValuedArrow,
    ValuedQuiver,
    connected_components,
    cycle_census,
    emit_dot,
    emit_dsl,
    opposite,
    parse_quiver,
    reachability,
)
from .classify import (
    classify,
    eg_classify,
    is_hom_computable_serial,
    is_left_serial,
    is_representation_directed_serial,
    is_right_serial,
    right_serial_shape_report,
    serial_shape,
)
from .localize import VertexSubset, check_serial_local_global, localize_colocal, localize_quiver, restrict_comodule
from .comodule import (
    Morphism,
    Representation,
    direct_sum,
    enumerate_subcomodules,
    ext1_dim,
    gabriel_quiver,
    hom_space,
    injective_truncation,
    is_indecomposable,
    is_isomorphic,
    is_right_serial_comodule_level,
    is_uniserial,
    loewy_series,
    quotient,
    simple,
    socle,
    sub_from_vectors,
)
from .arquiver import (
    ARNode,
    ar_sequence,
    brute_force_indecomposables,
    build_ar_quiver,
    classify_indecomposables,
    tau_orbit_report,
    verify_almost_split,
)

__version__ = "0.1.0"
