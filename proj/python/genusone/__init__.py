"""Pointed genus-one maps to projective space as decorated dual graphs."""

from ._core import (  # noqa: F401
    ComponentDescriptor,
    DualGraph,
    Edge,
    EllipticPoint,
    ReductionTrace,
    RewriteStep,
    SchemaError,
    StabilityInterval,
    StabilityParams,
    StabilityResult,
    TailSpec,
    ValidationReport,
    Vertex,
    arithmetic_genus,
    augment_with_hyperplane_marks,
    blow_up_core_marks,
    canonical_degree,
    component_dimension,
    contract_core,
    core,
    core_kind,
    distinguished_points,
    enumerate_components,
    fundamental_decomposition,
    generic_element_graph,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    irreducibility_threshold,
    is_canonically_polarized,
    is_connected,
    is_m_stable_curve,
    is_m_stable_map,
    is_smoothable,
    is_smoothable_with_tangents,
    level,
    polarization_power_bound,
    reduce,
    smoothness_certificate,
    stabilize,
    stability_interval,
    trace_to_json,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
