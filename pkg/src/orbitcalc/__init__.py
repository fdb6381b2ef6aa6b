"""Nilpotent orbit calculus for the classical series.

Orbits of symmetric and skew forms are handled through their column
partitions; real forms refine them to signed diagrams with component
groups and admissible data, and descent chains turn those into
representation counts.  An exact matrix layer double-checks the
combinatorics on explicit models.
"""

from .partitions import (
    DomainError,
    column_descent,
    dominates,
    eps_collapse,
    eps_sign,
    in_nil_p,
    is_type_partition,
    nil_p_violation,
    transpose,
    type_collapse,
)
from .orbits import (
    ComplexOrbit,
    DualityResult,
    InfinitesimalCharacter,
    bv_dual,
    enumerate_nil_p,
    enumerate_orbits,
    gen_descent_complex,
    good_for_gen_descent,
    induce_complex,
    infinitesimal_character,
    orbit_dimension,
    theta_lift_complex,
)
from .realforms import (
    KOrbit,
    KINDS,
    RealForm,
    Signature,
    SignedDiagram,
    SpaceKind,
    descended_form,
    enumerate_k_orbits,
    gen_descent_signed,
    induce_real,
    is_realizable,
    is_signed_diagram,
    multiplicity_signatures,
    parse_diagram,
    parse_form,
    signed_descent,
)
from .isotropy import (
    AdmissibleDatum,
    ComponentGroup,
    admissible_data,
    alpha_pullback,
    characters_of_form,
    component_group,
    genuine_parity,
    levi_factors,
    lift_admissible,
)
from .unipotent import (
    ClassificationRow,
    DescentChain,
    OrbitCount,
    build_descent_chain,
    chain_in_convergent_range,
    classification_csv,
    classify,
    count_unipotent,
    descent_chain_steps,
    dim_circ,
    enumerate_eta,
)
from .oracle import (
    gen_descent_sample,
    jordan_model,
    lift_closure_sample,
    partition_from_matrix,
    reachable_diagrams,
    signed_diagram_from_matrix,
    signed_jordan_model,
    split_gram,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
