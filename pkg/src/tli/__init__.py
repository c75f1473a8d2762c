"""Invariants of links in thickened orientable surfaces from diagram data."""

from .diagram import (
    Crossing,
    DiagramError,
    SurfaceDiagram,
    load_diagram,
    parse_diagram,
)
from .groups import (
    Presentation,
    Word,
    dehn,
    derivative_map,
    integrate_walk,
    parse_presentation,
    parse_word,
    quotient_presentation,
    surface_relators,
    wirtinger,
)
from .fox import (
    GroupRingElement,
    all_to_minus_one,
    all_to_t,
    fox_derivative,
    jacobian,
    specialize_element,
    specialize_jacobian,
)
from .laurent import (
    LaurentMatrix,
    LaurentPolynomial,
    laurent_gcd,
    parse_poly,
)
from .snf import SmithNormalForm, smith_normal_form
from .coloring import (
    ColoringSystem,
    NotShadable,
    brute_force_colorings,
    coloring_group,
    coloring_system,
    expected_colorings,
    module_order,
)
from .tait import (
    LaplacianData,
    TaitGraph,
    dual_tait,
    laplacian,
    laplacian_group,
    laplacian_polynomial,
    substitute_basis,
    tait_graph,
    vertex_elimination_row,
)
from .moves import (
    InapplicableMove,
    MoveSite,
    apply_move,
    enumerate_sites,
    random_move_sequence,
)
from .invariants import invariant_block

__version__ = "0.1.0"
