"""Exact discrete curvature and topology of finite simple graphs.

Clique-complex invariants (f-vectors, Euler characteristic, Betti numbers,
Wu characteristic), Levitt curvature and Poincare-Hopf indices, and the
Shannon ring of graphs under disjoint union and strong product, where
curvature and indices multiply: ``K_{G*H}(x, y) = K_G(x) K_H(y)``.
"""

from .curvature import (
    curvature,
    curvatures,
    cylinder_decomposition_check,
    gauss_bonnet_report,
    sphere_join_homotopy_check,
    verify_curvature_product,
)
from .errors import (
    BudgetExceeded,
    ColoringError,
    InvalidGraphError,
    NotAnEndomorphism,
    ShannonError,
    TensorCollisionError,
    UnknownVertexError,
)
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    octahedron,
    path_graph,
    random_graph,
    star_graph,
    strong_product,
    unit_ball,
    unit_sphere,
    zykov_join,
)
from .homology import (
    GraphEndomorphism,
    betti,
    chain_complex,
    euler_poincare_check,
    fixed_simplex_index_sum,
    homological_lefschetz_number,
    lefschetz_number,
    poincare_polynomial,
    verify_kunneth,
    verify_lefschetz_product,
)
from .morse import (
    index_expectation,
    index_expectations,
    ph_index,
    ph_indices,
    ph_report,
    random_coloring,
    sublevel_sphere,
    tensor_function,
    verify_index_product,
)
from .ring import RingElement, extended_invariant, ring_add, ring_mul
from .simplicial import (
    enumerate_cliques,
    euler_characteristic,
    f_vector,
    generating_function,
    generating_function_recursive,
)
from .wu import wu_characteristic, wu_curvature, wu_curvatures, wu_product_survey

__version__ = "0.1.0"
