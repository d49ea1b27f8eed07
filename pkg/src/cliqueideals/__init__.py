"""t-clique and t-independence ideals of finite simple graphs.

Constructs K_t(G) and J_t(G), computes their graded Betti numbers and
homological invariants both from structural recursions (linear quotients,
vertex splittings, explicit shellings) and from a brute-force Hochster
oracle, and cross-checks the two.
"""

from cliqueideals.errors import (
    CilError,
    DegenerateError,
    NotChordalError,
    SizeGuardError,
    UndefinedError,
)
from cliqueideals.graphs import (
    Graph,
    build_graph,
    closed_neighborhood,
    complement,
    complete,
    cycle,
    enumerate_cliques,
    enumerate_independent_sets,
    induced,
    is_simplicial_vertex,
    path,
    perfect_elimination_order,
    random_chordal,
    verify_cochordal_cover,
)
from cliqueideals.ideals import (
    MonomialIdeal,
    alexander_dual,
    clique_ideal,
    ideal_sum,
    independence_ideal,
    minimalize,
)
from cliqueideals.simplicial import (
    SimplicialComplex,
    deletion,
    dimension_and_purity,
    dual_complex,
    link,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from cliqueideals.homology import (
    GF2,
    QQ,
    BettiTable,
    FieldSpec,
    has_linear_resolution,
    hochster_betti,
    reduced_homology_ranks,
    reg_pd_from_table,
    reisner_cm_check,
)
from cliqueideals.resolutions import (
    LinearQuotientOrder,
    VertexSplitTree,
    betti_from_linear_quotients,
    chordal_vertex_split,
    closed_form_invariants,
    cycle_decomposition,
    find_linear_quotients,
    path_betti_recursion,
    verify_betti_splitting,
)
from cliqueideals.shellings import (
    cycle_shelling,
    find_shelling,
    is_vertex_decomposable,
    path_shelling,
    shelling_to_linear_quotients,
    verify_shelling,
)

__version__ = "0.1.0"
