"""Edge-deletion solvers for component-capped graphs.

Thin re-export of the compiled core. The interesting entry points are
``solve_vc``, ``branch_cap``, ``brute_force_min``, ``kernelize``, the two
instance generators ``gen_mmo``/``gen_hs``, and the graph text/JSON codecs.
"""

from edgedel._core import (  # noqa: F401
    ForbiddenFamily,
    Graph,
    GuardError,
    HsReduction,
    KernelResult,
    MmoReduction,
    Solution,
    VcSolveReport,
    WeightedGraph,
    branch_cap,
    brute_force_min,
    connected_components,
    contains_cycle_exact,
    contains_star,
    contains_tree_family,
    enumerate_partitions,
    family_free,
    gen_hs,
    gen_mmo,
    hs_brute_force,
    hs_witness,
    kernelize,
    min_vertex_cover,
    mmo_brute_force,
    orientation_witness,
    read_graph,
    read_weighted,
    solve_vc,
    solve_vc_report,
    subgraph_isomorphic,
    twin_classes,
    verify,
    write_graph,
    write_weighted,
)

__all__ = [name for name in dir() if not name.startswith("_")]
