"""Hyperbolicity of small-world and tree-like random graphs.

Seeded generators for grid small-world graphs and (ringed-)tree variants,
exact and sampled four-point delta, Rips slimness measurements, ringed-tree
canonical geodesics with a Poincare-disk embedding, and a sweep harness for
desk-scale scaling experiments.
"""

import os

# pick a warning-free threading layer before numba is first imported
os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")

__version__ = "0.1.0"

from .graph import (
    DEFAULT_MEMORY_CAP,
    DistanceMatrix,
    Graph,
    MemoryCapExceeded,
    all_pairs,
    bfs_distances,
    extract_geodesic,
    num_threads,
    read_edge_list,
    write_edge_list,
)
from .generators import (
    FAMILIES,
    F_KINDS,
    G_KINDS,
    GenSpec,
    gen_ksw,
    gen_rbt,
    gen_ringed_tree,
    gen_rrt,
    gen_rt_f,
    generate,
    genspec_from_text,
    genspec_to_text,
    grid_distance,
    grid_graph,
    grid_side,
    rt_vertex_count,
)
from .hyperbolicity import (
    DeltaReport,
    SlimnessReport,
    exact_delta,
    four_point_delta,
    rips_exhaustive,
    rips_lower_bound,
    sampled_delta,
    sampled_delta_bfs,
    triangle_slimness,
)
from .ringed import (
    addr_of,
    canonical_geodesic,
    id_of,
    lca_height,
    poincare_distance,
    poincare_embed,
    poincare_embed_table,
    ring_distance,
    verify_quasi_isometry,
    verify_structural_lemmas,
)
from .experiments import (
    CSV_COLUMNS,
    FitResult,
    SweepConfig,
    SweepRow,
    fit_scaling,
    max_long_range_span,
    run_sweep,
    sweep_config_from_text,
    sweep_config_to_text,
    sweep_csv_text,
    write_sweep_csv,
)
