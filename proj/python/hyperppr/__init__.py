from ._core import (
    ComputeError,
    Hypergraph,
    InputError,
    VertexSet,
    apply_laplacian,
    brute_force_conductance,
    global_clustering,
    load,
    local_clustering,
    measure,
    parse,
    planted,
    ppr,
    serialize,
    sweep,
)

__all__ = [
    "ComputeError",
    "Hypergraph",
    "InputError",
    "VertexSet",
    "apply_laplacian",
    "brute_force_conductance",
    "global_clustering",
    "load",
    "local_clustering",
    "measure",
    "parse",
    "planted",
    "ppr",
    "serialize",
    "sweep",
]
