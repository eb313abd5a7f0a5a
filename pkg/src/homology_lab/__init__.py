"""Clique-complex homology, weighted Laplacians, spectral sequences, and
Hamiltonian-to-graph gadget reductions at desk scale."""

from .complexes import CliqueComplex, clique_complex, independence_complex, kunneth_embed
from .gadgets import (
    GadgetBlueprint,
    IntegerState,
    apply_f,
    basis_cycle,
    build_K,
    catalog,
    fill_cycle,
    gadget,
    glue,
)
from .graph import (
    WeightedGraph,
    bowtie,
    complement,
    graph_to_json,
    join,
    join_all,
    make_graph,
    octahedron,
    parse_graph,
    qubit_graph,
    thicken,
)
from .homology import (
    BettiTable,
    betti,
    betti_table,
    cycle_is_boundary,
    euler_characteristic,
    harmonic_basis,
    witten_index,
)
from .operators import (
    MonomialMatrix,
    boundary,
    coboundary,
    embedded_entry,
    laplacian,
    laplacian_entry,
    laplacian_parts,
)
from .reduction import (
    Hamiltonian,
    decide,
    pad,
    parse_hamiltonian,
    reduce_hamiltonian,
    schedule,
)
from .specseq import filtration, forman_compare, page_dims, stabilized_dims
from .spectra import lambda_min, pairing_check, spectrum, sweep

__version__ = "0.1.0"
