"""Planar SAT reductions to nonseparating cycle, path and tree-partition problems."""

from .embed import check_planar_embedding, dual, find_planar_embedding
from .gadgets import (
    backward_witness,
    forward_witness_cycle,
    forward_witness_partition,
    reduce_to_cycle_packing,
    reduce_to_path_packing,
    reduce_to_tree_partition,
)
from .graph import Graph, VertexLabel, is_connected_after_removal
from .harness import CorpusSpec, fig2_fixture, generate_corpus, verify_reduction
from .sat import BudgetExceeded, PlanarCnf, brute_force_sat, normalize, parse_dimacs
from .solvers import (
    check_witness,
    find_acyclic_cut,
    find_acyclic_cut_bruteforce,
    find_nonseparating_cycle,
    find_nonseparating_st_path,
    find_tree_spanning_tree_partition,
)
from .witness import CycleWitness, PartitionWitness, PathWitness

__version__ = "0.1.0"
