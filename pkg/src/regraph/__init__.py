"""Exact Castelnuovo-Mumford regularity of graph edge ideals.

Core objects: bit-set graphs on at most 64 vertices, independence-complex
homology over prime fields, the subset-sweep regularity certificate, prime
decompositions, and the rewriting operations (Lozin transforms, subdivisions,
contractions, true-pair moves) whose exact effect on the regularity the test
harnesses verify.
"""

from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_key
from .errors import CapacityError, GraphInputError, ResourceError
from .graph import Graph, bits, mask_of
from .homology import (GF2, GF3, HomologyProfile, PrimeField, RankedComplex,
                       independence_complex, is_isolating_edge,
                       isolating_edge_toggle, reduce_complex, reduced_homology)
from .invariants import (CochordResult, WeightedPattern, cochordal_cover_number,
                         generalized_im, induced_matching_number, matching_number,
                         privacy_degree)
from .regularity import (BettiTable, RegularityCertificate, betti_table,
                         is_prime_graph, is_prime_vertex, mv_dhs_check, reg,
                         regularity)
from .decomposition import (Decomposition, ReductionResult, max_factorization,
                            prime_decompositions, prime_factorization_check,
                            reduction_algorithm)
from .transforms import (LozinSpec, MateMove, MateSearchResult, MateTrace, Pairing,
                         construct_reg_im, contract_edge, degree_reductions,
                         double_all, double_subdivision, fake_contract, g_contract,
                         g_expand, g_pairs, is_g_pair, lozin_transform,
                         mate_search, replay_trace, subdivide_edge, t_contract,
                         t_expand, t_pairs, triple_subdivision, vim_lower_bound)
from .formats import (edge_list_decode, edge_list_encode, graph6_decode,
                      graph6_encode, parse_graph)
from .enumeration import (all_labeled_graphs, enumerate_connected_graphs,
                          nonisomorphic_graphs, random_corpus, random_graph)

__version__ = "0.1.0"
