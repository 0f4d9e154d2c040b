# Import common utilities for easier access
from .errors import (
    WordRepError, ValidationError, GraphError, UnknownVertexError, GraphFormatError, WordError,
    StatementError, OrientationError, CyclicOrientationError, ScaleGuardError, UsageError, CertificateError,
)
from .validation import InputValidator, validate_label, check_scale
from .config import Settings, load_settings, guard_override_enabled

# Import graph and word utilities
from .graph_core import (
    Graph, Embedding, EmbeddingMode, build_graph, empty_graph, cycle, path, complete, complete_bipartite,
    k4_prime, k4_prime_edge_names, w5_prime, w5_prime_edge_names, graph_a, relabel, mycielski,
    line_graph, iterated_line_graph, induced_subgraph, degree_sequence, triangles, is_connected,
    small_graphs, find_embedding, embedding_holds, are_isomorphic,
)
from .words import (
    Word, WordView, Statement, Quantifier, parse_word, format_word, restrict, alternates,
    represented_graph, represents, is_k_uniform, cyclic_shift, reverse, exists, forall,
    parse_statement, eval_statement, find_uniform_word, random_uniform_word, random_word,
)
from .semitransitive import (
    Orientation, PartialOrientation, ShortcutWitness, Certificate, ExhaustionRecord, Verdict,
    orient, partial_orientation, topological_order, is_acyclic, find_shortcut, find_shortcut_bruteforce,
    is_semi_transitive, restrict_orientation, reverse_orientation, is_transitive_tournament,
    orientation_from_word, find_semi_transitive, decide_word_representable, enumerate_completions,
    find_line_graph_obstruction, find_mycielski_line_obstruction, reachability_matrix, directed_path,
)
from .mu_line import (
    EdgeLabel, LevelSets, RemarkReport, labeled_mu_cycle, line_of_mu, b_part, c_part, rook_orientation,
    orientation_d, level_sets, expected_level_sets, clique_witnesses, check_remarks,
    restricted_to_b, restricted_to_c, reference_arcs_n2,
)
from .formats import (
    parse_edge_list, dump_edge_list, parse_graph_json, dump_graph_json, load_graph, save_graph,
    dump_orientation, parse_orientation, certificate_to_json, graph_to_dot, orientation_to_dot,
)
from .claims import ClaimResult, SCOPES, claims_for_scope, run_claim

# Create a simple logger function
import logging

def get_logger(name):
    """Get a configured logger with the given name"""
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.setLevel(logging.INFO)
    return logger
