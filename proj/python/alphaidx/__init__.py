"""Spectral radius of A_alpha(G) = alpha D + (1 - alpha) A for small graphs."""

import json as _json

from . import _core
from ._core import (
    ConvergenceError,
    Graph,
    HypothesisError,
    ParseError,
    alpha_index,
    attach_paths_same_root,
    attach_paths_two_roots,
    bug,
    clique_number,
    complete,
    complete_minus_edge,
    cycle,
    diameter,
    enumerate_connected,
    enumerate_trees,
    gamma,
    is_connected,
    is_isomorphic,
    path,
    path_kite,
    perron,
    perron_oracle,
    rho_complete_minus_edge,
    star,
)


def verify_diameter_theorem(n, k, alpha, eps=1e-9):
    return _json.loads(_core.verify_diameter_theorem(n, k, alpha, eps))


def verify_clique_theorem(n, omega, alpha, eps=1e-9):
    return _json.loads(_core.verify_clique_theorem(n, omega, alpha, eps))


def verify_path_minimum(n, alpha):
    return _json.loads(_core.verify_path_minimum(n, alpha))


def scan_bug_balance(k, s, alpha):
    steps, best = _core.scan_bug_balance(k, s, alpha)
    return _json.loads(steps), _json.loads(best)


def check_decay(graph, path_vertices, alpha):
    return [_json.loads(r) for r in _core.check_decay(graph, list(path_vertices), alpha)]


def scan_conjecture1(graph, u, budget, alphas):
    return [_json.loads(r) for r in _core.scan_conjecture1(graph, u, budget, list(alphas))]


def scan_conjecture2(graph, u, v, budget, alphas):
    return [_json.loads(r) for r in _core.scan_conjecture2(graph, u, v, budget, list(alphas))]


def search_question1_reversal(max_tree_order, alphas, max_budget=8):
    return [_json.loads(r) for r in _core.search_question1_reversal(max_tree_order, list(alphas), max_budget)]
