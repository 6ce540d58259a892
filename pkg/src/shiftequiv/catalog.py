"""Worked examples: the matrices and graphs of the graph-algebra examples
and counterexamples, with the vertex and edge names used in their figures.
"""

from __future__ import annotations

from shiftequiv.graphs import MultiDigraph
from shiftequiv.matrices import matrix

# Inflation example: E is v, w with loops a, c and b: v -> w.
EX_AE = matrix([[1, 1], [0, 1]])
EX_AF = matrix([[1, 1, 0], [0, 0, 1], [0, 0, 1]])
EX_R = matrix([[1, 1, 0], [0, 0, 1]])
EX_S = matrix([[1, 0], [0, 1], [0, 1]])
EX_ROWS = ("v", "w")
EX_COLS = ("x", "y", "z")

EX_E = MultiDigraph.build(EX_ROWS, [("a", "v", "v"), ("b", "v", "w"), ("c", "w", "w")])
EX_F = MultiDigraph.build(
    EX_COLS, [("d", "x", "x"), ("e", "x", "y"), ("f", "y", "z"), ("g", "z", "z")]
)
# Inflation graph G_{R,S} with the Greek edge labels of its figure.
EX_G = MultiDigraph.build(
    EX_ROWS + EX_COLS,
    [
        ("alpha", "x", "v"),
        ("beta", "v", "x"),
        ("gamma", "v", "y"),
        ("delta", "y", "w"),
        ("epsilon", "z", "w"),
        ("zeta", "w", "z"),
    ],
)
# s_a -> S_beta S_alpha etc.; t_d -> S_alpha S_beta etc.
EX_E_GENERATORS = {"a": ("beta", "alpha"), "b": ("gamma", "delta"), "c": ("zeta", "epsilon")}
EX_F_GENERATORS = {
    "d": ("alpha", "beta"),
    "e": ("alpha", "gamma"),
    "f": ("delta", "zeta"),
    "g": ("epsilon", "zeta"),
}

# Sink counterexample: E_1 is v <- w -> x, E_2 is y -> z.
SINK_E1 = MultiDigraph.build(("v", "w", "x"), [("e1", "w", "v"), ("e2", "w", "x")])
SINK_E2 = MultiDigraph.build(("y", "z"), [("f1", "y", "z")])
SINK_A1 = matrix([[0, 0, 0], [1, 0, 1], [0, 0, 0]])
SINK_A2 = matrix([[0, 1], [0, 0]])
SINK_R = matrix([[0, 0], [0, 1], [0, 0]])
SINK_S = matrix([[0, 1, 0], [1, 0, 1]])

# Toeplitz counterexample.
TOEP_AE = matrix([[2, 1], [0, 2]])
TOEP_AF = matrix([[2, 1, 0], [0, 0, 2], [0, 0, 2]])
TOEP_R = matrix([[2, 1, 0], [0, 0, 2]])
TOEP_S = matrix([[1, 0], [0, 1], [0, 1]])
TOEP_E = MultiDigraph.build(
    ("v", "w"),
    [("a1", "v", "v"), ("a2", "v", "v"), ("b", "v", "w"), ("c1", "w", "w"), ("c2", "w", "w")],
)
TOEP_F = MultiDigraph.build(
    ("x", "y", "z"),
    [
        ("d1", "x", "x"), ("d2", "x", "x"), ("e", "x", "y"),
        ("f1", "y", "z"), ("f2", "y", "z"),
        ("g1", "z", "z"), ("g2", "z", "z"),
    ],
)

# Proper saturated hereditary subsets listed for the outsplit graphs.
TOEP_E_TILDE_IDEALS = [
    set(), {"w'"}, {"w", "w'"}, {"v'"}, {"v'", "w'"}, {"v'", "w", "w'"},
]
TOEP_F_TILDE_IDEALS = [
    set(), {"z'"}, {"y'", "z'"}, {"y", "z", "z'"}, {"y", "y'", "z", "z'"},
    {"x'"}, {"x'", "z'"}, {"x'", "y'", "z'"}, {"x'", "y", "z", "z'"},
    {"x'", "y", "y'", "z", "z'"},
]
