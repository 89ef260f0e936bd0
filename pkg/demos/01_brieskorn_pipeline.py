"""From a Brieskorn sphere to its Y-basis class, step by step.

Walks the full pipeline for Sigma(5,8,13): build the negative-definite
plumbing tree, run the computation-sequence function tau, extract the
graded-root profile, reduce it to its monotone subroot, and decompose the
subroot in the Y-basis.
"""

from hfi.brieskorn import (BrieskornParams, brieskorn_root, seifert_plumbing,
                           tau_sequence)
from hfi.cterms import correction_terms
from hfi.localclass import d_invariant, mu_bar
from hfi.monotone import decompose, monotone_subroot
from hfi.plumbing import graph_to_text, is_negative_definite, k_squared

params = BrieskornParams(5, 8, 13)

# Step 1: the star-shaped plumbing tree.  One central vertex, one arm per
# singular fiber, weights from negative continued fractions.
graph, center = seifert_plumbing(params)
print("plumbing tree:")
print(graph_to_text(graph))
print("negative definite:", is_negative_definite(graph))
print("K^2 + s =", k_squared(graph) + graph.n)

# Step 2: the tau sequence.  tau(v) is the Euler characteristic of the v-th
# cycle in the generalized Laufer computation sequence; its local minima and
# the maxima between them are the combinatorial content of the graded root.
taus = tau_sequence(graph, center, 40)
print("\ntau(0..40):", taus)

# Step 3: the graded-root profile.  tau value t sits at grading
# -2t + (K^2 + s)/4; leaves are the minima, angles the in-between maxima.
profile = brieskorn_root(params)
print("\nleaves:", profile.leaves)
print("angles:", profile.angles)

# Step 4: monotone subroot and Y-basis class.
root = monotone_subroot(profile)
cls = decompose(root)
print("\nmonotone subroot:", root)
print("class:           ", cls)
print("d, d_bar, d_under:", correction_terms(cls))
print("mu_bar:          ", mu_bar(cls))
assert d_invariant(cls) == 4
