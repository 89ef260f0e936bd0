"""Brieskorn spheres: Seifert plumbing graphs, tau sequences, graded roots.

Sigma(a1, a2, a3) bounds a star-shaped negative-definite plumbing with
central weight -b0 and one arm per fiber carrying the negative continued
fraction of a_i/omega_i, where omega_i inverts -(alpha/a_i) mod a_i
(alpha = a1 a2 a3) and b0 = (1 + sum omega_i alpha/a_i)/alpha.

The graded root comes from the computation-sequence function tau: starting
from the zero cycle, repeatedly add the central vertex and take the Laufer
closure over the other vertices; tau(v) is the Euler characteristic chi of
the v-th cycle.  Local minima of tau are the leaves, the maxima between them
the angles, and tau-value t sits at grading -2t - (K^2 + s)/4 in the
h-normalized convention (HF-minus gradings are 2 lower).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .localclass import LocalClass
from .monotone import MonotoneRoot, decompose, monotone_subroot
from .plumbing import PlumbingGraph, k_squared
from .roots import SymmetricRootProfile


@dataclass(frozen=True)
class BrieskornParams:
    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        a = (self.a1, self.a2, self.a3)
        if not (2 <= a[0] < a[1] < a[2]):
            raise ValueError("need 2 <= a1 < a2 < a3")
        if (math.gcd(a[0], a[1]) != 1 or math.gcd(a[0], a[2]) != 1
                or math.gcd(a[1], a[2]) != 1):
            raise ValueError("fiber multiplicities must be pairwise coprime")

    @property
    def tuple(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)


def negative_continued_fraction(p: int, q: int) -> list[int]:
    """p/q = x1 - 1/(x2 - 1/(...)) with all x_j >= 2 (0 < q < p)."""
    out = []
    while q > 0:
        x = -(-p // q)  # ceil
        out.append(x)
        p, q = q, x * q - p
    return out


def seifert_plumbing(b: BrieskornParams) -> tuple[PlumbingGraph, str]:
    """Negative-definite plumbing tree of Sigma(a1,a2,a3) and its central vertex."""
    a = b.tuple
    alpha = a[0] * a[1] * a[2]
    omegas = []
    for ai in a:
        m = (alpha // ai) % ai
        omegas.append((-pow(m, -1, ai)) % ai)
    num = 1 + sum(w * (alpha // ai) for w, ai in zip(omegas, a))
    if num % alpha:
        raise AssertionError("central weight is not integral; bad Seifert data")
    b0 = num // alpha
    verts: list[tuple[str, int]] = [("c", -b0)]
    edges: list[tuple[str, str]] = []
    for arm, (ai, wi) in enumerate(zip(a, omegas), 1):
        prev = "c"
        for j, x in enumerate(negative_continued_fraction(ai, wi), 1):
            vid = f"a{arm}.{j}"
            verts.append((vid, -x))
            edges.append((prev, vid))
            prev = vid
    return PlumbingGraph(tuple(verts), tuple(edges)), "c"


def tau_sequence(g: PlumbingGraph, center: str, steps: int) -> list[int]:
    """tau(0..steps) along the generalized Laufer computation sequence.

    x(0) = 0 and x(v+1) is the Laufer closure of x(v) + E_center: while some
    non-central vertex pairs positively with the cycle, add it.  Each single
    addition of E_v changes chi by 1 - <x, E_v>, so chi is maintained
    incrementally with exact integers.
    """
    idx = {v: i for i, (v, _) in enumerate(g.vertices)}
    c = idx[center]
    weights = g.weights()
    adj = g.adjacency()
    n = g.n
    pairing = [0] * n  # <x, E_v>
    chi_val = 0
    taus = [0]
    stack: list[int] = []
    for _ in range(steps):
        # add E_center
        chi_val += 1 - pairing[c]
        pairing[c] += weights[c]
        for w in adj[c]:
            pairing[w] += 1
            if w != c and pairing[w] > 0:
                stack.append(w)
        while stack:
            v = stack.pop()
            if v == c or pairing[v] <= 0:
                continue
            chi_val += 1 - pairing[v]
            pairing[v] += weights[v]
            for w in adj[v]:
                pairing[w] += 1
                if w != c and pairing[w] > 0:
                    stack.append(w)
            if pairing[v] > 0:
                stack.append(v)
        taus.append(chi_val)
    return taus


def _compress_to_profile(taus: list[int]) -> tuple[list[int], list[int]]:
    """Leaf/angle tau values: local minima and the maxima between them."""
    comp: list[int] = []
    for t in taus:
        if not comp or comp[-1] != t:
            comp.append(t)
    last = len(comp) - 1
    minima = [i for i, t in enumerate(comp)
              if (i == 0 or comp[i - 1] > t) and (i == last or comp[i + 1] > t)]
    leaves = [comp[i] for i in minima]
    # exactly one local maximum sits between consecutive minima
    angles = [max(comp[minima[j]:minima[j + 1] + 1])
              for j in range(len(minima) - 1)]
    return leaves, angles


def brieskorn_root(b: BrieskornParams,
                   max_steps: int | None = None) -> SymmetricRootProfile:
    """Graded-root profile of Sigma(a1,a2,a3), h-normalized gradings.

    The tau sequence is run until the central multiplicity passes 2*alpha
    (plus margin) and the tail is strictly increasing well above the global
    minimum, so the finite part of the root is complete.
    """
    g, center = seifert_plumbing(b)
    alpha = b.a1 * b.a2 * b.a3
    steps = max_steps or (2 * alpha + 16)
    taus = tau_sequence(g, center, steps)
    tail = taus[-33:]
    if not (all(tail[i] < tail[i + 1] for i in range(len(tail) - 1))
            and taus[-1] >= min(taus) + 8):
        raise RuntimeError("tau sequence tail not clearly increasing; "
                           "raise max_steps")
    leaf_taus, angle_taus = _compress_to_profile(taus)
    offset = (k_squared(g) + g.n) / 4
    leaves = [-2 * t + offset for t in leaf_taus]
    angles = [-2 * t + offset for t in angle_taus]
    return SymmetricRootProfile(tuple(leaves), tuple(angles))


def brieskorn_monotone(b: BrieskornParams) -> MonotoneRoot:
    return monotone_subroot(brieskorn_root(b))


def brieskorn_class(b: BrieskornParams) -> tuple[SymmetricRootProfile, LocalClass]:
    """(graded-root profile, local class) of a Brieskorn sphere."""
    profile = brieskorn_root(b)
    return profile, decompose(monotone_subroot(profile))
