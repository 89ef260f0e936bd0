"""Monotone and weakly monotone roots: the canonical local-equivalence forms.

A monotone root M(h_1, r_1; ...; h_n, r_n) has strictly decreasing leaf
gradings h_i, strictly increasing angle gradings r_i, and h_n >= r_n; the
weakly monotone variant allows equalities.  Each such root determines a
symmetric profile, and every symmetric profile reduces to a monotone subroot
that is locally equivalent to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .localclass import LocalClass
from .roots import SymmetricRootProfile, mirror_merge

Params = tuple[tuple[Fraction, Fraction], ...]


def _normalize_params(params) -> Params:
    out = tuple((Fraction(h), Fraction(r)) for h, r in params)
    if not out:
        raise ValueError("a root needs at least one (h, r) pair")
    base = out[0][0]
    for h, r in out:
        if (h - base) % 2 != 0 or (r - base) % 2 != 0:
            raise ValueError("all parameters must lie in one coset of 2Z")
    return out


@dataclass(frozen=True)
class WeaklyMonotoneRoot:
    params: Params

    def __post_init__(self):
        object.__setattr__(self, "params", _normalize_params(self.params))
        hs = [h for h, _ in self.params]
        rs = [r for _, r in self.params]
        if any(hs[i] < hs[i + 1] for i in range(len(hs) - 1)):
            raise ValueError("h parameters must be weakly decreasing")
        if any(rs[i] > rs[i + 1] for i in range(len(rs) - 1)):
            raise ValueError("r parameters must be weakly increasing")
        if hs[-1] < rs[-1]:
            raise ValueError("need h_n >= r_n")

    @property
    def type(self) -> int:
        return len(self.params)

    def __str__(self) -> str:
        inner = "; ".join(f"{h},{r}" for h, r in self.params)
        return f"M({inner})"


@dataclass(frozen=True)
class MonotoneRoot(WeaklyMonotoneRoot):
    def __post_init__(self):
        super().__post_init__()
        hs = [h for h, _ in self.params]
        rs = [r for _, r in self.params]
        if any(hs[i] <= hs[i + 1] for i in range(len(hs) - 1)):
            raise ValueError("h parameters must be strictly decreasing")
        if any(rs[i] >= rs[i + 1] for i in range(len(rs) - 1)):
            raise ValueError("r parameters must be strictly increasing")


def M(*pairs) -> MonotoneRoot:
    """Convenience constructor: M((4,0),(2,2)) or M(4,0, 2,2)."""
    if pairs and not isinstance(pairs[0], tuple):
        if len(pairs) % 2:
            raise ValueError("need an even number of scalars")
        pairs = tuple((pairs[i], pairs[i + 1]) for i in range(0, len(pairs), 2))
    return MonotoneRoot(tuple(pairs))


def delta_tilde(m: MonotoneRoot) -> Fraction:
    """h_1 - r_1 of a type-one (projective) root."""
    if m.type != 1:
        raise ValueError(f"delta-tilde is defined for type-one roots, got type {m.type}")
    return m.params[0][0] - m.params[0][1]


def to_profile(m: WeaklyMonotoneRoot) -> SymmetricRootProfile:
    """Symmetric profile of a (weakly) monotone root.

    Leaves (h_1..h_n, h_n..h_1) and angles (r_1..r_n, r_{n-1}..r_1); when
    h_n = r_n the two central leaves merge at their own grading and are
    collapsed into a single J-invariant leaf, dropping the central angle.
    """
    hs = [h for h, _ in m.params]
    rs = [r for _, r in m.params]
    n = m.type
    if hs[-1] == rs[-1]:
        leaves = hs + hs[-2::-1]
        angles = rs[:-1] + rs[-2::-1]
    else:
        leaves = hs + hs[::-1]
        angles = rs + rs[-2::-1]
    return SymmetricRootProfile(tuple(leaves), tuple(angles))


def monotone_subroot(p: SymmetricRootProfile) -> MonotoneRoot:
    """Extract the monotone subroot of a symmetric profile.

    Rule: over the left-half leaf indices i, form the pairs
    (h, c) = (leaf grading, mirror-merge grading) and keep the Pareto frontier
    (componentwise-maximal elements), sorted by h descending.  The rule is
    validated three ways in the test suite: round-trip identity on monotone
    input, oracle local equivalence on random profiles, and the Brieskorn
    anchors; on any conflict the oracle wins.
    """
    n = p.n
    pairs = {(p.leaves[i - 1], mirror_merge(p, i)) for i in range(1, (n + 1) // 2 + 1)}
    frontier = [hc for hc in pairs
                if not any(other != hc and other[0] >= hc[0] and other[1] >= hc[1]
                           for other in pairs)]
    frontier.sort(key=lambda hc: -hc[0])
    return MonotoneRoot(tuple(frontier))


def simplify_weak(w: WeaklyMonotoneRoot) -> MonotoneRoot:
    """Delete redundant parameter pairs until the root is strictly monotone.

    When h_i = h_{i+1} the pair (h_i, r_i) is deleted; when r_i = r_{i+1}
    (with h already strict there) the pair (h_{i+1}, r_{i+1}) is deleted —
    the same collapses the Pareto-frontier rule performs.
    """
    params = list(w.params)
    changed = True
    while changed:
        changed = False
        for i in range(len(params) - 1):
            if params[i][0] == params[i + 1][0]:
                del params[i]
                changed = True
                break
            if params[i][1] == params[i + 1][1]:
                del params[i + 1]
                changed = True
                break
    return MonotoneRoot(tuple(params))


def swap(x: WeaklyMonotoneRoot, y: WeaklyMonotoneRoot,
         a: int, b: int) -> tuple[WeaklyMonotoneRoot, WeaklyMonotoneRoot] | None:
    """Exchange the tails of x after index a and of y after index b.

    With Delta = s_a - t_b, the swapped pair is
    x' = (p_1,s_1; ..; p_a,s_a; q_{b+1}+Delta, t_{b+1}+Delta; ..) and
    y' = (q_1,t_1; ..; q_b,t_b; p_{a+1}-Delta, s_{a+1}-Delta; ..).
    Returns None when the validity inequality (p_a >= q_{b+1} + Delta and
    q_b >= p_{a+1} - Delta) fails; invalid indices raise instead.
    """
    if not (1 <= a <= x.type):
        raise IndexError(f"index a={a} out of range 1..{x.type}")
    if not (1 <= b <= y.type):
        raise IndexError(f"index b={b} out of range 1..{y.type}")
    ps = x.params
    qs = y.params
    delta = ps[a - 1][1] - qs[b - 1][1]
    x_tail = tuple((q + delta, t + delta) for q, t in qs[b:])
    y_tail = tuple((p - delta, s - delta) for p, s in ps[a:])
    if x_tail and ps[a - 1][0] < x_tail[0][0]:
        return None
    if y_tail and qs[b - 1][0] < y_tail[0][0]:
        return None
    return (WeaklyMonotoneRoot(ps[:a] + x_tail),
            WeaklyMonotoneRoot(qs[:b] + y_tail))


def decompose(m: MonotoneRoot) -> LocalClass:
    """Basis decomposition of a monotone root.

    Coefficient +1 at index (h_i - r_i)/2 for each i and -1 at
    (h_{i+1} - r_i)/2 for each i < n; index 0 is the trivial summand and is
    dropped.  The grading shift is -r_n (so mu-bar = -r_n/2 and the
    d-invariant of the class is h_1).
    """
    coeffs: dict[int, int] = {}

    def bump(idx: Fraction, amount: int):
        if idx % 2 != 0:
            raise ValueError("parameter difference not an even integer")
        i = int(idx) // 2
        if i:
            coeffs[i] = coeffs.get(i, 0) + amount

    n = m.type
    for i in range(n):
        bump(m.params[i][0] - m.params[i][1], +1)
        if i + 1 < n:
            bump(m.params[i + 1][0] - m.params[i][1], -1)
    return LocalClass.make(coeffs, shift=-m.params[-1][1])
