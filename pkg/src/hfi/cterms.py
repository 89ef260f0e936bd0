"""Closed-form involutive correction terms of Y-basis classes.

Given a reduced class (Y_{s_1} + .. + Y_{s_m}) - (Y_{t_1} + .. + Y_{t_n})
(both lists weakly decreasing), the lower correction term is
d-under = d + max-min of the partial-sum sequences P and Q; the upper one
follows by duality, d-bar(a) = -d-under(-a).  The dual min-max bound T is
implemented independently of the max-min bound S so that their equality is a
genuine cross-check rather than code reuse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .localclass import LocalClass, Y, d_invariant, mu_bar, neg


@dataclass(frozen=True)
class STProfile:
    s: tuple[int, ...]  # weakly decreasing positive-part indices, with multiplicity
    t: tuple[int, ...]  # weakly decreasing negative-part indices

    def __post_init__(self):
        for name, seq in (("s", self.s), ("t", self.t)):
            if any(x <= 0 for x in seq):
                raise ValueError(f"{name} indices must be positive")
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"{name} must be weakly decreasing")

    @property
    def m(self) -> int:
        return len(self.s)

    @property
    def n(self) -> int:
        return len(self.t)

    @staticmethod
    def of_class(a: LocalClass) -> "STProfile":
        s: list[int] = []
        t: list[int] = []
        for i, c in a.coeffs:
            (s if c > 0 else t).extend([i] * abs(c))
        return STProfile(tuple(sorted(s, reverse=True)), tuple(sorted(t, reverse=True)))


def p_q_sequences(st: STProfile) -> tuple[list[int], list[int]]:
    """P_i = 2(sum t_(<=i) - sum s_(<=i)) for 0 <= i <= min(m, n);
    Q_i = 2(sum t_(<=i) - sum s_(<=i+1)) for 0 <= i <= min(m - 1, n)."""
    m, n = st.m, st.n
    ssum = [0]
    for x in st.s:
        ssum.append(ssum[-1] + x)
    tsum = [0]
    for x in st.t:
        tsum.append(tsum[-1] + x)
    P = [2 * (tsum[i] - ssum[i]) for i in range(min(m, n) + 1)]
    Q = [2 * (tsum[i] - ssum[i + 1]) for i in range(min(m - 1, n) + 1)]
    return P, Q


def d_lower_offset(st: STProfile) -> int:
    """d-under minus d: max over k of min(P_0..P_k, Q_k).

    The Q_k entry is deleted in the last row when min(m, n) = m (where Q_m
    does not exist).
    """
    P, Q = p_q_sequences(st)
    K = min(st.m, st.n)
    best = None
    for k in range(K + 1):
        entries = P[: k + 1]
        if not (k == K and K == st.m):
            entries = entries + [Q[k]]
        row = min(entries)
        best = row if best is None else max(best, row)
    return best


def d_upper_offset_direct(st: STProfile) -> int:
    """The dual min-max bound T, implemented independently of d_lower_offset.

    T = min over k = 0..min(m, n+1) of max(Q_0..Q_{k-1}, P_k), with the P_k
    entry deleted in the last row when min(m, n+1) = n+1 (where P_{n+1} does
    not exist).
    """
    P, Q = p_q_sequences(st)
    K = min(st.m, st.n + 1)
    best = None
    for k in range(K + 1):
        entries = Q[:k]
        if not (k == K and K == st.n + 1):
            entries = entries + [P[k]]
        row = max(entries)
        best = row if best is None else min(best, row)
    return best


def lemma_identity(st: STProfile) -> bool:
    """The two bounds agree: S (max-min) equals T (min-max) on every profile."""
    return d_lower_offset(st) == d_upper_offset_direct(st)


def correction_terms(a: LocalClass) -> tuple[Fraction, Fraction, Fraction]:
    """(d, d-bar, d-under) of a class; d-bar comes from the dual class."""
    d = d_invariant(a)
    d_under = d + d_lower_offset(STProfile.of_class(a))
    b = neg(a)
    d_bar = -(d_invariant(b) + d_lower_offset(STProfile.of_class(b)))
    if not (d_under <= d <= d_bar):
        raise AssertionError(f"correction-term sanity violated for {a}")
    return d, d_bar, d_under


def stabilized_terms(a: LocalClass, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """Correction terms of the k-fold sum of a."""
    if k <= 0:
        raise ValueError("k must be positive")
    return correction_terms(k * a)


@dataclass(frozen=True)
class AsymptoticReport:
    regime: str           # "s-dominant", "t-dominant", or "one-sided ..."
    threshold: int        # least k from which the closed forms hold (and persist)
    verified_up_to: int
    d_bar_formula: str
    d_under_formula: str


def asymptotic_check(a: LocalClass, persist: int = 20) -> AsymptoticReport:
    """Find the stabilization threshold of the k-fold correction terms.

    For s_1 > t_1 the stabilized forms are d-bar = k d and
    d-under = k d - 2 s_1; for t_1 > s_1 they are d-bar = k d + 2 t_1 and
    d-under = k d.  The least k where the forms hold is located and the forms
    are verified up to threshold + ``persist``.
    """
    st = STProfile.of_class(a)
    d = d_invariant(a)
    s1 = st.s[0] if st.s else None
    t1 = st.t[0] if st.t else None
    if s1 is not None and t1 is not None and s1 == t1:
        raise ValueError("class is not reduced: s_1 = t_1")
    if t1 is None and s1 is None:
        raise ValueError("zero class has no stabilization regime")
    if t1 is None or (s1 is not None and s1 > t1):
        regime = "s-dominant" if t1 is not None else "one-sided (no negative part)"
        bar = lambda k: k * d
        under = lambda k: k * d - 2 * s1
        bar_s, under_s = "k*d", f"k*d - {2 * s1}"
    else:
        regime = "t-dominant" if s1 is not None else "one-sided (no positive part)"
        bar = lambda k: k * d + 2 * t1
        under = lambda k: k * d
        bar_s, under_s = f"k*d + {2 * t1}", "k*d"

    def holds(k: int) -> bool:
        _, db, du = correction_terms(k * a)
        return db == bar(k) and du == under(k)

    threshold = None
    for k in range(1, 200):
        if holds(k):
            threshold = k
            break
    if threshold is None:
        raise RuntimeError("no stabilization threshold found below k = 200")
    for k in range(threshold, threshold + persist + 1):
        if not holds(k):
            raise RuntimeError(
                f"stabilized forms fail to persist at k = {k} (threshold {threshold})")
    return AsymptoticReport(regime, threshold, threshold + persist, bar_s, under_s)


def realization_family(M: int, N: int, d, mu_bar_target, k: int = 0) -> LocalClass:
    """A class with d-invariant d, mu-bar as requested, d-bar - d = 2M and
    d - d-under = 2N; distinct k give distinct classes with the same invariants.

    Built as Y_a - Y_b - Y_c - n Y_1 (a = M+2N+k, b = M+N+k, c = M+N) when the
    shift-adjusted d is at most -2M, and as the companion ansatz with +2 Y_1
    otherwise; the N = 0 case is realized by negating an (0, M) family.
    """
    if M < 0 or N < 0:
        raise ValueError("M and N must be non-negative")
    if M == 0 and N == 0:
        raise ValueError("d-bar = d = d-under admits only the trivial class; "
                         "need M, N not both zero")
    d = Fraction(d)
    mu = Fraction(mu_bar_target)
    if (d / 2).denominator != 1 or mu.denominator != 1:
        raise ValueError("need an even integer d and an integer mu-bar")
    if k < 0:
        raise ValueError("k must be non-negative")
    if N == 0:
        return neg(realization_family(0, M, -d, -mu, k))
    shift = 2 * mu
    d_prime = d + shift  # d-invariant the unshifted coefficients must carry
    if d_prime <= -2 * M:
        n_extra = int(-2 * M - d_prime) // 2
        cls = Y(M + 2 * N + k) - Y(M + N + k) - Y(M + N) + (-n_extra) * Y(1)
    else:
        n_extra = int(d_prime + 2 * M - 2) // 2
        cls = (Y(M + 2 * N + 1 + k) - Y(M + N + 1 + k) - Y(M + N + 1)
               + (2 + n_extra) * Y(1))
    cls = cls + LocalClass.make({}, shift=shift)
    got = correction_terms(cls)
    want = (d, d + 2 * M, d - 2 * N)
    if got != want or mu_bar(cls) != mu:
        raise AssertionError(f"realization family construction off: {got} != {want}")
    return cls
