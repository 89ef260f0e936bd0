"""Closed-form correction terms: bound identity, stabilization, realization."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hfi.complexes import correction_terms as oracle_terms
from hfi.complexes import dual, tensor
from hfi.cterms import (STProfile, asymptotic_check, correction_terms,
                        d_lower_offset, d_upper_offset_direct, lemma_identity,
                        p_q_sequences, realization_family, stabilized_terms)
from hfi.localclass import I, Y, d_invariant, mu_bar, zero
from hfi.monotone import M, to_profile
from hfi.roots import standard_complex


def test_profile_of_class():
    p = STProfile.of_class(Y(3) - 2 * Y(1) + Y(2))
    assert p.s == (3, 2)
    assert p.t == (1, 1)


def test_profile_validation():
    with pytest.raises(ValueError):
        STProfile((1, 2), ())
    with pytest.raises(ValueError):
        STProfile((0,), ())


def test_p_q_sequences_small():
    p = STProfile((2,), (1,))
    P, Q = p_q_sequences(p)
    assert P == [0, -2]
    assert Q == [-4]


def test_single_positive_summand():
    assert correction_terms(Y(1)) == (2, 2, 0)
    assert correction_terms(Y(2)) == (4, 4, 0)


def test_single_negative_summand():
    assert correction_terms(-Y(2)) == (-4, 0, -4)


def test_shifted_classes():
    assert correction_terms(I(2)) == (-2, -2, -2)
    assert correction_terms(Y(2) - Y(1) + I(-2)) == (4, 4, 2)


def test_mixed_class():
    # d = 2(6+4-5) = 10; the lower term drops all the way to 0 here
    assert correction_terms(Y(6) + Y(4) - Y(5)) == (10, 10, 0)


def test_zero_class():
    assert correction_terms(zero()) == (0, 0, 0)


def test_terms_match_exact_oracle_on_monotone_roots():
    from hfi.monotone import decompose
    for m in (M(2, 0), M(4, 0, 2, 2), M(0, -4), M(6, -4, 4, -2, 2, 0)):
        cls = decompose(m)
        assert correction_terms(cls) == oracle_terms(standard_complex(to_profile(m)))


def test_stabilized_terms_scale():
    a = Y(2) - Y(1)
    d, db, du = correction_terms(a)
    for k in (1, 2, 5):
        dk, dbk, duk = stabilized_terms(a, k)
        assert dk == k * d
    with pytest.raises(ValueError):
        stabilized_terms(a, 0)


def test_asymptotic_s_dominant():
    rep = asymptotic_check(Y(3) - Y(1), persist=10)
    assert rep.regime == "s-dominant"
    assert rep.d_under_formula.endswith("- 6")


def test_asymptotic_t_dominant():
    rep = asymptotic_check(Y(1) - Y(3), persist=10)
    assert rep.regime == "t-dominant"
    assert rep.d_bar_formula.endswith("+ 6")


def test_asymptotic_one_sided():
    rep = asymptotic_check(Y(2), persist=5)
    assert rep.regime.startswith("one-sided")
    assert rep.threshold == 1


def test_asymptotic_rejects_unreduced_or_zero():
    with pytest.raises(ValueError):
        asymptotic_check(Y(2) - Y(2) + Y(1) - Y(1) + Y(3) - Y(3) + 0 * Y(1) + (Y(2) - Y(2)))
    with pytest.raises(ValueError):
        asymptotic_check(zero())


def test_realization_family_hits_targets():
    for Mv, Nv in ((1, 1), (2, 1), (1, 2), (0, 2), (3, 0)):
        for d in (-4, -2, 0, 2, 4):
            for mu in (-1, 0, 1):
                cls = realization_family(Mv, Nv, d, mu)
                dd, db, du = correction_terms(cls)
                assert (dd, db, du) == (d, d + 2 * Mv, d - 2 * Nv)
                assert mu_bar(cls) == mu


def test_realization_family_distinct_k():
    seen = set()
    for k in range(3):
        cls = realization_family(1, 1, -2, 0, k)
        assert correction_terms(cls) == (-2, 0, -4)
        seen.add(cls)
    assert len(seen) == 3


def test_realization_family_rejects_degenerate():
    with pytest.raises(ValueError):
        realization_family(0, 0, 0, 0)
    with pytest.raises(ValueError):
        realization_family(1, 1, 1, 0)  # odd d


st_profiles = st.tuples(
    st.lists(st.integers(1, 8), max_size=5),
    st.lists(st.integers(1, 8), max_size=5),
).map(lambda p: STProfile(tuple(sorted(p[0], reverse=True)),
                          tuple(sorted(p[1], reverse=True))))


@given(st_profiles)
def test_maxmin_equals_minmax(p):
    assert lemma_identity(p)
    assert d_lower_offset(p) == d_upper_offset_direct(p)


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.integers(1, 4), st.integers(-2, 2), max_size=3))
def test_formula_agrees_with_tensor_oracle(coeffs):
    from hfi.localclass import LocalClass
    from hfi.monotone import decompose, monotone_subroot
    a = LocalClass.make(coeffs)
    size = sum(3 * abs(c) * i for i, c in a.coeffs)
    if size > 10:
        return
    factors = []
    for i, c in a.coeffs:
        f = standard_complex(to_profile(M(2 * i, 0)))
        if c < 0:
            f = dual(f)
        factors.extend([f] * abs(c))
    from hfi.complexes import trivial_complex
    acc = trivial_complex()
    for f in factors:
        acc = tensor(acc, f)
    assert correction_terms(a) == oracle_terms(acc)
