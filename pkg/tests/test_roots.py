"""Symmetric graded-root profiles and their standard complexes."""

from fractions import Fraction

import pytest

from hfi.complexes import correction_terms, homology_ranks, validate
from hfi.roots import (RootProfile, SymmetricRootProfile, merge_grading,
                       mirror_merge, profile_from_text, profile_to_text,
                       reconstruct_tree, standard_complex, validate_profile)

# HF-minus gradings of the reference root, +2 internal normalization applied
FIG_LEAVES = (-6, -2, 0, 0, -2, -6)
FIG_ANGLES = (-8, -4, -4, -4, -8)


def fig_profile():
    return SymmetricRootProfile(FIG_LEAVES, FIG_ANGLES)


def test_valid_profile_passes():
    assert validate_profile(fig_profile()).ok


def test_angle_above_leaf_fails():
    p = RootProfile((0, 0), (2,))
    assert not validate_profile(p).ok


def test_mixed_coset_fails():
    p = RootProfile((0, 1), (-2,))
    assert not validate_profile(p).ok


def test_asymmetric_profile_rejected():
    with pytest.raises(ValueError):
        SymmetricRootProfile((0, -2), (-4,))


def test_single_leaf_profile_is_a_shifted_tower():
    p = SymmetricRootProfile((-2,), ())
    assert validate_profile(p).ok
    assert correction_terms(standard_complex(p)) == (-2, -2, -2)


def test_reference_profile_standard_complex():
    c = standard_complex(fig_profile())
    assert c.n == 11
    assert validate(c).ok
    ranks = homology_ranks(c, [0, -1, -2, -3, -4, -5, -6])
    # two leaves at 0; four branches alive at -2; the central 4-fold merge
    # collapses them to one at -4; the outer leaves reappear at -6
    assert ranks[Fraction(0)] == 2
    assert ranks[Fraction(-1)] == 0
    assert ranks[Fraction(-2)] == 4
    assert ranks[Fraction(-4)] == 1
    assert ranks[Fraction(-6)] == 3


def test_reconstruct_tree_merge_vertex():
    verts = reconstruct_tree(fig_profile())
    # the three central angles at -4 support one vertex spanning leaves 2..5
    assert any(v.grading == -4 and v.span == (2, 5) for v in verts)


def test_merge_grading_outer_leaves():
    assert merge_grading(fig_profile(), 1, 6) == -8


def test_mirror_merge_values():
    p = fig_profile()
    assert mirror_merge(p, 1) == -8
    assert mirror_merge(p, 2) == -4
    assert mirror_merge(p, 3) == -4


def test_profile_text_round_trip():
    p = fig_profile()
    q = profile_from_text(profile_to_text(p))
    assert tuple(q.leaves) == tuple(p.leaves)
    assert tuple(q.angles) == tuple(p.angles)


def test_profile_text_fractions_and_comments():
    text = """
    # a shifted example
    coset: 1/2
    leaves: 1/2 -3/2 1/2
    angles: -3/2 -3/2
    """
    p = profile_from_text(text)
    assert p.leaves == (Fraction(1, 2), Fraction(-3, 2), Fraction(1, 2))


def test_standard_complex_homology_matches_tree_rank_function():
    # at grading g the tree has one branch per leaf above g, minus one per
    # merge above g (each angle joins exactly two adjacent branches)
    p = fig_profile()
    c = standard_complex(p)
    top = max(p.leaves)
    window = [top - k for k in range(0, 12)]
    ranks = homology_ranks(c, window)
    coset = p.leaves[0] % 2
    for g in window:
        if g % 2 != coset:
            assert ranks[g] == 0
            continue
        alive = sum(1 for v in p.leaves if v >= g)
        merged = sum(1 for a in p.angles if a >= g)
        assert ranks[g] == max(alive - merged, 1 if g <= min(p.angles) else 0)
