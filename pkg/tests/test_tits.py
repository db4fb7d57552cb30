"""Bilinear form, reflection matrices, signatures, and dihedral orders."""

import math

import numpy as np
import pytest

from artin.diagram import INF, CoxeterDiagram, is_finite_type, preset
from artin import tits

from conftest import random_diagram


def test_form_entries_a2():
    B = tits.bilinear_form(preset("A2"))
    assert B[0, 0] == 1.0 and B[1, 1] == 1.0
    assert B[0, 1] == pytest.approx(-0.5)
    assert np.allclose(B, B.T)


def test_form_entries_special_labels():
    d = CoxeterDiagram(("s", "t", "u"), (("s", "t", INF), ("t", "u", 4)))
    B = tits.bilinear_form(d)
    assert B[0, 1] == -1.0  # infinity is exactly -1, no cosine rounding
    assert B[0, 2] == 0.0  # absent edge (m=2) is exactly 0
    assert B[1, 2] == pytest.approx(-math.cos(math.pi / 4))


def test_reflections_are_involutions():
    for name in ["A2", "B3", "H3", "Atilde2"]:
        d = preset(name)
        n = d.rank
        for M in tits.reflection_matrices(d):
            assert np.allclose(M @ M, np.eye(n), atol=1e-12)


def test_reflections_preserve_form():
    # each sigma_s is an isometry of the bilinear form
    for name in ["A3", "B2", "I2(7)", "Atilde2"]:
        d = preset(name)
        B = tits.bilinear_form(d)
        for M in tits.reflection_matrices(d):
            assert np.allclose(M.T @ B @ M, B, atol=1e-12)


def test_signature_finite_presets_positive_definite():
    for name in ["A1", "A4", "B3", "D4", "F4", "H4", "E8", "I2(11)"]:
        sig = tits.signature(tits.bilinear_form(preset(name)))
        assert (sig.n_zero, sig.n_neg) == (0, 0), name
        assert sig.n_pos == preset(name).rank


def test_signature_affine_and_indefinite():
    sig = tits.signature(tits.bilinear_form(preset("Atilde2")))
    assert (sig.n_pos, sig.n_zero, sig.n_neg) == (2, 1, 0)
    d = CoxeterDiagram(("s", "t"), (("s", "t", INF),))
    sig2 = tits.signature(tits.bilinear_form(d))
    assert (sig2.n_pos, sig2.n_zero, sig2.n_neg) == (1, 1, 0)


def test_signature_negative_part_exists():
    # a triangle with labels (3, 3, 7) is hyperbolic: signature (2, 0, 1)
    d = CoxeterDiagram(("s", "t", "u"),
                       (("s", "t", 3), ("t", "u", 3), ("s", "u", 7)))
    sig = tits.signature(tits.bilinear_form(d))
    assert (sig.n_pos, sig.n_zero, sig.n_neg) == (2, 0, 1)


@pytest.mark.parametrize("p", range(3, 11))
def test_dihedral_rotation_order(p):
    d = preset(f"I2({p})")
    assert tits.pair_order(d, "s", "t") == p


def test_pair_order_commuting_and_infinite():
    d = CoxeterDiagram(("s", "t", "u"), (("s", "t", INF),))
    assert tits.pair_order(d, "t", "u") == 2
    assert tits.pair_order(d, "s", "t") is None


def test_pair_order_matches_labels_everywhere():
    for name in ["A3", "B3", "F4", "H3"]:
        d = preset(name)
        for s, t, m in d.pairs():
            assert tits.pair_order(d, s, t) == m


def test_word_to_matrix_respects_relations():
    d = preset("B2")
    sts_t = tits.word_to_matrix(d, ("s", "t", "s", "t"))
    tst_s = tits.word_to_matrix(d, ("t", "s", "t", "s"))
    assert np.allclose(sts_t, tst_s, atol=1e-12)


def test_positive_definite_iff_finite_type(rng):
    for _ in range(30):
        d = random_diagram(rng, max_rank=5)
        sig = tits.signature(tits.bilinear_form(d))
        numeric = sig.n_zero == 0 and sig.n_neg == 0
        assert numeric == is_finite_type(d)[0], d
