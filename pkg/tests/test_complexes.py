"""Posets, order complexes, Smith normal form homology, quotient cells."""

import numpy as np
import pytest

from artin import complexes, coxeter
from artin.complexes import (
    Poset,
    SimplicialComplex,
    abelianization,
    davis_poset,
    deligne_fundamental_domain,
    homology,
    invariant_factors,
    order_complex,
    salvetti_poset,
    salvetti_quotient_cells,
)
from artin.diagram import CoxeterDiagram, INF, preset

from conftest import random_diagram


def inf_pair():
    return CoxeterDiagram(("s", "t"), (("s", "t", INF),))


# ---------------------------------------------------------------- poset type

def test_poset_rejects_nontransitive_relation():
    with pytest.raises(ValueError):
        Poset(elements=(0, 1, 2), labels=("a", "b", "c"),
              less=frozenset({(0, 1), (1, 2)}))  # missing (0, 2)


def test_poset_rejects_cycles():
    with pytest.raises(ValueError):
        Poset(elements=(0, 1), labels=("a", "b"),
              less=frozenset({(0, 1), (1, 0)}))


def test_covers_and_chains_on_a_diamond():
    # 0 < 1,2 < 3
    less = frozenset({(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)})
    p = Poset(elements=(0, 1, 2, 3), labels=("o", "l", "r", "i"), less=less)
    assert set(p.covers()) == {(0, 1), (0, 2), (1, 3), (2, 3)}
    assert sorted(p.maximal_chains()) == [(0, 1, 3), (0, 2, 3)]


# ---------------------------------------------------------------- SNF

def test_invariant_factors_examples():
    assert invariant_factors({0: {0: 2}, 1: {1: 3}}) == [1, 6]
    assert invariant_factors({0: {0: 4}, 1: {1: 6}}) == [2, 12]
    assert invariant_factors({}) == []
    assert invariant_factors({0: {0: 5}}) == [5]
    # a unimodular matrix has all factors 1
    assert invariant_factors({0: {0: 1, 1: 7}, 1: {1: 1}}) == [1, 1]


def test_invariant_factors_against_dense_oracle(rng):
    # random small integer matrices: product of factors = |det| gcd checks
    for _ in range(25):
        n = rng.randint(1, 4)
        M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        rows = {
            i: {j: v for j, v in enumerate(row) if v}
            for i, row in enumerate(M)
            if any(row)
        }
        factors = invariant_factors(rows)
        det = round(float(np.linalg.det(np.array(M, dtype=np.float64))))
        prod = 1
        for f in factors:
            prod *= f
        if det != 0:
            assert len(factors) == n
            assert prod == abs(det)
        for a, b in zip(factors, factors[1:]):
            assert b % a == 0


# ---------------------------------------------------------------- homology oracles

def _complex(faces):
    return SimplicialComplex.from_faces([tuple(f) for f in faces])


def test_homology_circle():
    h = homology(_complex([(0, 1), (1, 2), (0, 2)]))
    assert h.betti == (1, 1)
    assert h.torsion == ((), ())


def test_homology_two_sphere():
    # boundary of the tetrahedron
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    h = homology(_complex(faces))
    assert h.betti == (1, 0, 1)


def test_homology_torus():
    # the 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
    faces = [((i) % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    faces += [((i) % 7, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    c = _complex(faces)
    assert c.f_vector() == (7, 21, 14)
    h = homology(c)
    assert h.betti == (1, 2, 1)
    assert all(t == () for t in h.torsion)


def test_homology_projective_plane():
    # minimal 6-vertex triangulation of RP^2: torsion Z/2 in H_1
    faces = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 5, 6), (3, 4, 6), (2, 4, 6), (2, 4, 5),
    ]
    h = homology(_complex(faces))
    assert h.betti == (1, 0, 0)
    assert h.torsion[1] == (2,)
    assert h.group(1) == "Z/2"
    assert h.pretty() == "H_0 = Z, H_1 = Z/2, H_2 = 0"


def test_homology_klein_bottle():
    # 3x3 grid on the square, sides glued cylinder-wise in x and with a
    # flip in y: H_1 = Z + Z/2
    def vert(x, y):
        if y == 3:
            return (3 - x) % 3  # top edge glued to the bottom, reversed
        return 3 * y + (x % 3)

    faces = []
    for x in range(3):
        for y in range(3):
            a, b = vert(x, y), vert(x + 1, y)
            c, d = vert(x, y + 1), vert(x + 1, y + 1)
            faces.append((a, b, c))
            faces.append((b, c, d))
    cx = _complex(faces)
    assert cx.f_vector() == (9, 27, 18)
    h = homology(cx)
    assert h.betti == (1, 1, 0)
    assert h.torsion[1] == (2,)


def test_homology_euler_consistency(rng):
    # chi from the f-vector equals the alternating Betti sum (torsion cancels)
    for faces in [
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
        [(0, 1), (1, 2), (2, 3), (0, 3)],
        [(0, 1, 2)],
    ]:
        c = _complex(faces)
        h = homology(c)
        assert c.euler_characteristic() == sum(
            (-1) ** k * b for k, b in enumerate(h.betti)
        )


# ---------------------------------------------------------------- salvetti

def test_salvetti_a1_is_a_four_cycle():
    p = salvetti_poset(preset("A1"))
    assert len(p) == 4
    c = order_complex(p)
    assert c.f_vector() == (4, 4)
    h = homology(c)
    assert h.betti == (1, 1)


def test_salvetti_element_counts():
    assert len(salvetti_poset(preset("A2"))) == 24
    assert len(salvetti_poset(preset("I2(4)"))) == 32


def test_salvetti_homology_matches_arrangement_complement():
    # Poincare polynomial of the braid arrangement complement:
    # I2(p): (1+t)(1+(p-1)t)
    for p, expect in [(3, (1, 3, 2)), (4, (1, 4, 3))]:
        poset = salvetti_poset(preset(f"I2({p})"))
        h = homology(order_complex(poset))
        assert h.betti == expect, p
        assert all(t == () for t in h.torsion)


def test_salvetti_h1_rank_equals_reflection_count():
    for name in ["A2", "I2(4)", "I2(5)"]:
        d = preset(name)
        h = homology(order_complex(salvetti_poset(d)))
        assert h.betti[1] == len(coxeter.reflections(d)), name


def test_salvetti_ball_infinite_type():
    p = salvetti_poset(preset("Atilde2"), ball=2)
    # elements (u, T): u in the radius-2 ball with support in finite T
    assert len(p) > 10
    h = homology(order_complex(p))
    assert h.betti[0] == 1


# ---------------------------------------------------------------- davis

def test_davis_a2_counts_cosets():
    p = davis_poset(preset("A2"))
    # 6 cosets of W_{}, 3 of W_s, 3 of W_t, 1 of W_{s,t}
    assert len(p) == 13


def test_davis_complexes_are_acyclic():
    for name in ["A2", "B2", "A3"]:
        h = homology(order_complex(davis_poset(preset(name))))
        assert h.betti[0] == 1
        assert all(b == 0 for b in h.betti[1:]), name
        assert all(t == () for t in h.torsion)


def test_davis_infinite_ball():
    p = davis_poset(preset("Atilde2"), ball=2)
    h = homology(order_complex(p))
    assert h.betti[0] == 1


# ---------------------------------------------------------------- deligne FD

def test_deligne_fd_sizes():
    p, _ = deligne_fundamental_domain(preset("Atilde2"))
    assert len(p) == 7
    p3, _ = deligne_fundamental_domain(preset("B3"))
    assert len(p3) == 8


def test_deligne_fd_is_contractible_like():
    for name in ["A2", "B3", "Atilde2"]:
        _, c = deligne_fundamental_domain(preset(name))
        h = homology(c)
        assert h.betti[0] == 1
        assert all(b == 0 for b in h.betti[1:]), name
        assert all(t == () for t in h.torsion)


# ---------------------------------------------------------------- quotient cells

def test_quotient_cells_examples():
    assert salvetti_quotient_cells(preset("A2")).f_vector == (1, 2, 1)
    assert salvetti_quotient_cells(preset("Atilde2")).f_vector == (1, 3, 3)
    assert salvetti_quotient_cells(inf_pair()).f_vector == (1, 2)
    assert salvetti_quotient_cells(preset("B3")).f_vector == (1, 3, 3, 1)


def test_quotient_cells_counts_finite_type_subsets(rng):
    for _ in range(10):
        d = random_diagram(rng, max_rank=4)
        q = salvetti_quotient_cells(d)
        from artin.diagram import finite_type_subsets

        sf = finite_type_subsets(d)
        assert sum(q.f_vector) == len(sf)
        for k, count in enumerate(q.f_vector):
            assert count == sum(1 for T in sf if len(T) == k)


# ---------------------------------------------------------------- abelianization

def test_abelianization_presets():
    assert abelianization(preset("A4")).rank == 1
    assert abelianization(preset("I2(4)")).rank == 2
    assert abelianization(preset("I2(5)")).rank == 1
    assert abelianization(preset("B3")).rank == 2
    assert abelianization(preset("Atilde2")).rank == 1
    assert abelianization(inf_pair()).rank == 2
    for name in ["A4", "B3", "Atilde2"]:
        assert abelianization(preset(name)).torsion == ()


def test_abelianization_rank_is_odd_graph_components(rng):
    for _ in range(20):
        d = random_diagram(rng, max_rank=5)
        ab = abelianization(d)
        # oracle: count components of the graph with odd-labelled edges only
        parent = {v: v for v in d.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, m in d.pairs():
            if m != INF and int(m) % 2 == 1:
                parent[find(a)] = find(b)
        comps = len({find(v) for v in d.vertices})
        assert ab.rank == comps
        assert ab.torsion == ()


def test_abelianization_pretty():
    assert abelianization(preset("A2")).pretty() == "Z"
    assert abelianization(preset("B2")).pretty() == "Z^2"
