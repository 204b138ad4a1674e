"""The tensor's lax structure and the cartesian recognition checks."""

import random

import pytest

from bicat import cartesian as ct
from bicat import rel_instance, span_instance
from bicat.fin import UNIT, FinSet, SetFn, all_functions
from bicat.gen import carrier, map_cell, one_cell
from bicat.groth import g_tensor
from bicat.mapprod import product_object

INSTANCES = (span_instance(), rel_instance())


def test_unit_and_composition_constraints_invertible():
    rng = random.Random(5)
    for B in INSTANCES:
        for _ in range(10):
            X, Y = carrier(rng, "x", 3), carrier(rng, "y", 3)
            A, C = carrier(rng, "a", 3), carrier(rng, "c", 3)
            L, M = carrier(rng, "l", 3), carrier(rng, "m", 3)
            assert B.is_invertible(ct.tensor_unit_cell(B, X, Y))
            R = one_cell(B, rng, X, A, 3)
            S = one_cell(B, rng, Y, C, 3)
            T = one_cell(B, rng, A, L, 3)
            U = one_cell(B, rng, C, M, 3)
            cc = ct.tensor_comp_cell(B, R, S, T, U)
            assert B.is_invertible(cc)
            # Source and target really are the two ways around the square.
            tens = lambda P, Q: g_tensor(B, P, Q).obj
            assert cc.dom == B.comp(tens(R, S), tens(T, U))
            assert cc.cod == tens(B.comp(R, T), B.comp(S, U))
        iu, ic = ct.unit_functor_cells(B)
        assert iu == B.id2(B.identity(UNIT))
        assert ic == B.id2(B.identity(UNIT))


def test_unit_functor_cells_trivial_because_unit_is_strict():
    # The unit carrier is a point, so everything over it collapses and the
    # two unit-functor constraints have nothing to do.
    for B in INSTANCES:
        one = B.identity(UNIT)
        assert B.comp(one, one) == one
        w = B.local_product(one, one)
        iso = w.pair(B.id2(one), B.id2(one))
        assert B.is_invertible(iso)


def test_lax_associativity_and_units():
    rng = random.Random(15)
    for B in INSTANCES:
        for _ in range(8):
            X, Y = carrier(rng, "x", 2), carrier(rng, "y", 2)
            A, C = carrier(rng, "a", 2), carrier(rng, "c", 2)
            L, M = carrier(rng, "l", 2), carrier(rng, "m", 2)
            R = one_cell(B, rng, X, A, 2)
            S = one_cell(B, rng, Y, C, 2)
            T = one_cell(B, rng, A, L, 2)
            U = one_cell(B, rng, C, M, 2)
            V = one_cell(B, rng, L, X, 2)
            W = one_cell(B, rng, M, Y, 2)
            lhs, rhs = ct.lax_assoc_sides(B, R, S, T, U, V, W)
            assert lhs == rhs
            (left, left_expect), (right, right_expect) = ct.lax_unit_sides(B, R, S)
            assert left == left_expect and right == right_expect


def test_tensor_respects_vertical_structure():
    rng = random.Random(25)
    for B in INSTANCES:
        done = 0
        while done < 8:
            X, Y = carrier(rng, "x", 2), carrier(rng, "y", 2)
            A, C = carrier(rng, "a", 2), carrier(rng, "c", 2)
            L, M = carrier(rng, "l", 2), carrier(rng, "m", 2)
            R = one_cell(B, rng, X, A, 2)
            S = one_cell(B, rng, Y, C, 2)
            T = one_cell(B, rng, A, L, 2)
            U = one_cell(B, rng, C, M, 2)
            endo = lambda P: list(B.hom_cells(P, P))
            choices = [endo(P) for P in (R, S, T, U)]
            if not all(choices):
                continue
            a, b, c, d = (rng.choice(cs) for cs in choices)
            assert ct.tensor_naturality_holds(B, a, b, c, d)
            assert ct.tensor_functor_law_holds(B, a, a, b, b)
            done += 1


def test_map_comparison_cells():
    rng = random.Random(35)
    for B in INSTANCES:
        done = 0
        while done < 10:
            X, Y = carrier(rng, "x", 2), carrier(rng, "y", 2)
            A, C = carrier(rng, "a", 2), carrier(rng, "c", 2)
            L, M = carrier(rng, "l", 2), carrier(rng, "m", 2)
            f = map_cell(B, rng, X, A, scramble=False)
            g = map_cell(B, rng, Y, C, scramble=False)
            u = map_cell(B, rng, A, L, scramble=False)
            v = map_cell(B, rng, C, M, scramble=False)
            if None in (f, g, u, v):
                continue
            assert B.is_invertible(ct.m_cell(B, f, g))
            assert ct.check_m(B, f, g, u, v) == {"nullary": True,
                                                 "binary": True}
            done += 1


def test_m_cell_handles_noncanonical_maps():
    rng = random.Random(45)
    B = span_instance()
    done = 0
    while done < 10:
        X = carrier(rng, "x", 3)
        A = carrier(rng, "a", 3)
        f = map_cell(B, rng, X, A)
        g = map_cell(B, rng, A, X)
        if f is None or g is None:
            continue
        assert B.is_invertible(ct.m_cell(B, f, g))
        done += 1


def test_cartesian_recognition_report():
    rng = random.Random(55)
    for B in INSTANCES:
        X, Y = FinSet(("x0", "x1")), FinSet(("y0",))
        A, C = FinSet(("a0",)), FinSet(("c0", "c1"))
        R = one_cell(B, rng, X, A, 2)
        S = one_cell(B, rng, Y, C, 2)
        T = one_cell(B, rng, A, X, 2)
        U = one_cell(B, rng, C, Y, 2)
        rep = ct.is_cartesian(B, [(X, Y), (A, C)], [(R, S, T, U)],
                              [(R, one_cell(B, rng, X, A, 2))])
        assert rep["ok"], rep


def test_precartesian_violation_on_honest_instance_is_none():
    rng = random.Random(65)
    for B in INSTANCES:
        X, A = carrier(rng, "x", 3), carrier(rng, "a", 3)
        pairs = [(one_cell(B, rng, X, A, 3), one_cell(B, rng, X, A, 3))
                 for _ in range(5)]
        assert ct.precartesian_violation(B, pairs) is None


def test_projection_fillers_and_prebeck():
    rng = random.Random(75)
    for B in INSTANCES:
        for _ in range(8):
            X, Y = carrier(rng, "x", 3), carrier(rng, "y", 3)
            A = carrier(rng, "a", 3)
            R = one_cell(B, rng, X, A, 3)
            c1, c2 = ct.projection_fillers(B, R, Y)
            assert B.is_invertible(c1) and B.is_invertible(c2)
            assert B.is_invertible(ct.prebeck_cell(B, R, Y))


def test_composition_comparisons():
    rng = random.Random(85)
    for B in INSTANCES:
        done = 0
        while done < 8:
            X, Y = carrier(rng, "x", 2), carrier(rng, "y", 2)
            A, C = carrier(rng, "a", 2), carrier(rng, "c", 2)
            L, M = carrier(rng, "l", 2), carrier(rng, "m", 2)
            f = map_cell(B, rng, X, A, scramble=False)
            g = map_cell(B, rng, Y, C, scramble=False)
            R = one_cell(B, rng, A, L, 2)
            S = one_cell(B, rng, C, M, 2)
            u = map_cell(B, rng, X, L, scramble=False)
            v = map_cell(B, rng, Y, M, scramble=False)
            if None in (f, g, u, v):
                continue
            assert B.is_invertible(ct.precompose_iso(B, f, g, R, S))
            assert B.is_invertible(ct.postcompose_star_iso(B, R, S, u, v))
            done += 1


def test_unit_factor_pairing_is_an_equivalence():
    rng = random.Random(95)
    for B in INSTANCES:
        for _ in range(6):
            X = carrier(rng, "x", 3)
            A = carrier(rng, "a", 3)
            R = one_cell(B, rng, X, UNIT, 3)
            S = one_cell(B, rng, UNIT, A, 3)
            arrow, rep = ct.strange_pair(B, R, S)
            assert rep == {"f": True, "u": True, "cell": True}
            assert arrow.dom.source == X and arrow.dom.target == A


def test_fill_cross_check_against_enumeration():
    # Every pair of projected cells either pins down exactly one fill or
    # admits none; fill2 must agree with brute enumeration either way.
    import bicat.mapprod as mp
    rng = random.Random(105)
    for B in INSTANCES:
        X, Y = FinSet(("x0", "x1")), FinSet(("y0",))
        A = FinSet(("a0", "a1"))
        cone = product_object(B, X, Y)
        solved = 0
        for _ in range(25):
            T = one_cell(B, rng, A, cone.vertex, 2)
            U = one_cell(B, rng, A, cone.vertex, 2)
            Tp, Up = B.comp(T, cone.legs[0]), B.comp(U, cone.legs[0])
            Tr, Ur = B.comp(T, cone.legs[1]), B.comp(U, cone.legs[1])
            for alpha in B.hom_cells(Tp, Up):
                for beta in B.hom_cells(Tr, Ur):
                    expected = [c for c in B.hom_cells(T, U)
                                if B.whisker_right(c, cone.legs[0]) == alpha
                                and B.whisker_right(c, cone.legs[1]) == beta]
                    try:
                        got = mp.fill2(B, T, U, alpha, beta, cone)
                    except mp.FillError:
                        assert not expected
                    else:
                        assert expected == [got]
                        solved += 1
        assert solved > 0
