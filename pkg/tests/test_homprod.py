"""Products and terminals inside a single hom-category."""

import random

from bicat import rel_instance, span_instance
from bicat.fin import FinSet, SetFn
from bicat.gen import carrier, map_cell, one_cell, thicken, thin
from bicat.homprod import (delta, is_product_diagram, is_terminal_cell_unique,
                           local_product, local_terminal, tau, transport_cell,
                           transport_hom, wedge_cell)

INSTANCES = (span_instance(), rel_instance())


def test_wedge_universal_property_enumerated():
    # Independent check: for every test 1-cell T (small apex), every cone
    # (T -> R, T -> S) factors through the wedge exactly once.
    rng = random.Random(4)
    for B in INSTANCES:
        for _ in range(12):
            X = carrier(rng, "x", 2)
            A = carrier(rng, "a", 2)
            R = one_cell(B, rng, X, A, 3)
            S = one_cell(B, rng, X, A, 3)
            w = B.local_product(R, S)
            tests = list(B.one_cells(X, A, 2))
            assert is_product_diagram(B, w.product, w.proj1, w.proj2,
                                      R, S, tests) is None


def test_wedge_pairing_recovers_inclusions():
    rng = random.Random(14)
    for B in INSTANCES:
        for _ in range(25):
            X = carrier(rng, "x", 3)
            A = carrier(rng, "a", 3)
            R = one_cell(B, rng, X, A, 4)
            S = one_cell(B, rng, X, A, 4)
            w = B.local_product(R, S)
            T, inc = thin(B, rng, w.product)
            med = w.pair(B.vcomp(inc, w.proj1), B.vcomp(inc, w.proj2))
            assert med == inc


def test_local_terminal_has_exactly_one_cell_from_everything():
    rng = random.Random(24)
    for B in INSTANCES:
        for X_n in range(3):
            for A_n in range(3):
                X = FinSet("x%d" % i for i in range(X_n))
                A = FinSet("a%d" % i for i in range(A_n))
                top = B.local_terminal(X, A)
                tests = list(B.one_cells(X, A, 2))
                assert is_terminal_cell_unique(B, top, tests) is None
                for T in tests:
                    assert list(B.hom_cells(T, top)) == [B.tau(T)]


def test_terminal_composite_collapses_through_the_unit():
    # Composing the chosen terminal around the unit carrier gives back the
    # chosen terminal on the nose, whatever the shape.
    from bicat.fin import UNIT
    from bicat.mapprod import bang
    for B in INSTANCES:
        for X_n in range(3):
            for A_n in range(3):
                X = FinSet("x%d" % i for i in range(X_n))
                A = FinSet("a%d" % i for i in range(A_n))
                t_X = bang(B, X)
                t_A_star = B.map_adjunction(bang(B, A)).right
                middle = B.local_terminal(UNIT, UNIT)
                built = B.comp(t_X, B.comp(middle, t_A_star))
                assert built == B.local_terminal(X, A)


def test_module_level_helpers_agree_with_instance_methods():
    rng = random.Random(34)
    for B in INSTANCES:
        X = carrier(rng, "x", 3)
        A = carrier(rng, "a", 3)
        R = one_cell(B, rng, X, A, 3)
        S = one_cell(B, rng, X, A, 3)
        assert local_product(B, R, S).product == B.local_product(R, S).product
        assert local_terminal(B, X, A) == B.local_terminal(X, A)
        assert tau(B, R) == B.tau(R)
        d = delta(B, R)
        assert d.dom == R and d.cod == B.local_product(R, R).product


def test_wedge_cell_is_functorial_pairing():
    rng = random.Random(44)
    for B in INSTANCES:
        for _ in range(15):
            X = carrier(rng, "x", 3)
            A = carrier(rng, "a", 3)
            R = one_cell(B, rng, X, A, 3)
            S = one_cell(B, rng, X, A, 3)
            R1, al = thicken(B, rng, R, 1)
            S1, be = thicken(B, rng, S, 1)
            cell = wedge_cell(B, al, be)
            w0 = B.local_product(R, S)
            w1 = B.local_product(R1, S1)
            assert cell.dom == w0.product and cell.cod == w1.product
            assert B.vcomp(cell, w1.proj1) == B.vcomp(w0.proj1, al)
            assert B.vcomp(cell, w1.proj2) == B.vcomp(w0.proj2, be)


def test_transport_is_a_functor():
    rng = random.Random(54)
    for B in INSTANCES:
        done = 0
        while done < 12:
            X, Y = carrier(rng, "x", 3), carrier(rng, "y", 3)
            A, C = carrier(rng, "a", 3), carrier(rng, "c", 3)
            f = map_cell(B, rng, X, Y)
            u = map_cell(B, rng, A, C)
            if f is None or u is None:
                continue
            u_star = B.map_adjunction(u).right
            S = one_cell(B, rng, Y, C, 3)
            S1, al = thicken(B, rng, S, 1)
            _, be = thicken(B, rng, S1, 1)
            assert (transport_cell(B, f, B.id2(S), u_star)
                    == B.id2(transport_hom(B, f, S, u_star)))
            assert (transport_cell(B, f, B.vcomp(al, be), u_star)
                    == B.vcomp(transport_cell(B, f, al, u_star),
                               transport_cell(B, f, be, u_star)))
            done += 1


def test_product_diagram_check_spots_a_fake():
    from bicat.spans import Span
    B = span_instance()
    X = FinSet(("x0",))
    A = FinSet(("a0",))
    apex = FinSet(("p", "q"))
    to_x = SetFn.constant(apex, X, "x0")
    to_a = SetFn.constant(apex, A, "a0")
    R = Span(X, A, apex, to_x, to_a)
    w = B.local_product(R, R)
    # Claim R itself is the wedge, reusing its identity as both projections.
    # A cone whose two legs pick different apex points then has no mediator.
    fake = is_product_diagram(B, R, B.id2(R), B.id2(R), R, R,
                              list(B.one_cells(X, A, 2)))
    assert fake is not None and "test" in fake
    assert is_product_diagram(B, w.product, w.proj1, w.proj2, R, R,
                              list(B.one_cells(X, A, 2))) is None
