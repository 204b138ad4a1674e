"""Squares over the base instance: the arrow-layer bicategory and its tensor."""

import random

import pytest

from bicat import rel_instance, span_instance
from bicat.fin import UNIT, FinSet, SetFn
from bicat.gen import carrier, map_cell, one_cell, thicken
from bicat.groth import (GArr, GPairError, dunit_iso, frame_adjunction,
                         g_bang, g_cell, g_cell_invertible, g_compose,
                         g_diag, g_identity, g_is_equivalence, g_map_arrow,
                         g_pair, g_tensor, g_terminal, g_vcomp,
                         garr_from_primary, garr_from_secondary,
                         paste_vertical)
from bicat.mapprod import NotAMap
from bicat.rels import Rel

INSTANCES = (span_instance(), rel_instance())


def _inclusion_square(B, rng, R):
    """A square R => R1 with identity frames given by thickening R."""
    R1, inc = thicken(B, rng, R, 1)
    return garr_from_primary(B, R, R1,
                             B.identity(R.source), B.identity(R.target), inc)


def test_square_identity_ignores_secondary():
    B = rel_instance()
    X = FinSet(("x0", "x1"))
    R = B.identity(X)
    a = g_identity(B, R)
    forged = GArr(a.dom, a.cod, a.f, a.u, a.primary, None)
    assert a == forged
    assert hash(a) == hash(forged)


def test_primary_and_secondary_views_agree():
    rng = random.Random(3)
    for B in INSTANCES:
        done = 0
        while done < 15:
            X, Y = carrier(rng, "x", 3), carrier(rng, "y", 3)
            A, C = carrier(rng, "a", 3), carrier(rng, "c", 3)
            f = map_cell(B, rng, X, Y)
            u = map_cell(B, rng, A, C)
            if f is None or u is None:
                continue
            R = one_cell(B, rng, X, A, 3)
            S = one_cell(B, rng, Y, C, 3)
            cells = list(B.hom_cells(B.comp(R, u), B.comp(f, S)))
            if not cells:
                continue
            a = garr_from_primary(B, R, S, f, u, cells[0])
            again = garr_from_secondary(B, R, S, f, u, a.secondary)
            assert again.primary == a.primary
            assert again == a
            done += 1


def test_square_constructor_rejections():
    B = rel_instance()
    X = FinSet(("x0", "x1"))
    A = FinSet(("a0",))
    R = Rel(X, A, (("x0", "a0"),))
    partial = Rel(X, X, (("x0", "x0"),))
    with pytest.raises(NotAMap):
        garr_from_primary(B, R, R, partial, B.identity(A), B.id2(R))
    with pytest.raises(ValueError):
        # Identity filler has the wrong boundary once a frame is not identity.
        garr_from_primary(B, B.identity(X), B.identity(X),
                          B.graph(SetFn.constant(X, X, "x0")),
                          B.identity(X), B.id2(B.identity(X)))


def test_map_arrow_squares_compose_like_maps():
    rng = random.Random(13)
    for B in INSTANCES:
        done = 0
        while done < 15:
            X, Y, Z = (carrier(rng, p, 3) for p in "xyz")
            f = map_cell(B, rng, X, Y, scramble=False)
            g = map_cell(B, rng, Y, Z, scramble=False)
            if f is None or g is None:
                continue
            composite = g_compose(B, g_map_arrow(B, f), g_map_arrow(B, g))
            assert composite == g_map_arrow(B, B.comp(f, g))
            done += 1


def test_compose_and_paste_boundaries():
    rng = random.Random(23)
    for B in INSTANCES:
        done = 0
        while done < 10:
            X = carrier(rng, "x", 3)
            A = carrier(rng, "a", 3)
            C = carrier(rng, "c", 3)
            R = one_cell(B, rng, X, A, 3)
            S = one_cell(B, rng, A, C, 3)
            a1 = _inclusion_square(B, rng, R)
            a2 = _inclusion_square(B, rng, a1.cod)
            h = g_compose(B, a1, a2)
            assert h.dom == R and h.cod == a2.cod
            assert h.f == B.identity(X) and h.u == B.identity(A)
            b1 = _inclusion_square(B, rng, S)
            stacked = paste_vertical(B, a1, b1)
            assert stacked.dom == B.comp(R, S)
            assert stacked.cod == B.comp(a1.cod, b1.cod)
            done += 1
        with pytest.raises(ValueError):
            g_compose(B, a1, b1)
        with pytest.raises(ValueError):
            paste_vertical(B, a1, a2)


def test_square_two_cells_validate_and_compose():
    rng = random.Random(33)
    for B in INSTANCES:
        done = 0
        while done < 10:
            X = carrier(rng, "x", 2)
            A = carrier(rng, "a", 2)
            R = one_cell(B, rng, X, A, 2)
            a = _inclusion_square(B, rng, R)
            ident = g_cell(B, a, a, B.id2(a.f), B.id2(a.u))
            assert g_cell_invertible(B, ident)
            assert g_vcomp(B, ident, ident) == ident
            done += 1
        # Mismatched frame cells must be refused.
        X = FinSet(("x0", "x1"))
        R = B.identity(X)
        swap = B.graph(SetFn(X, X, ("x1", "x0")))
        a = g_identity(B, R)
        b = garr_from_primary(B, R, R, swap, swap,
                              next(iter(B.hom_cells(B.comp(R, swap),
                                                    B.comp(swap, R)))))
        with pytest.raises(ValueError):
            g_cell(B, a, b, B.id2(a.f), B.id2(a.u))


def test_equivalence_report():
    B = span_instance()
    X = FinSet(("x0", "x1"))
    R = B.identity(X)
    report = g_is_equivalence(B, g_identity(B, R))
    assert report == {"f": True, "u": True, "cell": True}
    report = g_is_equivalence(B, g_bang(B, R))
    assert report["cell"] is True
    assert report["f"] is False and report["u"] is False


def test_tensor_projection_squares():
    rng = random.Random(43)
    for B in INSTANCES:
        done = 0
        while done < 8:
            X, Y = carrier(rng, "x", 2), carrier(rng, "y", 2)
            A, C = carrier(rng, "a", 2), carrier(rng, "c", 2)
            R = one_cell(B, rng, X, A, 2)
            S = one_cell(B, rng, Y, C, 2)
            tens = g_tensor(B, R, S)
            assert tens.obj.source == X.product(Y)
            assert tens.obj.target == A.product(C)
            assert tens.proj1.cod == R and tens.proj2.cod == S
            assert tens.proj1.f == tens.src_cone.legs[0]
            assert tens.proj2.u == tens.tgt_cone.legs[1]
            done += 1


def test_pairing_the_projections_gives_the_identity_square():
    rng = random.Random(53)
    for B in INSTANCES:
        done = 0
        while done < 8:
            X, Y = carrier(rng, "x", 2), carrier(rng, "y", 2)
            A, C = carrier(rng, "a", 2), carrier(rng, "c", 2)
            R = one_cell(B, rng, X, A, 2)
            S = one_cell(B, rng, Y, C, 2)
            tens = g_tensor(B, R, S)
            arrow, c1, c2 = g_pair(B, tens, tens.proj1, tens.proj2)
            assert arrow == g_identity(B, tens.obj)
            assert g_cell_invertible(B, c1) and g_cell_invertible(B, c2)
            done += 1


def test_pair_rejects_malformed_cones():
    B = rel_instance()
    X = FinSet(("x0",))
    A = FinSet(("a0", "a1"))
    R = Rel(X, A, (("x0", "a0"),))
    S = Rel(X, A, (("x0", "a1"),))
    tens = g_tensor(B, R, S)
    with pytest.raises(ValueError):
        g_pair(B, tens, tens.proj2, tens.proj1)
    other = g_identity(B, B.identity(X))
    with pytest.raises(ValueError):
        g_pair(B, tens, tens.proj1, other)
    assert issubclass(GPairError, ValueError)


def test_terminal_and_bang():
    for B in INSTANCES:
        assert g_terminal(B) == B.identity(UNIT)
        X = FinSet(("x0", "x1"))
        A = FinSet(("a0",))
        R = B.graph(SetFn.constant(X, A, "a0"))
        sq = g_bang(B, R)
        assert sq.dom == R and sq.cod == g_terminal(B)
        assert sq.secondary == B.tau(R)


def test_diagonal_square_and_unit_comparison():
    rng = random.Random(63)
    for B in INSTANCES:
        done = 0
        while done < 6:
            X = carrier(rng, "x", 2)
            A = carrier(rng, "a", 2)
            R = one_cell(B, rng, X, A, 2)
            S = one_cell(B, rng, X, A, 2)
            d = g_diag(B, R)
            assert d.dom == R and d.cod == g_tensor(B, R, R).obj
            iso = dunit_iso(B, R, S)
            assert B.is_invertible(iso)
            assert iso.cod == B.local_product(R, S).product
            done += 1
        with pytest.raises(ValueError):
            dunit_iso(B, B.identity(FinSet(("x0",))),
                      B.identity(FinSet(("y0",))))
