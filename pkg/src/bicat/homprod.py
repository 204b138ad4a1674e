"""Finite products inside each hom-category.

Parallel 1-cells R, S have a chosen binary product ("wedge") R /\\ S and a
chosen terminal 1-cell, both supplied by the instance; this module wraps the
chosen data in a witness carrying the two projections and the mediating-cell
constructor, provides the derived cells (diagonal, terminal cell, functorial
action on 2-cell pairs), and checks universal properties by brute force:
enumerate every candidate mediating 2-cell and count the ones that commute.
At the carrier sizes used in tests the enumeration is exact, so "unique" in
the reports means literally one candidate out of all of them.
"""

from __future__ import annotations

from typing import Callable


class LocalProductWitness:
    """A chosen binary product in a hom-category.

    ``pair(phi, psi)`` builds the mediating 2-cell of a cone; the witness is
    only as trustworthy as the checks run against it, which is the point.
    """

    __slots__ = ("product", "proj1", "proj2", "pair")

    def __init__(self, product, proj1, proj2, pair: Callable):
        self.product = product
        self.proj1 = proj1
        self.proj2 = proj2
        self.pair = pair


def local_product(B, R, S) -> LocalProductWitness:
    return B.local_product(R, S)


def local_terminal(B, source, target):
    return B.local_terminal(source, target)


def tau(B, R):
    """The canonical 2-cell into the chosen local terminal."""
    return B.tau(R)


def delta(B, R):
    """The diagonal ``R -> R /\\ R``."""
    w = B.local_product(R, R)
    return w.pair(B.id2(R), B.id2(R))


def wedge_cell(B, alpha, beta):
    """The functorial action on a pair of 2-cells.

    Given ``alpha : R -> R'`` and ``beta : S -> S'`` this is the unique cell
    ``R /\\ S -> R' /\\ S'`` commuting with both projections.
    """
    w_dom = B.local_product(alpha.dom, beta.dom)
    w_cod = B.local_product(alpha.cod, beta.cod)
    return w_cod.pair(B.vcomp(w_dom.proj1, alpha),
                      B.vcomp(w_dom.proj2, beta))


def transport_hom(B, f, S, u_star):
    """The hom-functor induced by a map on each side: ``S |-> u* . S . f``
    written diagrammatically as ``comp(f, comp(S, u*))``."""
    return B.comp(f, B.comp(S, u_star))


def transport_cell(B, f, alpha, u_star):
    return B.whisker_left(f, B.whisker_right(alpha, u_star))


def is_product_diagram(B, W, proj1, proj2, R, S, tests, budget: int = 200_000):
    """Check the universal property of a candidate product diagram exactly.

    For every test 1-cell T and every cone ``(phi : T -> R, psi : T -> S)``,
    enumerate all 2-cells ``T -> W`` and count those whose composites with
    the projections recover the cone.  Returns ``None`` on success, or a
    violation record naming the first failing cone.
    """
    for T in tests:
        for phi in B.hom_cells(T, R, budget):
            for psi in B.hom_cells(T, S, budget):
                mediating = [
                    g for g in B.hom_cells(T, W, budget)
                    if B.vcomp(g, proj1) == phi and B.vcomp(g, proj2) == psi
                ]
                if len(mediating) != 1:
                    return {
                        "test": T,
                        "cone": (phi, psi),
                        "count": len(mediating),
                    }
    return None


def is_terminal_cell_unique(B, top, tests, budget: int = 200_000):
    """Check that each test 1-cell admits exactly one 2-cell into ``top``."""
    for T in tests:
        cells = list(B.hom_cells(T, top, budget))
        if len(cells) != 1:
            return {"test": T, "count": len(cells)}
    return None
