"""Finite products in the subbicategory of maps.

Maps (spans with bijective left leg, graphs of functions for relations) form
a category-like layer where binary products are carrier products, the
terminal object is the unit carrier, and pairings are built pointwise.  The
constructions here are chosen so that on canonical graph maps everything is
strict: pairing constraint cells, projection composites and naturality
squares of the terminal and diagonal transformations all come out as
identity 2-cells.  A checker validates arbitrary candidate cones by brute
force, which is what gives the negative controls teeth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from .fin import FinSet, SetFn, UNIT, all_functions


class NotAMap(ValueError):
    pass


class FillError(ValueError):
    def __init__(self, kind: str, detail: str = ""):
        super().__init__("%s%s" % (kind, ": " + detail if detail else ""))
        self.kind = kind


@dataclass(frozen=True)
class ProductCone:
    vertex: FinSet
    legs: tuple
    factors: tuple


@dataclass(frozen=True)
class PseudoNatCell:
    """One naturality square of a transformation whose components are maps."""
    arrow: Any
    dom: Any
    cod: Any
    cell: Any


def _require_map(B, m):
    if not m.is_map():
        raise NotAMap("expected a map 1-cell")
    return m


def map_fn(m) -> SetFn:
    return m.fn()


def maps_isomorphic(m1, m2) -> bool:
    """Maps are isomorphic exactly when their underlying functions agree."""
    return m1.fn() == m2.fn()


def map_iso(B, m1, m2):
    """The unique invertible 2-cell between isomorphic maps.

    Identity on the nose when both maps are canonical graphs.
    """
    if not maps_isomorphic(m1, m2):
        raise ValueError("maps are not isomorphic")
    if B.name == "rel":
        return B.cell(m1, m2)
    back = m2.left.inverse()
    return B.cell_from_callable(m1, m2, lambda s: back(m1.left(s)))


# --- canonical cones --------------------------------------------------------

def product_object(B, X: FinSet, Y: FinSet) -> ProductCone:
    vertex = X.product(Y)
    p = B.graph(SetFn(vertex, X, (x for (x, y) in vertex)))
    r = B.graph(SetFn(vertex, Y, (y for (x, y) in vertex)))
    return ProductCone(vertex, (p, r), (X, Y))


def terminal(B) -> ProductCone:
    return ProductCone(UNIT, (), ())


def nary_product(B, objs) -> ProductCone:
    """Iterated binary product with flattened projection legs."""
    objs = tuple(objs)
    if not objs:
        return terminal(B)
    cone = ProductCone(objs[0], (B.identity(objs[0]),), (objs[0],))
    for Y in objs[1:]:
        step = product_object(B, cone.vertex, Y)
        legs = tuple(B.comp(step.legs[0], leg) for leg in cone.legs)
        cone = ProductCone(step.vertex, legs + (step.legs[1],),
                           cone.factors + (Y,))
    return cone


def pairing(B, f, g):
    """``(f, g) -> <f,g>`` into the canonical product of the targets.

    Returns the pairing map and the two constraint cells
    ``comp(<f,g>, p) -> f`` and ``comp(<f,g>, r) -> g``; both are identities
    when f and g are canonical graphs.
    """
    _require_map(B, f)
    _require_map(B, g)
    if f.source != g.source:
        raise ValueError("pairing of maps with different sources")
    cone = product_object(B, f.target, g.target)
    ffn, gfn = f.fn(), g.fn()
    h = B.graph(SetFn(f.source, cone.vertex,
                      ((ffn(a), gfn(a)) for a in f.source)))
    mu = map_iso(B, B.comp(h, cone.legs[0]), f)
    nu = map_iso(B, B.comp(h, cone.legs[1]), g)
    return h, mu, nu


def times_on_arrows(B, f, g):
    """The product of two maps, ``X x Y -> A x B`` pointwise."""
    _require_map(B, f)
    _require_map(B, g)
    src = f.source.product(g.source)
    tgt = f.target.product(g.target)
    ffn, gfn = f.fn(), g.fn()
    return B.graph(SetFn(src, tgt, ((ffn(x), gfn(y)) for (x, y) in src)))


def bang(B, X: FinSet):
    """The terminal map ``t_X : X -> I``."""
    return B.graph(SetFn.constant(X, UNIT, "*"))


def bang_nat(B, f) -> PseudoNatCell:
    """Naturality square of the terminal transformation at a map."""
    _require_map(B, f)
    dom = B.comp(f, bang(B, f.target))
    cod = bang(B, f.source)
    return PseudoNatCell(f, dom, cod, map_iso(B, dom, cod))


def diag(B, X: FinSet):
    """The diagonal map ``d_X : X -> X x X``."""
    one = B.identity(X)
    h, _, _ = pairing(B, one, one)
    return h


def diag_nat(B, f) -> PseudoNatCell:
    """Naturality square of the diagonal at a map: ``d . f`` against
    ``(f x f) . d``."""
    _require_map(B, f)
    dom = B.comp(f, diag(B, f.target))
    cod = B.comp(diag(B, f.source), times_on_arrows(B, f, f))
    return PseudoNatCell(f, dom, cod, map_iso(B, dom, cod))


# --- fills against the canonical binary cone --------------------------------

def fill2(B, T, U, alpha, beta, cone: ProductCone):
    """The unique ``gamma : T -> U`` with ``gamma . p = alpha`` and
    ``gamma . r = beta`` (whiskering with the projections), for arbitrary
    parallel 1-cells into a canonical binary product.

    The projections pin the fill pointwise, so failure is always
    ``no-solution``; ``non-unique`` is reserved for degenerate cones that
    cannot arise from :func:`product_object`.
    """
    p, r = cone.legs
    if T.source != U.source or T.target != U.target or T.target != cone.vertex:
        raise ValueError("fill boundary mismatch")
    if alpha.dom != B.comp(T, p) or alpha.cod != B.comp(U, p):
        raise ValueError("first cone cell has the wrong boundary")
    if beta.dom != B.comp(T, r) or beta.cod != B.comp(U, r):
        raise ValueError("second cone cell has the wrong boundary")
    gamma = B.fill_pair_cone(T, U, alpha, beta, p, r)
    if B.whisker_right(gamma, p) != alpha or B.whisker_right(gamma, r) != beta:
        raise FillError("no-solution", "candidate fill fails the cone equations")
    return gamma


def check_product_cone(B, cone: ProductCone, bound: int):
    """Validate a candidate product cone by exhaustive finite search.

    Essential surjectivity of the comparison uses test carriers of size up
    to ``bound``; fullness and faithfulness use size up to ``min(bound, 2)``
    to keep the pair enumeration exact but small.  Returns ``None`` when the
    cone is a product, else a violation record.
    """
    for leg in cone.legs:
        if not leg.is_map():
            return {"kind": "leg-not-a-map", "leg": leg}

    for n in range(bound + 1):
        A = FinSet("a%d" % i for i in range(n))
        reachable = {}
        for h in all_functions(A, cone.vertex):
            hm = B.graph(h)
            key = tuple(B.comp(hm, leg).fn() for leg in cone.legs)
            reachable.setdefault(key, hm)
        for fns in itertools.product(
                *(tuple(all_functions(A, X)) for X in cone.factors)):
            if tuple(fns) not in reachable:
                return {
                    "kind": "not-essentially-surjective",
                    "test_carrier": A,
                    "cone_maps": tuple(fns),
                }

    for n in range(min(bound, 2) + 1):
        A = FinSet("a%d" % i for i in range(n))
        maps = [B.graph(h) for h in all_functions(A, cone.vertex)]
        for Tm in maps:
            for Um in maps:
                direct = list(B.hom_cells(Tm, Um))
                legwise = [
                    list(B.hom_cells(B.comp(Tm, leg), B.comp(Um, leg)))
                    for leg in cone.legs
                ]
                combined = 1
                for cells in legwise:
                    combined *= len(cells)
                if len(direct) > 1 or combined > 1:
                    # Maps have at most one 2-cell between them here; any
                    # other count means the enumeration itself broke.
                    return {"kind": "hom-enumeration-broken", "pair": (Tm, Um)}
                if len(direct) != combined:
                    return {
                        "kind": "not-fully-faithful",
                        "pair": (Tm, Um),
                        "direct": len(direct),
                        "through_legs": combined,
                    }
    return None
