"""The arrow layer: squares over map frames and their product structure.

An object here is exactly a 1-cell of the base instance (no wrapper type).
An arrow ``R => S`` is a square: two map frames ``f`` (between the sources)
and ``u`` (between the targets) plus a 2-cell filling it.  The filler is
kept in two interchangeable forms, cached in lock step:

* primary   ``comp(R, u) -> comp(f, S)``
* secondary ``R -> comp(f, comp(S, u*))``

where ``u*`` is the right adjoint of ``u``; passing between the two is the
mate construction and is exact, so either form may be trusted.

Squares compose two ways.  :func:`g_compose` composes along the frames
(source objects stay 1-cells, frames compose as maps); :func:`paste_vertical`
composes along the objects (frames in the middle must agree, the objects
compose in the base).  2-cells between parallel squares are frame-cell pairs
subject to one pasting equation, checked at construction.

The product structure: :func:`g_tensor` builds ``R (x) S`` as the local
wedge of the two frame-transported factors, with projection squares framed
by the carrier projections; :func:`g_pair` mediates an arbitrary cone
through it and is the workhorse every constraint cell downstream is built
from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import kernel
from .kernel import (Adjunction, compose_adjunctions, mate_to_primary,
                     mate_to_secondary, right_mate_of_map_cell)
from .homprod import transport_cell, transport_hom
from .mapprod import NotAMap, map_iso, product_object


class GPairError(ValueError):
    def __init__(self, kind: str, detail: str = ""):
        super().__init__("%s%s" % (kind, ": " + detail if detail else ""))
        self.kind = kind


@dataclass(frozen=True, eq=False)
class GArr:
    """A square between 1-cells ``dom`` and ``cod`` of the base instance."""
    dom: Any
    cod: Any
    f: Any
    u: Any
    primary: Any
    secondary: Any

    def __eq__(self, other):
        return (isinstance(other, GArr) and self.dom == other.dom
                and self.cod == other.cod and self.f == other.f
                and self.u == other.u and self.primary == other.primary)

    def __hash__(self):
        return hash((self.dom, self.cod, self.f, self.u, self.primary))


@dataclass(frozen=True, eq=False)
class GCell:
    """A 2-cell between parallel squares: a pair of frame cells."""
    dom: GArr
    cod: GArr
    phi: Any
    psi: Any

    def __eq__(self, other):
        return (isinstance(other, GCell) and self.dom == other.dom
                and self.cod == other.cod and self.phi == other.phi
                and self.psi == other.psi)

    def __hash__(self):
        return hash((self.dom, self.cod, self.phi, self.psi))


def frame_adjunction(B, u) -> Adjunction:
    return B.map_adjunction(u)


def garr_from_primary(B, dom, cod, f, u, primary) -> GArr:
    if not f.is_map() or not u.is_map():
        raise NotAMap("square frames must be maps")
    if primary.dom != B.comp(dom, u) or primary.cod != B.comp(f, cod):
        raise ValueError("primary cell boundary does not match the square")
    adj = frame_adjunction(B, u)
    secondary = mate_to_secondary(B, primary, dom, cod, f, adj)
    return GArr(dom, cod, f, u, primary, secondary)


def garr_from_secondary(B, dom, cod, f, u, secondary) -> GArr:
    if not f.is_map() or not u.is_map():
        raise NotAMap("square frames must be maps")
    adj = frame_adjunction(B, u)
    expected = B.comp(f, B.comp(cod, adj.right))
    if secondary.dom != dom or secondary.cod != expected:
        raise ValueError("secondary cell boundary does not match the square")
    primary = mate_to_primary(B, secondary, dom, cod, f, adj)
    return GArr(dom, cod, f, u, primary, secondary)


def g_identity(B, R) -> GArr:
    one_s = B.identity(R.source)
    one_t = B.identity(R.target)
    return garr_from_primary(B, R, R, one_s, one_t, B.id2(R))


def g_map_arrow(B, f) -> GArr:
    """The canonical square of a map: identity objects, both frames ``f``,
    identity filler."""
    one_s = B.identity(f.source)
    one_t = B.identity(f.target)
    return garr_from_primary(B, one_s, one_t, f, f, B.id2(f))


def g_compose(B, a1: GArr, a2: GArr) -> GArr:
    """Compose squares along the frames: ``R => S => T`` becomes ``R => T``
    over ``comp(f1, f2)`` and ``comp(u1, u2)``."""
    if a1.cod != a2.dom:
        raise ValueError("squares are not composable along the frames")
    R, S, T = a1.dom, a1.cod, a2.cod
    f = B.comp(a1.f, a2.f)
    u = B.comp(a1.u, a2.u)
    primary = B.vc(
        B.assoc_inv(R, a1.u, a2.u),
        B.whisker_right(a1.primary, a2.u),
        B.assoc(a1.f, S, a2.u),
        B.whisker_left(a1.f, a2.primary),
        B.assoc_inv(a1.f, a2.f, T),
    )
    return garr_from_primary(B, R, T, f, u, primary)


def paste_vertical(B, a1: GArr, a2: GArr) -> GArr:
    """Compose squares along the objects: ``R => R'`` above ``S => S'``
    (matching middle frame) becomes ``comp(R, S) => comp(R', S')``."""
    if a1.u != a2.f:
        raise ValueError("squares do not share the middle frame")
    if a1.dom.target != a2.dom.source or a1.cod.target != a2.cod.source:
        raise ValueError("squares are not stacked over composable objects")
    R, R2 = a1.dom, a1.cod
    S, S2 = a2.dom, a2.cod
    mid = a1.u
    primary = B.vc(
        B.assoc(R, S, a2.u),
        B.whisker_left(R, a2.primary),
        B.assoc_inv(R, mid, S2),
        B.whisker_right(a1.primary, S2),
        B.assoc(a1.f, R2, S2),
    )
    return garr_from_primary(B, B.comp(R, S), B.comp(R2, S2),
                             a1.f, a2.u, primary)


def g_cell(B, dom: GArr, cod: GArr, phi, psi) -> GCell:
    """Validate and build a 2-cell between parallel squares.

    The defining equation: pasting ``psi`` into the domain square's filler
    agrees with pasting ``phi`` into the codomain square's filler.
    """
    if dom.dom != cod.dom or dom.cod != cod.cod:
        raise ValueError("squares are not parallel")
    if phi.dom != dom.f or phi.cod != cod.f:
        raise ValueError("first frame cell has the wrong boundary")
    if psi.dom != dom.u or psi.cod != cod.u:
        raise ValueError("second frame cell has the wrong boundary")
    lhs = B.vcomp(B.whisker_left(dom.dom, psi), cod.primary)
    rhs = B.vcomp(dom.primary, B.whisker_right(phi, dom.cod))
    if lhs != rhs:
        raise ValueError("frame cells do not satisfy the square equation")
    return GCell(dom, cod, phi, psi)


def g_vcomp(B, c1: GCell, c2: GCell) -> GCell:
    if c1.cod != c2.dom:
        raise ValueError("square 2-cells are not composable")
    return g_cell(B, c1.dom, c2.cod,
                  B.vcomp(c1.phi, c2.phi), B.vcomp(c1.psi, c2.psi))


def g_cell_invertible(B, c: GCell) -> bool:
    return B.is_invertible(c.phi) and B.is_invertible(c.psi)


def g_is_equivalence(B, a: GArr):
    """A square is an equivalence precisely when both frames are
    equivalences and its filler is invertible.  Returns a report dict."""
    return {
        "f": kernel.find_equivalence(B, a.f) is not None,
        "u": kernel.find_equivalence(B, a.u) is not None,
        "cell": B.is_invertible(a.primary),
    }


# --- tensor ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TensorWitness:
    """The chosen tensor of two objects with its projection squares."""
    obj: Any
    proj1: GArr
    proj2: GArr
    factor1: Any
    factor2: Any
    wedge: Any          # LocalProductWitness for the two transported factors
    src_cone: Any       # canonical product cone of the source carriers
    tgt_cone: Any       # canonical product cone of the target carriers


def g_tensor(B, R, S) -> TensorWitness:
    """``R (x) S``: the local product of the two projection-transported
    factors, with its projection squares framed by the carrier projections."""
    src = product_object(B, R.source, S.source)
    tgt = product_object(B, R.target, S.target)
    p_s, r_s = src.legs
    p_t, r_t = tgt.legs
    adj_pt = frame_adjunction(B, p_t)
    adj_rt = frame_adjunction(B, r_t)
    C1 = transport_hom(B, p_s, R, adj_pt.right)
    C2 = transport_hom(B, r_s, S, adj_rt.right)
    wedge = B.local_product(C1, C2)
    obj = wedge.product
    proj1 = garr_from_secondary(B, obj, R, p_s, p_t, wedge.proj1)
    proj2 = garr_from_secondary(B, obj, S, r_s, r_t, wedge.proj2)
    return TensorWitness(obj, proj1, proj2, R, S, wedge, src, tgt)


def g_pair(B, tens: TensorWitness, aR: GArr, aS: GArr, frame=None):
    """Mediate a cone through the tensor.

    ``aR : T => R`` and ``aS : T => S`` share their domain object; ``frame``
    optionally supplies ``(h, w, mu0, mu1, nu0, nu1)`` where ``h`` and ``w``
    pair the frames and the invertible cells compare the projected frames
    with the cone's (all identities for canonical graph frames, which is
    what the default builds).  Returns ``(arrow, cell_R, cell_S)`` where the
    cells exhibit the two projection composites as the given cone legs.

    Failure of existence or of invertibility of the transported-wedge
    comparison is an instance invariant violation and raises
    :class:`GPairError`.
    """
    if aR.dom != aS.dom:
        raise ValueError("cone legs have different domain objects")
    if aR.cod != tens.factor1 or aS.cod != tens.factor2:
        raise ValueError("cone legs do not land in the tensor factors")
    T0 = aR.dom
    p_s, r_s = tens.src_cone.legs
    p_t, r_t = tens.tgt_cone.legs

    if frame is None:
        from .mapprod import pairing
        h, mu0, nu0 = pairing(B, aR.f, aS.f)
        w, mu1, nu1 = pairing(B, aR.u, aS.u)
    else:
        h, w, mu0, mu1, nu0, nu1 = frame
        if mu0.dom != B.comp(h, p_s) or mu0.cod != aR.f:
            raise ValueError("mu0 must compare comp(h, p) with the first frame")
        if mu1.dom != B.comp(w, p_t) or mu1.cod != aR.u:
            raise ValueError("mu1 must compare comp(w, p) with the first frame")
        if nu0.dom != B.comp(h, r_s) or nu0.cod != aS.f:
            raise ValueError("nu0 must compare comp(h, r) with the second frame")
        if nu1.dom != B.comp(w, r_t) or nu1.cod != aS.u:
            raise ValueError("nu1 must compare comp(w, r) with the second frame")
    for c in (mu0, mu1, nu0, nu1):
        if not B.is_invertible(c):
            raise ValueError("frame comparison cells must be invertible")

    adj_w = frame_adjunction(B, w)
    ws = adj_w.right

    c1 = _transport_cone_leg(B, aR, h, w, adj_w, mu0, mu1, p_s, p_t, tens.factor1)
    c2 = _transport_cone_leg(B, aS, h, w, adj_w, nu0, nu1, r_s, r_t, tens.factor2)

    # The transported tensor must still be a wedge of the transported
    # factors; the comparison into the canonical wedge witnesses that.
    Phi_tensor = transport_hom(B, h, tens.obj, ws)
    W0 = B.local_product(c1.cod, c2.cod)
    e = W0.pair(transport_cell(B, h, tens.wedge.proj1, ws),
                transport_cell(B, h, tens.wedge.proj2, ws))
    if e.dom != Phi_tensor:
        raise GPairError("no-solution", "transported wedge comparison is ill-typed")
    if not B.is_invertible(e):
        raise GPairError(
            "instance-invariant-violation",
            "frame transport does not preserve the local product")

    gamma_sec = B.vcomp(W0.pair(c1, c2), B.invert(e))
    arrow = garr_from_secondary(B, T0, tens.obj, h, w, gamma_sec)

    try:
        cell_R = g_cell(B, g_compose(B, arrow, tens.proj1), aR, mu0, mu1)
        cell_S = g_cell(B, g_compose(B, arrow, tens.proj2), aS, nu0, nu1)
    except ValueError as exc:
        raise GPairError("no-solution",
                         "mediating square fails the projection equations"
                         " (%s)" % exc) from None
    return arrow, cell_R, cell_S


def _transport_cone_leg(B, a: GArr, h, w, adj_w, iso0, iso1, p_src, p_tgt, factor):
    """Rewrite a cone leg's secondary cell as a cell into the transported
    factor ``comp(h, comp(comp(p_src, comp(factor, p_tgt*)), w*))``."""
    adj_pt = frame_adjunction(B, p_tgt)
    adj_u = frame_adjunction(B, a.u)
    adj_wp = compose_adjunctions(B, adj_w, adj_pt)
    pts, ws = adj_pt.right, adj_w.right
    # iso1* : u* -> comp(p_tgt*, w*)
    iso1_star = right_mate_of_map_cell(B, iso1, adj_wp, adj_u)
    rest = B.comp(B.comp(factor, pts), ws)
    return B.vc(
        a.secondary,
        B.whisker_left(a.f, B.whisker_left(factor, iso1_star)),
        B.whisker_left(a.f, B.assoc_inv(factor, pts, ws)),
        B.whisker_right(B.invert(iso0), rest),
        B.assoc(h, p_src, rest),
        B.whisker_left(h, B.assoc_inv(p_src, B.comp(factor, pts), ws)),
    )


# --- terminal object, diagonal, local/global comparison ---------------------

def g_terminal(B):
    """The chosen terminal object: the identity on the unit carrier, which
    is also the chosen local terminal there."""
    from .fin import UNIT
    return B.identity(UNIT)


def g_bang(B, R) -> GArr:
    """The canonical square ``R => terminal`` framed by the terminal maps.

    Its secondary cell is exactly the local terminal cell, because the
    composite of the two terminal frames around the unit identity is the
    chosen local terminal on the nose.
    """
    from .mapprod import bang
    t_src = bang(B, R.source)
    t_tgt = bang(B, R.target)
    return garr_from_secondary(B, R, g_terminal(B), t_src, t_tgt, B.tau(R))


def g_diag(B, R) -> GArr:
    """The diagonal square ``R => R (x) R`` via the canonical pairing of two
    identity squares."""
    tens = g_tensor(B, R, R)
    one = g_identity(B, R)
    arrow, _, _ = g_pair(B, tens, one, one)
    return arrow


def dunit_iso(B, R, S):
    """The canonical invertible comparison between the local wedge and the
    diagonal-conjugated tensor: ``d_A* . (R (x) S) . d_X  ~  R /\\ S``."""
    if R.source != S.source or R.target != S.target:
        raise ValueError("comparison requires parallel 1-cells")
    from .mapprod import diag
    tens = g_tensor(B, R, S)
    d_src = diag(B, R.source)
    d_tgt = diag(B, R.target)
    adj_d = frame_adjunction(B, d_tgt)
    D = transport_hom(B, d_src, tens.obj, adj_d.right)
    w = B.local_product(R, S)
    c1 = _collapse_diag_leg(B, tens, 0, d_src, d_tgt, adj_d, R)
    c2 = _collapse_diag_leg(B, tens, 1, d_src, d_tgt, adj_d, S)
    if c1.dom != D or c2.dom != D:
        raise ValueError("diagonal transport produced unexpected boundaries")
    iso = w.pair(c1, c2)
    if not B.is_invertible(iso):
        raise ValueError("local wedge and conjugated tensor are not isomorphic")
    return iso


def _collapse_diag_leg(B, tens: TensorWitness, side: int, d_src, d_tgt, adj_d, factor):
    """``comp(d, comp(tensor, d*)) -> factor`` through one projection."""
    proj = (tens.wedge.proj1, tens.wedge.proj2)[side]
    p_s = tens.src_cone.legs[side]
    p_t = tens.tgt_cone.legs[side]
    adj_pt = frame_adjunction(B, p_t)
    pts, ds = adj_pt.right, adj_d.right
    # comp(d, p) is an identity map, so the composite adjunction's counit
    # contracts comp(p*, d*) onto the identity.
    zeta = compose_adjunctions(B, adj_d, adj_pt).counit
    inner = B.comp(factor, pts)
    return B.vc(
        B.whisker_left(d_src, B.whisker_right(proj, ds)),
        B.whisker_left(d_src, B.assoc(p_s, inner, ds)),
        B.assoc_inv(d_src, p_s, B.comp(inner, ds)),
        B.assoc(factor, pts, ds),
        B.whisker_left(factor, zeta),
    )
