"""The tensor as a lax structure on the base instance, and its comparisons.

Tensoring objects is :func:`bicat.groth.g_tensor`; this module derives the
rest: the action on 2-cells, the unit and composition constraint cells
(both produced by pairing canonical cones, so existence and uniqueness come
from the universal property rather than ad hoc formulas), the lax functor
axioms, the comparison between carrier products and tensors of maps, and
the invertibility results that make the structure cartesian rather than
merely lax: projection fillers on identity factors, Beck-style conjugates,
composites with map frames, and the degenerate tensor through the unit.

Everything returns plain 2-cells or small report dicts; invertibility is
always decided by the instance (bijective apex function, or boundary
equality for relations), never by search.
"""

from __future__ import annotations

from .fin import UNIT
from .homprod import transport_cell, transport_hom
from .kernel import compose_adjunctions
from .mapprod import map_iso, times_on_arrows
from . import groth
from .groth import (frame_adjunction, g_identity, g_map_arrow, g_pair,
                    g_tensor, garr_from_primary, paste_vertical)


# --- the tensor on 2-cells ---------------------------------------------------

def tensor_2cells(B, alpha, beta):
    """``alpha (x) beta``: the wedge-functorial action on a pair of 2-cells.

    Characterized by commuting with both tensor projections; here it is
    built as the unique wedge cell over the two transported arguments.
    """
    t_dom = g_tensor(B, alpha.dom, beta.dom)
    t_cod = g_tensor(B, alpha.cod, beta.cod)
    p_s, r_s = t_dom.src_cone.legs
    p_t, r_t = t_dom.tgt_cone.legs
    pa = transport_cell(B, p_s, alpha, frame_adjunction(B, p_t).right)
    pb = transport_cell(B, r_s, beta, frame_adjunction(B, r_t).right)
    return t_cod.wedge.pair(B.vcomp(t_dom.wedge.proj1, pa),
                            B.vcomp(t_dom.wedge.proj2, pb))


def tensor_unit_cell(B, X, Y):
    """The nullary constraint ``1_{XxY} -> 1_X (x) 1_Y`` of the tensor."""
    tens = g_tensor(B, B.identity(X), B.identity(Y))
    aR = g_map_arrow(B, tens.src_cone.legs[0])
    aS = g_map_arrow(B, tens.src_cone.legs[1])
    arrow, _, _ = g_pair(B, tens, aR, aS)
    return arrow.primary


def tensor_comp_cell(B, R, S, T, U):
    """The binary constraint ``comp(R (x) S, T (x) U) ->
    comp(R, T) (x) comp(S, U)``."""
    t1 = g_tensor(B, R, S)
    t2 = g_tensor(B, T, U)
    target = g_tensor(B, B.comp(R, T), B.comp(S, U))
    aR = paste_vertical(B, t1.proj1, t2.proj1)
    aS = paste_vertical(B, t1.proj2, t2.proj2)
    arrow, _, _ = g_pair(B, target, aR, aS)
    return arrow.primary


def unit_functor_cells(B):
    """Constraint cells of the unit structure: both are the canonical cells
    into the chosen local terminal on the unit carrier, which is the
    identity 1-cell, so both are identity 2-cells."""
    top = B.local_terminal(UNIT, UNIT)
    comp_cell = B.tau(B.comp(top, top))
    unit_cell = B.tau(B.identity(UNIT))
    return unit_cell, comp_cell


# --- lax functor axioms ------------------------------------------------------

def lax_assoc_sides(B, R, S, T, U, V, W):
    """Both pastings of the associativity axiom for the tensor, as 2-cells
    ``comp(comp(R(x)S, T(x)U), V(x)W) -> comp(R,comp(T,V)) (x) comp(S,comp(U,W))``."""
    RS = g_tensor(B, R, S).obj
    TU = g_tensor(B, T, U).obj
    VW = g_tensor(B, V, W).obj
    RT, SU = B.comp(R, T), B.comp(S, U)
    TV, UW = B.comp(T, V), B.comp(U, W)

    lhs = B.vc(
        B.whisker_right(tensor_comp_cell(B, R, S, T, U), VW),
        tensor_comp_cell(B, RT, SU, V, W),
        tensor_2cells(B, B.assoc(R, T, V), B.assoc(S, U, W)),
    )
    rhs = B.vc(
        B.assoc(RS, TU, VW),
        B.whisker_left(RS, tensor_comp_cell(B, T, U, V, W)),
        tensor_comp_cell(B, R, S, TV, UW),
    )
    return lhs, rhs


def lax_unit_sides(B, R, S):
    """The two unit axioms; each returns ``(candidate, expected_identity)``."""
    tens = g_tensor(B, R, S)
    X, Y = R.source, S.source
    A, C = R.target, S.target
    left = B.vcomp(
        B.whisker_right(tensor_unit_cell(B, X, Y), tens.obj),
        tensor_comp_cell(B, B.identity(X), B.identity(Y), R, S),
    )
    right = B.vcomp(
        B.whisker_left(tens.obj, tensor_unit_cell(B, A, C)),
        tensor_comp_cell(B, R, S, B.identity(A), B.identity(C)),
    )
    return (left, B.id2(tens.obj)), (right, B.id2(tens.obj))


def tensor_naturality_holds(B, alpha, beta, gamma, delta) -> bool:
    """Naturality of the binary constraint in all four variables."""
    lhs = B.vcomp(
        tensor_comp_cell(B, alpha.dom, beta.dom, gamma.dom, delta.dom),
        tensor_2cells(B, B.hcomp(alpha, gamma), B.hcomp(beta, delta)),
    )
    rhs = B.vcomp(
        B.hcomp(tensor_2cells(B, alpha, beta), tensor_2cells(B, gamma, delta)),
        tensor_comp_cell(B, alpha.cod, beta.cod, gamma.cod, delta.cod),
    )
    return lhs == rhs


def tensor_functor_law_holds(B, a1, a2, b1, b2) -> bool:
    """``(a2.a1) (x) (b2.b1) == (a2 (x) b2) . (a1 (x) b1)`` plus identities."""
    lhs = tensor_2cells(B, B.vcomp(a1, a2), B.vcomp(b1, b2))
    rhs = B.vcomp(tensor_2cells(B, a1, b1), tensor_2cells(B, a2, b2))
    if lhs != rhs:
        return False
    ids = tensor_2cells(B, B.id2(a1.dom), B.id2(b1.dom))
    return ids == B.id2(g_tensor(B, a1.dom, b1.dom).obj)


# --- comparison between carrier products and tensors of maps ----------------

def m_cell(B, f, g):
    """``m'_{f,g} : f x g -> f (x) g`` comparing the product of maps with
    their tensor.  Invertible in both instances."""
    fg = times_on_arrows(B, f, g)
    tens = g_tensor(B, f, g)
    p_s, r_s = tens.src_cone.legs
    p_t, r_t = tens.tgt_cone.legs
    aR = garr_from_primary(B, fg, f, p_s, p_t,
                           map_iso(B, B.comp(fg, p_t), B.comp(p_s, f)))
    aS = garr_from_primary(B, fg, g, r_s, r_t,
                           map_iso(B, B.comp(fg, r_t), B.comp(r_s, g)))
    arrow, _, _ = g_pair(B, tens, aR, aS)
    return arrow.primary


def check_m(B, f, g, u, v):
    """The two coherence equations tying m' to the tensor constraints.

    Nullary: ``m'`` of two identities is the unit constraint.  Binary:
    pasting two m' cells horizontally and then the composition constraint
    equals the m' of the composites (the product-of-maps side needs no
    constraint cell because maps compose strictly).
    """
    X, Y = f.source, g.source
    nullary = m_cell(B, B.identity(X), B.identity(Y)) == tensor_unit_cell(B, X, Y)
    lhs = B.vcomp(B.hcomp(m_cell(B, f, g), m_cell(B, u, v)),
                  tensor_comp_cell(B, f, g, u, v))
    rhs = m_cell(B, B.comp(f, u), B.comp(g, v))
    binary = lhs == rhs
    return {"nullary": nullary, "binary": binary}


# --- cartesianness -----------------------------------------------------------

def precartesian_violation(B, pairs):
    """Probe the precartesian preconditions on sampled parallel pairs:
    local products and terminal cells must exist and their pairing must be
    unique on the projections.  Returns ``None`` or a violation record."""
    for R, S in pairs:
        try:
            w = B.local_product(R, S)
        except (ValueError, AttributeError) as exc:
            return {"kind": "precartesian", "what": "local-product",
                    "pair": (R, S), "error": str(exc)}
        if w.pair(w.proj1, w.proj2) != B.id2(w.product):
            return {"kind": "precartesian", "what": "pairing-not-unique",
                    "pair": (R, S)}
        try:
            cell = B.tau(R)
        except (ValueError, AttributeError) as exc:
            return {"kind": "precartesian", "what": "local-terminal",
                    "cell": R, "error": str(exc)}
        if cell.dom != R:
            return {"kind": "precartesian", "what": "terminal-cell-boundary",
                    "cell": R}
    return None


def is_cartesian(B, object_pairs, arrow_quads, parallel_pairs):
    """Decide cartesianness on the sampled data by explicit inverse search.

    ``object_pairs``: carrier pairs for the nullary constraint;
    ``arrow_quads``: (R, S, T, U) tuples for the binary constraint;
    ``parallel_pairs``: parallel 1-cell pairs for the preconditions.
    Precondition failures are reported distinctly from invertibility
    failures.
    """
    pre = precartesian_violation(B, parallel_pairs)
    if pre is not None:
        return {"ok": False, "violation": pre}
    for X, Y in object_pairs:
        cell = tensor_unit_cell(B, X, Y)
        if not B.is_invertible(cell):
            return {"ok": False,
                    "violation": {"kind": "unit-constraint", "objects": (X, Y)}}
    for R, S, T, U in arrow_quads:
        cell = tensor_comp_cell(B, R, S, T, U)
        if not B.is_invertible(cell):
            return {"ok": False,
                    "violation": {"kind": "comp-constraint",
                                  "cells": (R, S, T, U)}}
    unit_cell, comp_cell = unit_functor_cells(B)
    if not (B.is_invertible(unit_cell) and B.is_invertible(comp_cell)):
        return {"ok": False, "violation": {"kind": "unit-functor"}}
    return {"ok": True, "violation": None}


# --- special invertible cells ------------------------------------------------

def conjugate_cell(B, arr: groth.GArr):
    """The Beck-style conjugate of a square: transpose the secondary form
    across the source frame's adjunction, giving
    ``comp(f*, dom) -> comp(cod, u*)``."""
    adj_f = frame_adjunction(B, arr.f)
    adj_u = frame_adjunction(B, arr.u)
    fs = adj_f.right
    tail = B.comp(arr.cod, adj_u.right)
    return B.vc(
        B.whisker_left(fs, arr.secondary),
        B.assoc_inv(fs, arr.f, tail),
        B.whisker_right(adj_f.counit, tail),
    )


def projection_fillers(B, R, Y):
    """The two degenerate-factor projection fillers: the first projection
    of ``R (x) 1_Y`` and the second of ``1_Y (x) R``; both invertible."""
    t1 = g_tensor(B, R, B.identity(Y))
    t2 = g_tensor(B, B.identity(Y), R)
    return t1.proj1.primary, t2.proj2.primary


def prebeck_cell(B, R, Y):
    """The conjugate of the first projection of ``R (x) 1_Y``; invertible."""
    tens = g_tensor(B, R, B.identity(Y))
    return conjugate_cell(B, tens.proj1)


def adjoint_switch_iso(B, adj1, adj2):
    """Two adjunctions sharing their left 1-cell have canonically
    isomorphic rights: ``adj1.right -> adj2.right``."""
    if adj1.left != adj2.left:
        raise ValueError("adjunctions do not share the left 1-cell")
    R1, R2, L = adj1.right, adj2.right, adj1.left
    return B.vc(
        B.whisker_left(R1, adj2.unit),
        B.assoc_inv(R1, L, R2),
        B.whisker_right(adj1.counit, R2),
    )


def _transported_wedge(B, tens: groth.TensorWitness, h, w):
    """Transport the tensor wedge along ``comp(h, comp(-, w*))`` and return
    the canonical wedge of the transported factors with the comparison
    into it."""
    ws = frame_adjunction(B, w).right
    C1 = tens.wedge.proj1.cod
    C2 = tens.wedge.proj2.cod
    W0 = B.local_product(transport_hom(B, h, C1, ws),
                         transport_hom(B, h, C2, ws))
    e = W0.pair(transport_cell(B, h, tens.wedge.proj1, ws),
                transport_cell(B, h, tens.wedge.proj2, ws))
    return W0, e


def precompose_iso(B, f, g, R, S):
    """``comp(f x g, R (x) S)  ~  comp(f, R) (x) comp(g, S)`` for maps f, g.

    Precomposition by the product map transports the wedge; the factors
    line up after rebracketing because graph composites are strict.
    """
    tens = g_tensor(B, R, S)
    fg = times_on_arrows(B, f, g)
    W0, e = _transported_wedge(B, tens, fg, B.identity(tens.tgt_cone.vertex))
    target = g_tensor(B, B.comp(f, R), B.comp(g, S))
    p_s, r_s = tens.src_cone.legs
    p_t, r_t = tens.tgt_cone.legs

    def leg_cell(side, leg_src, leg_tgt, m, factor):
        star = frame_adjunction(B, leg_tgt).right
        inner = B.comp(factor, star)
        leg2 = target.src_cone.legs[side]
        return B.vc(
            B.assoc_inv(fg, leg_src, inner),
            B.assoc(leg2, m, inner),
            B.whisker_left(leg2, B.assoc_inv(m, factor, star)),
        )

    c1 = leg_cell(0, p_s, p_t, f, R)
    c2 = leg_cell(1, r_s, r_t, g, S)
    fix = target.wedge.pair(B.vcomp(W0.proj1, c1), B.vcomp(W0.proj2, c2))
    iso = B.vcomp(e, fix)
    if not B.is_invertible(iso):
        raise ValueError("precomposition comparison is not invertible")
    return iso


def postcompose_star_iso(B, R, S, u, v):
    """``comp(R (x) S, (u x v)*)  ~  comp(R, u*) (x) comp(S, v*)`` for maps.

    The right-adjoint side of the previous comparison; the factors line up
    through the canonical switch between the two composite adjunctions on
    the strictly equal map composites ``comp(u x v, projection)`` and
    ``comp(projection, u)``.
    """
    tens = g_tensor(B, R, S)
    uv = times_on_arrows(B, u, v)
    adj_uv = frame_adjunction(B, uv)
    W0, e = _transported_wedge(B, tens, B.identity(tens.src_cone.vertex), uv)
    target = g_tensor(B, B.comp(R, frame_adjunction(B, u).right),
                      B.comp(S, frame_adjunction(B, v).right))
    p_t, r_t = tens.tgt_cone.legs

    def leg_cell(side, leg_tgt, m, factor):
        adj_t = frame_adjunction(B, leg_tgt)
        adj_m = frame_adjunction(B, m)
        adj_leg2 = frame_adjunction(B, target.tgt_cone.legs[side])
        switch = adjoint_switch_iso(
            B,
            compose_adjunctions(B, adj_uv, adj_t),
            compose_adjunctions(B, adj_leg2, adj_m),
        )
        leg_src = tens.src_cone.legs[side]
        return B.vc(
            B.assoc(leg_src, B.comp(factor, adj_t.right), adj_uv.right),
            B.whisker_left(leg_src, B.assoc(factor, adj_t.right, adj_uv.right)),
            B.whisker_left(leg_src, B.whisker_left(factor, switch)),
            B.whisker_left(leg_src, B.assoc_inv(factor, adj_m.right,
                                                adj_leg2.right)),
        )

    c1 = leg_cell(0, p_t, u, R)
    c2 = leg_cell(1, r_t, v, S)
    fix = target.wedge.pair(B.vcomp(W0.proj1, c1), B.vcomp(W0.proj2, c2))
    iso = B.vcomp(e, fix)
    if not B.is_invertible(iso):
        raise ValueError("postcomposition comparison is not invertible")
    return iso


def strange_pair(B, R, S):
    """For ``R : X -> I`` and ``S : I -> A``, the composite ``comp(R, S)``
    carries two canonical projection squares (pad with the terminal square
    on the other side); pairing them through the tensor is an equivalence.
    Returns ``(arrow, equivalence_report)``."""
    if R.target != UNIT or S.source != UNIT:
        raise ValueError("factors must meet in the unit carrier")
    tens = g_tensor(B, R, S)
    P1 = paste_vertical(B, g_identity(B, R), groth.g_bang(B, S))
    P2 = paste_vertical(B, groth.g_bang(B, R), g_identity(B, S))
    arrow, _, _ = g_pair(B, tens, P1, P2)
    return arrow, groth.g_is_equivalence(B, arrow)
