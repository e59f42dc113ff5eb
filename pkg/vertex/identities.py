"""Borcherds identity and its equivalent forms, each side evaluated independently."""

from __future__ import annotations

import logging

from fock import FockVector
from vertex.engine import VertexAlgebra, binomial
from vertex.models import IdentityOutcome

logger = logging.getLogger(__name__)

BORCHERDS = "Borcherds identity"
COMMUTATOR = "commutator formula"
SKEW_SYMMETRY = "skew-symmetry"
ASSOCIATIVITY = "associativity"
TRANSLATION = "translation covariance"
CREATION = "creation axiom"
GRADING = "grading u_n v in V_(k+m-n-1)"

ANCHORS = {
    BORCHERDS: "Definition: vertex algebra, Borcherds identity",
    COMMUTATOR: "Borcherds identity at t = 0",
    SKEW_SYMMETRY: "Consequence of the axioms: skew-symmetry Y(u, z) v = e^{zT} Y(v, -z) u",
    ASSOCIATIVITY: "Borcherds identity at r = 0",
    TRANSLATION: "Consequence of the axioms: translation covariance of T^(m)",
    CREATION: "Definition: vertex algebra, vacuum and creation",
    GRADING: "Definition: graded vertex algebra",
}


def _outcome(name: str, lhs: FockVector, rhs: FockVector, instance: str) -> IdentityOutcome:
    residual = lhs - rhs
    return IdentityOutcome(name=name, anchor=ANCHORS[name], holds=not residual, residual=residual, instance=instance)


def borcherds_sides(
    algebra: VertexAlgebra,
    u: FockVector,
    v: FockVector,
    w: FockVector,
    r: int,
    s: int,
    t: int,
) -> tuple[FockVector, FockVector]:
    """sum_i C(r,i) (u_{t+i} v)_{r+s-i} w  and  sum_i (-1)^i C(t,i) [u_{r+t-i} v_{s+i} w - (-1)^t v_{s+t-i} u_{r+i} w].

    x_k y = 0 once k >= wt x + wt y, which bounds both sums; C(r, i) and C(t, i) vanish past r and t when those are >= 0.
    """
    wt_u, wt_v, wt_w = algebra.weight(u), algebra.weight(v), algebra.weight(w)
    lhs_terms = _binomial_range(r, wt_u + wt_v - t)
    lhs = FockVector.combine(
        (algebra.product_of_product(u, t + i, v, r + s - i, w), binomial(r, i)) for i in range(lhs_terms)
    )
    sign = -1 if t % 2 else 1
    pieces = []
    for i in range(_binomial_range(t, max(wt_v + wt_w - s, wt_u + wt_w - r))):
        factor = binomial(t, i) if i % 2 == 0 else -binomial(t, i)
        if not factor:
            continue
        if s + i < wt_v + wt_w:
            pieces.append((algebra.iterated(u, r + t - i, v, s + i, w), factor))
        if r + i < wt_u + wt_w:
            pieces.append((algebra.iterated(v, s + t - i, u, r + i, w), -sign * factor))
    return lhs, FockVector.combine(pieces)


def _binomial_range(top: int, vanishing: int) -> int:
    """Number of summation indices i >= 0 with i < vanishing and, for top >= 0, i <= top."""
    count = max(0, vanishing)
    return min(count, top + 1) if top >= 0 else count


def borcherds_check(
    algebra: VertexAlgebra,
    u: FockVector,
    v: FockVector,
    w: FockVector,
    r: int,
    s: int,
    t: int,
) -> IdentityOutcome:
    lhs, rhs = borcherds_sides(algebra, u, v, w, r, s, t)
    return _outcome(BORCHERDS, lhs, rhs, _instance(u, v, w, r=r, s=s, t=t))


def commutator_check(algebra: VertexAlgebra, u: FockVector, v: FockVector, w: FockVector, m: int, n: int) -> IdentityOutcome:
    """[u_m, v_n] w = sum_k C(m,k) (u_k v)_{m+n-k} w."""
    lhs = algebra.iterated(u, m, v, n, w) - algebra.iterated(v, n, u, m, w)
    rhs = FockVector.combine(
        (algebra.product_of_product(u, k, v, m + n - k, w), binomial(m, k))
        for k in range(_binomial_range(m, algebra.weight(u) + algebra.weight(v)))
    )
    return _outcome(COMMUTATOR, lhs, rhs, _instance(u, v, w, m=m, n=n))


def skew_symmetry_check(algebra: VertexAlgebra, u: FockVector, v: FockVector, n: int) -> IdentityOutcome:
    """v_n u = sum_i (-1)^{n+i+1} T^{(i)}(u_{n+i} v)."""
    lhs = algebra.mode(v, n, u)
    rhs = FockVector.combine(
        (algebra.translate(algebra.mode(u, n + i, v), i), -1 if (n + i + 1) % 2 else 1)
        for i in range(max(0, algebra.weight(u) + algebra.weight(v) - n) + 1)
    )
    return _outcome(SKEW_SYMMETRY, lhs, rhs, _instance(u, v, n=n))


def associativity_check(algebra: VertexAlgebra, u: FockVector, v: FockVector, w: FockVector, s: int, t: int) -> IdentityOutcome:
    lhs, rhs = borcherds_sides(algebra, u, v, w, 0, s, t)
    return _outcome(ASSOCIATIVITY, lhs, rhs, _instance(u, v, w, s=s, t=t))


def translation_check(algebra: VertexAlgebra, u: FockVector, w: FockVector, k: int, m: int) -> IdentityOutcome:
    """T^{(m)}(u_k w) - u_k T^{(m)} w = sum_{i=1..m} C(i-k-1, i) u_{k-i} T^{(m-i)} w."""
    lhs = algebra.translate(algebra.mode(u, k, w), m) - algebra.mode(u, k, algebra.translate(w, m))
    rhs = FockVector.combine(
        (algebra.mode(u, k - i, algebra.translate(w, m - i)), binomial(i - k - 1, i))
        for i in range(1, m + 1)
    )
    return _outcome(TRANSLATION, lhs, rhs, _instance(u, w, k=k, m=m))


def auxiliary_identity_checks(
    algebra: VertexAlgebra,
    u: FockVector,
    v: FockVector,
    m: int,
    n: int,
    *,
    w: FockVector | None = None,
    translation_order: int = 2,
) -> list[IdentityOutcome]:
    """Commutator, skew-symmetry, associativity and translation covariance on one instance."""
    target = w if w is not None else algebra.vacuum()
    return [
        commutator_check(algebra, u, v, target, m, n),
        skew_symmetry_check(algebra, u, v, n),
        associativity_check(algebra, u, v, target, n, m),
        translation_check(algebra, u, target, m, translation_order),
    ]


def creation_check(algebra: VertexAlgebra, u: FockVector) -> IdentityOutcome:
    """u_{-1} 1 = u and u_n 1 = 0 for n >= 0."""
    one = algebra.vacuum()
    lhs = algebra.mode(u, -1, one)
    for n in range(algebra.weight(u)):
        image = algebra.mode(u, n, one)
        if image:
            return IdentityOutcome(CREATION, ANCHORS[CREATION], False, image, _instance(u, n=n))
    return _outcome(CREATION, lhs, u, _instance(u, n=-1))


def grading_check(algebra: VertexAlgebra, u: FockVector, v: FockVector, n: int) -> IdentityOutcome:
    """Every state of u_n v has weight wt u + wt v - n - 1 and lattice degree a + b."""
    product = algebra.mode(u, n, v)
    expected_weight = algebra.weight(u) + algebra.weight(v) - n - 1
    degrees = {tuple(x + y for x, y in zip(a, b)) for a in u.lattice_degrees() for b in v.lattice_degrees()}
    stray = FockVector(
        {
            state: value
            for state, value in product.items()
            if state.weight(algebra.lattice) != expected_weight or state.lattice_point not in degrees
        }
    )
    return IdentityOutcome(GRADING, ANCHORS[GRADING], not stray, stray, _instance(u, v, n=n))


def _instance(*vectors: FockVector, **indices: int) -> str:
    described = ", ".join(vector.describe() for vector in vectors)
    numbers = ", ".join(f"{name}={value}" for name, value in indices.items())
    return f"[{described}] {numbers}"


__all__ = [
    "ANCHORS",
    "ASSOCIATIVITY",
    "BORCHERDS",
    "COMMUTATOR",
    "CREATION",
    "GRADING",
    "SKEW_SYMMETRY",
    "TRANSLATION",
    "associativity_check",
    "auxiliary_identity_checks",
    "borcherds_check",
    "borcherds_sides",
    "commutator_check",
    "creation_check",
    "grading_check",
    "skew_symmetry_check",
    "translation_check",
]
