"""Iterated bracket evaluation: recursion, closed binomial form, fast paths.

The recursion is the designated oracle; every other evaluator is tested
against it.
"""

from __future__ import annotations

import math

from .errors import (
    InvalidOrder,
    KTooSmall,
    NotAnEigenpair,
    NotIdempotent,
    NotNilpotent,
)
from .fields import require_same_field
from .matrices import Mat2, RankOneFactor, is_idempotent, outer


def _check_order(k, minimum=0):
    if not isinstance(k, int) or k < minimum:
        raise InvalidOrder(f"bracket order must be an integer >= {minimum}, got {k!r}")


def kcomm_recursive(A: Mat2, B: Mat2, k: int) -> Mat2:
    """Ground-truth oracle: order-0 bracket is A, then R -> R@B - B@R, k times."""
    _check_order(k)
    require_same_field(A.field, B.field)
    R = A
    for _ in range(k):
        R = R @ B - B @ R
    return R


def kcomm_closed(A: Mat2, B: Mat2, k: int) -> Mat2:
    """Alternating binomial sum over B^i A B^(k-i) with exact coefficients."""
    _check_order(k)
    require_same_field(A.field, B.field)
    powers = [Mat2.identity(B.field)]
    for _ in range(k):
        powers.append(powers[-1] @ B)
    coerce = A.field.coerce
    z = A.field.zero()
    acc = [z, z, z, z]
    for i in range(k + 1):
        term = (powers[i] @ A @ powers[k - i]).entries
        c = math.comb(k, i)
        if i % 2:
            c = -c
        cs = coerce(c)
        for j in range(4):
            acc[j] = acc[j] + cs * term[j]
    return Mat2(A.field, tuple(acc))


def kcomm(A: Mat2, B: Mat2, k: int, method: str = "recursive") -> Mat2:
    if method == "recursive":
        return kcomm_recursive(A, B, k)
    if method == "closed":
        return kcomm_closed(A, B, k)
    if method == "auto":
        # closed form wins once k outgrows the recursion's 2k multiplies
        return kcomm_closed(A, B, k) if k > 4 else kcomm_recursive(A, B, k)
    raise ValueError(f"unknown bracket method {method!r}")


def kcomm_idempotent_fast(A: Mat2, Q: Mat2, k: int) -> Mat2:
    """Bracket against an idempotent via the period-2 stabilization for k >= 1."""
    _check_order(k, minimum=1)
    require_same_field(A.field, Q.field)
    if not is_idempotent(Q):
        raise NotIdempotent(f"{Q} is not idempotent")
    return kcomm_recursive(A, Q, 1 if k % 2 else 2)


def kcomm_nilpotent_fast(A: Mat2, N: Mat2, k: int) -> Mat2:
    """Zero without computation: every k >= 3 summand holds N to a power >= 2.

    The vanishing is genuinely false below k = 3 (e.g. the order-2 bracket of
    E_21 against E_12 is -2*E_12), hence the KTooSmall guard.
    """
    _check_order(k)
    require_same_field(A.field, N.field)
    if not (N @ N).is_zero():
        raise NotNilpotent(f"{N} does not square to zero")
    if k < 3:
        raise KTooSmall(f"vanishing only guaranteed for k >= 3, got {k}")
    return Mat2.zero(A.field)


def kcomm_eigenpair(factor: RankOneFactor, S: Mat2, k: int, alpha, beta) -> Mat2:
    """Bracket of x f* against S when S x = alpha x and S* f = conj(beta) f.

    Returns (beta - alpha)^k * (x f*); the eigen-relations are checked, not
    assumed.
    """
    _check_order(k)
    f = S.field
    alpha = f.coerce(alpha)
    beta = f.coerce(beta)
    x, fv = factor.x, factor.f
    a11, a12, a21, a22 = S.entries
    sx = (a11 * x[0] + a12 * x[1], a21 * x[0] + a22 * x[1])
    if not (f.eq(sx[0], alpha * x[0]) and f.eq(sx[1], alpha * x[1])):
        raise NotAnEigenpair("x is not an eigenvector of S for alpha")
    St = S.conj_t()
    b11, b12, b21, b22 = St.entries
    sf = (b11 * fv[0] + b12 * fv[1], b21 * fv[0] + b22 * fv[1])
    cb = f.conj(beta)
    if not (f.eq(sf[0], cb * fv[0]) and f.eq(sf[1], cb * fv[1])):
        raise NotAnEigenpair("f is not an eigenvector of S* for conj(beta)")
    coeff = (beta - alpha) ** k
    return outer(f, x, fv).scale(coeff)
