"""Closed-form Hodge-Poincare building blocks.

Jacobians of a genus-g curve, classifying spaces of GL(N) and SL(N), and
the two-element-group eigenspace decomposition of a Jacobian square minus
its diagonal.  These are the pieces the rank-2 stratification is glued
from.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InternalCheckError
from .poly import ONE, U, V, LaurentPoly, uv_power
from .series import FactoredRational

HALF = Fraction(1, 2)


def hp_jacobian(g):
    """(1+u)^g (1+v)^g, the Hodge-Poincare polynomial of a g-dimensional
    Jacobian (or any complex torus of dimension g)."""
    if g < 0:
        raise DomainError("genus must be non-negative")
    return (ONE + U) ** g * (ONE + V) ** g


def hp_bgl(n):
    """HP(BGL(n)) = prod_{k=1..n} 1/(1 - u^k v^k)."""
    if n < 1:
        raise DomainError("group rank must be at least 1")
    return FactoredRational(ONE, {(k, k): 1 for k in range(1, n + 1)})


def hp_bsl(n):
    """HP(BSL(n)) = prod_{k=2..n} 1/(1 - u^k v^k); trivial for n = 1."""
    if n < 1:
        raise DomainError("group rank must be at least 1")
    return FactoredRational(ONE, {(k, k): 1 for k in range(2, n + 1)})


def hp_plusminus_bt():
    """Symmetric and antisymmetric parts of H*(BT), T a rank-2 torus, under
    the coordinate swap: (1/((1-uv)(1-u^2v^2)), uv/((1-uv)(1-u^2v^2)))."""
    den = {(1, 1): 1, (2, 2): 1}
    plus = FactoredRational(ONE, den)
    minus = FactoredRational(U * V, den)
    return plus, minus


def hp_plusminus_jac_pair(g):
    """Swap-eigenspace parts of HP(Jac x Jac minus diagonal).

    plus  = (P^2 + P(-u^2,-v^2))/2 - (uv)^g P
    minus = (P^2 - P(-u^2,-v^2))/2          with P = hp_jacobian(g).

    Both halves must come out with integer coefficients; a half-integer
    would mean the eigenspace bookkeeping is broken.
    """
    p = hp_jacobian(g)
    p_sq = p * p
    p_neg = p.negate_square_substitute()
    plus = (p_sq + p_neg) * HALF - uv_power(g) * p
    minus = (p_sq - p_neg) * HALF
    for name, half in (("plus", plus), ("minus", minus)):
        if not half.is_integral():
            raise InternalCheckError(
                "%s-part of the Jacobian pair has non-integer coefficients" % name
            )
    return plus, minus


def hp_nt_zts(g):
    """Equivariant HP of the split-pair locus: pairs of non-isomorphic
    degree-d/2 line bundles with their rank-2 torus of automorphisms.

    Composed as HP+(BT)*plus + HP-(BT)*minus and certified against the
    single closed form

        [ (1+u)^2g (1+v)^2g (1+uv)/2 + (1-u^2)^g (1-v^2)^g (1-uv)/2
          - (uv)^g (1+u)^g (1+v)^g ] / ((1-uv)(1-u^2v^2)).
    """
    if g < 1:
        raise DomainError("genus must be at least 1")
    bt_plus, bt_minus = hp_plusminus_bt()
    jac_plus, jac_minus = hp_plusminus_jac_pair(g)
    composed = bt_plus * jac_plus + bt_minus * jac_minus

    two_g = hp_jacobian(2 * g)  # (1+u)^2g (1+v)^2g
    sign_part = ((ONE - U * U) ** g) * ((ONE - V * V) ** g)
    closed_num = (
        two_g * (ONE + U * V)
        + sign_part * (ONE - U * V)
        - 2 * uv_power(g) * hp_jacobian(g)
    )
    closed = FactoredRational(closed_num, {(1, 1): 1, (2, 2): 1}, HALF)

    if not composed.equals(closed):
        raise InternalCheckError("eigenspace composition disagrees with its closed form")
    return closed
