"""Closed forms for fat points and lexsegment truncations, in exact integers."""

from math import comb

from .tangent import negative_part, omega, signatures


def fat_point_graded_dim(n: int, r: int, alpha) -> int:
    """dim |T(m^r)|_alpha: nonzero only on omega(alpha) = -1 with |alpha^-| <= r."""
    if r < 1:
        raise ValueError("r must be positive")
    if omega(alpha) != -1:
        return 0
    neg = omega(negative_part(alpha))
    if neg > r:
        return 0
    return comb(n + r - neg - 1, n - 1)


def fat_point_tangent_dims(r: int) -> tuple[int, dict]:
    """Total and per-signature dimensions of T(m^r) in three variables."""
    if r < 1:
        raise ValueError("r must be positive")
    one_neg = comb(r + 3, 4)
    two_neg = comb(r + 2, 4)
    per_sig = {s: (one_neg if s.count("n") == 1 else two_neg) for s in signatures(3)}
    total = comb(r + 2, 2) * comb(r + 1, 2)
    assert total == 3 * one_neg + 3 * two_neg
    return total, per_sig


def fat_point_total(r: int) -> int:
    return comb(r + 2, 2) * comb(r + 1, 2)


def e_ideal_colength(r: int) -> int:
    return comb(r + 2, 3) + r + 3


def e_ideal_tangent_formula(r: int) -> int:
    """dim T(E(d)) at d = C(r+2, 3) + r + 3."""
    if r < 3:
        raise ValueError("the formula needs r >= 3")
    return e_ideal_socle_part(r) + 7


def e_ideal_socle_part(r: int) -> int:
    """(numgens) * (socle size) = (C(r+2,2)+1)(C(r+1,2)+1), shared by E(d) and J."""
    return (comb(r + 2, 2) + 1) * (comb(r + 1, 2) + 1)


def minimal_level(d: int) -> int:
    """Least r with d <= C(r+2, 3)."""
    r = 1
    while comb(r + 2, 3) < d:
        r += 1
    return r
