"""Named ideals in k[x, y, z]: lexsegment truncations and the counterexample family."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .core import MonomialIdeal, _compositions, minimalize, parse_ideal, power_ideal


def lex_degree_r(r: int) -> list[tuple[int, int, int]]:
    """Monomials of degree r in three variables, lex-descending (x > y > z)."""
    return sorted(_compositions(r, 3), reverse=True)


def lex_truncation_level(d: int) -> int:
    """Largest r with C(r+2, 3) <= d."""
    if d < 1:
        raise ValueError("d must be positive")
    r = 1
    while comb(r + 3, 3) <= d:
        r += 1
    return r


@lru_cache(maxsize=None)
def lex_truncation_ideal(d: int) -> MonomialIdeal:
    """E(d): first t lex monomials of degree r plus all of m^{r+1}, colength d."""
    r = lex_truncation_level(d)
    t = comb(r + 2, 2) - (d - comb(r + 2, 3))
    gens = lex_degree_r(r)[:t] + list(_compositions(r + 1, 3))
    return minimalize(gens, 3)


def _times(prefix, ideal_gens):
    return [tuple(a + b for a, b in zip(prefix, g)) for g in ideal_gens]


def _yz_power(k: int):
    return [(0, k - c, c) for c in range(k + 1)]


@lru_cache(maxsize=None)
def counterexample_ideal(r: int, i: int = 2) -> MonomialIdeal:
    """x^2 m^{r-2} + xy (y,z)^{r-2} + (x z^r) + y (y,z)^r + (z^{r+i})."""
    if r < 3:
        raise ValueError("the counterexample family needs r >= 3")
    if not 2 <= i <= r - 1:
        raise ValueError(f"i must lie in [2, {r - 1}] for r = {r}")
    gens = _times((2, 0, 0), power_ideal(3, r - 2).gens)
    gens += _times((1, 1, 0), _yz_power(r - 2))
    gens.append((1, 0, r))
    gens += _times((0, 1, 0), _yz_power(r))
    gens.append((0, 0, r + i))
    return minimalize(gens, 3)


def counterexample_colength(r: int, i: int = 2) -> int:
    return comb(r + 2, 3) + r + i + 1


#: the unique tangent-maximizing x^3-free strongly stable ideal of colength 39
SPECIAL_39 = parse_ideal(
    "x^5, x^4*y, x^4*z, x^3*y^2, x^3*y*z, x^3*z^2, x^2*y^3, x^2*y^2*z, x^2*y*z^2, x^2*z^3,"
    "x*y^4, x*y^3*z, x*y^2*z^2, x*y*z^3, y^5, y^4*z, y^3*z^2, y^2*z^3, x*z^5, y*z^5, z^7"
)
