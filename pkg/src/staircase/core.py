"""Artinian monomial ideals stored as minimal generator lists.

Exponent vectors are plain tuples of ints.  A :class:`MonomialIdeal` keeps its
minimal generators sorted in descending lexicographic order (x > y > z), so two
ideals are equal exactly when their generator tuples are equal.  Everything
derived from the staircase (standard monomials, bitmap, slice tables) is
computed lazily and cached on the instance; instances are never mutated.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import prod

import numpy as np

Exponent = tuple[int, ...]

#: refuse to materialize a staircase bounding box bigger than this
MAX_CELLS = 10**8


class NotArtinian(ValueError):
    """Raised when some variable has no pure-power generator."""


class StaircaseTooLarge(ValueError):
    pass


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(raw_generators, n: int) -> "MonomialIdeal":
    """Reduce ``raw_generators`` to its divisibility antichain."""
    gens = []
    for g in raw_generators:
        g = tuple(int(c) for c in g)
        if len(g) != n:
            raise ValueError(f"exponent {g} does not have length {n}")
        if any(c < 0 for c in g):
            raise ValueError(f"negative exponent in {g}")
        gens.append(g)
    # sorting by total degree first means a divisor is always seen before its multiples
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[Exponent] = []
    for g in gens:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(sorted(kept, reverse=True)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Construct through :func:`minimalize`, :func:`parse_ideal` or the family
    constructors; the raw constructor trusts that ``gens`` is a canonically
    sorted antichain.
    """

    n: int
    gens: tuple[Exponent, ...]

    def __str__(self) -> str:
        return format_ideal(self)

    def __contains__(self, e) -> bool:
        return contains(self, e)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def numgens(self) -> int:
        return len(self.gens)

    @cached_property
    def pure_powers(self) -> tuple[int, ...]:
        """Exponent s_i of the pure power x_i^{s_i} in the ideal, per variable."""
        s = []
        for i in range(self.n):
            best = None
            for g in self.gens:
                if all(c == 0 for k, c in enumerate(g) if k != i):
                    best = g[i] if best is None else min(best, g[i])
            if best is None:
                raise NotArtinian(f"no pure power of variable {i + 1} in {self}")
            s.append(best)
        return tuple(s)

    @cached_property
    def max_gen_exponents(self) -> tuple[int, ...]:
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.n))

    @cached_property
    def _bitmap(self) -> np.ndarray:
        """Boolean array over [0, s_1) x ... x [0, s_n); True marks ideal cells."""
        shape = self.pure_powers
        cells = prod(shape)
        if cells > MAX_CELLS:
            raise StaircaseTooLarge(f"staircase box has {cells} cells (cap {MAX_CELLS})")
        inside = np.zeros(shape, dtype=bool)
        for g in self.gens:
            inside[tuple(slice(c, None) for c in g)] = True
        return inside

    @cached_property
    def standard_monomials(self) -> tuple[Exponent, ...]:
        """Exponents outside the staircase, in lexicographic order."""
        std = np.argwhere(~self._bitmap)
        return tuple(tuple(int(c) for c in row) for row in std)


def contains(I: MonomialIdeal, e) -> bool:
    e = tuple(e)
    if len(e) != I.n:
        raise ValueError(f"exponent {e} does not have length {I.n}")
    if any(c < 0 for c in e):
        return False
    return any(divides(g, e) for g in I.gens)


def colength(I: MonomialIdeal) -> int:
    return len(I.standard_monomials)


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def ideal_from_standard_set(std, n: int) -> MonomialIdeal:
    """The monomial ideal whose standard monomials are ``std`` (an order ideal)."""
    std = {tuple(s) for s in std}
    if not std:
        return unit_ideal(n)
    gens = set()
    for s in std:
        for i in range(n):
            c = s[:i] + (s[i] + 1,) + s[i + 1:]
            if c in std:
                continue
            if all(c[k] == 0 or c[:k] + (c[k] - 1,) + c[k + 1:] in std for k in range(n)):
                gens.add(c)
    ideal = minimalize(gens, n)
    if set(ideal.standard_monomials) != std:
        raise ValueError("standard set is not closed under division")
    return ideal


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Borel exchange x^a -> (x_i/x_j) x^a for i < j, checked on generators only."""
    for g in I.gens:
        for j in range(I.n):
            if g[j] == 0:
                continue
            for i in range(j):
                h = list(g)
                h[j] -= 1
                h[i] += 1
                if not contains(I, h):
                    return False
    return True


def is_strongly_stable_full(I: MonomialIdeal) -> bool:
    """Exchange condition on every monomial of the staircase box (slow reference)."""
    box = [range(c + 2) for c in I.pure_powers]
    for e in itertools.product(*box):
        if not contains(I, e):
            continue
        for j in range(I.n):
            if e[j] == 0:
                continue
            for i in range(j):
                h = list(e)
                h[j] -= 1
                h[i] += 1
                if not contains(I, h):
                    return False
    return True


@lru_cache(maxsize=None)
def power_ideal(n: int, r: int) -> MonomialIdeal:
    """The fat point ideal (x_1, ..., x_n)^r."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    gens = [e for e in _compositions(r, n)]
    return MonomialIdeal(n, tuple(sorted(gens, reverse=True)))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J as the intersection of I : x^g over the generators g of J."""
    if I.n != J.n:
        raise ValueError("ideals live in different rings")
    n = I.n
    result = None
    for g in J.gens:
        quotient = minimalize([tuple(max(a - b, 0) for a, b in zip(h, g)) for h in I.gens], n)
        result = quotient if result is None else intersect(result, quotient)
    if result is None:
        # J = 0, so I : J is the whole ring
        return unit_ideal(n)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return minimalize(
        [tuple(max(a, b) for a, b in zip(g, h)) for g in I.gens for h in J.gens], I.n
    )


def socle(I: MonomialIdeal) -> frozenset:
    """Standard exponents gamma with gamma + e_i in the staircase for every i."""
    inside = I._bitmap
    s = I.pure_powers
    out = []
    for gamma in I.standard_monomials:
        ok = True
        for i in range(I.n):
            if gamma[i] + 1 < s[i]:
                up = gamma[:i] + (gamma[i] + 1,) + gamma[i + 1:]
                if not inside[up]:
                    ok = False
                    break
        if ok:
            out.append(gamma)
    return frozenset(out)


def min_x_power(I: MonomialIdeal) -> int:
    return I.pure_powers[0]


# --- decompositions -------------------------------------------------------


@dataclass(frozen=True)
class SliceTable:
    """b[i, j] = least k with the (i, j, k) exponent in the ideal.

    ``axes`` lists which original coordinates play the roles of (x, y, z);
    the default (0, 1, 2) is the k[z]-decomposition, (0, 2, 1) the k[y] one.
    """

    b: np.ndarray
    axes: tuple[int, int, int]

    def __getitem__(self, ij) -> int:
        i, j = ij
        if i < 0 or j < 0 or i >= self.b.shape[0] or j >= self.b.shape[1]:
            return 0
        return int(self.b[i, j])

    def total(self) -> int:
        return int(self.b.sum())

    def support(self):
        return [(int(i), int(j)) for i, j in np.argwhere(self.b > 0)]


def z_slice_table(I: MonomialIdeal, axes=(0, 1, 2)) -> SliceTable:
    if I.n != 3:
        raise ValueError("slice tables need three variables")
    axes = tuple(axes)
    if sorted(axes) != [0, 1, 2]:
        raise ValueError(f"{axes} is not a permutation of (0, 1, 2)")
    # number of standard cells in each fibre along the last axis
    standard = ~np.transpose(I._bitmap, axes)
    return SliceTable(standard.sum(axis=2).astype(np.int64), axes)


@dataclass(frozen=True)
class FiberDecomposition:
    """The k[y,z]-decomposition I = sum x^i I_i; ``fibers`` ends at I_p = (1)."""

    fibers: tuple[MonomialIdeal, ...]

    @property
    def p(self) -> int:
        return len(self.fibers) - 1


def fiber_decomposition(I: MonomialIdeal) -> FiberDecomposition:
    if I.n != 3:
        raise ValueError("fiber decomposition needs three variables")
    std = I.standard_monomials
    p = I.pure_powers[0]
    fibers = []
    for i in range(p):
        fibers.append(ideal_from_standard_set([(s[1], s[2]) for s in std if s[0] == i], 2))
    fibers.append(unit_ideal(2))
    return FiberDecomposition(tuple(fibers))


def assemble_fibers(fibers, n: int = 3) -> MonomialIdeal:
    """Inverse of :func:`fiber_decomposition`: stack 2-variable fibers along x."""
    std = []
    for i, J in enumerate(fibers):
        if J.is_zero:
            raise NotArtinian("zero fiber")
        std.extend((i,) + s for s in J.standard_monomials)
    return ideal_from_standard_set(std, n)


# --- text form ---------------------------------------------------------------

_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z")}
_TOKEN = re.compile(r"(x\d+|[xyz])(?:\^(\d+))?")


def variable_names(n: int) -> tuple[str, ...]:
    return _NAMES.get(n) or tuple(f"x{i + 1}" for i in range(n))


def format_monomial(e: Exponent) -> str:
    names = variable_names(len(e))
    parts = []
    for name, c in zip(names, e):
        if c == 1:
            parts.append(name)
        elif c > 1:
            parts.append(f"{name}^{c}")
    return "*".join(parts) or "1"


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero:
        return "0"
    return ", ".join(format_monomial(g) for g in I.gens)


class ParseError(ValueError):
    pass


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse "x^2*y, x*z^3, y^4" (or x1..xn variables) into a minimal ideal.

    ``*`` and ``^1`` are optional and whitespace is ignored.  With letters
    x, y, z the ring has three variables unless ``n`` says otherwise; with
    indexed variables it has as many as the largest index.  For ``n=2`` an
    ideal written only in y and z is read in k[y, z].
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty ideal text")
    monomials = []
    max_index = 0
    lettered = False
    for chunk in compact.split(","):
        if not chunk:
            raise ParseError(f"empty monomial in {text!r}")
        powers: dict[int, int] = {}
        if chunk != "1":
            pos = 0
            for factor in chunk.split("*"):
                if not factor:
                    raise ParseError(f"dangling '*' in {chunk!r}")
                pos = 0
                while pos < len(factor):
                    m = _TOKEN.match(factor, pos)
                    if m is None:
                        raise ParseError(f"cannot read {factor[pos:]!r} in {chunk!r}")
                    var, exp = m.group(1), m.group(2)
                    if var in "xyz":
                        idx = "xyz".index(var) + 1
                        lettered = True
                    else:
                        idx = int(var[1:])
                        if idx < 1:
                            raise ParseError(f"bad variable {var!r}")
                    max_index = max(max_index, idx)
                    powers[idx] = powers.get(idx, 0) + (int(exp) if exp else 1)
                    pos = m.end()
        monomials.append(powers)
    if n is None:
        n = max(3 if lettered else 1, max_index)
    letters_used = {i for powers in monomials for i in powers}
    if lettered and n == 2 and letters_used and letters_used <= {2, 3}:
        # a two-variable ideal written in y, z
        monomials = [{i - 1: c for i, c in powers.items()} for powers in monomials]
        max_index -= 1
    if max_index > n:
        raise ParseError(f"variable index {max_index} exceeds ring size {n}")
    exps = [tuple(p.get(i + 1, 0) for i in range(n)) for p in monomials]
    return minimalize(exps, n)
