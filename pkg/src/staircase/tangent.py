"""Tangent space dimensions of monomial points by counting bounded components.

The graded piece |T(I)|_alpha has a basis indexed by the bounded connected
components of (staircase + alpha) minus the staircase.  Those components live
among the standard monomials, so each degree costs O(d * n).  A nonzero map
sends some minimal generator g to a standard monomial gamma, which means only
degrees of the form gamma - g can contribute; reports iterate over those and
can optionally sweep the whole degree box as a soundness check.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import kernel
from .core import (
    MonomialIdeal,
    colength,
    format_ideal,
    socle,
    z_slice_table,
)

MultiDegree = tuple[int, ...]


def omega(alpha) -> int:
    return int(sum(alpha))


def positive_part(alpha) -> MultiDegree:
    return tuple(max(a, 0) for a in alpha)


def negative_part(alpha) -> MultiDegree:
    return tuple(max(-a, 0) for a in alpha)


def signature_of(alpha) -> str | None:
    """'p' for coordinates >= 0 and 'n' for negative ones; None if constant."""
    sig = "".join("p" if a >= 0 else "n" for a in alpha)
    if "p" not in sig or "n" not in sig:
        return None
    return sig


def signatures(n: int) -> list[str]:
    """All non-constant patterns, ordered by number of n's then lexicographically desc."""
    sigs = ["".join(s) for s in itertools.product("pn", repeat=n)]
    sigs = [s for s in sigs if "p" in s and "n" in s]
    return sorted(sigs, key=lambda s: (s.count("n"), [c == "n" for c in s]))


@dataclass(frozen=True)
class ComponentSet:
    points: frozenset
    bounded: bool


def degree_box(I: MonomialIdeal) -> list[tuple[int, int]]:
    """[-G_i, s_i - 1] per coordinate; every degree with a nonzero piece lies inside."""
    s = I.pure_powers
    G = I.max_gen_exponents
    return [(-G[i], s[i] - 1) for i in range(I.n)]


def box_degrees(I: MonomialIdeal) -> np.ndarray:
    ranges = [np.arange(lo, hi + 1) for lo, hi in degree_box(I)]
    grid = np.meshgrid(*ranges, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1).astype(np.int32)


def candidate_degrees(I: MonomialIdeal) -> np.ndarray:
    """Distinct gamma - g over standard gamma and minimal generators g, sorted."""
    std = np.asarray(I.standard_monomials, dtype=np.int32).reshape(-1, I.n)
    gens = np.asarray(I.gens, dtype=np.int32).reshape(-1, I.n)
    diffs = (std[:, None, :] - gens[None, :, :]).reshape(-1, I.n)
    if len(diffs) == 0:
        return diffs
    return np.unique(diffs, axis=0)


def _kernel_arrays(I: MonomialIdeal):
    shape = I.pure_powers
    std = np.asarray(I.standard_monomials, dtype=np.int32).reshape(-1, I.n)
    cells = np.full(int(np.prod(shape)), -1, dtype=np.int32)
    if len(std):
        flat = np.ravel_multi_index(std.T, shape)
        cells[flat] = np.arange(len(std), dtype=np.int32)
    return std, cells, shape


def graded_counts(I: MonomialIdeal, alphas, backend=None):
    """Bounded and singleton component counts for every row of ``alphas``."""
    std, cells, shape = _kernel_arrays(I)
    alphas = np.asarray(alphas, dtype=np.int32).reshape(-1, I.n)
    fn = backend or kernel.graded_counts
    return fn(std, cells, shape, alphas)


def graded_tangent_dim(I: MonomialIdeal, alpha) -> tuple[int, list[ComponentSet]]:
    """dim |T(I)|_alpha together with every component of the candidate set.

    Breadth-first search over C = {gamma standard : gamma - alpha in the
    staircase}; used for inspection and as the reference for the kernels.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != I.n:
        raise ValueError(f"degree {alpha} does not have length {I.n}")
    std = set(I.standard_monomials)
    n = I.n

    def in_staircase(q):
        return all(c >= 0 for c in q) and q not in std

    C = {g for g in std if in_staircase(tuple(a - b for a, b in zip(g, alpha)))}
    seen = set()
    components = []
    for start in sorted(C):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        points = []
        bounded = True
        while queue:
            g = queue.popleft()
            points.append(g)
            for i in range(n):
                for step in (-1, 1):
                    nb = g[:i] + (g[i] + step,) + g[i + 1:]
                    if nb[i] < 0:
                        if in_staircase(tuple(a - b for a, b in zip(nb, alpha))):
                            bounded = False
                    elif nb in C and nb not in seen:
                        seen.add(nb)
                        queue.append(nb)
        components.append(ComponentSet(frozenset(points), bounded))
    return sum(c.bounded for c in components), components


@dataclass
class TangentReport:
    ideal: MonomialIdeal
    d: int
    per_degree: dict = field(default_factory=dict)
    signature_totals: dict = field(default_factory=dict)
    total: int = 0
    socle_dim: int = 0
    x_degree_slices: dict = field(default_factory=dict)
    slice_pairs: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.ideal.n

    @property
    def non_socle(self) -> int:
        return self.total - self.socle_dim

    def __getitem__(self, sig: str) -> int:
        return self.signature_totals[sig]

    def to_dict(self) -> dict:
        return {
            "ideal": format_ideal(self.ideal),
            "n": self.n,
            "d": self.d,
            "total": self.total,
            "socle_dim": self.socle_dim,
            "signatures": dict(self.signature_totals),
            "per_degree": [[list(a), v] for a, v in sorted(self.per_degree.items())],
            "x_slices": [[j, v] for j, v in sorted(self.x_degree_slices.items())],
            "duality_pairs": [
                [i, j, lhs, rhs] for (i, j), (lhs, rhs) in sorted(self.slice_pairs.items())
            ],
        }


class TangentCheckError(AssertionError):
    pass


def tangent_report(I: MonomialIdeal, exhaustive: bool = False, check: bool = True,
                   backend=None) -> TangentReport:
    """Per-degree, per-signature and socle dimensions of T(I) = Hom(I, S/I).

    ``exhaustive`` sweeps the full degree box instead of the candidate degrees.
    ``check`` asserts the structural identities (no constant-signature degree
    contributes, socle count equals numgens * |socle|, duality slices for n = 3).
    """
    if I.n < 2:
        raise ValueError("tangent reports need at least two variables")
    d = colength(I)
    alphas = box_degrees(I) if exhaustive else candidate_degrees(I)
    counts, singles = graded_counts(I, alphas, backend=backend)
    nz = np.nonzero(counts)[0]
    per_degree = {tuple(int(c) for c in alphas[k]): int(counts[k]) for k in nz}

    sig_totals = dict.fromkeys(signatures(I.n), 0)
    x_slices: dict[int, int] = {}
    for alpha, v in per_degree.items():
        sig = signature_of(alpha)
        if sig is None:
            raise TangentCheckError(f"constant-signature degree {alpha} has dimension {v}")
        sig_totals[sig] += v
        x_slices[alpha[0]] = x_slices.get(alpha[0], 0) + v

    report = TangentReport(
        ideal=I,
        d=d,
        per_degree=per_degree,
        signature_totals=sig_totals,
        total=int(counts.sum()),
        socle_dim=int(singles.sum()),
        x_degree_slices=x_slices,
    )
    if I.n == 3:
        report.slice_pairs = duality_slice_pairs(I, report)
    if check:
        expected_socle = I.numgens * len(socle(I))
        if report.socle_dim != expected_socle:
            raise TangentCheckError(
                f"singleton components {report.socle_dim} != numgens*socle {expected_socle}"
            )
        bad = {ij: pair for ij, pair in report.slice_pairs.items() if pair[0] != pair[1]}
        if bad:
            raise TangentCheckError(f"duality slices fail at {sorted(bad)[:3]}")
    return report


def duality_slice_pairs(I: MonomialIdeal, report: TangentReport | None = None) -> dict:
    """(i, j) -> (sum over alpha_1=i, alpha_2=j;  b_ij + sum over alpha_1=-i-1, alpha_2=-j-1)."""
    if I.n != 3:
        raise ValueError("duality slices need three variables")
    if report is None:
        report = tangent_report(I, check=False)
    table = z_slice_table(I)
    sums: dict[tuple[int, int], int] = {}
    for alpha, v in report.per_degree.items():
        key = (alpha[0], alpha[1])
        sums[key] = sums.get(key, 0) + v
    s = I.pure_powers
    pairs = {}
    for i in range(s[0] + 1):
        for j in range(s[1] + 1):
            lhs = sums.get((i, j), 0)
            rhs = table[i, j] + sums.get((-i - 1, -j - 1), 0)
            pairs[(i, j)] = (lhs, rhs)
    return pairs


def socle_tangent_dim(I: MonomialIdeal, report: TangentReport | None = None) -> int:
    """numgens(I) * |soc(S/I)|, cross-checked against singleton components."""
    value = I.numgens * len(socle(I))
    if report is None:
        report = tangent_report(I, check=False)
    if report.socle_dim != value:
        raise TangentCheckError(f"socle maps {report.socle_dim} != {value}")
    return value


def is_smooth_monomial_point(I: MonomialIdeal, report: TangentReport | None = None) -> bool:
    if I.n != 3:
        raise ValueError("the smoothness criterion is stated for three variables")
    if report is None:
        report = tangent_report(I)
    smooth = all(report[s] == 0 for s in ("pnn", "npn", "nnp"))
    if smooth != (report.total == 3 * report.d):
        raise TangentCheckError(f"smoothness criterion disagrees with 3d for {I}")
    return smooth


def singular_by_generators(I: MonomialIdeal) -> bool:
    """Look for generators x^a1 y^a2, x^b1 z^b3, y^c2 z^c3 with one of the domination patterns."""
    if I.n != 3:
        raise ValueError("needs three variables")
    xy = [g for g in I.gens if g[0] > 0 and g[1] > 0 and g[2] == 0]
    xz = [g for g in I.gens if g[0] > 0 and g[2] > 0 and g[1] == 0]
    yz = [g for g in I.gens if g[1] > 0 and g[2] > 0 and g[0] == 0]
    for (a1, a2, _), (b1, _, b3), (_, c2, c3) in itertools.product(xy, xz, yz):
        if (a1 >= b1 and a2 >= c2) or (b1 >= a1 and b3 >= c3) or (c2 >= a2 and c3 >= b3):
            return True
    return False


def ppn_upper_bound(I: MonomialIdeal, a1: int, a2: int) -> int:
    """Sum over i >= a1, j >= a2 of b_ij - max(b_{i+1,j}, b_{i,j+1})."""
    if a1 < 0 or a2 < 0:
        raise ValueError("a1, a2 must be nonnegative")
    b = z_slice_table(I)
    rows, cols = b.b.shape
    total = 0
    for i in range(a1, rows):
        for j in range(a2, cols):
            total += b[i, j] - max(b[i + 1, j], b[i, j + 1])
    return total


def ppn_column(report: TangentReport, a1: int, a2: int) -> int:
    """Sum over alpha_3 < 0 of dim |T(I)|_(a1, a2, alpha_3)."""
    return sum(v for a, v in report.per_degree.items() if a[0] == a1 and a[1] == a2 and a[2] < 0)
