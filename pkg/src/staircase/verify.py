"""Run the identities and inequalities for monomial points over exhaustive sets.

Each check walks a stream of ideals and reports the first failure instead of
raising, so one bad statement does not hide the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .census import enumerate_all_artinian, enumerate_strongly_stable
from .core import (
    MonomialIdeal,
    colength,
    colon,
    contains,
    fiber_decomposition,
    is_strongly_stable,
    min_x_power,
    power_ideal,
    socle,
    z_slice_table,
)
from .formulas import fat_point_total, minimal_level
from .tangent import (
    TangentCheckError,
    box_degrees,
    graded_counts,
    is_smooth_monomial_point,
    ppn_column,
    ppn_upper_bound,
    signature_of,
    singular_by_generators,
    tangent_report,
)

ALL_LIMIT = 8
HAIMAN_LIMIT = 10
ORACLE_LIMIT = 6


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    failure: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  first failure: {self.failure}" if self.failure else ""
        return f"{status}  {self.name:<28} {self.checked:>6} ideals{tail}"

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failure": self.failure}


def _run(name, ideals, predicate) -> CheckResult:
    checked = 0
    for I in ideals:
        checked += 1
        try:
            ok = predicate(I)
        except (AssertionError, TangentCheckError) as exc:
            return CheckResult(name, False, checked, f"{I}: {exc}")
        if not ok:
            return CheckResult(name, False, checked, str(I))
    return CheckResult(name, True, checked)


class _Reports:
    """Memoized tangent reports so several checks share one computation."""

    def __init__(self):
        self._cache = {}

    def __call__(self, I):
        rep = self._cache.get(I)
        if rep is None:
            rep = self._cache[I] = tangent_report(I, check=False)
        return rep


def _pairing(rep):
    d = rep.d
    return (rep["ppn"] == rep["nnp"] + d and rep["pnp"] == rep["npn"] + d
            and rep["npp"] == rep["pnn"] + d)


def _duality(I, rep):
    return all(lhs == rhs for lhs, rhs in rep.slice_pairs.values())


def _no_constant_signature(I):
    alphas = box_degrees(I)
    counts, _ = graded_counts(I, alphas)
    return all(signature_of(tuple(a)) is not None for a, c in zip(alphas, counts) if c)


def _simplify_max(I):
    for axes in ((0, 1, 2), (0, 2, 1)):
        b = z_slice_table(I, axes)
        rows, cols = b.b.shape
        for i in range(rows + 1):
            for j in range(cols + 1):
                if b[i + 1, j] > b[i, j + 1]:
                    return False
    return True


def _borel_components(I):
    fibers = fiber_decomposition(I).fibers
    y = MonomialIdeal(2, ((1, 0),))
    for a, b in zip(fibers, fibers[1:]):
        if not is_strongly_stable(a):
            return False
        quotient = colon(a, y)
        if any(not contains(b, g) for g in quotient.gens):
            return False
    return True


def _extremal_sequence(I):
    d = colength(I)
    r = minimal_level(d)
    fibers = fiber_decomposition(I).fibers
    lengths = [colength(f) for f in fibers] + [0] * (r + 1)
    all_equal = True
    for j in range(r + 1):
        lhs = sum(lengths[j:r])
        rhs = sum(comb(r - i + 1, 2) for i in range(j, r))
        if lhs > rhs:
            return False
        if j <= r - 1 and lhs != rhs:
            all_equal = False
    return not all_equal or I == power_ideal(3, r)


def _bound_ppn(I, rep):
    b = z_slice_table(I)
    for a1, a2 in b.support():
        if ppn_column(rep, a1, a2) > ppn_upper_bound(I, a1, a2):
            return False
    return True


def _global_bounds(I, rep):
    d = rep.d
    r = minimal_level(d)
    p = min_x_power(I)
    if 3 * rep.total > 4 * fat_point_total(r):
        return False
    if rep.total > (2 * p + 1) * d:
        return False
    if 4 * p <= 3 * r + 1 and rep.total > fat_point_total(r):
        return False
    return True


def _extremal_subspaces(I, rep):
    r = minimal_level(rep.d)
    fat = power_ideal(3, r)
    top, low = comb(r + 3, 4), comb(r + 2, 4)
    bounds = {"ppn": top, "pnp": top, "nnp": low, "npn": low}
    for sig, bound in bounds.items():
        if rep[sig] > bound:
            return False
        if rep[sig] == bound and I != fat:
            return False
    return True


def _haiman(I, rep):
    d = rep.d
    pn = rep["pn"]
    np_ = rep["np"]
    if not (pn == np_ == d and rep.total == 2 * d):
        return False
    s = I.pure_powers
    for i in range(s[0] + 1):
        b_i = sum(1 for g in I.standard_monomials if g[0] == i)
        if rep.x_degree_slices.get(i, 0) != b_i or rep.x_degree_slices.get(-i - 1, 0) != b_i:
            return False
    return True


def verify_theorem_suite(d_max: int = 8, oracle: bool = False, prime: int = 32003) -> list[CheckResult]:
    """Run every check up to colength ``d_max`` and return one result per statement."""
    reports = _Reports()
    all3 = [I for d in range(1, min(d_max, ALL_LIMIT) + 1) for I in enumerate_all_artinian(3, d)]
    ss = [I for d in range(1, d_max + 1) for I in enumerate_strongly_stable(d)]
    all2 = [I for d in range(1, min(d_max, HAIMAN_LIMIT) + 1) for I in enumerate_all_artinian(2, d)]
    fat_levels = [r for r in range(1, 10) if comb(r + 2, 3) <= d_max and r >= 2]
    ss_fat = [I for r in fat_levels for I in enumerate_strongly_stable(comb(r + 2, 3))]

    results = [
        _run("pairing", all3, lambda I: _pairing(reports(I))),
        _run("parity", all3, lambda I: (reports(I).total - reports(I).d) % 2 == 0),
        _run("duality-slices", all3, lambda I: _duality(I, reports(I))),
        _run("decomposition", [I for I in all3 if colength(I) <= 6], _no_constant_signature),
        _run("smoothness-criterion", all3, lambda I: (
            all(reports(I)[s] == 0 for s in ("pnn", "npn", "nnp")) == (reports(I).total == 3 * reports(I).d))),
        _run("singular-by-generators", all3,
             lambda I: not singular_by_generators(I) or reports(I).total > 3 * reports(I).d),
        _run("socle-maps", all3,
             lambda I: reports(I).socle_dim == I.numgens * len(socle(I))),
        _run("smooth-iff-x-in-ideal", ss,
             lambda I: is_smooth_monomial_point(I, reports(I)) == (min_x_power(I) == 1)),
        _run("simplify-max", ss, _simplify_max),
        _run("borel-components", ss, _borel_components),
        _run("extremal-sequence", ss, _extremal_sequence),
        _run("bound-ppn", ss, lambda I: _bound_ppn(I, reports(I))),
        _run("extremal-subspaces", ss_fat, lambda I: _extremal_subspaces(I, reports(I))),
        _run("global-bound", ss, lambda I: _global_bounds(I, reports(I))),
        _run("haiman-n2", all2, lambda I: _haiman(I, reports(I))),
        _run("enumeration-complete", range(1, min(d_max, ALL_LIMIT) + 1), lambda d: (
            {I for I in enumerate_all_artinian(3, d) if is_strongly_stable(I)}
            == set(enumerate_strongly_stable(d)))),
    ]
    if oracle:
        from .oracle import hom_dim

        small = [I for I in all3 if colength(I) <= min(d_max, ORACLE_LIMIT)]
        results.append(_run("oracle-equivalence", small,
                            lambda I: hom_dim(I, I, prime) == reports(I).total))
    return results
