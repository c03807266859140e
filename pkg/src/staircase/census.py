"""Enumeration of artinian monomial ideals in k[x, y, z] and batch tangent statistics.

Strongly stable ideals are built fiber by fiber along x.  Write the fiber I_i
(an ideal of k[y, z]) through its slice values b_j = least k with y^j z^k in
I_i.  Then I is strongly stable exactly when

* every fiber is strongly stable in k[y, z] (z -> y exchange), which means the
  slice values strictly decrease until they reach 0 (a strict partition), and
* I_i : y is contained in I_{i+1} (y -> x exchange), i.e. the slices of the
  next fiber satisfy c_j <= b_{j+1}.

The z -> x exchange follows from the other two: y^j z^k in I_i with k > 0
gives y^{j+1} z^{k-1} in I_i, and then y^j z^{k-1} in I_{i+1}.
"""

from __future__ import annotations

import csv
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .core import (
    MonomialIdeal,
    format_ideal,
    ideal_from_standard_set,
    is_strongly_stable,
    min_x_power,
    power_ideal,
)
from .families import counterexample_colength, counterexample_ideal, lex_truncation_ideal
from .formulas import e_ideal_socle_part, e_ideal_tangent_formula
from .tangent import signatures, tangent_report

DEFAULT_BUDGET = 60
ALL_ARTINIAN_LIMIT = 10
SIGS = signatures(3)
CSV_COLUMNS = ["ideal", "d", "total", *SIGS, "socle", "min_x_power", "flags"]


class BudgetExceeded(ValueError):
    pass


# --- strongly stable ideals --------------------------------------------------


def _strict_partitions(weight: int, bounds):
    """Strict partitions of ``weight`` with part j at most bounds[j], lex-descending.

    ``bounds`` is None for no constraint.
    """

    def rec(remaining, j, cap):
        if remaining == 0:
            yield ()
            return
        if bounds is not None:
            if j >= len(bounds):
                return
            cap = min(cap, bounds[j])
        # parts cap, cap-1, ... can sum to at most cap*(cap+1)/2
        if cap * (cap + 1) // 2 < remaining:
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, j + 1, part - 1):
                yield (part,) + rest

    return rec(weight, 0, weight)


def _shift_capacity(parts) -> int:
    """Largest total colength the fibers after ``parts`` can still carry."""
    return sum(j * b for j, b in enumerate(parts))


def strongly_stable_fibers(d: int):
    """Yield fiber sequences (tuples of strict partitions) of strongly stable ideals."""

    def rec(prev, remaining):
        bounds = prev[1:]
        top = min(remaining, sum(bounds))
        for w in range(top, 0, -1):
            for parts in _strict_partitions(w, bounds):
                rest = remaining - w
                if rest == 0:
                    yield (parts,)
                elif rest <= _shift_capacity(parts):
                    for tail in rec(parts, rest):
                        yield (parts,) + tail

    for w in range(d, 0, -1):
        for parts in _strict_partitions(w, None):
            rest = d - w
            if rest == 0:
                yield (parts,)
            elif rest <= _shift_capacity(parts):
                for tail in rec(parts, rest):
                    yield (parts,) + tail


def ideal_from_fibers(fibers) -> MonomialIdeal:
    std = [(i, j, k) for i, parts in enumerate(fibers) for j, b in enumerate(parts) for k in range(b)]
    return ideal_from_standard_set(std, 3)


def enumerate_strongly_stable(d: int):
    """Every strongly stable artinian ideal of colength d in k[x, y, z], once each."""
    if d < 1:
        raise ValueError("d must be positive")
    for fibers in strongly_stable_fibers(d):
        yield ideal_from_fibers(fibers)


def count_strongly_stable(d: int) -> int:
    return sum(1 for _ in strongly_stable_fibers(d))


# --- all artinian ideals -----------------------------------------------------


def _partitions(weight: int, cap: int, bounds=None):
    """Partitions of ``weight`` with parts <= cap, contained in ``bounds`` if given."""

    def rec(remaining, j, cap):
        if remaining == 0:
            yield ()
            return
        if bounds is not None:
            if j >= len(bounds):
                return
            cap = min(cap, bounds[j])
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, j + 1, part):
                yield (part,) + rest

    return rec(weight, 0, cap)


def _plane_partitions(d: int):
    def rec(prev, remaining):
        for w in range(min(remaining, sum(prev)), 0, -1):
            for layer in _partitions(w, prev[0], prev):
                if remaining == w:
                    yield (layer,)
                else:
                    for tail in rec(layer, remaining - w):
                        yield (layer,) + tail

    for w in range(d, 0, -1):
        for layer in _partitions(w, w):
            if w == d:
                yield (layer,)
            else:
                for tail in rec(layer, d - w):
                    yield (layer,) + tail


def enumerate_all_artinian(n: int, d: int):
    """All artinian monomial ideals of colength d in n = 2 or 3 variables."""
    if n not in (2, 3):
        raise ValueError("only n = 2 and n = 3 are supported")
    if d > ALL_ARTINIAN_LIMIT:
        raise BudgetExceeded(f"d = {d} exceeds the exhaustive limit {ALL_ARTINIAN_LIMIT}")
    if d < 1:
        raise ValueError("d must be positive")
    if n == 2:
        for lam in _partitions(d, d):
            yield ideal_from_standard_set([(i, j) for i, b in enumerate(lam) for j in range(b)], 2)
    else:
        for layers in _plane_partitions(d):
            yield ideal_from_standard_set(
                [(i, j, k) for i, lam in enumerate(layers) for j, b in enumerate(lam) for k in range(b)],
                3,
            )


def random_artinian(n: int, d: int, rng: random.Random) -> MonomialIdeal:
    """Grow a random order ideal of size d one addable cell at a time."""
    origin = (0,) * n
    std = {origin}
    addable = {origin[:i] + (1,) + origin[i + 1:] for i in range(n)}
    while len(std) < d:
        cell = rng.choice(sorted(addable))
        std.add(cell)
        addable.discard(cell)
        for i in range(n):
            c = cell[:i] + (cell[i] + 1,) + cell[i + 1:]
            if all(c[k] == 0 or c[:k] + (c[k] - 1,) + c[k + 1:] in std for k in range(n)):
                addable.add(c)
    return ideal_from_standard_set(std, n)


# --- records and searches ----------------------------------------------------


@dataclass
class CensusRecord:
    ideal: str
    d: int
    total: int
    signatures: dict
    socle: int
    min_x_power: int
    strongly_stable: bool
    flags: list = field(default_factory=list)
    report: dict | None = None

    def check(self) -> None:
        sig = self.signatures
        assert sum(sig.values()) == self.total, self.ideal
        assert sig["ppn"] == sig["nnp"] + self.d, self.ideal
        assert sig["pnp"] == sig["npn"] + self.d, self.ideal
        assert sig["npp"] == sig["pnn"] + self.d, self.ideal
        assert (self.total - self.d) % 2 == 0, self.ideal

    def csv_row(self) -> list:
        return [self.ideal, self.d, self.total, *(self.signatures[s] for s in SIGS),
                self.socle, self.min_x_power, "|".join(self.flags)]

    def to_dict(self) -> dict:
        out = dict(self.report) if self.report else {
            "ideal": self.ideal, "n": 3, "d": self.d, "total": self.total,
            "socle_dim": self.socle, "signatures": dict(self.signatures),
        }
        out.update(min_x_power=self.min_x_power, strongly_stable=self.strongly_stable,
                   flags=list(self.flags))
        return out


def ideal_flags(I: MonomialIdeal, d: int) -> list[str]:
    flags = []
    r = 1
    while comb(r + 2, 3) < d:
        r += 1
    if comb(r + 2, 3) == d and I == power_ideal(3, r):
        flags.append("fat")
    if I == lex_truncation_ideal(d):
        flags.append("lex")
    for rr in range(3, r + 1):
        for i in range(2, rr):
            if counterexample_colength(rr, i) == d and I == counterexample_ideal(rr, i):
                flags.append("cx")
    return flags


def make_record(I: MonomialIdeal, full: bool = False) -> CensusRecord:
    rep = tangent_report(I)
    rec = CensusRecord(
        ideal=format_ideal(I),
        d=rep.d,
        total=rep.total,
        signatures=dict(rep.signature_totals),
        socle=rep.socle_dim,
        min_x_power=min_x_power(I),
        strongly_stable=is_strongly_stable(I),
        flags=ideal_flags(I, rep.d),
        report=rep.to_dict() if full else None,
    )
    rec.check()
    return rec


def _record_from_gens(args):
    gens, full = args
    return make_record(MonomialIdeal(3, gens), full)


def default_workers() -> int:
    env = os.environ.get("STAIRCASE_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def records_for(ideals, workers: int | None = None, full: bool = False):
    """Order-preserving map of :func:`make_record` over ``ideals``."""
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        for I in ideals:
            yield make_record(I, full)
        return
    with ProcessPoolExecutor(workers) as pool:
        yield from pool.map(_record_from_gens, ((I.gens, full) for I in ideals), chunksize=256)


def check_budget(d: int, budget_override: bool = False) -> None:
    if d > DEFAULT_BUDGET and not budget_override:
        raise BudgetExceeded(f"d = {d} exceeds the census budget {DEFAULT_BUDGET}")


def search_extremes(d: int, filter_xpow: int | None = None, workers: int | None = None,
                    budget_override: bool = False, full: bool = False) -> list[CensusRecord]:
    """Tangent records of strongly stable ideals of colength d, largest total first.

    ``filter_xpow=p`` keeps only the ideals with x^p not in the ideal.
    Ties keep enumeration order.
    """
    check_budget(d, budget_override)
    ideals = enumerate_strongly_stable(d)
    if filter_xpow is not None:
        ideals = (I for I in ideals if min_x_power(I) > filter_xpow)
    records = list(records_for(ideals, workers, full))
    records.sort(key=lambda r: -r.total)
    return records


def counterexample_report(r: int, i: int = 2) -> dict:
    """Compare T(J) for the counterexample family with T(E(d)) at the same colength."""
    if r < 3:
        raise ValueError("needs r >= 3")
    d = counterexample_colength(r, i)
    E = lex_truncation_ideal(d)
    J = counterexample_ideal(r, i)
    rep_e = tangent_report(E)
    rep_j = tangent_report(J)
    if rep_j.d != d or rep_e.d != d:
        raise AssertionError("colength mismatch")
    out = {
        "r": r,
        "i": i,
        "d": d,
        "E": format_ideal(E),
        "J": format_ideal(J),
        "E_total": rep_e.total,
        "J_total": rep_j.total,
        "E_socle": rep_e.socle_dim,
        "J_socle": rep_j.socle_dim,
        "E_non_socle": rep_e.non_socle,
        "J_non_socle": rep_j.non_socle,
        "strict": rep_j.total > rep_e.total,
    }
    if i == 2:
        out["formula"] = e_ideal_tangent_formula(r)
        out["socle_formula"] = e_ideal_socle_part(r)
        if rep_e.total != out["formula"]:
            raise AssertionError(f"E({d}) total {rep_e.total} != formula {out['formula']}")
    return out


# --- persistence -------------------------------------------------------------


def write_csv(records, path) -> int:
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            rec.check()
            writer.writerow(rec.csv_row())
            count += 1
    return count


def read_csv(path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def write_jsonl(records, path) -> int:
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            rec.check()
            fh.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
            count += 1
    return count
