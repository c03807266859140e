"""dim_k Hom_S(I, S/J) by linear algebra over Z/p.

A homomorphism I -> S/J is a tuple (phi_a) in (S/J)^m, one value per minimal
generator g_a, subject to (lcm/g_a) phi_a = (lcm/g_b) phi_b for every pair
a < b, where lcm = lcm(g_a, g_b).  The pairwise relations present I (the first
two terms of the Taylor resolution), so the Hom space is the kernel of the
matrix below.  Multiplying a standard monomial by a monomial gives another
standard monomial or zero, so every entry is 0 or +-1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MonomialIdeal, colength, colon

DEFAULT_PRIME = 32003
MAX_ENTRIES = 10**8


@dataclass(frozen=True)
class TaylorPresentation:
    generator_degrees: tuple
    pairs: tuple  # (a, b) with a < b
    syzygy_degrees: tuple  # lcm(g_a, g_b), aligned with pairs


def taylor_presentation(I: MonomialIdeal) -> TaylorPresentation:
    if I.is_zero:
        raise ValueError("the zero ideal has no presentation")
    gens = I.gens
    pairs = tuple((a, b) for a in range(len(gens)) for b in range(a + 1, len(gens)))
    lcms = tuple(tuple(max(u, v) for u, v in zip(gens[a], gens[b])) for a, b in pairs)
    return TaylorPresentation(gens, pairs, lcms)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def rank_mod_p(M, p: int) -> int:
    """Rank of an integer matrix over Z/p by dense Gaussian elimination."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if len(nz) == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        below = rank + 1 + np.nonzero(A[rank + 1:, c])[0]
        if len(below):
            A[below] = (A[below] - np.outer(A[below, c], A[rank])) % p
        rank += 1
    return rank


def _std_index(J: MonomialIdeal):
    return {g: k for k, g in enumerate(J.standard_monomials)}


def hom_matrix(I: MonomialIdeal, J: MonomialIdeal, alpha=None) -> np.ndarray:
    """Relation matrix (rows: pair x target monomial, cols: generator x source monomial).

    With ``alpha`` given, only the alpha-graded strand: phi_a sends g_a to the
    standard monomial alpha + g_a.
    """
    if I.n != J.n:
        raise ValueError("ideals live in different rings")
    J.pure_powers  # raises NotArtinian early
    pres = taylor_presentation(I)
    std = J.standard_monomials
    index = _std_index(J)
    m = len(pres.generator_degrees)

    if alpha is None:
        src = [(a, k) for a in range(m) for k in range(len(std))]
        tgt = [(e, k) for e in range(len(pres.pairs)) for k in range(len(std))]
    else:
        alpha = tuple(alpha)
        src = []
        for a, g in enumerate(pres.generator_degrees):
            mu = tuple(x + y for x, y in zip(alpha, g))
            if mu in index:
                src.append((a, index[mu]))
        tgt = []
        for e, l in enumerate(pres.syzygy_degrees):
            nu = tuple(x + y for x, y in zip(alpha, l))
            if nu in index:
                tgt.append((e, index[nu]))
    if len(src) * max(len(tgt), 1) > MAX_ENTRIES:
        raise ValueError(f"hom matrix {len(tgt)} x {len(src)} exceeds the size cap")
    tgt_pos = {t: r for r, t in enumerate(tgt)}
    M = np.zeros((len(tgt), len(src)), dtype=np.int64)
    for col, (a, k) in enumerate(src):
        mu = std[k]
        g = pres.generator_degrees[a]
        for e, (u, v) in enumerate(pres.pairs):
            if a not in (u, v):
                continue
            shift = tuple(x - y for x, y in zip(pres.syzygy_degrees[e], g))
            target = tuple(x + y for x, y in zip(mu, shift))
            k2 = index.get(target)
            if k2 is None:
                continue
            M[tgt_pos[(e, k2)], col] += 1 if a == u else -1
    return M


def hom_dim(I: MonomialIdeal, J: MonomialIdeal, p: int = DEFAULT_PRIME) -> int:
    """dim Hom_S(I, S/J) over Z/p as m * colength(J) minus the rank."""
    M = hom_matrix(I, J)
    if M.shape[0] == 0:
        return M.shape[1]
    return M.shape[1] - rank_mod_p(M, p)


def hom_dim_graded(I: MonomialIdeal, J: MonomialIdeal, alpha, p: int = DEFAULT_PRIME) -> int:
    M = hom_matrix(I, J, alpha)
    if M.shape[1] == 0:
        return 0
    if M.shape[0] == 0:
        return M.shape[1]
    return M.shape[1] - rank_mod_p(M, p)


def tangent_dim_oracle(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> int:
    return hom_dim(I, I, p)


def two_var_length_identity_check(I: MonomialIdeal, J: MonomialIdeal, p: int = DEFAULT_PRIME):
    """Compare dim Hom(I, S/J) with colength(J) + length((I:J)/I) in two variables."""
    if I.n != 2 or J.n != 2:
        raise ValueError("the length identity is checked in two variables")
    lhs = hom_dim(I, J, p)
    rhs = colength(J) + colength(I) - colength(colon(I, J))
    return lhs, rhs, lhs == rhs
