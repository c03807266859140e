"""Pure-Python component counter; same contract as the compiled ``_kernel``.

For a degree alpha the candidate set is C = {gamma standard : gamma - alpha in the
staircase}.  Points of C are joined when they differ by a unit vector.  A
component is unbounded when one of its points gamma has gamma_i = 0 and
gamma - e_i - alpha lies in the staircase, since gamma - e_i then belongs to
(staircase + alpha) minus the staircase but sits outside N^n.
"""

import numpy as np


def graded_counts(std, cells, shape, alphas):
    """Count bounded components (and singleton ones) for each row of ``alphas``.

    std    -- (d, n) int array of standard exponents
    cells  -- flat int array over the box ``shape``; index into std, or -1 in the ideal
    shape  -- pure-power exponents (s_1, ..., s_n)
    alphas -- (k, n) int array of degrees
    """
    std = [tuple(int(c) for c in row) for row in np.asarray(std)]
    cells = np.asarray(cells).tolist()
    shape = tuple(int(c) for c in shape)
    n = len(shape)
    strides = [1] * n
    for i in range(n - 2, -1, -1):
        strides[i] = strides[i + 1] * shape[i + 1]
    offsets = [sum(c * st for c, st in zip(g, strides)) for g in std]

    def in_ideal(q):
        if min(q) < 0:
            return False
        off = 0
        for i in range(n):
            if q[i] >= shape[i]:
                return True
            off += q[i] * strides[i]
        return cells[off] < 0

    alphas = np.asarray(alphas).reshape(-1, n)
    counts = np.zeros(len(alphas), dtype=np.int64)
    singles = np.zeros(len(alphas), dtype=np.int64)
    d = len(std)
    for row, alpha in enumerate(alphas.tolist()):
        in_c = [in_ideal([g[i] - alpha[i] for i in range(n)]) for g in std]
        parent = list(range(d))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for k in range(d):
            if not in_c[k]:
                continue
            g = std[k]
            for i in range(n):
                if g[i] + 1 < shape[i]:
                    nb = cells[offsets[k] + strides[i]]
                    if nb >= 0 and in_c[nb]:
                        ra, rb = find(k), find(nb)
                        if ra != rb:
                            parent[rb] = ra
        size = [0] * d
        unbounded = [False] * d
        for k in range(d):
            if not in_c[k]:
                continue
            root = find(k)
            size[root] += 1
            g = std[k]
            for i in range(n):
                if g[i] == 0:
                    q = [g[c] - alpha[c] for c in range(n)]
                    q[i] -= 1
                    if in_ideal(q):
                        unbounded[root] = True
        for k in range(d):
            if size[k] and not unbounded[k]:
                counts[row] += 1
                if size[k] == 1:
                    singles[row] += 1
    return counts, singles
