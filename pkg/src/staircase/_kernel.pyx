# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled component counter; mirrors ``_kernel_py.graded_counts``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef enum:
    MAXN = 16


cdef inline bint _in_ideal(const int *q, const int *shape, const long *strides,
                           const int[::1] cells, int n) noexcept nogil:
    cdef long off = 0
    cdef int i
    for i in range(n):
        if q[i] < 0:
            return False
    for i in range(n):
        if q[i] >= shape[i]:
            return True
        off += q[i] * strides[i]
    return cells[off] < 0


cdef inline int _find(int[::1] parent, int a) noexcept nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def graded_counts(std_in, cells_in, shape_in, alphas_in):
    cdef int[:, ::1] std = np.ascontiguousarray(std_in, dtype=np.int32)
    cdef int[::1] cells = np.ascontiguousarray(cells_in, dtype=np.int32).ravel()
    cdef int n = len(shape_in)
    if n > MAXN:
        raise ValueError(f"at most {MAXN} variables supported")
    cdef int[:, ::1] alphas = np.ascontiguousarray(alphas_in, dtype=np.int32).reshape(-1, n)
    cdef int d = std.shape[0]
    cdef Py_ssize_t nalpha = alphas.shape[0]

    cdef int shape[MAXN]
    cdef long strides[MAXN]
    cdef int q[MAXN]
    cdef int i, k, a, nb, ra, rb, root
    cdef Py_ssize_t row
    for i in range(n):
        shape[i] = shape_in[i]
    if n:
        strides[n - 1] = 1
    for i in range(n - 2, -1, -1):
        strides[i] = strides[i + 1] * shape[i + 1]

    cdef long[::1] offsets = np.zeros(d, dtype=np.int64)
    for k in range(d):
        for i in range(n):
            offsets[k] += std[k, i] * strides[i]

    cdef int[::1] parent = np.zeros(d, dtype=np.int32)
    cdef int[::1] size = np.zeros(d, dtype=np.int32)
    cdef cnp.uint8_t[::1] in_c = np.zeros(d, dtype=np.uint8)
    cdef cnp.uint8_t[::1] unbounded = np.zeros(d, dtype=np.uint8)
    counts_arr = np.zeros(nalpha, dtype=np.int64)
    singles_arr = np.zeros(nalpha, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    cdef long long[::1] singles = singles_arr

    with nogil:
        for row in range(nalpha):
            for k in range(d):
                for i in range(n):
                    q[i] = std[k, i] - alphas[row, i]
                in_c[k] = _in_ideal(q, shape, strides, cells, n)
                parent[k] = k
                size[k] = 0
                unbounded[k] = 0
            for k in range(d):
                if not in_c[k]:
                    continue
                for i in range(n):
                    if std[k, i] + 1 < shape[i]:
                        nb = cells[offsets[k] + strides[i]]
                        if nb >= 0 and in_c[nb]:
                            ra = _find(parent, k)
                            rb = _find(parent, nb)
                            if ra != rb:
                                parent[rb] = ra
            for k in range(d):
                if not in_c[k]:
                    continue
                root = _find(parent, k)
                size[root] += 1
                if unbounded[root]:
                    continue
                for i in range(n):
                    if std[k, i] == 0:
                        for a in range(n):
                            q[a] = std[k, a] - alphas[row, a]
                        q[i] -= 1
                        if _in_ideal(q, shape, strides, cells, n):
                            unbounded[root] = 1
                            break
            for k in range(d):
                if size[k] and not unbounded[k]:
                    counts[row] += 1
                    if size[k] == 1:
                        singles[row] += 1
    return counts_arr, singles_arr
