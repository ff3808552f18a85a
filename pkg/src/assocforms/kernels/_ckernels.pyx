# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (same contracts as _pykernels)."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


def mul_terms(dict t1, dict t2):
    cdef dict res = {}
    cdef list items1
    cdef object k1, c1, k2, c2, k, v
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    items1 = list(t1.items())
    for k2, c2 in t2.items():
        for k1, c1 in items1:
            k = k1 + k2
            v = res.get(k)
            if v is None:
                res[k] = c1 * c2
            else:
                res[k] = v + c1 * c2
    return {k: v for k, v in res.items() if v}


cdef inline int64_t _inv(int64_t a, int64_t p):
    cdef int64_t r = 1, e = p - 2
    a %= p
    while e:
        if e & 1:
            r = (r * a) % p
        a = (a * a) % p
        e >>= 1
    return r


def rref_mod(mat, int64_t p):
    cdef cnp.ndarray[int64_t, ndim=2] arr = np.array(mat, dtype=np.int64) % p
    cdef int64_t[:, ::1] a = np.ascontiguousarray(arr)
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef int64_t inv, f, t
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        k = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(cols):
                t = a[r, j]
                a[r, j] = a[k, j]
                a[k, j] = t
        inv = _inv(a[r, c], p)
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                if a[r, j] != 0:
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        pivots.append(c)
        r += 1
    return np.asarray(a), pivots


def det_mod(mat, int64_t p):
    cdef int64_t[:, ::1] a = np.ascontiguousarray(np.array(mat, dtype=np.int64) % p)
    cdef Py_ssize_t n = a.shape[0], c, i, j, k
    cdef int64_t det = 1, inv, f, t
    for c in range(n):
        k = -1
        for i in range(c, n):
            if a[i, c] != 0:
                k = i
                break
        if k < 0:
            return 0
        if k != c:
            for j in range(n):
                t = a[c, j]
                a[c, j] = a[k, j]
                a[k, j] = t
            det = (p - det) % p
        det = (det * a[c, c]) % p
        inv = _inv(a[c, c], p)
        for i in range(c + 1, n):
            f = (a[i, c] * inv) % p
            if f == 0:
                continue
            for j in range(c, n):
                a[i, j] = (a[i, j] - f * a[c, j]) % p
                if a[i, j] < 0:
                    a[i, j] += p
    return int(det)
