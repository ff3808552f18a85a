"""Reference kernels in Python (with numpy for the modular elimination)."""
import numpy as np


def mul_terms(t1: dict, t2: dict) -> dict:
    """Product of two packed-key term dicts (keys add, coefficients multiply)."""
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    res = {}
    get = res.get
    items1 = list(t1.items())
    for k2, c2 in t2.items():
        for k1, c1 in items1:
            k = k1 + k2
            v = get(k)
            if v is None:
                res[k] = c1 * c2
            else:
                res[k] = v + c1 * c2
    return {k: v for k, v in res.items() if v}


def rref_mod(mat, p: int):
    """Reduced row echelon form of an int64 matrix modulo a prime p < 2**31.

    Returns (reduced matrix, pivot column list).  The input is not modified.
    """
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            a[mask] = (a[mask] - (col[mask, None] * a[r][None, :]) % p) % p
        pivots.append(c)
        r += 1
    return a, pivots


def det_mod(mat, p: int) -> int:
    """Determinant of a square int64 matrix modulo p."""
    a = np.array(mat, dtype=np.int64) % p
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        k = c + int(nz[0])
        if k != c:
            a[[c, k]] = a[[k, c]]
            det = -det
        piv = int(a[c, c])
        det = (det * piv) % p
        inv = pow(piv, p - 2, p)
        if c + 1 < n:
            f = (a[c + 1:, c] * inv) % p
            a[c + 1:] = (a[c + 1:] - (f[:, None] * a[c][None, :]) % p) % p
    return det % p
