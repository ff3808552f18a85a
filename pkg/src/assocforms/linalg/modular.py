"""Multi-modular kernels and determinants for rational matrices.

Each prime is handled independently (there is no shared state between the
per-prime computations); results are combined by the Chinese remainder theorem
and rational reconstruction, and the final answer is verified exactly over Q.
"""
from __future__ import annotations

from math import gcd, isqrt

import numpy as np

from ..errors import NotSquare
from ..kernels import det_mod, rref_mod
from ..scalars import QQ, is_rational, qq
from .matrix import Matrix, _as_matrix

# primes just below 2**31, so products of residues fit in int64
_PRIME_START = (1 << 31) - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes(count: int, start: int = _PRIME_START) -> list:
    out = []
    p = start
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p -= 1
    return out


def _integer_rows(M: Matrix):
    """Scale each row by the lcm of its denominators; returns (int rows, scales)."""
    rows, scales = [], []
    for r in M.data:
        if not all(is_rational(x) for x in r):
            raise TypeError("multi-modular methods need rational entries")
        den = 1
        for x in r:
            x = qq(x)
            den = den * int(x.denominator) // gcd(den, int(x.denominator))
        rows.append([int(qq(x) * den) for x in r])
        scales.append(den)
    return rows, scales


def _to_residues(rows, p):
    return np.array([[x % p for x in r] for r in rows], dtype=np.int64).reshape(len(rows), -1)


def rational_reconstruct(a: int, m: int):
    """Smallest fraction n/d with n = a d (mod m), |n|, d <= sqrt(m/2); None if none."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if gcd(r1, s1) != 1:
        return None
    return QQ(r1, s1)


def _crt(res_a, mod_a, res_b, mod_b):
    inv = pow(mod_a, -1, mod_b)
    t = ((res_b - res_a) * inv) % mod_b
    return res_a + mod_a * t, mod_a * mod_b


def kernel_multimodular(M, max_primes: int = 200, batch: int = 3) -> list:
    """Kernel basis (first nonzero entry 1), found modulo primes and certified over Q."""
    M = _as_matrix(M)
    rows, _ = _integer_rows(M)
    ncols = M.cols
    if not rows:
        return [tuple(QQ(1) if i == j else QQ(0) for i in range(ncols)) for j in range(ncols)]
    plist = primes(max_primes)
    best_rank, best_piv = -1, None
    images = []  # (prime, free-column entries) for primes with the best pivot pattern
    idx = 0
    modulus = 1
    acc = None
    while idx < len(plist):
        for p in plist[idx: idx + batch]:
            red, piv = rref_mod(_to_residues(rows, p), p)
            key = (len(piv), [-c for c in piv])
            if best_piv is None or key > (best_rank, [-c for c in best_piv]):
                # higher rank, or same rank with lexicographically smaller pivots
                best_rank, best_piv = len(piv), piv
                images = []
                modulus, acc = 1, None
            if piv != best_piv:
                continue
            free = [c for c in range(ncols) if c not in set(piv)]
            block = [[int(red[i, f]) for f in free] for i in range(len(piv))]
            images.append(p)
            if acc is None:
                acc, modulus = block, p
            else:
                acc = [
                    [_crt(a, modulus, b, p)[0] for a, b in zip(ra, rb)]
                    for ra, rb in zip(acc, block)
                ]
                modulus *= p
        idx += batch
        if acc is None:
            continue
        candidate = _reconstruct_kernel(acc, modulus, best_piv, ncols)
        if candidate is not None and _verify_kernel(rows, candidate):
            return candidate
    raise ArithmeticError("multi-modular kernel did not stabilize; increase max_primes")


def _reconstruct_kernel(acc, modulus, piv, ncols):
    pset = set(piv)
    free = [c for c in range(ncols) if c not in pset]
    basis = []
    for k, f in enumerate(free):
        v = [QQ(0)] * ncols
        v[f] = QQ(1)
        for i, p in enumerate(piv):
            x = rational_reconstruct(acc[i][k], modulus) if acc else QQ(0)
            if x is None:
                return None
            v[p] = -x
        lead = next(x for x in v if x)
        if lead != 1:
            v = [x / lead for x in v]
        basis.append(tuple(v))
    return basis


def _verify_kernel(rows, basis) -> bool:
    for v in basis:
        for r in rows:
            s = QQ(0)
            for a, x in zip(r, v):
                if a and x:
                    s += a * x
            if s:
                return False
    return True


def hadamard_bound(rows) -> int:
    """An integer >= |det| for the integer matrix ``rows``."""
    prod = 1
    for r in rows:
        prod *= sum(x * x for x in r)
    return isqrt(prod) + 1


def det_multimodular(M):
    M = _as_matrix(M)
    if not M.is_square():
        raise NotSquare("determinant of a non-square matrix")
    if M.rows == 0:
        return QQ(1)
    rows, scales = _integer_rows(M)
    bound = 2 * hadamard_bound(rows) + 1
    modulus, res = 1, 0
    p = _PRIME_START
    while modulus <= bound:
        while not _is_prime(p):
            p -= 1
        d = det_mod(_to_residues(rows, p), p)
        if modulus == 1:
            res, modulus = d, p
        else:
            res, modulus = _crt(res, modulus, d, p)
        p -= 1
    if res > modulus // 2:
        res -= modulus
    den = 1
    for s in scales:
        den *= s
    return QQ(res, den)
