"""Small binary fields GF(2^k), k <= 6, via log/antilog tables.

Elements are ints in ``range(2**k)`` in the polynomial basis; bit i is the
coefficient of x^i. Addition is XOR.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# Conway polynomials, bit i = coefficient of x^i
MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
}
MAX_DEGREE = max(MODULI)


class GF2k:
    def __init__(self, k: int):
        if k not in MODULI:
            raise ValueError(f"GF(2^{k}) not supported; k must be in 1..{MAX_DEGREE}")
        self.k = k
        self.order = 1 << k
        self.modulus = MODULI[k]
        n = self.order - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            if log[x] != -1:
                raise ValueError(f"modulus for k={k} is not primitive")
            log[x] = i
            x <<= 1
            if x & self.order:
                x ^= self.modulus
        exp[n:] = exp[:n]
        self.exp, self.log = exp, log
        a = np.arange(self.order)
        mul = exp[(log[a][:, None] + log[a][None, :]) % n]
        mul[(a[:, None] == 0) | (a[None, :] == 0)] = 0
        self.mul = mul.astype(np.uint8)

    def multiply(self, a, b):
        return self.mul[a, b]

    def power(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = int(self.mul[out, a])
        return out

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        n = self.order - 1
        return int(self.exp[(n - self.log[a]) % n])

    def frobenius(self, a):
        return self.mul[a, a]

    def self_test(self, samples: int = 200, seed: int = 0) -> None:
        rng = np.random.default_rng(seed)
        a, b, c = (rng.integers(0, self.order, samples) for _ in range(3))
        M = self.mul
        assert (M[M[a, b], c] == M[a, M[b, c]]).all(), "multiplication is not associative"
        assert (M[a, b ^ c] == (M[a, b] ^ M[a, c])).all(), "multiplication does not distribute"
        assert (self.frobenius(a ^ b) == (self.frobenius(a) ^ self.frobenius(b))).all(), "Frobenius is not additive"
        nz = np.arange(1, self.order)
        inv = np.array([self.inverse(int(x)) for x in nz])
        assert (M[nz, inv] == 1).all(), "inverse table is wrong"


@lru_cache(maxsize=None)
def field(k: int) -> GF2k:
    return GF2k(k)


@lru_cache(maxsize=None)
def projective_points(k: int) -> np.ndarray:
    """Normalised points of P^3(GF(2^k)) (first nonzero coordinate 1), shape (N, 4), uint8."""
    qk = 1 << k
    blocks = []
    for lead in range(4):
        free = 3 - lead
        n = qk**free
        pts = np.zeros((n, 4), dtype=np.uint8)
        pts[:, lead] = 1
        idx = np.arange(n)
        for j in range(free):
            pts[:, 3 - j] = (idx // qk**j) % qk
        blocks.append(pts)
    out = np.concatenate(blocks)
    out.setflags(write=False)
    return out
