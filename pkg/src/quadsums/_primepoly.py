"""Dense polynomial arithmetic over GF(p), numpy int64 coefficient arrays.

Coefficient order is ascending (constant term first).  The zero polynomial
is the empty array.  These routines back modulus construction, the
irreducibility test, and the small-instance gcd oracles; they are not meant
for the huge structured gcds, which go through the linearized fast path in
fieldcore.
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero


def trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    if len(nz) == 0:
        return a[:0]
    return a[: nz[-1] + 1]


def make(coeffs, p: int) -> np.ndarray:
    return trim(np.asarray(list(coeffs), dtype=np.int64) % p)


def deg(a: np.ndarray) -> int:
    return len(a) - 1


def add(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    out[: len(b)] = (out[: len(b)] + b) % p
    return trim(out)


def sub(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=np.int64)
    out[: len(a)] = a
    out[: len(b)] = (out[: len(b)] - b) % p
    return trim(out)


def mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return a[:0]
    return np.convolve(a, b) % p


def divmod_(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    if len(b) == 0:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return a[:0], a.copy()
    rem = a.copy()
    db = deg(b)
    inv_lead = pow(int(b[-1]), -1, p)
    q = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - db - 1, -1, -1):
        c = rem[i + db] * inv_lead % p
        if c:
            q[i] = c
            rem[i : i + db + 1] = (rem[i : i + db + 1] - c * b) % p
    return q, trim(rem)


def rem(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return divmod_(a, b, p)[1]


def monic(a: np.ndarray, p: int) -> np.ndarray:
    if len(a) == 0 or a[-1] == 1:
        return a
    return a * pow(int(a[-1]), -1, p) % p


def gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    while len(b):
        a, b = b, rem(a, b, p)
    return monic(a, p)


def powmod(base: np.ndarray, e: int, modulus: np.ndarray, p: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = rem(base, modulus, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), modulus, p)
        base = rem(mul(base, base, p), modulus, p)
        e >>= 1
    return result


def x_power_mod(e: int, modulus: np.ndarray, p: int) -> np.ndarray:
    """x**e mod modulus."""
    return powmod(np.array([0, 1], dtype=np.int64), e, modulus, p)


def substitute_x_power(a: np.ndarray, k: int) -> np.ndarray:
    """a(x**k); spreads coefficients, valid stand-in for a**p when k == p
    and the coefficients lie in GF(p)."""
    if len(a) == 0:
        return a
    out = np.zeros((len(a) - 1) * k + 1, dtype=np.int64)
    out[::k] = a
    return out


def is_irreducible(a: np.ndarray, p: int) -> bool:
    """Rabin test: x^(p^d) == x mod a, and gcd(x^(p^(d/q)) - x, a) = 1 for
    every prime q dividing d."""
    d = deg(a)
    if d < 1 or a[-1] == 0:
        return False
    if d == 1:
        return True
    if a[0] == 0:  # divisible by x
        return False
    x = np.array([0, 1], dtype=np.int64)
    for q in _prime_divisors(d):
        h = x_power_mod(p ** (d // q), a, p)
        if deg(gcd(sub(h, x, p), a, p)) != 0:
            return False
    h = x_power_mod(p**d, a, p)
    return len(sub(h, x, p)) == 0


def _prime_divisors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out
