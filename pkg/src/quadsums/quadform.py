"""Base-case type/nullity via Gram-matrix diagonalization, and the
brute-force summation oracle.

Tr_N(f(x)) is a quadratic form on GF(p)^N once GF(p^N) is identified with
coordinate vectors; its Gram matrix is built from plain evaluations of
Q(x) = Tr_N(f(x)), so the construction is uniform in the exponent pattern
and self-validating against the defining identity x B x^T = Q(x).
Diagonalization is symmetric congruence reduction mod p.

The brute-force oracle enumerates every x in GF(p^N) in chunks, evaluates
Tr_N(f(x)) with honest (vectorized) field arithmetic, tallies residues, and
returns the exact element of Z[zeta_p].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import CyclotomicInt, cyc_from_trace_counts
from .errors import InternalInconsistency, InvalidInput, NotSymmetric, TooLarge
from .fieldcore import FieldCtx, FieldElem, build_field_ctx, embed_element
from .nullity import QuadFunc, nullity_at

DEFAULT_CAP = 20_000_000
_CHUNK = 1 << 17


def legendre(a: int, p: int) -> int:
    """Quadratic character of GF(p): 0 on multiples of p, +1 on nonzero
    squares, -1 otherwise."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def elem_quadratic_character(a: FieldElem) -> int:
    """Quadratic character of GF(p^d) evaluated by exact exponentiation."""
    if a.is_zero():
        return 0
    r = a ** ((a.ctx.order - 1) // 2)
    if r == a.ctx.one():
        return 1
    if r == -a.ctx.one():
        return -1
    raise InternalInconsistency("character value outside {+1,-1}")


def smallest_nonsquare(ctx: FieldCtx) -> FieldElem:
    """Non-square of GF(p^d) with the smallest integer encoding."""
    for code in range(1, ctx.order):
        x = ctx.from_encoding(code)
        if elem_quadratic_character(x) == -1:
            return x
    raise InternalInconsistency("no nonsquare found; field of odd order > 1 must have one")


# -- batch evaluation of Tr_N(f(x)) --------------------------------------------


def _embedded_terms(f: QuadFunc, ctx_big: FieldCtx) -> list[tuple[FieldElem, int]]:
    return [
        (c if ctx_big.key == f.ctx.key else embed_element(f.ctx, ctx_big, c), a)
        for c, a in f.terms
    ]


def trace_values(ctx: FieldCtx, terms, X: np.ndarray, linear: FieldElem | None = None) -> np.ndarray:
    """Tr(f(x)) for every coordinate row of X, with an optional linear term
    Tr(b*x); exact mod-p integers."""
    X = np.asarray(X, dtype=np.float64)
    acc = np.zeros_like(X)
    for c, a in terms:
        Y = ctx.bulk_frobenius(X, a)
        T = ctx.bulk_mul(X, Y)
        acc = np.mod(acc + ctx.bulk_mul_const(T, c), ctx.p)
    if linear is not None:
        acc = np.mod(acc + ctx.bulk_mul_const(X, linear), ctx.p)
    return ctx.bulk_trace(acc).astype(np.int64)


def _basis_rows(N: int) -> np.ndarray:
    return np.eye(N)


# -- Gram matrix and congruence diagonalization ---------------------------------


def gram_matrix(f: QuadFunc, m: int, ctx: FieldCtx | None = None) -> np.ndarray:
    """Symmetric N x N matrix over GF(p), N = m*n, with x B x^T = Tr_N(f(x))
    on coordinates of the supplied (or default) context."""
    if m < 1:
        raise InvalidInput("m must be >= 1")
    N = m * f.n
    ctx_big = ctx or build_field_ctx(f.p, N)
    if ctx_big.d != N:
        raise InvalidInput("context degree does not match m*n")
    p = f.p
    terms = _embedded_terms(f, ctx_big)

    rows = [_basis_rows(N)]
    pairs = [(u, v) for u in range(N) for v in range(u + 1, N)]
    if pairs:
        P = np.zeros((len(pairs), N))
        for i, (u, v) in enumerate(pairs):
            P[i, u] = 1
            P[i, v] = 1
        rows.append(P)
    Q = trace_values(ctx_big, terms, np.concatenate(rows, axis=0))
    q_single = Q[:N]
    B = np.diag(q_single).astype(np.int64)
    inv2 = pow(2, -1, p)
    for i, (u, v) in enumerate(pairs):
        val = (Q[N + i] - q_single[u] - q_single[v]) * inv2 % p
        B[u, v] = B[v, u] = val
    return B % p


@dataclass(frozen=True)
class QuadFormDiag:
    """Result of congruence diagonalization: diagonal entries (zeros
    included), rank, nullity, and type."""

    p: int
    dim: int
    diag: tuple[int, ...]
    rank: int
    nullity: int
    type_: int


def diagonalize(B: np.ndarray, p: int) -> QuadFormDiag:
    """Symmetric congruence reduction of B mod p.

    Pivot policy (fixed for determinism): use the first nonzero diagonal
    entry of the active block; if the whole active diagonal vanishes but
    some off-diagonal entry M[u,v] does not, replace e_u by e_u + e_v to
    expose 2*M[u,v] on the diagonal.  Only (rank, type) are contractual.
    """
    M = np.asarray(B, dtype=np.int64) % p
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSymmetric("matrix is not square")
    if (M != M.T).any():
        raise NotSymmetric("matrix is not symmetric")
    N = M.shape[0]
    M = M.copy()
    diag: list[int] = []
    i = 0
    while i < N:
        if M[i, i] == 0:
            cand = np.nonzero(np.diag(M)[i:])[0]
            if len(cand):
                u = i + int(cand[0])
                M[[i, u]] = M[[u, i]]
                M[:, [i, u]] = M[:, [u, i]]
            else:
                uv = np.nonzero(np.triu(M[i:, i:], 1))
                if len(uv[0]) == 0:
                    break  # zero active block: remaining dims are radical
                order = np.lexsort((uv[1], uv[0]))
                u = i + int(uv[0][order[0]])
                v = i + int(uv[1][order[0]])
                M[u] = (M[u] + M[v]) % p
                M[:, u] = (M[:, u] + M[:, v]) % p
                if u != i:
                    M[[i, u]] = M[[u, i]]
                    M[:, [i, u]] = M[:, [u, i]]
        d = int(M[i, i])
        inv_d = pow(d, -1, p)
        c = M[i + 1 :, i] * inv_d % p
        M[i + 1 :, :] = (M[i + 1 :, :] - np.outer(c, M[i, :])) % p
        M[:, i + 1 :] = (M[:, i + 1 :] - np.outer(M[:, i], c)) % p
        diag.append(d)
        i += 1
    rank = len(diag)
    full_diag = tuple(diag) + (0,) * (N - rank)
    prod = 1
    for d in diag:
        prod = prod * d % p
    t = 1 if rank == 0 else legendre(prod, p)
    return QuadFormDiag(p=p, dim=N, diag=full_diag, rank=rank, nullity=N - rank, type_=t)


def type_direct(f: QuadFunc, m: int, ctx: FieldCtx | None = None) -> tuple[int, int]:
    """(type, nullity) of Tr_{mn}(f) by Gram-matrix diagonalization; the
    nullity is cross-checked against the gcd backend."""
    dg = diagonalize(gram_matrix(f, m, ctx), f.p)
    l_gcd = nullity_at(f, m * f.n)
    if dg.nullity != l_gcd:
        raise InternalInconsistency(
            f"diagonalization nullity {dg.nullity} != gcd nullity {l_gcd} at N={m * f.n}"
        )
    return dg.type_, dg.nullity


# -- brute-force oracle ----------------------------------------------------------


def _bilinear_matrix(f: QuadFunc, ctx_big: FieldCtx) -> np.ndarray:
    """G with Tr(f(sum x_u b_u)) = x G x^T, entries Tr(a_i b_u b_v^(p^a_i))
    computed by scalar field arithmetic on the power basis."""
    N = ctx_big.d
    basis = [ctx_big.from_encoding(ctx_big.p**u) for u in range(N)]
    G = np.zeros((N, N), dtype=np.int64)
    for c, a in _embedded_terms(f, ctx_big):
        ys = [c * b.frobenius(a) for b in basis]
        for u, bu in enumerate(basis):
            for v, yv in enumerate(ys):
                G[u, v] = (G[u, v] + (bu * yv).trace()) % ctx_big.p
    return G


def _trace_counts(f: QuadFunc, m: int, cap: int, linear=None) -> np.ndarray:
    N = m * f.n
    p = f.p
    size = p**N
    if size > cap:
        raise TooLarge(f"p^N = {size} exceeds cap {cap}")
    ctx_big = build_field_ctx(p, N)
    G = _bilinear_matrix(f, ctx_big).astype(np.float64)
    lin_vec = None
    if linear is not None:
        linear = ctx_big.elem(linear) if not isinstance(linear, FieldElem) else linear
        if linear.ctx.key != ctx_big.key:
            linear = embed_element(linear.ctx, ctx_big, linear)
        lin_vec = np.array(
            [(linear * ctx_big.from_encoding(p**u)).trace() for u in range(N)], dtype=np.float64
        )
    pows = np.array([p**j for j in range(N)], dtype=np.int64)
    counts = np.zeros(p, dtype=np.int64)
    for lo in range(0, size, _CHUNK):
        hi = min(lo + _CHUNK, size)
        idx = np.arange(lo, hi, dtype=np.int64)
        X = ((idx[:, None] // pows) % p).astype(np.float64)
        tr = ((X @ G) * X).sum(axis=1)
        if lin_vec is not None:
            tr += X @ lin_vec
        counts += np.bincount(np.mod(tr, p).astype(np.int64), minlength=p)
    return counts


def brute_force_sum(f: QuadFunc, m: int, cap: int = DEFAULT_CAP) -> CyclotomicInt:
    """Definitional oracle: enumerate GF(p^{mn}), tally Tr(f(x)) per residue,
    return the exact sum in Z[zeta_p]."""
    return cyc_from_trace_counts(f.p, _trace_counts(f, m, cap))


def brute_force_sum_shifted(f: QuadFunc, b, m: int, cap: int = DEFAULT_CAP) -> CyclotomicInt:
    """Oracle for the affinely shifted sum over GF(p^{mn}) of
    e(f(x) + b*x)."""
    return cyc_from_trace_counts(f.p, _trace_counts(f, m, cap, linear=b))
