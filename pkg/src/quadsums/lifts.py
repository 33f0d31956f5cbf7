"""Relative and explicit type formulas.

Given the type at a base degree and nullities from the profile, these
operations transport the type up the extension tower: odd-prime-power
steps, two-power steps (via the nonsquare twist of f), p-power steps
(under a p-adic condition on the exponents), the balanced explicit form
(all alpha_i of equal 2-adic order, exceeded by that of N), the monomial
closed form, and the linear-shift reduction.

Nullities are inputs here, never recomputed: violated congruences raise
instead of being repaired, since they can only mean an upstream bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, inf

import numpy as np

from .cyclotomic import CyclotomicInt, ExpSumValue
from .errors import (
    ConditionViolated,
    DivisibilityViolated,
    InternalInconsistency,
    InvalidInput,
    NotApplicable,
    ParityViolation,
    ZeroCoefficient,
)
from .fieldcore import FieldCtx, FieldElem, build_field_ctx, embed_element, is_prime
from .nullity import QuadFunc, radical_poly
from . import _linalg
from .quadform import elem_quadratic_character, legendre, smallest_nonsquare


def valuation(x: int, q: int) -> int | float:
    """q-adic order of x; inf for x = 0 (the distinguished marker)."""
    if x == 0:
        return inf
    v = 0
    while x % q == 0:
        x //= q
        v += 1
    return v


def multiplicative_order(base: int, modulus: int) -> int:
    """Order of base in (Z/modulus)^*; requires gcd(base, modulus) = 1."""
    base %= modulus
    if gcd(base, modulus) != 1:
        raise InvalidInput(f"{base} is not a unit mod {modulus}")
    phi = modulus - 1 if is_prime(modulus) else _euler_phi(modulus)
    for d in sorted(_divisors(phi)):
        if pow(base, d, modulus) == 1:
            return d
    raise InternalInconsistency("order must divide the group order")


def _euler_phi(n: int) -> int:
    out = n
    q = 2
    while q * q <= n:
        if n % q == 0:
            out -= out // q
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out -= out // n
    return out


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def gcd_plus_plus(p: int, exponents) -> int:
    """gcd(p^a1 + 1, ..., p^ak + 1), by the 2-adic case split: it exceeds 2
    exactly when all nu_2(a_i) agree and are finite, and then equals
    p^gcd(a_i) + 1; otherwise it is 2."""
    exps = list(exponents)
    if not exps or any(a < 0 for a in exps):
        raise InvalidInput("need nonnegative exponents")
    vals = {valuation(a, 2) for a in exps}
    if len(vals) == 1 and vals != {inf}:
        result = p ** gcd(*exps) + 1
    else:
        result = 2
    if max(exps) <= 64:  # cheap regime: confirm the case split against direct gcd
        direct = 0
        for a in exps:
            direct = gcd(direct, p**a + 1)
        assert direct == result, "gcd case split disagrees with direct gcd"
    return result


def gcd_plus_minus(p: int, a: int, b: int) -> int:
    """gcd(p^a + 1, p^b - 1): p^gcd(a,b) + 1 when nu_2(b) > nu_2(a), else 2."""
    if a < 0 or b < 0:
        raise InvalidInput("need nonnegative exponents")
    if valuation(b, 2) > valuation(a, 2):
        result = p ** gcd(a, b) + 1
    else:
        result = 2
    if max(a, b) <= 64:
        assert gcd(p**a + 1, p**b - 1) == result, "gcd case split disagrees with direct gcd"
    return result


@dataclass(frozen=True)
class TypeState:
    """Type and nullity of the trace form at total degree N."""

    p: int
    N: int
    l: int
    t: int
    func: QuadFunc | None = None

    def __post_init__(self):
        if self.t not in (-1, 1) or not 0 <= self.l <= self.N:
            raise InvalidInput("malformed type state")


def lift_odd_prime(state: TypeState, q: int, s: int, l_target: int) -> TypeState:
    """Type at q^s * N from the type at N, q an odd prime != p.

    The nullity increment must be even and divisible by the order of p mod
    q; violations mean the supplied nullities are wrong and raise.
    """
    p = state.p
    if not is_prime(q) or q == 2 or q == p:
        raise InvalidInput(f"q={q} must be an odd prime different from p={p}")
    if s < 0:
        raise InvalidInput("s must be >= 0")
    if s == 0:
        if l_target != state.l:
            raise ParityViolation("s=0 step cannot change the nullity")
        return state
    dl = l_target - state.l
    if dl < 0 or dl % 2:
        raise ParityViolation(f"nullity increment {dl} must be even and nonnegative")
    o = multiplicative_order(p, q)
    if dl % o:
        raise ParityViolation(f"order of p mod {q} is {o}, which must divide {dl}")
    sign = (-1) ** (((p - 1) * dl // 4 + dl // o) % 2)
    t_new = state.t * legendre(q, p) ** ((s * state.l) % 2) * sign
    return TypeState(p, q**s * state.N, l_target, t_new, state.func)


def twist(f: QuadFunc, ctx_base: FieldCtx | None = None) -> QuadFunc:
    """Companion function for the two-power lift: coefficients scaled by
    beta^((p^alpha_i + 1)/2) for the smallest-encoding nonsquare beta of the
    base field (or of ctx_base when lifting from a larger base)."""
    ctx = ctx_base or f.ctx
    if ctx.p != f.p or ctx.d % f.n:
        raise InvalidInput("twist base must contain the coefficient field")
    beta = smallest_nonsquare(ctx)
    return twist_with(f, ctx, beta)


def twist_with(f: QuadFunc, ctx: FieldCtx, beta: FieldElem) -> QuadFunc:
    if elem_quadratic_character(beta) != -1:
        raise InvalidInput("beta must be a nonsquare")
    pairs = []
    for c, a in f.terms:
        cE = c if ctx.key == f.ctx.key else embed_element(f.ctx, ctx, c)
        pairs.append((cE * beta ** ((f.p**a + 1) // 2), a))
    return QuadFunc.from_terms(ctx, pairs)


def lift_two(state_f: TypeState, state_tilde: TypeState, s: int, l_target: int) -> TypeState:
    """Type at 2^s * N from the types of f and its twist at N (s >= 1).

    l_target is the nullity of f at 2^s * N; the parity constraint of the
    lift (l + l~ + l_target even) is verified and must hold.
    """
    if s < 1:
        raise InvalidInput("two-power lift needs s >= 1")
    if state_f.N != state_tilde.N or state_f.p != state_tilde.p:
        raise InvalidInput("states must sit at the same base")
    p = state_f.p
    l, lt = state_f.l, state_tilde.l
    if (l + lt + l_target) % 2:
        raise InternalInconsistency(
            f"parity violation: l={l}, l~={lt}, l_target={l_target} must have even sum"
        )
    t = state_f.t * state_tilde.t
    if (l - lt) % 2:
        t *= (-1) ** (((p * p - 1) // 8 * s) % 2)
    return TypeState(p, 2**s * state_f.N, l_target, t, state_f.func)


def lift_p(state: TypeState, f: QuadFunc, steps: int) -> TypeState:
    """Type and nullity at p^steps * N: nullity multiplies by p^steps, type
    is unchanged, valid while steps <= min nu_p(alpha_i) - nu_p(N)
    (alpha_i = 0 contributes nu_p = inf)."""
    if steps < 0:
        raise InvalidInput("steps must be >= 0")
    if steps == 0:
        return state
    p = state.p
    bound = min(valuation(a, p) for a in f.alphas) - valuation(state.N, p)
    if steps > bound:
        raise ConditionViolated(
            f"p-power lift needs steps <= {bound} at N={state.N} for exponents {f.alphas}"
        )
    return TypeState(p, p**steps * state.N, p**steps * state.l, state.t, state.func)


def lift_p_value(value: ExpSumValue) -> CyclotomicInt:
    """Exact value of the sum at p*N implied by the p-power lift:
    p^((p-3)/2 * (N+l)) * |S|^2 * conj(S), in Z[zeta_p]."""
    S = value.to_cyclotomic()
    scale = value.p ** ((value.p - 3) // 2 * (value.N + value.l))
    return S * S.conj() * S.conj() * scale


def type_balanced(f: QuadFunc, N: int, l_N: int) -> int:
    """Explicit type at degree N when all nu_2(alpha_i) are equal (= nu,
    finite) and nu_2(N) > nu."""
    alphas = f.alphas
    vals = {valuation(a, 2) for a in alphas}
    if len(vals) != 1 or vals == {inf}:
        raise NotApplicable("exponents do not share a finite 2-adic order")
    nu = vals.pop()
    if valuation(N, 2) <= nu:
        raise NotApplicable(f"need nu_2(N) > {nu}")
    if l_N % 2 ** (nu + 1):
        raise DivisibilityViolated(f"2^{nu + 1} must divide the nullity {l_N}")
    p = f.p
    expo = ((p - 1) ** 2 // 4 * 2**nu + 1) * ((N - l_N) // 2 ** (nu + 1))
    return (-1) ** (expo % 2)


def monomial_eval(a: FieldElem, alpha: int, N: int) -> ExpSumValue:
    """Closed form for the sum of e(a x^(p^alpha + 1)) over GF(p^N); a must
    be a nonzero element of that field."""
    if a.is_zero():
        raise ZeroCoefficient("monomial coefficient must be nonzero")
    if alpha < 0:
        raise InvalidInput("alpha must be >= 0")
    ctx = a.ctx
    if ctx.d != N:
        raise InvalidInput("coefficient must live in GF(p^N)")
    p = ctx.p
    v_n, v_a = valuation(N, 2), valuation(alpha, 2)

    if v_n <= v_a:
        eta = elem_quadratic_character(a)
        t = eta * (-1) ** ((N - 1) % 2)
        prov = ({"step": "monomial_closed_form", "case": "i", "N": N, "t": t, "l": 0},)
        return ExpSumValue(p, N, 0, t, prov)

    g2 = gcd(2 * alpha, N)
    expo = (p**alpha - 1) * (p**N - 1) // (p**g2 - 1)
    z = a**expo
    parity = (p**N - 1) // (p**g2 - 1) % 2
    cond_val = -ctx.one() if parity else ctx.one()
    l = g2 if z == cond_val else 0
    if v_n == v_a + 1:
        case = "ii"
        sigma, l_val = (1, g2) if z == -ctx.one() else (-1, 0)
    else:
        case = "iii"
        sigma, l_val = (-1, g2) if z == ctx.one() else (1, 0)
    if l_val != l:
        raise InternalInconsistency("case split and nullity criterion disagree")
    t = sigma * (-1) ** (((p - 1) ** 2 // 4 * (N - l) // 2) % 2)
    prov = ({"step": "monomial_closed_form", "case": case, "N": N, "t": t, "l": l},)
    return ExpSumValue(p, N, l, t, prov)


@dataclass(frozen=True)
class ShiftedSum:
    """Value of the affinely shifted sum: 0 when `zero`, else
    zeta^(-phase) times the base full-field sum."""

    zero: bool
    phase: int
    base: ExpSumValue

    def to_cyclotomic(self) -> CyclotomicInt:
        if self.zero:
            return CyclotomicInt.zero(self.base.p)
        return CyclotomicInt.zeta_power(self.base.p, -self.phase) * self.base.to_cyclotomic()


def shift_linear(f: QuadFunc, b: FieldElem, N: int, value: ExpSumValue) -> ShiftedSum:
    """Reduce the sum of e(f(x) + b*x) over GF(p^N) to the unshifted value:
    zero when the radical equation has no solution, else a phase shift by
    Tr(f(x0)) for any solution x0 (the trace is constant on the solution
    coset)."""
    if N % f.n:
        raise InvalidInput("N must be a multiple of the base degree")
    ctx_big = build_field_ctx(f.p, N) if b.ctx.d != N else b.ctx
    if b.ctx.key != ctx_big.key:
        b = embed_element(b.ctx, ctx_big, b)
    L = radical_poly(f)
    M = L.linear_map_matrix(ctx_big)
    rhs_elem = b.frobenius(f.top_alpha)
    sol = _linalg.solve(M, np.array(rhs_elem.coeffs, dtype=np.int64), f.p)
    if sol is None:
        return ShiftedSum(zero=True, phase=0, base=value)
    x0 = ctx_big.elem([int(c) for c in sol])
    fx0 = ctx_big.zero()
    for c, a in f.terms:
        cE = c if ctx_big.key == f.ctx.key else embed_element(f.ctx, ctx_big, c)
        fx0 = fx0 + cE * x0 ** (f.p**a + 1)
    return ShiftedSum(zero=False, phase=fx0.trace(), base=value)
