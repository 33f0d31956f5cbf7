"""Full evaluation pipeline: plan a route, execute it, optionally verify.

The planner is deterministic: monomials use the closed form; functions
whose exponents share a 2-adic order below that of the target degree use
the balanced explicit formula; everything else starts from a direct
diagonalization at a small base and composes lift steps (p-power, then one
two-power stage, then odd primes in increasing order).  Odd primes are
ordered purely so provenance is reproducible; results are order
independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf

from .cyclotomic import CyclotomicInt, ExpSumValue
from .errors import InternalInconsistency, InvalidInput, Unsupported
from .fieldcore import build_field_ctx, embed_element
from .lifts import (
    TypeState,
    lift_odd_prime,
    lift_p,
    lift_two,
    monomial_eval,
    twist,
    type_balanced,
    valuation,
)
from .nullity import QuadFunc, nullity_profile
from .quadform import DEFAULT_CAP, brute_force_sum, type_direct

DIRECT_LIMIT = 256
CROSS_CHECK_LIMIT = 64


@dataclass(frozen=True)
class EvalPlan:
    """Ordered strategy: base degree plus lift steps reaching N = m*n."""

    func: QuadFunc
    m: int
    N: int
    steps: tuple[tuple, ...]


def _factor(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    q = 2
    while q * q <= m:
        while m % q == 0:
            out[q] = out.get(q, 0) + 1
            m //= q
        q += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def plan(f: QuadFunc, m: int, direct_limit: int = DIRECT_LIMIT) -> EvalPlan:
    """Deterministic evaluation strategy for S(f, m*n)."""
    if m < 1:
        raise InvalidInput("m must be >= 1")
    N = m * f.n
    if f.is_monomial:
        return EvalPlan(f, m, N, (("monomial",),))
    vals = {valuation(a, 2) for a in f.alphas}
    if len(vals) == 1 and vals != {inf} and valuation(N, 2) > next(iter(vals)):
        return EvalPlan(f, m, N, (("balanced",),))
    return _composition_plan(f, m, direct_limit)


def _composition_plan(f: QuadFunc, m: int, direct_limit: int = DIRECT_LIMIT) -> EvalPlan:
    p = f.p
    fac = _factor(m)
    a = fac.pop(2, 0)
    c = fac.pop(p, 0)
    steps: list[tuple] = []
    base = f.n
    if c and min(valuation(al, p) for al in f.alphas) - valuation(f.n, p) >= c:
        steps.append(("direct", base))
        steps.append(("p_power_lift", c))
    else:
        base = f.n * p**c
        if base > direct_limit:
            raise Unsupported(
                "p_power_base_too_large",
                f"no p-power lift applies and direct work at degree {base} exceeds {direct_limit}",
            )
        steps.append(("direct", base))
    if a:
        twist_base = f.n * p**c
        if twist_base > direct_limit:
            raise Unsupported(
                "twist_base_too_large",
                f"two-power lift needs the twist type at degree {twist_base} > {direct_limit}",
            )
        steps.append(("two_power_lift", a))
    for q in sorted(fac):
        steps.append(("odd_prime_lift", q, fac[q]))
    return EvalPlan(f, m, f.n * m, tuple(steps))


def _execute_composition(f: QuadFunc, pln: EvalPlan, profile) -> tuple[TypeState, list[dict]]:
    prov: list[dict] = []
    state: TypeState | None = None
    p = f.p
    for step in pln.steps:
        kind = step[0]
        if kind == "direct":
            base = step[1]
            t, l = type_direct(f, base // f.n)
            state = TypeState(p, base, l, t, f)
            prov.append({"step": "direct_diagonalization", "N": base, "t": t, "l": l})
        elif kind == "p_power_lift":
            c = step[1]
            state = lift_p(state, f, c)
            prov.append({"step": "p_power_lift", "count": c, "N": state.N, "t": state.t, "l": state.l})
        elif kind == "two_power_lift":
            a = step[1]
            ctx_base = f.ctx if state.N == f.n else build_field_ctx(p, state.N)
            ft = twist(f, ctx_base)
            tt, lt_diag = type_direct(ft, 1)
            st_tilde = TypeState(p, state.N, lt_diag, tt, ft)
            l_target = profile.nullity(2**a * state.N)
            state = lift_two(state, st_tilde, a, l_target)
            prov.append(
                {
                    "step": "two_power_lift",
                    "height": a,
                    "twist_t": tt,
                    "twist_l": lt_diag,
                    "N": state.N,
                    "t": state.t,
                    "l": state.l,
                }
            )
        else:
            q, e = step[1], step[2]
            l_target = profile.nullity(q**e * state.N)
            state = lift_odd_prime(state, q, e, l_target)
            prov.append({"step": "odd_prime_lift", "q": q, "power": e, "N": state.N, "t": state.t, "l": state.l})
    return state, prov


def evaluate(f: QuadFunc, m: int, direct_limit: int = DIRECT_LIMIT) -> ExpSumValue:
    """Exact S(f, m*n) as t * g_p^(N-l) * p^l with full provenance."""
    pln = plan(f, m, direct_limit)
    profile = nullity_profile(f)
    N = pln.N
    l = profile.nullity(N)

    if pln.steps[0][0] == "monomial":
        a0, alpha0 = f.terms[0]
        ctx_big = build_field_ctx(f.p, N) if N != f.n else f.ctx
        aE = a0 if ctx_big.key == f.ctx.key else embed_element(f.ctx, ctx_big, a0)
        v = monomial_eval(aE, alpha0, N)
        if v.l != l:
            raise InternalInconsistency(f"monomial nullity {v.l} != profile nullity {l}")
        return v

    if pln.steps[0][0] == "balanced":
        t = type_balanced(f, N, l)
        prov = [{"step": "balanced_explicit_form", "N": N, "t": t, "l": l}]
        if N <= CROSS_CHECK_LIMIT:
            try:
                alt = _composition_plan(f, m)
            except Unsupported:
                alt = None
            if alt is not None:
                state, _ = _execute_composition(f, alt, profile)
                if (state.t, state.l) != (t, l):
                    raise InternalInconsistency("balanced and composed routes disagree")
                prov.append({"step": "composition_cross_check", "t": state.t})
        return ExpSumValue(f.p, N, l, t, tuple(prov))

    state, prov = _execute_composition(f, pln, profile)
    if state.N != N:
        raise InternalInconsistency(f"composition reached {state.N}, wanted {N}")
    if state.l != l:
        raise InternalInconsistency(f"composed nullity {state.l} != profile nullity {l}")
    return ExpSumValue(f.p, N, l, state.t, tuple(prov))


@dataclass(frozen=True)
class VerifyReport:
    equal: bool
    value: ExpSumValue
    closed_form: CyclotomicInt
    brute: CyclotomicInt

    def __str__(self):
        if self.equal:
            return f"exact-equal: {self.value.exact_str()} = [{', '.join(map(str, self.closed_form.coords))}]"
        return (
            "MISMATCH\n"
            f"  closed form {self.value.exact_str()}: {list(self.closed_form.coords)}\n"
            f"  brute force: {list(self.brute.coords)}"
        )


def verify(f: QuadFunc, m: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """Compare the closed form with the enumeration oracle, exactly."""
    value = evaluate(f, m)
    closed = value.to_cyclotomic()
    brute = brute_force_sum(f, m, cap)
    return VerifyReport(equal=closed == brute, value=value, closed_form=closed, brute=brute)
