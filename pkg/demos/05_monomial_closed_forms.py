"""Single-term functions a x^(p^alpha + 1) have a fully explicit value.

Three cases, split by the 2-adic orders of the degree N and of alpha:
(i) nu_2(N) <= nu_2(alpha): a Gauss-sum multiple with sign eta(a)(-1)^(N-1);
(ii) nu_2(N) = nu_2(alpha) + 1 and (iii) nu_2(N) > nu_2(alpha) + 1: an
integer, +-p^(N/2) or +-p^((N + gcd(2 alpha, N))/2), decided by one exact
power of a.
"""

from quadsums import QuadFunc, brute_force_sum, build_field_ctx, monomial_eval

for p, alpha, N in [(3, 0, 1), (3, 1, 1), (3, 1, 2), (5, 1, 2), (3, 1, 4), (5, 2, 4), (3, 2, 8)]:
    ctx = build_field_ctx(p, N)
    a = ctx.one()
    v = monomial_eval(a, alpha, N)
    case = v.provenance[0]["case"]
    cyc = v.to_cyclotomic()
    shown = cyc.coords[0] if not any(cyc.coords[1:]) else v.exact_str()
    print(f"p={p} alpha={alpha} N={N}:  case ({case:>3})  S = {v.exact_str():>9}  = {shown}")

# The condition in cases (ii)/(iii) genuinely depends on a: over GF(25)
# with alpha = 1, coefficients with a^4 = -1 give +25, all others -5.
ctx = build_field_ctx(5, 2)
plus, minus = [], []
for code in range(1, 25):
    a = ctx.from_encoding(code)
    val = monomial_eval(a, 1, 2).to_cyclotomic().as_int()
    (plus if val > 0 else minus).append(str(a))
print("\nover GF(25), alpha=1:")
print("  S = +25 for a in", plus)
print("  S =  -5 for", len(minus), "remaining coefficients")

# And every one of them is enumerable:
ok = all(
    monomial_eval(ctx.from_encoding(c), 1, 2).to_cyclotomic()
    == brute_force_sum(QuadFunc.from_terms(ctx, [(ctx.from_encoding(c), 1)]), 1)
    for c in range(1, 25)
)
print("brute-force agreement over all 24 coefficients:", ok)
