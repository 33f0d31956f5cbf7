"""Sums with a linear term reduce to the unshifted sum, or vanish.

Adding b*x to f either multiplies the full-field sum by a root of unity
zeta^(-Tr f(x0)), where x0 solves a linear system built from the radical
polynomial, or kills it when that system is inconsistent (which can only
happen when the nullity is positive).
"""

from quadsums import (
    QuadFunc,
    brute_force_sum_shifted,
    build_field_ctx,
    evaluate,
    shift_linear,
)

# x^2 + x over GF(5): the solution of 2 x0 = 1 is x0 = 3, so the phase is
# Tr(f(3)) = 4 and S(x^2 + x) = zeta * g_5.
ctx5 = build_field_ctx(5, 1)
f = QuadFunc.from_dense(5, [1])
sh = shift_linear(f, ctx5.elem(1), 1, evaluate(f, 1))
print(f"S(x^2 + x) over GF(5): zeta^(-{sh.phase}) * g  ->", list(sh.to_cyclotomic().coords))
print("matches enumeration:", sh.to_cyclotomic() == brute_force_sum_shifted(f, 1, 1))

# A vanishing case: 2x^2 + x^4 over GF(3) has nullity 1 at degree 1 and
# the radical polynomial vanishes identically on GF(3), so b = 1 is not
# reachable and the shifted sum is 0.
f2 = QuadFunc.from_dense(3, [2, 1])
sh2 = shift_linear(f2, build_field_ctx(3, 1).elem(1), 1, evaluate(f2, 1))
print("\nS(2x^2 + x^4 + x) over GF(3) vanishes:", sh2.zero)
print("enumeration agrees:", brute_force_sum_shifted(f2, 1, 1).is_zero())

# Shifts work at any level: f over GF(3) summed over GF(3^4) with b there.
ctx81 = build_field_ctx(3, 4)
b = ctx81.from_encoding(37)
sh3 = shift_linear(f2, b, 4, evaluate(f2, 4))
print("\nf = 2x^2 + x^4 shifted by b (encoding 37) over GF(81):")
print("  zero" if sh3.zero else f"  phase {sh3.phase}, base {sh3.base.exact_str()}")
print("  enumeration agrees:", sh3.to_cyclotomic() == brute_force_sum_shifted(f2, b, 4))
