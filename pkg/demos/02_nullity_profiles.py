"""Nullity profiles: the finite data determining l_m for every m.

For f(x) = sum a_i x^(p^alpha_i + 1) the radical of the trace form at
degree m is the kernel of a fixed p-polynomial inside GF(p^m).  Its
dimension l_m stabilises: there is a splitting exponent s with l_s equal
to twice the top exponent, and l_m = l_gcd(m,s) thereafter.
"""

from quadsums import QuadFunc, nullity_at, nullity_profile, radical_poly

# The running example over GF(5): x^2 + 2x^6 + 3x^26 + 4x^126 + x^626.
f = QuadFunc.from_dense(5, [1, 2, 3, 4, 1])
L = radical_poly(f)
print("f =", f)
print("radical polynomial coefficients (by p-power):", [c.coeffs[0] for c in L.coeffs])
print("its degree is 5^%d = %d" % (L.p_degree, L.degree))

prof = nullity_profile(f)
print("\nsplitting exponent s =", prof.s)
print("profile pairs:", prof.entries)
print("so l_m = 0 unless 13 | m; l_m = 4 when 13 | m and m is odd; l_m = 8 when 26 | m:")
for m in (1, 2, 13, 26, 39, 52, 65, 104):
    print(f"  l_{m} = {prof.nullity(m)}")

# A two-exponent example over GF(5) with exponents 1 and 3.
g = QuadFunc.from_terms(f.ctx, [(3, 1), (1, 3)])
pg = nullity_profile(g)
print("\ng =", g)
print("s =", pg.s, " pairs:", pg.entries)

# Individual queries go through the same gcd kernel.
print("l_40(g) =", nullity_at(g, 40), " (= l_gcd(40, 20))")
