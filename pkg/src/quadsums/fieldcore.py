"""Exact arithmetic in GF(p) and GF(p^d) for odd primes p.

A :class:`FieldCtx` models one concrete field: the prime, the extension
degree, and a monic irreducible modulus over GF(p) (absent for degree 1).
When no modulus is supplied the deterministic default is used: the monic
irreducible of degree d whose non-leading coefficient tuple has the
smallest integer encoding c0 + c1*p + ... + c_{d-1}*p^(d-1).  Everything
downstream (tables, embeddings, traces) is therefore reproducible run to
run.

Contexts are immutable and cached; elements are coordinate vectors in the
power basis of the modulus root.  Batch (numpy) variants of the field maps
back the quadratic-form and brute-force machinery in :mod:`quadsums.quadform`.

The module also houses the gcd kernel used for nullity computation:
``poly_gcd_deg(f, m)`` returns deg gcd(f, x^(p^m) - x) without ever
materialising the second argument.  x^(p^m) mod f is obtained by m rounds
of p-th powering and reduction mod f; when f is a separable p-polynomial
(the only production caller), remainders of p-polynomials by p-polynomials
are again p-polynomials, so the whole remainder sequence is carried in the
sparse coefficient-per-p-power form and each round costs O(deg_p f) field
operations instead of O(deg f).
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

from . import _primepoly as pp
from .errors import (
    DivisionByZero,
    InvalidInput,
    ModulusReducible,
    NoRootFound,
    NotOdd,
    NotPrime,
    ZeroPolynomial,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for machine-word inputs."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _default_modulus(p: int, d: int) -> tuple[int, ...]:
    for code in itertools.count(0):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        if c:
            raise ModulusReducible(f"no irreducible of degree {d} over GF({p})")
        cand = np.array(coeffs + [1], dtype=np.int64)
        if pp.is_irreducible(cand, p):
            return tuple(coeffs) + (1,)


class FieldCtx:
    """Immutable model of GF(p^d).  Use :func:`build_field_ctx` so that
    contexts are shared; direct construction still validates fully."""

    def __init__(self, p: int, d: int, modulus: tuple[int, ...] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            raise NotOdd("characteristic 2 is out of scope")
        if not isinstance(d, int) or d < 1:
            raise InvalidInput(f"degree must be >= 1, got {d}")
        if d == 1:
            if modulus is not None:
                raise InvalidInput("prime field takes no modulus")
        else:
            if modulus is None:
                modulus = _default_modulus(p, d)
            else:
                modulus = tuple(int(c) % p for c in modulus)
                if len(modulus) != d + 1 or modulus[-1] != 1:
                    raise InvalidInput("modulus must be monic of degree d")
                if not pp.is_irreducible(np.array(modulus, dtype=np.int64), p):
                    raise ModulusReducible(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.d = d
        self.modulus = modulus
        self.order = p**d
        self._cache: dict = {}

    @property
    def key(self) -> tuple:
        return (self.p, self.d, self.modulus)

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.d}))" if self.d > 1 else f"FieldCtx(GF({self.p}))"

    def __reduce__(self):
        return (build_field_ctx, (self.p, self.d, self.modulus))

    # -- element constructors ------------------------------------------------

    def elem(self, value) -> "FieldElem":
        """Constant residue from an int, or coordinates from a sequence."""
        if isinstance(value, FieldElem):
            if value.ctx.key != self.key:
                raise InvalidInput("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            coeffs = (int(value) % self.p,) + (0,) * (self.d - 1)
            return FieldElem(self, coeffs)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.d:
            raise InvalidInput(f"expected {self.d} coordinates, got {len(coeffs)}")
        return FieldElem(self, coeffs)

    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.d)

    def one(self) -> "FieldElem":
        return self.elem(1)

    def gen(self) -> "FieldElem":
        """Root of the modulus (the power-basis generator); 1 for degree 1."""
        if self.d == 1:
            return self.one()
        return FieldElem(self, (0, 1) + (0,) * (self.d - 2))

    def from_encoding(self, code: int) -> "FieldElem":
        if not 0 <= code < self.order:
            raise InvalidInput("encoding out of range")
        coeffs = []
        for _ in range(self.d):
            coeffs.append(code % self.p)
            code //= self.p
        return FieldElem(self, tuple(coeffs))

    def elements(self) -> Iterable["FieldElem"]:
        for code in range(self.order):
            yield self.from_encoding(code)

    def format_elem(self, x: "FieldElem") -> str:
        return ",".join(str(c) for c in x.coeffs)

    def parse_elem(self, text: str) -> "FieldElem":
        return self.elem([int(t) for t in text.split(",")])

    # -- scalar coefficient helpers -------------------------------------------

    def _red_tuples(self):
        """Reductions of x^(d+t), t = 0..d-2, as coefficient tuples mod p."""
        rows = self._cache.get("red_tuples")
        if rows is None:
            p, d = self.p, self.d
            rows = []
            if d > 1:
                row = tuple((-c) % p for c in self.modulus[:d])  # x^d
                rows.append(row)
                for _ in range(d - 2):
                    shifted = (0,) + row[: d - 1]
                    top = row[d - 1]
                    if top:
                        shifted = tuple((s + top * r) % p for s, r in zip(shifted, rows[0]))
                    row = shifted
                    rows.append(row)
            self._cache["red_tuples"] = rows
        return rows

    def _mul_coeffs(self, a: tuple, b: tuple) -> tuple:
        p, d = self.p, self.d
        if d == 1:
            return (a[0] * b[0] % p,)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        rows = self._red_tuples()
        for t in range(2 * d - 2, d - 1, -1):
            c = conv[t] % p
            if c:
                row = rows[t - d]
                for i in range(d):
                    conv[i] += c * row[i]
        return tuple(v % p for v in conv[:d])

    # -- cached numpy maps -----------------------------------------------------

    def _np_modulus(self) -> np.ndarray:
        arr = self._cache.get("np_modulus")
        if arr is None:
            arr = np.array(self.modulus if self.d > 1 else [0, 1], dtype=np.int64)
            self._cache["np_modulus"] = arr
        return arr

    def frob_mat_power(self, j: int) -> np.ndarray:
        """Matrix (float64, columns = images of basis) of x -> x^(p^j)."""
        j %= self.d
        mats = self._cache.setdefault("frob_pows", {})
        if j not in mats:
            if j == 0:
                mats[j] = np.eye(self.d)
            elif j == 1:
                p, d = self.p, self.d
                cols = np.zeros((d, d), dtype=np.int64)
                if d == 1:
                    cols[0, 0] = 1
                else:
                    mod = self._np_modulus()
                    xp = pp.x_power_mod(p, mod, p)
                    cur = np.array([1], dtype=np.int64)
                    for u in range(d):
                        cols[: len(cur), u] = cur
                        if u < d - 1:
                            cur = pp.rem(pp.mul(cur, xp, p), mod, p)
                mats[j] = cols.astype(np.float64)
            else:
                prev = self.frob_mat_power(j - 1)
                mats[j] = np.mod(self.frob_mat_power(1) @ prev, self.p)
        return mats[j]

    def mult_mat(self, a: "FieldElem") -> np.ndarray:
        """Matrix of multiplication by a (float64)."""
        d = self.d
        cols = np.zeros((d, d), dtype=np.float64)
        cur = a.coeffs
        for u in range(d):
            cols[:, u] = cur
            if u < d - 1:
                cur = self._mulx(cur)
        return cols

    def _mulx(self, c: tuple) -> tuple:
        p, d = self.p, self.d
        top = c[-1]
        out = (0,) + c[:-1]
        if top and d > 1:
            row = self._red_tuples()[0]
            out = tuple((o + top * r) % p for o, r in zip(out, row))
        return out

    def red_matrix(self) -> np.ndarray:
        """(d-1, d) float64 rows reducing x^d .. x^(2d-2)."""
        mat = self._cache.get("red_matrix")
        if mat is None:
            mat = np.array(self._red_tuples(), dtype=np.float64).reshape(self.d - 1, self.d)
            self._cache["red_matrix"] = mat
        return mat

    def trace_vec(self) -> np.ndarray:
        vec = self._cache.get("trace_vec")
        if vec is None:
            T = np.zeros((self.d, self.d))
            for j in range(self.d):
                T = np.mod(T + self.frob_mat_power(j), self.p)
            assert not T[1:].any(), "trace image escaped the prime field"
            vec = T[0].copy()
            self._cache["trace_vec"] = vec
        return vec

    # -- batch maps over arrays of coordinate rows -----------------------------

    def bulk_frobenius(self, X: np.ndarray, j: int) -> np.ndarray:
        return np.mod(X @ self.frob_mat_power(j).T, self.p)

    def bulk_mul_const(self, X: np.ndarray, a: "FieldElem") -> np.ndarray:
        return np.mod(X @ self.mult_mat(a).T, self.p)

    def bulk_mul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        d, p = self.d, self.p
        if d == 1:
            return np.mod(A * B, p)
        conv = np.zeros((A.shape[0], 2 * d - 1))
        for i in range(d):
            conv[:, i : i + d] += A[:, i : i + 1] * B
        conv = np.mod(conv, p)
        low = conv[:, :d] + conv[:, d:] @ self.red_matrix()
        return np.mod(low, p)

    def bulk_trace(self, X: np.ndarray) -> np.ndarray:
        return np.mod(X @ self.trace_vec(), self.p)


@functools.lru_cache(maxsize=None)
def _ctx_cached(p: int, d: int, modulus) -> FieldCtx:
    return FieldCtx(p, d, modulus)


def build_field_ctx(p: int, d: int, modulus=None) -> FieldCtx:
    """Shared, validated context for GF(p^d); see module docstring for the
    default modulus rule."""
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _ctx_cached(int(p), int(d), modulus)


def _rebuild_elem(p, d, modulus, coeffs):
    return FieldElem(build_field_ctx(p, d, modulus), coeffs)


class FieldElem:
    """Element of a FieldCtx; immutable coordinate tuple, constant term first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def __reduce__(self):
        return (_rebuild_elem, (self.ctx.p, self.ctx.d, self.ctx.modulus, self.coeffs))

    def _check(self, other: "FieldElem") -> "FieldElem":
        if isinstance(other, (int, np.integer)):
            return self.ctx.elem(int(other))
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.ctx is not self.ctx and other.ctx.key != self.ctx.key:
            raise InvalidInput("operands from different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.ctx.elem(other) - self

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx._mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.is_zero():
            return self.ctx.one() if e == 0 else self.ctx.zero()
        e %= self.ctx.order - 1
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self ** (self.ctx.order - 2)

    def frobenius(self, j: int) -> "FieldElem":
        """j-fold p-power map; x^(p^j)."""
        if j < 0:
            raise InvalidInput("frobenius exponent must be >= 0")
        j %= self.ctx.d
        return self ** (self.ctx.p**j) if j else self

    def trace(self) -> int:
        acc = self
        x = self
        for _ in range(self.ctx.d - 1):
            x = x.frobenius(1)
            acc = acc + x
        assert not any(acc.coeffs[1:]), "trace image escaped the prime field"
        return acc.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    @property
    def encoding(self) -> int:
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.ctx.p + c
        return code

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.ctx.elem(int(other))
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx.key == other.ctx.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.key, self.coeffs))

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"FieldElem([{self}], GF({self.ctx.p}^{self.ctx.d}))"


def field_arith(ctx: FieldCtx, op: str, *operands) -> FieldElem:
    """Dispatcher over the basic field operations; operands may be ints."""
    arity = {"add": 2, "sub": 2, "mul": 2, "inv": 1, "pow": 2}.get(op)
    if arity is None:
        raise InvalidInput(f"unknown op {op!r}")
    if len(operands) != arity:
        raise InvalidInput(f"{op} takes {arity} operand(s)")
    n_elems = 1 if op in ("inv", "pow") else 2
    xs = [ctx.elem(o) for o in operands[:n_elems]]
    if op == "add":
        return xs[0] + xs[1]
    if op == "sub":
        return xs[0] - xs[1]
    if op == "mul":
        return xs[0] * xs[1]
    if op == "inv":
        return xs[0].inverse()
    return xs[0] ** int(operands[1])


def frobenius(x: FieldElem, j: int) -> FieldElem:
    return x.frobenius(j)


def trace_to_prime(x: FieldElem) -> int:
    """Trace down to GF(p) as an integer residue."""
    return x.trace()


# -- embeddings ---------------------------------------------------------------


def _find_root(g: "Poly") -> FieldElem:
    """Deterministic root extraction for a monic polynomial known to split
    into distinct linear factors over its context."""
    ctx = g.ctx
    q = ctx.order
    one = Poly(ctx, (ctx.one(),))
    while g.degree > 1:
        progressed = False
        for code in range(4 * ctx.d + 32):
            c = ctx.from_encoding(code)
            base = Poly(ctx, (c, ctx.one()))
            w = base.powmod((q - 1) // 2, g) - one
            h = g.gcd(w)
            if 0 < h.degree < g.degree:
                other = g // h
                g = h if h.degree <= other.degree else other
                progressed = True
                break
        if not progressed:
            raise NoRootFound("splitting never separated the roots; corrupt context")
    return -(g.coeffs[0] / g.coeffs[1])


@functools.lru_cache(maxsize=None)
def _embedding_roots_cached(src_key, dst_key) -> tuple:
    src = build_field_ctx(*src_key[:2], src_key[2])
    dst = build_field_ctx(*dst_key[:2], dst_key[2])
    g = Poly.from_ints(dst, src.modulus)
    r = _find_root(g)
    roots = {r.frobenius(j) for j in range(src.d)}
    if len(roots) != src.d:
        raise NoRootFound("conjugate count mismatch; corrupt context")
    for root in roots:
        if not g(root).is_zero():
            raise NoRootFound("claimed root does not vanish; corrupt context")
    return tuple(sorted(roots, key=lambda e: e.encoding))


def embedding_roots(src: FieldCtx, dst: FieldCtx) -> tuple[FieldElem, ...]:
    """All roots of src.modulus inside dst, sorted by integer encoding."""
    _require_subfield(src, dst)
    if src.d == 1:
        raise InvalidInput("prime field embeds without a root choice")
    return _embedding_roots_cached(src.key, dst.key)


def _require_subfield(src: FieldCtx, dst: FieldCtx):
    if src.p != dst.p:
        raise InvalidInput("different characteristics")
    if dst.d % src.d:
        raise InvalidInput(f"GF({src.p}^{src.d}) is not a subfield of GF({dst.p}^{dst.d})")


def embed_element(src: FieldCtx, dst: FieldCtx, x: FieldElem, root: FieldElem | None = None) -> FieldElem:
    """Image of x under the embedding sending the src generator to `root`
    (default: the smallest-encoding root of src.modulus in dst)."""
    _require_subfield(src, dst)
    if x.ctx.key != src.key:
        raise InvalidInput("element does not belong to src")
    if src.key == dst.key:
        return dst.elem(x.coeffs)
    if src.d == 1:
        return dst.elem(x.coeffs[0])
    if root is None:
        root = embedding_roots(src, dst)[0]
    out = dst.zero()
    rp = dst.one()
    for c in x.coeffs:
        if c:
            out = out + rp * dst.elem(c)
        rp = rp * root
    return out


# -- generic dense polynomials over one context --------------------------------


class Poly:
    """Dense polynomial with FieldElem coefficients, trailing zeros stripped;
    the zero polynomial has an empty coefficient tuple."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Sequence[FieldElem]):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints: Sequence[int]) -> "Poly":
        return cls(ctx, [ctx.elem(int(c)) for c in ints])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (ctx.zero(), ctx.one()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ctx.key == other.ctx.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.key, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ctx, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly(self.ctx, ())
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.degree < other.degree:
            return Poly(self.ctx, ()), self
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = other.coeffs[-1].inverse()
        q = [self.ctx.zero()] * (len(rem) - db)
        for i in range(len(rem) - db - 1, -1, -1):
            c = rem[i + db] * inv_lead
            if not c.is_zero():
                q[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Poly(self.ctx, q), Poly(self.ctx, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero or self.coeffs[-1] == self.ctx.one():
            return self
        inv = self.coeffs[-1].inverse()
        return Poly(self.ctx, [c * inv for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly(self.ctx, (self.ctx.one(),))
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __call__(self, x: FieldElem) -> FieldElem:
        acc = self.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def linearized_coeffs(self) -> list[FieldElem] | None:
        """Coefficients by p-power exponent when this polynomial is additive
        (support inside {1, p, p^2, ...}); None otherwise."""
        if self.is_zero:
            return None
        p = self.ctx.p
        out: list[FieldElem] = []
        exps = {}
        e, j = 1, 0
        while e <= self.degree:
            exps[e] = j
            e *= p
            j += 1
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i not in exps:
                return None
            while len(out) <= exps[i]:
                out.append(self.ctx.zero())
            out[exps[i]] = c
        return out

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "Poly(" + " + ".join(terms) + ")"


# -- the iterated-Frobenius gcd kernel -----------------------------------------
#
# A p-polynomial sum(c_j * z^(p^j)) is carried as the list [c_0, c_1, ...].
# Right division of p-polynomials (composition order) keeps every remainder
# additive and reproduces the dense remainder sequence exactly, so the gcd
# degree below is by construction the degree of the monic commutative gcd.


def _skew_trim(a: list) -> list:
    while a and _is_zero_coeff(a[-1]):
        a.pop()
    return a


def _is_zero_coeff(c) -> bool:
    return c == 0 if isinstance(c, int) else c.is_zero()


class FrobeniusLadder:
    """Incrementally tracks x^(p^m) mod f for a p-polynomial f, exposing the
    gcd degree with x^(p^m) - x at each height m."""

    def __init__(self, ctx: FieldCtx, coeffs: Sequence):
        self.ctx = ctx
        self._ints = ctx.d == 1
        if self._ints:
            f = [c if isinstance(c, int) else c.coeffs[0] for c in coeffs]
            f = [c % ctx.p for c in f]
        else:
            f = [ctx.elem(c) if not isinstance(c, FieldElem) else c for c in coeffs]
        f = _skew_trim(list(f))
        if not f:
            raise ZeroPolynomial("zero p-polynomial")
        self.f = f
        self.h: list = [1 if self._ints else ctx.one()]
        self.height = 0

    # one step: h <- h^p mod f, in additive form h^p = sum c_j^p z^(p^(j+1))
    def step(self):
        p = self.ctx.p
        if self._ints:
            h = [0] + self.h  # c^p = c in GF(p)
            self.h = _rrem_int(p, h, self.f)
        else:
            h = [self.ctx.zero()] + [c.frobenius(1) for c in self.h]
            self.h = _rrem_elem(self.ctx, h, self.f)
        self.height += 1

    def advance(self, k: int):
        for _ in range(k):
            self.step()

    def kernel_exponent(self) -> int:
        """Skew degree of gcd(f, x^(p^height) - x); the commutative gcd degree
        is p to this power."""
        if self._ints:
            g = list(self.h) or [0]
            g[0] = (g[0] - 1) % self.ctx.p
            return _gcrd_deg_int(self.ctx.p, list(self.f), _skew_trim(g))
        g = list(self.h) or [self.ctx.zero()]
        g[0] = g[0] - self.ctx.one()
        return _gcrd_deg_elem(self.ctx, list(self.f), _skew_trim(g))


def _rrem_int(p: int, a: list[int], b: list[int]) -> list[int]:
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    a = list(a)
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        i = len(a) - 1 - db
        q = a[-1] * inv % p
        for j in range(db + 1):
            a[i + j] = (a[i + j] - q * b[j]) % p
        a.pop()
    return _skew_trim(a)


def _gcrd_deg_int(p: int, a: list[int], b: list[int]) -> int:
    while b:
        a, b = b, _rrem_int(p, a, b)
    return len(a) - 1


def _rrem_elem(ctx: FieldCtx, a: list, b: list) -> list:
    db = len(b) - 1
    binv = b[-1].inverse()
    a = list(a)
    while len(a) - 1 >= db:
        if a[-1].is_zero():
            a.pop()
            continue
        i = len(a) - 1 - db
        q = a[-1] * binv.frobenius(i)
        for j in range(db + 1):
            a[i + j] = a[i + j] - q * b[j].frobenius(i)
        assert a[-1].is_zero()
        a.pop()
    return _skew_trim(a)


def _gcrd_deg_elem(ctx: FieldCtx, a: list, b: list) -> int:
    while b:
        a, b = b, _rrem_elem(ctx, a, b)
    return len(a) - 1


def linearized_gcd_deg(ctx: FieldCtx, coeffs: Sequence, m: int) -> int:
    """log_p of deg gcd(sum c_j z^(p^j), x^(p^m) - x)."""
    if m < 1:
        raise InvalidInput("m must be >= 1")
    ladder = FrobeniusLadder(ctx, coeffs)
    ladder.advance(m)
    return ladder.kernel_exponent()


def poly_gcd_deg(f, m: int) -> int:
    """deg gcd(f, x^(p^m) - x), computed from x^(p^m) mod f (m rounds of
    p-th powering with reduction mod f).

    Accepts a dense :class:`Poly`, or any object with `.ctx` and `.coeffs`
    holding coefficients indexed by p-power exponent (a p-polynomial).
    Dense inputs whose support is additive take the sparse route.
    """
    if m < 1:
        raise InvalidInput("m must be >= 1")
    if isinstance(f, Poly):
        if f.is_zero:
            raise ZeroPolynomial("gcd degree of the zero polynomial")
        lin = f.linearized_coeffs()
        if lin is not None:
            return f.ctx.p ** linearized_gcd_deg(f.ctx, lin, m)
        return _dense_gcd_deg(f, m)
    return f.ctx.p ** linearized_gcd_deg(f.ctx, list(f.coeffs), m)


def _dense_gcd_deg(f: Poly, m: int) -> int:
    ctx = f.ctx
    p = ctx.p
    if ctx.d == 1:
        fa = pp.make([c.coeffs[0] for c in f.coeffs], p)
        h = np.array([0, 1], dtype=np.int64)
        for _ in range(m):
            h = pp.rem(pp.substitute_x_power(h, p), fa, p)
        g = pp.gcd(fa, pp.sub(h, np.array([0, 1], dtype=np.int64), p), p)
        return pp.deg(g)
    h = Poly.x(ctx)
    for _ in range(m):
        h = h.powmod(p, f)
    return f.gcd(h - Poly.x(ctx)).degree
