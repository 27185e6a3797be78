"""The simple algebra R_F = R / R F(x^n), isomorphic to M_n(E_F).

Elements are stored as their remainder on right division by F(x^n), which
has degree < n*s.  Ranks come from the gcrd with F(x^n); explicit matrices
over E_F = K[y]/(F) are built only for export and cross-checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import linalg
from .gf import KPoly, kpoly_is_irreducible, poly_eval, poly_mul, poly_mod, poly_trim, to_digits
from .linalg import PrimeField
from .skewpoly import (
    BudgetExceeded,
    SkewPoly,
    SkewRing,
    central_expand,
    extended_gcrd,
    find_irreducible_divisor,
    gcrd,
    right_divmod,
)


class ResidueField:
    """E_F = K[y]/(F); elements are length-s tuples of K-elements."""

    def __init__(self, F: KPoly):
        self.F = F
        self.field = F.field
        self.s = F.degree
        self.size = F.q**self.s
        self.zero = (0,) * self.s
        self.one = (1,) + (0,) * (self.s - 1)

    def _pad(self, coeffs):
        c = list(poly_trim(coeffs))
        return tuple(c + [0] * (self.s - len(c)))

    def reduce(self, coeffs):
        return self._pad(poly_mod(self.field, poly_trim(coeffs), list(self.F.coeffs)))

    def add(self, a, b):
        return tuple(self.field.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.field.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.field.neg(x) for x in a)

    def mul(self, a, b):
        return self.reduce(poly_mul(self.field, poly_trim(a), poly_trim(b)))

    def is_zero(self, a):
        return not any(a)

    def pow(self, a, k):
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in E_F")
        return self.pow(a, self.size - 2)

    def elements(self):
        elems = self.field.subfield_elements(self.F.sub)
        q = len(elems)
        for code in range(q**self.s):
            yield tuple(elems[d] for d in to_digits(code, q, self.s))

    def evaluate(self, z, theta: int) -> int:
        """Image of z under y -> theta (a root of F in L)."""
        return poly_eval(self.field, list(z), theta)


class QuotientElem:
    __slots__ = ("ctx", "poly")

    def __init__(self, ctx: "QuotientRing", poly: SkewPoly):
        self.ctx = ctx
        self.poly = poly

    def __add__(self, other):
        return QuotientElem(self.ctx, self.poly + other.poly)

    def __sub__(self, other):
        return QuotientElem(self.ctx, self.poly - other.poly)

    def __neg__(self):
        return QuotientElem(self.ctx, -self.poly)

    def __mul__(self, other):
        return self.ctx.mul(self, other)

    def __eq__(self, other):
        if isinstance(other, QuotientElem):
            return self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def __repr__(self):
        return f"QuotientElem({list(self.poly.coeffs)})"

    def rank(self) -> int:
        return self.ctx.rank(self)

    def inverse(self) -> "QuotientElem":
        return self.ctx.inverse(self)


@dataclass
class MatrixRep:
    """Matrix of left multiplication on V_f in a fixed E_f-basis."""

    entries: list
    basis: list
    ctx: "QuotientRing"

    def rank(self) -> int:
        return linalg.rank(self.ctx.ef, self.entries)

    def evaluated(self, theta: int) -> list[list[int]]:
        ef = self.ctx.ef
        return [[ef.evaluate(z, theta) for z in row] for row in self.entries]

    def to_json(self) -> str:
        q = self.ctx
        header = {
            "p": q.field.p,
            "e": q.ring.e,
            "n": q.n,
            "s": q.s,
            "F": list(q.F.coeffs),
            "f": list(q.divisor.coeffs),
            "basis": [list(b.coeffs) for b in self.basis],
        }
        body = [[list(z) for z in row] for row in self.entries]
        return json.dumps({"header": header, "matrix": body}, sort_keys=True)


class QuotientRing:
    """R_F for a monic irreducible F in K[y] of degree s, F != y."""

    def __init__(self, ring: SkewRing, F: KPoly, divisor: SkewPoly | None = None):
        if F.field != ring.field:
            raise ValueError("F is defined over a different field")
        for c in F.coeffs:
            if not ring.in_centre_field(c):
                raise ValueError(f"coefficient {c} of F is not in K")
        if not F.is_monic():
            raise ValueError("F must be monic")
        if F.coeffs == (0, 1):
            raise ValueError("F = y is excluded: x would be a zero divisor in R_F")
        if not kpoly_is_irreducible(F):
            raise ValueError(f"F = {F.to_text()} is reducible over K")
        self.ring = ring
        self.field = ring.field
        self.F = F
        self.n = ring.n
        self.s = F.degree
        self.Fx = central_expand(ring, F)
        self.length = self.n * self.s
        self.ef = ResidueField(F)
        self._divisor = divisor
        if divisor is not None:
            if divisor.degree != self.s or not divisor.is_monic():
                raise ValueError("divisor must be monic of degree s")
            if right_divmod(self.Fx, divisor)[1]:
                raise ValueError("divisor does not right-divide F(x^n)")
        self._coord = None

    def __reduce__(self):
        return (QuotientRing, (self.ring, self.F, self._divisor))

    def __repr__(self):
        return f"QuotientRing({self.ring!r}, F={list(self.F.coeffs)})"

    # ------------------------------------------------------------------
    # elements

    def reduce(self, a: SkewPoly) -> QuotientElem:
        if a.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if a.degree >= self.length:
            a = right_divmod(a, self.Fx)[1]
        return QuotientElem(self, a)

    def __call__(self, coeffs) -> QuotientElem:
        return self.reduce(SkewPoly(self.ring, coeffs))

    def zero(self) -> QuotientElem:
        return QuotientElem(self, self.ring.zero())

    def one(self) -> QuotientElem:
        return QuotientElem(self, self.ring.one())

    def x(self, i: int = 1) -> QuotientElem:
        return self.reduce(self.ring.x(i))

    def mul(self, a: QuotientElem, b: QuotientElem) -> QuotientElem:
        return self.reduce(a.poly * b.poly)

    def rank(self, a: QuotientElem) -> int:
        if not a.poly:
            return 0
        d = gcrd(a.poly, self.Fx).degree
        if d % self.s:
            raise ArithmeticError(f"gcrd degree {d} is not a multiple of s={self.s}")
        return self.n - d // self.s

    def inverse(self, a: QuotientElem) -> QuotientElem:
        if not a.poly:
            raise ZeroDivisionError("zero is not invertible")
        g, u, _ = extended_gcrd(a.poly, self.Fx)
        if g.degree != 0:
            raise ZeroDivisionError(f"element has rank {self.rank(a)} < {self.n}")
        return self.reduce(u)

    def elements(self):
        """Every element of R_F, in encoding order."""
        for poly in self.ring.polys_below(self.length):
            yield QuotientElem(self, poly)

    @property
    def size(self) -> int:
        return self.field.size**self.length

    # ------------------------------------------------------------------
    # F_p coordinates

    @property
    def fp_dim(self) -> int:
        return self.length * self.field.m

    def fp_vector(self, a: QuotientElem) -> list[int]:
        F = self.field
        out = []
        for i in range(self.length):
            out.extend(to_digits(a.poly[i], F.p, F.m))
        return out

    def from_fp_vector(self, vec) -> QuotientElem:
        F = self.field
        m = F.m
        coeffs = []
        for i in range(self.length):
            val = 0
            for d in reversed(vec[i * m:(i + 1) * m]):
                val = val * F.p + d
            coeffs.append(val)
        return QuotientElem(self, SkewPoly(self.ring, coeffs))

    def fp_basis(self) -> list[QuotientElem]:
        F = self.field
        return [
            QuotientElem(self, self.ring.x(i, F.p**d))
            for i in range(self.length)
            for d in range(F.m)
        ]

    # ------------------------------------------------------------------
    # V_f = R / R f as an E_f-vector space

    @property
    def divisor(self) -> SkewPoly:
        if self._divisor is None:
            self._divisor = find_irreducible_divisor(self.ring, self.F)
        return self._divisor

    def _ef_fp_basis(self):
        """(K-element, power of y) pairs spanning E_F over F_p."""
        F = self.field
        e = self.ring.e
        w = F.subfield_generator(e)
        kbasis = [F.pow(w, l) for l in range(e)]
        return [(kb, r) for r in range(self.s) for kb in kbasis]

    def _vf_vector(self, v: SkewPoly) -> list[int]:
        F = self.field
        out = []
        for i in range(self.s):
            out.extend(to_digits(v[i], F.p, F.m))
        return out

    def _scalar_orbit(self, v: SkewPoly) -> list[SkewPoly]:
        """v * z(x^n) mod_r f for z over an F_p-basis of E_F."""
        f = self.divisor
        n = self.n
        return [
            right_divmod(v * self.ring.x(n * r, kb), f)[1]
            for kb, r in self._ef_fp_basis()
        ]

    def vf_basis(self, budget: int | None = None) -> list[SkewPoly]:
        """Greedy E_f-basis of V_f drawn from 1, x, x^2, ... then a*x^i."""
        f = self.divisor
        Fp = PrimeField(self.field.p)
        F = self.field

        def candidates():
            for i in range(self.length):
                yield self.ring.x(i)
            for i in range(self.s):
                for d in range(F.m):
                    yield self.ring.x(i, F.p**d)

        basis: list[SkewPoly] = []
        rows: list[list[int]] = []
        tried = 0
        for cand in candidates():
            if budget is not None and tried >= budget:
                break
            tried += 1
            v = right_divmod(cand, f)[1]
            if not v:
                continue
            reduced = linalg.rref(Fp, rows + [self._vf_vector(w) for w in self._scalar_orbit(v)])[0]
            if len(reduced) > len(rows):
                basis.append(v)
                rows = reduced
                if len(basis) == self.n:
                    return basis
        raise BudgetExceeded(
            f"found only {len(basis)} of {self.n} basis vectors after {tried} candidates", tried
        )

    def _coordinates(self, basis):
        key = tuple(b.coeffs for b in basis)
        if self._coord is None or self._coord[0] != key:
            Fp = PrimeField(self.field.p)
            cols = []
            for b in basis:
                for w in self._scalar_orbit(b):
                    cols.append(self._vf_vector(w))
            W = [list(r) for r in zip(*cols)]
            try:
                W_inv = linalg.inverse(Fp, W)
            except ZeroDivisionError:
                raise ArithmeticError("V_f basis is not E_f-independent") from None
            self._coord = (key, W_inv)
        return self._coord[1]

    def ef_coordinates(self, v: SkewPoly, basis) -> list[tuple]:
        """E_F-coordinates of ``v`` (degree < s) in ``basis``."""
        F = self.field
        Fp = PrimeField(F.p)
        W_inv = self._coordinates(basis)
        c = linalg.mat_vec(Fp, W_inv, self._vf_vector(v))
        pairs = self._ef_fp_basis()
        per = len(pairs)
        out = []
        for j in range(len(basis)):
            z = [0] * self.s
            for (kb, r), cj in zip(pairs, c[j * per:(j + 1) * per]):
                if cj:
                    z[r] = F.add(z[r], F.mul(cj, kb))
            out.append(tuple(z))
        return out

    def matrix_rep(self, a: QuotientElem, basis=None) -> MatrixRep:
        if basis is None:
            basis = self.vf_basis()
        f = self.divisor
        cols = [self.ef_coordinates(right_divmod(a.poly * b, f)[1], basis) for b in basis]
        entries = [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
        return MatrixRep(entries, list(basis), self)

    def root_of_divisor(self) -> int:
        """x^n mod_r f when it is a constant (f = x^n - theta), else ValueError."""
        r = right_divmod(self.ring.x(self.n), self.divisor)[1]
        if r.degree > 0:
            raise ValueError("x^n mod_r f is not a constant for this divisor")
        return r[0]
