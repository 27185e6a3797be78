"""Semifields from the k = 1 codes, Petit multiplication and twisted fields."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import gcd

from .codes import CodeSpec, SubspaceBasis, code_element
from .gf import FieldCtx, KPoly, to_digits
from .quotient import MatrixRep, QuotientRing
from .skewpoly import BudgetExceeded, SkewPoly, SkewRing, is_irreducible_skew, right_divmod

DEFAULT_PAIR_BUDGET = 2**20


def petit_mul(a: SkewPoly, b: SkewPoly, f: SkewPoly) -> SkewPoly:
    """a o b = ab mod_r f."""
    s = f.degree
    if a.degree >= s or b.degree >= s:
        raise ValueError(f"operands must have degree < {s}")
    return right_divmod(a * b, f)[1]


class _FiniteMul:
    """Common helpers; subclasses provide elements(), mul(), encode()."""

    def nonzero(self):
        return [a for a in self.elements() if not self.is_zero(a)]

    def is_zero(self, a) -> bool:
        return not a

    def table_csv(self, limit: int = 4096) -> str:
        elems = self.elements()
        if len(elems) > limit:
            raise BudgetExceeded(f"{len(elems)} elements exceed table limit {limit}", limit)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "ab"])
        for a in elems:
            for b in elems:
                w.writerow([self.encode(a), self.encode(b), self.encode(self.mul(a, b))])
        return buf.getvalue()


class PetitSemifield(_FiniteMul):
    """S_f = R_{<s} with a o b = ab mod_r f, for f monic irreducible."""

    def __init__(self, ring: SkewRing, f: SkewPoly):
        if not f.is_monic() or f.degree < 1:
            raise ValueError("f must be monic of positive degree")
        if not is_irreducible_skew(f):
            raise ValueError(f"f = {f.to_text()} is reducible")
        self.ring = ring
        self.f = f
        self.s = f.degree
        self._elems = None

    def elements(self):
        if self._elems is None:
            self._elems = list(self.ring.polys_below(self.s))
        return self._elems

    def mul(self, a: SkewPoly, b: SkewPoly) -> SkewPoly:
        return petit_mul(a, b, self.f)

    def encode(self, a: SkewPoly) -> int:
        return a.encode()

    @property
    def order(self) -> int:
        return self.ring.field.size**self.s


class CodeSemifield(_FiniteMul):
    """a o b = (c(a) b) mod_r f with c(a) the code element of the tuple a.

    Elements are polynomials of degree < s; the tuple of a is its
    coefficient list.  With eta = 0 this is Petit multiplication.
    """

    def __init__(self, spec: CodeSpec):
        if spec.k != 1:
            raise ValueError("semifields come from k = 1 codes")
        self.spec = spec
        self.ring = spec.ring
        self.f = spec.quot.divisor
        self.s = spec.s
        self._elems = None

    def elements(self):
        if self._elems is None:
            self._elems = list(self.ring.polys_below(self.s))
        return self._elems

    def mul(self, a: SkewPoly, b: SkewPoly) -> SkewPoly:
        coeffs = list(a.coeffs) + [0] * (self.s - len(a.coeffs))
        c = code_element(self.spec, coeffs).poly
        return right_divmod(c * b, self.f)[1]

    def encode(self, a: SkewPoly) -> int:
        return a.encode()

    @property
    def order(self) -> int:
        return self.spec.q ** (self.spec.n * self.s)


class TwistedField(_FiniteMul):
    """a o b = ab - eta a^(p^i) b^(p^j) on F_{p^m}."""

    def __init__(self, field: FieldCtx, eta: int, i: int, j: int):
        self.field = field
        self.eta = eta
        self.i = i % field.m
        self.j = j % field.m
        self.condition = twisted_condition(field, eta, i, j)

    def elements(self):
        return list(range(self.field.size))

    def is_zero(self, a) -> bool:
        return a == 0

    def mul(self, a: int, b: int) -> int:
        F = self.field
        t = F.mul(self.eta, F.mul(F.frob(a, self.i), F.frob(b, self.j)))
        return F.sub(F.mul(a, b), t)

    def encode(self, a: int) -> int:
        return a

    @property
    def order(self) -> int:
        return self.field.size

    def spread_code(self) -> SubspaceBasis:
        """The maps b -> a o b as elements a - eta a^(p^i) x^j of L[x; Frob]/(x^m - 1)."""
        F = self.field
        ring = SkewRing(F, 1, F.m)
        Q = QuotientRing(ring, KPoly(F, [F.neg(1), 1], 1))
        elems = []
        for d in range(F.m):
            a = F.p**d
            coeffs = [0] * F.m
            coeffs[0] = a
            coeffs[self.j] = F.sub(coeffs[self.j], F.mul(self.eta, F.frob(a, self.i)))
            elems.append(Q.reduce(SkewPoly(ring, coeffs)))
        return SubspaceBasis(Q, elems)


def twisted_condition(field: FieldCtx, eta: int, i: int, j: int) -> bool:
    """No zero divisors iff eta is not of the form a^(p^i - 1) b^(p^j - 1)."""
    d = gcd(gcd(field.m, i), j)
    return field.norm(eta, d) != 1


def twisted_field_mul(field: FieldCtx, a: int, b: int, eta: int, i: int, j: int) -> int:
    return TwistedField(field, eta, i, j).mul(a, b)


@dataclass
class SemifieldReport:
    order: int
    pairs: int
    ok: bool
    counterexample: tuple | None = None
    left_unique: bool = True
    right_unique: bool = True
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "pairs": self.pairs,
            "ok": self.ok,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "left_unique": self.left_unique,
            "right_unique": self.right_unique,
            "notes": self.notes,
        }


def verify_semifield(sf, budget: int = DEFAULT_PAIR_BUDGET) -> SemifieldReport:
    """Exhaustive zero-divisor and unique-solvability check."""
    nz = sf.nonzero()
    pairs = len(nz) ** 2
    if pairs > budget:
        raise BudgetExceeded(f"{pairs} pairs exceed budget {budget}", budget)
    counter = None
    left_ok = right_ok = True
    columns: dict[int, set] = {sf.encode(b): set() for b in nz}
    for a in nz:
        row = set()
        for b in nz:
            c = sf.mul(a, b)
            if sf.is_zero(c) and counter is None:
                counter = (sf.encode(a), sf.encode(b))
            code = sf.encode(c)
            row.add(code)
            columns[sf.encode(b)].add(code)
        # a x = b uniquely solvable iff x -> a o x is injective
        if len(row) != len(nz):
            left_ok = False
    for col in columns.values():
        if len(col) != len(nz):
            right_ok = False
    ok = counter is None and left_ok and right_ok
    return SemifieldReport(
        order=len(nz) + 1,
        pairs=pairs,
        ok=ok,
        counterexample=counter,
        left_unique=left_ok,
        right_unique=right_ok,
    )


def spread_matrices(spec: CodeSpec) -> list[MatrixRep]:
    """Matrices of every code element in the basis 1, x, ..., x^(n-1)."""
    Q = spec.quot
    if spec.n != spec.s or spec.n not in (2, 3) or spec.k != 1:
        raise ValueError("spread matrices are produced for k = 1 and n = s in {2, 3}")
    basis = [spec.ring.x(i) for i in range(spec.n)]
    if Q.vf_basis() != basis:
        raise ArithmeticError("greedy V_f basis is not 1, x, ..., x^(n-1)")
    N = spec.field.size
    return [
        Q.matrix_rep(code_element(spec, to_digits(idx, N, spec.ks)), basis)
        for idx in range(N**spec.ks)
    ]
