"""The twisted polynomial ring R = L[x; sigma] over a finite field L.

Multiplication follows ``x a = sigma(a) x``.  Division is available on both
sides; right division (``a = q*b + r``) is the one used for remainders
``mod_r``.
"""

from __future__ import annotations

from math import gcd

from . import linalg
from .gf import FieldCtx, KPoly, kpoly_is_irreducible, parse_coeffs, to_digits


class BudgetExceeded(RuntimeError):
    """An enumeration ran past its configured bound."""

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class SkewRing:
    """L[x; sigma] with sigma = Frobenius^sigma_exp on L = F_{p^m}.

    The fixed field K of sigma is F_{p^e} with e = gcd(sigma_exp, m), and
    n = m / e is the order of sigma.  Pass ``n`` to insist on that order.
    """

    def __init__(self, field: FieldCtx, sigma_exp: int = 1, n: int | None = None):
        m = field.m
        j = sigma_exp % m
        e = gcd(j, m)
        order = m // e
        if n is not None and order != n:
            raise ValueError(
                f"sigma = Frob^{sigma_exp} has order {order} on F_{field.p}^{m}, expected {n}"
            )
        self.field = field
        self.sigma_exp = sigma_exp
        self.n = order
        self.e = e
        self.q = field.p**e
        self._sig = [field.frob_table(j * k) for k in range(order)]

    def __eq__(self, other):
        return (
            isinstance(other, SkewRing)
            and self.field == other.field
            and self.sigma_exp % self.field.m == other.sigma_exp % other.field.m
        )

    def __hash__(self):
        return hash((self.field, self.sigma_exp % self.field.m))

    def __reduce__(self):
        return (SkewRing, (self.field, self.sigma_exp))

    def __repr__(self):
        f = self.field
        return f"SkewRing(F_{f.p}^{f.m}, sigma=Frob^{self.sigma_exp}, n={self.n})"

    def sigma(self, a: int, k: int = 1) -> int:
        return self._sig[k % self.n][a]

    def sigma_table(self, k: int) -> list[int]:
        return self._sig[k % self.n]

    def __call__(self, coeffs) -> "SkewPoly":
        return SkewPoly(self, coeffs)

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, ())

    def one(self) -> "SkewPoly":
        return SkewPoly(self, (1,))

    def const(self, a: int) -> "SkewPoly":
        return SkewPoly(self, (a,))

    def x(self, i: int = 1, coeff: int = 1) -> "SkewPoly":
        return SkewPoly(self, [0] * i + [coeff])

    def monomial(self, coeff: int, i: int) -> "SkewPoly":
        return self.x(i, coeff)

    def in_centre_field(self, a: int) -> bool:
        """True iff ``a`` lies in K."""
        return self._sig[1 % self.n][a] == a

    def header(self) -> str:
        f = self.field
        return f"{f.p},{self.e},{self.n},{self.sigma_exp}"

    def polys_of_degree(self, d: int, monic: bool = True):
        """All (monic) polynomials of exact degree d in encoding order."""
        N = self.field.size
        if monic:
            for code in range(N**d):
                yield SkewPoly(self, to_digits(code, N, d) + [1])
        else:
            for lead in range(1, N):
                for code in range(N**d):
                    yield SkewPoly(self, to_digits(code, N, d) + [lead])

    def polys_below(self, d: int):
        """All polynomials of degree < d, in encoding order."""
        N = self.field.size
        for code in range(N**d):
            yield SkewPoly(self, to_digits(code, N, d))


class SkewPoly:
    """An element of L[x; sigma]; coefficients constant term first."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.coeffs == other.coeffs and self.ring == other.ring
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"SkewPoly({list(self.coeffs)})"

    def is_monic(self) -> bool:
        return self.lc == 1

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ValueError("skew polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        F = self.ring.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return SkewPoly(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return SkewPoly(self.ring, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return skew_mul(self, other)

    def scale(self, a: int) -> "SkewPoly":
        """Left scalar multiple ``a * self``."""
        F = self.ring.field
        return SkewPoly(self.ring, [F.mul(a, c) for c in self.coeffs])

    def monic(self) -> "SkewPoly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(self.ring.field.inv(self.lc))

    def __mod__(self, other):
        return right_divmod(self, other)[1]

    def encode(self) -> int:
        """Integer encoding: sum of coeff_i * |L|^i."""
        N = self.ring.field.size
        out = 0
        for c in reversed(self.coeffs):
            out = out * N + c
        return out

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) or "0"

    @classmethod
    def from_text(cls, ring: SkewRing, text: str) -> "SkewPoly":
        coeffs = parse_coeffs(text)
        N = ring.field.size
        for c in coeffs:
            if not 0 <= c < N:
                raise ValueError(f"coefficient {c} outside F_{ring.field.p}^{ring.field.m}")
        return cls(ring, coeffs)


def _same_ring(a: SkewPoly, b: SkewPoly):
    if a.ring != b.ring:
        raise ValueError("skew polynomials from different rings")


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _same_ring(f, g)
    R = f.ring
    F = R.field
    if not f.coeffs or not g.coeffs:
        return R.zero()
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    add, mul = F.add, F.mul
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        sig = R._sig[i % R.n]
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = add(out[i + j], mul(a, sig[b]))
    return SkewPoly(R, out)


def right_divmod(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """``a = q*b + r`` with deg r < deg b."""
    _same_ring(a, b)
    if not b.coeffs:
        raise ZeroDivisionError("skew division by zero")
    R = a.ring
    F = R.field
    db = b.degree
    r = list(a.coeffs)
    if len(r) - 1 < db:
        return R.zero(), a
    q = [0] * (len(r) - db)
    for d in range(len(r) - 1 - db, -1, -1):
        c = r[d + db]
        if c == 0:
            continue
        sig = R._sig[d % R.n]
        coef = F.div(c, sig[b.coeffs[-1]])
        q[d] = coef
        for k, bk in enumerate(b.coeffs):
            if bk:
                r[d + k] = F.sub(r[d + k], F.mul(coef, sig[bk]))
    return SkewPoly(R, q), SkewPoly(R, r[:db])


def left_divmod(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """``a = b*q + r`` with deg r < deg b."""
    _same_ring(a, b)
    if not b.coeffs:
        raise ZeroDivisionError("skew division by zero")
    R = a.ring
    F = R.field
    db = b.degree
    r = list(a.coeffs)
    if len(r) - 1 < db:
        return R.zero(), a
    inv_sig = R._sig[(-db) % R.n]
    inv_lead = F.inv(b.coeffs[-1])
    q = [0] * (len(r) - db)
    for d in range(len(r) - 1 - db, -1, -1):
        lead = r[d + db]
        if lead == 0:
            continue
        # b_db * sigma^db(c) must equal lead
        c = inv_sig[F.mul(lead, inv_lead)]
        q[d] = c
        for k, bk in enumerate(b.coeffs):
            if bk:
                r[d + k] = F.sub(r[d + k], F.mul(bk, R._sig[k % R.n][c]))
    return SkewPoly(R, q), SkewPoly(R, r[:db])


def extended_gcrd(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly, SkewPoly]:
    """Monic g = gcrd(a, b) together with u, v such that g = u*a + v*b."""
    _same_ring(a, b)
    R = a.ring
    if not a.coeffs and not b.coeffs:
        raise ValueError("gcrd(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = R.one(), R.zero()
    v0, v1 = R.zero(), R.one()
    while r1.coeffs:
        q, r = right_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = R.field.inv(r0.lc)
    return r0.scale(c), u0.scale(c), v0.scale(c)


def gcrd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    _same_ring(a, b)
    if not a.coeffs and not b.coeffs:
        raise ValueError("gcrd(0, 0) is undefined")
    r0, r1 = a, b
    while r1.coeffs:
        r0, r1 = r1, right_divmod(r0, r1)[1]
    return r0.monic()


# ----------------------------------------------------------------------
# matrices attached to a monic f


def _require_monic(f: SkewPoly):
    if f.degree < 1:
        raise ValueError("expected a nonconstant polynomial")
    if not f.is_monic():
        raise ValueError("expected a monic polynomial")


def companion(f: SkewPoly) -> list[list[int]]:
    """s x s companion matrix: ones on the subdiagonal, last column -f_i."""
    _require_monic(f)
    F = f.ring.field
    s = f.degree
    C = [[0] * s for _ in range(s)]
    for i in range(1, s):
        C[i][i - 1] = 1
    for i in range(s):
        C[i][s - 1] = F.neg(f[i])
    return C


def a_matrix(f: SkewPoly) -> list[list[int]]:
    """C_f C_f^sigma ... C_f^(sigma^(n-1)), the matrix of v -> x^n v mod_r f."""
    R = f.ring
    C = companion(f)
    A = C
    for k in range(1, R.n):
        sig = R.sigma_table(k)
        A = linalg.mat_mul(R.field, A, [[sig[c] for c in row] for row in C])
    return A


def minimal_polynomial(field, A) -> list[int]:
    """Monic minimal polynomial of a square matrix, by linear dependence of powers."""
    s = len(A)
    ident = [[1 if i == j else 0 for j in range(s)] for i in range(s)]
    powers = [ident]
    vecs = [[c for row in ident for c in row]]
    while True:
        nxt = linalg.mat_mul(field, powers[-1], A)
        target = [c for row in nxt for c in row]
        sol = linalg.solve_combination(field, vecs, target)
        if sol is not None:
            return [field.neg(c) for c in sol] + [1]
        powers.append(nxt)
        vecs.append(target)


def mclm(f: SkewPoly) -> KPoly:
    """Minimal central left multiple of monic f, as F in K[y] with F(x^n) = g f."""
    R = f.ring
    if f.degree == 0 and f.is_monic():
        return KPoly(R.field, [1], R.e)
    _require_monic(f)
    coeffs = minimal_polynomial(R.field, a_matrix(f))
    for c in coeffs:
        if not R.in_centre_field(c):
            raise ArithmeticError(f"minimal polynomial coefficient {c} is not fixed by sigma")
    return KPoly(R.field, coeffs, R.e)


def central_expand(ring: SkewRing, F: KPoly) -> SkewPoly:
    """F(x^n) as a skew polynomial."""
    for c in F.coeffs:
        if not ring.in_centre_field(c):
            raise ValueError(f"coefficient {c} of F is not in the fixed field of sigma")
    n = ring.n
    out = [0] * (n * F.degree + 1) if F.coeffs else []
    for j, c in enumerate(F.coeffs):
        out[n * j] = c
    return SkewPoly(ring, out)


def is_irreducible_skew(f: SkewPoly) -> bool:
    F = mclm(f)
    return F.degree == f.degree and kpoly_is_irreducible(F)


def find_irreducible_divisor(ring: SkewRing, F: KPoly, budget: int | None = None) -> SkewPoly:
    """First monic degree-s right divisor of F(x^n) in encoding order.

    Candidates x^s + sum f_i x^i are visited by increasing
    ``sum f_i |L|^i``, so f_0 varies fastest.
    """
    s = F.degree
    if s < 1:
        raise ValueError("F must be nonconstant")
    if not kpoly_is_irreducible(F):
        raise ValueError(f"{F} is not irreducible over K")
    Fx = central_expand(ring, F)
    N = ring.field.size
    total = N**s
    bound = total if budget is None else min(budget, total)
    for code in range(bound):
        f = SkewPoly(ring, to_digits(code, N, s) + [1])
        if not right_divmod(Fx, f)[1].coeffs:
            return f
    raise BudgetExceeded(f"no divisor among the first {bound} candidates", bound)


def right_divisors(f: SkewPoly, degree: int):
    """All monic right divisors of f of the given degree (brute force)."""
    for g in f.ring.polys_of_degree(degree):
        if not right_divmod(f, g)[1].coeffs:
            yield g
