"""Finite fields F_{p^m} with table-driven arithmetic.

Elements are plain ints in ``range(p**m)``: the little-endian base-p digits
of an element are its coordinates in the power basis of ``F_p[y]/(modulus)``.
Every subfield lives inside one ambient field and is recognised by
Frobenius-fixedness rather than by a separate representation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import gcd

import numpy as np

# Addition tables are materialised up to this field size; above it addition
# goes through base-p digits.
ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def to_digits(a: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        a, r = divmod(a, p)
        out.append(r)
    return out


def from_digits(digits, p: int) -> int:
    out = 0
    for d in reversed(list(digits)):
        out = out * p + d
    return out


def _fp_polymulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Multiply two digit vectors in F_p[y]/(modulus); modulus is monic."""
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for t in range(m + 1):
                prod[k - m + t] = (prod[k - m + t] - c * modulus[t]) % p
    out = prod[:m] + [0] * (m - len(prod[:m]))
    return out


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """The field F_{p^m} = F_p[y]/(modulus).

    Construct through :func:`field_create`, which validates the modulus.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    size: int = field(init=False)
    generator: int = field(init=False)

    def __post_init__(self):
        p, m = self.p, self.m
        N = p**m
        object.__setattr__(self, "size", N)
        exp, log, g = _build_exp_log(p, m, self.modulus)
        object.__setattr__(self, "generator", g)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "_frob", {})
        if p == 2:
            add_table = None
            neg = list(range(N))
        else:
            digits = np.array([to_digits(a, p, m) for a in range(N)], dtype=np.int64)
            powers = p ** np.arange(m, dtype=np.int64)
            neg = (((-digits) % p) @ powers).tolist()
            if N <= ADD_TABLE_LIMIT:
                summed = (digits[:, None, :] + digits[None, :, :]) % p
                add_table = (summed @ powers).tolist()
            else:
                add_table = None
        object.__setattr__(self, "_add", add_table)
        object.__setattr__(self, "_neg", neg)

    # equality by parameters so independently created contexts agree
    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (FieldCtx, (self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus})"

    # ------------------------------------------------------------------
    # arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        p = self.p
        out, mult = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._exp[(self.size - 1 - self._log[a]) % (self.size - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.size - 1)]

    def log(self, a: int) -> int:
        """Discrete log base :attr:`generator`."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.size - 1)]

    # ------------------------------------------------------------------
    # automorphisms and subfields

    def frob_table(self, i: int) -> list[int]:
        """Lookup table for ``a -> a^(p^i)``."""
        i %= self.m
        tab = self._frob.get(i)
        if tab is None:
            k = self.p**i
            tab = [0] + [self._exp[(self._log[a] * k) % (self.size - 1)] for a in range(1, self.size)]
            self._frob[i] = tab
        return tab

    def frob(self, a: int, i: int = 1) -> int:
        return self.frob_table(i)[a]

    def in_subfield(self, a: int, d: int) -> bool:
        """True iff ``a`` lies in F_{p^d} (requires d | m)."""
        if self.m % d:
            raise ValueError(f"F_{self.p}^{d} is not a subfield of F_{self.p}^{self.m}")
        return self.frob(a, d) == a

    def subfield_elements(self, d: int) -> list[int]:
        return [a for a in range(self.size) if self.in_subfield(a, d)]

    def subfield_generator(self, d: int) -> int:
        """A primitive element of F_{p^d}."""
        if self.m % d:
            raise ValueError(f"{d} does not divide {self.m}")
        return self.pow(self.generator, (self.size - 1) // (self.p**d - 1))

    def norm(self, a: int, d: int) -> int:
        """Field norm from F_{p^m} down to F_{p^d}."""
        if d <= 0 or self.m % d:
            raise ValueError(f"norm target degree {d} does not divide {self.m}")
        if a == 0:
            return 0
        return self.pow(a, (self.size - 1) // (self.p**d - 1))

    def prime(self, c: int) -> int:
        """Embed the integer ``c`` via the prime field."""
        return c % self.p

    def digits(self, a: int) -> list[int]:
        return to_digits(a, self.p, self.m)


def _build_exp_log(p, m, modulus):
    N = p**m
    if N == 2:
        return [1, 1], [None, 0], 1
    order = N - 1
    for g in range(1, N):
        gd = to_digits(g, p, m)
        powers = [1]
        cur = [1] + [0] * (m - 1)
        ok = True
        for k in range(1, order):
            cur = _fp_polymulmod(cur, gd, modulus, p)
            val = from_digits(cur, p)
            if val == 1:
                ok = False
                break
            powers.append(val)
        if not ok or len(set(powers)) != order:
            continue
        log = [None] * N
        for k, v in enumerate(powers):
            log[v] = k
        exp = powers + powers
        return exp, log, g
    raise ValueError(f"modulus {modulus} does not define a field")


@dataclass(frozen=True)
class Automorphism:
    """``a -> a^(p^frob_exp)``."""

    frob_exp: int

    def apply(self, ctx: FieldCtx, a: int) -> int:
        return ctx.frob(a, self.frob_exp)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(self.frob_exp + other.frob_exp)

    def fixed_degree(self, m: int) -> int:
        """d such that the fixed field in F_{p^m} is F_{p^d}."""
        return gcd(self.frob_exp % m, m)

    def order(self, m: int) -> int:
        return m // self.fixed_degree(m)


def frobenius(ctx: FieldCtx, a: int, aut: Automorphism | int) -> int:
    i = aut.frob_exp if isinstance(aut, Automorphism) else aut
    return ctx.frob(a, i)


def norm(ctx: FieldCtx, a: int, sub_exp: int) -> int:
    return ctx.norm(a, sub_exp)


# ----------------------------------------------------------------------
# commutative polynomials over a FieldCtx (coefficient lists, constant first)


def poly_trim(a) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(ctx, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim(ctx.add(x, y) for x, y in zip(a, b))


def poly_sub(ctx, a, b):
    return poly_add(ctx, a, [ctx.neg(c) for c in b])


def poly_mul(ctx, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return poly_trim(out)


def poly_divmod(ctx, a, b):
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(a)
    db = len(b) - 1
    inv_lead = ctx.inv(b[-1])
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = ctx.mul(c, inv_lead)
        q[k - db] = c
        for t, bt in enumerate(b):
            r[k - db + t] = ctx.sub(r[k - db + t], ctx.mul(c, bt))
    return poly_trim(q), poly_trim(r)


def poly_mod(ctx, a, b):
    return poly_divmod(ctx, a, b)[1]


def poly_monic(ctx, a):
    a = poly_trim(a)
    if not a:
        return a
    c = ctx.inv(a[-1])
    return [ctx.mul(c, x) for x in a]


def poly_gcd(ctx, a, b):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_mod(ctx, a, b)
    return poly_monic(ctx, a)


def poly_powmod(ctx, base, k, mod):
    result = [1]
    base = poly_mod(ctx, base, mod)
    while k:
        if k & 1:
            result = poly_mod(ctx, poly_mul(ctx, result, base), mod)
        base = poly_mod(ctx, poly_mul(ctx, base, base), mod)
        k >>= 1
    return result


def poly_eval(ctx, a, x):
    acc = 0
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_is_irreducible(ctx, f, q) -> bool:
    """Ben-Or test for ``f`` with coefficients in the subfield F_q.

    gcd(f, y^(q^i) - y) = 1 for all i <= deg f / 2.
    """
    f = poly_trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    h = [0, 1]
    for _ in range(d // 2):
        h = poly_powmod(ctx, h, q, f)
        if len(poly_gcd(ctx, poly_sub(ctx, h, [0, 1]), f)) > 1:
            return False
    return True


# ----------------------------------------------------------------------
# field construction


def _least_irreducible_modulus(p: int, m: int) -> tuple[int, ...]:
    base = FieldCtx(p, 1, (0, 1))
    for c in range(p**m):
        cand = to_digits(c, p, m) + [1]
        if poly_is_irreducible(base, cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


@functools.lru_cache(maxsize=None)
def _cached_field(p, m, modulus):
    return FieldCtx(p, m, modulus)


def field_create(p: int, m: int, modulus=None) -> FieldCtx:
    """Build F_{p^m}.

    Without ``modulus`` the least monic irreducible of degree ``m`` is used,
    ordering candidates by the integer encoding of their coefficients, so the
    element encoding is reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        modulus = (0, 1) if m == 1 else _least_irreducible_modulus(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if m > 1 and not poly_is_irreducible(FieldCtx(p, 1, (0, 1)), list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
    return _cached_field(p, m, modulus)


# ----------------------------------------------------------------------
# polynomials over a subfield


class KPoly:
    """Polynomial in y whose coefficients lie in the subfield F_{p^sub}."""

    __slots__ = ("field", "coeffs", "sub")

    def __init__(self, field: FieldCtx, coeffs, sub: int):
        coeffs = tuple(poly_trim(int(c) for c in coeffs))
        if field.m % sub:
            raise ValueError(f"subfield degree {sub} does not divide {field.m}")
        for c in coeffs:
            if not 0 <= c < field.size:
                raise ValueError(f"coefficient {c} out of range")
            if field.frob(c, sub) != c:
                raise ValueError(f"coefficient {c} is not in F_{field.p}^{sub}")
        self.field = field
        self.coeffs = coeffs
        self.sub = sub

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def q(self) -> int:
        return self.field.p**self.sub

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, KPoly):
            return self.coeffs == other.coeffs and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"KPoly({list(self.coeffs)}, sub={self.sub})"

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) or "0"

    @classmethod
    def from_text(cls, field, text: str, sub: int) -> "KPoly":
        return cls(field, parse_coeffs(text), sub)


def parse_coeffs(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def kpoly_is_irreducible(F: KPoly) -> bool:
    if not F.coeffs:
        raise ValueError("the zero polynomial has no factorisation")
    return poly_is_irreducible(F.field, list(F.coeffs), F.q)


def least_irreducible_kpoly(field: FieldCtx, sub: int, degree: int, exclude_y: bool = True) -> KPoly:
    """Least monic irreducible of the given degree over F_{p^sub}.

    Candidates are ordered by the tuple of their lower coefficients read as a
    little-endian number in the ambient encoding.
    """
    elems = field.subfield_elements(sub)
    q = len(elems)
    for c in range(q**degree):
        low = [elems[d] for d in to_digits(c, q, degree)]
        F = KPoly(field, low + [1], sub)
        if exclude_y and F.coeffs == (0, 1):
            continue
        if kpoly_is_irreducible(F):
            return F
    raise ValueError(f"no monic irreducible of degree {degree} over F_{field.p}^{sub}")
