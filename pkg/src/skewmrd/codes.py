"""The codes S_{n,s,k}(eta, rho, F) inside R_F and their invariants.

A code element is ``a_0 + a_1 x + ... + a_{ks-1} x^{ks-1} + eta*rho(a_0) x^{ks}``
for a_i in L.  Everything here is F_p-linear algebra on coordinate vectors
of R_F; idealisers, centraliser and centre are kernels of linear maps.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import linalg
from .gf import to_digits
from .linalg import PrimeField
from .quotient import QuotientElem, QuotientRing
from .skewpoly import BudgetExceeded, SkewPoly

DEFAULT_BUDGET = 2**20


@dataclass
class CodeSpec:
    quot: QuotientRing
    k: int
    eta: int = 0
    rho_exp: int = 0
    kprime: int | None = None  # K' = F_{p^kprime}

    def __post_init__(self):
        n, e, m = self.quot.n, self.quot.ring.e, self.field.m
        if not 1 <= self.k <= n - 1:
            raise ValueError(f"k must satisfy 1 <= k <= n-1 (n={n}), got {self.k}")
        if not 0 <= self.eta < self.field.size:
            raise ValueError(f"eta encoding {self.eta} outside the field")
        fixed = gcd(self.rho_exp % m, m)
        if self.kprime is None:
            self.kprime = gcd(e, fixed)
        if e % self.kprime:
            raise ValueError(f"K' = F_p^{self.kprime} is not a subfield of K = F_p^{e}")
        if fixed % self.kprime:
            raise ValueError(f"rho = Frob^{self.rho_exp} does not fix K' = F_p^{self.kprime}")

    @property
    def field(self):
        return self.quot.field

    @property
    def ring(self):
        return self.quot.ring

    @property
    def n(self):
        return self.quot.n

    @property
    def s(self):
        return self.quot.s

    @property
    def ks(self):
        return self.k * self.quot.s

    @property
    def q(self):
        return self.quot.ring.q

    @property
    def size(self) -> int:
        return self.q ** (self.n * self.s * self.k)

    def rho(self, a: int) -> int:
        return self.field.frob(a, self.rho_exp)

    def to_dict(self) -> dict:
        R = self.ring
        return {
            "p": self.field.p,
            "e": R.e,
            "n": self.n,
            "s": self.s,
            "k": self.k,
            "sigma_exp": R.sigma_exp,
            "rho_exp": self.rho_exp,
            "eta": self.eta,
            "kprime": self.kprime,
            "F": list(self.quot.F.coeffs),
            "modulus": list(self.field.modulus),
        }


def code_element(spec: CodeSpec, coeffs) -> QuotientElem:
    coeffs = list(coeffs)
    if len(coeffs) != spec.ks:
        raise ValueError(f"expected {spec.ks} coefficients, got {len(coeffs)}")
    F = spec.field
    top = F.mul(spec.eta, spec.rho(coeffs[0]))
    return QuotientElem(spec.quot, SkewPoly(spec.ring, coeffs + [top]))


def condition_value(spec: CodeSpec) -> int:
    """N_{L:K'}(eta) * N_{K:K'}((-1)^{sk(n-1)} F_0^k)."""
    F = spec.field
    d = spec.kprime
    c = F.pow(spec.quot.F[0], spec.k)
    if (spec.s * spec.k * (spec.n - 1)) % 2:
        c = F.neg(c)
    # norm K -> K' of an element of K
    nk = 0 if c == 0 else F.pow(c, (spec.q - 1) // (F.p**d - 1))
    return F.mul(F.norm(spec.eta, d), nk)


def validate_condition(spec: CodeSpec) -> bool:
    return condition_value(spec) != 1


def iter_code(spec: CodeSpec, start: int = 0, stop: int | None = None):
    """(index, element) pairs; index encodes (a_0, ..., a_{ks-1}) base |L|."""
    N = spec.field.size
    total = N**spec.ks
    stop = total if stop is None else min(stop, total)
    for idx in range(start, stop):
        yield idx, code_element(spec, to_digits(idx, N, spec.ks))


def code_tuple(spec: CodeSpec, idx: int) -> list[int]:
    return to_digits(idx, spec.field.size, spec.ks)


# ----------------------------------------------------------------------
# MRD verification


@dataclass
class CodeReport:
    spec: dict
    size: int
    min_rank: int | None
    mrd: bool
    witness: str | None
    condition_satisfied: bool
    mode: str
    seed: int | None
    checked: int
    rank_counts: dict = field(default_factory=dict)
    nuclear_computed: list | None = None
    nuclear_predicted: list | None = None
    singleton_equality: bool = False
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "size": self.size,
            "min_rank": self.min_rank,
            "mrd": self.mrd,
            "witness": self.witness,
            "condition_satisfied": self.condition_satisfied,
            "mode": self.mode,
            "seed": self.seed,
            "checked": self.checked,
            "rank_counts": {str(r): c for r, c in sorted(self.rank_counts.items())},
            "nuclear_computed": self.nuclear_computed,
            "nuclear_predicted": self.nuclear_predicted,
            "singleton_equality": self.singleton_equality,
            "notes": self.notes,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)


def _scan(spec: CodeSpec, indices):
    counts: dict[int, int] = {}
    best, witness = None, None
    for idx in indices:
        if idx == 0:
            continue
        a = code_element(spec, code_tuple(spec, idx))
        r = spec.quot.rank(a)
        counts[r] = counts.get(r, 0) + 1
        if best is None or r < best:
            best, witness = r, idx
    return best, witness, counts


def _scan_range(spec, start, stop):
    return _scan(spec, range(start, stop))


def _merge(parts):
    counts: dict[int, int] = {}
    best, witness = None, None
    for b, w, c in parts:
        for r, v in c.items():
            counts[r] = counts.get(r, 0) + v
        if b is not None and (best is None or b < best or (b == best and w < witness)):
            best, witness = b, w
    return best, witness, counts


def verify_mrd(
    spec: CodeSpec,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    jobs: int = 1,
    mode: str = "auto",
) -> CodeReport:
    """Rank every nonzero element (or a seeded sample) and judge MRD-ness."""
    total = spec.size
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        mode = "exhaustive" if total <= budget else "sampled"
    if mode == "exhaustive" and total > budget:
        raise BudgetExceeded(f"code has {total} elements, budget is {budget}", budget)

    if mode == "exhaustive":
        if jobs > 1 and total > 4096:
            step = -(-total // jobs)
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futs = [
                    pool.submit(_scan_range, spec, lo, min(lo + step, total))
                    for lo in range(0, total, step)
                ]
                best, witness, counts = _merge(f.result() for f in futs)
        else:
            best, witness, counts = _scan(spec, range(total))
        used_seed = None
    else:
        rng = random.Random(seed)
        sample = [rng.randrange(1, total) for _ in range(budget)]
        best, witness, counts = _scan(spec, sample)
        used_seed = seed

    n, k, s = spec.n, spec.k, spec.s
    target = n - k + 1
    notes = []
    singleton = best is not None and total == spec.q ** (s * n * (n - best + 1))
    mrd = best is not None and best >= target and singleton
    if best is not None and best > target:
        notes.append(f"minimum rank {best} exceeds n-k+1={target}; inspect")
    if mode == "sampled":
        notes.append("sampled: minimum rank is an upper bound on the true minimum")
    witness_text = None
    if witness is not None:
        witness_text = code_element(spec, code_tuple(spec, witness)).poly.to_text()
    return CodeReport(
        spec=spec.to_dict(),
        size=total,
        min_rank=best,
        mrd=mrd,
        witness=witness_text,
        condition_satisfied=validate_condition(spec),
        mode=mode,
        seed=used_seed,
        checked=sum(counts.values()),
        rank_counts=counts,
        singleton_equality=singleton,
        notes=notes,
    )


# ----------------------------------------------------------------------
# subspaces of R_F over F_p


class SubspaceBasis:
    """An F_p-subspace of R_F given by independent spanning elements."""

    def __init__(self, quot: QuotientRing, elems):
        self.quot = quot
        self.elems = list(elems)
        self.Fp = PrimeField(quot.field.p)
        self.vectors = [quot.fp_vector(a) for a in self.elems]
        self._rref, _ = linalg.rref(self.Fp, self.vectors) if self.vectors else ([], [])
        if len(self._rref) != len(self.elems):
            raise ValueError("spanning elements are not F_p-independent")

    @classmethod
    def from_vectors(cls, quot, vectors):
        return cls(quot, [quot.from_fp_vector(v) for v in vectors])

    @property
    def dim(self) -> int:
        return len(self.elems)

    @property
    def size(self) -> int:
        return self.quot.field.p**self.dim

    def contains(self, a: QuotientElem) -> bool:
        if not self.vectors:
            return not a
        v = self.quot.fp_vector(a)
        return linalg.rank(self.Fp, self._rref + [v]) == self.dim

    def elements(self):
        """All elements, ordered by the base-p encoding of the combination."""
        p = self.quot.field.p
        D = self.quot.fp_dim
        for code in range(p**self.dim):
            c = to_digits(code, p, self.dim)
            v = [0] * D
            for ci, vec in zip(c, self.vectors):
                if ci:
                    v = [(x + ci * y) % p for x, y in zip(v, vec)]
            yield self.quot.from_fp_vector(v)

    def annihilator(self) -> list[list[int]]:
        """Rows H with H v = 0 exactly for v in the subspace."""
        D = self.quot.fp_dim
        if not self.vectors:
            return [[1 if i == j else 0 for j in range(D)] for i in range(D)]
        return linalg.nullspace(self.Fp, self.vectors, D)

    def right_multiply(self, b: QuotientElem) -> "SubspaceBasis":
        return SubspaceBasis(self.quot, [a * b for a in self.elems])


def code_basis(spec: CodeSpec) -> SubspaceBasis:
    F = spec.field
    elems = []
    for i in range(spec.ks):
        for d in range(F.m):
            coeffs = [0] * spec.ks
            coeffs[i] = F.p**d
            elems.append(code_element(spec, coeffs))
    return SubspaceBasis(spec.quot, elems)


def normalize_identity(code: SubspaceBasis):
    """An equivalent code containing 1, as ``(code * pivot^-1, pivot)``.

    The pivot is 1 when already present, else x when it is in the code,
    else the first invertible element in enumeration order.
    """
    Q = code.quot
    one = Q.one()
    if code.contains(one):
        return code, one
    x = Q.x()
    if code.contains(x):
        pivot = x
    else:
        pivot = None
        for a in code.elements():
            if a and Q.rank(a) == Q.n:
                pivot = a
                break
        if pivot is None:
            raise ValueError("code has no invertible element")
    return code.right_multiply(Q.inverse(pivot)), pivot


def _product_columns(code: SubspaceBasis, side: str, H):
    """Columns (one per F_p basis element A of R_F) of the map A -> H vec(product)."""
    Q = code.quot
    Fp = code.Fp
    cols = []
    for E in Q.fp_basis():
        col = []
        for c in code.elems:
            if side == "left":
                v = Q.fp_vector(E * c)
            elif side == "right":
                v = Q.fp_vector(c * E)
            else:  # commutator
                v = Q.fp_vector(E * c - c * E)
            col.extend(linalg.mat_vec(Fp, H, v) if H is not None else v)
        cols.append(col)
    return cols


def _kernel(code: SubspaceBasis, col_sets) -> SubspaceBasis:
    Q = code.quot
    cols = [sum(parts, []) for parts in zip(*col_sets)]
    rows = [list(r) for r in zip(*cols)]
    rows = [r for r in rows if any(r)]
    D = Q.fp_dim
    if rows:
        vecs = linalg.nullspace(code.Fp, rows, D)
    else:
        vecs = [[1 if i == j else 0 for j in range(D)] for i in range(D)]
    return SubspaceBasis.from_vectors(Q, vecs)


def left_idealiser(code: SubspaceBasis) -> SubspaceBasis:
    """{A : A C in C}."""
    return _kernel(code, [_product_columns(code, "left", code.annihilator())])


def right_idealiser(code: SubspaceBasis) -> SubspaceBasis:
    """{A : C A in C}."""
    return _kernel(code, [_product_columns(code, "right", code.annihilator())])


def centraliser(code: SubspaceBasis) -> SubspaceBasis:
    return _kernel(code, [_product_columns(code, "commutator", None)])


def centre(code: SubspaceBasis) -> SubspaceBasis:
    return _kernel(
        code,
        [
            _product_columns(code, "left", code.annihilator()),
            _product_columns(code, "commutator", None),
        ],
    )


def nuclear_tuple(code: SubspaceBasis) -> tuple[int, int, int, int, int]:
    """(|C|, |I_l|, |I_r|, |C(C)|, |Z(C)|) of an identity-containing code."""
    return (
        code.size,
        left_idealiser(code).size,
        right_idealiser(code).size,
        centraliser(code).size,
        centre(code).size,
    )


# ----------------------------------------------------------------------
# predictions and comparisons


def predicted_exponents(n, s, e, k, i, j, eta_zero):
    """Exponents of p in the predicted nuclear parameters (L = F_{p^{ne}})."""
    m = n * e
    if eta_zero:
        return (n * s * k * e, m, m, s * e, e)
    return (n * s * k * e, gcd(m, i), gcd(m, s * k * j - i), s * gcd(m, j), gcd(gcd(m, i), j))


def predicted_parameters(spec: CodeSpec):
    """Predicted tuple, or None outside k <= n/2 and sk > 1."""
    if not (spec.s * spec.k > 1 and 2 * spec.k <= spec.n):
        return None
    R = spec.ring
    exps = predicted_exponents(
        spec.n, spec.s, R.e, spec.k, spec.rho_exp, R.sigma_exp, spec.eta == 0
    )
    return tuple(spec.field.p**x for x in exps)


def nuclear_parameters(spec: CodeSpec):
    """(computed, predicted) nuclear parameters; predicted may be None."""
    code, _ = normalize_identity(code_basis(spec))
    return nuclear_tuple(code), predicted_parameters(spec)


def _log_p(x, p):
    k = 0
    while x > 1:
        if x % p:
            raise ValueError(f"{x} is not a power of {p}")
        x //= p
        k += 1
    return k


def compare_known_families(params, p: int) -> dict:
    """Which tabulated semifield families share these nuclear parameters.

    Parameter-level only: equal tuples say nothing about isotopy.
    """
    exps = tuple(_log_p(x, p) for x in params)
    N = exps[0]
    matches: dict[str, list] = {"generalised_twisted_field": [], "pott_zhou": [], "petit": []}
    # i = 0, j = 0 or i = j collapse to a field, so they are not twisted fields
    for i in range(1, N):
        for j in range(1, N):
            if i == j:
                continue
            t = (N, gcd(N, i), gcd(N, j - i), gcd(N, j), gcd(gcd(N, i), j))
            if t == exps:
                matches["generalised_twisted_field"].append({"i": i, "j": j})
    # Pott-Zhou semifields are commutative and exist for odd p only
    if p % 2 and N % 2 == 0:
        h = N // 2
        for i in range(h):
            if (h // gcd(h, i)) % 2 == 0:
                continue
            for j in range(h + 1):
                g = gcd(gcd(h, i), j)
                if (N, g, gcd(h, i), g, g) == exps:
                    matches["pott_zhou"].append({"n": h, "i": i, "j": j})
    for n in range(2, N + 1):
        for s in range(2, N + 1):
            if N % (n * s):
                continue
            e = N // (n * s)
            if (n * s * e, n * e, n * e, s * e, e) == exps:
                matches["petit"].append({"n": n, "s": s, "e": e})
    found = [name for name, v in matches.items() if v]
    return {
        "exponents": list(exps),
        "matches": matches,
        "families": found,
        "note": "parameter comparison only; equal parameters do not imply isotopy",
    }
