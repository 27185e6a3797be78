"""Dense Gaussian elimination over small finite fields.

Works over any field object providing ``zero``/``one`` handling via
``add``, ``sub``, ``mul``, ``inv`` and ``is_zero``; matrices are lists of
rows.  :class:`PrimeField` is the F_p instance used for subspace
computations.
"""

from __future__ import annotations


class PrimeField:
    """F_p with integer elements; faster than a table-driven FieldCtx."""

    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero mod p")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0


def _zero(F):
    return getattr(F, "zero", 0)


def _one(F):
    return getattr(F, "one", 1)


def _is_zero(F, a):
    fn = getattr(F, "is_zero", None)
    return fn(a) if fn is not None else a == 0


def rref(F, rows):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(M)):
            if not _is_zero(F, M[i][c]):
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and not _is_zero(F, M[i][c]):
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(F, rows) -> int:
    return len(rref(F, rows)[1])


def nullspace(F, rows, ncols=None):
    """Basis of ``{v : M v = 0}`` for ``M`` given by rows."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    R, pivots = rref(F, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    zero, one = _zero(F), _one(F)
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fc]) if hasattr(F, "neg") else F.sub(zero, row[fc])
        basis.append(v)
    return basis


def inverse(F, M):
    n = len(M)
    zero, one = _zero(F), _one(F)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def mat_vec(F, M, v):
    zero = _zero(F)
    out = []
    for row in M:
        acc = zero
        for a, b in zip(row, v):
            if not _is_zero(F, a) and not _is_zero(F, b):
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def mat_mul(F, A, B):
    zero = _zero(F)
    cols = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in cols:
            acc = zero
            for a, b in zip(row, col):
                if not _is_zero(F, a) and not _is_zero(F, b):
                    acc = F.add(acc, F.mul(a, b))
            out_row.append(acc)
        out.append(out_row)
    return out


def solve_combination(F, vectors, target):
    """Coefficients c with sum c_i vectors[i] = target, or None."""
    if not vectors:
        return [] if all(_is_zero(F, t) for t in target) else None
    n = len(vectors)
    rows = [[vec[r] for vec in vectors] + [target[r]] for r in range(len(target))]
    R, pivots = rref(F, rows)
    if n in pivots:
        return None
    sol = [_zero(F)] * n
    for row, pc in zip(R, pivots):
        sol[pc] = row[n]
    return sol
