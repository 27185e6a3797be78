import itertools

import pytest

from skewmrd.codes import CodeSpec, code_basis, normalize_identity, nuclear_tuple, validate_condition
from skewmrd.gf import field_create
from skewmrd.semifield import (
    CodeSemifield,
    PetitSemifield,
    TwistedField,
    petit_mul,
    spread_matrices,
    twisted_field_mul,
    verify_semifield,
)
from skewmrd.skewpoly import BudgetExceeded, SkewPoly


def test_petit_mul_basics(q22):
    R = q22.ring
    f = q22.divisor
    beta = q22.root_of_divisor()
    x = R.x()
    assert petit_mul(x, x, f) == R.const(beta)
    for b in R.polys_below(2):
        assert petit_mul(R.one(), b, f) == b
    with pytest.raises(ValueError):
        petit_mul(R.x(2), x, f)


def test_petit_rejects_reducible(r4):
    with pytest.raises(ValueError):
        PetitSemifield(r4, SkewPoly(r4, [1, 0, 1]))  # x^2 - 1 has the factor x - 1


def test_petit_q2_no_zero_divisors(q22):
    S = PetitSemifield(q22.ring, q22.divisor)
    nz = S.nonzero()
    assert len(nz) == 15
    assert all(S.mul(a, b) for a in nz for b in nz)
    rep = verify_semifield(S)
    assert rep.ok and rep.pairs == 225 and rep.counterexample is None


def test_petit_equals_eta_zero_code(q22):
    S = PetitSemifield(q22.ring, q22.divisor)
    C = CodeSemifield(CodeSpec(q22, 1))
    for a in S.elements():
        for b in S.elements():
            assert S.mul(a, b) == C.mul(a, b)


def test_code_semifield_q3(q32):
    for eta in range(9):
        for rho in (0, 1):
            spec = CodeSpec(q32, 1, eta, rho)
            if validate_condition(spec):
                assert verify_semifield(CodeSemifield(spec)).ok


def test_broken_multiplication_reported(q32):
    # eta violating the condition: record what happens, do not presume it
    found = []
    for eta in range(1, 9):
        spec = CodeSpec(q32, 1, eta, 1)
        if validate_condition(spec):
            continue
        rep = verify_semifield(CodeSemifield(spec))
        found.append((eta, rep.ok, rep.counterexample))
        if not rep.ok:
            a, b = rep.counterexample
            S = CodeSemifield(spec)
            elems = {S.encode(e): e for e in S.elements()}
            assert not S.mul(elems[a], elems[b])
    assert found
    assert any(not ok for _, ok, _ in found)


def test_code_semifield_requires_k1():
    from skewmrd.gf import KPoly
    from skewmrd.quotient import QuotientRing
    from skewmrd.skewpoly import SkewRing

    L = field_create(2, 3)
    Q = QuotientRing(SkewRing(L, 1, 3), KPoly(L, [1, 1], 1))
    with pytest.raises(ValueError):
        CodeSemifield(CodeSpec(Q, 2))


def test_twisted_field():
    L = field_create(3, 2)
    for a, b in itertools.product(range(9), repeat=2):
        assert twisted_field_mul(L, a, b, 0, 0, 1) == L.mul(a, b)
    eta = next(e for e in range(1, 9) if TwistedField(L, e, 0, 1).condition)
    tf = TwistedField(L, eta, 0, 1)
    rep = verify_semifield(tf)
    assert rep.ok and rep.pairs == 64
    bad = next(e for e in range(1, 9) if not TwistedField(L, e, 0, 1).condition)
    assert not verify_semifield(TwistedField(L, bad, 0, 1)).ok


@pytest.mark.parametrize("p,m", [(3, 3), (2, 4), (5, 2)])
def test_twisted_condition_is_exact(p, m):
    L = field_create(p, m)
    for i in range(m):
        for j in range(m):
            for eta in range(L.size):
                tf = TwistedField(L, eta, i, j)
                zero_div = any(
                    tf.mul(a, b) == 0 for a in range(1, L.size) for b in range(1, L.size)
                ) if L.size <= 27 else None
                if zero_div is not None:
                    assert tf.condition == (not zero_div)


def test_twisted_spread_code_matches_multiplication():
    L = field_create(3, 2)
    tf = TwistedField(L, 3, 1, 1)
    code = tf.spread_code()
    Q = code.quot
    # the element for a, applied to b, is a o b
    for a in range(9):
        coeffs = [0, 0]
        coeffs[0] = a
        coeffs[1] = L.sub(coeffs[1], L.mul(3, L.frob(a, 1)))
        elem = Q.reduce(SkewPoly(Q.ring, coeffs))
        assert code.contains(elem)
        for b in range(9):
            applied = L.add(L.mul(elem.poly[0], b), L.mul(elem.poly[1], L.frob(b, 1)))
            assert applied == tf.mul(a, b)


def test_gtf_equals_s1_code():
    # s = 1, k = 1 code with F = y - 1 is the spread set of a twisted field
    from skewmrd.quotient import QuotientRing
    from skewmrd.gf import KPoly
    from skewmrd.skewpoly import SkewRing

    L = field_create(3, 3)
    R = SkewRing(L, 1, 3)
    Q = QuotientRing(R, KPoly(L, [2, 1], 1))
    for eta in (2, 5):
        for rho in (1, 2):
            spec = CodeSpec(Q, 1, eta, rho)
            tf = TwistedField(L, L.neg(eta), rho, 1)
            assert {a for a in code_basis(spec).elements()} == set(tf.spread_code().elements())


def test_spread_matrices_ns2_eta0(q32):
    spec = CodeSpec(q32, 1)
    beta = q32.root_of_divisor()
    L, R = q32.field, q32.ring
    mats = spread_matrices(spec)
    assert len(mats) == 81
    for idx, M in enumerate(mats):
        a0, a1 = idx % 9, idx // 9
        assert M.evaluated(beta) == [
            [a0, L.mul(a1, beta)],
            [R.sigma(a1), R.sigma(a0)],
        ]


def test_spread_matrices_rejects_other_shapes():
    from skewmrd.codes import CodeSpec as CS
    from skewmrd.gf import KPoly
    from skewmrd.quotient import QuotientRing
    from skewmrd.skewpoly import SkewRing

    L = field_create(3, 2)
    Q = QuotientRing(SkewRing(L, 1, 2), KPoly(L, [2, 1], 1))
    with pytest.raises(ValueError):
        spread_matrices(CS(Q, 1))


def test_nuclei_of_n2_s2_q3_match_a_known_shape(q32):
    # parameters consistent with centre q and right nucleus q^2
    for eta in range(9):
        for rho in (0, 1):
            spec = CodeSpec(q32, 1, eta, rho)
            if not validate_condition(spec):
                continue
            code, _ = normalize_identity(code_basis(spec))
            t = nuclear_tuple(code)
            assert t[0] == 81 and t[3] == 9 and t[4] == 3


def test_budget_and_table(q22):
    S = PetitSemifield(q22.ring, q22.divisor)
    with pytest.raises(BudgetExceeded):
        verify_semifield(S, budget=100)
    table = S.table_csv()
    lines = table.strip().splitlines()
    assert lines[0] == "a,b,ab" and len(lines) == 1 + 16 * 16
    with pytest.raises(BudgetExceeded):
        S.table_csv(limit=4)
