import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    factorizations,
    is_irreducible_bruteforce,
    mclm_enumerate,
    mclm_linear_system,
    monic_right_divisors,
)
from skewmrd.gf import KPoly, field_create, least_irreducible_kpoly
from skewmrd.skewpoly import (
    BudgetExceeded,
    SkewPoly,
    SkewRing,
    a_matrix,
    central_expand,
    companion,
    extended_gcrd,
    find_irreducible_divisor,
    gcrd,
    is_irreducible_skew,
    left_divmod,
    mclm,
    right_divmod,
)


def rand_poly(ring, rng, max_deg=5):
    d = rng.randint(-1, max_deg)
    return SkewPoly(ring, [rng.randrange(ring.field.size) for _ in range(d + 1)])


def polys(ring, max_deg):
    return st.lists(st.integers(0, ring.field.size - 1), max_size=max_deg + 1).map(
        lambda c: SkewPoly(ring, c)
    )


def test_ring_rejects_wrong_order():
    L = field_create(3, 2)
    with pytest.raises(ValueError):
        SkewRing(L, 2, 2)
    with pytest.raises(ValueError):
        SkewRing(L, 1, 3)
    R = SkewRing(field_create(2, 6), 2, 3)  # K = F_4
    assert (R.e, R.n, R.q) == (2, 3, 4)


def test_commutation_rule(r9):
    L = r9.field
    x = r9.x()
    for a in range(L.size):
        assert x * r9.const(a) == SkewPoly(r9, [0, r9.sigma(a)])


def test_tx_squared_f4(r4):
    t = 2
    tx = SkewPoly(r4, [0, t])
    assert tx * tx == r4.x(2)


def _beta_alpha_factorization(R, alpha, beta):
    L = R.field
    sb = R.sigma(beta)
    left = SkewPoly(R, [L.neg(sb), alpha, 1])
    right = SkewPoly(R, [L.neg(beta), L.neg(alpha), 1])
    lam = L.add(L.add(beta, sb), L.mul(alpha, R.sigma(alpha)))
    G = SkewPoly(R, [L.mul(beta, sb), 0, L.neg(lam), 0, 1])
    return left, right, G


@pytest.mark.parametrize("ring", ["r4", "r9"])
def test_quartic_factorization(ring, request):
    R = request.getfixturevalue(ring)
    L = R.field
    for alpha in range(L.size):
        for beta in range(L.size):
            left, right, G = _beta_alpha_factorization(R, alpha, beta)
            assert left * right == G
            assert right_divmod(G, right) == (left, R.zero())


def test_associativity_exhaustive_f4(r4):
    # all polynomials of degree <= 1 plus a spread of degree-2 ones
    small = list(r4.polys_below(2)) + list(r4.polys_of_degree(2))[:8]
    for a in small:
        for b in small:
            ab = a * b
            for c in small:
                assert ab * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert (b + c) * a == b * a + c * a


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_ring_axioms_sampled(data):
    R = SkewRing(field_create(2, 3), 1, 3)
    a, b, c = (data.draw(polys(R, 4)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a and b:
        assert (a * b).degree == a.degree + b.degree


def test_no_zero_divisors_exhaustive(r4):
    nz = [p for p in r4.polys_below(3) if p]
    for a in nz:
        for b in nz:
            assert a * b


def test_division_examples(r9):
    L = r9.field
    f = SkewPoly(r9, [1, 2, 1])
    assert right_divmod(f, f) == (r9.one(), r9.zero())
    assert left_divmod(f, f) == (r9.one(), r9.zero())
    x = r9.x()
    for a in range(1, L.size):
        assert right_divmod(x * r9.const(a), x) == (r9.const(r9.sigma(a)), r9.zero())
        inv_sig = r9.sigma(a, r9.n - 1)
        assert left_divmod(r9.const(a) * x, x) == (r9.const(inv_sig), r9.zero())
    with pytest.raises(ZeroDivisionError):
        right_divmod(f, r9.zero())


@pytest.mark.parametrize("ring", ["r4", "r9"])
def test_euclidean_recomposition_random(ring, request):
    R = request.getfixturevalue(ring)
    rng = random.Random(7)
    for _ in range(200):
        a = rand_poly(R, rng, 7)
        b = rand_poly(R, rng, 4)
        if not b:
            continue
        q, r = right_divmod(a, b)
        assert q * b + r == a and r.degree < b.degree
        q, r = left_divmod(a, b)
        assert b * q + r == a and r.degree < b.degree


def test_bezout_random_f9(r9):
    rng = random.Random(11)
    for _ in range(200):
        a, b = rand_poly(r9, rng, 6), rand_poly(r9, rng, 6)
        if not a and not b:
            continue
        g, u, v = extended_gcrd(a, b)
        assert u * a + v * b == g
        assert g.is_monic()
        assert not right_divmod(a, g)[1] and not right_divmod(b, g)[1]


def test_gcrd_edge_cases(r9):
    f = SkewPoly(r9, [2, 1, 2])
    assert gcrd(f, r9.zero()) == f.monic()
    with pytest.raises(ValueError):
        gcrd(r9.zero(), r9.zero())


def test_gcrd_with_central_multiple(r9):
    L = r9.field
    beta = 3  # not in F_3
    f = SkewPoly(r9, [L.neg(beta), 0, 1])
    G = central_expand(r9, mclm(f))
    assert gcrd(f, G) == f


def test_companion_and_a_matrix(r9):
    L = r9.field
    for alpha in range(L.size):
        for beta in range(L.size):
            f = SkewPoly(r9, [L.neg(beta), L.neg(alpha), 1])
            assert companion(f) == [[0, beta], [1, alpha]]
            sa, sb = r9.sigma(alpha), r9.sigma(beta)
            expected = [[beta, L.mul(sa, beta)], [alpha, L.add(sb, L.mul(alpha, sa))]]
            assert a_matrix(f) == expected
    for a in range(L.size):
        f = SkewPoly(r9, [L.neg(a), 1])
        assert companion(f) == [[a]]
        assert a_matrix(f) == [[L.norm(a, 1)]]
    R3 = SkewRing(field_create(2, 3), 1, 3)
    g = SkewPoly(R3, [5, 0, 0, 1])
    assert companion(g) == [[0, 0, 5], [1, 0, 0], [0, 1, 0]]
    with pytest.raises(ValueError):
        companion(SkewPoly(R3, [1, 2]))


def test_a_matrix_is_x_to_the_n(r4):
    rng = random.Random(3)
    L = r4.field
    for _ in range(100):
        s = rng.randint(1, 4)
        f = SkewPoly(r4, [rng.randrange(4) for _ in range(s)] + [1])
        v = [rng.randrange(4) for _ in range(s)]
        A = a_matrix(f)
        got = [0] * s
        for i in range(s):
            for j in range(s):
                got[i] = L.add(got[i], L.mul(A[i][j], r4.sigma(v[j], r4.n)))
        want = right_divmod(r4.x(r4.n) * SkewPoly(r4, v), f)[1]
        assert got == [want[i] for i in range(s)]


def test_mclm_examples(r9):
    L = r9.field
    for beta in range(L.size):
        f = SkewPoly(r9, [L.neg(beta), 0, 1])
        sb = r9.sigma(beta)
        F = mclm(f)
        if L.in_subfield(beta, 1):
            assert F.coeffs == (L.neg(beta), 1)
        else:
            assert F.coeffs == (L.mul(beta, sb), L.neg(L.add(beta, sb)), 1)
    for a in range(L.size):
        assert mclm(SkewPoly(r9, [L.neg(a), 1])).coeffs == (L.neg(L.norm(a, 1)), 1)
    F = least_irreducible_kpoly(L, 1, 2)
    assert mclm(central_expand(r9, F)) == F


@pytest.mark.parametrize("ring", ["r4", "r9"])
def test_mclm_oracles_agree(ring, request):
    R = request.getfixturevalue(ring)
    for d in range(0, 3):
        for f in R.polys_of_degree(d):
            F = list(mclm(f).coeffs)
            assert F == mclm_enumerate(f) == mclm_linear_system(f)
            assert not right_divmod(central_expand(R, mclm(f)), f)[1]


def test_mclm_degree_three_over_f8():
    R = SkewRing(field_create(2, 3), 1, 3)
    rng = random.Random(5)
    for _ in range(60):
        f = SkewPoly(R, [rng.randrange(8) for _ in range(3)] + [1])
        assert list(mclm(f).coeffs) == mclm_linear_system(f)


def test_irreducibility_against_bruteforce(r4, r9):
    for R, top in ((r4, 3), (r9, 2)):
        for d in range(1, top + 1):
            for f in R.polys_of_degree(d):
                assert is_irreducible_skew(f) == is_irreducible_bruteforce(f)
    L = r9.field
    assert is_irreducible_skew(SkewPoly(r9, [L.neg(3), 0, 1]))
    assert not is_irreducible_skew(SkewPoly(r9, [L.neg(2), 0, 1]))


def test_factor_degree_invariance_f4(r4):
    for d in (2, 3):
        for f in r4.polys_of_degree(d):
            degs = {tuple(sorted(fac)) for fac in factorizations(f)}
            assert len(degs) == 1


def test_central_expand(r9):
    L = r9.field
    F = KPoly(L, [L.neg(1), 1], 1)
    assert central_expand(r9, F) == SkewPoly(r9, [L.neg(1), 0, 1])
    G = KPoly(L, [2, 1, 1], 1)
    Gx = central_expand(r9, G)
    assert Gx == SkewPoly(r9, [2, 0, 1, 0, 1])
    rng = random.Random(1)
    for _ in range(100):
        g = rand_poly(r9, rng, 5)
        assert Gx * g == g * Gx


def test_find_irreducible_divisor_quadratic(r9):
    L = r9.field
    F = least_irreducible_kpoly(L, 1, 2)
    f = find_irreducible_divisor(r9, F)
    beta = L.neg(f[0])
    assert f == SkewPoly(r9, [f[0], 0, 1])
    # beta is a root of F
    assert L.add(L.add(L.mul(beta, beta), L.mul(F[1], beta)), F[0]) == 0
    assert is_irreducible_skew(f)
    assert not right_divmod(central_expand(r9, F), f)[1]


def test_find_irreducible_divisor_cubic():
    for p in (2, 3):
        L = field_create(p, 3)
        R = SkewRing(L, 1, 3)
        F = least_irreducible_kpoly(L, 1, 3)
        f = find_irreducible_divisor(R, F)
        gamma = L.neg(f[0])
        assert f.coeffs[1:] == (0, 0, 1)
        conj = [gamma, R.sigma(gamma), R.sigma(gamma, 2)]
        assert len(set(conj)) == 3
        # F(y) = (y - g)(y - g^s)(y - g^s^2)
        assert list(mclm(f).coeffs) == list(F.coeffs)


def test_find_irreducible_divisor_budget(r9):
    F = least_irreducible_kpoly(r9.field, 1, 2)
    with pytest.raises(BudgetExceeded) as exc:
        find_irreducible_divisor(r9, F, budget=1)
    assert exc.value.bound == 1


def test_divisor_degrees_are_multiples_of_s(r4):
    F = least_irreducible_kpoly(r4.field, 1, 2)
    Gx = central_expand(r4, F)
    for d in range(0, 5):
        found = list(monic_right_divisors(Gx, d))
        if d % 2:
            assert not found
        else:
            assert found


def test_text_roundtrip(r9):
    f = SkewPoly(r9, [1, 0, 5, 8])
    assert SkewPoly.from_text(r9, f.to_text()) == f
    assert r9.header() == "3,1,2,1"
    with pytest.raises(ValueError):
        SkewPoly.from_text(r9, "1,9")
