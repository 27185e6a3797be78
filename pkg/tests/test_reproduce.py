import json

from skewmrd import reproduce
from skewmrd.gf import field_create


def test_goldens_match():
    for ex in reproduce.EXAMPLES:
        ok, _, diff = reproduce.reproduce(ex)
        assert ok, diff


def test_golden_files_sorted_and_frozen():
    for ex in reproduce.EXAMPLES:
        text = reproduce.golden_text(ex)
        assert text == reproduce.dumps(json.loads(text))
        assert text == reproduce.dumps(reproduce.display_data(ex))


def test_ns2_golden_covers_all_tuples():
    data = json.loads(reproduce.golden_text("ns2"))
    assert data["header"]["p"] == 3
    for cfg in data["configs"]:
        assert len(cfg["matrices"]) == 81


def test_ns3_golden_has_mx():
    data = json.loads(reproduce.golden_text("ns3"))
    g = data["header"]["theta"]
    assert data["M_x"] == [[0, 0, g], [1, 0, 0], [0, 1, 0]]
    assert all(len(c["matrices"]) == 512 for c in data["configs"])


def test_parameter_table_rows():
    rows = reproduce.parameter_table_rows()
    assert rows[0] == ["(3,3,1,3)", "(q^{9},q^3,q^3,q^3,q)"]
    assert rows[3] == ["(6,3,1,0)", "(q^{18},q^6,q^3,q^3,q)"]
    assert reproduce.render_params((12, 2, 2, 2, 1)) == "(q^{12},q^2,q^2,q^2,q)"


def test_literal_bottom_right_entry_differs():
    # eta^rho a0^(rho sigma) beta in place of (eta a0^rho)^sigma beta disagrees
    # with the matrix representation once rho != sigma and eta is outside K
    L = field_create(3, 2)
    data = json.loads(reproduce.golden_text("ns2"))
    beta = data["header"]["theta"]
    cfg = next(c for c in data["configs"] if c["eta"] == 3 and c["rho_exp"] == 0)
    mismatches = 0
    for idx, M in enumerate(cfg["matrices"]):
        a0 = idx % 9
        literal = L.add(L.frob(a0, 1), L.mul(L.mul(3, L.frob(a0, 1)), beta))
        mismatches += literal != M[1][1]
    assert mismatches > 0


def test_mismatch_produces_diff(monkeypatch):
    monkeypatch.setattr(reproduce, "golden_text", lambda ex: '{"rows": []}\n')
    ok, _, diff = reproduce.reproduce("table52")
    assert not ok and diff.startswith("---")
