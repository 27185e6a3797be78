"""Worked-example spread sets and the predicted-parameter table.

Goldens are produced from the closed-form matrix displays (``display_ns2``,
``display_ns3``) and checked in; ``reproduce`` recomputes the same data from
the quotient-ring matrix representation and byte-compares.
"""

from __future__ import annotations

import difflib
import json
from importlib import resources
from pathlib import Path

from .codes import CodeSpec, code_element, predicted_exponents
from .gf import field_create, least_irreducible_kpoly, to_digits
from .quotient import QuotientRing
from .semifield import spread_matrices
from .skewpoly import SkewRing

EXAMPLES = ("ns2", "ns3", "table52")

# (p, n) and the (eta, rho_exp) pairs instantiated for each worked example
SETTINGS = {
    "ns2": {"p": 3, "n": 2, "configs": [(0, 0), (3, 0), (3, 1), (5, 1)]},
    "ns3": {"p": 2, "n": 3, "configs": [(0, 0), (2, 1), (6, 2)]},
}

PARAM_TABLE = [(3, 3, 1, 3), (6, 2, 1, 4), (8, 2, 1, 4), (6, 3, 1, 0)]


def display_ns2(L, sigma, a0, a1, eta, rho_exp, beta):
    """[[a0 + eta a0^rho beta, a1 beta], [a1^s, a0^s + (eta a0^rho)^s beta]]."""
    t = L.mul(eta, L.frob(a0, rho_exp))
    return [
        [L.add(a0, L.mul(t, beta)), L.mul(a1, beta)],
        [sigma(a1), L.add(sigma(a0), L.mul(sigma(t), beta))],
    ]


def display_ns3(L, sigma, g0, g1, g2, eta, rho_exp, gamma):
    """The 3x3 spread-set display for f = x^3 - gamma."""
    t = L.mul(eta, L.frob(g0, rho_exp))

    def s2(a):
        return sigma(sigma(a))

    return [
        [L.add(g0, L.mul(t, gamma)), L.mul(g2, gamma), L.mul(g1, gamma)],
        [s2(g1), L.add(s2(g0), L.mul(s2(t), gamma)), L.mul(s2(g2), gamma)],
        [sigma(g2), sigma(g1), L.add(sigma(g0), L.mul(sigma(t), gamma))],
    ]


def _quotient(p, n):
    L = field_create(p, n)
    ring = SkewRing(L, 1, n)
    F = least_irreducible_kpoly(L, 1, n)
    return QuotientRing(ring, F)


def _header(Q):
    return {
        "p": Q.field.p,
        "e": Q.ring.e,
        "n": Q.n,
        "s": Q.s,
        "modulus": list(Q.field.modulus),
        "F": list(Q.F.coeffs),
        "f": list(Q.divisor.coeffs),
        "theta": Q.root_of_divisor(),
    }


def _spread_data(example, source):
    cfg = SETTINGS[example]
    Q = _quotient(cfg["p"], cfg["n"])
    L, ring = Q.field, Q.ring
    theta = Q.root_of_divisor()
    n = Q.n
    out = {"example": example, "header": _header(Q), "configs": []}
    for eta, rho in cfg["configs"]:
        spec = CodeSpec(Q, 1, eta, rho)
        if source == "display":
            mats = []
            for idx in range(L.size**n):
                a = to_digits(idx, L.size, n)
                if n == 2:
                    mats.append(display_ns2(L, ring.sigma, *a, eta, rho, theta))
                else:
                    mats.append(display_ns3(L, ring.sigma, *a, eta, rho, theta))
        else:
            mats = [m.evaluated(theta) for m in spread_matrices(spec)]
        out["configs"].append({"eta": eta, "rho_exp": rho, "matrices": mats})
    if example == "ns3":
        if source == "display":
            out["M_x"] = [[0, 0, theta], [1, 0, 0], [0, 1, 0]]
        else:
            basis = [ring.x(i) for i in range(n)]
            x = code_element(CodeSpec(Q, 1), [0, 1, 0])
            out["M_x"] = Q.matrix_rep(x, basis).evaluated(theta)
    return out


def render_params(exps) -> str:
    def one(x, braces):
        if x == 1 and not braces:
            return "q"
        if braces or x > 9:
            return f"q^{{{x}}}"
        return f"q^{x}"

    return "(" + ",".join(one(x, i == 0) for i, x in enumerate(exps)) + ")"


def parameter_table_rows():
    rows = []
    for n, s, e, i in PARAM_TABLE:
        exps = predicted_exponents(n, s, e, 1, i, e, eta_zero=False)
        rows.append([f"({n},{s},{e},{i})", render_params(exps)])
    return rows


def compute(example: str) -> dict:
    if example == "table52":
        return {"example": "table52", "rows": parameter_table_rows()}
    if example not in SETTINGS:
        raise ValueError(f"unknown example {example!r}; choose from {EXAMPLES}")
    return _spread_data(example, "matrix")


def display_data(example: str) -> dict:
    """Golden content straight from the closed-form displays."""
    if example == "table52":
        # transcribed rows; the table is literal data, not a formula
        return {
            "example": "table52",
            "rows": [
                ["(3,3,1,3)", "(q^{9},q^3,q^3,q^3,q)"],
                ["(6,2,1,4)", "(q^{12},q^2,q^2,q^2,q)"],
                ["(8,2,1,4)", "(q^{16},q^4,q^2,q^2,q)"],
                ["(6,3,1,0)", "(q^{18},q^6,q^3,q^3,q)"],
            ],
        }
    return _spread_data(example, "display")


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def golden_text(example: str) -> str:
    return resources.files("skewmrd").joinpath("golden", f"{example}.json").read_text()


def freeze(directory: Path) -> None:
    """Write golden files from the displays (maintenance helper)."""
    directory.mkdir(parents=True, exist_ok=True)
    for ex in EXAMPLES:
        (directory / f"{ex}.json").write_text(dumps(display_data(ex)))


def reproduce(example: str):
    """(matches, computed_text, diff_text)."""
    got = dumps(compute(example))
    want = golden_text(example)
    if got == want:
        return True, got, ""
    diff = "".join(
        difflib.unified_diff(
            want.splitlines(True), got.splitlines(True), f"golden/{example}.json", "computed"
        )
    )
    return False, got, diff
