import re
from fractions import Fraction

import pytest

import opspec


def gaussian(text):
    """Parse 'p/q', 'p/q+r/s i' or 'p/q-r/s i' into a complex pair of Fractions."""
    m = re.fullmatch(r"\s*(-?[0-9/]+)\s*(?:([+-])\s*([0-9/]+)\s*i)?\s*", str(text))
    assert m, text
    im = Fraction(m.group(3)) if m.group(3) else Fraction(0)
    return Fraction(m.group(1)), (-im if m.group(2) == "-" else im)


def to_matrix(j):
    return [[gaussian(x) for x in row] for row in j["entries"]]


def mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = [[(Fraction(0), Fraction(0)) for _ in range(p)] for _ in range(n)]
    for i in range(n):
        for k in range(m):
            ar, ai = a[i][k]
            if ar == 0 and ai == 0:
                continue
            for j in range(p):
                br, bi = b[k][j]
                cr, ci = out[i][j]
                out[i][j] = (cr + ar * br - ai * bi, ci + ar * bi + ai * br)
    return out


def power(a, r):
    n = len(a)
    out = [[(Fraction(int(i == j)), Fraction(0)) for j in range(n)] for i in range(n)]
    for _ in range(r):
        out = mul(out, a)
    return out


def test_parse_and_print_round_trip():
    for name, text in opspec.instances():
        e = opspec.parse(text)
        assert str(opspec.parse(str(e))) == str(e)
        assert opspec.expr_from_json(e.to_json()) == e


def test_index_cancellation_spectra():
    e = "shift(const(1)) (+) adj(shift(const(1)))"
    w, b = opspec.spectrum(e, "w"), opspec.spectrum(e, "b")
    assert w.subset(b) and not b.subset(w)
    assert opspec.Region.from_json(w.to_json()) == w
    report = opspec.check("browder", e)
    assert [s["value"] for s in report["sides"]] == [False, False]
    assert report["verdict"] == "consistent"


def test_harmonic_drazin_spectra():
    assert opspec.spectrum("diag(harmonic)", "gDM").empty()
    assert str(opspec.spectrum("diag(harmonic)", "gD")) == str(opspec.Region.from_json(
        '[{"kind":"points","points":[{"re":"0","im":"0"}]}]'))


def test_errors_carry_codes():
    with pytest.raises(opspec.OpspecError) as info:
        opspec.parse("jordan(0,")
    assert info.value.args[0] == "syntax-error"
    with pytest.raises(opspec.OpspecError) as info:
        opspec.spectrum("jordan(0, 1)", "kato")
    assert info.value.args[0] == "unknown-spectrum"


def test_drazin_axioms_checked_in_python():
    a_json = {"rows": 3, "cols": 3, "entries": [["1", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]]}
    cert = opspec.drazin(a_json)
    a, x, r = to_matrix(a_json), to_matrix(cert["inverse"]), cert["index"]
    assert mul(a, x) == mul(x, a)
    assert mul(mul(x, a), x) == x
    assert mul(power(a, r + 1), x) == power(a, r)
    assert all(cert["axioms"].values())


def test_cline_identity_in_python():
    for k in (1, 2, 3):
        rep = opspec.cline(k, "mixed" if k > 1 else "solve_k1", 11)
        a, b = to_matrix(rep["a"]), to_matrix(rep["b"])
        assert mul(mul(power(a, k), power(b, k)), power(a, k)) == power(a, k + 1)
        assert rep["forward"]["ok"] and rep["converse"]["ok"]


def test_sweep_and_audit():
    reports = opspec.sweep()
    assert len(reports) == len(opspec.theorem_ids()) * len(opspec.instances())
    assert all(r["verdict"] == "consistent" for r in reports)
    assert all(c["holds"] for c in opspec.audit("shift(const(1))"))


def test_transfer_and_svg():
    t = opspec.transfer("diag(harmonic)", "diag(list[1^inf])", 1)
    assert t["holds"] and t["a_meromorphic"]
    layers = opspec.spectra("shift(const(1)) (+) adj(shift(const(1)))", ["w", "b"])
    svg = opspec.render_svg(layers)
    assert svg == opspec.render_svg(layers)
    assert svg.startswith("<svg")
