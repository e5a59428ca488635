from z2ucodes.gf2poly import ZERO, parse_poly
from z2ucodes.codewords import CodeSpec
from z2ucodes.cli import search_doc
from z2ucodes.report import render_json, render_text, verify_report


def P(text):
    return parse_poly(text)


def _rows_by_check(doc):
    return {row["check"]: row for row in doc["rows"]}


class TestVerifyReport:
    def test_separable_spec_all_green(self):
        spec = CodeSpec(2, 3, 1, P("1+x"), ZERO, P("1+x"))
        doc = verify_report(spec)
        rows = _rows_by_check(doc)
        assert rows["separable dual formula reproduces the brute-force dual"]["status"] == "pass"
        assert rows["cardinality formula vs closure oracle"]["status"] == "pass"
        assert rows["type (k0, k1, k2)"]["status"] == "pass"
        assert doc["summary"]["finding"] == 0

    def test_statuses_are_typed_and_counted(self):
        spec = CodeSpec(2, 3, 1, P("1+x^2"), P("1+x"), P("1+x"))
        doc = verify_report(spec)
        allowed = {"pass", "finding", "skip", "info"}
        counts = {s: 0 for s in allowed}
        for row in doc["rows"]:
            assert row["status"] in allowed
            counts[row["status"]] += 1
        assert counts == doc["summary"]

    def test_invalid_spec_halts_early(self):
        spec = CodeSpec(2, 3, 1, P("1+x^2"), P("1"), P("1+x"))
        doc = verify_report(spec)
        assert doc["rows"][0]["status"] == "finding"
        assert doc["rows"][-1]["status"] == "skip"
        assert len(doc["rows"]) == 2

    def test_case3_degree_formula_finding_is_recorded(self):
        spec = CodeSpec(2, 6, 3, P("1+x^2"), ZERO, P("1+x^2+x^4"), P("1+x+x^2"))
        doc = verify_report(spec)
        row = _rows_by_check(doc)["dual degree formulas vs recovered generators"]
        assert row["status"] == "finding"
        assert "match=mismatch" in row["detail"]

    def test_degree_formula_match_is_a_pass(self):
        spec = CodeSpec(7, 7, 2, P("1+x^7"), P("1+x+x^2+x^4"), P("1+x"))
        doc = verify_report(spec)
        rows = _rows_by_check(doc)
        assert rows["dual degree formulas vs recovered generators"]["status"] == "pass"
        assert rows["Gray-route abar prediction"]["status"] == "pass"
        assert rows["Gray-route gbar prediction"]["status"] == "pass"
        assert rows["measured binary image parameters"]["detail"] == "[21,6,8]"

    def test_renderers_are_pure(self):
        spec = CodeSpec(1, 1, 2, P("1+x"), ZERO, P("1"))
        doc = verify_report(spec, seed=5)
        assert render_text(doc) == render_text(verify_report(spec, seed=5))
        assert render_json(doc) == render_json(verify_report(spec, seed=5))


class TestSearchDoc:
    def test_empty_range(self):
        doc = search_doc(0, 0, None, 1 << 20)
        assert doc["rows"] == []

    def test_contains_length_8_codes(self):
        doc = search_doc(2, 3, None, 1 << 20)
        assert any(r["n"] == 8 for r in doc["rows"])
