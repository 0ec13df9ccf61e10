"""The claim auditor: verdicts, witnesses, and report serialization."""

import json

import pytest

from rainbowgraph import GraphError, audit, claim_ids, ng_bounds, table1_report
from rainbowgraph import families
from rainbowgraph.audits import SWEEP_CLAIMS, format_table
from rainbowgraph.graph import _isomorphic, parse_graph6


def one(claim, **params):
    results = audit(claim, **params)
    assert len(results) == 1
    return results[0]


class TestFamilyAudits:
    @pytest.mark.parametrize(
        "claim,params",
        [
            ("PROP2.1a", {"n": 5}),
            ("PROP2.1b", {"n": 8}),
            ("PROP2.1b", {"n": 9}),
            ("PROP2.1c", {"n": 6}),
            ("PROP2.1d", {"n": 5}),
            ("PROP2.1d", {"n": 6}),
            ("PROP2.1e", {"parts": (2, 2, 2)}),
            ("PROP2.1f", {"n": 4}),
        ],
    )
    def test_confirmed(self, claim, params):
        assert one(claim, **params).verdict == "confirmed"


class TestLinePairAudits:
    @pytest.mark.parametrize(
        "claim,params",
        [
            ("PROP2.6a", {"n": 5}),
            ("PROP2.6b", {"n": 6}),
            ("PROP2.6b", {"n": 7}),
            ("PROP2.6c", {"n": 4}),
            ("PROP2.6e", {"n": 4}),
            ("PROP2.6d", {"n": 3}),
            ("PROP2.6d", {"n": 5}),
            ("PROP2.6d", {"n": 6}),
        ],
    )
    def test_confirmed(self, claim, params):
        assert one(claim, **params).verdict == "confirmed"

    def test_wheel_rim_four_refuted_both_readings(self):
        result = one("PROP2.6d", n=4)
        assert result.verdict == "refuted"
        assert result.computed["sum"] == 13 and result.computed["product"] == 40
        assert "order-reading" in result.witness

    def test_multipartite_formula_refuted_by_oracle(self):
        result = one("PROP2.6f", parts=(2, 2, 1))
        assert result.verdict == "refuted"
        assert result.expected["sum"] == 11 and result.expected["product"] == 30
        assert result.computed["sum"] == 13 and result.computed["product"] == 40


class TestOperationAudits:
    def test_join(self):
        result = one("THM2.5ii", g=families.cycle(5), h=families.path(3))
        assert result.verdict == "confirmed"
        assert result.expected["r"] == 6 and result.computed["r"] == 6

    def test_union_equal_chromatic(self):
        result = one("THM2.5i", g=families.cycle(5), h=families.cycle(7))
        assert result.verdict == "confirmed" and result.expected["relation"] == "eq"

    def test_union_unequal_chromatic(self):
        result = one("THM2.5i", g=families.path(2), h=families.cycle(5))
        assert result.verdict == "confirmed" and result.expected["relation"] == "lt"

    def test_k1_join(self):
        assert one("LEM2.3", g=families.cycle(5)).verdict == "confirmed"

    def test_chithra(self):
        for t in (1, 2, 3):
            assert one("THM2.4", g=families.cycle(4), t=t).verdict == "confirmed"

    def test_corona_join_branch(self):
        result = one("THM2.5iii", g=families.cycle(3), h=families.complete(2))
        assert result.verdict == "confirmed"
        assert result.expected["branch"] == "join" and result.computed["r"] == 9

    def test_corona_host_branch(self):
        result = one("THM2.5iii", g=families.complete(4), h=families.complete(1))
        assert result.verdict == "confirmed"
        assert result.expected["branch"] == "host-only" and result.computed["r"] == 4

    def test_corona_cap_skip(self):
        result = one("THM2.5iii", g=families.complete(4), h=families.complete(4))
        assert result.verdict == "skipped" and "cap" in result.reason

    def test_corona_chromatic(self):
        assert one("COR2.6", g=families.cycle(5), h=families.complete(2)).verdict == "confirmed"
        assert one("COR2.6", g=families.complete(5), h=families.complete(1)).verdict == "confirmed"

    def test_g_star(self):
        result = one("THM2.12", a=5, b=3)
        assert result.verdict == "confirmed"
        assert result.computed == {"r": 5, "chi": 3, "method": "oracle"}


class TestSweeps:
    def test_thm21_small(self):
        results = audit("THM2.1", order=5)
        assert results[0].verdict == "confirmed"
        assert results[0].computed["violations"] == 0

    def test_thm22_small(self):
        results = audit("THM2.2", order=5)
        assert results[0].verdict == "confirmed"

    def test_thm210_reports_paw(self):
        results = audit("THM2.10", order=4)
        assert results[0].verdict == "refuted"
        paw = families.thorn_cycle(3, 0, 1)
        instances = [r.instance[3:] for r in results[1:]]
        assert any(_isomorphic(parse_graph6(s), paw) for s in instances)

    def test_cor211_small(self):
        assert audit("COR2.11", order=4)[0].verdict == "confirmed"
        results = audit("COR2.11", order=5)
        assert results[0].verdict == "refuted"
        assert all(r.computed["chi"] == 4 for r in results[1:])

    def test_convmin_c9_instance(self):
        assert audit("CONVMIN", g=families.cycle(9))[0].verdict == "confirmed"

    def test_convmin_sweep_finds_counterexample(self):
        results = audit("CONVMIN", order=6)
        assert results[0].verdict == "refuted"
        assert results[0].computed["violations"] >= 1
        witness = results[1]
        assert witness.expected["r_conv"] > witness.computed["r_min"]
        assert "minimising partition" in witness.witness

    def test_thm27_completes_and_reports(self):
        results = audit("THM2.7", order=5)
        summary = results[0]
        assert summary.verdict in ("confirmed", "refuted")
        assert summary.computed["graphs"] > 0

    def test_cor28_refuted_by_paw(self):
        # r(L(G)) can exceed the bound: the paw's line graph is the diamond,
        # whose four vertices all yield while the bound is 1 * 3 = 3.
        results = audit("COR2.8", order=4)
        assert results[0].verdict == "refuted"
        paw = families.thorn_cycle(3, 0, 1)
        witnesses = {r.instance[3:]: r for r in results[1:]}
        hit = [s for s in witnesses if _isomorphic(parse_graph6(s), paw)]
        assert hit and witnesses[hit[0]].computed["r_line"] == 4
        assert witnesses[hit[0]].expected["bound"] == 3

    def test_cor29_petersen_refuted(self):
        results = audit("COR2.9", g=families.petersen())
        assert results[0].verdict == "refuted"
        assert results[1].expected["r_line"] == 15
        assert results[1].computed["r_line"] == 8

    def test_cor29_sweep(self):
        results = audit("COR2.9", order=5)
        assert results[0].verdict == "confirmed"  # K4 and K5 both attain size


class TestBoundAudits:
    def test_groups_on_petersen(self):
        g = families.petersen()
        for claim in ("NG1", "NG2", "NG3", "NG4"):
            assert audit(claim, g=g)[0].verdict == "confirmed"

    def test_sweeps(self):
        for claim in ("NG1", "NG2", "NG3"):
            results = audit(claim, order=4)
            assert results[0].verdict == "confirmed"
            assert results[0].computed["violations"] == 0

    def test_ng4_min_degree_variant_fails_on_isolated_vertices(self):
        # On edgeless graphs the domination premise behind the min-degree
        # variant is itself false, so the derived inequalities break.
        results = audit("NG4", order=4)
        assert results[0].verdict == "refuted"
        for witness in results[1:]:
            assert witness.expected["bound"].endswith("mindeg")
            g = parse_graph6(witness.instance[3:])
            assert g.size == 0

    def test_ng4_connected_instances_hold(self):
        for g in [families.path(4), families.cycle(5), families.wheel(5)]:
            assert audit("NG4", g=g)[0].verdict == "confirmed"

    def test_ng_report_shape(self):
        report = ng_bounds(families.petersen(), "ng1")
        assert report.all_hold and len(report.entries) == 4
        report = ng_bounds(families.path(3), "ng3")
        assert report.entries == ()  # not regular

    def test_unknown_group(self):
        with pytest.raises(GraphError):
            ng_bounds(families.path(2), "ng9")


class TestPetersenAudit:
    def test_values(self):
        result = one("PETERSEN")
        assert result.verdict == "confirmed"
        assert result.computed["r_conv"] == 9
        assert result.computed["r_min"] == 9
        assert result.computed["r_max"] == 9
        assert result.computed["size_vector"] == [4, 3, 3]


class TestTable1:
    def test_all_rows_present_and_formula_consistent(self):
        results = table1_report()
        assert len(results) == 19
        for result in results:
            nu, eps = result.computed["order"], result.computed["size"]
            assert result.computed["sum"] == nu + eps
            assert result.computed["product"] == nu * eps

    def test_only_inconsistent_row_is_refuted(self):
        results = table1_report()
        refuted = [r for r in results if r.verdict == "refuted"]
        assert [r.instance for r in refuted] == ["ellingham-horton-78"]
        assert refuted[0].computed["sum"] == 195
        assert refuted[0].computed["product"] == 9126

    def test_direct_rows(self):
        results = {r.instance: r for r in table1_report()}
        direct = [
            "cubical", "franklin", "heawood", "hoffman", "pappus",
            "nauru", "folkman", "f26a", "tutte-coxeter", "dyck",
        ]
        for name in direct:
            assert results[name].computed["direct"] == "confirmed", name
        assert results["foster"].computed["direct"] == "skipped"
        assert "above direct cap" in results["foster"].computed["direct_note"]
        assert results["horton"].computed["direct"] == "skipped"
        assert results["horton"].computed["parameters"] == "recorded-parameters"

    def test_single_row_claim(self):
        result = one("TABLE1:heawood")
        assert result.verdict == "confirmed"
        assert result.expected["sum"] == 35 and result.expected["product"] == 294

    def test_unknown_row(self):
        with pytest.raises(GraphError):
            audit("TABLE1:mystery")


class TestDispatchAndFormats:
    def test_unknown_claim(self):
        with pytest.raises(GraphError):
            audit("THM9.9")

    def test_missing_parameter(self):
        with pytest.raises(GraphError, match="missing parameter"):
            audit("THM2.5ii", g=families.path(2))

    def test_claim_ids_cover_sweeps(self):
        ids = claim_ids()
        for claim in SWEEP_CLAIMS:
            assert claim in ids
        assert "TABLE1:heawood" in ids

    def test_json_lines_parse_and_are_stable(self):
        results = audit("PROP2.1b", n=9) + table1_report()[:3]
        lines = [r.to_json_line() for r in results]
        for line in lines:
            record = json.loads(line)
            assert set(record) == {
                "claim", "instance", "expected", "computed", "verdict", "reason", "witness",
            }
        assert lines == [r.to_json_line() for r in results]

    def test_fraction_serialisation(self):
        result = one("PROP2.6f", parts=(2, 2, 1))
        record = json.loads(result.to_json_line())
        assert record["expected"]["sum"] == 11

    def test_format_table_layout(self):
        text = format_table(audit("PROP2.1a", n=3))
        lines = text.splitlines()
        assert lines[0].startswith("CLAIM")
        assert len(lines) == 2
