"""File grammar round trips and diagnostics."""

import pytest

import hrlq
from helpers import instance_a

IA = instance_a()

IA_TEXT = """\
resident r1: h1 h2
resident r2: h1
hospital h1 [1,1]: r1 r2
hospital h2 [1,1]: r1
"""


class TestInstanceFormat:
    def test_serialize_canonical(self):
        assert hrlq.serialize_instance(IA) == IA_TEXT

    def test_round_trip(self):
        assert hrlq.parse_instance(hrlq.serialize_instance(IA)) == IA

    def test_round_trip_is_byte_stable(self):
        text = hrlq.serialize_instance(IA)
        assert hrlq.serialize_instance(hrlq.parse_instance(text)) == text

    def test_comments_and_blank_lines_ignored(self):
        text = "# instance\n\n" + IA_TEXT.replace("resident r2", "resident r2", 1)
        assert hrlq.parse_instance(text) == IA

    def test_empty_preference_list(self):
        text = "resident r:\nhospital h [0,1]:\n"
        inst = hrlq.parse_instance(text)
        assert inst.resident_prefs["r"] == ()
        assert hrlq.serialize_instance(inst) == text

    def test_quota_inversion_flagged_with_line(self):
        with pytest.raises(hrlq.ParseError, match="line 2: quota inversion"):
            hrlq.parse_instance("resident r: h\nhospital h [2,1]: r\n")

    def test_undeclared_hospital(self):
        with pytest.raises(hrlq.ParseError, match="undeclared hospital ghost"):
            hrlq.parse_instance("resident r: ghost\n")

    def test_duplicate_preference_entry(self):
        with pytest.raises(hrlq.ParseError, match="duplicate preference entry h"):
            hrlq.parse_instance("resident r: h h\nhospital h [0,1]: r\n")

    def test_malformed_quota_token(self):
        with pytest.raises(hrlq.ParseError, match="malformed quota token"):
            hrlq.parse_instance("hospital h [1;2]: r\n")

    def test_redeclaration(self):
        with pytest.raises(hrlq.ParseError, match="already declared on line 1"):
            hrlq.parse_instance("resident r: \nresident r:\n")

    def test_one_sided_lists_rejected(self):
        text = "resident r: h\nresident q: h\nhospital h [0,1]: r\n"
        with pytest.raises(hrlq.InvalidInstanceError, match="one-sided"):
            hrlq.parse_instance(text)

    def test_generated_instance_round_trip(self):
        tri = hrlq.SourceGraph(3, [(1, 2), (1, 3), (2, 3)], k=2)
        inst = hrlq.vc_to_min_ep(tri, hrlq.VCReductionParams(10))
        text = hrlq.serialize_instance(inst)
        assert hrlq.parse_instance(text) == inst
        assert hrlq.serialize_instance(hrlq.parse_instance(text)) == text


class TestGraphFormat:
    def test_triangle(self):
        graph = hrlq.parse_graph("p 3 3\ne 1 2\ne 1 3\ne 2 3\n")
        assert graph.n == 3
        assert graph.edges == ((1, 2), (1, 3), (2, 3))
        assert graph.k == 0

    def test_round_trip(self):
        text = "p 4 2\ne 1 2\ne 3 4\n"
        assert hrlq.serialize_graph(hrlq.parse_graph(text)) == text

    def test_header_count_mismatch(self):
        with pytest.raises(hrlq.ParseError, match="declares 3 edges but 1"):
            hrlq.parse_graph("p 3 3\ne 1 2\n")

    def test_edge_order_enforced(self):
        with pytest.raises(hrlq.ParseError, match=r"line 2: edge \(2,1\)"):
            hrlq.parse_graph("p 3 1\ne 2 1\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(hrlq.ParseError, match=r"edge \(1,9\)"):
            hrlq.parse_graph("p 3 1\ne 1 9\n")

    def test_duplicate_edge(self):
        with pytest.raises(hrlq.ParseError, match="duplicate edge"):
            hrlq.parse_graph("p 3 2\ne 1 2\ne 1 2\n")

    def test_missing_header(self):
        with pytest.raises(hrlq.ParseError, match="edge before the p header"):
            hrlq.parse_graph("e 1 2\n")


class TestMatchingFormat:
    def test_parse_and_serialize(self):
        m = hrlq.parse_matching("match r2 h1\nmatch r1 h2\n", IA)
        assert m.assignment == {"r1": "h2", "r2": "h1"}
        assert hrlq.serialize_matching(IA, m) == "match r1 h2\nmatch r2 h1\n"

    def test_unmatched_residents_omitted(self):
        m = hrlq.parse_matching("match r1 h1\n", IA)
        assert m.hospital_of("r2") is None

    def test_duplicate_resident(self):
        with pytest.raises(hrlq.ParseError, match="more than once"):
            hrlq.parse_matching("match r1 h1\nmatch r1 h2\n", IA)

    def test_unacceptable_pair(self):
        with pytest.raises(hrlq.ParseError, match=r"unacceptable pair \(r2,h2\)"):
            hrlq.parse_matching("match r2 h2\n", IA)

    def test_unknown_resident(self):
        with pytest.raises(hrlq.ParseError, match="unknown resident"):
            hrlq.parse_matching("match zz h1\n", IA)

    def test_empty_matching_serializes_empty(self):
        assert hrlq.serialize_matching(IA, hrlq.EMPTY_MATCHING) == ""
