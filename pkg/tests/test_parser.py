import pytest

from rbac_sev import (
    PolicyError,
    PolicySyntaxError,
    PolicyValidationError,
    diagnose,
    parse,
    serialize,
    validate,
)
from conftest import generated_policies, tree_from


def codes(diags):
    return [d.code for d in diags]


class TestParse:
    def test_minimal(self):
        doc = parse("edge r1 r2\nassign r2 p1 p2")
        assert len(doc.edges) == 1
        assert (doc.edges[0].parent, doc.edges[0].child) == ("r1", "r2")
        assert doc.assignments[0].leaf == "r2"
        assert doc.assignments[0].perms == ("p1", "p2")

    def test_empty_input(self):
        doc = parse("")
        assert doc.edges == () and doc.assignments == ()

    def test_comments_and_blanks(self):
        doc = parse("# note\n\nedge r1 r2\n   # indented comment\n")
        assert len(doc.edges) == 1 and not doc.assignments

    def test_crlf_accepted(self):
        doc = parse("edge r1 r2\r\nassign r2 p1\r\n")
        assert doc.edges[0].child == "r2"
        assert doc.assignments[0].perms == ("p1",)

    def test_tabs_as_separators(self):
        doc = parse("edge\tr1\tr2\nassign r2\t p1")
        assert doc.edges[0].parent == "r1"

    def test_line_numbers_recorded(self):
        doc = parse("# c\nedge r1 r2\n\nassign r2 p1")
        assert doc.edges[0].line == 2
        assert doc.assignments[0].line == 4

    def test_duplicate_perm_in_one_directive_collapses(self):
        doc = parse("assign r1 p1 p2 p1")
        assert doc.assignments[0].perms == ("p1", "p2")

    @pytest.mark.parametrize("text, bad_line", [
        ("grant r1 p1", 1),
        ("edge r1", 1),
        ("edge r1 r2 r3", 1),
        ("assign r1", 1),
        ("edge r1 r2\nassign r2 p#1", 2),
        ("edge r1 r@2", 1),
        ("edge r1 r2 # trailing comment", 1),
    ])
    def test_syntax_errors(self, text, bad_line):
        with pytest.raises(PolicySyntaxError) as exc:
            parse(text)
        diag = exc.value.diagnostics[0]
        assert diag.code == "syntax"
        assert diag.line == bad_line

    def test_all_syntax_errors_reported(self):
        with pytest.raises(PolicySyntaxError) as exc:
            parse("bogus\nedge r1 r2\nbogus again")
        assert [d.line for d in exc.value.diagnostics] == [1, 3]


class TestValidate:
    def test_golden(self, golden_tree):
        assert len(golden_tree.roles) == 11
        assert golden_tree.root == "r1"
        assert golden_tree.children_of["r1"] == ("r2", "r3", "r4")
        assert golden_tree.direct_perms["r5"] == ("p1", "p2", "p3")

    def test_two_cycle(self):
        with pytest.raises(PolicyValidationError) as exc:
            validate(parse("edge a b\nedge b a"))
        assert "cycle" in codes(exc.value.diagnostics)

    def test_cycle_line_number(self):
        diags = diagnose(parse("edge a b\nedge b a"))
        cycle = next(d for d in diags if d.code == "cycle")
        assert cycle.line == 2

    def test_multi_parent(self):
        diags = diagnose(parse("edge r1 r2\nedge r3 r2\nassign r2 p1"))
        found = next(d for d in diags if d.code == "multi-parent")
        assert found.line == 2

    def test_multi_root(self):
        diags = diagnose(parse("edge a b\nedge c d\nassign b p1\nassign d p2"))
        found = next(d for d in diags if d.code == "multi-root")
        assert found.line == 2

    def test_no_root_on_empty_policy(self):
        assert codes(diagnose(parse(""))) == ["no-root"]

    def test_assign_internal(self):
        diags = diagnose(parse("edge a b\nassign a p1\nassign b p2"))
        found = next(d for d in diags if d.code == "assign-internal")
        assert found.line == 2

    def test_leaf_no_perms(self):
        diags = diagnose(parse("edge a b"))
        found = next(d for d in diags if d.code == "leaf-no-perms")
        assert found.line == 1

    def test_unknown_role(self):
        diags = diagnose(parse("edge a b\nassign b p1\nassign c p2"))
        found = next(d for d in diags if d.code == "unknown-role")
        assert found.line == 3

    def test_duplicate_assign_merges(self):
        text = "edge a b\nassign b p1\nassign b p2 p1"
        diags = diagnose(parse(text))
        assert codes(diags) == ["duplicate-assign"]
        assert diags[0].severity == "warning"
        tree = validate(parse(text))  # warnings do not fail validation
        assert tree.direct_perms["b"] == ("p1", "p2")

    def test_duplicate_edge_ignored(self):
        tree = validate(parse("edge a b\nedge a b\nassign b p1"))
        assert tree.children_of["a"] == ("b",)

    def test_single_role_policy(self):
        tree = tree_from("assign solo p1 p2")
        assert tree.root == "solo"
        assert tree.roles == ("solo",)
        assert tree.direct_perms["solo"] == ("p1", "p2")

    def test_two_isolated_roles_is_multi_root(self):
        diags = diagnose(parse("assign a p1\nassign b p2"))
        assert "multi-root" in codes(diags)

    def test_all_problems_reported_at_once(self):
        text = "edge a b\nedge c b\nassign z p1"
        found = codes(diagnose(parse(text)))
        assert "multi-parent" in found
        assert "multi-root" in found
        assert "unknown-role" in found
        assert "leaf-no-perms" in found  # b never gets permissions

    def test_diagnostics_deterministic(self):
        text = "edge a b\nedge b a\nassign q p1"
        first = diagnose(parse(text))
        second = diagnose(parse(text))
        assert first == second


class TestSerialize:
    def test_single_leaf_root(self):
        assert serialize(tree_from("assign r1 p1")) == "assign r1 p1\n"

    def test_chain(self):
        text = "edge r1 r2\nassign r2 p1\n"
        assert serialize(tree_from(text)) == text

    def test_golden_is_canonical_fixpoint(self, golden_text):
        tree = tree_from(golden_text)
        once = serialize(tree)
        assert once == golden_text
        assert serialize(tree_from(once)) == once

    def test_round_trip_identity_generated(self):
        for text in generated_policies(40):
            tree = tree_from(text)
            again = tree_from(serialize(tree))
            assert again == tree
            assert serialize(again) == serialize(tree)


class TestRobustness:
    ADVERSARIAL = [
        "\x00\x01\x02",
        "edge",
        "assign",
        "edge тест x",
        "x" * 100000,
        "edge a b\n" * 5000,
        "#",
        " \t \n\t",
        "edge a a",
        "-",
    ]

    @pytest.mark.parametrize("text", ADVERSARIAL)
    def test_never_crashes(self, text):
        try:
            validate(parse(text))
        except PolicyError:
            pass  # any structured failure is acceptable; crashes are not

    def test_self_edge_is_cycle(self):
        with pytest.raises(PolicyValidationError) as exc:
            validate(parse("edge a a"))
        assert "cycle" in codes(exc.value.diagnostics)

    def test_deep_chain_no_recursion_limit(self):
        n = 3000
        lines = [f"edge r{i} r{i + 1}" for i in range(1, n)]
        lines.append(f"assign r{n} p1")
        tree = tree_from("\n".join(lines))
        assert len(tree.roles) == n
        assert serialize(tree)  # also iterative
