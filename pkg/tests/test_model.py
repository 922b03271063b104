import pytest
from hypothesis import given

from afprefs import (
    ArgumentationFramework,
    ParseError,
    UnknownArgumentError,
    parse_apx,
    parse_tgf,
    serialize,
)

from conftest import AAF1_ATTACKS, frameworks


class TestParseApx:
    def test_smallest_input(self):
        af = parse_apx("arg(a).\narg(b).\natt(a,b).")
        assert af.arguments == {"a", "b"}
        assert af.attacks == {("a", "b")}

    def test_running_example_encoding(self, aaf1):
        text = (
            "arg(A).\narg(B).\narg(C).\narg(D).\narg(E).\n"
            "att(A,B).\natt(C,B).\natt(C,D).\natt(D,C).\natt(D,E)."
        )
        assert parse_apx(text) == aaf1

    def test_undeclared_argument(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_apx("att(a,b).")

    def test_duplicate_arg_idempotent(self):
        af = parse_apx("arg(a).\narg(a).")
        assert af.arguments == {"a"}

    def test_duplicate_attack_collapses(self):
        af = parse_apx("arg(a).\narg(b).\natt(a,b).\natt(a,b).")
        assert len(af.attacks) == 1

    def test_comments_and_blank_lines(self):
        af = parse_apx("% header\narg(a).  % trailing\n\narg(b).\natt(a, b).")
        assert af.attacks == {("a", "b")}

    def test_syntax_error_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_apx("arg(a).\nbogus line")
        assert exc.value.line == 2

    def test_attack_may_precede_declaration(self):
        af = parse_apx("att(a,b).\narg(a).\narg(b).")
        assert af.attacks == {("a", "b")}


class TestParseTgf:
    def test_smallest_input(self):
        af = parse_tgf("a\nb\n#\na b")
        assert af.arguments == {"a", "b"}
        assert af.attacks == {("a", "b")}

    def test_no_edges(self):
        af = parse_tgf("a\n#\n")
        assert af == ArgumentationFramework.of(["a"])

    def test_missing_separator(self):
        with pytest.raises(ParseError, match="separator"):
            parse_tgf("a\nb\n")

    def test_undeclared_endpoint(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_tgf("a\n#\na b")


class TestSerialize:
    def test_single_argument_apx(self):
        assert serialize(ArgumentationFramework.of(["a"]), "apx") == "arg(a).\n"

    def test_running_example_canonical_order(self, aaf1):
        lines = serialize(aaf1, "apx").splitlines()
        assert lines[:5] == [f"arg({a})." for a in "ABCDE"]
        assert lines[5:] == [
            f"att({s},{d})." for s, d in sorted(AAF1_ATTACKS)
        ]

    def test_unknown_format(self, aaf1):
        with pytest.raises(ValueError):
            serialize(aaf1, "gml")

    @given(frameworks())
    def test_roundtrip_apx(self, af):
        assert parse_apx(serialize(af, "apx")) == af

    @given(frameworks())
    def test_roundtrip_tgf(self, af):
        assert parse_tgf(serialize(af, "tgf")) == af


class TestAccessors:
    def test_attackers_of(self, aaf1):
        assert aaf1.attackers_of("B") == {"A", "C"}
        assert aaf1.attackers_of("A") == frozenset()

    def test_attackers_of_self_attack(self):
        af = ArgumentationFramework.of(["x"], [("x", "x")])
        assert af.attackers_of("x") == {"x"}

    def test_attacked_by(self, aaf1):
        assert aaf1.attacked_by("D") == {"C", "E"}
        assert aaf1.attacked_by("E") == frozenset()

    def test_unknown_argument(self):
        empty = ArgumentationFramework.of([])
        with pytest.raises(UnknownArgumentError):
            empty.attacked_by("a")
        with pytest.raises(UnknownArgumentError):
            empty.attackers_of("a")

    @given(frameworks())
    def test_attackers_attacked_are_transposes(self, af):
        for a in af.arguments:
            for b in af.attackers_of(a):
                assert a in af.attacked_by(b)
            for b in af.attacked_by(a):
                assert a in af.attackers_of(b)


class TestConflictFree:
    def test_running_example_cases(self, aaf1):
        assert aaf1.is_conflict_free({"A", "C", "E"})
        assert not aaf1.is_conflict_free({"C", "D"})
        assert aaf1.is_conflict_free(set())

    def test_member_not_in_framework(self, aaf1):
        with pytest.raises(UnknownArgumentError):
            aaf1.is_conflict_free({"Z"})

    @given(frameworks())
    def test_monotone_under_subset(self, af):
        for a in af.arguments:
            s = frozenset(af.arguments) - {a}
            if af.is_conflict_free(s):
                for b in s:
                    assert af.is_conflict_free(s - {b})


def test_attack_endpoints_validated():
    with pytest.raises(UnknownArgumentError):
        ArgumentationFramework.of(["a"], [("a", "b")])


def test_invalid_argument_name():
    with pytest.raises(ValueError):
        ArgumentationFramework.of(["not ok"])
