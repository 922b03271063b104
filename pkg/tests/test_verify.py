import pytest

from afprefs import (
    ArgumentationFramework,
    DefenderPolicy,
    Semantics,
    UnknownArgumentError,
    VerifyMethod,
    apply_removal,
    apply_reversal,
    compute_all,
    parse_pref_set,
    verify_collection,
    verify_set,
)
from afprefs.verify import SemanticsScopeError

GOLDEN_PREFS = ["C>D", "A>B", "C>B", "E>D"]


class TestApplyRemoval:
    def test_golden_prefs(self, aaf1):
        out = apply_removal(aaf1, parse_pref_set(GOLDEN_PREFS))
        assert out.attacks == {("A", "B"), ("C", "B"), ("C", "D")}

    def test_empty_prefs_identity(self, aaf1):
        assert apply_removal(aaf1, frozenset()) == aaf1

    def test_equalities_ignored(self, aaf1):
        assert apply_removal(aaf1, parse_pref_set(["A=B", "E=D"])) == aaf1

    def test_never_adds_attacks(self, aaf1):
        out = apply_removal(aaf1, parse_pref_set(["B>A", "D>C"]))
        assert out.attacks <= aaf1.attacks

    def test_idempotent(self, aaf1):
        prefs = parse_pref_set(GOLDEN_PREFS)
        once = apply_removal(aaf1, prefs)
        assert apply_removal(once, prefs) == once

    def test_unknown_argument(self, aaf1):
        with pytest.raises(UnknownArgumentError):
            apply_removal(aaf1, parse_pref_set(["Z>A"]))


class TestApplyReversal:
    def test_golden_prefs(self, aaf1):
        out = apply_reversal(aaf1, parse_pref_set(GOLDEN_PREFS))
        assert out.attacks == {("A", "B"), ("C", "B"), ("C", "D"), ("E", "D")}

    def test_empty_prefs_identity(self, aaf1):
        assert apply_reversal(aaf1, frozenset()) == aaf1

    def test_equalities_ignored(self, aaf1):
        assert apply_reversal(aaf1, parse_pref_set(["A=B", "E=D"])) == aaf1

    def test_two_cycle_merges(self):
        af = ArgumentationFramework.of("xy", [("x", "y"), ("y", "x")])
        out = apply_reversal(af, parse_pref_set(["x>y"]))
        assert out.attacks == {("x", "y")}

    def test_preserves_affected_unordered_pairs(self, aaf1):
        out = apply_reversal(aaf1, parse_pref_set(GOLDEN_PREFS))
        before = {frozenset(p) for p in aaf1.attacks}
        after = {frozenset(p) for p in out.attacks}
        assert after == before


class TestVerifySet:
    def test_golden_removal(self, aaf1):
        assert verify_set(
            aaf1,
            {"A", "C", "E"},
            Semantics.PREFERRED,
            parse_pref_set(GOLDEN_PREFS),
            VerifyMethod.REMOVAL,
        )

    def test_golden_reversal(self, aaf1):
        assert verify_set(
            aaf1,
            {"A", "C", "E"},
            Semantics.PREFERRED,
            parse_pref_set(GOLDEN_PREFS),
            VerifyMethod.REVERSAL,
        )

    def test_wrong_extension_fails(self, aaf1):
        # These preferences drive the framework toward {A,D}.
        assert not verify_set(
            aaf1,
            {"A", "C", "E"},
            Semantics.PREFERRED,
            parse_pref_set(["D>C", "A>B", "D>E"]),
            VerifyMethod.REMOVAL,
        )

    def test_out_of_scope_semantics(self, aaf1):
        with pytest.raises(SemanticsScopeError):
            verify_set(
                aaf1,
                {"A"},
                Semantics.COMPLETE,
                frozenset(),
                VerifyMethod.REMOVAL,
            )


class TestVerifyCollection:
    def test_golden_ace_collection_passes(self, aaf1):
        coll = compute_all(aaf1, {"A", "C", "E"}, DefenderPolicy.ANY_DEFENDER)
        report = verify_collection(
            aaf1, {"A", "C", "E"}, Semantics.PREFERRED, coll, VerifyMethod.REMOVAL
        )
        assert report.vcheck
        assert (report.total, report.passed) == (12, 12)
        assert report.failures == ()

    def test_ad_collection_reversal(self, aaf1):
        coll = compute_all(aaf1, {"A", "D"}, DefenderPolicy.UNATTACKED)
        report = verify_collection(
            aaf1, {"A", "D"}, Semantics.PREFERRED, coll, VerifyMethod.REVERSAL
        )
        assert report.vcheck and report.total == 4

    def test_empty_collection_vacuously_true(self, aaf1):
        report = verify_collection(
            aaf1, {"A"}, Semantics.GROUNDED, frozenset(), VerifyMethod.REMOVAL
        )
        assert report.vcheck and report.total == 0

    def test_failure_report(self, aaf1, caplog):
        coll = frozenset({parse_pref_set(["D>C", "A>B", "D>E"])})
        report = verify_collection(
            aaf1, {"A", "C", "E"}, Semantics.PREFERRED, coll, VerifyMethod.REMOVAL
        )
        assert not report.vcheck
        assert len(report.failures) == 1
        data = report.to_json()
        assert data["vcheck"] is False
        assert data["failures"][0]["extensions"] == [["A", "D"]]

    def test_json_shape(self, aaf1):
        coll = compute_all(aaf1, {"A", "C", "E"}, DefenderPolicy.ANY_DEFENDER)
        report = verify_collection(
            aaf1, {"A", "C", "E"}, Semantics.PREFERRED, coll, VerifyMethod.REMOVAL
        )
        assert report.to_json() == {
            "vcheck": True,
            "total": 12,
            "passed": 12,
            "failures": [],
        }
