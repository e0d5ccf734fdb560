from conjcalc import core
from conjcalc.core.exceptions import TooLarge
from conjcalc.core.utils import make_rng
from conjcalc.families.rees import ReesSemigroup
from conjcalc.verify import suites
from conjcalc.verify.corpus import CorpusInstance
import pytest


@pytest.fixture
def small_corpus(mocker, s3_semigroup, min3):
    """Stand in for the full corpus with S3 and min(3)"""

    instances = (
        CorpusInstance("S3", "groups", s3_semigroup),
        CorpusInstance("min(3)", "small", min3),
    )
    return mocker.patch(
        "conjcalc.verify.suites.build_corpus", return_value=instances
    )


def test_within_budget() -> None:
    def too_large():
        raise TooLarge("order 600")

    assert suites.within_budget(too_large)() == (None, "skipped: order 600")
    assert suites.within_budget(lambda: (False, "x"))() == (False, "x")


def test_run_checks(caplog) -> None:
    def boom():
        raise RuntimeError("boom")

    def too_large():
        raise TooLarge("order 600")

    results = suites.run_checks(
        "demo",
        [
            ("fine", lambda: (True, "ok")),
            ("wrong", lambda: (False, "nope")),
            ("crash", boom),
            ("big", suites.within_budget(too_large)),
        ],
        threads=2,
        show_progress=False,
    )

    assert [r.status for r in results] == ["PASS", "FAIL", "FAIL", "SKIP"]
    assert [r.failed for r in results] == [False, True, True, False]
    assert not results[3].passed, "A skipped check is not a pass"
    assert results[2].detail == "raised an exception"
    assert "[demo] wrong failed: nope" in caplog.text
    assert results[0].to_dict() == {
        "suite": "demo",
        "name": "fine",
        "status": "PASS",
        "passed": True,
        "detail": "ok",
    }
    assert results[3].to_dict()["status"] == "SKIP"


def test_run_suites_sorts_results() -> None:
    demo = suites.Suite(
        "demo",
        "two checks in reverse order",
        lambda seed: [("z", lambda: (True, "")), ("a", lambda: (True, ""))],
    )

    results = suites.run_suites([demo], seed=0, show_progress=False)

    assert [r.name for r in results] == ["a", "z"]
    assert str(demo) == "demo"


def test_registry() -> None:
    assert len(suites.SUITES) == 11
    names = [suite.name for suite in suites.SUITES]
    assert len(set(names)) == len(names)
    assert "containment" in names and "least-comm" in names


def test_canonical_words() -> None:
    assert suites.canonical_words("ab", 3) == ["aaa", "aab", "aba", "abb"]


def test_least_comm_suite(small_corpus) -> None:
    results = suites.least_comm.run(seed=0, threads=1, show_progress=False)

    assert [r.name for r in results] == ["S3", "min(3)"]
    assert all(r.passed for r in results), results
    small_corpus.assert_called_once_with(0)


def test_least_comm_falls_back_to_short_factorisations(
    mocker, s3_semigroup
) -> None:
    """Over the state cap the sim_s1 congruence is reached at L=2"""

    mocker.patch.object(core.config.constants, "S1_STATE_CAP", 100)
    S3 = CorpusInstance("S3", "groups", s3_semigroup)

    assert suites.bounded_s1(s3_semigroup)[1] == 2
    assert suites._least_comm(S3) == (
        True,
        "2 classes; sim_s1 congruence reached at L=2",
    )


def test_containment_suite(small_corpus) -> None:
    results = suites.containment.run(seed=0, show_progress=False)
    witnesses = [r for r in results if r.name.startswith("witness ")]

    assert len(witnesses) == len(suites.STRICTNESS) == 8
    assert all(
        r.passed for r in results if not r.name.startswith("witness ")
    ), "Sound inclusions hold on S3 and min(3)"


def test_containment_above_coupled_limit(mocker, small_corpus) -> None:
    """Large instances get the tractable chain and a skipped coupled row"""

    mocker.patch.object(core.config.constants, "COUPLED_WITNESS_LIMIT", 4)
    results = {
        r.name: r
        for r in suites.containment.run(seed=0, show_progress=False)
    }

    assert results["S3"].status == "PASS", results["S3"].detail
    assert "sim_s1 (L=4)" in results["S3"].detail
    assert results["S3 coupled"].status == "SKIP"
    assert not results["S3 coupled"].failed
    assert results["min(3)"].status == "PASS"


def test_trace_check_has_no_order_cap(mocker, s3_semigroup) -> None:
    mocker.patch.object(core.config.constants, "RATIONAL_ORACLE_MAX_DIM", 0)
    S3 = CorpusInstance("S3", "groups", s3_semigroup)

    assert suites._trace(S3, make_rng(0)) == (
        True,
        "trace lemma; 3 trace values",
    )


def test_trace_check_on_matrix_units(matrix_units) -> None:
    units = CorpusInstance("matrix-units(2)", "small", matrix_units)

    assert suites._trace(units, make_rng(0)) == (
        True,
        "trace quotient: free rank 1, torsion []",
    )


def test_rees_suite(mocker, z2) -> None:
    twisted = ReesSemigroup(z2, 2, 2, [[0, 0], [0, 1]], with_zero=False)
    unnormalized = ReesSemigroup(z2, 2, 2, [[1, 0], [0, 1]], with_zero=False)
    holes = ReesSemigroup(z2, 2, 2, [[0, 0], [0, None]])
    mocker.patch(
        "conjcalc.verify.suites.build_corpus",
        return_value=tuple(
            CorpusInstance(name, "rees", sem.cayley(), rees=sem)
            for name, sem in [
                ("twisted", twisted),
                ("unnormalized", unnormalized),
                ("holes", holes),
            ]
        ),
    )

    checks = suites.rees_checks(0)
    assert checks[-1][0] == "antidiagonal example"
    results = suites.run_checks("rees", checks[:-1], show_progress=False)
    assert all(r.passed for r in results), results


def test_groups_checks() -> None:
    names = [name for name, _ in suites.groups_checks(0)]

    assert "S4" in names
    assert names[-1] == "S3 abelianization"
    results = suites.run_checks(
        "groups",
        [c for c in suites.groups_checks(0) if c[0] in ("S3", "Z2xZ2")],
        show_progress=False,
    )
    assert all(r.passed for r in results)


def test_natmaps_suite() -> None:
    checks = suites.natmaps_checks(5, count=30)

    assert [name for name, _ in checks] == [
        "injections",
        "injection congruence",
        "surjections",
    ]
    results = suites.run_checks("natmaps", checks, show_progress=False)
    assert all(r.passed for r in results), results


def test_words_suite_on_short_words() -> None:
    checks = [
        check
        for check in suites.words_checks(0)
        if check[0].endswith("|A|=2 n=3")
    ]

    assert len(checks) == 2
    results = suites.run_checks("words", checks, show_progress=False)
    assert all(r.passed for r in results)

