from typer.testing import CliRunner
from conjcalc.app import app
from conjcalc.verify.suites import CheckResult
from pytest_mock import MockerFixture
import orjson

runner = CliRunner()


def test_version() -> None:
    result = runner.invoke(app, ["--version"])

    assert result.exit_code == 0
    assert "conjcalc 0.1.0" in result.output


def test_relations_sim_s(s3_file: str) -> None:
    result = runner.invoke(
        app, ["relations", "--in", s3_file, "--rel", "sim_s"]
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["relation"] == "sim_s"
    assert payload["order"] == 6
    assert len(payload["classes"]) == 2


def test_relations_pairs(min3_file: str) -> None:
    result = runner.invoke(
        app, ["relations", "--in", min3_file, "--rel", "sim_p1"]
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["pairs"] == [[0, 0], [1, 1], [2, 2]]
    assert payload["symmetric"] and payload["reflexive"]


def test_relations_sim_s1_reports_bound(min3_file: str) -> None:
    result = runner.invoke(
        app,
        ["relations", "--in", min3_file, "--rel", "sim_s1", "--bound-L", "3"],
    )

    assert result.exit_code == 0, result.output
    assert orjson.loads(result.stdout)["bound_L"] == 3


def test_relations_text(s3_file: str) -> None:
    result = runner.invoke(
        app,
        ["relations", "--in", s3_file, "--rel", "sim_p", "--format", "text"],
    )

    assert result.exit_code == 0, result.output
    assert "(1 2 3)" in result.output


def test_relations_dot(s3_file: str) -> None:
    result = runner.invoke(
        app,
        [
            "relations",
            "--in",
            s3_file,
            "--rel",
            "all",
            "--bound-L",
            "3",
            "--format",
            "dot",
        ],
    )

    assert result.exit_code == 0, result.output
    assert result.stdout.startswith("digraph containment {")


def test_relations_all_json(min3_file: str) -> None:
    result = runner.invoke(
        app, ["relations", "--in", min3_file, "--bound-L", "3"]
    )

    assert result.exit_code == 0, result.output
    assert orjson.loads(result.stdout)["order"] == 3


def test_relations_rejects_bad_input(
    s3_file: str, nonassociative_file: str, tmpdir: str
) -> None:
    """Input errors exit with code 1 and an error message"""

    dot = runner.invoke(
        app,
        ["relations", "--in", s3_file, "--rel", "sim_s", "--format", "dot"],
    )
    assert dot.exit_code == 1
    assert "Error:" in dot.output

    bound = runner.invoke(
        app, ["relations", "--in", s3_file, "--bound-L", "0"]
    )
    assert bound.exit_code == 1

    missing = runner.invoke(
        app, ["relations", "--in", f"{tmpdir}/missing.json"]
    )
    assert missing.exit_code == 1

    broken = runner.invoke(app, ["relations", "--in", nonassociative_file])
    assert broken.exit_code == 1
    assert "not associative" in broken.output


def test_congruence_least_commutative(s3_file: str) -> None:
    result = runner.invoke(app, ["congruence", "--in", s3_file])

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["num_classes"] == 2
    assert payload["quotient_commutative"]
    assert len(payload["quotient"]["elements"]) == 2


def test_congruence_with_closure(z4_file: str) -> None:
    result = runner.invoke(
        app,
        ["congruence", "--in", z4_file, "--pair", "0,2", "--closure", "1"],
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["num_classes"] == 2
    assert payload["closure"]["elements"] == ["1", "3"]
    assert not payload["closure"]["subsemigroup"]


def test_congruence_bad_pair(z4_file: str) -> None:
    result = runner.invoke(
        app, ["congruence", "--in", z4_file, "--pair", "0,1,2"]
    )

    assert result.exit_code == 1
    assert "two labels" in result.output


def test_trace_check(units_file: str) -> None:
    result = runner.invoke(app, ["trace", "--in", units_file, "--check"])

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["dimension"] == 4
    assert payload["commutator_rank"] == 3
    assert payload["free_rank"] == 1
    assert payload["checks"]["traces_match_sim_p"]
    assert payload["checks"]["commutator_ideal_spanned"]
    assert set(payload["trace_keys"]) == {"e11", "e12", "e21", "e22", "0"}


def test_family_rees_check(rees_file: str) -> None:
    sim_s = runner.invoke(
        app,
        [
            "family",
            "rees",
            "--spec",
            rees_file,
            "--check",
            "sim_s",
            "(1,e,1)",
            "(1,a,1)",
            "--format",
            "text",
        ],
    )
    assert sim_s.exit_code == 0, sim_s.output
    assert sim_s.stdout.strip() == "true"

    sim_p1 = runner.invoke(
        app,
        [
            "family",
            "rees",
            "--spec",
            rees_file,
            "--check",
            "sim_p1",
            "(1,e,1)",
            "(1,a,1)",
            "--format",
            "text",
        ],
    )
    assert sim_p1.exit_code == 0, sim_p1.output
    assert sim_p1.stdout.strip() == "false"


def test_family_rees_summary(rees_file: str) -> None:
    result = runner.invoke(app, ["family", "rees", "--spec", rees_file])

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["order"] == 9
    assert payload["sim_s_universal"]


def test_family_rees_cayley(rees_file: str) -> None:
    result = runner.invoke(
        app, ["family", "rees", "--spec", rees_file, "--cayley"]
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["elements"][-1] == "0"
    assert len(payload["table"]) == 9


def test_family_rees_needs_normalizing(rees_unnormalized_file: str) -> None:
    args = [
        "family",
        "rees",
        "--spec",
        rees_unnormalized_file,
        "--check",
        "sim_s",
        "(1,e,1)",
        "(2,a,2)",
    ]

    refused = runner.invoke(app, args)
    assert refused.exit_code == 1
    assert "Normalize" in refused.output

    result = runner.invoke(app, [*args, "--normalize"])
    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["normalized"]
    assert isinstance(payload["related"], bool)


def test_family_graph(bicyclic_file: str) -> None:
    result = runner.invoke(
        app,
        [
            "family",
            "graph",
            "--spec",
            bicyclic_file,
            "--class-of-vertex",
            "v",
            "--format",
            "text",
        ],
    )

    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "LoopPowers(e)"


def test_family_graph_check(bicyclic_file: str) -> None:
    result = runner.invoke(
        app,
        [
            "family",
            "graph",
            "--spec",
            bicyclic_file,
            "--check",
            "sim_s",
            '{"x": ["e"], "y": ["e"]}',
            '{"x": ["@v"], "y": ["@v"]}',
        ],
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["related"]
    assert payload["a"] == "e(e)^-1"
    assert payload["b"] == "v"


def test_family_graph_needs_a_question(bicyclic_file: str) -> None:
    result = runner.invoke(
        app, ["family", "graph", "--spec", bicyclic_file]
    )

    assert result.exit_code == 1


def test_family_words() -> None:
    sims = runner.invoke(
        app,
        ["family", "words", "--sims", "aabb", "abab", "--format", "text"],
    )
    assert sims.exit_code == 0, sims.output
    assert sims.stdout.strip() == "true"

    simp = runner.invoke(
        app, ["family", "words", "--simp", "abc", "cab", "--witness"]
    )
    assert simp.exit_code == 0, simp.output
    assert orjson.loads(simp.stdout)["witness"] == ["ab", "c"]


def test_family_words_witness() -> None:
    result = runner.invoke(
        app, ["family", "words", "--sims", "ab", "ba", "--witness"]
    )

    assert result.exit_code == 0, result.output
    assert orjson.loads(result.stdout)["witness"] == {
        "factors": ["a", "b"],
        "rearranged": ["b", "a"],
    }


def test_family_words_generation() -> None:
    result = runner.invoke(
        app, ["family", "words", "--generation", "3", "--alphabet", "abc"]
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["generates_sim_s"]
    assert len(payload["generators"]) == 3


def test_family_transform() -> None:
    result = runner.invoke(
        app,
        ["family", "transform", "--map", "[0,0,1]", "--format", "text"],
    )
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "SingularClass"

    wrong = runner.invoke(
        app, ["family", "transform", "--kind", "I", "--map", "[0,0,1]"]
    )
    assert wrong.exit_code == 1


def test_family_transform_conjugate() -> None:
    result = runner.invoke(
        app,
        ["family", "transform", "--conjugate", "[1,0,2]", "[0,2,1]"],
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["conjugate"]
    assert payload["witness"] == [2, 0, 1]
    assert payload["cycle_types"] == ["[2,1]", "[2,1]"]


def test_family_transform_cayley() -> None:
    result = runner.invoke(
        app, ["family", "transform", "--kind", "I", "--cayley", "2"]
    )
    assert result.exit_code == 0, result.output
    assert len(orjson.loads(result.stdout)["elements"]) == 7

    too_large = runner.invoke(
        app, ["family", "transform", "--kind", "T", "--cayley", "5"]
    )
    assert too_large.exit_code == 1


def test_family_natmap_surjections() -> None:
    result = runner.invoke(
        app,
        [
            "family",
            "natmap",
            "--map",
            '{"table": [0], "shift": -1}',
            "--with",
            '{"shift": 0}',
        ],
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert len(payload["maps"]) == 2
    assert payload["maps"][0]["invariant"] == "Finite(1)"
    assert payload["ts"] == payload["st"]
    assert payload["surj_approx"] is False


def test_family_natmap_injections() -> None:
    result = runner.invoke(
        app,
        [
            "family",
            "natmap",
            "--map",
            '{"shift": 1}',
            "--with",
            '{"shift": 2}',
        ],
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["maps"][1]["defect"] == 2
    assert payload["st"]["shift"] == 3
    assert payload["sim_s"] is False


def test_family_natmap_property_test() -> None:
    result = runner.invoke(
        app,
        [
            "family",
            "natmap",
            "--property-test",
            "--seed",
            "3",
            "--count",
            "20",
        ],
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["seed"] == 3
    assert all(r["passed"] for r in payload["results"])


def test_verify_failure(mocker: MockerFixture) -> None:
    run_suites = mocker.patch(
        "conjcalc.verify.suites.run_suites",
        return_value=[CheckResult("rees", "M0(Z2;1,1;[e])", False, "bad")],
    )

    result = runner.invoke(
        app, ["verify", "--suite", "rees", "--seed", "5", "--no-progress"]
    )

    assert result.exit_code == 2
    assert "rees: FAIL" in result.stdout
    run_suites.assert_called_once()
    _, kwargs = run_suites.call_args
    assert kwargs["seed"] == 5
    assert kwargs["show_progress"] is False


def test_verify_json(mocker: MockerFixture, tmpdir: str) -> None:
    mocker.patch(
        "conjcalc.verify.suites.run_suites",
        return_value=[
            CheckResult("groups", "S3", True, "2 classes"),
            CheckResult("words", "commuting generation", True, ""),
        ],
    )

    result = runner.invoke(
        app,
        [
            "verify",
            "--suite",
            "groups",
            "--suite",
            "words",
            "--format",
            "json",
            "--log-dir",
            str(tmpdir),
        ],
    )

    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["suites"] == {"groups": "PASS", "words": "PASS"}
    assert len(payload["results"]) == 2


def test_verify_reports_skips(mocker: MockerFixture) -> None:
    mocker.patch(
        "conjcalc.verify.suites.run_suites",
        return_value=[
            CheckResult("containment", "S3", True, "sound inclusions hold"),
            CheckResult(
                "containment",
                "T(4) coupled",
                False,
                "skipped: sim_n, sim_w and sim_c above order 64",
                skipped=True,
            ),
        ],
    )

    text = runner.invoke(
        app, ["verify", "--suite", "containment", "--no-progress"]
    )
    assert text.exit_code == 0, text.output
    assert "containment: PASS (1 skipped)" in text.stdout
    assert "SKIP" in text.stdout

    result = runner.invoke(
        app,
        ["verify", "--suite", "containment", "--format", "json"],
    )
    assert result.exit_code == 0, result.output
    payload = orjson.loads(result.stdout)
    assert payload["suites"] == {"containment": "PASS"}
    assert payload["skipped"] == 1
    assert [r["status"] for r in payload["results"]] == ["PASS", "SKIP"]
