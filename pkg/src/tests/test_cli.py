import json

from src.commands.oracle import service as oracle_service
from src.oracle.compare import CoefficientDiff, ComparisonReport


def rows_by_monomial(payload):
    return {row["monomial"]: row["coefficient"] for row in payload["rows"]}


def test_coeff_reproduces_first_coefficients(invoke):
    """coeff --max-edges 3 lists [t3] and [t1 t2]."""
    result = invoke("coeff", "--max-edges", 3, "--no-hbar")
    assert result.exit_code == 0, result.stderr
    rows = rows_by_monomial(json.loads(result.stdout))
    assert rows["t3"] == "1/8 + 3/2 Q^2"
    assert rows["t1 t2"] == "2 Q"


def test_coeff_csv_keeps_hbar(invoke):
    """CSV rows are monomial,coefficient with the hbar grading."""
    result = invoke("--format", "csv", "coeff", "--max-edges", 3)
    assert result.exit_code == 0, result.stderr
    lines = result.stdout.splitlines()
    assert lines[0] == "monomial,coefficient"
    assert "t1 t2,2 Q hbar^-1" in lines
    assert "t3,1/8 + 3/2 Q^2" in lines


def test_coeff_tau(invoke):
    """--tau adds the constant term of exp(F)."""
    result = invoke("coeff", "--max-edges", 3, "--tau")
    payload = json.loads(result.stdout)
    assert payload["series"] == "tau"
    assert rows_by_monomial(payload)["1"] == "1"


def test_output_is_identical_across_jobs(invoke):
    """One worker or eight, coeff and enumerate print the same bytes."""
    for args in (("coeff", "--max-edges", 6), ("enumerate", "--genus", 0, "--boundaries", 1, "--faces", 3)):
        serial = invoke("--jobs", 1, *args)
        pooled = invoke("--jobs", 8, *args)
        assert serial.exit_code == pooled.exit_code == 0, pooled.stderr
        assert serial.stdout == pooled.stdout


def test_bound_is_a_usage_error(invoke):
    """max edges above the bound exits 2 before computing."""
    result = invoke("coeff", "--max-edges", 12)
    assert result.exit_code == 2


def test_enumerate_two_boundaries(invoke):
    """One class with |Aut| = 2, written in the interchange format."""
    result = invoke("enumerate", "--genus", 0, "--boundaries", 2, "--faces", 1, "--verify")
    assert result.exit_code == 0, result.stderr
    records = json.loads(result.stdout)
    assert len(records) == 1
    record = records[0]
    assert record["aut_order"] == 2
    assert record["half_edges"] == len(record["sigma0"]) == len(record["sigma1"]) == 6
    assert len(record["boundary"]) == 2


def test_enumerate_profile_dot(invoke):
    """DOT output dashes the boundary edges."""
    result = invoke("--format", "dot", "enumerate", "--profile", "0,2")
    assert result.exit_code == 0, result.stderr
    assert result.stdout.count("style=dashed") == 2


def test_enumerate_needs_type_or_profile(invoke):
    """Giving both, or neither, is a usage error."""
    assert invoke("enumerate").exit_code == 2
    assert invoke("enumerate", "--genus", 0, "--boundaries", 2, "--faces", 1, "--profile", "0,2").exit_code == 2


def test_unstable_type_is_a_usage_error(invoke):
    """((0,1),1) is refused with exit 2."""
    assert invoke("amplitude", "--genus", 0, "--boundaries", 1, "--faces", 1).exit_code == 2


def test_dot_only_for_enumerate(invoke):
    """Tables have no DOT rendering."""
    assert invoke("--format", "dot", "coeff", "--max-edges", 3).exit_code == 2


def test_amplitude_json(invoke):
    """W((0,1),2) has two monomials with coefficient Q."""
    result = invoke("amplitude", "--genus", 0, "--boundaries", 1, "--faces", 2)
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["type"] == "((0,1),2)"
    assert payload["graph_count"] >= 1
    assert [m["exponents"] for m in payload["monomials"]] == [[1, 2], [2, 1]]
    assert {m["coefficient"] for m in payload["monomials"]} == {"Q"}


def test_oracle_compare_passes(invoke):
    """The pairing oracle agrees with the graph sum at |h| <= 6."""
    result = invoke("oracle", "--max-half-edges", 6, "--colors", 2, "--compare")
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["ok"] is True
    assert payload["diff"] == []


def test_oracle_mismatch_exits_one(invoke, monkeypatch):
    """A differing coefficient is printed and named in the failure."""

    def broken(max_half_edges, colors, jobs=1):
        report = ComparisonReport(max_half_edges, colors)
        report.diff.append(CoefficientDiff("t3", "1/8", "1/4"))
        return report

    monkeypatch.setattr(oracle_service, "compare_oracle", broken)
    result = invoke("oracle", "--max-half-edges", 6, "--colors", 3, "--compare")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["diff"][0]["monomial"] == "t3"
    assert "oracle-equivalence" in result.stderr


def test_volume_exact(invoke):
    """Vol((0,2),1)(4; 1, 1) = 1/2."""
    result = invoke("volume", "--genus", 0, "--boundaries", 2, "--faces", 1, "--x", 4, "--y", 1, "--y", 1)
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["value"] == "1/2"


def test_volume_rejects_decimals(invoke):
    """Perimeters must be exact rationals."""
    result = invoke("volume", "--genus", 1, "--faces", 1, "--x", "0.5")
    assert result.exit_code == 2


def test_volume_laplace_report(invoke):
    """The Monte Carlo report carries the seed and sample count."""
    result = invoke(
        "--seed", 3, "volume", "--genus", 0, "--boundaries", 2, "--faces", 1,
        "--laplace", "--lambda", 2, "--samples", 20000, "--tolerance", 1,
    )
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["seed"] == 3
    assert payload["samples"] == 20000
    assert payload["w_exact"] == 0.0625
    assert set(payload) >= {"w_exact", "integral_estimate", "rel_error"}


def test_volume_exact_identity(invoke):
    """--exact compares the Laplace transform with W symbolically."""
    result = invoke("volume", "--genus", 1, "--faces", 1, "--exact")
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["coefficient"] == "1/48"
    assert payload["matches"] is True


def test_atlas_writes_one_file_per_class(invoke, tmp_path):
    """((0,2),1) has one class, hence one DOT file."""
    result = invoke("atlas", "--genus", 0, "--boundaries", 2, "--faces", 1, "--dir", tmp_path / "atlas")
    assert result.exit_code == 0, result.stderr
    files = sorted((tmp_path / "atlas").glob("*.dot"))
    assert len(files) == 1
    assert all(f.read_text().startswith("graph ") for f in files)
    assert json.loads(result.stdout)[0]["aut_order"] == 2


def test_out_writes_file(invoke, tmp_path):
    """--out sends the result to a file instead of stdout."""
    target = tmp_path / "t.csv"
    result = invoke("--format", "csv", "--out", target, "coeff", "--max-edges", 3)
    assert result.exit_code == 0, result.stderr
    assert result.stdout == ""
    assert target.read_text().startswith("monomial,coefficient\n")


def test_run_options_after_subcommand(invoke):
    """--format and --jobs may follow the subcommand name."""
    result = invoke("coeff", "--max-edges", 3, "--format", "csv", "--jobs", 2)
    assert result.exit_code == 0, result.stderr
    assert result.stdout.splitlines()[0] == "monomial,coefficient"

    dot = invoke("enumerate", "--genus", 0, "--boundaries", 2, "--faces", 1, "--format", "dot")
    assert dot.exit_code == 0, dot.stderr
    assert "style=dashed" in dot.stdout


def test_subcommand_value_wins(invoke):
    """A subcommand-level option overrides the group-level one."""
    result = invoke("--format", "csv", "amplitude", "--genus", 1, "--faces", 1, "--format", "json")
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["type"] == "((1,0),1)"


def test_seed_after_volume(invoke):
    """volume --laplace ... --seed K reports the seed it used."""
    result = invoke(
        "volume", "--genus", 0, "--boundaries", 2, "--faces", 1,
        "--laplace", "--lambda", 2, "--samples", 20000, "--tolerance", 1, "--seed", 9,
    )
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["seed"] == 9


def test_dot_after_table_command_is_refused(invoke):
    """The subcommand form still reserves DOT for enumerate."""
    assert invoke("coeff", "--max-edges", 3, "--format", "dot").exit_code == 2


def test_coeff_help_names_hbar_default(invoke):
    """The help text says how to get the ungraded coefficients."""
    result = invoke("coeff", "--help")
    assert result.exit_code == 0
    assert "--no-hbar" in result.stdout
    assert "2 Q hbar^-1" in result.stdout
