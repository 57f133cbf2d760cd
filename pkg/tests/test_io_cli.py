"""Serialization formats and the command-line interface."""

import json
import subprocess
import sys

import pytest

from isgkit import corpus, fileio, isocheck
from isgkit.errors import BadOne, BadZero, MalformedInput


@pytest.fixture(scope="module")
def members():
    return corpus.members()


@pytest.fixture(scope="module")
def gmembers():
    return corpus.groupoid_members()


# -- semigroup files ----------------------------------------------------------------


def test_semigroup_round_trip_is_byte_identical(members):
    for name, S in members.items():
        text = fileio.dumps_semigroup(S)
        T = fileio.loads_semigroup(text)
        assert fileio.dumps_semigroup(T) == text, name
        assert T.labels == S.labels and T.mult == S.mult


def test_dumps_semigroup_is_canonical_json(members):
    text = fileio.dumps_semigroup(members["B2"])
    assert text.endswith("\n")
    payload = json.loads(text)
    assert payload["format"] == "isg-1"
    assert list(payload) == sorted(payload)
    assert text == json.dumps(
        payload, sort_keys=True, separators=(",", ":")
    ) + "\n"


def test_loads_semigroup_generator_format(members):
    text = json.dumps(
        {"format": "isg-gen-1", "degree": 2, "generators": ["1>2"]}
    )
    S = fileio.loads_semigroup(text)
    assert len(S) == 5
    assert isocheck.isomorphic(S, members["B2"])


def test_loads_semigroup_rejects_bad_input(members):
    cases = [
        "not json",
        json.dumps([1, 2, 3]),
        json.dumps({"format": "isg-99", "labels": [], "mult": []}),
        json.dumps({"format": "isg-1", "labels": ["a"]}),
        json.dumps({"format": "isg-1", "labels": "a", "mult": [[0]]}),
        json.dumps({"format": "isg-1", "labels": ["a"], "mult": [[0, 0]]}),
        json.dumps({"format": "isg-1", "labels": ["a"], "mult": [[0]], "zero": 9}),
        json.dumps({"format": "isg-gen-1", "degree": -1, "generators": []}),
        json.dumps({"format": "isg-gen-1", "degree": 2, "generators": ["3>1"]}),
    ]
    for text in cases:
        with pytest.raises(MalformedInput):
            fileio.loads_semigroup(text)


def test_loads_semigroup_cross_checks_declared_constants(members):
    S = members["B2"]
    payload = json.loads(fileio.dumps_semigroup(S))
    payload["zero"] = (S.zero + 1) % len(S)
    with pytest.raises(BadZero):
        fileio.loads_semigroup(json.dumps(payload))
    payload = json.loads(fileio.dumps_semigroup(members["I2"]))
    payload["one"] = 0
    with pytest.raises(BadOne):
        fileio.loads_semigroup(json.dumps(payload))


# -- groupoid files -----------------------------------------------------------------


def test_groupoid_round_trip_is_byte_identical(gmembers):
    for name, G in gmembers.items():
        text = fileio.dumps_groupoid(G)
        H = fileio.loads_groupoid(text)
        assert fileio.dumps_groupoid(H) == text, name
        assert H.names == G.names and H.comp == G.comp


def test_loads_groupoid_cross_checks_identities(gmembers):
    payload = json.loads(fileio.dumps_groupoid(gmembers["pair2"]))
    payload["identities"] = [0]
    with pytest.raises(MalformedInput):
        fileio.loads_groupoid(json.dumps(payload))


def test_dot_export(gmembers):
    dot = fileio.dumps_dot(gmembers["eq12|3"])
    lines = dot.splitlines()
    assert lines[0] == "digraph groupoid {"
    assert lines[-1] == "}"
    assert '  "(1,1)";' in lines
    assert '  "(2,2)" -> "(1,1)" [label="(1,2)"];' in lines
    # identity arrows appear as nodes only
    assert all("->" not in line for line in lines if '"(3,3)"' in line)


def test_dot_quoting():
    G = corpus.one_object_z2()
    dot = fileio.dumps_dot(G)
    assert dot.count("->") == 1  # one non-identity loop


# -- the command line ---------------------------------------------------------------


def run_cli(args, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "isgkit.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )


def test_oracle_is_deterministic(members):
    first = run_cli(["oracle", "I2"])
    second = run_cli(["oracle", "I2"])
    assert first.returncode == 0
    assert first.stdout == second.stdout
    S = fileio.loads_semigroup(first.stdout)
    assert S.labels == members["I2"].labels


def test_oracle_bound():
    result = run_cli(["oracle", "I9"])
    assert result.returncode == 3
    assert "error" in result.stderr


def test_oracle_rejects_unknown_names():
    assert run_cli(["oracle", "J2"]).returncode == 2


def test_analyze_report(members):
    oracle = run_cli(["oracle", "I2"]).stdout
    result = run_cli(["analyze"], stdin=oracle)
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert "order: 7" in lines
    assert "idempotents: 4" in lines
    assert "fundamental: true" in lines
    assert "congruence_free: false" in lines
    assert "decomposition: I2" in lines


def test_analyze_json_is_sorted(members):
    oracle = run_cli(["oracle", "I2"]).stdout
    result = run_cli(["analyze", "--json"], stdin=oracle)
    payload = json.loads(result.stdout)
    assert list(payload) == sorted(payload)
    assert payload["order"] == 7
    assert payload["greens_d"] == 3
    assert payload["sigma_classes"] == 1


def test_analyze_not_applicable_without_zero(members):
    text = fileio.dumps_semigroup(members["Z3"])
    result = run_cli(["analyze"], stdin=text)
    assert result.returncode == 0
    assert "xi_classes: not applicable" in result.stdout.splitlines()


def test_analyze_rejects_malformed_input():
    result = run_cli(["analyze"], stdin="{broken")
    assert result.returncode == 2
    assert "error" in result.stderr


def test_analyze_rejects_non_inverse_tables():
    left_zero = json.dumps(
        {"format": "isg-1", "labels": ["a", "b"], "mult": [[0, 0], [1, 1]]}
    )
    assert run_cli(["analyze"], stdin=left_zero).returncode == 2
    non_assoc = json.dumps(
        {"format": "isg-1", "labels": ["a", "b"], "mult": [[1, 0], [0, 0]]}
    )
    assert run_cli(["analyze"], stdin=non_assoc).returncode == 2


def test_closure_command(members):
    result = run_cli(["closure", "-d", "2", "-g", "1>2"])
    assert result.returncode == 0
    S = fileio.loads_semigroup(result.stdout)
    assert len(S) == 5
    report = run_cli(["analyze"], stdin=result.stdout).stdout
    assert "congruence_free: true" in report.splitlines()


def test_quotient_commands(members):
    oracle = run_cli(["oracle", "I2"]).stdout
    by_sigma = run_cli(["quotient", "--by", "sigma"], stdin=oracle)
    assert len(fileio.loads_semigroup(by_sigma.stdout)) == 1
    by_mu = run_cli(["quotient", "--by", "mu"], stdin=oracle)
    assert len(fileio.loads_semigroup(by_mu.stdout)) == 7
    by_rees = run_cli(["quotient", "--by", "rees=rank1"], stdin=oracle)
    T = fileio.loads_semigroup(by_rees.stdout)
    assert len(T) == 3
    assert isocheck.isomorphic(T, members["Z2^0"])
    # the ideal generated by id:1 already contains every rank-one element
    by_labels = run_cli(["quotient", "--by", "rees=0,id:1"], stdin=oracle)
    assert fileio.loads_semigroup(by_labels.stdout).labels == [
        "[0]",
        "[id:1,2]",
        "[1>2,2>1]",
    ]
    assert run_cli(["quotient", "--by", "rees=bogus"], stdin=oracle).returncode == 2
    assert run_cli(["quotient", "--by", "xi"], stdin=oracle).returncode == 0


def test_munn_command(members):
    text = fileio.dumps_semigroup(members["square"])
    result = run_cli(["munn"], stdin=text)
    assert result.returncode == 0
    T = fileio.loads_semigroup(result.stdout)
    assert len(T) == 7
    assert isocheck.isomorphic(T, members["I2"])


def test_groupoid_command(members, tmp_path):
    oracle = run_cli(["oracle", "I2"]).stdout
    result = run_cli(["groupoid", "--atoms"], stdin=oracle)
    G = fileio.loads_groupoid(result.stdout)
    assert len(G) == 4 and len(G.identities) == 2
    full = run_cli(["groupoid"], stdin=oracle)
    assert len(fileio.loads_groupoid(full.stdout)) == 7
    dot_file = tmp_path / "atoms.dot"
    grpd_file = tmp_path / "atoms.grpd"
    result = run_cli(
        ["groupoid", "--atoms", "--dot", str(dot_file), "-o", str(grpd_file)],
        stdin=oracle,
    )
    assert result.returncode == 0
    # the two output flags compose: one invocation writes both files
    assert dot_file.read_text().startswith("digraph groupoid {")
    assert len(fileio.loads_groupoid(grpd_file.read_text())) == 4


def test_bisections_command(members, gmembers):
    text = fileio.dumps_groupoid(gmembers["pair2"])
    result = run_cli(["bisections"], stdin=text)
    K = fileio.loads_semigroup(result.stdout)
    assert len(K) == 7
    assert isocheck.isomorphic(K, members["I2"])


def test_congruences_command():
    oracle = run_cli(["oracle", "I2"]).stdout
    result = run_cli(["congruences"], stdin=oracle)
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "count: 4"
    assert len(lines) == 5
    big = run_cli(["oracle", "I3"]).stdout
    assert run_cli(["congruences"], stdin=big).returncode == 3


def test_check_command():
    oracle = run_cli(["oracle", "I2"]).stdout
    result = run_cli(["check", "--suite", "orders"], stdin=oracle)
    assert result.returncode == 0
    assert all(
        line.startswith(("ok", "skip")) for line in result.stdout.splitlines()
    )
    result = run_cli(["check", "--suite", "all"], stdin=oracle)
    assert result.returncode == 0


def test_file_arguments(tmp_path, members):
    infile = tmp_path / "in.isg"
    outfile = tmp_path / "out.isg"
    infile.write_text(fileio.dumps_semigroup(members["B2"]))
    result = run_cli(["analyze", str(infile)])
    assert result.returncode == 0
    assert "order: 5" in result.stdout.splitlines()
    run_cli(["closure", "-d", "2", "-g", "1>2", "-o", str(outfile)])
    assert outfile.read_text() == fileio.dumps_semigroup(members["B2"])
    assert run_cli(["analyze", str(tmp_path / "missing.isg")]).returncode == 2


def test_installed_script_matches_module():
    from_module = run_cli(["oracle", "I1"]).stdout
    script = subprocess.run(
        ["isg", "oracle", "I1"], capture_output=True, text=True
    )
    assert script.returncode == 0
    assert script.stdout == from_module
