from __future__ import annotations

import json
import random
import subprocess
import sys

import pytest

from wpp.cli import main
from wpp.lemmas import non_injectivity_pair, non_surjectivity_sequence
from wpp.sequences import ones_power_sequence, random_power_sequence

THREE_VERTEX = {"m": 3, "entries": {
    "[]": [1, 1, 1], "[1]": [2, 1, 1], "[2]": [1, 3, 1], "[3]": [1, 1, 5],
    "[1,2]": [2, 3, 1], "[1,3]": [2, 1, 5], "[2,3]": [1, 3, 5], "[1,2,3]": [2, 3, 5]}}


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)
    return _write


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ps_ok(capsys, write):
    code, out, _ = run(capsys, "validate-ps", write("c.json", THREE_VERTEX))
    assert code == 0
    assert json.loads(out) == {"valid": True, "m": 3, "in_ps": False, "minimal": True}


def test_validate_ps_violation(capsys, write):
    data = json.loads(json.dumps(THREE_VERTEX))
    data["entries"]["[1,2,3]"] = [3, 3, 5]
    code, out, _ = run(capsys, "validate-ps", write("c.json", data))
    assert code == 1
    bad = json.loads(out)["violations"]
    found = [(v["kind"], v["small"], v["big"], v["vertex"]) for v in bad]
    assert found == [("divisibility", [1, 2], [1, 2, 3], 1), ("divisibility", [1, 3], [1, 2, 3], 1)]
    code, out, _ = run(capsys, "validate-ps", write("c.json", data), "--format", "text")
    assert out.startswith("INVALID power sequence\n  divisibility: tau=(1,2) sigma=(1,2,3) i=1")


@pytest.mark.parametrize("text", ['{"m": 3, "entries": {"[]": [1, 1', '{"m": 2}', "[]",
                                  '{"m": 2, "entries": {"[]": [1, 1]}}',
                                  '{"m": 1, "entries": {"[]": [1], "[1]": [0]}}',
                                  '{"m": 1, "entries": {"[]": [1], "[2]": [1]}}'])
def test_validate_malformed(capsys, write, text):
    code, out, err = run(capsys, "validate-ps", write("c.json", text))
    assert code == 2 and out == "" and err.startswith("wpp: error:")


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate-ps", tmp_path / "nope.json")
    assert code == 2 and "cannot read" in err


def test_bad_arguments(capsys):
    assert main([]) == 2
    assert main(["ring", "a.json"]) == 2
    capsys.readouterr()


def test_validate_cs_rings(capsys, write):
    cs = {"m": 2, "entries": {"[]": 1, "[1]": 1, "[2]": 1, "[1,2]": 6}}
    path = write("cs.json", cs)
    assert run(capsys, "validate-cs", path)[0] == 0
    code, out, _ = run(capsys, "validate-cs", path, "--ring", "Z[1/3]")
    assert code == 1 and json.loads(out)["violations"][0]["kind"] == "condition-3"
    assert run(capsys, "validate-cs", path, "--ring", "Z[1/4]")[0] == 2
    assert run(capsys, "validate-cs", write("r.json", dict(cs, ring="Q")))[0] == 1


def test_phi_outputs(capsys, write):
    c, cbar = non_injectivity_pair(3, 2)
    out1 = run(capsys, "phi", write("c.json", c.to_json()))[1]
    out2 = run(capsys, "phi", write("cbar.json", cbar.to_json()))[1]
    assert out1 == out2
    assert json.loads(out1)["entries"]["[1,2,3]"] == 4

    code, out, _ = run(capsys, "phi", write("one.json", ones_power_sequence(3).to_json()))
    assert code == 0 and set(json.loads(out)["entries"].values()) == {1}


def test_phi_domain(capsys, write):
    path = write("c.json", THREE_VERTEX)
    code, out, _ = run(capsys, "phi", path)
    assert code == 1 and json.loads(out)["violations"][0]["kind"] == "phi-domain"
    code, out, _ = run(capsys, "phi", path, "--any-power-sequence")
    data = json.loads(out)
    assert code == 0 and data["entries"]["[1,2,3]"] == 30 and data["coefficient_sequence"] is False


def test_phi_output_revalidates(capsys, write, tmp_path):
    c = random_power_sequence(4, random.Random(3))
    out_path = tmp_path / "cs.json"
    assert run(capsys, "phi", write("c.json", c.to_json()), "--out", out_path)[0] == 0
    assert run(capsys, "validate-cs", out_path)[0] == 0
    assert run(capsys, "preimage", out_path, "--out", tmp_path / "w.json")[0] == 0
    assert run(capsys, "validate-ps", tmp_path / "w.json")[0] == 0
    assert run(capsys, "phi", tmp_path / "w.json")[1] == out_path.read_text()


def test_preimage(capsys, write):
    code, out, _ = run(capsys, "preimage", write("cs.json", non_surjectivity_sequence(3, 2).to_json()),
                       "--format", "text")
    assert code == 0 and out == "NONE (search complete)\n"
    cs = {"m": 2, "entries": {"[]": 1, "[1]": 1, "[2]": 1, "[1,2]": 6}}
    code, out, _ = run(capsys, "preimage", write("e.json", cs))
    a, b = json.loads(out)["entries"]["[1,2]"]
    assert code == 0 and a * b == 6


def test_preimage_abort(capsys, write):
    code, out, _ = run(capsys, "preimage", write("cs.json", non_surjectivity_sequence(4, 2).to_json()),
                       "--max-nodes", 1)
    assert code == 1 and json.loads(out)["complete"] is False


@pytest.fixture
def ring_files(write):
    return {
        "simplex2": write("k2.json", {"m": 2, "maximal_faces": [[1, 2]]}),
        "simplex3": write("k3.json", {"m": 3, "maximal_faces": [[1, 2, 3]]}),
        "ones2": write("one2.json", ones_power_sequence(2).to_json()),
        "three": write("three.json", THREE_VERTEX),
    }


def test_ring_poincare(capsys, ring_files):
    f = ring_files
    code, out, _ = run(capsys, "ring", f["simplex2"], f["ones2"], "--degrees", "2,2",
                       "--poincare", 12, "--format", "text")
    assert code == 0 and out == "1,0,2,0,1\n"
    code, out, _ = run(capsys, "ring", f["simplex2"], f["ones2"], "--degrees", "2,2", "--poincare", 4)
    assert json.loads(out) == {"max_degree": 4, "series": [1, 0, 2, 0, 1],
                               "splitting_formula": [1, 0, 2, 0, 1], "agree": True}


def test_ring_check(capsys, ring_files):
    f = ring_files
    code, out, _ = run(capsys, "ring", f["simplex3"], f["three"], "--degrees", "2,4,6", "--check")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert len(data["reports"]) == 9


def test_ring_table_is_stable(capsys, ring_files):
    f = ring_files
    args = ("ring", f["simplex3"], f["three"], "--degrees", "1,3,2", "--table")
    first = run(capsys, *args, "--format", "text")[1]
    assert first == run(capsys, *args, "--format", "text")[1]
    data = json.loads(run(capsys, *args)[1])
    assert len(data["basis"]) == 8
    assert {"left": 1, "right": 2, "coeff": "1", "product": 4} in data["products"]


def test_ring_bad_inputs(capsys, ring_files, write):
    f = ring_files
    assert run(capsys, "ring", f["simplex2"], f["ones2"], "--degrees", "2,x", "--table")[0] == 2
    assert run(capsys, "ring", f["simplex3"], f["ones2"], "--degrees", "2,2,2", "--table")[0] == 2
    assert run(capsys, "ring", f["simplex2"], f["ones2"], "--degrees", "2,2", "--poincare", -1)[0] == 2
    broken = write("broken.json", {"m": 2, "entries": {"[]": [1, 1], "[1]": [1, 1], "[2]": [1, 1],
                                                       "[1,2]": [1, 1]}, "x": 1})
    assert run(capsys, "ring", f["simplex2"], broken, "--degrees", "2,2", "--table")[0] == 0
    bad_k = write("badk.json", {"m": 2, "maximal_faces": [[1, 5]]})
    assert run(capsys, "ring", bad_k, f["ones2"], "--degrees", "2,2", "--table")[0] == 2


@pytest.mark.parametrize("m", [1, 3, 4])
def test_lemmas(capsys, m):
    code, out, _ = run(capsys, "lemmas", "--m", m)
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert [r["name"] for r in data["results"]] == [
        "generators", "mobius-decomposition", "non-injectivity", "non-surjectivity",
        "two-vertex-realizability", "phi-image"]


def test_lemmas_output_is_deterministic(capsys):
    assert run(capsys, "lemmas", "--format", "text")[1] == run(capsys, "lemmas", "--format", "text")[1]


def test_lemmas_bad_prime(capsys):
    assert run(capsys, "lemmas", "--p", 4)[0] == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(THREE_VERTEX))
    proc = subprocess.run([sys.executable, "-m", "wpp", "validate-ps", str(path), "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "valid power sequence (m=3, normalized: no, minimal: yes)\n"


def test_image_thread_count_does_not_change_output(tmp_path):
    env_runs = []
    for threads in ("1", "3"):
        proc = subprocess.run([sys.executable, "-m", "wpp", "lemmas", "--m", "3"],
                              capture_output=True, text=True, env={"WPP_THREADS": threads, "PATH": ""})
        env_runs.append((proc.returncode, proc.stdout))
    assert env_runs[0] == env_runs[1] and env_runs[0][0] == 0
