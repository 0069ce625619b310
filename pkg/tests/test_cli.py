"""CLI surface: commands, exit codes, output formats, determinism."""
import io
import json

import pytest

from nearrings import builtin, emit_table
from nearrings.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture()
def klein4_file(tmp_path):
    path = tmp_path / "klein4.json"
    path.write_text(emit_table(builtin("klein4_ring")))
    return str(path)


@pytest.fixture()
def m0_file(tmp_path):
    path = tmp_path / "m0.json"
    path.write_text(emit_table(builtin("m0_z3")))
    return str(path)


class TestValidate:
    def test_valid_file(self, klein4_file):
        code, text = run(["validate", klein4_file])
        assert code == 0
        assert "ring" in text.split()  # the derived flag token
        assert "order: 4" in text

    def test_axiom_failure_exits_1(self, tmp_path):
        doc = json.loads(emit_table(builtin("klein4_ring")))
        doc["mul"][1][1] = 2  # break associativity / distributivity
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, text = run(["validate", str(bad)])
        assert code == 1
        assert "witness" in text

    def test_truncated_json_exits_3(self, tmp_path):
        bad = tmp_path / "trunc.json"
        bad.write_text(emit_table(builtin("klein4_ring"))[:40])
        code, text = run(["validate", str(bad)])
        assert code == 3

    def test_missing_file_exits_3(self):
        code, _ = run(["validate", "/no/such/file.json"])
        assert code == 3


class TestClassify:
    def test_m0_z3_f5_row(self, m0_file):
        code, text = run(["classify", m0_file, "--format", "csv"])
        assert code == 0
        rows = text.splitlines()
        assert rows[0].startswith("index,label,unit,idempotent")
        f5 = rows[5].split(",")
        assert f5[1] == "f5"
        assert f5[3] == "yes"            # idempotent
        assert f5[10].startswith("no")   # not left morphic
        assert len(rows) == 10

    def test_single_element_by_label(self, klein4_file):
        code, text = run(["classify", klein4_file, "--element", "a"])
        assert code == 0
        parts = text.splitlines()[-1].split()
        # columns end with: morphic, witness, |Na|, |annL|
        assert parts[-4] == "yes" and parts[-3] == "c"

    def test_unknown_element_exits_3(self, klein4_file):
        code, _ = run(["classify", klein4_file, "--element", "zz"])
        assert code == 3

    def test_json_shape(self, klein4_file):
        code, text = run(["classify", klein4_file, "--format", "json"])
        assert code == 0
        doc = json.loads(text)
        assert doc["order"] == 4
        assert doc["verdict"] == "left strongly regular"
        assert len(doc["elements"]) == 4
        assert doc["structure"]["is_ring"] is True

    def test_json_is_deterministic(self, klein4_file):
        _, a = run(["classify", klein4_file, "--format", "json"])
        _, b = run(["classify", klein4_file, "--format", "json"])
        assert a == b


class TestVerify:
    def test_default_corpus_passes(self):
        code, text = run(["verify"])
        assert code == 0
        assert "aggregate: pass" in text
        assert "klein4_ring" in text

    def test_chain_summary_names_witnesses(self):
        code, text = run(["verify"])
        lines = {l.split(":")[0].strip(): l for l in text.splitlines() if ":" in l}
        assert "klein4_ring" in lines["left strongly regular"]
        assert "mat2_f2" in lines["left morphic regular"]
        assert "mat2_f2" not in lines["left strongly regular"]
        assert "m0_z3" in lines["unit-regular"]
        assert "m0_z3" not in lines["left morphic regular"]

    def test_single_theorem_on_file(self, m0_file):
        code, text = run(["verify", m0_file, "--theorems", "thm62"])
        assert code == 0
        assert "not_applicable" in text

    def test_unknown_theorem_exits_3(self, m0_file):
        code, _ = run(["verify", m0_file, "--theorems", "nope"])
        assert code == 3

    def test_corrupted_input_exits_1_before_theorems(self, tmp_path):
        doc = json.loads(emit_table(builtin("klein4_ring")))
        doc["add"][1][2] = 1
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, text = run(["verify", str(bad)])
        assert code == 1
        assert "aggregate" not in text

    def test_json_byte_identical_runs(self):
        _, a = run(["verify", "--format", "json"])
        _, b = run(["verify", "--format", "json"])
        assert a == b
        doc = json.loads(a)
        assert doc["aggregate"] == "pass"


class TestBuiltin:
    def test_list_sorted(self):
        code, text = run(["builtin", "--list"])
        assert code == 0
        names = text.splitlines()
        assert names == sorted(names)
        assert "klein4_ring" in names

    def test_export_roundtrips(self, tmp_path):
        target = tmp_path / "k.json"
        code, _ = run(["builtin", "klein4_ring", "--out", str(target)])
        assert code == 0
        code, text = run(["validate", str(target)])
        assert code == 0
        assert "order: 4" in text

    def test_m0_export_order_9(self):
        code, text = run(["builtin", "m0_z3"])
        assert code == 0
        assert json.loads(text)["order"] == 9

    def test_unknown_exits_3(self):
        code, _ = run(["builtin", "not_a_ring"])
        assert code == 3


class TestCorpus:
    def test_digest(self, tmp_path):
        for name in ("klein4_ring", "m0_z3"):
            (tmp_path / f"{name}.json").write_text(emit_table(builtin(name)))
        code, text = run(["corpus", str(tmp_path)])
        assert code == 0
        m0_line = next(l for l in text.splitlines() if "m0_z3" in l)
        assert "n=9" in m0_line and "units=2" in m0_line

    def test_empty_dir(self, tmp_path):
        code, text = run(["corpus", str(tmp_path)])
        assert code == 0
        assert text == ""

    def test_bad_file_flagged_others_classified(self, tmp_path):
        (tmp_path / "good.json").write_text(emit_table(builtin("klein4_ring")))
        (tmp_path / "bad.json").write_text("{not json")
        code, text = run(["corpus", str(tmp_path)])
        assert code == 3
        assert "ERROR" in text
        assert "klein4_ring" in text

    def test_not_a_directory_exits_3(self):
        code, _ = run(["corpus", "/no/such/dir"])
        assert code == 3
