import io
import json

import pytest

from coxcat.cli import main


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestPoly:
    def test_pinned_example(self, capsys):
        code, out = run(capsys, ["poly", "--object", "ideal", "--type", "B", "--n", "2", "--stat", "area"])
        assert code == 0
        assert out.strip() == "1 + 2q + q^2 + q^3 + q^4"

    def test_json_format(self, capsys):
        code, out = run(capsys, ["poly", "--object", "dyck", "--type", "B", "--n", "2", "--stat", "area", "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"coeffs": [1, 2, 1, 1, 1]}

    def test_sortable_ls(self, capsys):
        code, out = run(capsys, ["poly", "--object", "sortable", "--type", "B", "--n", "2", "--stat", "ls"])
        assert code == 0
        assert out.strip() == "1 + 2q + q^2 + q^3 + q^4"

    def test_revnc_majimaj(self, capsys):
        code, out = run(capsys, ["poly", "--object", "revnc", "--type", "B", "--n", "2", "--stat", "majimaj"])
        assert code == 0
        assert out.strip() == "1 + q^2 + 2q^4 + q^6 + q^8"


class TestEnumerate:
    def test_empty_b_path(self, capsys):
        code, out = run(capsys, ["enumerate", "--object", "dyck", "--type", "B", "--n", "0"])
        assert code == 0
        assert out == "\n"

    def test_b2_paths_sorted(self, capsys):
        code, out = run(capsys, ["enumerate", "--object", "dyck", "--type", "B", "--n", "2"])
        lines = out.splitlines()
        assert lines == sorted(lines)
        assert set(lines) == {"NENE", "NENN", "NNEE", "NNEN", "NNNE", "NNNN"}

    def test_ideals_json(self, capsys):
        code, out = run(capsys, ["enumerate", "--object", "ideal", "--type", "B", "--n", "2"])
        lines = [json.loads(l) for l in out.splitlines()]
        assert len(lines) == 6
        assert {"roots": []} in lines

    def test_partition_listing(self, capsys):
        code, out = run(capsys, ["enumerate", "--object", "partition", "--type", "A", "--n", "3"])
        lines = [json.loads(l) for l in out.splitlines()]
        assert len(lines) == 5
        assert [[1], [2], [3]] in lines
        assert [[1, 2, 3]] in lines

    def test_csv(self, capsys):
        code, out = run(capsys, ["enumerate", "--object", "dyck", "--type", "A", "--n", "2", "--format", "csv"])
        rows = [l.split(",") for l in out.splitlines()]
        assert rows == [["NENE", "0", "2"], ["NNEE", "1", "0"]]

    def test_guard_exit_code(self, capsys):
        code, _ = run(capsys, ["enumerate", "--object", "ideal", "--type", "B", "--n", "9"])
        assert code == 2

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--object", "nonsense", "--n", "2"])
        assert exc.value.code == 2


class TestMap:
    IDEAL_LINE = json.dumps({
        "roots": [
            "e2-e1", "e3-e2", "e4-e3", "e5-e4", "e6-e5", "e7-e6", "e8-e7", "e9-e8",
            "e3-e1", "e4-e2", "e5-e3", "e6-e4", "e7-e5", "e9-e7",
            "e4-e1", "e5-e2", "e6-e3",
        ]
    })

    def test_phi_a_pinned(self, capsys, monkeypatch):
        code, out = run(capsys, ["map", "--via", "phiA", "--n", "9"], stdin=self.IDEAL_LINE, monkeypatch=monkeypatch)
        assert code == 0
        assert out.strip() == "[7,3,4,5,2,6,9,8,1]  ls=17"

    def test_phi_a_json(self, capsys, monkeypatch):
        code, out = run(capsys, ["map", "--via", "phiA", "--n", "9", "--format", "json"], stdin=self.IDEAL_LINE, monkeypatch=monkeypatch)
        data = json.loads(out)
        assert data["image"]["oneline"] == [7, 3, 4, 5, 2, 6, 9, 8, 1]
        assert data["ls"] == 17
        assert data["majimaj"] == 37

    def test_psi_b(self, capsys, monkeypatch):
        code, out = run(capsys, ["map", "--via", "psiB", "--n", "6"], stdin="NNNNEEENNNNE\n", monkeypatch=monkeypatch)
        assert code == 0
        assert out.strip() == "[1,-2,-6,5,4,3]  ls=14"

    def test_psi_a_json_steps(self, capsys, monkeypatch):
        code, out = run(capsys, ["map", "--via", "psiA", "--n", "6"], stdin='{"steps": "NNNNEEENNEEE"}\n', monkeypatch=monkeypatch)
        assert out.strip() == "[6,2,1,5,4,3]  ls=9"

    def test_bad_input(self, capsys, monkeypatch):
        code, _ = run(capsys, ["map", "--via", "phiA", "--n", "3"], stdin='{"roots": ["x"]}\n', monkeypatch=monkeypatch)
        assert code == 2

    def test_inverse_accepts_cycle_notation(self, capsys, monkeypatch):
        code, out = run(
            capsys,
            ["map", "--via", "phiA", "--n", "9", "--inverse"],
            stdin="(1,7,9)(2,3,4,5)\n",
            monkeypatch=monkeypatch,
        )
        assert code == 0
        roots = json.loads(out.split("  ")[0])["roots"]
        assert len(roots) == 17 and "e9-e7" in roots
        assert out.strip().endswith("ls=17")

    def test_inverse_psi(self, capsys, monkeypatch):
        code, out = run(
            capsys,
            ["map", "--via", "psiB", "--n", "6", "--inverse"],
            stdin="[1,-2,-6,5,4,3]\n",
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert out.strip() == "NNNNEEENNNNE  ls=14"

    def test_inverse_outside_image(self, capsys, monkeypatch):
        code, _ = run(
            capsys,
            ["map", "--via", "psiA", "--n", "3", "--inverse"],
            stdin="[2,3,1]\n",
            monkeypatch=monkeypatch,
        )
        assert code == 2


class TestVerify:
    def test_single(self, capsys):
        code, out = run(capsys, ["verify", "--which", "phiB", "--n", "3"])
        assert code == 0
        report = json.loads(out)
        assert report["identity"] == "phiB"
        assert report["checked"] == 20
        assert report["failures"] == []

    def test_all_defaults(self, capsys):
        code, out = run(capsys, ["verify", "--all"])
        assert code == 0
        reports = [json.loads(l) for l in out.splitlines()]
        assert any(r["identity"] == "d4-counterexample" for r in reports)
        assert all(r["failures"] == [] for r in reports)

    def test_requires_n(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "--which", "phiA"])


class TestSelftest:
    def test_passes(self, capsys):
        code, out = run(capsys, ["selftest"])
        assert code == 0
        assert "FAIL" not in out
        assert out.count("ok:") >= 20
