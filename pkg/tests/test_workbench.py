"""Command line runs over the bundled documents."""

import pytest

from utils.document_manager import ComplexDocumentManager
from utils.export import load_geometry
import workbench
from workbench import FAILED_CHECK, INPUT_ERROR, INTERNAL_ERROR, SUCCESS, main

ORIGAMI_POINTS = ["11=2/3,2/3,1/3", "10=1/3,1/3,1/3", "01=1/3,1/3,0", "00=0,0,0"]


class TestCommands:

    def test_build(self, document, capsys):
        assert main(["build", document("origami")]) == SUCCESS
        out = capsys.readouterr().out
        assert "2: 18}" in out

    def test_build_writes_json(self, document, tmp_path):
        target = tmp_path / "X.json"
        assert main(["build", document("point"), "--json", str(target)]) == SUCCESS
        assert load_geometry(target.read_bytes()).chain_count(2) == 8

    @pytest.mark.parametrize("name, flag, expected", [
        ("crossing", "--embedded", FAILED_CHECK),
        ("dimer", "--embedded", SUCCESS),
        ("point", "--embedded", SUCCESS),
    ])
    def test_check(self, document, name, flag, expected):
        assert main(["check", document(name), flag]) == expected

    def test_missing_document(self, tmp_path, capsys):
        assert main(["build", str(tmp_path / "absent.json")]) == INPUT_ERROR
        assert capsys.readouterr().err.startswith("ERROR:")

    def test_inconsistent_build(self, document, monkeypatch, capsys):
        def disagree(F, P, check=True):
            raise RuntimeError("build_S: recursion disagrees with enumeration for S_00")

        monkeypatch.setattr(workbench, "build_S", disagree)
        assert main(["build", document("origami")]) == INTERNAL_ERROR
        assert capsys.readouterr().err.startswith("ERROR: build_S")

    def test_kernel_failure(self, document, monkeypatch, capsys):
        def broken(F, P, verbose=False):
            raise RuntimeError("kernel_of_d: result is not a reflected local system")

        monkeypatch.setattr(workbench, "kernel_of_d", broken)
        assert main(["dimer", document("dimer"), "--kernel"]) == INTERNAL_ERROR
        assert "ERROR: kernel_of_d" in capsys.readouterr().err

    def test_koszul_writes_origami(self, origami, tmp_path):
        target = str(tmp_path / "koszul.json")
        argv = ["koszul", "1+x+y", "1+z+x*y", "--output", target]
        for entry in ORIGAMI_POINTS:
            argv += ["--point", entry]
        assert main(argv) == SUCCESS
        manager = ComplexDocumentManager(target)
        assert manager.get_complex() == origami[0]
        assert manager.get_placement() == origami[1]

    def test_koszul_needs_every_label(self, tmp_path):
        argv = ["koszul", "1+x+y", "1+z+x*y", "--point", ORIGAMI_POINTS[0]]
        assert main(argv) == INPUT_ERROR

    @pytest.mark.parametrize("command", ["recover", "recover-from-t", "characterize"])
    def test_recovery_commands(self, document, command):
        assert main([command, document("dimer")]) == SUCCESS

    def test_recover_origami(self, document, capsys):
        assert main(["recover", document("origami")]) == SUCCESS
        assert "is equivalent" in capsys.readouterr().out

    def test_recover_needs_distinct_vertices(self, document):
        assert main(["recover", document("line")]) == INPUT_ERROR

    def test_mirror(self, document, capsys):
        assert main(["mirror", document("point"), "--d2", "--stalk", "1/3,1/3"]) == SUCCESS
        out = capsys.readouterr().out
        assert "1/3,1/3" in out

    def test_dimer(self, document, capsys):
        assert main(["dimer", document("dimer"), "--kasteleyn", "--reflect", "--kernel"]) == SUCCESS
        out = capsys.readouterr().out
        assert "(1, 1, 3, 3)" in out

    def test_dimer_on_crossing(self, document):
        assert main(["dimer", document("crossing"), "--kernel"]) == FAILED_CHECK

    def test_dimer_needs_two_degrees(self, document):
        assert main(["dimer", document("origami")]) == INPUT_ERROR

    def test_export_graph(self, document, tmp_path):
        target = tmp_path / "graph.dot"
        assert main(["export", document("dimer"), "--what", "graph", "--format", "dot",
                     "--output", str(target)]) == SUCCESS
        assert target.read_text().count(" -- ") == 8

    def test_export_graph_of_koszul(self, document):
        assert main(["export", document("point"), "--what", "graph", "--format", "dot"]) == INPUT_ERROR

    def test_export_supports(self, document, tmp_path):
        target = tmp_path / "S.json"
        assert main(["export", document("origami"), "--what", "S", "--output", str(target)]) == SUCCESS
        assert set(load_geometry(target.read_bytes())) == {"11", "10", "01", "00"}

    def test_perturb(self, document, tmp_path):
        target = str(tmp_path / "line.json")
        assert main(["perturb", document("line"), "--denominator", "7", "--seed", "1",
                     "--output", target]) == SUCCESS
        assert ComplexDocumentManager(target).get_placement().distinct_mod_lattice()
