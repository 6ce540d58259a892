import subprocess
import sys
from pathlib import Path

import pytest

from shiftequiv import formats
from shiftequiv.catalog import EX_AE, EX_R, EX_S
from shiftequiv.cli import main
from shiftequiv.graphs import vertex_matrix
from shiftequiv.matrices import NonNegIntMatrix, block_bipartite, matrix

FIX = Path(__file__).resolve().parent.parent / "fixtures"
EX = FIX / "example"
SINKS = FIX / "sinks"
TOEP = FIX / "toeplitz"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write_mat(tmp_path, name, a):
    p = tmp_path / name
    p.write_text(formats.dumps_matrix(a))
    return p


def test_verify_esse_example(capsys):
    code, out, _ = run(capsys, "verify-esse", "--a", EX / "AE.mat", "--b", EX / "AF.mat",
                       "--r", EX / "R.mat", "--s", EX / "S.mat")
    assert code == 0
    assert out == "RS=A: ok, SR=B: ok\n"


def test_verify_esse_manifest(capsys):
    assert run(capsys, "verify-esse", TOEP / "witness.esse")[0] == 0


def test_verify_esse_mismatch(capsys, tmp_path):
    a = write_mat(tmp_path, "I2.mat", NonNegIntMatrix.identity(2))
    b = write_mat(tmp_path, "I3.mat", NonNegIntMatrix.identity(3))
    r = write_mat(tmp_path, "R.mat", NonNegIntMatrix.zeros(2, 3))
    s = write_mat(tmp_path, "S.mat", NonNegIntMatrix.zeros(3, 2))
    code, out, _ = run(capsys, "verify-esse", "--a", a, "--b", b, "--r", r, "--s", s)
    assert code == 1
    assert "RS=A: FAIL at (1,1): got 0, expected 1" in out


def test_verify_esse_usage_errors(capsys):
    code, _, err = run(capsys, "verify-esse", "--a", EX / "AE.mat")
    assert code == 2 and "missing" in err
    code, _, err = run(capsys, "verify-esse", "--a", EX / "AE.mat", "--b", EX / "AF.mat",
                       "--r", EX / "S.mat", "--s", EX / "R.mat")
    assert code == 2 and "R must be" in err


def test_unknown_command_and_bad_flags(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["traces", str(EX / "AE.mat"), "--kmax", "many"])
    assert info.value.code == 2


def test_parse_error_names_line(capsys, tmp_path):
    bad = tmp_path / "bad.mat"
    bad.write_text("1 2\n1 -1\n")
    code, _, err = run(capsys, "traces", bad)
    assert code == 2 and f"{bad}:2" in err and "negative" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "vmatrix", tmp_path / "nope.graph")
    assert code == 2 and "No such file" in err


def test_overflow_is_an_input_error(capsys, tmp_path):
    big = write_mat(tmp_path, "big.mat", matrix([[2**62, 2**62], [0, 0]]))
    code, _, err = run(capsys, "mul", big, big)
    assert code == 2


def test_mul_and_traces(capsys):
    code, out, _ = run(capsys, "mul", EX / "R.mat", EX / "S.mat")
    assert code == 0 and formats.loads_matrix(out) == EX_AE
    code, out, _ = run(capsys, "traces", EX / "AF.mat", "--kmax", "2")
    assert out == "tr(A^1)=2\ntr(A^2)=2\n"


def test_find_esse(capsys):
    code, out, _ = run(capsys, "find-esse", "--a", EX / "AE.mat", "--b", EX / "AF.mat", "--bound", "1")
    assert code == 0
    assert out == "# R\n" + formats.dumps_matrix(EX_R) + "# S\n" + formats.dumps_matrix(EX_S)


def test_find_esse_none_and_limit(capsys, tmp_path):
    three = write_mat(tmp_path, "three.mat", matrix([[3]]))
    code, out, _ = run(capsys, "find-esse", "--a", EX / "AE.mat", "--b", three, "--bound", "3")
    assert code == 1 and "trace obstruction" in out and "none" in out
    code, out, _ = run(capsys, "find-esse", "--a", TOEP / "AF.mat", "--b", TOEP / "AE.mat",
                       "--bound", "3", "--max-nodes", "10")
    assert code == 3 and "gave up" in out


def test_chain(capsys, tmp_path):
    code, out, _ = run(capsys, "chain", EX / "roundtrip.chain")
    assert code == 0 and "ok" in out
    for name in ("AE.mat", "AF.mat", "R.mat"):
        (tmp_path / name).write_text((EX / name).read_text())
    write_mat(tmp_path, "S.mat", matrix([[1, 0], [0, 1], [1, 0]]))
    (tmp_path / "c.chain").write_text("matrix AE.mat\nmatrix AF.mat\nwitness R.mat S.mat\n")
    code, out, _ = run(capsys, "chain", tmp_path / "c.chain")
    assert code == 1 and out.startswith("witness 1:")


def test_inflate_rect_vmatrix(capsys, tmp_path):
    out_path = tmp_path / "g.graph"
    code, _, _ = run(capsys, "inflate", "--r", EX / "R.mat", "--s", EX / "S.mat",
                     "--rows", "v,w", "--cols", "x,y,z", "-o", out_path)
    assert code == 0
    g = formats.read_graph(out_path)
    assert vertex_matrix(g) == block_bipartite(EX_R, EX_S)
    assert out_path.read_text() == (EX / "GRS.graph").read_text()
    code, out, _ = run(capsys, "vmatrix", out_path)
    assert formats.loads_matrix(out) == block_bipartite(EX_R, EX_S)
    code, out, _ = run(capsys, "rect", "--r", EX / "R.mat", "--rows", "v,w", "--cols", "x,y,z")
    assert code == 0 and len(formats.loads_graph(out).edges) == 3
    code, _, err = run(capsys, "rect", "--r", EX / "R.mat", "--rows", "v,w", "--cols", "v,y,z")
    assert code == 2 and "collide" in err


def test_frommatrix(capsys):
    code, out, _ = run(capsys, "frommatrix", EX / "AE.mat", "--names", "v,w")
    assert out == "vertex v\nvertex w\nedge e:v->v#1 v v\nedge e:v->w#1 v w\nedge e:w->w#1 w w\n"


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", EX / "E.graph")
    assert code == 0
    assert out == ("sinks={}\nsources={}\nreturn_paths v=1\nreturn_paths w=1\n"
                   "condition_k=false\nrow_finite=true\n")
    code, out, _ = run(capsys, "analyze", TOEP / "Etilde.graph")
    assert "sinks={v', w'}" in out and "return_paths v=>=2" in out and "condition_k=true" in out


def test_ideals_etilde(capsys):
    code, out, _ = run(capsys, "ideals", TOEP / "Etilde.graph")
    assert code == 0
    assert out == ("{}\n{v'}\n{w'}\n{w, w'}\n{v', w'}\n{w, v', w'}\n"
                   "proper_with_empty=6\nproper_nonzero=5\nsimple=false\n")
    assert run(capsys, "ideals", "--brute-force", TOEP / "Etilde.graph")[1] == out


def test_ideals_sinks(capsys):
    out = run(capsys, "ideals", SINKS / "E2.graph")[1]
    assert out == "{}\nproper_with_empty=1\nproper_nonzero=0\nsimple=true\n"


def test_toeplitz(capsys):
    code, out, _ = run(capsys, "toeplitz", TOEP / "E.graph")
    assert code == 0 and out == (TOEP / "Etilde.graph").read_text()


def test_corners(capsys):
    code, out, _ = run(capsys, "corners", "--r", EX / "R.mat", "--s", EX / "S.mat",
                       "--rows", "v,w", "--cols", "x,y,z")
    assert code == 0
    assert out == (
        "# E corner {v, w}\n"
        "e:v->v#1 -> r:v->x#1.s:x->v#1\n"
        "e:v->w#1 -> r:v->y#1.s:y->w#1\n"
        "e:w->w#1 -> r:w->z#1.s:z->w#1\n"
        "# F corner {x, y, z}\n"
        "e:x->x#1 -> s:x->v#1.r:v->x#1\n"
        "e:x->y#1 -> s:x->v#1.r:v->y#1\n"
        "e:y->z#1 -> s:y->w#1.r:w->z#1\n"
        "e:z->z#1 -> s:z->w#1.r:w->z#1\n"
    )


def test_verdict(capsys):
    code, out, _ = run(capsys, "verdict", "--e", EX / "E.graph", "--f", EX / "F.graph",
                       "--r", EX / "R.mat", "--s", EX / "S.mat")
    assert code == 0 and "conclusion=morita-equivalent-via-inflation" in out
    code, out, _ = run(capsys, "verdict", "--e", SINKS / "E1.graph", "--f", SINKS / "E2.graph",
                       "--r", SINKS / "R.mat", "--s", SINKS / "S.mat")
    assert code == 1
    assert "esse_verified=true" in out and "conclusion=theorem-not-applicable" in out
    assert "obstruction: E has sinks v, x" in out


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "shiftequiv", "ideals", str(TOEP / "Ftilde.graph")]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.decode().endswith("proper_with_empty=12\nproper_nonzero=11\nsimple=false\n")
