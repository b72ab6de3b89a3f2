from arbor.cli import build_parser, main
from arbor.trees import serialize_tree


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parser_subcommands():
    parser = build_parser()
    args = parser.parse_args(["canon", "t.txt"])
    assert args.command == "canon"
    args = parser.parse_args(["conj", "t.txt", "a.txt", "b.txt", "--witness"])
    assert args.witness
    args = parser.parse_args(["reduce", "tz", "build", "-2", "2"])
    assert args.reduction == "tz" and args.tz_op == "build" and args.lo == -2
    args = parser.parse_args(["reduce", "widget", "encode", "s.txt"])
    assert args.widget_op == "encode"
    args = parser.parse_args(["selftest", "--seed", "5", "--suite", "z-line"])
    assert args.seed == 5 and args.suite == ["z-line"]


def test_canon_single_vertex(tmp_path, capsys):
    tree = write(tmp_path, "t.txt", "rooted 1\n")
    code, out, _ = run(capsys, "canon", tree)
    assert code == 0 and out.strip() == "(0|)"


def test_canon_unrooted(tmp_path, capsys):
    tree = write(tmp_path, "t.txt", "unrooted 2\n0 1\n")
    code, out, _ = run(capsys, "canon", tree)
    assert code == 0 and out.strip() == "E:(0|)(0|)"


def test_iso_and_witness(tmp_path, capsys):
    t1 = write(tmp_path, "t1.txt", "unrooted 3\n0 1\n1 2\n")
    t2 = write(tmp_path, "t2.txt", "unrooted 3\n0 2\n1 2\n")
    code, out, _ = run(capsys, "iso", t1, t2, "--witness")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "YES" and lines[1] == "aut 3"
    star = write(tmp_path, "t3.txt", "unrooted 4\n0 1\n0 2\n0 3\n")
    code, out, _ = run(capsys, "iso", t1, star)
    assert code == 0 and out.strip() == "NO"


def test_conj_yes_no_and_witness(tmp_path, capsys):
    tree = write(tmp_path, "t.txt", "unrooted 4\n0 1\n0 2\n0 3\n")
    phi = write(tmp_path, "phi.aut", "aut 4\n0 2 1 3\n")
    psi = write(tmp_path, "psi.aut", "aut 4\n0 1 3 2\n")
    cyc = write(tmp_path, "cyc.aut", "aut 4\n0 2 3 1\n")
    code, out, _ = run(capsys, "conj", tree, phi, phi)
    assert code == 0 and out.strip() == "YES"
    code, out, _ = run(capsys, "conj", tree, phi, psi, "--witness")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "YES"
    assert lines[1] == "aut 4"
    code, out, _ = run(capsys, "conj", tree, phi, cyc)
    assert code == 0 and out.strip() == "NO"


def test_orbit_tree_output(tmp_path, capsys):
    tree = write(tmp_path, "t.txt", "rooted 3\n1 0\n2 0\n")
    phi = write(tmp_path, "phi.aut", "aut 3\n0 2 1\n")
    code, out, _ = run(capsys, "orbit-tree", tree, phi)
    assert code == 0
    assert out == "rooted 2\n1 0\nlabels 1 2\n"


def test_classify_identity(tmp_path, capsys):
    from arbor import tits
    from arbor.trees import truncate_regular

    amb = truncate_regular(3, 2)
    p = tits.BallPresentation(amb, 2, tuple(range(amb.base.n)))
    ball = write(tmp_path, "ball.txt", tits.serialize_ballaut(p))
    code, out, _ = run(capsys, "classify", ball)
    assert code == 0 and out.strip() == f"Elliptic {amb.base.n}"


def test_reduce_type_a(tmp_path, capsys):
    tree = write(tmp_path, "t.txt", "unrooted 2\n0 1\n")
    phi = write(tmp_path, "phi.aut", "aut 2\n1 0\n")
    code, out, _ = run(capsys, "reduce", "type-a", tree, phi)
    assert code == 0
    assert out == "rooted 3\n1 0\n2 0\naut 3\n0 2 1\n"


def test_reduce_tz_roundtrip(tmp_path, capsys):
    zset = write(tmp_path, "a.zset", "zset -2 2 2\n-1\n2\n")
    code, out, _ = run(capsys, "reduce", "tz", "phi", "-2", "2", zset)
    assert code == 0
    aut = write(tmp_path, "phi.aut", out)
    code, out, _ = run(capsys, "reduce", "tz", "decode", "-2", "2", aut)
    assert code == 0
    assert out == "zset -2 2 2\n-1\n2\n"


def test_reduce_widget_roundtrip(tmp_path, capsys):
    f2 = write(tmp_path, "s.f2set", "f2set 1 2\ne\nb\n")
    code, out, _ = run(capsys, "reduce", "widget", "encode", f2)
    assert code == 0
    tree = write(tmp_path, "coding.txt", out)
    code, out, _ = run(capsys, "reduce", "widget", "decode", tree)
    assert code == 0
    assert out.splitlines()[0] == "f2set 1 2"
    assert set(out.splitlines()[1:]) == {"e", "b"}


def test_reduce_rooted_embed_sections(tmp_path, capsys):
    tree = write(tmp_path, "t.txt", "rooted 1\n")
    code, out, _ = run(capsys, "reduce", "rooted-embed", tree)
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("rooted ")
    assert any(ln.startswith("aut ") for ln in lines)
    assert any(ln.startswith("embed ") for ln in lines)


def test_reduce_unrooted_embed(tmp_path, capsys):
    tree = write(tmp_path, "t.txt", "unrooted 2\n0 1\n")
    code, out, _ = run(capsys, "reduce", "unrooted-embed", tree, "--degree", "3", "--radius", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("unrooted ")
    assert "embed 2" in lines
    code, out, _ = run(capsys, "reduce", "unrooted-embed", tree, "--degree", "omega", "--radius", "2", "--width", "2")
    assert code == 0


def test_reduce_height_inv(tmp_path, capsys):
    from arbor.trees import build_uniform_rooted

    t, _ = build_uniform_rooted(1, 3)
    tree = write(tmp_path, "t.txt", serialize_tree(t))
    phi = write(tmp_path, "phi.aut", "aut 4\n0 2 3 1\n")
    code, out, _ = run(capsys, "reduce", "height-inv", tree, phi)
    assert code == 0 and out.strip() == "((3, 1),)"


def test_error_paths(tmp_path, capsys):
    bad = write(tmp_path, "bad.txt", "rooted 3\n1 0\n2 2\n")
    code, out, err = run(capsys, "canon", bad)
    assert code == 2 and "error:" in err and out == ""
    code, out, err = run(capsys, "canon", str(tmp_path / "missing.txt"))
    assert code == 2 and "error:" in err


def test_selftest_cli(tmp_path, capsys):
    code, out, _ = run(
        capsys, "selftest", "--seed", "3", "--size-bound", "4", "--samples", "3",
        "--suite", "z-line", "--suite", "type-a-transfer",
    )
    assert code == 0
    assert "suite z-line: cases=3 failures=0" in out
    assert "result: PASS" in out
    code, out, _ = run(capsys, "selftest", "--list-suites")
    assert code == 0 and "canon-complete" in out


def test_selftest_env_seed(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ARBOR_SEED", "99")
    code, out, _ = run(capsys, "selftest", "--samples", "2", "--suite", "z-line")
    assert code == 0 and "seed=99" in out
    code, out2, _ = run(capsys, "selftest", "--samples", "2", "--suite", "z-line", "--seed", "4")
    assert code == 0 and "seed=4" in out2


def test_selftest_config_errors(capsys):
    code, out, err = run(capsys, "selftest", "--size-bound", "0")
    assert code == 2 and "error:" in err


def test_selftest_reports_are_byte_identical():
    from arbor.selftest import RunConfig, run_selftest

    cfg = RunConfig(seed=12, size_bound=5, sample_count=8)
    names = ["rooted-embedding", "widget-coding", "z-line"]
    assert run_selftest(cfg, names).text() == run_selftest(cfg, names).text()
