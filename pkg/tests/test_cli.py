import json
import subprocess
import sys

import networkx as nx
import pytest

from cyclespec import cycle_spectrum_exact, decode_graph6, encode_graph6, extremal_graph, verify_cycle
from cyclespec.cli import EXIT_INPUT, EXIT_OK, main
from shapes import bowtie, complete, cycle, star


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def graph_file(tmp_path, *graphs, extra=()):
    path = tmp_path / "in.g6"
    path.write_text("\n".join([encode_graph6(g) for g in graphs] + list(extra)) + "\n")
    return path


class TestAnalyze:
    def test_cycle_and_extremal(self, capsys, tmp_path):
        path = graph_file(tmp_path, cycle(6), extremal_graph(14, 4))
        code, out, _ = run(capsys, "--mode", "analyze", path)
        c6, ext, foot = records(out)
        assert code == EXIT_OK
        assert c6["spectrum"] == [6] and c6["t1_applicable"] is False and c6["line"] == 1
        assert ext["s"] == 4 and ext["t1_tight"] is True
        assert foot["footer"] == {"instances": 2, "violations": 0, "seed": 0, "mode": "analyze", "errors": 0}

    def test_malformed_line_keeps_going(self, capsys, tmp_path):
        path = graph_file(tmp_path, complete(4), extra=["C"])
        code, out, _ = run(capsys, "--mode", "analyze", path)
        k4, bad, foot = records(out)
        assert code == EXIT_INPUT
        assert k4["s"] == 2 and bad["line"] == 2 and "error" in bad
        assert foot["footer"]["errors"] == 1

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(encode_graph6(star(3)) + "\n"))
        code, out, _ = run(capsys, "--mode", "analyze")
        rec = records(out)[0]
        assert code == EXIT_OK and rec["claw_free"] is False

    def test_timing_only_adds_runtime(self, capsys, tmp_path):
        path = graph_file(tmp_path, cycle(5))
        _, plain, _ = run(capsys, "--mode", "analyze", path)
        _, timed, _ = run(capsys, "--mode", "analyze", path, "--timing")
        a, b = records(plain), records(timed)
        assert a[:-1] == b[:-1]
        runtime = b[-1]["footer"].pop("runtime")
        assert runtime >= 0 and a[-1] == b[-1]


class TestGenerators:
    def test_extremal_single(self, capsys):
        code, out, _ = run(capsys, "--mode", "extremal", "--n", 14, "--delta", 4)
        assert code == EXIT_OK and decode_graph6(out.strip()) == extremal_graph(14, 4)

    def test_extremal_ranges(self, capsys):
        _, out, _ = run(capsys, "--mode", "extremal", "--n-range", "5:7", "--delta-range", "2:4")
        got = [decode_graph6(line) for line in out.split()]
        pairs = [(n, d) for d in range(2, 5) for n in range(max(5, d + 2), 8)]
        assert got == [extremal_graph(n, d) for n, d in pairs]

    def test_extremal_bad_parameters(self, capsys):
        code, _, err = run(capsys, "--mode", "extremal", "--n", 5, "--delta", 4)
        assert code == EXIT_INPUT and err.startswith("cyclespec:")
        code, _, _ = run(capsys, "--mode", "extremal", "--n", 5)
        assert code == EXIT_INPUT

    def test_sample_and_sidecar(self, capsys, tmp_path):
        out_path = tmp_path / "s.g6"
        code, _, _ = run(capsys, "--mode", "sample", "--n", 10, "--count", 4, "--seed", 3, "--out", out_path)
        lines = out_path.read_text().split()
        meta = json.loads((tmp_path / "s.g6.json").read_text())
        assert code == EXIT_OK and len(lines) == 4 and meta["seed"] == 3
        for line, m in zip(lines, meta["samples"]):
            g = decode_graph6(line)
            assert m["graph6"] == line and m["n"] == 10 and m["m"] == g.m
            h = nx.from_graph6_bytes(line.encode())
            assert sorted(h.edges()) == sorted(g.edges())
        run(capsys, "--mode", "sample", "--n", 10, "--count", 4, "--seed", 3, "--out", tmp_path / "t.g6")
        assert (tmp_path / "t.g6").read_text().split() == lines


class TestVerify:
    def test_exhaustive_small(self, capsys):
        code, out, _ = run(capsys, "--mode", "verify", "--n-range", "3:6")
        recs = records(out)
        summaries = [r["summary"] for r in recs if "summary" in r]
        assert code == EXIT_OK and [s["n"] for s in summaries] == [3, 4, 5, 6]
        foot = recs[-1]["footer"]
        assert foot["violations"] == 0 and foot["instances"] == 8 + 64 + 1024 + 32768

    def test_exhaustive_rejects_large_n(self, capsys):
        code, out, err = run(capsys, "--mode", "verify", "--n-range", "3:30")
        assert code == EXIT_INPUT and out == "" and "--sweep sampled" in err

    def test_sampled(self, capsys):
        code, out, _ = run(capsys, "--mode", "verify", "--sweep", "sampled", "--samples", 40,
                           "--n-range", "8:12", "--seed", 5)
        recs = records(out)
        assert code == EXIT_OK and recs[-1]["footer"]["instances"] == 40
        assert recs[-1]["footer"]["seed"] == 5 and recs[-1]["footer"]["sweep"] == "sampled"

    def test_workers_do_not_change_output(self, capsys):
        args = ["--mode", "verify", "--sweep", "sampled", "--samples", 600, "--n-range", "8:13", "--seed", 2]
        _, one, _ = run(capsys, *args, "--workers", 1)
        _, two, _ = run(capsys, *args, "--workers", 2)
        assert one == two

    def test_exact_limit_bounds(self, capsys):
        with pytest.raises(SystemExit):
            main(["--mode", "verify", "--exact-limit", "30"])


class TestCertify:
    def test_theorem_scale(self, capsys):
        code, out, _ = run(capsys, "--mode", "certify", "--n", 60, "--delta", 24)
        rec, foot = records(out)
        assert code == EXIT_OK and rec["certificate"]["certified_count"] == 34
        assert foot["footer"]["reached"] == 1
        g = decode_graph6(rec["graph6"])
        assert all(verify_cycle(g, e["cycle"]) for e in rec["certificate"]["entries"])

    def test_small_extremal_equals_exact(self, capsys):
        _, out, _ = run(capsys, "--mode", "certify", "--n-range", "16:16", "--delta-range", "4:8")
        for rec in records(out)[:-1]:
            g = decode_graph6(rec["graph6"])
            lengths = {e["length"] for e in rec["certificate"]["entries"]}
            assert lengths == cycle_spectrum_exact(g).lengths

    def test_from_file(self, capsys, tmp_path):
        path = graph_file(tmp_path, cycle(7), star(3))
        code, out, _ = run(capsys, "--mode", "certify", path)
        c7, claw, foot = records(out)
        assert c7["certificate"]["reached"] and c7["certificate"]["target"] == 1
        assert "claw" in claw["error"] and code == EXIT_INPUT
        assert foot["footer"]["errors"] == 1


class TestWitness:
    def test_lemma3(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--mode", "witness", "--lemma", 3, graph_file(tmp_path, bowtie()))
        path = records(out)[0]["witness"]["path"]
        assert code == EXIT_OK and sorted(path) == list(range(5))

    def test_lemma3_diagnostic(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--mode", "witness", "--lemma", 3, graph_file(tmp_path, cycle(6)))
        rec = records(out)[0]
        assert code == EXIT_INPUT and rec["diagnostic"] == [0, 2, 4]

    def test_lemma2(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--mode", "witness", "--lemma", 2, graph_file(tmp_path, complete(6)))
        w = records(out)[0]["witness"]
        assert code == EXIT_OK and len(w["cycles"]) >= 3

    def test_lemma1(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--mode", "witness", "--lemma", 1, graph_file(tmp_path, complete(6)))
        w = records(out)[0]["witness"]
        assert code == EXIT_OK and [c["length"] for c in w["cycles"]] == [3, 4, 5, 6]
        assert w["vertex"] == 0

    def test_lemma1_degree_failure(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--mode", "witness", "--lemma", 1, "--vertex", 0, graph_file(tmp_path, cycle(6)))
        rec = records(out)[0]
        assert code == EXIT_INPUT and "not more than" in rec["error"]

    def test_lemma_required(self, capsys, tmp_path):
        code, _, _ = run(capsys, "--mode", "witness", graph_file(tmp_path, cycle(4)))
        assert code == EXIT_INPUT


def test_console_script_entry():
    res = subprocess.run(
        [sys.executable, "-m", "cyclespec", "--mode", "extremal", "--n", "8", "--delta", "3"],
        capture_output=True, text=True, check=True,
    )
    assert decode_graph6(res.stdout.strip()) == extremal_graph(8, 3)
