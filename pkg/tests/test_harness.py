import json
import subprocess
import sys

import pytest

from paraglider import atlas
from paraglider.graph import from_graph6, to_graph6
from paraglider.harness import campaigns
from paraglider.harness.cli import main, read_config
from paraglider.errors import InputError
from paraglider.oracle import verify_coloring


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def sections(text):
    return [ln.split()[1] for ln in text.splitlines() if ln.startswith("### ")]


def test_check_reports_certificates(capsys):
    rc, out, _ = run_cli(capsys, "check", "atlas:P5", "atlas:paraglider", "Dhc")
    assert rc == 0
    assert sections(out) == ["campaign", "records", "violations", "end"]
    rows = [ln.split("\t") for ln in out.splitlines() if ln.startswith(("atlas:", "Dhc"))]
    assert rows[0][2] == "False" and rows[0][4] == "PATTERN P5: 0 1 2 3 4"
    assert rows[1][4].startswith("PATTERN paraglider:")
    assert rows[2][2] == "True"


def test_check_json(capsys):
    rc, out, _ = run_cli(capsys, "check", "--json", "atlas:C5")
    blob = json.loads(out)
    assert rc == 0 and blob["ok"] and blob["records"][0]["member"] is True


def test_bad_input_exit_code(capsys):
    rc, _, err = run_cli(capsys, "check", "D!!")
    assert rc == 2 and "error" in err
    rc, _, _ = run_cli(capsys, "color", "atlas:P5")
    assert rc == 2
    rc, _, _ = run_cli(capsys, "check", "atlas:nope")
    assert rc == 2
    rc, _, _ = run_cli(capsys, "bogus")
    assert rc == 2
    rc, _, _ = run_cli(capsys, "sweep", "--n-max", "11")
    assert rc == 2


def test_color_output(capsys):
    rc, out, _ = run_cli(capsys, "color", "--json", "--trace", "atlas:G_6", "atlas:clebsch_complement")
    assert rc == 0
    recs = json.loads(out)["records"]
    assert [(r["omega"], r["k"], r["bound"]) for r in recs] == [(7, 9, 11), (5, 8, 8)]
    for r, tag, rule in zip(recs, ("G_6", "clebsch_complement"), ("HMember", "SmallAtom")):
        assert verify_coloring(atlas.make_named(tag), r["colors"])
        assert [st["rule"] for st in r["trace"]] == [rule]


def test_verify_base(capsys, tmp_path):
    rc, out, err = run_cli(capsys, "verify-base", "--plot-dir", str(tmp_path))
    assert rc == 0 and "none" in out
    assert (tmp_path / "verify_base.png").stat().st_size > 0 and "figure:" in err


def test_family(capsys, tmp_path):
    rc, out, _ = run_cli(capsys, "family", "--k-max", "6", "--oracle-max", "5", "--plot-dir", str(tmp_path))
    assert rc == 0 and (tmp_path / "family.png").exists()
    rc, out, _ = run_cli(capsys, "family", "--json", "--k-max", "5", "--oracle-max", "5")
    recs = json.loads(out)["records"]
    assert [r.get("chi") for r in recs if r["k"] <= 5] == [3, 5, 6, 8]


def test_sweep_stream_with_parse_error(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("Dhc\n\nD!!\nD~{\nDhc\n")
    rc, out, _ = run_cli(capsys, "sweep", "--json", str(f))
    blob = json.loads(out)
    assert rc == 1
    assert [r["line"] for r in blob["records"]] == [1, 3, 4, 5]
    assert [r["status"] for r in blob["records"]] == ["member", "parse_error", "member", "member"]
    assert len(blob["violations"]) == 1 and blob["violations"][0].startswith("line 3")


def test_sweep_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(">>graph6<<\n>>graph6<<Dhc\nDhc\n" + to_graph6(atlas.path(5)) + "\n"))
    rc, out, _ = run_cli(capsys, "sweep", "--json", "-")
    blob = json.loads(out)
    assert rc == 0 and blob["summary"]["member"] == 2 and blob["summary"]["non_member"] == 1


def test_sweep_too_large(capsys, tmp_path):
    f = tmp_path / "big.g6"
    f.write_text(to_graph6(atlas.clebsch_complement()) + "\n")
    rc, out, _ = run_cli(capsys, "sweep", "--json", str(f))
    assert rc == 0 and json.loads(out)["records"][0]["status"] == "too_large"


def test_jobs_do_not_change_results():
    lines = campaigns.corpus_lines(6)
    a = campaigns.cmd_sweep(lines, 6, jobs=1)
    b = campaigns.cmd_sweep(lines, 6, jobs=2)
    assert a.fingerprint() == b.fingerprint()
    assert a.summary["member"] == 1 + 2 + 4 + 11 + 32 + 118
    c = campaigns.cmd_sweep_random(12, 12, seed=3, jobs=1)
    d = campaigns.cmd_sweep_random(12, 12, seed=3, jobs=2)
    assert c.ok and c.fingerprint() == d.fingerprint()


def test_random_sweep_seeded(capsys, tmp_path):
    rc, out, _ = run_cli(capsys, "sweep", "--random", "6", "--seed", "5", "--n-max", "14", "--plot-dir", str(tmp_path))
    assert rc == 0 and (tmp_path / "sweep-random.png").exists()
    rc2, out2, _ = run_cli(capsys, "sweep", "--random", "6", "--seed", "5", "--n-max", "14", "--json")
    rc3, out3, _ = run_cli(capsys, "sweep", "--random", "6", "--seed", "5", "--n-max", "14", "--json")
    strip = lambda s: [{k: v for k, v in r.items() if k != "seconds"} for r in json.loads(s)["records"]]
    assert strip(out2) == strip(out3)


def test_corpus_dir_env(monkeypatch, tmp_path):
    (tmp_path / "graphs3.g6").write_text("Bw\n")
    monkeypatch.setenv(campaigns.CORPUS_ENV, str(tmp_path))
    assert campaigns.corpus_dir() == tmp_path


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\njson = true\nn-max = 5\n")
    assert read_config(str(cfg)) == {"json": True, "n_max": 5}
    rc, out, _ = run_cli(capsys, "sweep", "--config", str(cfg))
    blob = json.loads(out)
    assert rc == 0 and blob["summary"]["lines"] == 1 + 2 + 4 + 11 + 34
    rc, out, _ = run_cli(capsys, "sweep", "--config", str(cfg), "--n-max", "4")
    assert json.loads(out)["summary"]["lines"] == 18
    cfg.write_text("colour = red\n")
    with pytest.raises(InputError):
        read_config(str(cfg))
    rc, _, _ = run_cli(capsys, "sweep", "--config", str(cfg))
    assert rc == 2


def test_atlas_dump(capsys):
    rc, out, _ = run_cli(capsys, "atlas", "dump", "C5", "G_3")
    assert rc == 0 and out.splitlines()[0] == "Dhc\tC5"
    rc, out, _ = run_cli(capsys, "atlas", "dump", "--json")
    entries = [json.loads(ln) for ln in out.splitlines()]
    assert any(e["tag"] == "clebsch_complement" and e["n"] == 16 for e in entries)
    for e in entries:
        assert from_graph6(e["graph6"]).n == e["n"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "paraglider", "check", "Dhc"], capture_output=True, text=True)
    assert res.returncode == 0 and "### end check" in res.stdout
