"""End-to-end runs of the command line against frozen outputs.

Every invocation goes through main(argv), so exit codes and streams are
asserted exactly as a shell harness would see them.
"""

import io
import json

import pytest

from tphi.cli import main
from tphi.homology import format_homology, homology_groups
from tphi.mccord import finite_space_homology
from tphi.models import build_tphi_power
from tphi.phased import parse_gp_file
from tphi.poset import format_poset_file, parse_poset_file
from tphi.simplicial import order_complex, parse_complex_lines

CHAIN_FILE = "elem a\nelem b\nelem c\nrel a < b\nrel b < c\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hfcalc_full_circle(capsys):
    code, out, _ = run(capsys, "hfcalc", "0/1 + 1/2")
    assert code == 0
    assert out == "FULL +0\n"


def test_hfcalc_plain_arc(capsys):
    code, out, _ = run(capsys, "hfcalc", "0/1 + 1/4")
    assert code == 0
    assert out == "[0/1,1/4]\n"


def test_hfcalc_json(capsys):
    code, out, _ = run(capsys, "hfcalc", "0/1 + 1/2", "--format", "json-lines")
    assert code == 0
    assert json.loads(out) == {"sum": "FULL +0", "contains_zero": True}


def test_hfcalc_bad_value(capsys):
    code, _, err = run(capsys, "hfcalc", "0/1 + banana")
    assert code == 2
    assert err.startswith("error:")


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2


def test_gp_check_zero_function(tmp_path, capsys):
    f = tmp_path / "zero.gp"
    f.write_text("2 1\n")
    code, out, _ = run(capsys, "gp-check", str(f))
    assert code == 1
    assert "not identically zero" in out


def test_gp_check_good_function(tmp_path, capsys):
    f = tmp_path / "ok.gp"
    f.write_text("3 2\n1 2 : 0/1\n1 3 : 0/1\n2 3 : 0/1\n")
    code, out, _ = run(capsys, "gp-check", str(f))
    assert code == 0
    assert out == "ok: all exchange relations hold\n"
    code, out, _ = run(capsys, "gp-check", str(f), "--all-tuples")
    assert code == 0


def test_gp_check_failing_function(tmp_path, capsys):
    # two disjoint supports: no exchange term can be non-degenerate twice
    f = tmp_path / "bad.gp"
    f.write_text("4 2\n1 2 : 0/1\n3 4 : 0/1\n")
    code, out, _ = run(capsys, "gp-check", str(f))
    assert code == 1
    assert out == "fail: exchange relation failed at xs=1,2,3 ys=4\n"
    code, out, _ = run(capsys, "gp-check", str(f), "--format", "json-lines")
    assert code == 1
    obj = json.loads(out)
    assert obj["ok"] is False
    assert list(obj) == ["ok", "reason", "xs", "ys"]


def test_gp_check_missing_file(capsys):
    code, _, err = run(capsys, "gp-check", "/nonexistent/file.gp")
    assert code == 2
    assert err.startswith("error:")


def test_gp_enum_count_and_determinism(capsys):
    code, out1, _ = run(capsys, "gp-enum", "--n", "3", "--r", "2", "--k", "2")
    assert code == 0
    assert out1.splitlines()[-1] == "count: 13"
    code, out2, _ = run(capsys, "gp-enum", "--n", "3", "--r", "2", "--k", "2")
    assert out1 == out2


def test_gp_enum_cap(capsys):
    code, _, err = run(
        capsys, "gp-enum", "--n", "5", "--r", "2", "--k", "2", "--cap", "100"
    )
    assert code == 2
    assert "cap" in err


def test_transversal_pairs(capsys):
    code, out, _ = run(capsys, "transversal", "--n", "3", "--r", "2")
    assert code == 0
    assert out == "1 2\n1 3\n2 3\nsize: 3\nincreasing-tuples: 3\n"


def test_transversal_even_permutations(capsys):
    code, out, _ = run(capsys, "transversal", "--n", "3", "--r", "3")
    assert code == 0
    assert out == "1 2 3\n2 3 1\n3 1 2\nsize: 3\nincreasing-tuples: 1\n"


def test_transversal_json(capsys):
    code, out, _ = run(
        capsys, "transversal", "--n", "3", "--r", "2", "--format", "json-lines"
    )
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert rows[:-1] == [{"tuple": [1, 2]}, {"tuple": [1, 3]}, {"tuple": [2, 3]}]
    assert rows[-1] == {"size": 3, "increasing_tuples": 3}


def test_poset_check_plain_and_mirrored(tmp_path, capsys):
    f = tmp_path / "chain.poset"
    f.write_text(CHAIN_FILE)
    code, out, _ = run(capsys, "poset-check", str(f))
    assert code == 0
    assert out == "poset: ok\n"

    g = tmp_path / "power.poset"
    g.write_text(format_poset_file(build_tphi_power(2, 2)))
    code, out, _ = run(capsys, "poset-check", str(g))
    assert code == 0
    assert out == "mirror: ok\ngeometric: ok\n"


def test_poset_check_detects_broken_mirror(tmp_path, capsys):
    f = tmp_path / "bad.poset"
    f.write_text(
        "elem a\nelem b\nrel a < b\n"
        "index\nelem 1\nelem 2\nrel 1 < 2\n"
        "mirror a -> 2\nmirror b -> 1\n"
    )
    code, out, _ = run(capsys, "poset-check", str(f))
    assert code == 1
    assert "mirror: FAIL" in out


def test_poset_check_malformed_file(tmp_path, capsys):
    f = tmp_path / "junk.poset"
    f.write_text("elem a\nwhat is this\n")
    code, _, err = run(capsys, "poset-check", str(f))
    assert code == 2
    assert err.startswith("error:")


def test_order_complex_chain(tmp_path, capsys):
    f = tmp_path / "chain.poset"
    f.write_text(CHAIN_FILE)
    code, out, _ = run(capsys, "order-complex", str(f))
    assert code == 0
    assert out == "a\na b\na b c\na c\nb\nb c\nc\n"


def test_order_complex_rejects_json(tmp_path, capsys):
    f = tmp_path / "chain.poset"
    f.write_text(CHAIN_FILE)
    code, _, err = run(capsys, "order-complex", str(f), "--format", "json-lines")
    assert code == 2
    assert "json-lines" in err


def test_order_complex_cap(tmp_path, capsys):
    f = tmp_path / "chain.poset"
    f.write_text(CHAIN_FILE)
    code, _, err = run(capsys, "order-complex", str(f), "--cap", "3")
    assert code == 2
    assert "cap" in err


def test_homology_from_file_and_reduced(tmp_path, capsys):
    f = tmp_path / "circle.cx"
    f.write_text("a b\nb c\na c\n")
    code, out, _ = run(capsys, "homology", str(f))
    assert code == 0
    assert out == "H_0 = Z^1\nH_1 = Z^1\n"
    code, out, _ = run(capsys, "homology", str(f), "--reduced")
    assert out == "H~_0 = 0\nH~_1 = Z^1\n"


def test_homology_json(tmp_path, capsys):
    f = tmp_path / "circle.cx"
    f.write_text("a b\nb c\na c\n")
    code, out, _ = run(capsys, "homology", str(f), "--format", "json-lines")
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert rows == [
        {"dim": 0, "betti": 1, "torsion": []},
        {"dim": 1, "betti": 1, "torsion": []},
    ]


def test_round_trip_matches_in_process(tmp_path, capsys, monkeypatch):
    mp = build_tphi_power(2, 2)
    f = tmp_path / "p22.poset"
    f.write_text(format_poset_file(mp))
    code, complex_text, _ = run(capsys, "order-complex", str(f))
    assert code == 0

    monkeypatch.setattr("sys.stdin", io.StringIO(complex_text))
    code, out, _ = run(capsys, "homology", "-", "--reduced")
    assert code == 0
    in_process = homology_groups(order_complex(mp.poset), reduced=True)
    assert out == "".join(line + "\n" for line in format_homology(in_process))
    # and the parsed stream is the same complex
    assert parse_complex_lines(complex_text) == order_complex(mp.poset)


def test_mccord_verify_table(tmp_path, capsys):
    f = tmp_path / "chain.poset"
    f.write_text(CHAIN_FILE)
    code, out, _ = run(capsys, "mccord-verify", str(f))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a  cone-apex  7"
    assert lines[3] == "verdict: all basic opens certified contractible"
    assert lines[4] == "H_0 = Z^1"


def test_mccord_verify_json(tmp_path, capsys):
    f = tmp_path / "p22.poset"
    f.write_text(format_poset_file(build_tphi_power(2, 2)))
    code, out, _ = run(capsys, "mccord-verify", str(f), "--format", "json-lines")
    assert code == 0
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert len(rows) == 9
    assert all(r["certificate"] == "cone-apex" for r in rows[:-1])
    assert rows[-1]["homology"] == ["H_0 = Z^1", "H_1 = Z^1"]


def test_cw_report_chain_and_obstructed(tmp_path, capsys):
    f = tmp_path / "chain.poset"
    f.write_text(CHAIN_FILE)
    code, out, _ = run(capsys, "cw-report", str(f))
    assert code == 0
    assert out == "component a b c: contractible\nverdict: CW type\n"

    g = tmp_path / "p22.poset"
    g.write_text(format_poset_file(build_tphi_power(2, 2)))
    code, out, _ = run(capsys, "cw-report", str(g))
    assert code == 1
    assert out.endswith("verdict: obstructed\n")


def test_model_build_power_round_trip(capsys):
    code, out, _ = run(capsys, "model-build", "--family", "power", "--n", "2", "--k", "2")
    assert code == 0
    assert out == format_poset_file(build_tphi_power(2, 2))
    parsed = parse_poset_file(out)
    assert finite_space_homology(parsed.poset).betti(1) == 1


def test_model_build_perp_caveat_on_stderr(capsys):
    code, out, err = run(
        capsys, "model-build", "--family", "perp", "--n", "2", "--k", "4", "0/1,0/1"
    )
    assert code == 0
    assert "finite snapshot" in err
    assert "empty strata pruned from the index chain: 1" in err
    parsed = parse_poset_file(out)
    assert len(parsed.poset) == 4
    assert parsed.poset.covers() == []


def test_model_build_grassmannian_stream(capsys):
    code, out, _ = run(
        capsys, "model-build", "--family", "grassmannian", "--n", "3", "--r", "2",
        "--k", "2",
    )
    assert code == 0
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 13
    for b in blocks:
        phi = parse_gp_file(b)
        assert phi.n == 3 and phi.r == 2


def test_model_build_rejects_json(capsys):
    code, _, err = run(
        capsys, "model-build", "--family", "power", "--n", "2", "--k", "2",
        "--format", "json-lines",
    )
    assert code == 2
    assert "json-lines" in err


def test_model_build_validates_spec(capsys):
    code, _, err = run(capsys, "model-build", "--family", "perp", "--n", "2", "--k", "2")
    assert code == 2
    assert "constraint" in err


def test_byte_identical_reruns(tmp_path, capsys):
    f = tmp_path / "p22.poset"
    f.write_text(format_poset_file(build_tphi_power(2, 2)))
    outs = set()
    for _ in range(3):
        code, out, _ = run(capsys, "mccord-verify", str(f))
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
