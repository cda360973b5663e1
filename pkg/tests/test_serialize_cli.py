import json

import pytest

from enrichkit.cli import main
from enrichkit.errors import DanglingReference, ParseError
from enrichkit.serialize import dumps, load, loads


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("corpus")
    assert main(["corpus", str(out)]) == 0
    return out


def test_round_trip_byte_stability(corpus_dir):
    for name in ("bool2", "bool3", "zmod3"):
        path = corpus_dir / f"{name}.json"
        original = path.read_text()
        assert dumps(load(path)) == original


def test_empty_document_is_parse_error():
    with pytest.raises(ParseError):
        loads("")
    with pytest.raises(ParseError):
        loads("{}")


def test_dangling_reference(corpus_dir):
    doc = json.loads((corpus_dir / "bool2.json").read_text())
    doc["vfunctors"]["bad"] = {"source": "P", "target": "NOWHERE",
                               "obj_map": {}, "hom_map": []}
    with pytest.raises(DanglingReference):
        loads(json.dumps(doc))


def test_unknown_base_id_is_dangling(corpus_dir):
    doc = json.loads((corpus_dir / "bool2.json").read_text())
    doc["vcategories"]["P"]["hom"][0][2] = "ghost"
    with pytest.raises(DanglingReference):
        loads(json.dumps(doc))


def test_check_exit_codes(corpus_dir, tmp_path, capsys):
    assert main(["check", str(corpus_dir / "bool2.json")]) == 0
    capsys.readouterr()
    assert main(["check", str(tmp_path / "missing.json")]) == 2
    garbage = tmp_path / "garbage.json"
    garbage.write_text("not json")
    assert main(["check", str(garbage)]) == 2
    capsys.readouterr()


def test_mutated_pentagon_exits_one(corpus_dir, tmp_path, capsys):
    doc = json.loads((corpus_dir / "bool2.json").read_text())
    for row in doc["base"]["assoc"]["1"]:
        if row[:3] == ["top", "top", "top"]:
            row[3] = "u"
    mutated = tmp_path / "mutated.json"
    mutated.write_text(json.dumps(doc))
    assert main(["check", str(mutated), "--level", "base"]) == 1
    out = capsys.readouterr().out
    assert "pentagon" in out and "FAIL" in out


def test_machine_format(corpus_dir, capsys):
    assert main(["check", str(corpus_dir / "zmod3.json"), "--machine"]) == 0
    out = capsys.readouterr().out
    records = [json.loads(line) for line in out.splitlines()]
    assert all(r["kind"] in ("family", "note", "warning") for r in records)
    hexagons = [r for r in records if r["family"].startswith("hexagon")]
    assert hexagons and hexagons[0]["status"] == "pass"


def test_vacuous_hexagon_reported(corpus_dir, capsys):
    # Two tensors: the hexagonal condition has no instances and says so.
    assert main(["check", str(corpus_dir / "bool2.json"), "--machine",
                 "--level", "base"]) == 0
    out = capsys.readouterr().out
    records = [json.loads(line) for line in out.splitlines()]
    hexagons = [r for r in records if r["family"] == "hexagon"]
    assert hexagons and hexagons[0]["status"] == "vacuous"
    assert hexagons[0]["checked"] == 0


def test_all_witnesses_flag(corpus_dir, tmp_path, capsys):
    doc = json.loads((corpus_dir / "bool2.json").read_text())
    for row in doc["base"]["interchange"]["1,2"]:
        if row[:4] == ["top", "top", "top", "top"]:
            row[4] = "u"
    mutated = tmp_path / "eta.json"
    mutated.write_text(json.dumps(doc))
    assert main(["check", str(mutated), "--level", "base"]) == 1
    brief = capsys.readouterr().out
    assert main(["check", str(mutated), "--level", "base",
                 "--all-witnesses"]) == 1
    full = capsys.readouterr().out
    # Same failing families either way; the flag only widens the scan, and
    # the first witness per family is identical.
    assert brief.count("FAIL") == full.count("FAIL")
    first_brief = [l for l in brief.splitlines() if "FAIL" in l][0]
    first_full = [l for l in full.splitlines() if "FAIL" in l][0]
    assert first_brief == first_full


def test_reports_deterministic(corpus_dir, capsys):
    main(["check", str(corpus_dir / "bool2.json")])
    first = capsys.readouterr().out
    main(["check", str(corpus_dir / "bool2.json")])
    second = capsys.readouterr().out
    assert first == second
    main(["check", str(corpus_dir / "bool2.json"), "--workers", "4"])
    parallel = capsys.readouterr().out
    assert parallel == first


def test_construct_product(corpus_dir, tmp_path, capsys):
    out = tmp_path / "constructed.json"
    assert main(["construct", str(corpus_dir / "bool2.json"), "product-vcat",
                 "--index", "1", "--inputs", "P", "P", "--name", "PP",
                 "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["check", str(out)]) == 0
    capsys.readouterr()
    tower = load(out)
    assert "PP" in tower.vcategories


def test_construct_hcomp_mods(corpus_dir, tmp_path, capsys):
    out = tmp_path / "hm.json"
    assert main(["construct", str(corpus_dir / "bool2.json"), "hcomp-mods",
                 "--inputs", "stay", "rise", "--name", "hm",
                 "--out", str(out)]) == 0
    capsys.readouterr()
    tower = load(out)
    assert "hm" in tower.modifications
    assert main(["check", str(out)]) == 0
    capsys.readouterr()


def test_construct_from_symmetric(corpus_dir, tmp_path, capsys):
    out = tmp_path / "sym3.json"
    assert main(["construct", str(corpus_dir / "bool2.json"), "from-symmetric",
                 "--index", "3", "--name", "ignored", "--out", str(out)]) == 0
    capsys.readouterr()
    tower = load(out)
    assert tower.base.n == 3
    assert main(["check", str(out)]) == 0
    capsys.readouterr()


def test_construct_wrong_level_fails(corpus_dir, tmp_path, capsys):
    assert main(["construct", str(corpus_dir / "bool2.json"), "product-vcat",
                 "--index", "1", "--inputs", "q_one", "q_one",
                 "--name", "bad", "--out", str(tmp_path / "x.json")]) == 1
    err = capsys.readouterr().err
    assert "construction failed" in err


def test_construct_unknown_name(corpus_dir, tmp_path, capsys):
    assert main(["construct", str(corpus_dir / "bool2.json"), "no-such-op",
                 "--out", str(tmp_path / "x.json")]) == 2
    capsys.readouterr()


def test_fuzz_subcommand(capsys):
    assert main(["fuzz", "--level", "vcategory", "--count", "2",
                 "--seed", "3", "--base", "zmod3"]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 2


def test_check_with_fuzz_flag(corpus_dir, capsys):
    assert main(["check", str(corpus_dir / "zmod3.json"),
                 "--seed", "1", "--fuzz", "1"]) == 0
    out = capsys.readouterr().out
    assert "fuzz[0]" in out
