import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicat.cli.main import run
from bicat.cli.schema import dumps, loads, parse, serialize
from bicat.core import chaotic, deloop_monoid, cyclic_group, two_group_z2
from bicat.errors import SchemaError
from bicat.fixtures import FUNCTORS
from bicat.quillen import check_certificate, quillen_a, whitehead
from bicat.slice import lax_slice


def write(path, kind, value):
    path.write_text(serialize(kind, value))
    return str(path)


def test_round_trip_bicategories(accepted):
    for B in accepted.values():
        text = serialize("bicategory", B)
        kind, back = parse(text)
        assert kind == "bicategory" and back == B
        assert serialize(kind, back) == text


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=1, max_value=4))
def test_round_trip_is_canonical(n):
    B = deloop_monoid(cyclic_group(n))
    text = serialize("bicategory", B)
    assert text.endswith("\n")
    assert json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n" == text


def test_round_trip_other_kinds(functors):
    for F in functors.values():
        assert parse(serialize("functor", F))[1] == F
    result = quillen_a(functors["F_lax"])
    for kind, value in (("transformation", result.eta), ("transformation", result.eps)):
        assert parse(serialize(kind, value))[1] == value
    text = serialize("terminal-data", result.terminal)
    assert serialize("terminal-data", parse(text)[1]) == text


def test_certificate_pipeline(functors):
    cert = whitehead(functors["F_collapse"])
    kind, back = parse(serialize("certificate", cert))
    assert kind == "certificate"
    assert check_certificate(back).ok


def _payload(B):
    return json.loads(serialize("bicategory", B))["payload"]


def test_missing_two_cell_reference_has_path():
    p = _payload(chaotic(2))
    p["homs"]["0|1"]["vcomp"][0][2] = "ghost"
    with pytest.raises(SchemaError) as info:
        parse(dumps("bicategory", p))
    assert info.value.path == ["payload", "homs", "0|1", "vcomp", 0]
    assert "ghost" in str(info.value)


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ('{"kind": "bicategory", "version": 2, "payload": {}}', "version"),
        ('{"kind": "widget", "version": 1, "payload": {}}', "kind"),
        ("[1, 2", "not JSON"),
        ('{"kind": "bicategory", "version": 1, "payload": {"objects": []}}', "payload"),
    ],
)
def test_schema_errors(doc, fragment):
    with pytest.raises(SchemaError) as info:
        loads(doc)
    assert fragment in str(info.value)


def test_hom_keys_and_cell_homes_are_checked():
    p = _payload(chaotic(2))
    p["homs"]["0|1"]["one_cells"][0]["src"] = "1"
    with pytest.raises(SchemaError, match="does not belong"):
        parse(dumps("bicategory", p))
    p = _payload(chaotic(2))
    p["homs"]["0|0|1"] = p["homs"].pop("0|1")
    with pytest.raises(SchemaError):
        parse(dumps("bicategory", p))


def test_partial_table_parses_but_fails_validation(tmp_path, capsys):
    p = _payload(chaotic(2))
    p["hcomp1"].pop()
    path = tmp_path / "partial.json"
    path.write_text(dumps("bicategory", p))
    assert run(["validate", str(path)]) == 2
    assert "hcomp1" in capsys.readouterr().err


# -- commands ----------------------------------------------------------------------


def test_validate_two_group(tmp_path):
    path = write(tmp_path / "two_group_w1.json", "bicategory", two_group_z2(True))
    assert run(["validate", path]) == 0


def test_whitehead_negative_cli(tmp_path, capsys):
    path = write(tmp_path / "f_strict_g.json", "functor", FUNCTORS["F_strict_g"]())
    out = tmp_path / "ce.json"
    assert run(["whitehead", path, "--output", str(out)]) == 1
    assert "(g)" in capsys.readouterr().out
    kind, rep = parse(out.read_text())
    assert kind == "report" and rep.violations[0].witness == ("g",)


def test_slice_then_validate(tmp_path):
    f = write(tmp_path / "f_lax.json", "functor", FUNCTORS["F_lax"]())
    out = tmp_path / "slice.json"
    assert run(["slice", "--functor", f, "--object", "bullet", "-o", str(out)]) == 0
    assert run(["validate", str(out)]) == 0
    # the command is a thin wrapper over the library call
    assert out.read_text() == serialize("bicategory", lax_slice(FUNCTORS["F_lax"](), "bullet").bicat)


def test_gen_matches_library(tmp_path, capsys):
    assert run(["gen", "chaotic", "--size", "3"]) == 0
    assert capsys.readouterr().out == serialize("bicategory", chaotic(3))
    assert run(["gen", "two-group", "--cocycle", "trivial"]) == 0
    assert capsys.readouterr().out == serialize("bicategory", two_group_z2(False))
    assert run(["gen", "fixture", "--name", "nope"]) == 2
    assert run(["gen", "chaotic"]) == 2


def test_quillen_a_cli(tmp_path, capsys):
    f = write(tmp_path / "f_lax.json", "functor", FUNCTORS["F_lax"]())
    term = tmp_path / "term.json"
    assert run(["terminal", "--functor", f, "-o", str(term)]) == 0
    assert run(["validate", str(term), "--functor", f]) == 0
    capsys.readouterr()
    save = tmp_path / "qa"
    assert run(["quillen-a", "--functor", f, "--terminal-data", str(term), "--save-dir", str(save)]) == 0
    assert "eps.strong: False" in capsys.readouterr().out
    assert (save / "eps.json").read_text() == serialize("transformation", quillen_a(FUNCTORS["F_lax"]()).eps)
    for name in ("G", "eta", "eps"):
        assert run(["validate", str(save / f"{name}.json")]) == 0


def test_quillen_a_cli_without_terminal(tmp_path):
    f = write(tmp_path / "f.json", "functor", FUNCTORS["F_strict_g"]())
    assert run(["quillen-a", "--functor", f]) == 1
    assert run(["terminal", "--functor", f]) == 1


def test_certificate_cli(tmp_path):
    f = write(tmp_path / "f.json", "functor", FUNCTORS["F_collapse"]())
    cert = tmp_path / "cert.json"
    assert run(["whitehead", f, "-o", str(cert)]) == 0
    assert run(["check-cert", str(cert)]) == 0
    assert run(["validate", str(cert)]) == 0
    assert run(["check-cert", f]) == 2


def test_slice_helpers_cli(tmp_path):
    f = write(tmp_path / "f.json", "functor", FUNCTORS["Id_BZ2"]())
    assert run(["change-of-slice", "--functor", f, "--one-cell", "g", "-o", str(tmp_path / "u.json")]) == 0
    assert run(["validate", str(tmp_path / "u.json")]) == 0
    assert run(["preserves-inc", "--functor", f, "--one-cell", "g"]) == 0
    assert run(["preserves-inc", "--functor", f, "--one-cell", "zzz"]) == 2


def test_adjunction_mate_eval(tmp_path, capsys):
    b = write(tmp_path / "w1.json", "bicategory", two_group_z2(True))
    assert run(["adjunction-check", "--bicategory", b, "--f", "g", "--g", "g", "--eta", "e@e", "--eps", "a@e"]) == 0
    assert run(["adjunction-check", "--bicategory", b, "--f", "g", "--g", "g", "--eta", "e@e", "--eps", "e@e"]) == 1
    adj = "g,g,e@e,a@e"
    capsys.readouterr()
    assert run(["mate", "--bicategory", b, "--first", adj, "--second", adj, "--a", "e", "--b", "e", "--cell", "e@g"]) == 0
    assert capsys.readouterr().out.endswith(": g => g\n")
    assert run(["eval", "--bicategory", b, "--expr", '["a", "g", "g", "g"]']) == 0
    assert capsys.readouterr().out == "a@g: g => g\n"
    assert run(["eval", "--bicategory", b, "--expr", '["a", "g"]']) == 2


def test_input_errors(tmp_path):
    assert run(["validate", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert run(["validate", str(bad)]) == 2
    with pytest.raises(SystemExit) as info:
        run(["slice", "--functor"])
    assert info.value.code == 2
