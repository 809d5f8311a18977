import io
import json
import subprocess
import sys

import pytest

from toricquant.cli import PolytopeSpec, dump_json, parse_spec, run
from toricquant.errors import ParseError, SchemaError

TRIANGLE_DOC = ('{"ambient_dim":2,"facets":[{"normal":[0,1],"offset":0},'
                '{"normal":[1,0],"offset":0},{"normal":[-1,-1],"offset":-1}]}')
SQUARE_DOC = json.dumps({"ambient_dim": 2, "facets": [
    {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0},
    {"normal": [-1, 0], "offset": -1}, {"normal": [0, -1], "offset": -1}]})
BAD_DOC = json.dumps({"ambient_dim": 2, "facets": [
    {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0},
    {"normal": [-1, -2], "offset": -2}]})


def call(*argv, doc=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(doc), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_inline_triangle():
    spec = parse_spec(TRIANGLE_DOC)
    assert spec.ambient_dim == 2
    assert spec.facets == [((0, 1), 0), ((1, 0), 0), ((-1, -1), -1)]
    P = spec.to_polytope()
    assert P.offsets == (0, 0, -1)


def test_parse_generator():
    spec = parse_spec('{"generator":{"name":"simplex","params":{"dim":2,"m":2}}}')
    assert spec == PolytopeSpec(generator="simplex", params={"dim": 2, "m": 2})
    assert spec.to_polytope().offsets == (0, 0, -2)


def test_parse_big_integers():
    big = 10 ** 40
    spec = parse_spec(json.dumps({"ambient_dim": 1, "facets": [
        {"normal": [1], "offset": -big}, {"normal": [-1], "offset": -big}]}))
    assert spec.facets[0][1] == -big


@pytest.mark.parametrize("doc, field", [
    ('{"ambient_dim":2,"facets":[{"normal":[0,0],"offset":0}]}', "facets[0].normal"),
    ('{"ambient_dim":2,"facets":[{"normal":[0,1],"offset":0.5}]}', "facets[0].offset"),
    ('{"ambient_dim":2,"facets":[{"normal":[0,1],"offset":0,"x":1}]}', "facets[0].x"),
    ('{"ambient_dim":2,"facets":[{"normal":[0,true],"offset":0}]}', "facets[0].normal[1]"),
    ('{"ambient_dim":2,"facets":[{"normal":[0,1,2],"offset":0}]}', "facets[0].normal"),
    ('{"ambient_dim":0,"facets":[]}', "ambient_dim"),
    ('{"ambient_dim":2}', "facets"),
    ('{"ambient_dim":2,"facets":[],"extra":1}', "extra"),
    ('{"generator":{"name":"cube","params":{}}}', "generator.name"),
    ('{"generator":{"name":"simplex","params":{"dim":2,"k":1}}}', "generator.params.k"),
    ('{"generator":{"name":"hirzebruch","params":{"a":3,"b":2}}}', "generator.params.b"),
    ('{"generator":{"name":"simplex","params":{"dim":0}}}', "generator.params.dim"),
    ('[1, 2]', ""),
])
def test_schema_errors(doc, field):
    with pytest.raises(SchemaError) as info:
        parse_spec(doc)
    if field:
        assert info.value.field == field


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_spec('{\n  "ambient_dim": 2,\n  "facets": [,]\n}')
    assert info.value.line == 3


def test_quantize_json_triangle():
    code, out, _ = call("quantize", "-", "--format", "json", doc=TRIANGLE_DOC)
    assert code == 0
    report = json.loads(out)
    assert report["dimension"] == 3
    assert report["theorem_verified"] is True
    assert report["construction"]["nu"] == [1]
    assert report["section_basis"]["rendered"] == ["z3", "z2", "z1"]


def test_family_square_text():
    code, out, _ = call("family", "-", doc=SQUARE_DOC)
    assert code == 0
    assert "{}, {1}, {2}, {3}, {4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}" in out
    assert "(9 sets)" in out


def test_family_square_json():
    code, out, _ = call("family", "-", "--format", "json", doc=SQUARE_DOC)
    d = json.loads(out)
    assert {tuple(s) for s in d["members"]} == {
        (), (1,), (2,), (3,), (4,), (1, 2), (2, 3), (3, 4), (1, 4)}
    assert d["complement_codimension"] == 2
    assert d["complement_witnesses"] == [[1, 3], [2, 4]]


def test_validate_rejects_bad_triangle():
    code, out, err = call("validate", "-", doc=BAD_DOC)
    assert code == 1 and out == ""
    assert "(0, 1)" in err and "det=-2" in err


def test_validate_ok():
    code, out, _ = call("validate", "-", doc=SQUARE_DOC)
    assert code == 0 and "Delzant: yes" in out


def test_unbounded_exit_code():
    code, _, err = call("quantize", "-", doc='{"ambient_dim":1,"facets":[{"normal":[1],"offset":0}]}')
    assert code == 1 and "unbounded" in err


def test_schema_error_exit_code():
    code, _, err = call("quantize", "-", doc='{"ambient_dim":2,"facets":[{"normal":[0,0],"offset":0}]}')
    assert code == 2 and "zero normal" in err


def test_parse_error_exit_code():
    code, _, err = call("quantize", "-", doc="{")
    assert code == 2 and "line 1" in err


def test_usage_error_exit_code():
    assert call("bogus")[0] == 2
    assert call("quantize", "--format", "xml")[0] == 2


def test_missing_file(tmp_path):
    assert call("quantize", str(tmp_path / "nope.json"))[0] == 2


def test_file_input(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(SQUARE_DOC, encoding="utf-8")
    code, out, _ = call("lattice", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 4


def test_vertices_command():
    code, out, _ = call("vertices", "-", "--format", "json", doc=TRIANGLE_DOC)
    assert json.loads(out)["vertices"][1] == {"point": [0, 1], "active_facets": [2, 3]}


def test_vertices_rational_point():
    doc = json.dumps({"ambient_dim": 2, "facets": [
        {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": 0},
        {"normal": [-1, -2], "offset": -1}]})
    code, out, _ = call("vertices", "-", "--format", "json", doc=doc)
    assert code == 0
    assert [0, "1/2"] in [v["point"] for v in json.loads(out)["vertices"]]


def test_sweep_command():
    code, out, _ = call("sweep", "-", "--m", "3", "--format", "json", doc=TRIANGLE_DOC)
    assert code == 0
    assert json.loads(out)["sweep"] == [
        {"m": 1, "dimension": 3}, {"m": 2, "dimension": 6}, {"m": 3, "dimension": 10}]


def test_max_box_guard():
    doc = '{"generator":{"name":"simplex","params":{"dim":2,"m":20}}}'
    code, _, err = call("lattice", "-", "--max-box", "10", doc=doc)
    assert code == 1 and "limit" in err


def test_quiet():
    code, out, _ = call("quantize", "-", "--quiet", doc=SQUARE_DOC)
    assert code == 0 and out == ""


def test_json_round_trip_is_byte_identical():
    for cmd in ("validate", "vertices", "lattice", "family", "construct", "quantize", "sweep"):
        _, out, _ = call(cmd, "-", "--format", "json", doc=SQUARE_DOC)
        assert dump_json(json.loads(out)) == out
        assert "." not in out.replace("..", "")


def test_generator_and_inline_reports_identical():
    gen = '{"generator":{"name":"simplex","params":{"dim":2,"m":1}}}'
    for cmd in ("quantize", "family", "construct"):
        for fmt in ("text", "json"):
            assert call(cmd, "-", "--format", fmt, doc=gen) == \
                call(cmd, "-", "--format", fmt, doc=TRIANGLE_DOC)
    box = '{"generator":{"name":"box","params":{"dim":2,"side":1}}}'
    assert call("quantize", "-", "--format", "json", doc=box) == \
        call("quantize", "-", "--format", "json", doc=SQUARE_DOC)


def test_box_per_axis_sides():
    doc = '{"generator":{"name":"box","params":{"dim":3,"side":1,"side2":3}}}'
    code, out, _ = call("lattice", "-", "--format", "json", doc=doc)
    assert json.loads(out)["count"] == 2 * 4 * 2


def test_text_report_layout():
    code, out, _ = call("quantize", "-", doc=TRIANGLE_DOC)
    assert "pi =\n  [  0  1 -1 ]\n  [  1  0 -1 ]" in out
    assert "nu = L(-lambda) = (1)" in out
    assert "dimension = 3" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "toricquant", "quantize", "-", "--format", "json"],
                          input=SQUARE_DOC, capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dimension"] == 4


def test_disagreement_exit_code(monkeypatch):
    from dataclasses import replace

    from toricquant import cli, quantize

    def broken(P, max_box):
        r = quantize(P, max_box)
        return replace(r, bijection=replace(r.bijection, complete=False,
                                            counterexample="injected"))

    monkeypatch.setattr(cli, "quantize", broken)
    code, out, err = call("quantize", "-", "--format", "json", doc=SQUARE_DOC)
    assert code == 3
    assert json.loads(out)["theorem_verified"] is False
