"""The spin4 command line."""
import json

import numpy as np
import pytest

from spin4.builders import build_boundary_simplex
from spin4.cli import build_shape, main
from spin4.cochain import Z2, Cochain
from spin4.complex import OrderedComplex
from spin4.g4 import RelationPair, Triple, d_prime


def test_build_writes_a_loadable_complex(tmp_path, capsys):
    out = tmp_path / "s3.json"
    assert main(["build", "--shape", "boundary-simplex", "--n", "4", "--out", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["f_vector"] == [5, 10, 10, 5]
    assert OrderedComplex.load(str(out)).same_as(build_boundary_simplex(4))


def test_build_shapes(tmp_path):
    src = tmp_path / "s1.json"
    build_boundary_simplex(2).save(str(src))
    assert build_shape("product", inputs=[str(src), str(src)]).dim == 2
    assert build_shape("suspension", inputs=[str(src)]).euler_characteristic() == 2
    assert build_shape("barycentric", n=2).count(0) == 6
    assert build_shape("prism", n=2).dim == 2
    with pytest.raises(SystemExit):
        build_shape("product", inputs=[str(src)])


def test_verify_exit_code_and_json(tmp_path):
    out = tmp_path / "rep.json"
    assert main(["verify", "--suite", "lifts", "--trials", "5", "--json", str(out), "--quiet"]) == 0
    rep = json.loads(out.read_text())
    assert rep["passed"] and rep["result"] == "verify:lifts"


def test_repro_key1(capsys):
    assert main(["repro", "key1", "--quiet"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["values"]["int first coordinate"] == "1/8"


def test_g4_commands(tmp_path, capsys):
    cx = build_boundary_simplex(5)
    cpath = tmp_path / "s4.json"
    cx.save(str(cpath))
    rng = np.random.default_rng(0)
    t = d_prime(RelationPair(Cochain.random(cx, 2, Z2, rng), Cochain.random(cx, 1, Z2, rng)))
    tpath = tmp_path / "t.json"
    tpath.write_text(json.dumps([t.to_json(), Triple.zero(cx).to_json()]))
    assert main(["g4", "nullity", "--complex", str(cpath), "--triples", str(tpath)]) == 0
    res = json.loads(capsys.readouterr().out)["results"]
    assert [r["null"] for r in res] == [True, True]
    assert main(["g4", "product", "--complex", str(cpath), "--triples", str(tpath), "--alternate"]) == 0
    assert json.loads(capsys.readouterr().out)["in_kernel"]
    assert main(["g4", "extensions", "--complex", str(cpath)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["filtration"]["qh4_order"] == 0


def test_bad_arguments_exit():
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nope"])
    with pytest.raises(SystemExit):
        main([])
