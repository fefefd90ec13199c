import json
from pathlib import Path

import pytest

import gcoh

ROOT = Path(__file__).resolve().parents[2]
FIXTURES = ROOT / "data" / "fixtures"
SCHEMAS = ROOT / "schemas"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def texts(groups):
    return [g["text"] for g in groups]


def test_cyclic_group_cohomology():
    assert texts(gcoh.cohomology({"kind": "groupoid", "builtin": "cyclic:2"}, 4)) == ["Z", "0", "Z/2", "0", "Z/2"]
    assert texts(gcoh.cohomology(load("z4.groupoid.json"), 4)) == ["Z", "0", "Z/4", "0", "Z/4"]


def test_circle_and_sphere_from_covers():
    assert texts(gcoh.cohomology({"kind": "cover", "fixture": "triangle"}, 1)) == ["Z", "Z"]
    assert texts(gcoh.cohomology({"kind": "cover", "fixture": "tetrahedron"}, 2)) == ["Z", "0", "Z"]


def test_schur_multiplier_of_klein_four():
    classes = gcoh.enumerate_extension_classes(load("v4.groupoid.json"), 2)
    assert len(classes) == 2
    assert texts(gcoh.cohomology(load("v4.groupoid.json"), 2, coeff="QmodZ"))[2] == "Z/2"


def test_dd_class_of_nontrivial_extension():
    dd = gcoh.dd_class(load("v4.groupoid.json"), load("v4-sigma.cochain.json"))
    assert not dd["trivial"]
    assert dd["group"]["text"] == "Z/2"


def test_tetrahedron_generator_bundle():
    base = {"kind": "cover", "fixture": "tetrahedron"}
    datum = gcoh.realize_bundle(base, load("tetrahedron-psi.cochain.json"))
    chern = gcoh.chern_class(base, datum)
    assert chern["group"]["text"] == "Z"
    assert chern["coordinates"]["free"] in (["1"], ["-1"])


def test_half_curvature_is_rejected():
    base = {"kind": "cover", "fixture": "tetrahedron"}
    with pytest.raises(gcoh.MathError) as info:
        gcoh.realize_bundle(base, load("tetrahedron-half-psi.cochain.json"))
    assert info.value.kind == "NotIntegral"
    assert json.loads(info.value.detail)["pairings"] == ["1/2"]


def test_refinement_is_invariant():
    verdicts = gcoh.morita_verify(load("triangle-refinement.morphism.json"), dir=FIXTURES)
    assert all(v["isomorphism"] for v in verdicts)


def test_holonomy_of_half_weight_loop():
    value = gcoh.holonomy(load("triangle.complex.json"), load("triangle-half.cochain.json"), load("triangle-loop.chain.json"))
    assert value == "1/2 mod 1"


def test_errors_and_exit_codes():
    with pytest.raises(gcoh.InputError):
        gcoh.cohomology({"kind": "groupoid", "builtin": "cyclic:0x"}, 2)
    with pytest.raises(gcoh.SizeGuardExceeded):
        gcoh._core.cohomology(json.dumps({"kind": "cover", "fixture": "tetrahedron"}), 2, "Z", "", 10)
    code, report = gcoh.run("cohomology", [FIXTURES / "z2.groupoid.json"], max_degree=4)
    assert code == 0 and report["status"] == "ok"
    code, report = gcoh.run("realize-bundle", [FIXTURES / "tetrahedron-half-psi.cochain.json"])
    assert code == 2 and report["error"]["obstruction"] == "NotIntegral"
    assert "morita-verify" in gcoh.commands()


def test_fixtures_match_schemas():
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")
    schemas = {p.name: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    registry = referencing.Registry().with_resources(
        (s["$id"], referencing.Resource.from_contents(s)) for s in schemas.values()
    )
    by_kind = {
        "groupoid": "groupoid.schema.json",
        "complex": "complex.schema.json",
        "cover": "cover.schema.json",
        "cochain": "cochain.schema.json",
        "chain": "cochain.schema.json",
        "morphism": "morphism.schema.json",
        "job": "job.schema.json",
    }
    docs = list(FIXTURES.glob("*.json")) + list((ROOT / "data" / "jobs").glob("*.json"))
    assert docs
    for path in docs:
        doc = json.loads(path.read_text())
        schema = schemas[by_kind[doc["kind"]]]
        jsonschema.Draft202012Validator(schema, registry=registry).validate(doc)
    code, report = gcoh.run("dd-class", [FIXTURES / "v4-extension.groupoid.json"])
    jsonschema.Draft202012Validator(schemas["report.schema.json"], registry=registry).validate(report)
