import json
import os
import pathlib
import subprocess

import pytest

import selfmaps

DATA = pathlib.Path(os.environ.get("SELFMAPS_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))
SCHEMA = pathlib.Path(__file__).resolve().parents[2] / "docs" / "report_schema.json"


def test_norms_and_conjugates():
    assert selfmaps.norm(0, 1, 1, 1) == 2
    assert selfmaps.norm(1, 2, 1, 1) == 4
    assert selfmaps.conjugate(1, 2, -1, 1) == (0, -1)
    assert sorted(selfmaps.elements_of_norm(0, 1, 2)) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def test_degree_two_table():
    rows = [r for r in selfmaps.degree_two_table(10) if r["elements"]]
    assert sorted(r["discriminant"] for r in rows) == [-8, -7, -4]


def test_legendre_and_splitting():
    assert selfmaps.legendre(-1, 5) == 1
    assert selfmaps.legendre(2, 7) == 1
    assert selfmaps.split_type(0, 1, 3) == "inert"
    assert selfmaps.split_type(0, 1, 2) == "ramified"


def test_exceptional_bundle_has_every_degree():
    verdict = selfmaps.admits_all_degrees((0, 1), 5, 1, 2)
    assert verdict["kind"] == "AllDegrees"
    table, missing = selfmaps.scan((1, 2), 4, 2, 1, bound=1000)
    assert missing == []
    assert len(table) == 168


def test_nocm_scan():
    _, missing = selfmaps.scan(None, 5, 1, 0, bound=30)
    assert missing == [2, 3, 7, 13, 17, 23]


def test_toric():
    d, verdict = selfmaps.toric_verdict([(1, 0), (0, 1), (-1, -1)])
    assert d == [1, 1, 1]
    assert verdict["kind"] == "SquaresOnly"
    _, verdict = selfmaps.toric_verdict([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert verdict["kind"] == "AllDegrees"
    with pytest.raises(ValueError):
        selfmaps.toric_verdict([(2, 0), (0, 1), (-1, -1)])


def test_groups():
    assert selfmaps.rho_bar_surjective(selfmaps.build_semidirect(7), 7)
    z5 = [[(i + j) % 5 for j in range(5)] for i in range(5)]
    assert not selfmaps.rho_bar_surjective(z5, 5)
    with pytest.raises(ValueError):
        selfmaps.rho_bar_surjective([[0, 1], [1, 1]], 2)


def test_descriptors():
    report = selfmaps.classify_file(str(DATA / "gaussian_k5.desc"))
    assert report["schema_version"] == selfmaps.SCHEMA_VERSION
    assert report["verdict"]["kind"] == "AllDegrees"
    report = selfmaps.classify_text("family = toric\nfan_file = p2.fan\n", str(DATA))
    assert report["verdict"]["kind"] == "SquaresOnly"
    with pytest.raises(selfmaps.DescriptorError, match="line 2"):
        selfmaps.classify_text("family = abelian\nfamily = toric\n")


def test_claims():
    claims = selfmaps.run_claims()
    assert [c["id"] for c in claims] == list(range(1, 10))
    assert all(c["passed"] for c in claims)
    assert not selfmaps.run_claims(inject_fault=True)[1]["passed"]


@pytest.mark.skipif("SELFMAPS_CLI" not in os.environ, reason="CLI path not given")
@pytest.mark.parametrize(
    "args",
    [
        ["verify-paper", "--json"],
        ["classify", str(DATA / "gaussian_k5.desc"), "--json", "--timing"],
        ["scan", str(DATA / "nocm_k5.desc"), "--bound", "100", "--json"],
        ["density", "--order", "1", "2", "--modulus", "40", "--json"],
        ["toric", str(DATA / "f3.fan"), "--json"],
        ["group-check", str(DATA / "semidirect5.group"), "--p", "5", "--json"],
        ["cm-table", "--json"],
    ],
)
def test_cli_json_matches_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    out = subprocess.run([os.environ["SELFMAPS_CLI"], *args], check=True, capture_output=True, text=True)
    report = json.loads(out.stdout)
    jsonschema.validate(report, json.loads(SCHEMA.read_text()))
    again = subprocess.run([os.environ["SELFMAPS_CLI"], *args], check=True, capture_output=True, text=True)
    if "--timing" not in args:
        assert again.stdout == out.stdout
