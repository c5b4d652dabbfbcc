import json

import pytest

import main
from core.input_handler import load_weights
from models.errors import ConfigError
from tests.conftest import write_json
from utils.config_manager import DEFAULTS

# ------------------------- Fixtures ------------------------- #


@pytest.fixture
def run_cli(capsys):
    def _run(*argv):
        code = main.main(list(argv))
        out = capsys.readouterr().out
        return code, (json.loads(out) if out.strip() else None)
    return _run


@pytest.fixture
def a2_doc(tmp_path, a2):
    return write_json(tmp_path / "a2.json", a2.to_dict())


# ------------------------- Commands ------------------------- #

def test_census(run_cli):
    code, doc = run_cli("census", "--max-label", "5")
    assert code == 0
    assert doc["schema"] == "coxwl2/1"
    assert doc["command"] == "census"
    assert doc["result"]["count"] == 9
    assert all(d["signature"] == [3, 0, 1] for d in doc["result"]["diagrams"])


def test_classify_a2(run_cli, a2_doc):
    code, doc = run_cli("classify", "-i", a2_doc)
    assert code == 0
    assert doc["result"]["type"]["order"] == 6
    assert doc["result"]["maximal"] == [["s1", "s2"]]


def test_betti_icosahedral(run_cli, tmp_path, icosahedral):
    cm = write_json(tmp_path / "ico.json", icosahedral.to_dict())
    q = write_json(tmp_path / "q.json", {"q": "1/2"})
    code, doc = run_cli("betti", "-i", cm, "-q", q)
    assert code == 0
    assert doc["result"]["betti"] == [0, "11/27", 0, 0]
    assert doc["result"]["authorized_by"] == "theorem1"
    assert doc["result"]["chi_q"] == "-11/27"
    assert doc["trail"]


def test_verify_lanner_is_not_applicable(run_cli, tmp_path, lanner435):
    cm = write_json(tmp_path / "lanner.json", lanner435.to_dict())
    code, doc = run_cli("verify", "-i", cm)
    assert code == 2
    assert doc["reason"] == "dual to hyperbolic 3-simplex"
    assert doc["error"]["code"] == "weighted.PreconditionFailed"
    assert "report" in doc["error"]["details"]


def test_growth_at_a_point(run_cli, tmp_path, dinf):
    cm = write_json(tmp_path / "dinf.json", dinf.to_dict())
    q = write_json(tmp_path / "q.json", {"weights": {"s1": "1/2", "s2": "1/2"}})
    code, doc = run_cli("growth", "-i", cm, "--at", q)
    assert code == 0
    assert doc["result"]["at"]["value"] == 3
    assert doc["result"]["growth_rate"] == [1, 1]
    assert doc["result"]["finite"] is False


def test_homology_of_a_complex(run_cli, tmp_path):
    faces = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    path = write_json(tmp_path / "L.json", {"maximal_faces": faces})
    code, doc = run_cli("homology", "-i", path)
    assert code == 0
    assert doc["result"]["f_vector"] == [4, 6, 4]
    assert [g["rank"] for g in doc["result"]["homology"]] == [1, 0, 1]


def test_ruin(run_cli, a2_doc):
    code, doc = run_cli("ruin", "-i", a2_doc, "-T", "s1", "--homology")
    assert code == 0
    assert doc["result"]["partition_holds"] is True
    assert [g["rank"] for g in doc["result"]["relative_homology"]] == [0, 2, 0]


# ------------------------- Errors ------------------------- #

def test_schema_error(run_cli, tmp_path):
    path = write_json(tmp_path / "bad.json", {"matrix": [[1, 3], [3]]})
    code, doc = run_cli("classify", "-i", path)
    assert code == 1
    assert doc["error"]["code"] == "cli.SchemaError"


def test_value_error_comes_from_its_module(run_cli, tmp_path):
    path = write_json(tmp_path / "bad.json", {"matrix": [[1, 3], [4, 1]]})
    code, doc = run_cli("classify", "-i", path)
    assert code == 1
    assert doc["error"]["code"] == "coxeter.NonSymmetric"


def test_missing_file(run_cli, tmp_path):
    code, doc = run_cli("nerve", "-i", str(tmp_path / "absent.json"))
    assert code == 1
    assert doc["error"]["code"] == "cli.InputError"


def test_betti_needs_weights(run_cli, a2_doc):
    code, doc = run_cli("betti", "-i", a2_doc)
    assert code == 1
    assert doc["error"]["code"] == "cli.SchemaError"


def test_region_needs_weights(run_cli, a2_doc):
    code, doc = run_cli("region", "-i", a2_doc)
    assert code == 1
    assert doc["error"]["code"] == "cli.SchemaError"


def test_default_weight_is_logged(dinf, mocker):
    logger = mocker.patch("core.input_handler.logger")
    q = load_weights(None, dinf)
    assert q.leq_one and q.geq_one
    logger.info.assert_called_once()


def test_nerve_face_cap_comes_from_the_config(run_cli, tmp_path, icosahedral, mocker):
    mocker.patch("main.load_configuration", return_value={**DEFAULTS, "MAX_FACES": 50})
    cm = write_json(tmp_path / "ico.json", icosahedral.to_dict())
    code, doc = run_cli("nerve", "-i", cm)
    assert code == 1
    assert doc["error"]["code"] == "simplicial.ComplexTooLarge"


def test_float_weights_are_rejected(run_cli, tmp_path, dinf):
    cm = write_json(tmp_path / "dinf.json", dinf.to_dict())
    q = write_json(tmp_path / "q.json", {"q": 0.5})
    code, doc = run_cli("betti", "-i", cm, "-q", q)
    assert code == 1
    assert doc["error"]["code"] == "weighted.IrrationalWeight"


def test_config_error_is_reported(run_cli, mocker):
    mocker.patch("main.load_configuration", side_effect=ConfigError("COXWL2_THREADS must be an integer"))
    code, doc = run_cli("census")
    assert code == 1
    assert doc["error"]["code"] == "cli.ConfigError"


def test_output_file(run_cli, tmp_path, a2_doc):
    target = tmp_path / "out.json"
    code, doc = run_cli("classify", "-i", a2_doc, "-o", str(target))
    assert code == 0
    assert doc is None
    written = json.loads(target.read_text(encoding="utf-8"))
    assert written["command"] == "classify"
    assert written["result"]["T"] == ["s1", "s2"]


def test_output_is_deterministic(run_cli, a2_doc):
    first = run_cli("nerve", "-i", a2_doc)
    second = run_cli("nerve", "-i", a2_doc)
    assert first == second
