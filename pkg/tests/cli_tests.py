from exactwave.cli import main, SceneConfig, SCENE_SCHEMA
from exactwave.base import ConfigError
from jsonschema import Draft202012Validator
import json
import pytest
import numpy as np

GAUSSIANS = {"T": {"kind": "gaussian", "params": [-0.5, 0.3]},
             "X": {"kind": "gaussian", "params": [0.8, 0.3]}}

@pytest.fixture
def rank0_scene():
    return {"profile": {"kind": "quadratic", "m1": 1.0, "m2": 0.0},
            "waveforms": GAUSSIANS,
            "solution": {"rank": 0},
            "grid": {"t": [0.0, 1.0, 21], "x": [0.5, 2.0, 31]}}

@pytest.fixture
def transform_scene():
    return {"transform": {"kind": "inversion_2d",
                          "seed": {"c": 1.0, "angle": 0.3,
                                   "waveform": {"kind": "gaussian", "params": [0.0, 0.5]}},
                          "points": [[0.8, 0.3], [1.2, -0.5], [0.6, 0.6], [1.5, 0.4]],
                          "t": 0.3, "h": 0.02}}

def run(tmp_path, command, scene, *extra):
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(scene))
    out = tmp_path / "out"
    code = main([command, "--config", str(path), "--out", str(out), *extra])
    return code, out

def read_table(path):
    with open(path) as f:
        header = f.readline().strip().split(",")
    return header, np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)

def read_summary(path):
    with open(path) as f:
        return json.load(f)

def test_invariant(tmp_path):
    scene = {"profile": {"kind": "power_law", "alpha": 8}, "grid": {"x": [0.5, 2.0, 16]}}
    code, out = run(tmp_path, "invariant", scene)
    assert code == 0
    header, data = read_table(out / "invariant.csv")
    assert header == ["x", "K", "h"]
    assert data.shape == (16, 3)
    assert np.allclose(data[:, 2], 2 * data[:, 0]**6)

def test_solution(tmp_path, rank0_scene):
    code, out = run(tmp_path, "solution", rank0_scene)
    assert code == 0
    header, data = read_table(out / "solution.csv")
    assert header == ["t", "x", "u", "residual"]
    assert data.shape == (21 * 31, 4)
    summary = read_summary(out / "solution.summary.json")
    assert summary["passed"]
    assert summary["residual"]["normalized_linf"] < 1e-10
    assert summary["config"]["tolerances"]["residual"] == 1e-10

def test_solution_is_deterministic(tmp_path, rank0_scene):
    run(tmp_path, "solution", rank0_scene)
    first = (tmp_path / "out" / "solution.csv").read_bytes()
    run(tmp_path, "solution", rank0_scene)
    assert (tmp_path / "out" / "solution.csv").read_bytes() == first

def test_json_format(tmp_path, rank0_scene):
    rank0_scene["output"] = {"prefix": "quadratic"}
    code, out = run(tmp_path, "solution", rank0_scene, "--format", "json")
    assert code == 0
    document = read_summary(out / "quadratic.json")
    assert document["columns"] == ["t", "x", "u", "residual"]
    assert len(document["rows"]) == 21 * 31
    assert document["summary"]["passed"]

def test_residual(tmp_path, rank0_scene):
    code, out = run(tmp_path, "residual", rank0_scene, "--seed", "7")
    assert code == 0
    summary = read_summary(out / "residual.summary.json")
    assert summary["sweep"]["seed"] == 7
    assert summary["sweep"]["count"] == 10
    assert len(summary["finite_difference"]["levels"]) == 3

def test_rank1_scene(tmp_path, rank0_scene):
    rank0_scene.update(profile={"kind": "gen_euler", "s1": 0, "s2": 1, "c1": 1, "c2": 0},
                       waveforms={"T": {"kind": "compact_bump", "params": [3.5, 1.5]},
                                  "X": {"kind": "compact_bump", "params": [-2.5, 1.5]}},
                       solution={"rank": 1, "sample_interval": [0.5, 2.0]})
    code, out = run(tmp_path, "solution", rank0_scene)
    assert code == 0
    assert read_summary(out / "solution.summary.json")["solution"]["rank"] == 1

def test_transform(tmp_path, transform_scene):
    code, out = run(tmp_path, "transform", transform_scene)
    assert code == 0
    header, data = read_table(out / "transform.csv")
    assert header == ["t", "x1", "y1", "v", "c1sq", "residual_h", "residual_h2",
                      "observed_order"]
    assert data.shape == (4, 8)
    assert np.allclose(data[:, 4], (data[:, 1]**2 + data[:, 2]**2)**2)
    assert min(read_summary(out / "transform.summary.json")["residual"]["observed_orders"]) >= 1.9

def test_kelvin_transform(tmp_path):
    scene = {"transform": {"kind": "kelvin_3d",
                           "seed": {"direction": [0.6, 0.8, 0.0],
                                    "waveform": {"kind": "gaussian", "params": [0.0, 0.5]}},
                           "points": [[0.8, 0.3, 0.2], [1.2, -0.5, 0.4]]}}
    code, out = run(tmp_path, "transform", scene)
    assert code == 0
    header, data = read_table(out / "transform.csv")
    assert header[:4] == ["t", "x1", "y1", "z1"]
    assert data.shape == (2, 9)

def test_riccati(tmp_path):
    code, out = run(tmp_path, "riccati", {"riccati": {"family": "sqrt3", "y_end": 0.8}})
    assert code == 0
    header, data = read_table(out / "riccati.csv")
    assert header == ["y", "x_numeric", "x_closed", "deviation"]
    assert data.shape == (201, 4)
    summary = read_summary(out / "riccati.summary.json")
    assert summary["pole"] is None
    assert summary["max_deviation"] < 1e-8

def test_riccati_pole(tmp_path):
    scene = {"riccati": {"family": "tan", "b": 0.0, "y_end": 2.0}, "tolerances": {"riccati": 1e-6}}
    code, out = run(tmp_path, "riccati", scene)
    assert code == 0
    assert read_summary(out / "riccati.summary.json")["passed"]
    assert np.isclose(read_summary(out / "riccati.summary.json")["pole"], np.pi / 2)

def test_bench(tmp_path, rank0_scene):
    rank0_scene["grid"] = {"x": [1.0, 3.0, 129]}
    rank0_scene["bench"] = {"n0": 129}
    code, out = run(tmp_path, "bench", rank0_scene)
    assert code == 0
    header, data = read_table(out / "bench.csv")
    assert header == ["h", "L2_error", "Linf_error", "observed_order"]
    assert data.shape == (3, 4)
    assert np.isnan(data[0, 3])
    assert np.all((data[1:, 3] > 1.8) & (data[1:, 3] < 2.2))
    assert np.allclose(data[1:, 0], data[:-1, 0] / 2)

def test_tolerance_failure(tmp_path, rank0_scene):
    rank0_scene["grid"] = {"x": [1.0, 3.0, 65]}
    rank0_scene["bench"] = {"n0": 65}
    rank0_scene["tolerances"] = {"order_min": 3.0, "order_max": 4.0}
    code, out = run(tmp_path, "bench", rank0_scene)
    assert code == 4
    assert not read_summary(out / "bench.summary.json")["passed"]

def test_config_errors(tmp_path, rank0_scene):
    rank0_scene["colour"] = "blue"
    code, out = run(tmp_path, "solution", rank0_scene)
    assert code == 2
    assert not out.exists()
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["solution", "--config", str(path), "--out", str(tmp_path / "b")]) == 2
    assert main(["solution", "--config", str(tmp_path / "missing.json")]) == 2
    code, _ = run(tmp_path, "riccati", {"grid": {"x": [0.0, 1.0, 16]}})
    assert code == 2

def test_domain_error(tmp_path, rank0_scene):
    rank0_scene["grid"]["x"] = [-1.0, 1.0, 31]
    code, out = run(tmp_path, "solution", rank0_scene)
    assert code == 3
    assert not out.exists()

def test_schema(tmp_path, capsys):
    assert main(["schema", "--out", str(tmp_path)]) == 0
    schema = read_summary(tmp_path / "scene.schema.json")
    assert "profile" in schema["properties"]
    assert main(["schema"]) == 0
    assert json.loads(capsys.readouterr().out) == schema

def test_scene_config():
    config = SceneConfig.from_dict({"riccati": {"family": "tanh", "y_end": 2.0}})
    assert config.riccati.b is None
    assert config.riccati.samples == 201
    assert config.tolerances.order_min == 1.8
    assert config.to_dict()["riccati"]["family"] == "tanh"
    with pytest.raises(ConfigError):
        config.require("profile")
    bad = [{"grid": {"x": [0.0, 1.0, 4]}},
           {"grid": {"x": [1.0, 0.0, 16]}},
           {"grid": {"x": [0.0, 1.0, 16.5]}},
           {"solution": {"rank": 2}},
           {"solution": {"params": {"r": 1.0}}},
           {"riccati": {"family": "cosh", "y_end": 1.0}},
           {"riccati": {"family": "tanh"}},
           {"transform": {"kind": "inversion_2d", "seed": {}, "points": [[1.0, 2.0, 3.0]]}},
           {"transform": {"kind": "exp_2d", "seed": {}, "points": [[1.0, 2.0]],
                          "stencil_order": 3}},
           {"tolerances": {"residual": "small"}},
           {"waveforms": {"T": {"params": [1.0]}}},
           []]
    for scene in bad:
        with pytest.raises(ConfigError):
            SceneConfig.from_dict(scene)

def test_schema_is_valid(rank0_scene, transform_scene):
    Draft202012Validator.check_schema(SCENE_SCHEMA)
    validator = Draft202012Validator(SCENE_SCHEMA)
    for scene in (rank0_scene, transform_scene, {"riccati": {"family": "tan", "y_end": 1.0}}):
        assert list(validator.iter_errors(scene)) == []

def test_bad_values_exit_2(tmp_path, rank0_scene):
    rank0_scene["profile"]["m1"] = "one"
    code, out = run(tmp_path, "solution", rank0_scene)
    assert code == 2
    assert not out.exists()
    rank0_scene["profile"]["m1"] = 1.0
    rank0_scene["waveforms"] = {"T": {"kind": "sine", "params": ["fast"]},
                                "X": {"kind": "sine", "params": [1.0]}}
    code, out = run(tmp_path, "solution", rank0_scene)
    assert code == 2

def test_error_names_key_path():
    with pytest.raises(ConfigError, match="profile.m1"):
        SceneConfig.from_dict({"profile": {"kind": "quadratic", "m1": "one", "m2": 0.0}})
    with pytest.raises(ConfigError, match="grid.x"):
        SceneConfig.from_dict({"grid": {"x": [1.0, 0.0, 16]}})
