import json

import pytest

from fermicav.bogoliubov import GENERAL, ONE_WAY, SINGLE
from fermicav.config import config, set_config
from fermicav.errors import ConfigError
from fermicav.geometry import proper_time_from_u
from fermicav.scenario import ScenarioConfig, load_scenario_config


def test_defaults():
    cfg = ScenarioConfig()
    assert cfg["state_family"] == "two-mode-plus"
    assert cfg["k"] == 1
    assert cfg["s_values"] == [0.0, 0.25, 0.5, 0.75]
    assert cfg.geometry().h == pytest.approx(0.1)
    assert cfg.h_numeric == pytest.approx(0.1)
    assert cfg.scenario().pattern == SINGLE
    assert cfg.setting("window") == config["window"]


def test_defaults_are_not_shared():
    cfg = ScenarioConfig()
    cfg.to_dict()["s_values"].append(0.9)
    assert ScenarioConfig()["s_values"] == [0.0, 0.25, 0.5, 0.75]


def test_rejects_bad_values():
    with pytest.raises(ConfigError):
        ScenarioConfig(colour="red")
    with pytest.raises(ConfigError):
        ScenarioConfig(k="one")
    with pytest.raises(ConfigError):
        ScenarioConfig(u=-0.5)
    with pytest.raises(ConfigError):
        ScenarioConfig(u_points=1)
    with pytest.raises(ConfigError):
        ScenarioConfig(grid=[10])
    with pytest.raises(ConfigError):
        ScenarioConfig(window=0)
    with pytest.raises(ConfigError):
        ScenarioConfig(s_values=[0.0, 1.0])
    with pytest.raises(ConfigError):
        ScenarioConfig(state_family="three-mode")
    with pytest.raises(ConfigError):
        ScenarioConfig(h_numeric=-0.1)


def test_charge_modes():
    cfg = ScenarioConfig(state_family="charge", k=1, k_prime=-2)
    assert cfg["k_prime"] == -2
    for k, k_prime in ((1, None), (-1, -2), (1, 2)):
        with pytest.raises(ConfigError):
            ScenarioConfig(state_family="charge", k=k, k_prime=k_prime)
    with pytest.raises(ConfigError):
        ScenarioConfig(k_prime=-2)


def test_geometry_forms():
    walls = ScenarioConfig(geometry={"a": 9.5, "b": 10.5}, s=0.25)
    lengths = ScenarioConfig(geometry={"delta": 1.0, "h": 0.1}, s=0.25)
    assert walls.geometry() == lengths.geometry()
    assert walls.geometry(s=0.5).s == 0.5
    with pytest.raises(ConfigError):
        ScenarioConfig(geometry={"a": 1.0, "h": 0.1})
    with pytest.raises(ConfigError):
        ScenarioConfig(geometry={"a": 2.0, "b": 1.0})
    with pytest.raises(ConfigError):
        ScenarioConfig(geometry={"delta": 1.0, "h": 2.5})
    with pytest.raises(ConfigError):
        ScenarioConfig(theta=7.0)


def test_trajectories():
    cfg = ScenarioConfig(u=0.5, v=0.25)
    assert cfg.scenario().pattern == ONE_WAY
    tau1 = proper_time_from_u(cfg.geometry(), 0.5)
    assert cfg.scenario().segments[0].duration == pytest.approx(tau1)
    cfg = ScenarioConfig(segments=[
        {"kind": "accelerate-right", "duration": 1.0},
        {"kind": "inertial", "duration": 2.0}])
    assert cfg.scenario().pattern == GENERAL
    with pytest.raises(ConfigError):
        ScenarioConfig(segments=[{"kind": "jump", "duration": 1.0}])
    with pytest.raises(ConfigError):
        ScenarioConfig(segments=[{"kind": "inertial"}])
    with pytest.raises(ConfigError):
        ScenarioConfig(segments=[])


def test_override():
    cfg = ScenarioConfig(u=0.3)
    other = cfg.override(u=0.7, k=None)
    assert other["u"] == 0.7
    assert other["k"] == 1
    assert cfg["u"] == 0.3
    with pytest.raises(ConfigError):
        cfg.override(u=-1.0)


def test_apply():
    saved = dict(config)
    try:
        ScenarioConfig(window=40, series_tolerance=1e-4).apply()
        assert config["window"] == 40
        assert config["series_tolerance"] == 1e-4
        assert config["sum_window"] == saved["sum_window"]
        assert ScenarioConfig().setting("window") == 40
    finally:
        set_config(**saved)


def test_load_json(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({"s": 0.25, "u": 0.4, "k": -1}))
    cfg = load_scenario_config(str(path), u=0.6)
    assert cfg["s"] == 0.25
    assert cfg["k"] == -1
    assert cfg["u"] == 0.6


def test_load_yaml(tmp_path):
    path = tmp_path / "scenario.yaml"
    path.write_text("geometry: {a: 9.5, b: 10.5}\nstate_family: charge\n"
                    "k: 1\nk_prime: -2\n")
    cfg = load_scenario_config(str(path))
    assert cfg.geometry().h == pytest.approx(0.1)
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert load_scenario_config(str(empty))["u"] == 0.5


def test_load_errors(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("u: [0.5\n")
    with pytest.raises(ConfigError):
        load_scenario_config(str(bad))
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        load_scenario_config(str(listing))
    with pytest.raises(OSError):
        load_scenario_config(str(tmp_path / "missing.json"))


if __name__ == "__main__":
    test_defaults()
    test_charge_modes()
