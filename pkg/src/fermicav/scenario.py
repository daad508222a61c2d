"""Scenario configuration files.

A scenario file is a JSON (or YAML) mapping. Lengths and proper times share
one arbitrary length unit (c = 1); phases are in radians; u and v are the
durations of the accelerated and inertial segments in units of their
periods.
"""
import copy
import logging
import math
from typing import Any, Dict, List, Optional, Union

import yaml
from typeguard import check_type

from .bogoliubov import Segment, TravelScenario
from .config import config, set_config
from .errors import ConfigError
from .geometry import (CavityGeometry, proper_time_from_u,
                       proper_time_from_v)
from .opio import OPIOSign, Parameter, dumps
from .oracle import CHARGE, STATE_FAMILIES

logger = logging.getLogger(__name__)

Number = Union[int, float]

SCENARIO_FIELDS = OPIOSign({
    "geometry": Parameter(
        Dict[str, Number], unit="length",
        help="cavity walls {a, b} or length and acceleration {delta, h}",
        default={"delta": 1.0, "h": 0.1}),
    "s": Parameter(Number, help="boundary spectrum offset in [0, 1)",
                   default=0.0),
    "theta": Parameter(Number, unit="rad", help="boundary phase",
                       default=0.0),
    "segments": Parameter(
        Optional[List[Dict[str, Any]]], unit="proper time",
        help="trajectory as [{kind, duration}], overrides u and v",
        default=None),
    "u": Parameter(Number, help="accelerated duration in degradation periods",
                   default=0.5),
    "v": Parameter(Optional[Number],
                   help="inertial coast of a one-way trip in periods 2 delta",
                   default=None),
    "state_family": Parameter(str, help="two-mode-plus, two-mode-minus or "
                              "charge", default="two-mode-plus"),
    "k": Parameter(int, help="Rob's mode", default=1),
    "k_prime": Parameter(Optional[int], help="antiparticle mode of the charge "
                         "state", default=None),
    "h_numeric": Parameter(Optional[Number], help="acceleration parameter of "
                           "the reported measures, defaults to the geometry's",
                           default=None),
    "s_values": Parameter(List[Number], help="boundary offsets of figure2",
                          default=[0.0, 0.25, 0.5, 0.75]),
    "k_values": Parameter(List[int], help="modes of figure2",
                          default=[1, -1]),
    "u_points": Parameter(int, help="u grid points of figure2", default=101),
    "grid": Parameter(List[int], help="(u, v) grid of figure3",
                      default=[100, 100]),
    "window": Parameter(Optional[int], help="composition window M",
                        default=None),
    "sum_window": Parameter(Optional[int], help="window M of the truncated "
                            "series", default=None),
    "oracle_tolerance": Parameter(Optional[Number], default=None),
    "absolute_tolerance": Parameter(Optional[Number], default=None),
    "series_tolerance": Parameter(Optional[Number], default=None),
    "out": Parameter(Optional[str], help="output CSV path", default=None),
})

SETTING_KEYS = ("window", "sum_window", "oracle_tolerance",
                "absolute_tolerance", "series_tolerance")


class ScenarioConfig:
    """
    Validated scenario configuration

    Args:
        values: field values, missing fields take their defaults
    """

    def __init__(self, **values) -> None:
        unknown = sorted(set(values) - set(SCENARIO_FIELDS))
        if unknown:
            raise ConfigError("Unknown configuration keys: %s" %
                              ", ".join(unknown))
        data = {}
        defaults = SCENARIO_FIELDS.defaults()
        for key, sign in SCENARIO_FIELDS.items():
            value = values.get(key, defaults[key])
            if value is not None:
                try:
                    check_type(key, value, sign.type)
                except TypeError as e:
                    raise ConfigError("Invalid value for %s: %s" % (key, e))
            data[key] = value
        self._data = data
        self._validate()

    def _validate(self):
        d = self._data
        for key in ("u_points",):
            if d[key] < 2:
                raise ConfigError("%s must be at least 2, got %s" % (
                    key, d[key]))
        if len(d["grid"]) != 2 or min(d["grid"]) < 2:
            raise ConfigError("grid must be two sizes >= 2, got %s" %
                              d["grid"])
        for key in ("window", "sum_window"):
            if d[key] is not None and d[key] < 1:
                raise ConfigError("%s must be >= 1, got %s" % (key, d[key]))
        if d["state_family"] not in STATE_FAMILIES:
            raise ConfigError("Unknown state family %s, expected one of %s" %
                              (d["state_family"], STATE_FAMILIES))
        if d["state_family"] == CHARGE:
            if d["k_prime"] is None or d["k"] < 0 or d["k_prime"] >= 0:
                raise ConfigError("The charge state needs k >= 0 and k' < 0, "
                                  "got k=%s, k'=%s" % (d["k"], d["k_prime"]))
        elif d["k_prime"] is not None:
            raise ConfigError("k_prime is only used by the charge state")
        if not (math.isfinite(d["u"]) and d["u"] >= 0):
            raise ConfigError("u must be non-negative, got %s" % d["u"])
        if d["v"] is not None and not d["v"] >= 0:
            raise ConfigError("v must be non-negative, got %s" % d["v"])
        if d["h_numeric"] is not None and not d["h_numeric"] >= 0:
            raise ConfigError("h_numeric must be non-negative, got %s" %
                              d["h_numeric"])
        for s in d["s_values"]:
            if not 0 <= s < 1:
                raise ConfigError("s values must lie in [0, 1), got %s" % s)
        # builds and validates geometry and trajectory
        self.scenario()

    def __getitem__(self, key):
        return self._data[key]

    def setting(self, key: str) -> Any:
        """Scenario override of a global setting, else config[key]"""
        value = self._data[key]
        return config[key] if value is None else value

    def apply(self) -> None:
        """Push the scenario's setting overrides into the global config"""
        overrides = {k: self._data[k] for k in SETTING_KEYS
                     if self._data[k] is not None}
        if overrides:
            logger.debug("Scenario overrides %s" % overrides)
            set_config(**overrides)

    def geometry(self, s: Optional[float] = None) -> CavityGeometry:
        g = self._data["geometry"]
        s = self._data["s"] if s is None else s
        try:
            if set(g) == {"a", "b"}:
                return CavityGeometry(g["a"], g["b"], s, self._data["theta"])
            if set(g) == {"delta", "h"}:
                return CavityGeometry.from_delta_h(g["delta"], g["h"], s,
                                                   self._data["theta"])
        except ValueError as e:
            raise ConfigError("Invalid geometry: %s" % e)
        raise ConfigError("geometry needs keys {a, b} or {delta, h}, got %s" %
                          sorted(g))

    def scenario(self, geom: Optional[CavityGeometry] = None
                 ) -> TravelScenario:
        if geom is None:
            geom = self.geometry()
        d = self._data
        try:
            if d["segments"] is not None:
                segments = []
                for seg in d["segments"]:
                    if set(seg) != {"kind", "duration"}:
                        raise ConfigError("Segments need keys {kind, "
                                          "duration}, got %s" % sorted(seg))
                    segments.append(Segment(seg["kind"], seg["duration"]))
                return TravelScenario(geom, segments)
            tau1 = proper_time_from_u(geom, d["u"])
            if d["v"] is None:
                return TravelScenario.single(geom, tau1)
            return TravelScenario.one_way(geom, tau1,
                                          proper_time_from_v(geom, d["v"]))
        except (TypeError, ValueError) as e:
            raise ConfigError("Invalid trajectory: %s" % e)

    @property
    def h_numeric(self) -> float:
        h = self._data["h_numeric"]
        return self.geometry().h if h is None else float(h)

    def override(self, **kwargs) -> "ScenarioConfig":
        """Copy with the non-None keyword values replaced"""
        values = copy.deepcopy(self._data)
        values.update({k: v for k, v in kwargs.items() if v is not None})
        return ScenarioConfig(**values)

    def to_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._data)

    def __repr__(self):
        return "ScenarioConfig(%s)" % dumps(self._data)


def load_scenario_config(path: str, **overrides) -> ScenarioConfig:
    """
    Read a scenario file

    Args:
        path: JSON or YAML file
        overrides: field values taking precedence over the file
    """
    try:
        with open(path, "r") as f:
            values = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError("Cannot parse %s: %s" % (path, e))
    except OSError as e:
        raise OSError("Cannot read scenario file %s: %s" % (path, e)) from e
    if values is None:
        values = {}
    if not isinstance(values, dict):
        raise ConfigError("Scenario file %s must hold a mapping" % path)
    logger.debug("Loaded scenario %s" % path)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ScenarioConfig(**values)
