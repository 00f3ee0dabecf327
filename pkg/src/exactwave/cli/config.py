import json
from dataclasses import dataclass, field, asdict

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from exactwave.base.errors import ConfigError
from exactwave.media import PROFILE_KEYS
from exactwave.numeric.grids import MIN_NODES, DEFAULT_MARGIN
from exactwave.riccati import FAMILY_PARAMS
from exactwave.transforms import MAP_KINDS
from exactwave.waveforms import WAVEFORM_KINDS

_NUMBER = {"type": "number"}
_NULLABLE = {"type": ["number", "null"]}
_PAIR = {"type": "array", "prefixItems": [_NUMBER, _NUMBER], "items": False, "minItems": 2}
_AXIS = {"type": "array",
         "prefixItems": [_NUMBER, _NUMBER, {"type": "integer", "minimum": MIN_NODES}],
         "items": False, "minItems": 3}
_FAMILIES = sorted(FAMILY_PARAMS)

SCENE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "exactwave scene",
    "type": "object",
    "additionalProperties": False,
    "$defs": {
        "profile": {
            "type": "object", "required": ["kind"], "additionalProperties": False,
            "properties": {
                "kind": {"enum": sorted(PROFILE_KEYS)},
                "speed": _NUMBER, "alpha": _NUMBER, "m1": _NUMBER, "m2": _NUMBER,
                "s1": _NUMBER, "s2": _NUMBER, "c1": _NUMBER, "c2": _NUMBER,
                "base": _NULLABLE,
                "family": {"enum": _FAMILIES}, "b": _NULLABLE, "y_bracket": _PAIR,
                "poly": {"type": "array", "items": _NUMBER, "minItems": 1},
                "domain": {"type": "array", "prefixItems": [_NULLABLE, _NULLABLE],
                           "items": False, "minItems": 2},
                "radial": {"$ref": "#/$defs/profile"}}},
        "waveform": {
            "type": "object", "required": ["kind"], "additionalProperties": False,
            "properties": {
                "kind": {"enum": sorted(WAVEFORM_KINDS) + ["shifted"]},
                "params": {"type": "array", "items": _NUMBER},
                "waveform": {"$ref": "#/$defs/waveform"},
                "tau": _NUMBER}},
        "seed": {
            "type": "object", "required": ["waveform"], "additionalProperties": False,
            "properties": {
                "c": {"type": "number", "exclusiveMinimum": 0},
                "angle": _NUMBER,
                "direction": {"type": "array", "items": _NUMBER, "minItems": 2, "maxItems": 3},
                "waveform": {"$ref": "#/$defs/waveform"}}},
    },
    "properties": {
        "profile": {"$ref": "#/$defs/profile"},
        "waveforms": {"type": "object", "additionalProperties": False,
                      "properties": {"T": {"$ref": "#/$defs/waveform"},
                                     "X": {"$ref": "#/$defs/waveform"}}},
        "solution": {"type": "object", "additionalProperties": False,
                     "properties": {
                         "rank": {"enum": [0, 1]},
                         "params": {"type": "object", "additionalProperties": False,
                                    "required": ["r", "m", "m1", "c1", "c2"],
                                    "properties": {k: _NUMBER
                                                   for k in ("r", "m", "m1", "c1", "c2")}},
                         "sample_interval": _PAIR}},
        "grid": {"type": "object", "additionalProperties": False,
                 "properties": {"t": _AXIS, "x": _AXIS,
                                "margin": {"type": "number", "minimum": 0}}},
        "transform": {"type": "object", "additionalProperties": False,
                      "required": ["kind", "seed", "points"],
                      "properties": {
                          "kind": {"enum": sorted(MAP_KINDS) + ["kelvin_3d"]},
                          "seed": {"$ref": "#/$defs/seed"},
                          "t": _NUMBER,
                          "points": {"type": "array", "minItems": 1,
                                     "items": {"type": "array", "items": _NUMBER,
                                               "minItems": 2, "maxItems": 3}},
                          "h": {"type": "number", "exclusiveMinimum": 0},
                          "levels": {"type": "integer", "minimum": 2},
                          "stencil_order": {"enum": [2, 4]}}},
        "riccati": {"type": "object", "additionalProperties": False,
                    "required": ["family", "y_end"],
                    "properties": {"family": {"enum": _FAMILIES},
                                   "b": _NULLABLE, "y0": _NUMBER, "y_end": _NUMBER,
                                   "samples": {"type": "integer", "minimum": 2}}},
        "bench": {"type": "object", "additionalProperties": False,
                  "properties": {"n0": {"type": "integer", "minimum": MIN_NODES},
                                 "cfl": {"type": "number", "exclusiveMinimum": 0,
                                         "maximum": 1},
                                 "t_end": _NULLABLE}},
        "sweep": {"type": "object", "additionalProperties": False,
                  "properties": {"count": {"type": "integer", "minimum": 1}}},
        "tolerances": {"type": "object", "additionalProperties": False,
                       "properties": {"residual": _NUMBER, "order_min": _NUMBER,
                                      "order_max": _NUMBER, "transform_order": _NUMBER,
                                      "riccati": _NUMBER}},
        "output": {"type": "object", "additionalProperties": False,
                   "properties": {"prefix": {"type": "string", "minLength": 1}}},
    },
}

_VALIDATOR = Draft202012Validator(SCENE_SCHEMA)


def validate_scene(data):
    """ Raise ConfigError with the key path of the most relevant schema
    violation in data, if any
    """
    error = best_match(_VALIDATOR.iter_errors(data))
    if error is not None:
        path = ".".join(str(p) for p in error.absolute_path) or "scene"
        raise ConfigError(f"'{path}': {error.message}")


@dataclass(frozen=True)
class AxisConfig:
    lo: float
    hi: float
    n: int

    @classmethod
    def from_list(cls, value, path):
        lo, hi, n = float(value[0]), float(value[1]), int(value[2])
        if not lo < hi:
            raise ConfigError(f"'{path}' describes an empty grid: {value} (need lo < hi)")
        return cls(lo, hi, n)


@dataclass(frozen=True)
class GridConfig:
    t: AxisConfig = None
    x: AxisConfig = None
    margin: float = DEFAULT_MARGIN


@dataclass(frozen=True)
class SolutionConfig:
    rank: int = 0
    params: dict = None
    sample_interval: tuple = None


@dataclass(frozen=True)
class TransformConfig:
    kind: str
    seed: dict
    points: tuple
    t: float = 0.3
    h: float = 0.02
    levels: int = 3
    stencil_order: int = 2


@dataclass(frozen=True)
class RiccatiConfig:
    family: str
    y_end: float
    b: float = None
    y0: float = 0.0
    samples: int = 201


@dataclass(frozen=True)
class BenchConfig:
    n0: int = 257
    cfl: float = 0.9
    t_end: float = None


@dataclass(frozen=True)
class ToleranceConfig:
    residual: float = 1e-10
    order_min: float = 1.8
    order_max: float = 2.2
    transform_order: float = 1.9
    riccati: float = 1e-8


def _optional(value):
    return None if value is None else float(value)


@dataclass(frozen=True)
class SceneConfig:
    """ A validated scene. Descriptors of profiles, waveforms and seed
    solutions are kept as dicts and built by the commands that use them
    """
    profile: dict = None
    waveforms: dict = field(default_factory=dict)
    solution: SolutionConfig = field(default_factory=SolutionConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    transform: TransformConfig = None
    riccati: RiccatiConfig = None
    bench: BenchConfig = field(default_factory=BenchConfig)
    sweep_count: int = 10
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    prefix: str = None

    @classmethod
    def from_dict(cls, data):
        """ Function to validate a scene dict against SCENE_SCHEMA and
        build the frozen configuration from it

        Raises
        ------
        ConfigError
            Naming the offending key path for unknown keys, missing keys,
            wrong types and empty grids
        """
        validate_scene(data)

        s = data.get("solution", {})
        params = s.get("params")
        interval = s.get("sample_interval")
        solution = SolutionConfig(
            rank=int(s.get("rank", 0)),
            params=None if params is None else {k: float(v) for k, v in params.items()},
            sample_interval=None if interval is None else tuple(map(float, interval)))

        g = data.get("grid", {})
        grid = GridConfig(
            t=AxisConfig.from_list(g["t"], "grid.t") if "t" in g else None,
            x=AxisConfig.from_list(g["x"], "grid.x") if "x" in g else None,
            margin=float(g.get("margin", DEFAULT_MARGIN)))

        transform = None
        if "transform" in data:
            tr = data["transform"]
            dim = 3 if tr["kind"] == "kelvin_3d" else 2
            if any(len(point) != dim for point in tr["points"]):
                raise ConfigError(f"'transform.points': {tr['kind']} needs points "
                                  f"with {dim} coordinates")
            transform = TransformConfig(
                kind=tr["kind"], seed=tr["seed"],
                points=tuple(tuple(map(float, p)) for p in tr["points"]),
                t=float(tr.get("t", 0.3)), h=float(tr.get("h", 0.02)),
                levels=int(tr.get("levels", 3)), stencil_order=int(tr.get("stencil_order", 2)))

        riccati = None
        if "riccati" in data:
            r = data["riccati"]
            riccati = RiccatiConfig(family=r["family"], y_end=float(r["y_end"]),
                                    b=_optional(r.get("b")), y0=float(r.get("y0", 0.0)),
                                    samples=int(r.get("samples", 201)))

        b = data.get("bench", {})
        bench = BenchConfig(n0=int(b.get("n0", 257)), cfl=float(b.get("cfl", 0.9)),
                            t_end=_optional(b.get("t_end")))

        tolerances = ToleranceConfig(**{k: float(v)
                                        for k, v in data.get("tolerances", {}).items()})
        return cls(profile=data.get("profile"), waveforms=dict(data.get("waveforms", {})),
                   solution=solution, grid=grid, transform=transform, riccati=riccati,
                   bench=bench, sweep_count=int(data.get("sweep", {}).get("count", 10)),
                   tolerances=tolerances, prefix=data.get("output", {}).get("prefix"))

    @classmethod
    def from_file(cls, path):
        try:
            with open(path) as f:
                data = json.load(f)
        except OSError as err:
            raise ConfigError(f"cannot read scene file {path}: {err}") from err
        except json.JSONDecodeError as err:
            raise ConfigError(f"scene file {path} is not valid JSON: {err}") from err
        return cls.from_dict(data)

    def require(self, *names):
        """ Raise ConfigError unless the named sections are present """
        for name in names:
            if name == "grid.t" and self.grid.t is None:
                raise ConfigError("this command needs 'grid.t'")
            if name == "grid.x" and self.grid.x is None:
                raise ConfigError("this command needs 'grid.x'")
            if name in ("profile", "transform", "riccati") and getattr(self, name) is None:
                raise ConfigError(f"this command needs a '{name}' section")
            if name == "waveforms" and set(self.waveforms) != {"T", "X"}:
                raise ConfigError("this command needs 'waveforms.T' and 'waveforms.X'")

    def to_dict(self):
        """ The fully resolved scene, defaults included """
        return asdict(self)
