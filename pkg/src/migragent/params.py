"""Simulation parameters and the plain-text ``key = value`` config format."""

import dataclasses
from dataclasses import dataclass

from .errors import ConfigError

INTAKE_POLICIES = ("literal", "calibrated")

# Exponent applied to speed_intake/100 under the calibrated intake policy.
# Chosen so that a speed-1 inflow reaches ~50% cumulative entry after 1000
# ticks while speed 100 still means certain entry on the first tick.
CALIBRATED_INTAKE_EXPONENT = 1.58


@dataclass
class SimParams:
    """All knobs of a single simulation run.

    ``grid_width``/``grid_height`` describe the requested world; when
    ``grid_auto_scale`` is on (the default) the grid is enlarged as needed so
    that each half-region keeps at least twice its peak population in cells,
    which guarantees free cells for relocation. Use :meth:`effective_grid`
    to see the dimensions a run will actually use.
    """

    number_local: int = 500
    number_migrant: int = 500
    conservatism_local: float = 0.0
    conservatism_migrant: float = 0.0
    init_sd: float = 0.45
    speed_intake: int = 100
    intake_policy: str = "calibrated"
    ticks: int = 1000
    grid_width: int = 52
    grid_height: int = 26
    grid_auto_scale: bool = True
    happiness_threshold: float = 0.5
    neighbor_radius: float = 1.5
    conservatism_bounds: tuple[float, float] = (-1.0, 1.0)
    seed: int = 42

    def validate(self) -> None:
        """Raise :class:`ConfigError` on any out-of-range field."""
        if self.number_local < 0 or self.number_migrant < 0:
            raise ConfigError("agent counts must be non-negative")
        if not 1 <= self.speed_intake <= 100:
            raise ConfigError(f"speed_intake must be in [1, 100], got {self.speed_intake}")
        if self.intake_policy not in INTAKE_POLICIES:
            raise ConfigError(f"intake_policy must be one of {INTAKE_POLICIES}, got {self.intake_policy!r}")
        if self.init_sd <= 0:
            raise ConfigError("init_sd must be positive")
        if self.ticks < 0:
            raise ConfigError("ticks must be non-negative")
        if self.grid_width < 2 or self.grid_height < 1:
            raise ConfigError("grid must be at least 2x1")
        if self.grid_width % 2 != 0:
            raise ConfigError("grid_width must be even (the world splits into two equal halves)")
        if not 0.0 <= self.happiness_threshold <= 1.0:
            raise ConfigError("happiness_threshold must be in [0, 1]")
        if self.neighbor_radius <= 0:
            raise ConfigError("neighbor_radius must be positive")
        lo, hi = self.conservatism_bounds
        if not lo < hi:
            raise ConfigError("conservatism_bounds must be an increasing pair")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        if not self.grid_auto_scale:
            self._check_capacity(self.grid_width, self.grid_height)

    def _check_capacity(self, width: int, height: int) -> None:
        host_cells = (width - width // 2) * height
        home_cells = (width // 2) * height
        host_peak = self.number_local + self.number_migrant
        if 2 * host_peak > host_cells:
            raise ConfigError(
                f"host region has {host_cells} cells but needs at least "
                f"{2 * host_peak} (2x peak population {host_peak})"
            )
        if 2 * self.number_migrant > home_cells:
            raise ConfigError(
                f"home region has {home_cells} cells but needs at least "
                f"{2 * self.number_migrant} (2x peak population {self.number_migrant})"
            )

    def effective_grid(self) -> tuple[int, int]:
        """Grid dimensions after auto-scaling for the 2x-headroom rule."""
        width, height = self.grid_width, self.grid_height
        if not self.grid_auto_scale:
            return width, height
        host_peak = self.number_local + self.number_migrant
        home_peak = self.number_migrant
        while ((width - width // 2) * height < 2 * host_peak
               or (width // 2) * height < 2 * home_peak):
            if height < width:
                height *= 2
            else:
                width *= 2
        return width, height


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(SimParams)}


def _coerce(name: str, raw: str):
    """Convert the raw string from a config file to the field's type."""
    kind = _FIELD_TYPES[name]
    try:
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        if kind == "bool":
            low = raw.lower()
            if low in ("true", "1", "yes", "on"):
                return True
            if low in ("false", "0", "no", "off"):
                return False
            raise ValueError(raw)
        if kind == "tuple[float, float]":
            parts = [float(p) for p in raw.split(",")]
            if len(parts) != 2:
                raise ValueError(raw)
            return (parts[0], parts[1])
        return raw
    except ValueError as exc:
        raise ConfigError(f"invalid value for {name}: {raw!r}") from exc


def parse_kv_text(text: str) -> dict[str, str]:
    """Parse ``key = value`` lines; '#' starts a comment, blanks ignored."""
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line.strip()!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def params_from_mapping(raw: dict[str, str], base: SimParams | None = None) -> SimParams:
    """Build validated SimParams from string key/values; unknown keys error."""
    params = dataclasses.replace(base) if base is not None else SimParams()
    for key, value in raw.items():
        if key not in _FIELD_TYPES:
            raise ConfigError(f"unknown parameter {key!r}")
        setattr(params, key, _coerce(key, value))
    params.validate()
    return params


def load_params(path) -> SimParams:
    """Read a run configuration file."""
    with open(path, encoding="utf-8") as fh:
        return params_from_mapping(parse_kv_text(fh.read()))
