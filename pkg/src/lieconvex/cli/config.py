"""Run configuration.

Sources, lowest priority first: the ``LIECONVEX_CACHE`` environment
variable, an INI-style config file with a ``[lieconvex]`` section, then
command-line flags.  Recognized keys mirror the fields of :class:`Config`::

    [lieconvex]
    dimension_ceiling = 1000000
    instance_budget = 100000
    cache_path = ~/.cache/lieconvex/weights.json
    seed = 7
    output = text
"""
from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, fields

from ..charmult import DEFAULT_DIMENSION_CEILING
from ..convexity import DEFAULT_INSTANCE_BUDGET

CACHE_ENV = "LIECONVEX_CACHE"
OUTPUTS = ("text", "structured")


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    dimension_ceiling: int = DEFAULT_DIMENSION_CEILING
    instance_budget: int = DEFAULT_INSTANCE_BUDGET
    cache_path: str | None = None
    seed: int | None = None
    output: str = "text"

    def validate(self) -> "Config":
        if self.dimension_ceiling <= 0 or self.instance_budget <= 0:
            raise ConfigError("ceilings must be positive")
        if self.output not in OUTPUTS:
            raise ConfigError(f"output must be one of {OUTPUTS}, got {self.output!r}")
        return self


def _coerce(name: str, raw: str):
    if name in ("dimension_ceiling", "instance_budget", "seed"):
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if name == "cache_path":
        return os.path.expanduser(raw)
    return raw


def read_file(path: str) -> dict:
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except (OSError, configparser.Error) as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from None
    if not parser.has_section("lieconvex"):
        return {}
    known = {f.name for f in fields(Config)}
    out = {}
    for key, raw in parser.items("lieconvex"):
        if key not in known:
            raise ConfigError(f"unknown config key {key!r} in {path}")
        out[key] = _coerce(key, raw)
    return out


def resolve(flags: dict, config_file: str | None = None, environ=None) -> Config:
    environ = os.environ if environ is None else environ
    values: dict = {}
    if environ.get(CACHE_ENV):
        values["cache_path"] = environ[CACHE_ENV]
    if config_file:
        values.update(read_file(config_file))
    values.update({k: v for k, v in flags.items() if v is not None})
    return Config(**values).validate()
