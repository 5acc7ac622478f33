"""Analysis settings and the key=value config file."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Optional

from .groebner import DEFAULT_STEP_CAP

CONFIG_ENV = "QHCURVE_CONFIG"


@dataclass(frozen=True)
class AnalysisConfig:
    """Knobs shared by the analyzer and the CLI.

    step_cap        S-pair budget per Groebner basis run
    plateau_window  consecutive equal Hilbert function values required by
                    stable_degree (None: max(3, d))
    experiment      allow the rank criterion on 3-syzygy curves
    output_format   "text" or "json"
    local_method    "saturation" or "truncation" for local Milnor/Tjurina
    """

    step_cap: int = DEFAULT_STEP_CAP
    plateau_window: Optional[int] = None
    experiment: bool = False
    output_format: str = "text"
    local_method: str = "saturation"

    def __post_init__(self):
        if self.step_cap <= 0:
            raise ValueError("step_cap must be positive")
        if self.plateau_window is not None and self.plateau_window <= 0:
            raise ValueError("plateau_window must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be text or json")
        if self.local_method not in ("saturation", "truncation"):
            raise ValueError("local_method must be saturation or truncation")


_BOOL = {"1": True, "true": True, "yes": True, "on": True,
         "0": False, "false": False, "no": False, "off": False}


def _convert(name: str, raw: str):
    raw = raw.strip()
    if name in ("step_cap",):
        return int(raw)
    if name == "plateau_window":
        return None if raw.lower() in ("", "none", "auto") else int(raw)
    if name == "experiment":
        try:
            return _BOOL[raw.lower()]
        except KeyError:
            raise ValueError("experiment must be a boolean, got %r" % raw) from None
    return raw


def parse_config(text: str, base: AnalysisConfig = AnalysisConfig()) -> AnalysisConfig:
    """Parse ``key = value`` lines (``#`` comments, blank lines ignored)."""
    known = {f.name for f in fields(AnalysisConfig)}
    updates = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError("config line %d: expected key = value" % lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ValueError("config line %d: unknown key %r" % (lineno, key))
        updates[key] = _convert(key, value)
    return replace(base, **updates)


def load_config(path: Optional[str] = None) -> AnalysisConfig:
    """Config from ``path``, else from $QHCURVE_CONFIG, else defaults."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return AnalysisConfig()
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
