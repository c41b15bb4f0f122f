"""Exact solutions of the generalized Nizhnik-Novikov-Veselov system and their residual checks.

Scenarios are plain dicts in the same JSON layout the wavekit command-line tool reads and writes.
"""

import json

from . import _core
from ._core import FormatError, IoError, ParameterError, SingularPointError

__all__ = [
    "FormatError",
    "IoError",
    "ParameterError",
    "SingularPointError",
    "balance",
    "build_soliton",
    "build_threewave",
    "fields",
    "grid_csv",
    "list_cases",
    "sweep",
    "verify",
]


def _text(scenario):
    return scenario if isinstance(scenario, str) else json.dumps(scenario)


def balance():
    """Balance numbers and transform constants of the log-derivative ansatz."""
    return json.loads(_core.balance())


def build_soliton(family, p, **kwargs):
    """N-soliton scenario for family "A" or "B" with wave numbers p."""
    return json.loads(_core.build_soliton(family, [complex(v) for v in p], **kwargs))


def build_threewave(case, branch, eps=1, params=None, **kwargs):
    """Scenario for one (case, branch) of the three-wave catalog."""
    params = {k: complex(v) for k, v in (params or {}).items()}
    return json.loads(_core.build_threewave(case, branch, eps, params, **kwargs))


def verify(scenario):
    """Return (all_pass, acceptable, checks) for a scenario."""
    all_pass, acceptable, report = _core.verify(_text(scenario))
    return all_pass, acceptable, json.loads(report)


def fields(scenario, x, y, t):
    """(u, v, omega) at one point."""
    return _core.fields(_text(scenario), x, y, t)


def grid_csv(scenario):
    return _core.grid_csv(_text(scenario))


def list_cases():
    return json.loads(_core.list_cases())


def sweep(**kwargs):
    """One verdict per three-wave branch."""
    return json.loads(_core.sweep(**kwargs))
