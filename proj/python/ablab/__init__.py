"""Vector-potential phases, field-overlap energies and a truncated-mode radiation model."""

import json as _json

from ._core import (
    canonical_energy,
    canonical_scenario,
    closed_loop_phase,
    config_digest,
    constants,
    element_overlap_energy,
    flux_phase,
    overlap_energy,
    solenoid_flux,
    study_names,
    vector_potential,
    version,
)
from . import _core as _core


def run_study(scenario, study, overrides=()):
    """Run one named study on a scenario (dict or JSON text); returns a dict."""
    text = scenario if isinstance(scenario, str) else _json.dumps(scenario)
    return _json.loads(_core.run_study(text, study, list(overrides)))


__version__ = version().split()[-1]

__all__ = [
    "canonical_energy",
    "canonical_scenario",
    "closed_loop_phase",
    "config_digest",
    "constants",
    "element_overlap_energy",
    "flux_phase",
    "overlap_energy",
    "run_study",
    "solenoid_flux",
    "study_names",
    "vector_potential",
    "version",
]
