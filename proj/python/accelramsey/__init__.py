"""Acceleration radiation in a Ramsey interferometer (C++ core)."""

import json

from ._accelramsey import (
    DressedParams,
    Error,
    LabParams,
    amplitude_closed_form,
    amplitude_infinite_window,
    amplitude_quadrature,
    detection_probability,
    digamma,
    dressed_params,
    gamma,
    log_gamma,
    lower_incomplete_gamma,
    prob_finite_time,
    prob_high_acceleration,
    prob_thermal_limit,
    run_command,
    unruh_temperature,
    upper_incomplete_gamma,
    visibility,
    visibility_difference,
)
from ._accelramsey import selfcheck_json as _selfcheck_json


def selfcheck(tolerance_override=None, sweep_points=60):
    """Run the invariant suite and return the report as a dict."""
    return json.loads(_selfcheck_json(tolerance_override, sweep_points))


def sweep(command, **settings):
    """Run a sweep command and return the parsed JSON document."""
    settings = {k: str(v) for k, v in settings.items()}
    settings["format"] = "json"
    return json.loads(run_command(command, settings))


__all__ = [name for name in dir() if not name.startswith("_")]
