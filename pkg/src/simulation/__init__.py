"""TTF simulation, r-aggregation and Monte Carlo false-alarm estimation."""

from .models import Phase, Scenario, StateOverride
from .simulator import (
    RNG_NAME,
    ScenarioError,
    aggregate_r,
    erlang_lift,
    estimate_false_alarm_rate,
    example_scenarios,
    run_scenario,
)

__all__ = [
    'Phase', 'Scenario', 'StateOverride',
    'RNG_NAME', 'ScenarioError', 'aggregate_r', 'erlang_lift',
    'estimate_false_alarm_rate', 'example_scenarios', 'run_scenario',
]
