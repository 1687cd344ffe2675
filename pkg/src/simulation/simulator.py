"""
Deterministic TTF simulation, r-failure aggregation and false-alarm estimation.

Random numbers come from numpy's PCG64 generator. Every (phase, event) pair
and every Monte Carlo shard gets its own ``SeedSequence`` child, so results
do not depend on evaluation order or on the number of worker threads.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Sequence

import numpy as np

from ..charts.acl import AngularLimits, limit_angles
from ..charts.models import Observation, StateTransition, SystemModel
from ..charts.scales import DrawingScale
from ..distributions import DistributionFamily, DistributionSpec, quantile, sample
from ..errors import ACCError
from ..utils.logger import get_logger
from .models import Phase, Scenario, StateOverride

RNG_NAME = "numpy.PCG64/SeedSequence v1"
MIN_MONTE_CARLO_SAMPLES = 10_000
SHARD_SIZE = 100_000

logger = get_logger("acc.simulation")


class ScenarioError(ACCError):
    """Invalid simulation scenario or aggregation request."""
    pass


def _generator(*entropy: int) -> np.random.Generator:
    seed, *key = entropy
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=tuple(key))))


def _phase_specs(system: SystemModel, phase: Phase) -> List[DistributionSpec]:
    labels = system.labels
    unknown = sorted(set(phase.overrides) - set(labels))
    if unknown:
        raise ScenarioError(f"overrides reference unknown state(s): {', '.join(unknown)}")

    specs = []
    for state in system.states:
        override: StateOverride = phase.overrides.get(state.label, StateOverride())
        spec = state.spec
        try:
            if override.scale is not None or override.shape is not None:
                spec = DistributionSpec(
                    family=spec.family,
                    scale=spec.scale if override.scale is None else override.scale,
                    shape=spec.shape if override.shape is None else override.shape,
                )
        except ValueError as e:
            raise ScenarioError(f"invalid override for {state.label}: {e}") from e
        specs.append(spec)
    return specs


def _phase_weights(system: SystemModel, phase: Phase) -> np.ndarray:
    n = len(system.states)
    if phase.weights is None:
        return np.full(n, 1.0 / n)
    weights = np.asarray(phase.weights, dtype=float)
    if weights.shape != (n,) or np.any(weights < 0) or not weights.sum() > 0:
        raise ScenarioError(
            f"phase weights must be {n} non-negative numbers with a positive sum, got {phase.weights}"
        )
    return weights / weights.sum()


def _open_uniform(rng: np.random.Generator) -> float:
    u = rng.random()
    while u == 0.0:
        u = rng.random()
    return float(u)


def run_scenario(scenario: Scenario) -> List[Observation]:
    """
    Generate observations phase by phase.

    Each event draws its state from the phase weights, then its TTF by
    inverse transform from that state's (possibly shifted) distribution.

    Raises:
        ScenarioError: override or weights do not fit the system
    """
    system = scenario.system
    observations: List[Observation] = []
    seq = 0

    for phase_index, phase in enumerate(scenario.phases):
        specs = _phase_specs(system, phase)
        weights = _phase_weights(system, phase)
        for event in range(phase.events):
            rng = _generator(scenario.seed, phase_index, event)
            state_index = int(rng.choice(len(specs), p=weights))
            ttf = sample(specs[state_index], _open_uniform(rng))
            seq += 1
            observations.append(Observation(seq=seq, state_index=state_index + 1, ttf=ttf))
        logger.debug(f"phase {phase_index + 1}: {phase.events} event(s)")

    logger.info(f"Simulated {len(observations)} observation(s) with seed {scenario.seed} ({RNG_NAME})")
    return observations


def aggregate_r(observations: Sequence[Observation], r: int) -> List[Observation]:
    """
    Sum every r consecutive TTFs of the same state.

    A trailing incomplete group per state is dropped. Output is ordered by
    the event that completes each group and renumbered from 1.
    """
    if r < 1:
        raise ScenarioError(f"r must be >= 1, got {r}")

    pending: Dict[int, List[float]] = {}
    completed: List[tuple] = []
    for observation in observations:
        group = pending.setdefault(observation.state_index, [])
        group.append(observation.ttf)
        if len(group) == r:
            completed.append((observation.seq, observation.state_index, math.fsum(group)))
            pending[observation.state_index] = []

    completed.sort(key=lambda item: item[0])
    return [
        Observation(seq=number, state_index=state_index, ttf=ttf)
        for number, (_, state_index, ttf) in enumerate(completed, start=1)
    ]


def erlang_lift(system: SystemModel, r: int) -> SystemModel:
    """
    System for r-aggregated data: Exponential(alpha) becomes Erlang(r, alpha).

    Raises:
        ScenarioError: a state is not exponential (its sum law is not supported)
    """
    if r < 1:
        raise ScenarioError(f"r must be >= 1, got {r}")
    others = [s.label for s in system.states if s.spec.family is not DistributionFamily.EXPONENTIAL]
    if others:
        raise ScenarioError(
            f"r-aggregation needs exponential states (Erlang sum law); not exponential: {', '.join(others)}"
        )
    states = [
        StateTransition(
            label=s.label,
            spec=DistributionSpec(family=DistributionFamily.ERLANG, scale=s.spec.scale, shape=r),
        )
        for s in system.states
    ]
    return system.replace(states=states)


def _native_samples(spec: DistributionSpec, rng: np.random.Generator, size: int) -> np.ndarray:
    """Variates from numpy's own samplers, independent of the quantile code."""
    family = spec.family.base
    alpha = spec.scale
    if family is DistributionFamily.EXPONENTIAL:
        return rng.exponential(alpha, size)
    if family is DistributionFamily.WEIBULL:
        return alpha * rng.weibull(spec.shape, size)
    if family is DistributionFamily.LOGNORMAL:
        return rng.lognormal(alpha, spec.shape, size)
    if family is DistributionFamily.FRECHET:
        return alpha / rng.weibull(spec.shape, size)
    if family is DistributionFamily.GAMMA:
        return rng.gamma(spec.shape, alpha, size)
    raise ScenarioError(f"no sampler for {spec.family}")


def _count_out_of_control(
    ttf: np.ndarray, t_c: float, limits: AngularLimits, scale: DrawingScale
) -> int:
    g = 1.0 / scale.root
    theta = np.degrees(np.arctan2(t_c ** g, np.power(ttf, g)))
    return int(np.count_nonzero((theta < limits.theta_U) | (theta > limits.theta_L)))


def estimate_false_alarm_rate(
    spec: DistributionSpec,
    c: float,
    scale: DrawingScale,
    n: int,
    seed: int,
    workers: int = 1,
) -> float:
    """
    Fraction of in-control samples the angular limits flag.

    Samples are split into fixed shards, each with its own seed child; the
    worker count only changes how shards are scheduled.

    Args:
        spec: In-control distribution
        c: False-alarm probability the limits are built for
        scale: Drawing scale
        n: Number of samples (>= 10^4)
        seed: Base seed
        workers: Threads used for shards

    Returns:
        Observed false-alarm rate
    """
    if n < MIN_MONTE_CARLO_SAMPLES:
        raise ScenarioError(f"need at least {MIN_MONTE_CARLO_SAMPLES} samples, got {n}")

    limits = limit_angles(spec, c, scale)
    t_c = quantile(spec, 0.5)
    sizes = [SHARD_SIZE] * (n // SHARD_SIZE)
    if n % SHARD_SIZE:
        sizes.append(n % SHARD_SIZE)
    children = np.random.SeedSequence(seed).spawn(len(sizes))

    def run_shard(index: int) -> int:
        rng = np.random.Generator(np.random.PCG64(children[index]))
        return _count_out_of_control(_native_samples(spec, rng, sizes[index]), t_c, limits, scale)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        flagged = sum(pool.map(run_shard, range(len(sizes))))

    rate = flagged / n
    logger.info(f"{spec.label}: {flagged}/{n} flagged (rate={rate:.5f}, target c={c})")
    return rate


def example_scenarios(seed: int = 2022) -> Dict[str, Scenario]:
    """
    The worked scenarios: Example I (exponential 100/400/800, shifted to
    400/200/200) and Example III (gamma/Rayleigh/Weibull, shifted to
    300/300/200/200). State weights follow the state counts of the printed
    Example I table; Example III uses uniform weights.
    """
    from ..charts.scales import DEFAULT_SCALE

    def spec(family: str, scale: float, shape=None) -> DistributionSpec:
        return DistributionSpec(family=family, scale=scale, shape=shape)

    example1 = SystemModel(
        states=[
            StateTransition(label="S1", spec=spec("exponential", 100)),
            StateTransition(label="S2", spec=spec("exponential", 400)),
            StateTransition(label="S3", spec=spec("exponential", 800)),
        ],
        scale=DEFAULT_SCALE,
    )
    example3 = SystemModel(
        states=[
            StateTransition(label="S1", spec=spec("gamma", 100, 1.0)),
            StateTransition(label="S2", spec=spec("rayleigh", 200)),
            StateTransition(label="S3", spec=spec("weibull", 600, 1.5)),
            StateTransition(label="S4", spec=spec("weibull", 1000, 2.0)),
        ],
        scale=DEFAULT_SCALE,
    )
    return {
        'example1': Scenario(system=example1, seed=seed, phases=[
            Phase(events=25, weights=[18, 4, 3]),
            Phase(events=25, weights=[4, 13, 8], overrides={
                'S1': StateOverride(scale=400),
                'S2': StateOverride(scale=200),
                'S3': StateOverride(scale=200),
            }),
        ]),
        'example3': Scenario(system=example3, seed=seed, phases=[
            Phase(events=25),
            Phase(events=25, overrides={
                'S1': StateOverride(scale=300),
                'S2': StateOverride(scale=300),
                'S3': StateOverride(scale=200),
                'S4': StateOverride(scale=200),
            }),
        ]),
    }
