"""Independent reliability oracles: exhaustive enumeration and Monte Carlo."""

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product

import numpy as np
from loguru import logger

from src.config import PolarityConfig, resolve_config
from src.errors import StateSpaceError
from src.models import MonteCarloEstimate, ProbabilityTable, SystemSpec
from src.reliability.evaluate import check_table
from src.reliability.families import minimal_paths


def _level_paths(system: SystemSpec, j: int) -> list[tuple[int, ...]]:
    if j <= 0:
        return [(0,) * system.num_components]
    if j > system.system_levels:
        return []
    return minimal_paths(system, j)


def exhaustive_reliability(
    system: SystemSpec, probs: ProbabilityTable, j: int, config: PolarityConfig | None = None
) -> Fraction:
    """Sum of Pr(state) over all state vectors dominating some minimal j-path.

    Raises:
        StateSpaceError: If the product of (m_i + 1) exceeds the configured limit
    """
    check_table(system, probs)
    limit = resolve_config(config).exhaustive_state_limit
    size = math.prod(m + 1 for m in system.state_counts)
    if size > limit:
        raise StateSpaceError(
            f"State space has {size} vectors, above the exhaustive limit of {limit}; "
            f"use monte_carlo instead"
        )

    paths = _level_paths(system, j)
    total = Fraction(0)
    for state in product(*(range(m + 1) for m in system.state_counts)):
        if any(all(s >= a for s, a in zip(state, path)) for path in paths):
            weight = Fraction(1)
            for component, s in enumerate(state):
                weight *= probs.point_masses[component][s]
            total += weight
    logger.debug(f"Exhaustive oracle: {size} states, {len(paths)} minimal paths")
    return total


def _chunk_hits(
    seed: int,
    chunk: int,
    size: int,
    cumulative: list[np.ndarray],
    paths: np.ndarray,
) -> int:
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chunk,))))
    uniforms = rng.random((size, len(cumulative)))
    states = np.empty((size, len(cumulative)), dtype=np.int64)
    for component, edges in enumerate(cumulative):
        states[:, component] = np.searchsorted(edges, uniforms[:, component], side="right")

    hits = np.zeros(size, dtype=bool)
    for path in paths:
        hits |= np.all(states >= path, axis=1)
    return int(hits.sum())


def monte_carlo(
    system: SystemSpec,
    probs: ProbabilityTable,
    j: int,
    trials: int,
    seed: int = 0,
    workers: int = 1,
    config: PolarityConfig | None = None,
) -> MonteCarloEstimate:
    """Estimate R_{S,j} by sampling component states.

    Trials are split into fixed-size chunks, each drawing from its own Philox
    stream keyed by (seed, chunk index), so the estimate depends only on
    (seed, trials) and not on ``workers``.

    Raises:
        ValueError: If trials < 1
    """
    check_table(system, probs)
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    chunk_size = resolve_config(config).monte_carlo_chunk_size

    # Inner edges of the inverse CDF; sampled states always lie in 0..m_i
    cumulative = [
        np.cumsum([float(p) for p in row])[:-1] for row in probs.point_masses
    ]
    paths = np.array(_level_paths(system, j), dtype=np.int64).reshape(-1, system.num_components)

    sizes = [min(chunk_size, trials - start) for start in range(0, trials, chunk_size)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        hits = sum(
            pool.map(
                lambda job: _chunk_hits(seed, job[0], job[1], cumulative, paths),
                enumerate(sizes),
            )
        )

    mean = hits / trials
    std_error = math.sqrt(mean * (1 - mean) / trials)
    logger.info(f"Monte Carlo R_{j}: {mean:.6f} +/- {std_error:.6f} over {trials} trials")
    return MonteCarloEstimate(mean=mean, std_error=std_error, trials=trials, seed=seed)
