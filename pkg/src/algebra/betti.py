"""Multigraded Betti numbers from the lcm lattice.

For every mu in the lcm lattice of I, beta_{i,mu}(I) is the dimension of the
reduced rational homology H_{i-1} of the complex of subsets of generators
dividing mu whose lcm is strictly below mu. That complex is homotopy
equivalent to the order complex of the open interval (0, mu).
"""

from itertools import combinations

from loguru import logger
from sympy import Matrix

from src.algebra.monomials import require_proper
from src.config import PolarityConfig, resolve_config
from src.errors import GeneratorLimitError
from src.models import BettiTable, Exponents, MonomialIdeal


def _lcm(vectors: tuple[Exponents, ...]) -> Exponents:
    return tuple(max(column) for column in zip(*vectors))


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm_lattice(ideal: MonomialIdeal) -> set[Exponents]:
    """All lcms of nonempty subsets of G(I)."""
    gens = [g.exponents for g in ideal.generators]
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = {_lcm((f, g)) for f in frontier for g in gens} - lattice
        lattice |= fresh
        frontier = fresh
    return lattice


def _faces_below(atoms: list[Exponents], top: Exponents) -> list[list[tuple[int, ...]]]:
    """Faces by dimension + 1: index 0 holds the empty face."""
    faces: list[list[tuple[int, ...]]] = [[()]]
    size = 1
    while size <= len(atoms):
        layer = [
            subset
            for subset in combinations(range(len(atoms)), size)
            if _lcm(tuple(atoms[i] for i in subset)) != top
        ]
        if not layer:
            break
        faces.append(layer)
        size += 1
    return faces


def _boundary_rank(faces: list[tuple[int, ...]], lower: list[tuple[int, ...]]) -> int:
    if not faces or not lower:
        return 0
    position = {face: row for row, face in enumerate(lower)}
    matrix = [[0] * len(faces) for _ in lower]
    for column, face in enumerate(faces):
        for k in range(len(face)):
            matrix[position[face[:k] + face[k + 1 :]]][column] = (-1) ** k
    return Matrix(matrix).rank()


def reduced_homology_dims(atoms: list[Exponents], top: Exponents) -> dict[int, int]:
    """Nonzero dims of reduced homology H_d, d >= -1, of the complex below ``top``."""
    faces = _faces_below(atoms, top)
    ranks = [_boundary_rank(faces[k], faces[k - 1]) if k else 0 for k in range(len(faces))]
    ranks.append(0)
    dims = {}
    for k, layer in enumerate(faces):
        dim = len(layer) - ranks[k] - ranks[k + 1]
        if dim:
            dims[k - 1] = dim
    return dims


def betti_numbers(ideal: MonomialIdeal, config: PolarityConfig | None = None) -> BettiTable:
    """Exact multigraded Betti numbers of I over the rationals.

    Args:
        ideal: Proper monomial ideal
        config: Limits; ``betti_generator_limit`` caps |G(I)|

    Returns:
        BettiTable with entries sorted by (i, multidegree)

    Raises:
        ImproperIdealError: For the zero or unit ideal
        GeneratorLimitError: If the ideal has too many generators
    """
    require_proper(ideal, "betti_numbers")
    limit = resolve_config(config).betti_generator_limit
    if len(ideal.generators) > limit:
        raise GeneratorLimitError(
            f"betti_numbers is limited to {limit} generators, got {len(ideal.generators)}; "
            f"use the Mayer-Vietoris tree ranks (mvt_ranks) as upper bounds instead"
        )

    gens = [g.exponents for g in ideal.generators]
    lattice = lcm_lattice(ideal)
    entries = []
    for mu in sorted(lattice, key=lambda m: (sum(m), m)):
        atoms = [g for g in gens if _divides(g, mu)]
        for d, dim in reduced_homology_dims(atoms, mu).items():
            entries.append((d + 1, mu, dim))

    entries.sort(key=lambda e: (e[0], sum(e[1]), tuple(-a for a in e[1])))
    logger.debug(f"Betti numbers: lcm lattice of {len(lattice)} elements, {len(entries)} entries")
    return BettiTable(ideal.num_vars, tuple(entries))


def proj_dim(ideal: MonomialIdeal, config: PolarityConfig | None = None) -> int:
    """Projective dimension of the ideal I (pd of S/I is one more)."""
    return betti_numbers(ideal, config).proj_dim


def regularity(ideal: MonomialIdeal, config: PolarityConfig | None = None) -> int:
    """max(|mu| - i) over nonzero beta_{i,mu}."""
    return betti_numbers(ideal, config).regularity
