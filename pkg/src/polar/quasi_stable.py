"""Quasi-stable (nested type) test for monomial ideals."""

from loguru import logger

from src.algebra.monomials import intersect, saturate
from src.models import MonomialIdeal


def is_quasi_stable(ideal: MonomialIdeal) -> bool:
    """True when I : x_j^inf equals I : (x_1, ..., x_j)^inf for every j.

    The right-hand side is the intersection of the single-variable
    saturations I : x_i^inf for i <= j.
    """
    if ideal.is_zero or ideal.is_improper:
        return True
    running = None
    for j in range(ideal.num_vars):
        single = saturate(ideal, j)
        running = single if running is None else intersect(running, single)
        if single != running:
            logger.debug(f"Not quasi-stable: saturations differ at variable {j + 1}")
            return False
    return True
