"""Temporal meshes: uniform, graded, and their bisection refinements."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class TemporalMesh:
    """Breakpoints 0 = t_0 < ... < t_N = T of the time interval.

    Degrees of freedom sit at t_1..t_N; the t_0 node is removed by the
    homogeneous initial condition, so n_t equals the element count N.
    """

    breakpoints: np.ndarray

    def __post_init__(self):
        bp = np.ascontiguousarray(self.breakpoints, dtype=float)
        object.__setattr__(self, "breakpoints", bp)
        if bp[0] != 0.0:
            raise ValueError("temporal mesh must start at t = 0")
        if not (np.diff(bp) > 0).all():
            raise ValueError("breakpoints must be strictly increasing")

    @property
    def terminal_time(self) -> float:
        return float(self.breakpoints[-1])

    @property
    def num_elements(self) -> int:
        return len(self.breakpoints) - 1

    @property
    def num_dofs(self) -> int:
        return self.num_elements

    @property
    def steps(self) -> np.ndarray:
        return np.diff(self.breakpoints)

    @property
    def max_step(self) -> float:
        return float(self.steps.max())


def uniform(terminal_time: float, num_elements: int) -> TemporalMesh:
    """Uniform mesh t_l = T*l/N."""
    if terminal_time <= 0:
        raise ValueError("terminal time must be positive")
    if num_elements < 1:
        raise ValueError("need at least one element")
    ell = np.arange(num_elements + 1)
    return TemporalMesh(terminal_time * ell / num_elements)


def graded(terminal_time: float, num_elements: int, exponent: float) -> TemporalMesh:
    """Graded mesh t_l = T*(l/N)**q, clustering near t = 0 for q > 1."""
    if exponent < 1:
        raise ValueError("grading exponent must be >= 1")
    if terminal_time <= 0:
        raise ValueError("terminal time must be positive")
    if num_elements < 1:
        raise ValueError("need at least one element")
    ell = np.arange(num_elements + 1)
    return TemporalMesh(terminal_time * (ell / num_elements) ** exponent)


def refine_bisect(mesh: TemporalMesh) -> TemporalMesh:
    """Insert the midpoint of every interval, keeping existing breakpoints."""
    bp = mesh.breakpoints
    out = np.empty(2 * len(bp) - 1)
    out[::2] = bp
    out[1::2] = 0.5 * (bp[:-1] + bp[1:])
    return TemporalMesh(out)
