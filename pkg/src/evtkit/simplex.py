"""Derivative-free Nelder-Mead simplex minimization.

Plain reflection/expansion/contraction/shrink scheme. Objective values of
+inf (or NaN, treated as +inf) mark infeasible points and are handled as
worst-vertex, so hard constraint violations simply repel the simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError

_REFLECT = 1.0
_EXPAND = 2.0
_CONTRACT = 0.5
_SHRINK = 0.5


@dataclass(frozen=True)
class SimplexResult:
    x: np.ndarray
    fun: float
    converged: bool
    iterations: int
    n_evaluations: int


def nelder_mead(
    func: Callable[[np.ndarray], float],
    x0,
    initial_steps=0.1,
    max_iterations: int = 10_000,
    function_tolerance: float = 1e-8,
    parameter_tolerance: float = 1e-8,
) -> SimplexResult:
    """Minimize ``func`` starting from ``x0``.

    Parameters
    ----------
    func : callable
        Objective taking a 1-d coordinate array, returning a float.
    x0 : array_like
        Starting point; becomes the first vertex of the initial simplex.
    initial_steps : float or array_like
        Per-coordinate offsets used to build the other vertices.
    max_iterations : int
        Hard cap on simplex steps.
    function_tolerance, parameter_tolerance : float
        Converged when the spread of vertex function values is below
        ``function_tolerance`` and every coordinate spread is below
        ``parameter_tolerance``.

    Returns
    -------
    SimplexResult
        Best vertex found, its value, convergence flag, and counters.
    """
    x0 = np.atleast_1d(np.asarray(x0, dtype=float))
    ndim = x0.size
    steps = np.broadcast_to(np.asarray(initial_steps, dtype=float), (ndim,))
    if not np.all(np.isfinite(steps)) or np.any(steps == 0.0):
        raise DomainError("initial simplex steps must be finite and nonzero")

    n_evaluations = 0

    def evaluate(x: np.ndarray) -> float:
        nonlocal n_evaluations
        n_evaluations += 1
        value = float(func(x))
        return np.inf if np.isnan(value) else value

    vertices = np.tile(x0, (ndim + 1, 1))
    for i in range(ndim):
        vertices[i + 1, i] += steps[i]
    values = np.array([evaluate(v) for v in vertices])

    converged = False
    iterations = 0
    while True:
        order = np.argsort(values, kind="stable")
        vertices = vertices[order]
        values = values[order]

        f_spread = values[-1] - values[0]
        x_spread = np.max(vertices.max(axis=0) - vertices.min(axis=0))
        if f_spread < function_tolerance and x_spread < parameter_tolerance:
            converged = True
            break
        if iterations >= max_iterations:
            break
        iterations += 1

        centroid = vertices[:-1].mean(axis=0)
        reflected = centroid + _REFLECT * (centroid - vertices[-1])
        f_reflected = evaluate(reflected)

        if f_reflected < values[0]:
            expanded = centroid + _EXPAND * (centroid - vertices[-1])
            f_expanded = evaluate(expanded)
            if f_expanded < f_reflected:
                vertices[-1], values[-1] = expanded, f_expanded
            else:
                vertices[-1], values[-1] = reflected, f_reflected
        elif f_reflected < values[-2]:
            vertices[-1], values[-1] = reflected, f_reflected
        elif f_reflected < values[-1]:
            contracted = centroid + _CONTRACT * (reflected - centroid)
            f_contracted = evaluate(contracted)
            if f_contracted <= f_reflected:
                vertices[-1], values[-1] = contracted, f_contracted
            else:
                _shrink(vertices, values, evaluate)
        else:
            contracted = centroid - _CONTRACT * (centroid - vertices[-1])
            f_contracted = evaluate(contracted)
            if f_contracted < values[-1]:
                vertices[-1], values[-1] = contracted, f_contracted
            else:
                _shrink(vertices, values, evaluate)

    best = int(np.argmin(values))
    return SimplexResult(
        x=vertices[best].copy(),
        fun=float(values[best]),
        converged=converged,
        iterations=iterations,
        n_evaluations=n_evaluations,
    )


def _shrink(vertices: np.ndarray, values: np.ndarray, evaluate) -> None:
    for i in range(1, vertices.shape[0]):
        vertices[i] = vertices[0] + _SHRINK * (vertices[i] - vertices[0])
        values[i] = evaluate(vertices[i])
