"""Geodesic integration on the Gaussian manifold and length functionals.

A curve gamma(t) of covariance matrices is a geodesic of the KMB metric
iff gammadotdot = (1/2) Dinv(dDelta(gammadot)(gammadot)).  Closed-form
geodesics are not known, so paths are integrated numerically: classical
fourth-order Runge-Kutta on the first-order system (V, Vdot), fixed
step, with a faithfulness guard after every step.
"""

from dataclasses import dataclass

import numpy as np
import scipy.integrate

from .delta import DeltaKernel
from .errors import (
    BoundaryDegeneracyError,
    BoundaryExitError,
    InvalidInputError,
    NoConvergenceError,
)
from .gaussian import check_symmetric, mode_count


@dataclass(frozen=True)
class GeodesicPath:
    """Sampled path: times in [0, 1], one point and velocity per time."""
    times: np.ndarray
    points: list
    velocities: list

    @property
    def modes(self):
        return mode_count(self.points[0])

    def speeds(self):
        """Metric speed g(Vdot, Vdot) at every stored sample."""
        return np.array([DeltaKernel(v).metric(w, w)
                         for v, w in zip(self.points, self.velocities)])


def _acceleration(V, W):
    k = DeltaKernel(V)
    return 0.5 * k.delta_inverse(k.ddelta(W, W))


def geodesic_shoot(V0, A0, steps=256):
    """Integrate the geodesic through V0 with initial velocity A0 to t = 1.

    Raises BoundaryExitError (with the exit time) if any intermediate
    point leaves the faithful region.
    """
    if steps < 16:
        raise InvalidInputError(f"step count must be >= 16, got {steps}")
    V = check_symmetric(np.asarray(V0, dtype=float), "initial covariance matrix")
    n = mode_count(V)
    A0 = check_symmetric(np.asarray(A0, dtype=float), "initial velocity")
    if A0.shape[0] != 2 * n:
        raise InvalidInputError("initial velocity dimension mismatch")
    h = 1.0 / steps
    times = np.linspace(0.0, 1.0, steps + 1)
    points = [V]
    velocities = [A0]
    W = A0
    for m in range(steps):
        try:
            k1v, k1w = W, _acceleration(V, W)
            k2v = W + 0.5 * h * k1w
            k2w = _acceleration(V + 0.5 * h * k1v, k2v)
            k3v = W + 0.5 * h * k2w
            k3w = _acceleration(V + 0.5 * h * k2v, k3v)
            k4v = W + h * k3w
            k4w = _acceleration(V + h * k3v, k4v)
            V = V + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
            W = W + (h / 6.0) * (k1w + 2.0 * k2w + 2.0 * k3w + k4w)
            DeltaKernel(V)  # faithfulness guard at the new point
        except (BoundaryDegeneracyError, InvalidInputError) as exc:
            raise BoundaryExitError(
                f"geodesic left the faithful region near t = {times[m + 1]:.6g}: {exc}",
                exit_time=float(times[m + 1]))
        points.append(V)
        velocities.append(W)
    return GeodesicPath(times=times, points=points, velocities=velocities)


def path_length(path):
    """Length int_0^1 sqrt(g(Vdot, Vdot)) dt by composite quadrature."""
    speeds = path.speeds()
    if np.any(speeds < 0.0):
        raise InvalidInputError("negative metric speed along path")
    return float(scipy.integrate.simpson(np.sqrt(speeds), x=path.times))


@dataclass(frozen=True)
class DistanceResult:
    """Converged shooting solve: geodesic length, endpoint residual,
    iteration count and the connecting path."""
    length: float
    residual: float
    iterations: int
    path: GeodesicPath


def geodesic_distance_estimate(V0, V1, steps=64, max_iter=100, tol=None,
                               damping=1.0):
    """Geodesic distance by shooting: damped secant root-find on the
    initial velocity until gamma(1) hits V1.

    The endpoint map is solved by Broyden's method whose starting
    Jacobian is the identity (the flat-space secant, for which the exact
    update would be A -> A - (gamma_A(1) - V1)); each accepted step
    refines the Jacobian estimate, and the step length backtracks from
    the damping factor whenever the endpoint residual fails to decrease.
    Raises NoConvergenceError with the best residual if the tolerance is
    not met within max_iter accepted steps.
    """
    V0 = check_symmetric(np.asarray(V0, dtype=float), "first endpoint")
    V1 = check_symmetric(np.asarray(V1, dtype=float), "second endpoint")
    if V0.shape != V1.shape:
        raise InvalidInputError("endpoint dimension mismatch")
    scale = np.max(np.abs(V1))
    if tol is None:
        tol = 1e-8 * scale
    if np.max(np.abs(V1 - V0)) == 0.0:
        path = geodesic_shoot(V0, np.zeros_like(V0), steps=steps)
        return DistanceResult(0.0, 0.0, 0, path)

    dim = V0.shape[0]
    iu = np.triu_indices(dim)

    def to_matrix(x):
        A = np.zeros((dim, dim))
        A[iu] = x
        return A + A.T - np.diag(np.diag(A))

    def solve(x):
        try:
            path = geodesic_shoot(V0, to_matrix(x), steps=steps)
        except BoundaryExitError:
            return None, np.inf, None
        gap = path.points[-1] - V1
        return path, float(np.max(np.abs(gap))), gap[iu]

    x = (V1 - V0)[iu]
    path, res, y = solve(x)
    if path is None:
        raise NoConvergenceError(
            "shooting initial guess exits the faithful region",
            residual=res)
    B = np.eye(x.size)
    for it in range(1, max_iter + 1):
        if res < tol:
            return DistanceResult(path_length(path), res, it - 1, path)
        try:
            step = np.linalg.solve(B, -y)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(B, -y, rcond=None)[0]
        alpha = damping
        t_path, t_res, t_y = solve(x + alpha * step)
        while not (t_res < res) and alpha > 1e-12:
            alpha *= 0.5
            t_path, t_res, t_y = solve(x + alpha * step)
        if not (t_res < res):
            break
        dx = alpha * step
        B = B + np.outer(t_y - y - B @ dx, dx) / (dx @ dx)
        x, path, res, y = x + dx, t_path, t_res, t_y
    if path is not None and res < tol:
        return DistanceResult(path_length(path), res, max_iter, path)
    raise NoConvergenceError(
        f"shooting failed to reach tolerance {tol:g} (best residual {res:g})",
        residual=res)
