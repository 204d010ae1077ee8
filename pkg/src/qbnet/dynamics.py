"""First-moment linear dynamics: assembly, steady states, propagation.

The mode amplitudes obey ``d(alpha)/dt = M alpha + d`` with

* ``M[m, m] = -i * detuning_m - decay_rate_m / 2``,
* coupling ``(s -> t, g, theta)``: ``M[t, s] += -i g e^{+i theta}``
  and ``M[s, t] += -i g e^{-i theta}``,
* drive ``xi`` on mode ``m``: ``d[m] = -i xi``.

By construction ``M + M^dagger = -diag(decay rates)``, so any network
with all-positive decay is Hurwitz and has a unique steady state
``alpha_ss = -M^{-1} d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from .errors import NoSteadyStateError, ValidationError
from .network import NetworkSpec, validate

#: refuse a steady state when the condition estimate exceeds this
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class LinearSystem:
    """Dynamics matrix, drive vector and the mode id -> row map."""

    matrix: np.ndarray
    drive: np.ndarray
    index: dict

    def __post_init__(self):
        self.matrix.setflags(write=False)
        self.drive.setflags(write=False)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def row(self, mode_id: str) -> int:
        try:
            return self.index[mode_id]
        except KeyError:
            raise KeyError(f"unknown mode id {mode_id!r}") from None


@dataclass(frozen=True)
class SteadyState:
    """Solution of ``M alpha = -d`` plus the achieved residual norm."""

    amplitudes: np.ndarray
    residual: float


@dataclass(frozen=True)
class Trajectory:
    """Amplitudes of every mode on a strictly increasing time grid."""

    times: np.ndarray
    amplitudes: np.ndarray
    index: dict = field(default_factory=dict)

    def mode(self, mode_id: str) -> np.ndarray:
        return self.amplitudes[:, self.index[mode_id]]


def assemble(spec: NetworkSpec) -> LinearSystem:
    """Build the linear system for a validated network spec."""
    problems = validate(spec)
    if problems:
        raise ValidationError(problems)
    index = {m.id: i for i, m in enumerate(spec.modes)}
    n = len(spec.modes)
    matrix = np.zeros((n, n), dtype=complex)
    for i, m in enumerate(spec.modes):
        matrix[i, i] = -1j * m.detuning - m.decay_rate / 2.0
    for c in spec.couplings:
        s, t = index[c.source], index[c.target]
        matrix[t, s] += -1j * c.strength * np.exp(1j * c.phase)
        matrix[s, t] += -1j * c.strength * np.exp(-1j * c.phase)
    drive = np.zeros(n, dtype=complex)
    for d in spec.drives:
        drive[index[d.mode]] += -1j * complex(d.amplitude)
    return LinearSystem(matrix, drive, index)


def steady_state(sys: LinearSystem) -> SteadyState:
    """Solve ``M alpha = -d``; refuse when M is near-singular.

    One step of iterative refinement keeps the residual at rounding
    level even for poorly scaled networks.
    """
    cond = np.linalg.cond(sys.matrix)
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise NoSteadyStateError(
            f"no unique steady state: condition estimate {cond:.3e} exceeds "
            f"{CONDITION_LIMIT:.0e}", condition=cond)
    alpha = np.linalg.solve(sys.matrix, -sys.drive)
    resid = sys.matrix @ alpha + sys.drive
    scale = max(1.0, float(np.linalg.norm(sys.drive)))
    if np.linalg.norm(resid) > 1e-12 * scale:
        alpha = alpha - np.linalg.solve(sys.matrix, resid)
        resid = sys.matrix @ alpha + sys.drive
    return SteadyState(alpha, float(np.linalg.norm(resid)))


def is_stable(sys: LinearSystem):
    """Return ``(hurwitz, spectral_abscissa)`` for the dynamics matrix."""
    eigvals = np.linalg.eigvals(sys.matrix)
    abscissa = float(eigvals.real.max())
    return abscissa < 0.0, abscissa


def _check_times(times: np.ndarray):
    if times.ndim != 1 or times.size == 0:
        raise ValueError("times must be a non-empty 1-d grid")
    if not np.all(np.isfinite(times)):
        raise ValueError("times must be finite")
    if times[0] < 0:
        raise ValueError(f"times must start at >= 0, got {times[0]}")
    if times.size > 1 and not np.all(np.diff(times) > 0):
        raise ValueError("times must be strictly increasing")


def _propagate_expm(sys: LinearSystem, initial, times, alpha_ss):
    """Exact propagation ``alpha(t) = a_ss + expm(M t) (alpha0 - a_ss)``.

    scipy's expm is a scaling-and-squaring Pade method with controlled
    backward error; no diagonalisability of M is assumed.
    """
    offset = initial - alpha_ss
    out = np.empty((times.size, sys.n), dtype=complex)
    for i, t in enumerate(times):
        if t == 0.0:
            out[i] = initial
        else:
            out[i] = alpha_ss + expm(sys.matrix * t) @ offset
    return out


def _propagate_ivp(sys: LinearSystem, initial, times, rtol, atol):
    """Adaptive integration of the real embedding of the complex system.

    ``initial`` is the state at t = 0; integration always starts there
    so grids that begin after zero stay consistent with the propagator.
    """
    n = sys.n
    if times[-1] == 0.0:
        return initial[None, :].copy()
    m_re, m_im = sys.matrix.real, sys.matrix.imag
    big = np.block([[m_re, -m_im], [m_im, m_re]])
    dvec = np.concatenate([sys.drive.real, sys.drive.imag])
    y0 = np.concatenate([initial.real, initial.imag])

    def rhs(_t, y):
        return big @ y + dvec

    sol = solve_ivp(rhs, (0.0, float(times[-1])), y0, t_eval=times,
                    method="DOP853", rtol=rtol, atol=atol)
    if not sol.success:
        raise NoSteadyStateError(f"initial-value integration failed: {sol.message}")
    y = sol.y.T
    return y[:, :n] + 1j * y[:, n:]


def evolve(sys: LinearSystem, initial, times, method: str = "auto",
           rtol: float = 1e-10, atol: float = 1e-12) -> Trajectory:
    """Propagate amplitudes from ``initial`` over the given time grid.

    ``method`` selects the propagator: "expm" uses the matrix
    exponential around the steady state (exact up to rounding, needs an
    invertible M), "ivp" uses an adaptive integrator with local
    tolerance ``rtol``/``atol``, and "auto" tries "expm" first and falls
    back to "ivp" when M is singular.
    """
    times = np.asarray(times, dtype=float)
    _check_times(times)
    initial = np.asarray(initial, dtype=complex)
    if initial.shape != (sys.n,):
        raise ValueError(f"initial must have shape ({sys.n},), got {initial.shape}")
    if not np.all(np.isfinite(initial.view(float))):
        raise ValueError("initial amplitudes must be finite")
    if method not in ("auto", "expm", "ivp"):
        raise ValueError(f"unknown method {method!r}")

    if method in ("auto", "expm"):
        try:
            alpha_ss = steady_state(sys).amplitudes
        except NoSteadyStateError:
            if method == "expm":
                raise
            amps = _propagate_ivp(sys, initial, times, rtol, atol)
        else:
            amps = _propagate_expm(sys, initial, times, alpha_ss)
    else:
        amps = _propagate_ivp(sys, initial, times, rtol, atol)
    return Trajectory(times, amps, dict(sys.index))


def vacuum(sys: LinearSystem) -> np.ndarray:
    """All-modes-empty initial condition."""
    return np.zeros(sys.n, dtype=complex)
