"""Declarative mode networks for charger/battery charging topologies.

A network is a set of bosonic modes, phased bilinear couplings and
coherent drives.  A coupling ``(source, target, g, theta)`` stands for
the Hamiltonian term ``g * exp(i*theta) * source * target^dagger`` plus
its Hermitian conjugate; the drive ``xi`` on a mode adds ``xi * mode``
plus conjugate.  All rates are energy decay rates (the corresponding
amplitude decays at half the rate), all frequencies are in units of the
common mode frequency, and detunings default to zero (every mode
resonant with the drive).

Two builder families are provided:

* ``build_cascaded`` -- a chain ``c - b_1 - ... - b_N``.
* ``build_parallel`` -- a star with every battery tied to the charger.

Both come in four variants.  ``r1`` has direct couplings only.  ``r2``,
``nr`` and ``custom`` insert one lossy intermediate mode per link, with
the link's synthetic flux carried entirely by the phase of the direct
coupling: 0 for ``r2``, -pi/2 for ``nr``, caller-supplied for
``custom``.  Intermediate couplings are fixed at the matched strength
``sqrt(g_b * Gamma / 2)`` with phase 0, so only the loop flux is
physical.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .errors import ValidationError

FAMILIES = ("cascaded", "parallel")
VARIANTS = ("r1", "r2", "nr", "custom")
ROLES = ("charger", "battery", "intermediate")


def wrap_phase(phi: float) -> float:
    """Map an angle to the interval (-pi, pi]."""
    p = math.remainder(phi, 2.0 * math.pi)
    if p <= -math.pi:
        p = math.pi
    return p


@dataclass(frozen=True)
class ModeSpec:
    """One bosonic mode: unique id, role, energy decay rate, detuning."""

    id: str
    role: str
    decay_rate: float
    detuning: float = 0.0


@dataclass(frozen=True)
class CouplingSpec:
    """Phased bilinear coupling between two distinct modes.

    The phase enters the target-mode equation as ``exp(+i*phase)`` and
    the source-mode equation as ``exp(-i*phase)``.
    """

    source: str
    target: str
    strength: float
    phase: float = 0.0


@dataclass(frozen=True)
class DriveSpec:
    """Coherent drive of complex amplitude ``amplitude`` on one mode."""

    mode: str
    amplitude: complex


@dataclass(frozen=True)
class NetworkSpec:
    """Immutable value type holding modes, couplings and drives."""

    modes: tuple
    couplings: tuple
    drives: tuple

    def mode_ids(self):
        return tuple(m.id for m in self.modes)


@dataclass(frozen=True)
class TopologyParams:
    """Parameter bundle selecting one charging scenario.

    Attributes:
        family: "cascaded" or "parallel".
        variant: "r1", "r2", "nr" or "custom".
        n: number of batteries (>= 1).
        g_b: direct coupling strength.
        gamma_c: charger energy decay rate.
        gamma_b: battery decay rates; a scalar is broadcast to all n.
        Gamma: intermediate-mode decay rate (ignored by r1).
        xi: complex drive amplitude on the charger.
        thetas: direct-coupling phases; required for "custom",
            optional for "r1" (defaults to all zero) and ignored by
            "r2"/"nr" which force 0 and -pi/2 respectively.
    """

    family: str
    variant: str
    n: int
    g_b: float
    gamma_c: float
    gamma_b: tuple
    Gamma: float
    xi: complex
    thetas: tuple | None = None

    def __post_init__(self):
        problems = []
        if self.family not in FAMILIES:
            problems.append(f"unknown family {self.family!r}")
        if self.variant not in VARIANTS:
            problems.append(f"unknown variant {self.variant!r}")
        if not isinstance(self.n, int) or self.n < 1:
            problems.append(f"battery count n must be an integer >= 1, got {self.n!r}")
        gamma_b = self.gamma_b
        if isinstance(gamma_b, (int, float)):
            gamma_b = (float(gamma_b),) * max(self.n, 1)
        else:
            gamma_b = tuple(float(g) for g in gamma_b)
            if isinstance(self.n, int) and self.n >= 1 and len(gamma_b) != self.n:
                problems.append(
                    f"gamma_b has {len(gamma_b)} entries for n={self.n} batteries")
        object.__setattr__(self, "gamma_b", gamma_b)
        for name, value in (("g_b", self.g_b), ("gamma_c", self.gamma_c),
                            ("Gamma", self.Gamma)):
            if not math.isfinite(value) or value < 0:
                problems.append(f"{name} must be a finite rate >= 0, got {value!r}")
        if any(not math.isfinite(g) or g < 0 for g in gamma_b):
            problems.append(f"gamma_b entries must be finite rates >= 0, got {gamma_b}")
        xi = complex(self.xi)
        object.__setattr__(self, "xi", xi)
        if not (math.isfinite(xi.real) and math.isfinite(xi.imag)):
            problems.append(f"xi must be finite, got {xi!r}")
        if self.thetas is not None:
            thetas = tuple(float(t) for t in self.thetas)
            object.__setattr__(self, "thetas", thetas)
            if isinstance(self.n, int) and self.n >= 1 and len(thetas) != self.n:
                problems.append(
                    f"thetas has {len(thetas)} entries for n={self.n} batteries")
        if self.variant == "custom" and self.thetas is None:
            problems.append("variant 'custom' requires thetas")
        if problems:
            raise ValidationError(problems)

    def with_variant(self, variant: str) -> "TopologyParams":
        """Same scenario under another variant (thetas kept for custom/r1)."""
        return dataclasses.replace(self, variant=variant)

    def direct_phases(self) -> tuple:
        """The resolved phase of each direct coupling, link by link."""
        if self.variant == "nr":
            return (-math.pi / 2.0,) * self.n
        if self.variant == "r2":
            return (0.0,) * self.n
        if self.thetas is None:
            return (0.0,) * self.n
        return tuple(wrap_phase(t) for t in self.thetas)

    @property
    def has_intermediates(self) -> bool:
        return self.variant in ("r2", "nr", "custom")


def matched_coupling(g_b: float, Gamma: float) -> float:
    """Intermediate coupling strength sqrt(g_b * Gamma / 2).

    This is the strength at which the indirect path through a lossy
    intermediate has the same effective magnitude as the direct
    coupling, which is what permits full backward cancellation.
    """
    if Gamma <= 0:
        raise ValueError(f"Gamma must be > 0, got {Gamma!r}")
    if g_b < 0:
        raise ValueError(f"g_b must be >= 0, got {g_b!r}")
    return math.sqrt(g_b * Gamma / 2.0)


def _check_family(params: TopologyParams, family: str):
    if params.family != family:
        raise ValidationError(
            [f"expected family {family!r}, got {params.family!r}"])
    if params.has_intermediates and params.Gamma <= 0:
        raise ValidationError(
            [f"variant {params.variant!r} needs Gamma > 0, got {params.Gamma!r}"])


def build_cascaded(params: TopologyParams) -> NetworkSpec:
    """Chain topology: charger, then batteries linked nearest-neighbour.

    For variants with intermediates every link ``up -> b_k`` gains a
    mode ``a_k`` coupled as ``up -> a_k -> b_k`` at the matched
    strength.
    """
    _check_family(params, "cascaded")
    thetas = params.direct_phases()
    modes = [ModeSpec("c", "charger", params.gamma_c)]
    couplings = []
    g_i = matched_coupling(params.g_b, params.Gamma) if params.has_intermediates else 0.0
    for k in range(1, params.n + 1):
        upstream = "c" if k == 1 else f"b_{k - 1}"
        if params.has_intermediates:
            modes.append(ModeSpec(f"a_{k}", "intermediate", params.Gamma))
            couplings.append(CouplingSpec(upstream, f"a_{k}", g_i, 0.0))
            couplings.append(CouplingSpec(f"a_{k}", f"b_{k}", g_i, 0.0))
        modes.append(ModeSpec(f"b_{k}", "battery", params.gamma_b[k - 1]))
        couplings.append(CouplingSpec(upstream, f"b_{k}", params.g_b, thetas[k - 1]))
    drives = (DriveSpec("c", params.xi),)
    return NetworkSpec(tuple(modes), tuple(couplings), drives)


def build_parallel(params: TopologyParams) -> NetworkSpec:
    """Star topology: every battery couples to the common charger."""
    _check_family(params, "parallel")
    thetas = params.direct_phases()
    modes = [ModeSpec("c", "charger", params.gamma_c)]
    couplings = []
    g_i = matched_coupling(params.g_b, params.Gamma) if params.has_intermediates else 0.0
    for k in range(1, params.n + 1):
        if params.has_intermediates:
            modes.append(ModeSpec(f"a_{k}", "intermediate", params.Gamma))
            couplings.append(CouplingSpec("c", f"a_{k}", g_i, 0.0))
            couplings.append(CouplingSpec(f"a_{k}", f"b_{k}", g_i, 0.0))
        modes.append(ModeSpec(f"b_{k}", "battery", params.gamma_b[k - 1]))
        couplings.append(CouplingSpec("c", f"b_{k}", params.g_b, thetas[k - 1]))
    drives = (DriveSpec("c", params.xi),)
    return NetworkSpec(tuple(modes), tuple(couplings), drives)


def build_network(params: TopologyParams) -> NetworkSpec:
    """Dispatch to the family-specific builder."""
    if params.family == "cascaded":
        return build_cascaded(params)
    return build_parallel(params)


def validate(spec: NetworkSpec) -> list:
    """Check every NetworkSpec invariant; return one message per violation.

    An empty list means the spec is well formed.  Violations are data,
    not exceptions: callers that need a hard failure can raise
    ``ValidationError(validate(spec))``.
    """
    violations = []
    if not spec.modes:
        violations.append("network has no modes")
    seen = set()
    for m in spec.modes:
        if m.id in seen:
            violations.append(f"duplicate mode id {m.id!r}")
        seen.add(m.id)
        if m.role not in ROLES:
            violations.append(f"mode {m.id!r}: unknown role {m.role!r}")
        if not math.isfinite(m.decay_rate) or m.decay_rate < 0:
            violations.append(
                f"mode {m.id!r}: decay_rate must be finite and >= 0, "
                f"got {m.decay_rate!r}")
        if not math.isfinite(m.detuning):
            violations.append(f"mode {m.id!r}: detuning must be finite")
    ids = {m.id for m in spec.modes}
    pairs = set()
    for c in spec.couplings:
        label = f"coupling {c.source!r}->{c.target!r}"
        if c.source == c.target:
            violations.append(f"{label}: source equals target")
        for end in (c.source, c.target):
            if end not in ids:
                violations.append(f"{label}: references missing mode {end!r}")
        pair = frozenset((c.source, c.target))
        if pair in pairs:
            violations.append(f"{label}: mode pair appears more than once")
        pairs.add(pair)
        if not math.isfinite(c.strength) or c.strength < 0:
            violations.append(f"{label}: strength must be finite and >= 0")
        if not (-math.pi < c.phase <= math.pi):
            violations.append(f"{label}: phase {c.phase!r} outside (-pi, pi]")
    for d in spec.drives:
        if d.mode not in ids:
            violations.append(f"drive on missing mode {d.mode!r}")
        amp = complex(d.amplitude)
        if not (math.isfinite(amp.real) and math.isfinite(amp.imag)):
            violations.append(f"drive on {d.mode!r}: amplitude not finite")
    return violations
