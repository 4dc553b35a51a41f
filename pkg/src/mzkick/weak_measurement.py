"""Photon-mirror coupling, post-selection, weak values, and per-channel kicks.

A photon traversing arm B kicks the mirror by delta = 2*hbar*omega*cos(alpha);
a photon in arm A leaves it untouched. Entangling the arm state with the mirror
pointer and post-selecting on a detector channel yields the conditional mirror
state, whose mean momentum is governed by the weak value of the arm-B projector
in the weak-coupling limit. Photons that exit toward D1 strike the mirror a
second time from outside at an angle beta fixed by cos(beta) = cos(alpha)/2,
which exactly cancels their inside kick.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintViolationError, ZeroOverlapError
from .photon_modes import BeamsplitterSpec, ModeAmplitudes, inner_product
from .pointer import (
    MomentumGrid,
    PointerState,
    default_grid,
    gaussian_pointer,
    mean_momentum,
    overlap,
    shift,
)

# Below this post-selection probability (or amplitude overlap) the conditional
# state is numerically meaningless and the outcome is treated as forbidden.
ZERO_OVERLAP_TOL = 1e-14

REGIME_DECOHERENT = "decoherent"
REGIME_COHERENT_DETECTABLE = "coherent_detectable"
REGIME_COHERENT_UNDETECTABLE = "coherent_undetectable"


@dataclass(frozen=True)
class OpticalSetup:
    """Experiment constants: beamsplitters, photon frequency, geometry, scales.

    alpha is the incidence angle of the inside beam on the mirror; the outside
    beam angle beta is always derived from cos(beta) = cos(alpha)/2, so the
    geometric cancellation for D1 photons cannot be misconfigured. nbar is the
    mean photon number of the input beam (coherent-state statistics).
    """

    bs: BeamsplitterSpec
    omega: float
    alpha: float
    hbar: float = 1.0
    nbar: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < math.pi / 2.0:
            raise ConstraintViolationError(
                f"alpha must lie strictly between 0 and pi/2 radians, got {self.alpha}"
            )
        if self.omega <= 0.0:
            raise ConstraintViolationError(f"omega must be positive, got {self.omega}")
        if self.hbar <= 0.0:
            raise ConstraintViolationError(f"hbar must be positive, got {self.hbar}")
        if self.nbar < 0.0:
            raise ConstraintViolationError(f"nbar must be non-negative, got {self.nbar}")

    @property
    def cos_beta(self) -> float:
        return 0.5 * math.cos(self.alpha)

    @property
    def beta(self) -> float:
        return math.acos(self.cos_beta)

    @property
    def delta_kick(self) -> float:
        """Per-reflection momentum kick of the inside beam: 2*hbar*omega*cos(alpha)."""
        return 2.0 * self.hbar * self.omega * math.cos(self.alpha)


@dataclass(frozen=True)
class JointState:
    """Entangled photon-mirror state: one pointer-valued component per arm."""

    grid: MomentumGrid
    comp_a: np.ndarray
    comp_b: np.ndarray

    def __post_init__(self) -> None:
        for name in ("comp_a", "comp_b"):
            arr = np.asarray(getattr(self, name), dtype=np.complex128).copy()
            if arr.shape != (self.grid.n,):
                raise ConstraintViolationError(
                    f"{name} shape {arr.shape} does not match grid with n={self.grid.n}"
                )
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def total_norm_squared(self) -> float:
        p = self.grid.points
        dens = np.abs(self.comp_a) ** 2 + np.abs(self.comp_b) ** 2
        return float(np.trapezoid(dens, p))


@dataclass(frozen=True)
class PostselectionResult:
    """Outcome of projecting the joint state onto one detector channel."""

    probability: float
    conditional_pointer: PointerState
    mean_kick: float


def couple_with_kick(psi: ModeAmplitudes, pointer: PointerState, delta_kick: float) -> JointState:
    """Exact reflection coupling at an explicit kick: a|A>phi(p) + b|B>phi(p - delta)."""
    psi.require_normalized()
    pointer.require_normalized()
    moved = shift(pointer, delta_kick)
    return JointState(
        pointer.grid,
        psi.a * pointer.amplitudes,
        psi.b * moved.amplitudes,
    )


def couple_reflection(psi: ModeAmplitudes, pointer: PointerState, setup: OpticalSetup) -> JointState:
    """Exact photon-mirror coupling for the setup's per-photon kick."""
    return couple_with_kick(psi, pointer, setup.delta_kick)


def first_order_joint(psi: ModeAmplitudes, pointer: PointerState, setup: OpticalSetup) -> JointState:
    """First-order expansion of the coupling: phi(p - delta) ~ phi(p) - delta*dphi/dp.

    Valid only for delta much smaller than the pointer spread; exists to
    quantify that regime against couple_reflection. The output norm exceeds 1
    by O((delta/spread)^2). Production paths use the exact coupling.
    """
    pointer.require_normalized()
    grid = pointer.grid
    freqs = np.fft.fftfreq(grid.n, d=grid.spacing)
    dphi = np.fft.ifft(np.fft.fft(pointer.amplitudes) * (2j * np.pi * freqs))
    delta = setup.delta_kick
    return JointState(
        grid,
        psi.a * pointer.amplitudes,
        psi.b * (pointer.amplitudes - delta * dphi),
    )


def weak_value_PB(psi: ModeAmplitudes, phi_post: ModeAmplitudes) -> complex:
    """Weak value of the arm-B projector between psi and the post-selected state.

    <phi|B><B|psi> / <phi|psi>; lies outside [0, 1] when the post-selection is
    nearly orthogonal to psi.
    """
    den = inner_product(phi_post, psi)
    if abs(den) < ZERO_OVERLAP_TOL:
        raise ZeroOverlapError(
            "post-selected state is orthogonal to the prepared state; weak value undefined"
        )
    num = phi_post.b.conjugate() * psi.b
    return num / den


def postselect(joint: JointState, phi_post: ModeAmplitudes) -> PostselectionResult:
    """Project the joint state onto a photon channel; exact at any coupling.

    Returns the channel probability, the normalized conditional mirror state,
    and its mean momentum. The probability reading assumes the joint state is
    normalized (couple_with_kick guarantees this; first_order_joint does not).
    """
    cond = phi_post.a.conjugate() * joint.comp_a + phi_post.b.conjugate() * joint.comp_b
    p = joint.grid.points
    probability = float(np.trapezoid(np.abs(cond) ** 2, p))
    if probability < ZERO_OVERLAP_TOL:
        raise ZeroOverlapError(
            f"post-selection probability {probability!r} is numerically zero"
        )
    conditional = PointerState(joint.grid, cond / math.sqrt(probability))
    return PostselectionResult(
        probability=probability,
        conditional_pointer=conditional,
        mean_kick=mean_momentum(conditional),
    )


def net_kick_d1(setup: OpticalSetup) -> float:
    """Total mirror momentum from a D1 photon: inside kick plus outside kick.

    The inside contribution is the weak-value-limit kick delta/2 =
    hbar*omega*cos(alpha); the outside reflection contributes
    -2*hbar*omega*cos(beta) on the same signed axis (positive = outward normal
    of the inside face). With cos(beta) = cos(alpha)/2 the sum is identically
    zero.
    """
    inside = 0.5 * setup.delta_kick
    outside = -2.0 * setup.hbar * setup.omega * setup.cos_beta
    return inside + outside


def net_kick_d2(setup: OpticalSetup) -> float:
    """Weak-value-limit mirror momentum from a D2 photon: -t^2/(r^2-t^2) * delta.

    Negative (inward) whenever r > t, although D2 photons only ever strike the
    mirror from inside. Undefined at r = t, where the D2 outcome is forbidden.
    """
    bs = setup.bs
    denom = bs.r * bs.r - bs.t * bs.t
    if abs(denom) < ZERO_OVERLAP_TOL:
        raise ZeroOverlapError(
            "r = t leaves zero post-selection overlap for the D2 channel (forbidden outcome)"
        )
    return -(bs.t * bs.t / denom) * setup.delta_kick


def coherence_visibility(setup: OpticalSetup, delta_spread: float) -> float:
    """|<phi(p)|phi(p - delta)>| for a Gaussian pointer of the given spread.

    1 means the mirror records no which-path information; 0 means full
    decoherence of the photon by the mirror.
    """
    grid = default_grid(delta_spread, setup.delta_kick)
    g = gaussian_pointer(grid, delta_spread)
    return abs(overlap(g, shift(g, setup.delta_kick)))


def regime_classify(
    setup: OpticalSetup,
    delta_spread: float,
    decoherence_factor: float = 3.0,
    detectability_factor: float = 3.0,
) -> str:
    """Classify the operating regime of the mirror as a measuring device.

    Coherence of an nbar-photon beam needs the pointer spread to exceed
    sqrt(nbar) individual kicks by a comfortable factor; the accumulated mean
    kick nbar*delta is detectable only if it exceeds the spread by a similar
    factor. Both factors default to 3 and are overridable.
    """
    if setup.nbar <= 0.0:
        raise ConstraintViolationError("regime classification requires nbar > 0")
    if delta_spread <= 0.0:
        raise ConstraintViolationError(f"delta_spread must be positive, got {delta_spread}")
    delta = setup.delta_kick
    if delta_spread < decoherence_factor * math.sqrt(setup.nbar) * delta:
        return REGIME_DECOHERENT
    if setup.nbar * delta > detectability_factor * delta_spread:
        return REGIME_COHERENT_DETECTABLE
    return REGIME_COHERENT_UNDETECTABLE


def postselection_to_json(
    channel: str, result: PostselectionResult, weak_value: complex
) -> dict:
    """JSON-ready summary of a post-selection outcome."""
    return {
        "channel": channel,
        "probability": result.probability,
        "mean_kick": result.mean_kick,
        "weak_value_re": weak_value.real,
        "weak_value_im": weak_value.imag,
    }
