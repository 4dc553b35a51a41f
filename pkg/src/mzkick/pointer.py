"""Mirror momentum wavefunctions on a uniform grid.

The mirror is a quantum pointer described entirely by its momentum
wavefunction phi(p). States are sampled on a uniform grid wide enough that
both tails are negligible; all integrals use the trapezoidal rule, which is
spectrally accurate once the tails are dead.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import ConstraintViolationError, GridCoverageError, GridMismatchError

# Producer-side norm guarantee and the tail-capture requirement.
NORM_TOL = 1e-10
TAIL_DENSITY_RATIO = 1e-12
DEFAULT_GRID_POINTS = 4096

# Gaussian coverage margin: the grid must reach this many spreads past the
# wavepacket center (exp(-64) ~ 1.6e-28, far below TAIL_DENSITY_RATIO).
COVERAGE_SPREADS = 8.0


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform momentum grid with n samples on [p_min, p_max]."""

    p_min: float
    p_max: float
    n: int

    def __post_init__(self) -> None:
        if not self.p_max > self.p_min:
            raise ConstraintViolationError(f"need p_max > p_min, got [{self.p_min}, {self.p_max}]")
        if self.n < 16:
            raise ConstraintViolationError(f"need at least 16 grid points, got {self.n}")

    @property
    def spacing(self) -> float:
        return (self.p_max - self.p_min) / (self.n - 1)

    @cached_property
    def points(self) -> np.ndarray:
        p = np.linspace(self.p_min, self.p_max, self.n)
        p.flags.writeable = False
        return p


def default_grid(
    delta_spread: float, max_shift: float = 0.0, n: int = DEFAULT_GRID_POINTS
) -> MomentumGrid:
    """Symmetric grid covering a centered Gaussian of the given spread plus the
    largest shift it will undergo."""
    if delta_spread <= 0.0:
        raise ConstraintViolationError(f"delta_spread must be positive, got {delta_spread}")
    half = abs(max_shift) + COVERAGE_SPREADS * delta_spread
    return MomentumGrid(-half, half, n)


@dataclass(frozen=True)
class PointerState:
    """Complex wavefunction samples phi(p_k) on a momentum grid.

    sigma_hint is advisory metadata (the Gaussian spread used to build the
    state, when known); the physics always reads the sampled amplitudes.
    """

    grid: MomentumGrid
    amplitudes: np.ndarray
    sigma_hint: float | None = None

    def __post_init__(self) -> None:
        amp = np.asarray(self.amplitudes, dtype=np.complex128).copy()
        if amp.shape != (self.grid.n,):
            raise ConstraintViolationError(
                f"amplitudes shape {amp.shape} does not match grid with n={self.grid.n}"
            )
        peak = float(np.max(np.abs(amp) ** 2))
        if peak == 0.0:
            raise ConstraintViolationError("wavefunction is identically zero")
        # Tail capture: the grid must contain essentially all the density.
        if abs(amp[0]) ** 2 >= TAIL_DENSITY_RATIO * peak or abs(amp[-1]) ** 2 >= TAIL_DENSITY_RATIO * peak:
            raise GridCoverageError(
                "wavefunction density at the grid edges exceeds "
                f"{TAIL_DENSITY_RATIO} of the peak; widen the grid"
            )
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm_squared(self) -> float:
        return float(np.trapezoid(self.density(), self.grid.points))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm_squared() - 1.0) <= tol

    def require_normalized(self, tol: float = 1e-8) -> None:
        nsq = self.norm_squared()
        if abs(nsq - 1.0) > tol:
            raise ConstraintViolationError(f"pointer state not normalized: integral = {nsq!r}")


def gaussian_pointer(grid: MomentumGrid, delta_spread: float) -> PointerState:
    """Normalized samples of exp(-p^2 / (2 spread^2)) centered at p = 0."""
    if delta_spread <= 0.0:
        raise ConstraintViolationError(f"delta_spread must be positive, got {delta_spread}")
    margin = COVERAGE_SPREADS * delta_spread
    if grid.p_min > -margin or grid.p_max < margin:
        raise GridCoverageError(
            f"grid [{grid.p_min}, {grid.p_max}] must extend at least +-{margin} "
            f"around 0 for spread {delta_spread}"
        )
    p = grid.points
    amp = np.exp(-(p * p) / (2.0 * delta_spread * delta_spread)).astype(np.complex128)
    amp /= math.sqrt(float(np.trapezoid(np.abs(amp) ** 2, p)))
    return PointerState(grid, amp, sigma_hint=delta_spread)


def shift(state: PointerState, delta_kick: float) -> PointerState:
    """Translate the wavefunction: phi(p) -> phi(p - delta_kick).

    Implemented by phase multiplication in the conjugate domain, so the shift
    is exact for band-limited states and delta_kick need not be a grid
    multiple. The transform is circular, so any sample band that would wrap
    around must carry no density.
    """
    if delta_kick == 0.0:
        return state
    grid = state.grid
    span = grid.p_max - grid.p_min
    if abs(delta_kick) >= span:
        raise GridCoverageError(f"shift {delta_kick} exceeds the grid span {span}")
    p = grid.points
    dens = state.density()
    peak = float(dens.max())
    if delta_kick > 0.0:
        wrap = dens[p > grid.p_max - delta_kick]
    else:
        wrap = dens[p < grid.p_min - delta_kick]
    if wrap.size and float(wrap.max()) >= TAIL_DENSITY_RATIO * peak:
        raise GridCoverageError(
            f"shift by {delta_kick} would push significant density off-grid"
        )
    freqs = np.fft.fftfreq(grid.n, d=grid.spacing)
    moved = np.fft.ifft(np.fft.fft(state.amplitudes) * np.exp(-2j * np.pi * freqs * delta_kick))
    return PointerState(grid, moved, sigma_hint=state.sigma_hint)


def mean_momentum(state: PointerState) -> float:
    """First moment of the momentum density of a normalized state."""
    state.require_normalized()
    p = state.grid.points
    return float(np.trapezoid(p * state.density(), p))


def overlap(s1: PointerState, s2: PointerState) -> complex:
    """Inner product <phi1|phi2> of two states on the same grid."""
    if s1.grid != s2.grid:
        raise GridMismatchError(f"grids differ: {s1.grid} vs {s2.grid}")
    p = s1.grid.points
    return complex(np.trapezoid(np.conj(s1.amplitudes) * s2.amplitudes, p))


def write_pointer_csv(state: PointerState, path: str | Path) -> None:
    """Write samples as CSV with columns p, re_amplitude, im_amplitude."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["p", "re_amplitude", "im_amplitude"])
        for p, a in zip(state.grid.points, state.amplitudes):
            writer.writerow([repr(float(p)), repr(float(a.real)), repr(float(a.imag))])


def read_pointer_csv(path: str | Path, sigma_hint: float | None = None) -> PointerState:
    """Reconstruct a pointer state written by write_pointer_csv."""
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        if header != ["p", "re_amplitude", "im_amplitude"]:
            raise ConstraintViolationError(f"unexpected pointer CSV header: {header}")
        rows = [(float(p), float(re), float(im)) for p, re, im in reader]
    p = np.array([row[0] for row in rows])
    amp = np.array([complex(re, im) for _, re, im in rows])
    grid = MomentumGrid(float(p[0]), float(p[-1]), len(p))
    return PointerState(grid, amp, sigma_hint=sigma_hint)
