"""Coherent-state photon statistics and ensemble momentum totals.

The input beam is coherent light with mean photon number nbar, so the photon
count is Poisson-distributed per run and each photon independently exits
toward D1 with probability 4*r^2*t^2. In the linear-optics regime every D1
photon delivers zero net momentum and every D2 photon delivers its weak-value
kick, so run-level mirror momentum attaches entirely to the D2 count.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .classical_optics import classical_mirror_momentum
from .errors import ConstraintViolationError, DegenerateSampleError
from .weak_measurement import OpticalSetup, net_kick_d2


@dataclass(frozen=True)
class RunRecord:
    """One experimental run: photon counts and the resulting mirror momentum."""

    total_photons: int
    d1_count: int
    d2_count: int
    mirror_momentum: float

    def __post_init__(self) -> None:
        if min(self.total_photons, self.d1_count, self.d2_count) < 0:
            raise ConstraintViolationError("photon counts must be non-negative")
        if self.d1_count + self.d2_count != self.total_photons:
            raise ConstraintViolationError(
                f"counts {self.d1_count} + {self.d2_count} != total {self.total_photons}"
            )


@dataclass(frozen=True)
class KickReport:
    """Expected per-channel and total mirror momentum for one setup."""

    d1_total: float
    d2_total: float
    grand_total: float
    classical_reference: float


def plain_mirror_quantum_kick(setup: OpticalSetup) -> float:
    """Mean momentum from nbar photons bouncing off a free-standing mirror:
    2*nbar*hbar*omega*cos(alpha), the photon-counting version of the classical
    2*I*cos(alpha) at I = nbar*hbar*omega."""
    return setup.nbar * setup.delta_kick


def expected_kick_report(setup: OpticalSetup) -> KickReport:
    """Expected ensemble momentum totals, channel by channel.

    D1 photons contribute exactly zero each; D2 photons number
    nbar*(r^2-t^2)^2 on average and each delivers the weak-value kick. The
    grand total reproduces the classical wave-optics momentum at intensity
    I = nbar*hbar*omega.
    """
    kick2 = net_kick_d2(setup)
    bs = setup.bs
    p_d2 = (bs.r * bs.r - bs.t * bs.t) ** 2
    d1_total = 0.0
    d2_total = setup.nbar * p_d2 * kick2
    classical = classical_mirror_momentum(
        setup.nbar * setup.hbar * setup.omega, bs, setup.alpha
    )
    return KickReport(
        d1_total=d1_total,
        d2_total=d2_total,
        grand_total=d1_total + d2_total,
        classical_reference=classical,
    )


def sample_runs(setup: OpticalSetup, trials: int, seed: int) -> list[RunRecord]:
    """Monte-Carlo photon counting: Poisson totals, binomial channel split.

    Each trial draws N ~ Poisson(nbar) and n1 ~ Binomial(N, 4*r^2*t^2); the
    mirror momentum is n2 times the per-photon D2 kick. Uses the counter-based
    Philox generator in a single vectorized pass, so a fixed seed reproduces
    the records exactly however the downstream analysis is scheduled.
    """
    if trials < 1:
        raise ConstraintViolationError(f"trials must be >= 1, got {trials}")
    if setup.nbar <= 0.0:
        raise ConstraintViolationError("sampling requires nbar > 0")
    kick2 = net_kick_d2(setup)
    bs = setup.bs
    p_d1 = 4.0 * (bs.r * bs.r) * (bs.t * bs.t)
    rng = np.random.Generator(np.random.Philox(seed))
    totals = rng.poisson(setup.nbar, size=trials)
    d1 = rng.binomial(totals, p_d1)
    d2 = totals - d1
    return [
        RunRecord(int(n), int(a), int(b), float(b * kick2))
        for n, a, b in zip(totals, d1, d2)
    ]


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx <= 0.0 or syy <= 0.0:
        raise DegenerateSampleError("sample has zero variance; correlation undefined")
    return float(dx @ dy) / math.sqrt(sxx * syy)


def fluctuation_analysis(
    records: list[RunRecord],
    conditional_on_total: bool = False,
    classical_attribution: bool = False,
) -> float:
    """Pearson correlation between the D1 count and the mirror momentum.

    Because the momentum rides on D2 photons alone and the per-photon kick is
    inward (negative) for r > t, runs with more D1 photons at fixed total have
    fewer D2 photons and hence less inward momentum: within any fixed-total
    sub-ensemble the correlation is exactly +1. With Poissonian totals the two
    counts are independent, so the unconditional correlation vanishes.

    conditional_on_total pools the correlation within groups of equal total
    photon number (the fixed-total reading). classical_attribution is a
    documented contrast mode: it reattaches the sample-mean momentum to the
    D1 counts proportionally, as the classical story would suggest, which
    flips the correlation negative.
    """
    if len(records) < 30:
        raise DegenerateSampleError(f"need at least 30 records, got {len(records)}")
    n1 = np.array([rec.d1_count for rec in records], dtype=float)
    mom = np.array([rec.mirror_momentum for rec in records], dtype=float)
    if classical_attribution:
        if n1.mean() == 0.0:
            raise DegenerateSampleError("no D1 counts to attribute momentum to")
        mom = n1 * (mom.mean() / n1.mean())
    if not conditional_on_total:
        return _pearson(n1, mom)
    totals = np.array([rec.total_photons for rec in records])
    sxy = sxx = syy = 0.0
    for total in np.unique(totals):
        sel = totals == total
        dx = n1[sel] - n1[sel].mean()
        dy = mom[sel] - mom[sel].mean()
        sxy += float(dx @ dy)
        sxx += float(dx @ dx)
        syy += float(dy @ dy)
    if sxx <= 0.0 or syy <= 0.0:
        raise DegenerateSampleError(
            "no within-total variance in the sample; conditional correlation undefined"
        )
    return sxy / math.sqrt(sxx * syy)


def write_records_csv(records: list[RunRecord], path: str | Path) -> None:
    """Write run records as CSV with columns trial, N, n1, n2, momentum."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["trial", "N", "n1", "n2", "momentum"])
        for i, rec in enumerate(records):
            writer.writerow(
                [i, rec.total_photons, rec.d1_count, rec.d2_count, repr(rec.mirror_momentum)]
            )
