"""Seeded Monte Carlo realization of the two-operator guessing game.

One party prepares a tester and hands it over; the other applies one of
two announced unitaries (chosen with a configurable bias) and reports
the measurement outcome.  The simulation draws many such rounds and
compares the empirical outcome entropies with the analytic ones.

Randomness comes from the counter-based Philox-4x64 generator keyed by
the seed.  Uniform doubles are read off the keyed word stream in order;
trial ``i`` owns words ``2 i`` (operator choice) and ``2 i + 1``
(outcome).  Because the stream is counter-addressable, any trial can be
regenerated independently: advance the counter by ``(2 i) // 4`` blocks
(Philox emits four 64-bit words per counter increment), discard
``(2 i) % 4`` words, and read two.  Transcripts are therefore
bit-reproducible regardless of evaluation order or chunking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .operators import UnitaryOperator
from .testers import Tester, outcome_distribution
from .uncertainty import EntropyValue, shannon_entropy


@dataclass(frozen=True, eq=False)
class GameConfig:
    tester: Tester
    v: UnitaryOperator
    w: UnitaryOperator
    trials: int
    seed: int
    operator_bias: float = 0.5  # probability that the v side is tested

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not (0.0 <= self.operator_bias <= 1.0):
            raise ValueError("operator_bias must lie in [0, 1]")
        if self.tester.dim != self.v.dim or self.v.dim != self.w.dim:
            raise ValueError("tester and operators must share one dimension")


@dataclass(frozen=True, eq=False)
class GameTranscript:
    counts_v: np.ndarray
    counts_w: np.ndarray
    empirical_entropy_sum: EntropyValue
    analytic_entropy_sum: EntropyValue
    guess_success_rate: float
    seed: int

    @property
    def trials(self) -> int:
        return int(self.counts_v.sum() + self.counts_w.sum())

    @property
    def empirical_distributions(self) -> tuple[np.ndarray | None, np.ndarray | None]:
        """Per-operator outcome frequencies; None for a side with no trials."""
        out = []
        for counts in (self.counts_v, self.counts_w):
            total = counts.sum()
            out.append(counts / total if total > 0 else None)
        return out[0], out[1]


def empirical_entropy(counts, base: float = 2.0) -> EntropyValue:
    """Plug-in Shannon entropy of a frequency table."""
    counts = np.asarray(counts, dtype=float)
    total = counts.sum()
    if counts.size == 0 or total < 1:
        raise ValueError("empirical entropy needs at least one count")
    if counts.min() < 0:
        raise ValueError("counts must be nonnegative")
    return shannon_entropy(counts / total, base)


def _sample_outcomes(cum: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    return np.searchsorted(cum, uniforms, side="right")


def run_game(cfg: GameConfig) -> GameTranscript:
    """Simulate the guessing game; deterministic per seed.

    The guessing strategy is fixed: the modal outcome of the announced
    operator's analytic distribution (lowest index on ties).
    """
    pv = outcome_distribution(cfg.tester, cfg.v).probs
    pw = outcome_distribution(cfg.tester, cfg.w).probs
    n_outcomes = pv.size

    rng = np.random.Generator(np.random.Philox(key=cfg.seed))
    uniforms = rng.random((cfg.trials, 2))
    picks_v = uniforms[:, 0] < cfg.operator_bias

    # clip guards against cumsum roundoff pushing the last edge below 1
    cum_v = np.clip(np.cumsum(pv), 0.0, 1.0)
    cum_w = np.clip(np.cumsum(pw), 0.0, 1.0)
    cum_v[-1] = cum_w[-1] = 1.0
    outcomes = np.where(
        picks_v,
        _sample_outcomes(cum_v, uniforms[:, 1]),
        _sample_outcomes(cum_w, uniforms[:, 1]),
    )
    counts_v = np.bincount(outcomes[picks_v], minlength=n_outcomes)
    counts_w = np.bincount(outcomes[~picks_v], minlength=n_outcomes)

    empirical = 0.0
    for counts in (counts_v, counts_w):
        if counts.sum() > 0:
            empirical += empirical_entropy(counts).value
    analytic = shannon_entropy(pv).value + shannon_entropy(pw).value

    successes = counts_v[int(np.argmax(pv))] + counts_w[int(np.argmax(pw))]
    return GameTranscript(
        counts_v=counts_v,
        counts_w=counts_w,
        empirical_entropy_sum=EntropyValue(empirical, 2.0),
        analytic_entropy_sum=EntropyValue(analytic, 2.0),
        guess_success_rate=float(successes / cfg.trials),
        seed=cfg.seed,
    )


def transcript_to_json(t: GameTranscript) -> str:
    return json.dumps(
        {
            "counts_v": t.counts_v.tolist(),
            "counts_w": t.counts_w.tolist(),
            "empirical_bits": t.empirical_entropy_sum.value,
            "analytic_bits": t.analytic_entropy_sum.value,
            "seed": t.seed,
        }
    )
