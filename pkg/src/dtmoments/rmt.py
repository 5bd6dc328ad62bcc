"""Seeded random-matrix sampling and trace estimators.

Every sampler draws from a counter-based Philox stream keyed by
(seed, trial_index), so trials are independent, order-insensitive, and
bit-reproducible.  Complex N(0, sigma^2) entries are built from two
independent real normals of variance sigma^2/2 each, generated by numpy's
ziggurat ``standard_normal`` on that stream.

The estimators return a mean over trials of the normalized matrix trace of
the requested word, with the standard error taken per real/imaginary part
(the larger of the two is reported).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import WordParseError
from .measures import (
    Atomic,
    MeasureModel,
    MomentTable,
    ScaledMeasure,
    UniformAnnulus,
    UniformDisk,
    UniformEllipse,
)
from .moments import D_LETTERS, T_LETTERS, Z_LETTERS
from .ncpair import ONE, StarWord

DEFAULT_SIZE_CAP = 2048
_MASK64 = (1 << 64) - 1


def _rng(seed: int, trial_index: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.Philox(key=np.array([seed & _MASK64, trial_index & _MASK64], dtype=np.uint64))
    )


def _complex_normal(rng: np.random.Generator, shape, sigma_sq: float) -> np.ndarray:
    scale = math.sqrt(sigma_sq / 2.0)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


# -- models -------------------------------------------------------------------


@dataclass(frozen=True)
class UTGRM:
    """Strictly upper triangular, i.i.d. complex N(0, sigma_sq) above the diagonal."""

    n: int
    sigma_sq: float
    seed: int = 0


@dataclass(frozen=True)
class SGRM:
    """Self-adjoint: complex N(0, sigma_sq) above the diagonal, real on it."""

    n: int
    sigma_sq: float
    seed: int = 0


@dataclass(frozen=True)
class DiagIID:
    """Diagonal of i.i.d. draws from a sampleable measure model."""

    mu: MeasureModel
    n: int
    seed: int = 0


@dataclass(frozen=True)
class DiagDeterministic:
    """Fixed diagonal entries (the seed is carried but unused)."""

    entries: tuple
    seed: int = 0


@dataclass(frozen=True)
class Elliptic:
    """cos(theta) H1 + i sin(theta) H2 with independent SGRM(n, 1/n) factors."""

    theta: float
    n: int
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.theta < math.pi / 2:
            raise ValueError("theta must lie in (0, pi/2)")


RandomMatrixModel = UTGRM | SGRM | DiagIID | DiagDeterministic | Elliptic


def _sample_utgrm(rng: np.random.Generator, n: int, sigma_sq: float) -> np.ndarray:
    return np.triu(_complex_normal(rng, (n, n), sigma_sq), k=1)


def _sample_sgrm(rng: np.random.Generator, n: int, sigma_sq: float) -> np.ndarray:
    upper = np.triu(_complex_normal(rng, (n, n), sigma_sq), k=1)
    diag = math.sqrt(sigma_sq) * rng.standard_normal(n)
    return upper + upper.conj().T + np.diag(diag)


def sample_measure(mu: MeasureModel, n: int, rng: np.random.Generator) -> np.ndarray:
    """n i.i.d. complex draws from a measure model.

    Atomic uses inverse-CDF on the weights; disk and annulus use the exact
    radial inverse CDF with a uniform angle; the ellipse rejects uniform draws
    from its bounding box.  Moment tables are not sampleable.
    """
    if isinstance(mu, Atomic):
        cum = np.cumsum([float(w) for _, w in mu.atoms])
        locs = np.array([loc.to_complex() for loc, _ in mu.atoms])
        idx = np.searchsorted(cum, rng.random(n), side="right")
        return locs[np.minimum(idx, len(locs) - 1)]
    if isinstance(mu, UniformDisk):
        radius = np.sqrt(float(mu.radius) ** 2 * rng.random(n))
        angle = 2.0 * math.pi * rng.random(n)
        return radius * np.exp(1j * angle)
    if isinstance(mu, UniformAnnulus):
        radius = np.sqrt(float(mu.c) - 1.0 + rng.random(n))
        angle = 2.0 * math.pi * rng.random(n)
        return radius * np.exp(1j * angle)
    if isinstance(mu, UniformEllipse):
        a2 = float(mu.a) ** 2
        b2 = float(mu.b) ** 2
        half_x = 2.0 * a2 / math.sqrt(a2 + b2)
        half_y = 2.0 * b2 / math.sqrt(a2 + b2)
        out = np.empty(n, dtype=complex)
        got = 0
        while got < n:
            m = max(n - got, 16)
            x = half_x * (2.0 * rng.random(m) - 1.0)
            y = half_y * (2.0 * rng.random(m) - 1.0)
            keep = (x / half_x) ** 2 + (y / half_y) ** 2 <= 1.0
            accepted = (x + 1j * y)[keep][: n - got]
            out[got : got + accepted.size] = accepted
            got += accepted.size
        return out
    if isinstance(mu, ScaledMeasure):
        return mu.lam.to_complex() * sample_measure(mu.base, n, rng)
    if isinstance(mu, MomentTable):
        raise ValueError("moment tables expose no sampler")
    raise TypeError(f"cannot sample measure model {mu!r}")


def sample(model: RandomMatrixModel, trial_index: int) -> np.ndarray:
    """One matrix realization, reproducible from (model.seed, trial_index)."""
    rng = _rng(model.seed, trial_index)
    if isinstance(model, UTGRM):
        return _sample_utgrm(rng, model.n, model.sigma_sq)
    if isinstance(model, SGRM):
        return _sample_sgrm(rng, model.n, model.sigma_sq)
    if isinstance(model, DiagIID):
        return np.diag(sample_measure(model.mu, model.n, rng))
    if isinstance(model, DiagDeterministic):
        return np.diag(np.asarray(model.entries, dtype=complex))
    if isinstance(model, Elliptic):
        h1 = _sample_sgrm(rng, model.n, 1.0 / model.n)
        h2 = _sample_sgrm(rng, model.n, 1.0 / model.n)
        return math.cos(model.theta) * h1 + 1j * math.sin(model.theta) * h2
    raise TypeError(f"unknown model {model!r}")


# -- estimators ---------------------------------------------------------------


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo mean of a normalized word trace, with its standard error."""

    mean: complex
    stderr: float
    n: int
    trials: int
    seed: int

    def to_record(self, word: str, target: complex | None = None) -> dict:
        rec = {
            "word": word,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "mean_re": self.mean.real,
            "mean_im": self.mean.imag,
            "stderr": self.stderr,
        }
        if target is not None:
            rec["target_re"] = complex(target).real
            rec["target_im"] = complex(target).imag
        return rec


def _summarize(values: np.ndarray, n: int, seed: int) -> Estimate:
    trials = values.size
    mean = complex(values.mean())
    if trials > 1:
        se = max(values.real.std(ddof=1), values.imag.std(ddof=1)) / math.sqrt(trials)
    else:
        se = math.inf
    return Estimate(mean, float(se), n, trials, seed)


def _word_trace(letters: Sequence[str], mats: dict[str, np.ndarray], n: int) -> complex:
    prod = None
    for tok in letters:
        m = mats[tok]
        prod = m if prod is None else prod @ m
    if prod is None:
        return 1.0 + 0.0j
    return complex(np.trace(prod)) / n


def estimate_word_moment(
    letters: Sequence[str],
    n: int,
    trials: int,
    seed: int,
    mu: MeasureModel | None = None,
    c: float = 1.0,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> Estimate:
    """Monte Carlo normalized trace of a word in {D, D*, T, T*} or {Z, Z*}.

    The diagonal is i.i.d. from ``mu`` (required for D or Z words) and the
    triangular factor is UTGRM(n, 1/n), drawn independently per trial; a
    Z letter stands for D + c*T.
    """
    if trials < 2:
        raise ValueError("need at least 2 trials for a standard error")
    if n > size_cap:
        raise ValueError(f"matrix size {n} exceeds the cap of {size_cap}")
    uses_z = any(t in Z_LETTERS for t in letters)
    uses_d = uses_z or any(t in D_LETTERS for t in letters)
    if uses_d and mu is None:
        raise WordParseError("words with D or Z letters need a measure")
    values = np.empty(trials, dtype=complex)
    for t in range(trials):
        rng = _rng(seed, t)
        d = np.diag(sample_measure(mu, n, rng)) if uses_d else None
        tm = _sample_utgrm(rng, n, 1.0 / n)
        mats = {"T": tm, "T*": tm.conj().T}
        if d is not None:
            mats.update({"D": d, "D*": d.conj().T})
            if uses_z:
                z = d + c * tm
                mats.update({"Z": z, "Z*": z.conj().T})
        values[t] = _word_trace(letters, mats, n)
    return _summarize(values, n, seed)


def estimate_elliptic_moment(
    theta: float, eps: StarWord, n: int, trials: int, seed: int
) -> Estimate:
    """Monte Carlo trace of the star-word applied to cos(theta)H1 + i sin(theta)H2."""
    if trials < 2:
        raise ValueError("need at least 2 trials for a standard error")
    model = Elliptic(theta, n, seed)
    values = np.empty(trials, dtype=complex)
    for t in range(trials):
        y = sample(model, t)
        mats = {ONE: y, "*": y.conj().T}
        values[t] = _word_trace([s for s in eps.symbols], mats, n)
    return _summarize(values, n, seed)


def deterministic_diagonal_run(
    entries_generator: Callable[[int], Sequence[complex]],
    c: float,
    eps: StarWord,
    n: int,
    trials: int,
    seed: int,
) -> Estimate:
    """Z-word estimates with a fixed (non-random) diagonal: Z = D + c*T.

    Only the triangular factor is random; the diagonal comes from
    ``entries_generator(n)`` and is reused across trials.
    """
    if trials < 2:
        raise ValueError("need at least 2 trials for a standard error")
    d = np.diag(np.asarray(list(entries_generator(n)), dtype=complex))
    values = np.empty(trials, dtype=complex)
    for t in range(trials):
        rng = _rng(seed, t)
        z = d + c * _sample_utgrm(rng, n, 1.0 / n)
        mats = {ONE: z, "*": z.conj().T}
        values[t] = _word_trace([s for s in eps.symbols], mats, n)
    return _summarize(values, n, seed)


def pure_t_word_sweep(
    max_len: int, n: int, trials: int, seed: int
) -> dict[tuple[str, ...], Estimate]:
    """Traces of every word in T, T* up to ``max_len`` letters, per trial.

    One triangular sample per trial serves all words: products are built
    depth-first over the prefix tree, and each word's trace comes from an
    einsum against its parent's product, so a sweep costs far fewer
    multiplications than estimating each word separately.
    """
    words: list[tuple[str, ...]] = []

    def grow(prefix: tuple[str, ...]):
        if len(prefix) == max_len:
            return
        for tok in T_LETTERS:
            words.append(prefix + (tok,))
            grow(prefix + (tok,))

    grow(())
    traces = {w: np.empty(trials, dtype=complex) for w in words}

    for t in range(trials):
        rng = _rng(seed, t)
        tm = _sample_utgrm(rng, n, 1.0 / n)
        letter = {"T": tm, "T*": tm.conj().T}

        def walk(prefix: tuple[str, ...], prod: np.ndarray | None):
            for tok in T_LETTERS:
                word = prefix + (tok,)
                if prod is None:
                    traces[word][t] = complex(np.trace(letter[tok])) / n
                else:
                    traces[word][t] = complex(
                        np.einsum("ij,ji->", prod, letter[tok])
                    ) / n
                if len(word) < max_len:
                    walk(word, letter[tok] if prod is None else prod @ letter[tok])

        walk((), None)

    return {w: _summarize(vals, n, seed) for w, vals in traces.items()}
