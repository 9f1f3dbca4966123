"""
Monte-Carlo model of the heralded two-source photon-counting experiment.

Each pulse fires two independent SPDC sources (two-mode squeezed vacua,
``P(n) = tanh^{2n}(g) / cosh^2(g)``).  Idler photons are thinned by loss and
detector efficiency and the pulse is kept when the detected idler counts equal
the herald targets.  Surviving signal photons (thinned by path loss) meet on
the beam splitter, whose output is drawn from the exact walk distribution for
the actual photon numbers, and are thinned again by the detectors.

Two samplers are provided.  ``"aggregate"`` draws the same law by nested
multinomials over photon-number classes, so its cost does not grow with the
number of pulses.  ``"pulse"`` simulates pulses one by one in vectorised
batches and serves as the reference.
"""

from dataclasses import dataclass, field, asdict, fields
from typing import Optional
import csv
import json
import math
import warnings

import numpy as np
from scipy.stats import binom

from .fock_walk import walk_distribution

__all__ = [
    "SpdcSource",
    "ExperimentConfig",
    "CountRecord",
    "sample_source",
    "herald_probability",
    "run_experiment",
    "pair_generation_rate",
]


@dataclass(frozen=True)
class SpdcSource:
    """Two-mode squeezed vacuum ``sum_n lambda_n |n, n>`` with gain ``g``."""

    gain: float
    tail: float = 1e-12

    def __post_init__(self):
        if not self.gain > 0:
            raise ValueError(f"gain must be positive, got {self.gain!r}")

    @classmethod
    def from_mean_photon(cls, mean_n, tail=1e-12):
        return cls(math.asinh(math.sqrt(mean_n)), tail)

    @property
    def mean_n(self):
        return math.sinh(self.gain) ** 2

    def amplitude(self, n):
        """``lambda_n = tanh^n(g) / cosh(g)``."""
        return math.tanh(self.gain) ** n / math.cosh(self.gain)

    @property
    def n_max(self):
        """Smallest cutoff whose discarded tail ``tanh^{2(N+1)} g`` is below ``tail``."""
        q = math.tanh(self.gain) ** 2
        if q < self.tail:
            return 0
        return max(0, math.ceil(math.log(self.tail) / math.log(q)) - 1)

    def probabilities(self):
        n = np.arange(self.n_max + 1)
        q = math.tanh(self.gain) ** 2
        return q**n / math.cosh(self.gain) ** 2


def sample_source(source, rng, size=None):
    """Draw pair numbers with probability ``lambda_n^2`` (truncated at ``n_max``)."""
    p = source.probabilities()
    return rng.choice(p.size, size=size, p=p / p.sum())


@dataclass
class ExperimentConfig:
    """Settings of a simulated run.

    ``transmission`` is the path transmission of each signal arm and
    ``idler_transmission`` that of the herald arms (defaults to the same).
    With ``heralded_events`` set, exactly that many heralded pulses are drawn
    and ``pulses`` is ignored.
    """

    mean_n: float = 0.2
    transmission: float = 0.5
    detector_efficiency: float = 0.9
    pulses: int = 1_000_000
    r: float = 0.5
    herald_l: int = 2
    herald_sl: int = 2
    rng_seed: int = 0
    idler_transmission: Optional[float] = None
    heralded_events: Optional[int] = None

    def __post_init__(self):
        for name in ("transmission", "detector_efficiency", "r"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
        if self.idler_transmission is not None and not 0.0 <= self.idler_transmission <= 1.0:
            raise ValueError(f"idler_transmission must lie in [0, 1], got {self.idler_transmission!r}")
        if not self.mean_n > 0:
            raise ValueError(f"mean_n must be positive, got {self.mean_n!r}")
        if self.pulses < 1:
            raise ValueError(f"pulses must be at least 1, got {self.pulses!r}")
        if self.heralded_events is not None and self.heralded_events < 0:
            raise ValueError("heralded_events must be non-negative")
        if self.herald_l < 0 or self.herald_sl < 0:
            raise ValueError("herald targets must be non-negative")

    @property
    def source(self):
        return SpdcSource.from_mean_photon(self.mean_n)

    @property
    def idler_efficiency(self):
        t = self.transmission if self.idler_transmission is None else self.idler_transmission
        return t * self.detector_efficiency

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        known = {f.name: f for f in fields(cls)}
        unknown = set(data) - set(known)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kwargs = {}
        for key, value in data.items():
            if value is None or (isinstance(value, str) and value.lower() in ("", "none")):
                kwargs[key] = None
            elif key in ("pulses", "herald_l", "herald_sl", "rng_seed", "heralded_events"):
                kwargs[key] = int(float(value))
            else:
                kwargs[key] = float(value)
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path):
        """Read a JSON object or ``key = value`` lines (``#`` starts a comment)."""
        with open(path) as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            return cls.from_dict(json.loads(text))
        data = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            data[key] = value
        return cls.from_dict(data)


@dataclass
class CountRecord:
    """Detected ``(k_a, k_b)`` pattern counts among heralded pulses.

    ``errors`` uses ``1/sqrt(N)`` with ``N`` the count of the pattern; bins
    without events get ``nan``.
    """

    herald: tuple
    heralded_events: int
    counts: dict = field(default_factory=dict)
    pulses: Optional[int] = None

    def probabilities(self):
        n = self.heralded_events
        return {pat: c / n for pat, c in self.counts.items()} if n else {}

    def errors(self):
        return {pat: (1.0 / math.sqrt(c) if c else math.nan) for pat, c in self.counts.items()}

    def distribution(self, S=None):
        """Estimates over ``k = 0..S`` for patterns ``(k, S-k)``; ``S`` defaults to the herald total.

        Returns ``(probabilities, errors, counts)`` arrays.
        """
        S = sum(self.herald) if S is None else S
        counts = np.array([self.counts.get((k, S - k), 0) for k in range(S + 1)])
        n = self.heralded_events
        probs = counts / n if n else np.full(S + 1, np.nan)
        with np.errstate(divide="ignore"):
            errs = np.where(counts > 0, 1.0 / np.sqrt(np.maximum(counts, 1)), np.nan)
        return probs, errs, counts

    def rows(self):
        probs, errs = self.probabilities(), self.errors()
        return [
            (ka, kb, self.counts[(ka, kb)], probs.get((ka, kb), math.nan), errs[(ka, kb)])
            for ka, kb in sorted(self.counts)
        ]

    columns = ("k_a", "k_b", "count", "probability", "error")

    def to_dict(self):
        return {
            "herald": list(self.herald),
            "heralded_events": self.heralded_events,
            "pulses": self.pulses,
            "columns": list(self.columns),
            "rows": [list(row) for row in self.rows()],
        }


def _binom_row(n, p):
    return binom.pmf(np.arange(n + 1), n, p)


def _multinomial(rng, n, p):
    p = np.asarray(p, dtype=float).ravel()
    return rng.multinomial(n, p / p.sum())


def _conditional_pairs(cfg):
    """Pair-number law of one source given its idler herald, and the herald probability."""
    src = cfg.source
    p_n = src.probabilities()
    eff = cfg.idler_efficiency
    out = []
    for target in (cfg.herald_l, cfg.herald_sl):
        if target > src.n_max:
            raise ValueError(
                f"herald target {target} exceeds source truncation n_max={src.n_max}"
            )
        like = np.array([binom.pmf(target, n, eff) for n in range(p_n.size)])
        joint = p_n * like
        out.append((joint / joint.sum() if joint.sum() > 0 else joint, joint.sum()))
    return out


def herald_probability(cfg):
    """Probability that one pulse produces the requested idler counts on both sources."""
    (_, pa), (_, pb) = _conditional_pairs(cfg)
    return pa * pb


def _detect(rng, record, signal_counts, cfg):
    """Beam splitter and detection for ``signal_counts[(s_a, s_b)] = events``."""
    d = cfg.detector_efficiency
    for (sa, sb), c in sorted(signal_counts.items()):
        if c == 0:
            continue
        S = sa + sb
        ks = _multinomial(rng, c, walk_distribution(S, sa, cfg.r))
        for k, ck in enumerate(ks):
            if ck == 0:
                continue
            pat = _multinomial(rng, ck, np.outer(_binom_row(k, d), _binom_row(S - k, d)))
            pat = pat.reshape(k + 1, S - k + 1)
            for da, db in zip(*np.nonzero(pat)):
                key = (int(da), int(db))
                record.counts[key] = record.counts.get(key, 0) + int(pat[da, db])


def _run_aggregate(cfg, rng):
    (qa, pa), (qb, pb) = _conditional_pairs(cfg)
    if cfg.heralded_events is not None:
        n_herald = cfg.heralded_events
    else:
        n_herald = int(rng.binomial(cfg.pulses, pa * pb))
    record = CountRecord((cfg.herald_l, cfg.herald_sl), n_herald,
                         pulses=None if cfg.heralded_events is not None else cfg.pulses)
    if n_herald == 0:
        return record
    pairs = _multinomial(rng, n_herald, np.outer(qa, qb)).reshape(qa.size, qb.size)
    eta = cfg.transmission
    signal = {}
    for na, nb in zip(*np.nonzero(pairs)):
        c = int(pairs[na, nb])
        surv = _multinomial(rng, c, np.outer(_binom_row(na, eta), _binom_row(nb, eta)))
        surv = surv.reshape(na + 1, nb + 1)
        for sa, sb in zip(*np.nonzero(surv)):
            key = (int(sa), int(sb))
            signal[key] = signal.get(key, 0) + int(surv[sa, sb])
    _detect(rng, record, signal, cfg)
    return record


def _run_pulses(cfg, rng, batch=1_000_000):
    src = cfg.source
    eff = cfg.idler_efficiency
    target = cfg.heralded_events
    na_all, nb_all = [], []
    kept = done = 0
    while (target is None and done < cfg.pulses) or (target is not None and kept < target):
        size = batch if target is not None else min(batch, cfg.pulses - done)
        na = sample_source(src, rng, size)
        nb = sample_source(src, rng, size)
        ma = rng.binomial(na, eff)
        mb = rng.binomial(nb, eff)
        hit = (ma == cfg.herald_l) & (mb == cfg.herald_sl)
        na_all.append(na[hit])
        nb_all.append(nb[hit])
        kept += int(hit.sum())
        done += size
    na = np.concatenate(na_all)
    nb = np.concatenate(nb_all)
    if target is not None:
        na, nb = na[:target], nb[:target]
    sa = rng.binomial(na, cfg.transmission)
    sb = rng.binomial(nb, cfg.transmission)
    record = CountRecord((cfg.herald_l, cfg.herald_sl), int(na.size),
                         pulses=None if target is not None else cfg.pulses)
    pairs, inverse = np.unique(np.stack([sa, sb], axis=1), axis=0, return_inverse=True)
    inverse = np.ravel(inverse)
    d = cfg.detector_efficiency
    for idx, (a, b) in enumerate(pairs):
        members = np.flatnonzero(inverse == idx)
        S = int(a + b)
        k = rng.choice(S + 1, size=members.size, p=walk_distribution(S, int(a), cfg.r))
        da = rng.binomial(k, d)
        db = rng.binomial(S - k, d)
        for key, c in zip(*np.unique(np.stack([da, db], axis=1), axis=0, return_counts=True)):
            key = (int(key[0]), int(key[1]))
            record.counts[key] = record.counts.get(key, 0) + int(c)
    return record


def run_experiment(cfg, method="aggregate"):
    """Simulate ``cfg`` and return the heralded :class:`CountRecord`.

    Deterministic for a given ``cfg.rng_seed`` and ``method``.
    """
    rng = np.random.default_rng(cfg.rng_seed)
    if method == "aggregate":
        record = _run_aggregate(cfg, rng)
    elif method == "pulse":
        record = _run_pulses(cfg, rng)
    else:
        raise ValueError(f"unknown method {method!r}")
    if record.heralded_events == 0:
        warnings.warn("no heralded events in this run", RuntimeWarning, stacklevel=2)
    return record


def pair_generation_rate(source, n, rep_rate_hz, pulses=None, rng=None):
    """Rate (per minute) of pulses in which one source emits exactly ``n`` pairs.

    Analytic ``lambda_n^2 * rep_rate * 60`` unless ``pulses`` is given, in which
    case that many pulses are sampled and the empirical frequency is used.
    """
    if pulses is None:
        p = source.amplitude(n) ** 2
    else:
        rng = np.random.default_rng() if rng is None else rng
        p = float(np.mean(sample_source(source, rng, pulses) == n))
    return p * rep_rate_hz * 60.0
