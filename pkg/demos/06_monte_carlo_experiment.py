"""
Simulated heralded experiment
=============================

Two SPDC sources, idler heralding, Bernoulli loss and photon-number
resolving detectors.
"""

import numpy as np
from homwalk import ExperimentConfig, SpdcSource, pair_generation_rate, run_experiment, walk_distribution

# lossless: the estimate reproduces the exact distribution
cfg = ExperimentConfig(transmission=1.0, detector_efficiency=1.0, heralded_events=100_000)
probs, errs, _ = run_experiment(cfg).distribution()
print("estimate:", np.round(probs, 4))
print("exact:   ", np.round(walk_distribution(4, 2, 0.5), 4))

# realistic losses spread the heralded events over many patterns
rec = run_experiment(ExperimentConfig(pulses=5_000_000, mean_n=0.2))
print(f"{rec.heralded_events} heralded events in {rec.pulses} pulses")
for row in rec.rows()[:8]:
    print(row)

src = SpdcSource.from_mean_photon(0.2)
print(f"four-pair emissions at 75 kHz: {pair_generation_rate(src, 4, 75e3):.0f} per minute")
