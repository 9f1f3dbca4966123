"""
Chains, edge modes and symmetry class
=====================================

The beam-splitter Hamiltonian is an engineered XY chain.  Here we compare
it with the SSH chain and classify both.
"""

import numpy as np
from homwalk import (
    classify, eigensystem, generalized_ssh_couplings, near_zero_mode,
    photonic_equivalence_check, ssh_couplings, ssh_localisation_length, zero_energy_mode,
)

# harmonic spectrum of the generalised chain
w, _ = eigensystem(generalized_ssh_couplings(10))
print("spectrum S=10:", np.round(w, 12))
print("largest gap to H_BS:", max(photonic_equivalence_check(S) for S in range(1, 51)))

# SSH edge state decays exponentially
for delta in (0.1, 0.2, 0.5):
    mode = zero_energy_mode(ssh_couplings(100, delta=delta))
    print(f"delta={delta}: fitted xi={mode.localisation:.4f}  formula={ssh_localisation_length(delta):.4f}")

# the generalised chain's edge state is algebraic instead
print(zero_energy_mode(generalized_ssh_couplings(50)).localisation)

# an even number of sites has no exact zero mode
mode = near_zero_mode(ssh_couplings(51, delta=0.005))
print(f"52-site SSH, delta=0.005: smallest energy {mode.energy:.5f}")

print(classify(generalized_ssh_couplings(50).matrix()).az_class)
