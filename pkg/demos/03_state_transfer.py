"""
Perfect state transfer
======================

At r = 1 any superposition over |l, S-l> is mirrored, l -> S - l.
"""

import numpy as np
from homwalk import perfect_state_transfer_fidelity, zero_energy_mode, generalized_ssh_couplings

rng = np.random.default_rng(1)
psi = rng.normal(size=21) + 1j * rng.normal(size=21)
psi /= np.linalg.norm(psi)

for r in np.linspace(0, 1, 6):
    print(f"r={r:.1f}  fidelity={perfect_state_transfer_fidelity(psi, r):.6f}")

# the edge state itself moves to the other edge
mode = zero_energy_mode(generalized_ssh_couplings(20))
print("edge state:", perfect_state_transfer_fidelity(mode.amps, 1.0))
