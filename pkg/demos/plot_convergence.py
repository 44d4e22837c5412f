"""
Convergence of the upwind derivative schemes
============================================

Differentiate sin(2 pi x) on periodic grids of 32, 64, ... nodes and watch
the error fall at the rate each scheme promises.
"""

from hjreach.studies import format_table, spatial_convergence, temporal_convergence

for scheme in ("first", "eno2", "eno3", "weno5"):
    print(f"# {scheme}")
    print(format_table(spatial_convergence(scheme, refinements=4)))
    print()

# the integrators on the decay v' = -v, compared with exp(-1) at t = 1
for name in ("cfl_1", "cfl_2", "cfl_3"):
    print(f"# {name}")
    print(format_table(temporal_convergence(name), header=("n", "dt", "max_error", "order")))
    print()
