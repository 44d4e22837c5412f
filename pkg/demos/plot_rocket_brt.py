"""
Backward reachable tube of the rocket game
==========================================

Two rockets share a plane. The state is the relative position (x, y) and the
relative heading theta; capture happens within 1.5 of the origin whatever the
heading, so the target is a cylinder along theta. Solving backwards from
t = -2.5 to 0 grows that cylinder into the set of states from which the
pursuer can force capture.

The clamp min(dv/dt, 0) keeps the tube from shrinking. An odd node count puts
a node on the axis of the cylinder; with 50 nodes per axis no node lies
inside it at all.

At this resolution the front barely moves. The dissipation coefficients are
grid-wide maxima, and the bound on |dH/dp_x| grows with |x| up to 65 at the
domain edge. Next to the axis, where the value has a kink in x, that
dissipation outweighs the drift towards the target and the clamp holds the
value in place after the first checkpoint.
"""

import numpy as np

from hjreach import build_rocket_problem, solve_brt

problem, v0 = build_rocket_problem(31)
grid = problem.grid
print("grid spacing:", grid.dx)

solution = solve_brt(problem, v0, (-2.5, 0.0), 11)

cell = np.prod(grid.dx)
for t, v in zip(solution.times, solution.values):
    print(f"t = {t:5.2f}  tube volume ~ {np.count_nonzero(v <= 0) * cell:10.1f}  min v = {v.min():.3f}")

dts = solution.log.dts
print(f"{solution.steps_taken} steps, dt between {dts.min():.4f} and {dts.max():.4f}")
