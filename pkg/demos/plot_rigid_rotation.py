"""
Rigid rotation of a circle
==========================

The Hamiltonian H = -y p_x + x p_y turns the level set counter-clockwise at
unit angular speed, so after a time of 2 pi the circle should be back where
it started. WENO5 in space and third-order TVD Runge-Kutta in time keep it
close to the exact answer.
"""

import numpy as np

from hjreach import extract_zero_set_2d, rigid_rotation_problem, solve
from hjreach.contour import hausdorff_to_circle

problem, v0 = rigid_rotation_problem(101, "weno5")
grid = problem.grid

# four quarter turns, one snapshot after each
solution = solve(problem, v0, (0.0, 2 * np.pi), 5)

centres = [(0.5, 0.0), (0.0, 0.5), (-0.5, 0.0), (0.0, -0.5), (0.5, 0.0)]
for t, v, c in zip(solution.times, solution.values, centres):
    segments = extract_zero_set_2d(grid.vs[0], grid.vs[1], v)
    d = hausdorff_to_circle(segments, c, 0.5)
    print(f"t = {t:6.3f}  distance to exact circle = {d:.2e}  ({d / grid.dx[0]:.3f} dx)")

print(f"{solution.steps_taken} steps in {solution.global_time:.1f} s")
