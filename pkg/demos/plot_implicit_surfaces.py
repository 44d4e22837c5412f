"""
Implicit surfaces and their Boolean algebra
===========================================

Shapes are stored as level functions sampled on a grid: negative inside,
positive outside, zero on the boundary.
"""

import numpy as np

from hjreach import create_grid, implicit

grid = create_grid((-2, -2), (2, 2), 41)

# a disc and a square, both centred at the origin
disc = implicit.sphere(grid, (0.5, 0.0), 1.0)
square = implicit.rectangle(grid, (-1.5, -0.5), (0.5, 0.5))

# union takes the pointwise min, intersection the max, complement negates
both = implicit.union(disc, square)
overlap = implicit.intersection(disc, square)
outside = implicit.complement(disc)

cell = np.prod(grid.dx)
for name, v in [("disc", disc), ("square", square), ("union", both), ("overlap", overlap)]:
    print(f"{name:8s} area ~ {np.count_nonzero(v < 0) * cell:.3f}")

# De Morgan holds bit for bit
lhs = implicit.complement(implicit.union(disc, square))
rhs = implicit.intersection(implicit.complement(disc), implicit.complement(square))
print("De Morgan exact:", np.array_equal(lhs, rhs))
print("complement flips the sign at the centre:", outside[30, 20] > 0)
