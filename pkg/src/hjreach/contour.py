"""
Zero-contour extraction on 2-D slices (marching squares) and curve metrics.
"""

from __future__ import annotations

import numpy as np

# corners of a cell in counter-clockwise order: (i, j) offsets
_CORNERS = ((0, 0), (1, 0), (1, 1), (0, 1))
# edge e joins corner e and corner e + 1
_EDGES = tuple((e, (e + 1) % 4) for e in range(4))


def extract_zero_set_2d(xv, yv, field) -> np.ndarray:
    """Marching-squares segments of ``field == 0``.

    :arg xv: node coordinates along the first axis of *field*.
    :arg yv: node coordinates along the second axis.
    :returns: array of shape ``(n, 2, 2)``; ``segments[k]`` holds the two
        endpoints of segment ``k`` in physical coordinates. Nodes with
        ``field >= 0`` count as outside, so a zero sitting on a node places
        the crossing exactly at that node.
    """
    xv = np.asarray(xv, dtype=np.float64)
    yv = np.asarray(yv, dtype=np.float64)
    f = np.asarray(field, dtype=np.float64)
    if f.ndim != 2 or f.shape != (xv.size, yv.size):
        raise ValueError(f"expected a 2-D field of shape {(xv.size, yv.size)}, got {f.shape}")

    corner_vals = [f[i:f.shape[0] - 1 + i, j:f.shape[1] - 1 + j] for i, j in _CORNERS]
    inside = [c < 0 for c in corner_vals]
    case = sum(inside[k].astype(np.int64) << k for k in range(4))

    ci, cj = np.nonzero((case != 0) & (case != 15))
    segments = []
    for i, j in zip(ci, cj):
        vals = [corner_vals[k][i, j] for k in range(4)]
        ins = [inside[k][i, j] for k in range(4)]
        pts = [(i + di, j + dj) for di, dj in _CORNERS]

        crossings = []
        for a, b in _EDGES:
            if ins[a] != ins[b]:
                s = vals[a] / (vals[a] - vals[b])
                ia = pts[a][0] + s * (pts[b][0] - pts[a][0])
                ja = pts[a][1] + s * (pts[b][1] - pts[a][1])
                crossings.append((a, _interp(xv, ia), _interp(yv, ja)))

        if len(crossings) == 2:
            segments.append([crossings[0][1:], crossings[1][1:]])
            continue

        # saddle: the cell centre decides which corners connect
        center_inside = np.mean(vals) < 0
        c = [p[1:] for p in crossings]
        if center_inside == ins[0]:
            # corner 0 region is joined across the centre with corner 2
            segments.extend([[c[0], c[1]], [c[2], c[3]]])
        else:
            segments.extend([[c[0], c[3]], [c[1], c[2]]])

    if not segments:
        return np.empty((0, 2, 2))
    return np.array(segments, dtype=np.float64)


def _interp(axis, index):
    lo = min(int(np.floor(index)), axis.size - 2)
    return axis[lo] + (index - lo) * (axis[lo + 1] - axis[lo])


def polyline_length(segments: np.ndarray) -> float:
    return float(np.sum(np.linalg.norm(segments[:, 1] - segments[:, 0], axis=-1)))


def point_segment_distance(points: np.ndarray, segments: np.ndarray) -> np.ndarray:
    """Distance from each point to the nearest segment, shape ``(len(points),)``."""
    a = segments[None, :, 0, :]
    ab = segments[None, :, 1, :] - a
    ap = points[:, None, :] - a
    denom = np.einsum("ijk,ijk->ij", ab, ab)
    s = np.where(denom > 0, np.einsum("ijk,ijk->ij", ap, ab) / np.where(denom > 0, denom, 1), 0.0)
    s = np.clip(s, 0.0, 1.0)
    closest = a + s[..., None] * ab
    return np.min(np.linalg.norm(points[:, None, :] - closest, axis=-1), axis=1)


def hausdorff_to_circle(segments: np.ndarray, center, radius: float, n_samples: int = 2000) -> float:
    """Symmetric Hausdorff distance between a segment set and a circle."""
    if len(segments) == 0:
        return np.inf
    center = np.asarray(center, dtype=np.float64)

    # segments are cell-sized, so endpoints and midpoints suffice
    pts = np.concatenate([segments[:, 0], segments[:, 1], segments.mean(axis=1)])
    forward = np.max(np.abs(np.linalg.norm(pts - center, axis=1) - radius))

    theta = np.linspace(0.0, 2.0 * np.pi, n_samples, endpoint=False)
    circle = center + radius * np.column_stack([np.cos(theta), np.sin(theta)])
    backward = np.max(point_segment_distance(circle, segments))
    return float(max(forward, backward))
