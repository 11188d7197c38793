"""Convex-hull covers, barycentric selections, and epsilon-selections.

The convex hull of an index set inside the free vector space on the indices
has exact membership: a simplex vector lies in the hull of the members at a
point iff its carrier is contained in that member set (the indices form a
basis, so barycentric coordinates are unique).

For coordinate ambient spaces, convex targets are points, segments, axis
boxes, or V-polytopes with exact distance oracles (projection-based).  The
epsilon-selection pipeline turns a distance oracle plus a finite anchor set
into a certified approximate selection: bump weights over the anchors,
locally-finite shrinking, then a barycentric sum of the anchors.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import CoverGap, InputError, NonPositiveEpsilon
from .pou import PartitionOfUnity, mather_compose
from .sparse import SparseVec
from .spaces import FiniteSpace


def conv_membership(omega, x, p):
    """Is the simplex vector ``p`` in the convex hull of the members of the
    cover at ``x``?  Exact: carrier containment."""
    return p.carrier() <= omega.values[x]


def conv_fiber_open(omega, p):
    """Fiber of ``p`` under the hull cover (intersection of the fibers named
    by its carrier) together with its openness verdict."""
    car = p.carrier()
    if not car:
        raise InputError("simplex vector with empty carrier")
    fiber = frozenset(omega.domain.points)
    for a in car:
        fiber &= omega.fiber(a)
    is_open = omega.domain.is_open(fiber)
    witness = None
    if not is_open:
        missing = omega.domain.interior(fiber)
        witness = sorted(fiber - missing, key=repr)[0]
    return is_open, fiber, witness


@dataclass(frozen=True)
class SelectionCertificate:
    point: object
    value: tuple
    distance_bound: object
    active_anchors: tuple


def _vadd(p, q):
    return tuple(a + b for a, b in zip(p, q))


def _vscale(c, p):
    return tuple(c * a for a in p)


def barycentric_selection(gamma, anchors):
    """Anchor-weighted barycentric map: phi(x) = sum gamma_a(x) * anchor(a).

    Returns the pointwise values and certificates recording the active
    anchors; the value lies in their convex hull by construction.
    """
    values = {}
    certs = {}
    for x in gamma.ground_points():
        row = gamma.rows[x]
        missing = row.carrier() - set(anchors)
        if missing:
            raise InputError(f"missing anchors {sorted(missing, key=repr)}")
        dim = len(next(iter(anchors.values())))
        acc = (0,) * dim
        for a in row:
            acc = _vadd(acc, _vscale(row[a], tuple(anchors[a])))
        values[x] = acc
        certs[x] = SelectionCertificate(
            x, acc, None, tuple(sorted(row.carrier(), key=repr))
        )
    return values, certs


def dist_to_point(q, p):
    return math.dist([float(c) for c in q], [float(c) for c in p])


def dist_to_segment(q, a, b):
    q = np.asarray(q, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = b - a
    denom = float(d @ d)
    t = 0.0 if denom == 0 else float((q - a) @ d) / denom
    t = min(1.0, max(0.0, t))
    return float(np.linalg.norm(q - (a + t * d)))


def dist_to_box(q, lo, hi):
    gaps = [
        max(float(l) - float(c), 0.0, float(c) - float(h))
        for c, l, h in zip(q, lo, hi)
    ]
    return math.hypot(*gaps)


def dist_to_polytope(q, vertices):
    """Distance to the convex hull of a small vertex list via exhaustive
    face projection: project onto the affine hull of every vertex subset and
    keep the nearest projection with nonnegative barycentric coordinates."""
    q = np.asarray(q, dtype=float)
    verts = [np.asarray(v, dtype=float) for v in vertices]
    best = min(float(np.linalg.norm(q - v)) for v in verts)
    for k in range(2, len(verts) + 1):
        for subset in itertools.combinations(range(len(verts)), k):
            vmat = np.stack([verts[i] for i in subset], axis=1)
            # KKT system for min |V w - q|^2 subject to sum w = 1
            g = vmat.T @ vmat
            kkt = np.zeros((k + 1, k + 1))
            kkt[:k, :k] = 2 * g
            kkt[:k, k] = 1
            kkt[k, :k] = 1
            rhs = np.concatenate([2 * vmat.T @ q, [1.0]])
            sol, *_ = np.linalg.lstsq(kkt, rhs, rcond=None)
            w = sol[:k]
            if np.all(w >= -1e-12) and abs(float(np.sum(w)) - 1.0) <= 1e-9:
                best = min(best, float(np.linalg.norm(vmat @ w - q)))
    return best


class ConvexTarget:
    """Per-point convex subsets of a coordinate ambient space with exact
    distance oracles.  ``sets`` maps ground point -> spec dict with ``kind``
    in {point, segment, box, polytope}."""

    KINDS = ("point", "segment", "box", "polytope")

    __slots__ = ("ambient_dim", "sets")

    def __init__(self, ambient_dim, sets):
        for x, spec in sets.items():
            if spec.get("kind") not in self.KINDS:
                raise InputError(f"unknown convex set kind at {x!r}: {spec!r}")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "sets", dict(sets))

    def __setattr__(self, name, value):
        raise AttributeError("ConvexTarget is immutable")

    def ground_points(self):
        return list(self.sets)

    def distance(self, x, q):
        spec = self.sets[x]
        kind = spec["kind"]
        if kind == "point":
            return dist_to_point(q, spec["p"])
        if kind == "segment":
            return dist_to_segment(q, spec["a"], spec["b"])
        if kind == "box":
            return dist_to_box(q, spec["lo"], spec["hi"])
        return dist_to_polytope(q, spec["vertices"])


def epsilon_selection(target, eps, anchors):
    """Certified approximate selection for a convex target.

    Anchor weights are bumps of the distance oracle, max(eps - d(a, set), 0),
    normalized into a partition row, shrunk with the locally-finite transform,
    and summed barycentrically.  Every active anchor is strictly eps-close to
    the target set and the value is a convex combination of active anchors,
    so its distance to the (convex) set stays below eps.
    """
    if eps <= 0:
        raise NonPositiveEpsilon(eps)
    anchors = [tuple(a) for a in anchors]
    anchor_ids = {f"a{i}": a for i, a in enumerate(anchors)}
    ground = FiniteSpace.discrete(target.ground_points())
    rows = {}
    for x in target.ground_points():
        weights = {}
        for aid, apt in anchor_ids.items():
            gap = eps - target.distance(x, apt)
            if gap > 0:
                weights[aid] = gap
        if not weights:
            raise CoverGap(x)
        total = sum(weights.values())
        rows[x] = SparseVec((aid, g / total) for aid, g in weights.items())
    pou = PartitionOfUnity(ground, set(anchor_ids), rows, mode="float")
    gamma, _cert = mather_compose(pou)
    values, certs = barycentric_selection(gamma, anchor_ids)
    out_certs = {}
    for x, v in values.items():
        d = target.distance(x, v)
        out_certs[x] = SelectionCertificate(
            x, v, d, certs[x].active_anchors
        )
        if not d < eps:
            raise AssertionError(
                f"certificate violated at {x!r}: distance {d} >= eps {eps}"
            )
    return values, out_certs
