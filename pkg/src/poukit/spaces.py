"""Finite Alexandrov spaces and finite metric sample spaces.

A finite Alexandrov space is given by the minimal open neighborhood of each
point (equivalently, a preorder: y in min_open(x) means x specializes to y).
Opens are exactly the unions of minimal opens, so all topological queries are
exact set computations.

A metric sample space is a finite list of coordinate points with the
Euclidean metric (or an explicit distance table); it is the desk-scale ground
for ball covers and bump constructions.
"""

import math
from fractions import Fraction

from .errors import InputError, NotReflexive, NotTransitive

TOL_METRIC = 1e-9


class FiniteSpace:
    """Validated finite Alexandrov space.  Use :func:`validate_space` or the
    named constructors; direct construction skips no checks."""

    __slots__ = ("points", "min_open")

    def __init__(self, points, min_open):
        pts = frozenset(points)
        mo = {p: frozenset(min_open[p]) for p in pts}
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "min_open", mo)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSpace is immutable")

    def _validate(self):
        for p, nbhd in self.min_open.items():
            if not nbhd <= self.points:
                raise InputError(f"min_open({p!r}) leaves the point set")
            if p not in nbhd:
                raise NotReflexive(p)
        for x in self.points:
            for y in self.min_open[x]:
                for z in self.min_open[y]:
                    if z not in self.min_open[x]:
                        raise NotTransitive(x, y, z)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSpace)
            and self.points == other.points
            and self.min_open == other.min_open
        )

    def __hash__(self):
        return hash((self.points, frozenset(self.min_open.items())))

    def __repr__(self):
        return f"FiniteSpace({sorted(self.points, key=repr)!r})"

    def _check_subset(self, s):
        s = frozenset(s)
        if not s <= self.points:
            raise InputError(f"unknown points {sorted(s - self.points, key=repr)}")
        return s

    def is_open(self, s):
        s = self._check_subset(s)
        return all(self.min_open[x] <= s for x in s)

    def is_closed(self, s):
        return self.is_open(self.points - self._check_subset(s))

    def closure(self, s):
        """Smallest closed superset: points whose every neighborhood meets s,
        i.e. whose minimal open meets s."""
        s = self._check_subset(s)
        return frozenset(x for x in self.points if self.min_open[x] & s)

    def interior(self, s):
        s = self._check_subset(s)
        return frozenset(x for x in s if self.min_open[x] <= s)

    def open_sets(self):
        """All open sets (unions of minimal opens).  Exponential; meant for
        desk-scale spaces only."""
        opens = {frozenset()}
        for p in sorted(self.points, key=repr):
            opens |= {u | self.min_open[p] for u in opens}
        return opens

    @classmethod
    def discrete(cls, points):
        return cls(points, {p: {p} for p in points})

    @classmethod
    def indiscrete(cls, points):
        pts = set(points)
        return cls(pts, {p: pts for p in pts})

    @classmethod
    def sierpinski(cls, open_point="b", closed_point="a"):
        """Two points; {open_point} is open, the other is not."""
        return cls(
            {open_point, closed_point},
            {closed_point: {closed_point, open_point}, open_point: {open_point}},
        )


def validate_space(points, min_open):
    """Build a space, raising NotReflexive / NotTransitive with witnesses."""
    return FiniteSpace(points, min_open)


def finite_interval_model(n):
    """Finite weak-homotopy model of the unit interval with n edges:
    vertices v0..vn (closed points) and open edge points e1..en."""
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    points = [f"v{i}" for i in range(n + 1)] + [f"e{i}" for i in range(1, n + 1)]
    min_open = {f"e{i}": {f"e{i}"} for i in range(1, n + 1)}
    for i in range(n + 1):
        nbhd = {f"v{i}"}
        if i >= 1:
            nbhd.add(f"e{i}")
        if i < n:
            nbhd.add(f"e{i + 1}")
        min_open[f"v{i}"] = nbhd
    return FiniteSpace(points, min_open)


def product_space(x, y):
    """Product topology: minimal opens are boxes of minimal opens."""
    points = {(p, q) for p in x.points for q in y.points}
    min_open = {
        (p, q): {(a, b) for a in x.min_open[p] for b in y.min_open[q]}
        for (p, q) in points
    }
    return FiniteSpace(points, min_open)


class Ball:
    __slots__ = ("center", "radius")

    def __init__(self, center, radius):
        if radius <= 0:
            raise InputError(f"ball radius must be positive, got {radius}")
        object.__setattr__(self, "center", tuple(center))
        object.__setattr__(self, "radius", radius)

    def __setattr__(self, name, value):
        raise AttributeError("Ball is immutable")

    def __repr__(self):
        return f"Ball({self.center}, {self.radius})"


class MetricSampleSpace:
    """Finite list of sample points with a metric.

    With rational coordinates, ball membership (d < r) is decided exactly by
    comparing squared quantities, so cover combinatorics stay exact even when
    distances themselves are irrational.
    """

    __slots__ = ("dim", "samples", "_table")

    def __init__(self, samples, dim=None, distance_table=None):
        samples = [tuple(p) for p in samples]
        if not samples:
            raise InputError("need at least one sample")
        if dim is None:
            dim = len(samples[0])
        if any(len(p) != dim for p in samples):
            raise InputError("inconsistent sample dimension")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "_table", distance_table)
        self._check_metric()

    def __setattr__(self, name, value):
        raise AttributeError("MetricSampleSpace is immutable")

    def _check_metric(self):
        if self._table is None:
            return
        for p in self.samples:
            if abs(self.dist(p, p)) > TOL_METRIC:
                raise InputError(f"d({p},{p}) != 0")
            for q in self.samples:
                if abs(self.dist(p, q) - self.dist(q, p)) > TOL_METRIC:
                    raise InputError(f"asymmetric distance at ({p},{q})")
                for r in self.samples:
                    if self.dist(p, r) > self.dist(p, q) + self.dist(q, r) + TOL_METRIC:
                        raise InputError(f"triangle inequality fails at ({p},{q},{r})")

    def dist_sq(self, p, q):
        if self._table is not None:
            d = self._table[(tuple(p), tuple(q))]
            return d * d
        return sum((a - b) ** 2 for a, b in zip(p, q))

    def dist(self, p, q):
        if self._table is not None:
            return self._table[(tuple(p), tuple(q))]
        if self.dim == 1:
            return abs(p[0] - q[0])  # exact on rational coordinates
        return math.sqrt(float(self.dist_sq(p, q)))

    def ball_membership(self, ball, x):
        """Exact when coordinates and radius are rational."""
        return self.dist_sq(x, ball.center) < ball.radius**2

    def dist_to_ball_complement(self, ball, x):
        """max(radius - d(x, center), 0); the bump value of the ball at x."""
        gap = ball.radius - self.dist(x, ball.center)
        zero = Fraction(0) if isinstance(gap, Fraction) else 0.0
        return gap if gap > 0 else zero
