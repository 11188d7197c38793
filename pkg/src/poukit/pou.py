"""Partitions of unity: validation, bump synthesis from metric ball covers,
subordination checks, and composition with the locally-finite shrinking
transform.

A partition of unity is stored rowwise: one unit-simplex point per ground
point.  On a finite Alexandrov ground, continuity of real-valued functions
means constancy along the specialization preorder, so validation requires
rows to agree across each minimal open neighborhood.  On a metric sample
ground the rows come from closed-form bump constructions and no continuity
check applies.
"""

from .errors import DiscontinuousAt, InputError, NotACover, RowNotSimplex
from .scalars import EXACT, FLOAT
from .sparse import (
    SparseVec,
    is_unit_simplex_point,
    mather_eta,
    mather_support_bound,
)
from .spaces import FiniteSpace, MetricSampleSpace


class PartitionOfUnity:
    """Rowwise partition of unity over a finite ground.  Use
    :func:`validate_pou` to build one with all invariants checked."""

    __slots__ = ("ground", "index_set", "rows", "mode", "l1_lipschitz")

    def __init__(self, ground, index_set, rows, mode=EXACT, l1_lipschitz=None):
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "index_set", frozenset(index_set))
        object.__setattr__(self, "rows", dict(rows))
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "l1_lipschitz", l1_lipschitz)

    def __setattr__(self, name, value):
        raise AttributeError("PartitionOfUnity is immutable")

    def ground_points(self):
        if isinstance(self.ground, MetricSampleSpace):
            return list(self.ground.samples)
        return sorted(self.ground.points, key=repr)

    def row(self, x):
        return self.rows[x]

    def coordinate(self, alpha, x):
        return self.rows[x][alpha]

    def open_star(self, alpha):
        """Ground points where the alpha-th coordinate function is nonzero."""
        if alpha not in self.index_set:
            raise InputError(f"unknown index {alpha!r}")
        return [x for x in self.ground_points() if self.rows[x][alpha] != 0]

    def carrier_at(self, x):
        return self.rows[x].carrier()


def validate_pou(ground, index_set, rows, mode=EXACT):
    """Check rows are unit-simplex points over the index set and, on an
    Alexandrov ground, that rows are constant along minimal opens."""
    index_set = frozenset(index_set)
    if isinstance(ground, MetricSampleSpace):
        points = list(ground.samples)
    elif isinstance(ground, FiniteSpace):
        points = sorted(ground.points, key=repr)
    else:
        raise InputError("ground must be a FiniteSpace or MetricSampleSpace")
    for x in points:
        if x not in rows:
            raise InputError(f"no row at ground point {x!r}")
        r = rows[x]
        if not isinstance(r, SparseVec) or not is_unit_simplex_point(r, mode):
            raise RowNotSimplex(x, f"{r!r}")
        if not r.carrier() <= index_set:
            raise RowNotSimplex(x, "carrier leaves the index set")
    if isinstance(ground, FiniteSpace):
        for x in points:
            for y in sorted(ground.min_open[x], key=repr):
                if rows[y] != rows[x]:
                    raise DiscontinuousAt(x, y)
    return PartitionOfUnity(ground, index_set, rows, mode)


def pou_from_metric_cover(space, balls, mode=EXACT):
    """Normalized bump partition subordinated to a ball cover.

    Bump of ball a at x is max(radius_a - d(x, center_a), 0).  Positivity is
    decided by the exact squared comparison d^2 < r^2 when coordinates are
    rational, so carriers and stars are exact in either mode even though the
    bump values involve square roots.
    """
    if not isinstance(space, MetricSampleSpace):
        raise InputError("bump construction needs a MetricSampleSpace ground")
    rows = {}
    min_total = None
    for x in space.samples:
        bumps = {}
        for a, ball in balls.items():
            if space.ball_membership(ball, x):
                bumps[a] = space.dist_to_ball_complement(ball, x)
        if not bumps:
            raise NotACover(x)
        total = sum(bumps.values())
        if min_total is None or total < min_total:
            min_total = total
        rows[x] = SparseVec((a, g / total) for a, g in bumps.items())
    checked = validate_pou(space, set(balls), rows, mode=mode)
    # l1 Lipschitz bound for the normalized family: each bump is 1-Lipschitz
    # in the ground metric, and the total is at least min_total on samples.
    lip = 2 * len(balls) / float(min_total)
    return PartitionOfUnity(space, checked.index_set, checked.rows, mode, lip)


def subordination_check(pou, omega):
    """Index subordination (rowwise carrier containment) and strong
    subordination (closure of each star inside the fiber).

    On a metric ground the closure of a star is approximated by the star's
    sample set itself; the report flags this as approximate.
    """
    if frozenset(omega.codomain.points) != pou.index_set:
        raise InputError("index sets differ")
    result = {"index_subordinated": True, "strongly_subordinated": True,
              "approximate_closure": isinstance(pou.ground, MetricSampleSpace),
              "witness": None}
    for x in pou.ground_points():
        if not pou.carrier_at(x) <= omega.values[x]:
            result["index_subordinated"] = False
            result["witness"] = ("carrier", x)
            break
    for a in sorted(pou.index_set, key=repr):
        star = set(pou.open_star(a))
        if isinstance(pou.ground, FiniteSpace):
            star = pou.ground.closure(star)
        if not star <= omega.fiber(a):
            result["strongly_subordinated"] = False
            if result["witness"] is None:
                result["witness"] = ("support", a)
            break
    return result


class LocalFinitenessCertificate:
    """Per-point neighborhood plus a finite index bound: every point of the
    certified neighborhood has its carrier inside the bound."""

    __slots__ = ("per_point",)

    def __init__(self, per_point):
        object.__setattr__(self, "per_point", dict(per_point))

    def __setattr__(self, name, value):
        raise AttributeError("certificate is immutable")

    def neighborhood(self, x):
        return self.per_point[x][0]

    def index_bound(self, x):
        return self.per_point[x][1]


def mather_compose(pou):
    """Apply the shrinking transform rowwise and emit a local-finiteness
    certificate.

    On an Alexandrov ground the certificate neighborhood is the minimal open
    of each point (rows are constant there), with the row carrier as bound;
    strong carrier containment cl(star of the output) inside the star of the
    input is checked exactly.  On a metric ground the l1 stability radius of
    each row is converted to a metric radius through a conservative
    Lipschitz constant for the bump family.
    """
    gamma_rows = {x: mather_eta(pou.rows[x], pou.mode) for x in pou.ground_points()}
    per_point = {}
    if isinstance(pou.ground, FiniteSpace):
        for x in pou.ground_points():
            bound, _ = mather_support_bound(pou.rows[x], pou.mode)
            per_point[x] = (("min_open", frozenset(pou.ground.min_open[x])), bound)
    else:
        lip = pou.l1_lipschitz or 2 * len(pou.index_set)
        for x in pou.ground_points():
            bound, radius = mather_support_bound(pou.rows[x], pou.mode)
            per_point[x] = (("metric_radius", float(radius) / lip), bound)
    gamma = PartitionOfUnity(pou.ground, pou.index_set, gamma_rows, pou.mode)
    if isinstance(pou.ground, FiniteSpace):
        for a in sorted(pou.index_set, key=repr):
            closed_star = pou.ground.closure(set(gamma.open_star(a)))
            if not closed_star <= set(pou.open_star(a)):
                raise AssertionError(
                    f"closed star of {a!r} escapes the input star after shrinking"
                )
    return gamma, LocalFinitenessCertificate(per_point)
