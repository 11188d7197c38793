"""Finitely supported vectors, the l1 unit simplex, and the locally-finite
shrinking transform.

A ``SparseVec`` is a finitely supported real function on an index universe,
stored as a map from index to nonzero value.  ``UnitSimplexPoint`` restricts
to strictly positive entries summing to one.  ``ExtendedUnitVec`` models unit
vectors whose support may extend beyond the explicitly listed part: the
remainder is described by a certified tail bound (total unlisted mass and a
per-coordinate cap), never by data.

The shrinking transform drops every coordinate that does not exceed half the
sup-norm and renormalizes; it maps unit vectors to finitely supported simplex
points with carriers contained in the original carrier.
"""

from fractions import Fraction

from .errors import TailTooLarge
from .scalars import EXACT, FLOAT, TOL_SUM


class SparseVec:
    """Immutable finitely supported vector: index -> nonzero scalar."""

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        if isinstance(entries, SparseVec):
            data = dict(entries.entries)
        else:
            if isinstance(entries, dict):
                entries = entries.items()
            data = {}
            for k, v in entries:
                if v != 0:
                    data[k] = data.get(k, 0) + v
                    if data[k] == 0:
                        del data[k]
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("SparseVec is immutable")

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __iter__(self):
        return iter(sorted(self.entries, key=repr))

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, SparseVec) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {self.entries[k]}" for k in self)
        return "SparseVec({%s})" % inner

    def carrier(self):
        """Index set where the vector is nonzero."""
        return frozenset(self.entries)

    def norm1(self):
        return sum((abs(v) for v in self.entries.values()), 0)

    def sup_norm(self):
        return max((abs(v) for v in self.entries.values()), default=0)

    def scale(self, c):
        return SparseVec((k, c * v) for k, v in self.entries.items())

    def add(self, other):
        return SparseVec(
            list(self.entries.items()) + list(other.entries.items())
        )

    def sub(self, other):
        return self.add(other.scale(-1))


def carrier(v):
    return v.carrier()


def norms(v):
    """(l1, sup) norm pair; (0, 0) for the zero vector."""
    return v.norm1(), v.sup_norm()


def dirac(index):
    return SparseVec({index: Fraction(1)})


def is_unit_simplex_point(v, mode=EXACT):
    """All entries strictly positive and l1 mass one (within TOL_SUM when
    floating)."""
    if not v.entries:
        return False
    if any(x <= 0 for x in v.entries.values()):
        return False
    total = v.norm1()
    if mode == FLOAT or isinstance(total, float):
        return abs(total - 1) <= TOL_SUM
    return total == 1


def as_unit_simplex_point(v, mode=EXACT):
    if not is_unit_simplex_point(v, mode):
        raise ValueError(f"not a unit simplex point: {v!r}")
    return v


def uniform(indices):
    indices = list(indices)
    w = Fraction(1, len(indices))
    return SparseVec({i: w for i in indices})


def convex_combination(weights, points):
    """Weighted sum of sparse vectors; ``weights`` is a unit simplex point and
    every carried index must have a point."""
    missing = weights.carrier() - set(points)
    if missing:
        raise KeyError(f"no point supplied for weighted indices {sorted(missing, key=repr)}")
    acc = []
    for k in weights:
        acc.extend(points[k].scale(weights[k]).entries.items())
    return SparseVec(acc)


class ExtendedUnitVec:
    """Unit-mass vector given by an explicit positive finite part plus a tail
    certificate: the unlisted coordinates carry total mass ``tail_mass`` and
    each is at most ``tail_sup``."""

    __slots__ = ("explicit", "tail_mass", "tail_sup")

    def __init__(self, explicit, tail_mass=0, tail_sup=0, mode=EXACT):
        explicit = SparseVec(explicit)
        if any(x <= 0 for x in explicit.entries.values()):
            raise ValueError("explicit part must be strictly positive")
        if tail_mass < 0 or tail_sup < 0 or tail_sup > tail_mass:
            raise ValueError("need 0 <= tail_sup <= tail_mass")
        total = explicit.norm1() + tail_mass
        if mode == FLOAT or isinstance(total, float):
            if abs(total - 1) > TOL_SUM:
                raise ValueError(f"total mass {total} != 1")
        elif total != 1:
            raise ValueError(f"total mass {total} != 1")
        object.__setattr__(self, "explicit", explicit)
        object.__setattr__(self, "tail_mass", tail_mass)
        object.__setattr__(self, "tail_sup", tail_sup)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedUnitVec is immutable")

    def __repr__(self):
        return (
            f"ExtendedUnitVec({self.explicit!r}, tail_mass={self.tail_mass}, "
            f"tail_sup={self.tail_sup})"
        )

    def sup_norm(self):
        # The tail cap participates: an unlisted coordinate may reach tail_sup.
        return max(self.explicit.sup_norm(), self.tail_sup)

    @classmethod
    def from_simplex_point(cls, p, mode=EXACT):
        return cls(p, 0, 0, mode=mode)


def _as_extended(y, mode=EXACT):
    if isinstance(y, ExtendedUnitVec):
        return y
    return ExtendedUnitVec.from_simplex_point(as_unit_simplex_point(y, mode), mode=mode)


def _half_sup(y):
    sup = y.sup_norm()
    half = sup / 2
    if y.tail_sup >= half:
        raise TailTooLarge(
            f"tail_sup={y.tail_sup} >= sup/2={half}; unlisted survivors possible"
        )
    return half


def mather_lambda(y, mode=EXACT):
    """Coordinatewise ``max(y(a) - sup/2, 0)``.

    Only explicitly listed coordinates can survive (guaranteed by the tail
    precondition), and ties at exactly half the sup-norm are dropped.  The
    result is nonzero: the argmax coordinate keeps half the sup-norm.
    """
    y = _as_extended(y, mode)
    half = _half_sup(y)
    return SparseVec(
        (k, v - half) for k, v in y.explicit.entries.items() if v > half
    )


def mather_eta(y, mode=EXACT):
    """l1-normalized shrinking transform; lands in the finite unit simplex."""
    lam = mather_lambda(y, mode)
    total = lam.norm1()
    return lam.scale(1 / total if isinstance(total, float) else Fraction(1) / total)


def mather_support_bound(y, mode=EXACT):
    """Support stability certificate: a finite index set B and a radius d > 0
    such that every unit vector within l1-distance d of ``y`` shrinks into B.

    Uses d = (sup - 2 * tail_mass) / 6, strictly inside the sound range
    (anything below (sup - 2 * tail_mass) / 3 works: a perturbed vector y'
    has sup' >= sup - d, while an unlisted coordinate is at most
    tail_sup + d <= tail_mass + d < sup'/2).
    """
    y = _as_extended(y, mode)
    _half_sup(y)
    sup = y.sup_norm()
    margin = sup - 2 * y.tail_mass
    if margin <= 0:
        raise TailTooLarge(
            f"tail_mass={y.tail_mass} >= sup/2={sup / 2}; no positive radius"
        )
    radius = margin / 6 if isinstance(margin, float) else Fraction(margin, 6)
    return y.explicit.carrier(), radius
