"""Set-valued mappings and indexed covers over finite spaces.

A mapping assigns a nonempty subset of the codomain to each point of the
domain.  When the codomain is a bare index set it is treated as discrete and
the mapping doubles as an indexed cover, with fibers
``fiber(a) = {x : a in values(x)}``.

``classify`` decides the whole semicontinuity hierarchy exactly:
lower semicontinuity, total lower semicontinuity (every fiber open),
open graph, lower local constancy, upper semicontinuity, and usco.
On finite spaces these are finite set computations, so each verdict comes
with a concrete witness when negative.
"""

from dataclasses import dataclass, field

from .errors import InputError
from .spaces import FiniteSpace, product_space


class SetValuedMap:
    """Nonempty-valued map from a finite space to a finite space or to a
    discrete index set."""

    __slots__ = ("domain", "codomain", "values")

    def __init__(self, domain, codomain, values):
        if not isinstance(domain, FiniteSpace):
            raise InputError("domain must be a FiniteSpace")
        if not isinstance(codomain, FiniteSpace):
            codomain = FiniteSpace.discrete(codomain)
        vals = {}
        for p in domain.points:
            if p not in values:
                raise InputError(f"no value at point {p!r}")
            v = frozenset(values[p])
            if not v:
                raise InputError(f"empty value at point {p!r}")
            if not v <= codomain.points:
                raise InputError(f"value at {p!r} leaves the codomain")
            vals[p] = v
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("SetValuedMap is immutable")

    def __call__(self, x):
        return self.values[x]

    def __eq__(self, other):
        return (
            isinstance(other, SetValuedMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.values == other.values
        )

    def fiber(self, y):
        """Preimage of a single codomain element."""
        return frozenset(x for x in self.domain.points if y in self.values[x])

    def preimage(self, ys):
        """{x : values(x) meets ys}."""
        ys = frozenset(ys)
        return frozenset(x for x in self.domain.points if self.values[x] & ys)

    def image(self, s):
        s = frozenset(s)
        if not s <= self.domain.points:
            raise InputError("image over unknown points")
        out = set()
        for x in s:
            out |= self.values[x]
        return frozenset(out)

    def is_discrete_codomain(self):
        return all(
            self.codomain.min_open[y] == frozenset({y}) for y in self.codomain.points
        )


def indexed_cover(domain, index_set, values):
    """A cover of the domain indexed by a discrete set."""
    return SetValuedMap(domain, FiniteSpace.discrete(index_set), values)


@dataclass
class PropertyReport:
    """Classification flags with a witness for each negative verdict."""

    is_cover: bool = True
    lsc: bool = True
    totally_lsc: bool = True
    open_graph: bool = True
    lower_locally_constant: bool = True
    usc: bool = True
    usco: bool = True
    witnesses: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "is_cover": self.is_cover,
            "lsc": self.lsc,
            "totally_lsc": self.totally_lsc,
            "open_graph": self.open_graph,
            "lower_locally_constant": self.lower_locally_constant,
            "usc": self.usc,
            "usco": self.usco,
            "witnesses": {
                k: sorted(map(repr, v)) if isinstance(v, (set, frozenset)) else repr(v)
                for k, v in self.witnesses.items()
            },
        }


def _all_subsets(items):
    items = sorted(items, key=repr)
    out = [frozenset()]
    for it in items:
        out += [s | {it} for s in out]
    return out


def classify(phi):
    """Exact semicontinuity classification of a set-valued mapping."""
    x, y = phi.domain, phi.codomain
    rep = PropertyReport()

    # values nonempty by construction; is_cover records that fact
    rep.is_cover = all(phi.values[p] for p in x.points)

    # l.s.c. on the minimal-open basis (preimages commute with unions)
    for q in sorted(y.points, key=repr):
        pre = phi.preimage(y.min_open[q])
        if not x.is_open(pre):
            rep.lsc = False
            rep.witnesses["lsc"] = ("basic open at", q)
            break

    # totally l.s.c. = every fiber open
    for q in sorted(y.points, key=repr):
        if not x.is_open(phi.fiber(q)):
            rep.totally_lsc = False
            rep.witnesses["totally_lsc"] = ("fiber not open", q)
            break

    # open graph in the product space
    prod = product_space(x, y)
    graph = {(p, q) for p in x.points for q in phi.values[p]}
    for pq in sorted(graph, key=repr):
        if not prod.min_open[pq] <= graph:
            rep.open_graph = False
            rep.witnesses["open_graph"] = ("no open box inside the graph at", pq)
            break

    # lower locally constant: {x : K subset values(x)} open for every K
    for k in _all_subsets(y.points):
        holds = frozenset(p for p in x.points if k <= phi.values[p])
        if not x.is_open(holds):
            rep.lower_locally_constant = False
            rep.witnesses["lower_locally_constant"] = ("set not open for", k)
            break

    # u.s.c. on point closures (closed sets are unions of these)
    for q in sorted(y.points, key=repr):
        pre = phi.preimage(y.closure({q}))
        if not x.is_closed(pre):
            rep.usc = False
            rep.witnesses["usc"] = ("preimage of point closure not closed", q)
            break

    # finite values are compact, so usco collapses to usc
    rep.usco = rep.usc
    return rep


def closure_cover(omega):
    """Cover whose fibers are the closures of the original fibers.

    Computed fiberwise and re-derived pointwise from the defining
    neighborhood-image intersection; the two must agree (this agreement is
    the content of the closed-cover identity, and is asserted here).
    """
    x = omega.domain
    closed_values = {
        p: frozenset(
            a for a in omega.codomain.points if p in x.closure(omega.fiber(a))
        )
        for p in x.points
    }
    # pointwise: intersection of images of open neighborhoods of p
    for p in x.points:
        acc = set(omega.codomain.points)
        for q in x.points:
            u = x.min_open[q]
            if p in u:
                acc &= omega.image(u)
        if frozenset(acc) != closed_values[p]:
            raise AssertionError(
                f"closure-cover formulas disagree at {p!r}: {acc} vs {closed_values[p]}"
            )
    return SetValuedMap(x, omega.codomain, closed_values)


def graph_closure(phi):
    """Mapping given by the closure of the graph, computed via the
    neighborhood-image intersection formula."""
    x, y = phi.domain, phi.codomain
    values = {}
    for p in x.points:
        acc = set(y.points)
        for q in x.points:
            u = x.min_open[q]
            if p in u:
                acc &= y.closure(phi.image(u))
        values[p] = frozenset(acc)
    return SetValuedMap(x, y, values)
