"""Seeded random instance generators for property checks.

Everything draws from a caller-supplied ``random.Random`` so runs are
reproducible from a single seed; reports record that seed.
"""

import random
from fractions import Fraction

from .setmaps import SetValuedMap, indexed_cover
from .sparse import SparseVec
from .spaces import FiniteSpace


def random_simplex_point(rng, indices, max_carrier=None):
    """Uniformly weighted random rational simplex point with carrier drawn
    from the given index pool."""
    indices = list(indices)
    k = rng.randint(1, max_carrier or len(indices))
    carrier = rng.sample(indices, min(k, len(indices)))
    weights = [rng.randint(1, 100) for _ in carrier]
    total = sum(weights)
    return SparseVec({a: Fraction(w, total) for a, w in zip(carrier, weights)})


def random_space(rng, max_points=8):
    """Random finite Alexandrov space: a random relation closed under
    reflexivity and transitivity."""
    n = rng.randint(1, max_points)
    points = [f"p{i}" for i in range(n)]
    succ = {p: {p} for p in points}
    for p in points:
        for q in points:
            if p != q and rng.random() < 0.3:
                succ[p].add(q)
    # transitive closure
    changed = True
    while changed:
        changed = False
        for p in points:
            extra = set()
            for q in succ[p]:
                extra |= succ[q]
            if not extra <= succ[p]:
                succ[p] |= extra
                changed = True
    return FiniteSpace(points, succ)


def random_set_valued_map(rng, domain=None, codomain=None, max_points=6):
    """Random nonempty-valued map between random finite spaces."""
    if domain is None:
        domain = random_space(rng, max_points)
    if codomain is None:
        codomain = random_space(rng, max_points)
    cod = sorted(codomain.points, key=repr)
    values = {
        p: set(rng.sample(cod, rng.randint(1, len(cod)))) for p in domain.points
    }
    return SetValuedMap(domain, codomain, values)


def random_cover(rng, domain=None, max_indices=6, max_points=8):
    """Random indexed cover of a random finite space."""
    if domain is None:
        domain = random_space(rng, max_points)
    k = rng.randint(1, max_indices)
    indices = [f"U{i}" for i in range(k)]
    values = {
        p: set(rng.sample(indices, rng.randint(1, k))) for p in domain.points
    }
    return indexed_cover(domain, indices, values)


def random_open_cover(rng, domain=None, max_indices=6, max_points=8):
    """Random totally-l.s.c. cover: every fiber is a union of minimal opens,
    patched so each point is covered."""
    if domain is None:
        domain = random_space(rng, max_points)
    pts = sorted(domain.points, key=repr)
    k = rng.randint(1, max_indices)
    indices = [f"U{i}" for i in range(k)]
    fibers = {}
    for a in indices:
        fiber = set()
        for p in pts:
            if rng.random() < 0.4:
                fiber |= domain.min_open[p]
        fibers[a] = fiber
    covered = set().union(*fibers.values()) if fibers else set()
    for p in pts:
        if p not in covered:
            fibers[indices[rng.randrange(k)]] |= domain.min_open[p]
            covered.add(p)
    values = {p: {a for a in indices if p in fibers[a]} for p in pts}
    # fiber unions of minimal opens may still miss points added above; the
    # patch loop extends fibers by whole minimal opens, so openness holds
    return indexed_cover(domain, indices, values)


def make_rng(seed):
    return random.Random(seed)
