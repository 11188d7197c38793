from fractions import Fraction as F

import pytest

from poukit import (
    Ball,
    FiniteSpace,
    MetricSampleSpace,
    SimplicialComplex,
    canonical_map_check,
    cover_simplex_mapping,
    indexed_cover,
    nerve_from_cover,
    pou_from_metric_cover,
    subordination_check,
    validate_pou,
)
from poukit.errors import InputError
from poukit.generators import make_rng, random_cover, random_open_cover
from poukit.sparse import SparseVec, dirac


def line_cover():
    m = MetricSampleSpace([(F(i, 2),) for i in range(5)])  # 0, .5, 1, 1.5, 2
    balls = {
        "0": Ball((F(0),), F(3, 5)),
        "1": Ball((F(1),), F(3, 5)),
        "2": Ball((F(2),), F(3, 5)),
    }
    return m, balls


class TestComplexInvariants:
    def test_downward_closure_enforced(self):
        with pytest.raises(InputError):
            SimplicialComplex({"a", "b"}, [{"a", "b"}])

    def test_isolated_vertex_rejected(self):
        with pytest.raises(InputError):
            SimplicialComplex({"a", "b"}, [{"a"}])

    def test_dimension(self):
        cx = SimplicialComplex({"a", "b"}, [{"a"}, {"b"}, {"a", "b"}])
        assert cx.dimension() == 1


class TestNerveFromCover:
    def test_three_ball_line(self):
        cx = nerve_from_cover(line_cover())
        expected = {
            frozenset({"0"}), frozenset({"1"}), frozenset({"2"}),
            frozenset({"0", "1"}), frozenset({"1", "2"}),
        }
        assert cx.simplices == expected

    def test_single_set(self):
        m = MetricSampleSpace([(F(0),)])
        cx = nerve_from_cover((m, {"U": Ball((F(0),), F(1))}))
        assert cx.simplices == {frozenset({"U"})}

    def test_identical_sets_give_edge(self):
        s = FiniteSpace.discrete({"x"})
        om = indexed_cover(s, {"0", "1"}, {"x": {"0", "1"}})
        cx = nerve_from_cover(om)
        assert frozenset({"0", "1"}) in cx.simplices

    def test_witness_monotonicity(self):
        m, balls = line_cover()
        small = nerve_from_cover((m, balls), witnesses=[(F(0),), (F(2),)])
        full = nerve_from_cover((m, balls))
        assert small.simplices <= full.simplices

    def test_downward_closed_random(self):
        rng = make_rng(17)
        for _ in range(50):
            cx = nerve_from_cover(random_cover(rng))
            for s in cx.simplices:
                for v in s:
                    assert not (s - {v}) or (s - {v}) in cx.simplices


class TestRealizationMembership:
    def setup_method(self):
        self.cx = nerve_from_cover(line_cover())

    def test_vertex_dirac(self):
        assert self.cx.realization_membership(dirac("1"))

    def test_absent_edge(self):
        p = SparseVec({"0": F(1, 2), "2": F(1, 2)})
        assert not self.cx.realization_membership(p)

    def test_present_edge(self):
        p = SparseVec({"0": F(3, 10), "1": F(7, 10)})
        assert self.cx.realization_membership(p)

    def test_foreign_vertex(self):
        with pytest.raises(InputError):
            self.cx.realization_membership(dirac("zz"))


class TestCanonicalMapCheck:
    def test_bump_pou_is_canonical(self):
        m = MetricSampleSpace([(F(0),), (F(1, 2),), (F(1),)])
        balls = {"U0": Ball((F(0),), F(7, 10)), "U1": Ball((F(1),), F(7, 10))}
        pou = pou_from_metric_cover(m, balls)
        rep = canonical_map_check(pou, (m, balls))
        assert rep.canonical

    def test_constant_dirac_fails_star_condition(self):
        m = MetricSampleSpace([(F(0),), (F(1),)])
        balls = {"U0": Ball((F(0),), F(1, 2)), "U1": Ball((F(1),), F(1, 2))}
        rows = {x: dirac("U0") for x in m.samples}
        pou = validate_pou(m, set(balls), rows)
        rep = canonical_map_check(pou, (m, balls))
        assert not rep.canonical
        assert rep.star_violations

    def test_one_set_cover_constant_dirac(self):
        m = MetricSampleSpace([(F(0),), (F(1),)])
        balls = {"U": Ball((F(1, 2),), F(2))}
        pou = pou_from_metric_cover(m, balls)
        rep = canonical_map_check(pou, (m, balls))
        assert rep.canonical

    def test_canonical_implies_index_subordinated(self):
        m, balls = line_cover()
        pou = pou_from_metric_cover(m, balls)
        assert canonical_map_check(pou, (m, balls)).canonical
        domain = FiniteSpace.discrete(m.samples)
        cover = indexed_cover(
            domain, set(balls),
            {x: {a for a, b in balls.items() if m.ball_membership(b, x)}
             for x in m.samples},
        )
        assert subordination_check(pou, cover)["index_subordinated"]


class TestCoverSimplexMapping:
    def setup_method(self):
        s = FiniteSpace.sierpinski()
        self.cover = indexed_cover(s, {"U0", "U1"}, {"a": {"U1"}, "b": {"U0", "U1"}})
        # fibers: U0 -> {b} (open), U1 -> {a, b} (open)
        self.phi = cover_simplex_mapping(self.cover)

    def test_dirac_fiber_is_the_member(self):
        assert self.phi.fiber(dirac("U0")) == {"b"}

    def test_edge_fiber_is_intersection(self):
        p = SparseVec({"U0": F(1, 2), "U1": F(1, 2)})
        assert self.phi.fiber(p) == {"b"}
        assert self.phi.fiber_is_open(p)

    def test_membership_fails_outside(self):
        p = SparseVec({"U0": F(1, 2), "U1": F(1, 2)})
        assert not self.phi.membership(p, "a")
        assert self.phi.membership(p, "b")

    def test_membership_iff_in_fiber(self):
        rng = make_rng(19)
        for _ in range(50):
            cover = random_open_cover(rng)
            phi = cover_simplex_mapping(cover)
            idx = sorted(cover.codomain.points)
            k = rng.randint(1, len(idx))
            picked = rng.sample(idx, k)
            ws = [rng.randint(1, 9) for _ in picked]
            p = SparseVec({a: F(w, sum(ws)) for a, w in zip(picked, ws)})
            fiber = phi.fiber(p)
            assert phi.fiber_is_open(p)
            for x in cover.domain.points:
                assert phi.membership(p, x) == (x in fiber)

    def test_rejects_non_open_cover(self):
        s = FiniteSpace.sierpinski()
        bad = indexed_cover(s, {"U"}, {"a": {"U"}, "b": {"U"}})
        # fiber of U is {a, b}: open, fine
        cover_simplex_mapping(bad)
        worse = indexed_cover(s, {"U", "V"}, {"a": {"U"}, "b": {"V"}})
        with pytest.raises(InputError):
            cover_simplex_mapping(worse)  # fiber of U is {a}, not open
