"""Three small set-valued maps that separate the semicontinuity notions.

On finite spaces the implications run
    open graph  =>  totally l.s.c.  =>  l.s.c.
and totally l.s.c. coincides with being lower locally constant. The maps
below witness that both implications are strict.
"""

from poukit import FiniteSpace, SetValuedMap, classify


def show(name, rep):
    print(f"{name:24s} lsc={rep.lsc!s:5s} totally_lsc={rep.totally_lsc!s:5s} "
          f"open_graph={rep.open_graph!s:5s} llc={rep.lower_locally_constant}")


s = FiniteSpace.sierpinski()

# identity on the Sierpinski space: l.s.c. but not totally l.s.c.
ident = SetValuedMap(s, s, {p: {p} for p in s.points})
show("sierpinski identity", classify(ident))

# diagonal from a discrete domain: lower locally constant, graph not open
d = FiniteSpace.discrete({"a", "b"})
delta = SetValuedMap(d, s, {p: {p} for p in d.points})
show("discrete diagonal", classify(delta))

# constant map: everything holds
const = SetValuedMap(s, s, {p: set(s.points) for p in s.points})
show("constant", classify(const))
