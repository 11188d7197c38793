"""A walk through the locally-finite transform on simplex points.

The transform clips every coordinate at half the sup-norm and renormalizes.
Coordinates at or below the threshold vanish, so the output carrier is small
(at most 2/sup entries) and stable under small l1 perturbations.
"""

from fractions import Fraction as F

from poukit import mather_eta, mather_lambda, mather_support_bound
from poukit.sparse import SparseVec

y = SparseVec({"a": F(3, 5), "b": F(3, 10), "c": F(1, 10)})
print("input      :", dict(y.entries))
print("clipped    :", dict(mather_lambda(y).entries))
print("normalized :", dict(mather_eta(y).entries))

bound, radius = mather_support_bound(y)
print(f"\ncarrier stays inside {sorted(bound)} for any l1 move below {radius}")

# a tie at exactly half the sup-norm does not survive
tie = SparseVec({"a": F(1, 2), "b": F(1, 4), "c": F(1, 4)})
print("\ntie input  :", dict(tie.entries))
print("tie output :", dict(mather_eta(tie).entries), "(b, c sit at sup/2 and vanish)")
