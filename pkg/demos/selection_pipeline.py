"""End-to-end approximate selection for a convex-valued target.

Anchors on a grid induce bump weights, the locally-finite transform prunes
them to a small active set, and the barycentric combination of active anchors
lands within epsilon of the target set -- with a per-point certificate.
"""

from poukit import ConvexTarget, epsilon_selection

target = ConvexTarget(2, {"x": {"kind": "segment", "a": (0, 0), "b": (1, 0)}})
anchors = [(i / 4, j / 4) for i in range(5) for j in (-1, 0, 1)]

values, certs = epsilon_selection(target, 0.3, anchors)

print("target      : segment from (0,0) to (1,0)")
print("anchor grid :", len(anchors), "points, spacing 1/4")
print("selected    :", values["x"])
cert = certs["x"]
print("certificate : distance <", cert.distance_bound,
      "via anchors", list(cert.active_anchors))
