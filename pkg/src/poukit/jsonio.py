"""JSON encodings for every value the command line reads or writes.

Scalars travel as strings: either decimals ("0.25") or rationals ("1/4").
In exact mode they parse to Fractions, in float mode to floats.  Ground
points of a metric sample space are addressed by their sample position
("0", "1", ...) wherever JSON needs a string key.
"""

from .errors import InputError
from .pou import PartitionOfUnity, validate_pou
from .scalars import EXACT, format_scalar, parse_scalar
from .selection import ConvexTarget
from .setmaps import SetValuedMap
from .spaces import Ball, FiniteSpace, MetricSampleSpace
from .sparse import ExtendedUnitVec, SparseVec


def load_sparse_vec(obj, mode=EXACT):
    entries = {k: parse_scalar(v, mode) for k, v in obj.get("entries", {}).items()}
    if "tail_mass" in obj or "tail_sup" in obj:
        return ExtendedUnitVec(
            entries,
            parse_scalar(obj.get("tail_mass", 0), mode),
            parse_scalar(obj.get("tail_sup", 0), mode),
            mode=mode,
        )
    return SparseVec(entries)


def dump_sparse_vec(v):
    if isinstance(v, ExtendedUnitVec):
        return {
            "entries": {str(k): format_scalar(val) for k, val in sorted(v.explicit.entries.items())},
            "tail_mass": format_scalar(v.tail_mass),
            "tail_sup": format_scalar(v.tail_sup),
        }
    return {"entries": {str(k): format_scalar(val) for k, val in sorted(v.entries.items())}}


def load_finite_space(obj):
    points = obj["points"]
    min_open = {p: set(v) for p, v in obj["min_open"].items()}
    return FiniteSpace(points, min_open)


def dump_finite_space(space):
    return {
        "points": sorted(space.points, key=repr),
        "min_open": {
            str(p): sorted(space.min_open[p], key=repr)
            for p in sorted(space.points, key=repr)
        },
    }


def load_metric_space(obj, mode=EXACT):
    samples = [tuple(parse_scalar(c, mode) for c in row) for row in obj["samples"]]
    return MetricSampleSpace(samples, dim=obj.get("dim"))


def dump_metric_space(space):
    return {
        "dim": space.dim,
        "samples": [[format_scalar(c) for c in p] for p in space.samples],
    }


def load_ball(obj, mode=EXACT):
    return Ball(
        [parse_scalar(c, mode) for c in obj["center"]],
        parse_scalar(obj["radius"], mode),
    )


def dump_ball(ball):
    return {
        "center": [format_scalar(c) for c in ball.center],
        "radius": format_scalar(ball.radius),
    }


def load_ground(obj, mode=EXACT):
    if "min_open" in obj:
        return load_finite_space(obj)
    return load_metric_space(obj, mode)


def load_set_valued_map(obj, mode=EXACT):
    domain = load_finite_space(obj["domain"])
    codomain = obj["codomain"]
    if codomain == "discrete" or isinstance(codomain, list):
        indices = set(codomain) if isinstance(codomain, list) else set()
        for vals in obj["values"].values():
            indices |= set(vals)
        codomain = FiniteSpace.discrete(indices)
    else:
        codomain = load_finite_space(codomain)
    values = {p: set(v) for p, v in obj["values"].items()}
    return SetValuedMap(domain, codomain, values)


def dump_set_valued_map(phi):
    return {
        "domain": dump_finite_space(phi.domain),
        "codomain": (
            sorted(phi.codomain.points, key=repr)
            if phi.is_discrete_codomain()
            else dump_finite_space(phi.codomain)
        ),
        "values": {
            str(p): sorted(phi.values[p], key=repr)
            for p in sorted(phi.domain.points, key=repr)
        },
    }


def _ground_key(ground, x):
    if isinstance(ground, MetricSampleSpace):
        return str(ground.samples.index(x))
    return str(x)


def _ground_point(ground, key):
    if isinstance(ground, MetricSampleSpace):
        return ground.samples[int(key)]
    if key not in ground.points:
        raise InputError(f"unknown ground point {key!r}")
    return key


def load_pou(obj, mode=EXACT):
    ground = load_ground(obj["ground"], mode)
    indices = set(obj["indices"])
    rows = {
        _ground_point(ground, k): load_sparse_vec({"entries": row}, mode)
        for k, row in obj["rows"].items()
    }
    return validate_pou(ground, indices, rows, mode=mode)


def dump_pou(pou):
    ground = (
        dump_metric_space(pou.ground)
        if isinstance(pou.ground, MetricSampleSpace)
        else dump_finite_space(pou.ground)
    )
    return {
        "ground": ground,
        "indices": sorted(pou.index_set, key=repr),
        "rows": {
            _ground_key(pou.ground, x): {
                str(a): format_scalar(pou.rows[x][a]) for a in pou.rows[x]
            }
            for x in pou.ground_points()
        },
    }


def dump_complex(cx):
    return {
        "vertices": sorted(cx.vertices, key=repr),
        "simplices": sorted(
            (sorted(s, key=repr) for s in cx.simplices), key=lambda s: (len(s), s)
        ),
        "witnessed": cx.witnessed,
    }


def load_convex_target(obj, mode=EXACT):
    sets = {}
    for x, spec in obj["sets"].items():
        spec = dict(spec)
        for field in ("p", "a", "b", "lo", "hi"):
            if field in spec:
                spec[field] = tuple(parse_scalar(c, mode) for c in spec[field])
        if "vertices" in spec:
            spec["vertices"] = [
                tuple(parse_scalar(c, mode) for c in v) for v in spec["vertices"]
            ]
        sets[x] = spec
    return ConvexTarget(obj["ambient_dim"], sets)


def load_anchors(obj, mode=EXACT):
    return [tuple(parse_scalar(c, mode) for c in a) for a in obj]
