"""Command-line front end: load JSON artifacts, run constructions and
verifications, emit machine-readable reports with CI-friendly exit codes.

Exit codes: 0 all checks passed (or pure construction succeeded), 1 at least
one check failed, 2 malformed input.  Reports are deterministic for a fixed
(input, seed, mode) triple: they embed the config and content digests of the
inputs, and carry no timestamps.
"""

import argparse
import hashlib
import json
import sys

from . import generators, jsonio, scalars
from .errors import InputError, PoukitError
from .nerve import canonical_map_check, cover_simplex_mapping, nerve_from_cover
from .pou import mather_compose, pou_from_metric_cover, subordination_check
from .selection import conv_fiber_open, conv_membership, epsilon_selection
from .setmaps import classify, closure_cover, graph_closure
from .sparse import mather_eta, mather_lambda, mather_support_bound, norms
from .spaces import FiniteSpace, MetricSampleSpace

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2


def _digest(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


class Report:
    def __init__(self, command, config, input_paths):
        self.command = command
        self.config = config
        self.inputs = {p: _digest(p) for p in input_paths}
        self.checks = []
        self.payload = {}

    def check(self, name, ok, witness=None):
        self.checks.append(
            {
                "name": name,
                "status": "pass" if ok else "fail",
                "witness": witness,
                "timing": None,
            }
        )

    def skipped(self, name, reason):
        self.checks.append(
            {"name": name, "status": "skipped", "witness": reason, "timing": None}
        )

    @property
    def failed(self):
        return any(c["status"] == "fail" for c in self.checks)

    def to_json(self):
        doc = {
            "command": self.command,
            "config": self.config,
            "inputs": self.inputs,
            "checks": self.checks,
            "overall": "fail" if self.failed else "pass",
            "payload": self.payload,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(report, out):
    text = report.to_json()
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


def cmd_space_validate(args, report, mode):
    obj = _load_json(args.input)
    space = jsonio.load_finite_space(obj)
    report.check("space-valid", True)
    report.payload["space"] = jsonio.dump_finite_space(space)
    return report


def cmd_map_classify(args, report, mode):
    phi = jsonio.load_set_valued_map(_load_json(args.input), mode)
    rep = classify(phi)
    report.payload["classification"] = rep.to_dict()
    # classification itself never fails; only consistency of the hierarchy does
    report.check(
        "hierarchy-consistent",
        (not rep.open_graph or rep.totally_lsc) and (not rep.totally_lsc or rep.lsc),
    )
    return report


def cmd_pou_build(args, report, mode):
    obj = _load_json(args.input)
    space = jsonio.load_metric_space(obj["space"], mode)
    balls = {a: jsonio.load_ball(b, mode) for a, b in obj["balls"].items()}
    pou = pou_from_metric_cover(space, balls, mode=mode)
    report.check("pou-built", True)
    report.payload["pou"] = jsonio.dump_pou(pou)
    return report


def cmd_pou_verify(args, report, mode):
    pou = jsonio.load_pou(_load_json(args.input), mode)
    report.check("pou-valid", True)
    report.payload["indices"] = sorted(pou.index_set, key=repr)
    return report


def cmd_mather(args, report, mode):
    y = jsonio.load_sparse_vec(_load_json(args.input), mode)
    lam = mather_lambda(y, mode)
    eta = mather_eta(y, mode)
    bound, radius = mather_support_bound(y, mode)
    l1, _ = norms(eta)
    report.check("eta-on-simplex", scalars.is_one(l1, mode))
    report.payload["lambda"] = jsonio.dump_sparse_vec(lam)
    report.payload["eta"] = jsonio.dump_sparse_vec(eta)
    report.payload["support_bound"] = {
        "indices": sorted(bound, key=repr),
        "radius": scalars.format_scalar(radius),
    }
    return report


def _load_cover_input(obj, mode):
    if "balls" in obj:
        space = jsonio.load_metric_space(obj["space"], mode)
        balls = {a: jsonio.load_ball(b, mode) for a, b in obj["balls"].items()}
        return (space, balls)
    return jsonio.load_set_valued_map(obj, mode)


def cmd_nerve_build(args, report, mode):
    cover = _load_cover_input(_load_json(args.input), mode)
    cx = nerve_from_cover(cover, max_dimension=args.max_dim)
    report.check("nerve-built", True)
    report.payload["complex"] = jsonio.dump_complex(cx)
    return report


def cmd_canonical_check(args, report, mode):
    obj = _load_json(args.input)
    cover = _load_cover_input(obj["cover"], mode)
    if isinstance(cover, tuple):
        pou = pou_from_metric_cover(cover[0], cover[1], mode=mode)
    else:
        pou = jsonio.load_pou(obj["pou"], mode)
    cx_report = canonical_map_check(pou, cover, max_dimension=args.max_dim)
    report.check("canonical", cx_report.canonical, cx_report.to_dict())
    report.payload["nerve"] = jsonio.dump_complex(cx_report.nerve)
    return report


def cmd_select_eps(args, report, mode):
    obj = _load_json(args.input)
    target = jsonio.load_convex_target(obj["target"], mode)
    eps = scalars.parse_scalar(obj["epsilon"], "float")
    anchors = jsonio.load_anchors(obj["anchors"], "float")
    values, certs = epsilon_selection(target, float(eps), anchors)
    all_ok = all(c.distance_bound < eps for c in certs.values())
    report.check("epsilon-bound", all_ok)
    report.payload["selection"] = {
        str(x): {
            "value": [repr(float(c)) for c in v],
            "distance": repr(float(certs[x].distance_bound)),
            "epsilon": repr(float(eps)),
        }
        for x, v in values.items()
    }
    return report


def _verify_unit_vector(report, name, y):
    lam = mather_lambda(y)
    eta = mather_eta(y)
    if hasattr(y, "explicit"):
        car, sup = y.explicit.carrier(), y.sup_norm()
    else:
        car, sup = y.carrier(), y.sup_norm()
    ok = (
        eta.norm1() == 1
        and eta.carrier() <= car
        and len(lam.carrier()) * sup <= 2
    )
    report.check(f"{name}:mather-invariants", ok)


def cmd_verify_all(args, report, mode):
    bundle = _load_json(args.input)
    rng = generators.make_rng(args.seed)

    for i, obj in enumerate(bundle.get("spaces", [])):
        space = jsonio.load_finite_space(obj)
        ok = _kuratowski_ok(space, rng)
        report.check(f"space[{i}]:kuratowski", ok)

    for i, obj in enumerate(bundle.get("unit_vectors", [])):
        y = jsonio.load_sparse_vec(obj, mode)
        _verify_unit_vector(report, f"unit_vector[{i}]", y)

    for i, obj in enumerate(bundle.get("maps", [])):
        phi = jsonio.load_set_valued_map(obj, mode)
        rep = classify(phi)
        diagram = (not rep.open_graph or rep.totally_lsc) and (
            not rep.totally_lsc or rep.lsc
        )
        collapse = rep.lower_locally_constant == rep.totally_lsc
        report.check(f"map[{i}]:diagram", diagram)
        report.check(f"map[{i}]:llc-collapse", collapse)

    for i, obj in enumerate(bundle.get("covers", [])):
        omega = jsonio.load_set_valued_map(obj, mode)
        try:
            closed = closure_cover(omega)  # internally cross-checks both formulas
            agrees = graph_closure(omega) == closed
            report.check(f"cover[{i}]:closure-formulas", agrees)
        except AssertionError as exc:
            report.check(f"cover[{i}]:closure-formulas", False, str(exc))

    for i, obj in enumerate(bundle.get("metric_covers", [])):
        space = jsonio.load_metric_space(obj["space"], mode)
        balls = {a: jsonio.load_ball(b, mode) for a, b in obj["balls"].items()}
        pou = pou_from_metric_cover(space, balls, mode=mode)
        sub = subordination_check(
            pou,
            _ball_cover_as_map(space, balls),
        )
        report.check(f"metric_cover[{i}]:index-subordinated", sub["index_subordinated"])
        can = canonical_map_check(pou, (space, balls), max_dimension=args.max_dim)
        report.check(f"metric_cover[{i}]:canonical", can.canonical)
        gamma, _ = mather_compose(pou)
        shrink = all(
            gamma.carrier_at(x) <= pou.carrier_at(x) for x in pou.ground_points()
        )
        report.check(f"metric_cover[{i}]:carrier-shrinks", shrink)

    for i, obj in enumerate(bundle.get("targets", [])):
        target = jsonio.load_convex_target(obj["target"], "float")
        eps = float(scalars.parse_scalar(obj["epsilon"], "float"))
        anchors = jsonio.load_anchors(obj["anchors"], "float")
        try:
            _, certs = epsilon_selection(target, eps, anchors)
            report.check(
                f"target[{i}]:epsilon-bound",
                all(c.distance_bound < eps for c in certs.values()),
            )
        except PoukitError as exc:
            report.check(f"target[{i}]:epsilon-bound", False, str(exc))

    return report


def _ball_cover_as_map(space, balls):
    from .setmaps import indexed_cover

    values = {
        x: {a for a, b in balls.items() if space.ball_membership(b, x)}
        for x in space.samples
    }
    # indexed covers need a finite-space domain; use the discrete sample space
    domain = FiniteSpace.discrete(space.samples)
    return indexed_cover(domain, set(balls), values)


def _kuratowski_ok(space, rng):
    pts = sorted(space.points, key=repr)
    for _ in range(20):
        a = set(rng.sample(pts, rng.randint(0, len(pts))))
        b = set(rng.sample(pts, rng.randint(0, len(pts))))
        ca, cb = space.closure(a), space.closure(b)
        if not a <= ca or space.closure(ca) != ca:
            return False
        if space.closure(a | b) != ca | cb:
            return False
    return space.closure(set()) == frozenset()


COMMANDS = {
    "space-validate": cmd_space_validate,
    "map-classify": cmd_map_classify,
    "pou-build": cmd_pou_build,
    "pou-verify": cmd_pou_verify,
    "mather": cmd_mather,
    "nerve-build": cmd_nerve_build,
    "canonical-check": cmd_canonical_check,
    "select-eps": cmd_select_eps,
    "verify-all": cmd_verify_all,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="poukit",
        description="verify partitions of unity, covers, nerves, and selections",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", help="JSON input file")
    parser.add_argument("--mode", choices=["exact", "float"], default="exact")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tol-sum", type=float, default=scalars.TOL_SUM)
    parser.add_argument("--out", default=None, help="write the report here")
    parser.add_argument("--max-dim", type=int, default=8)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    scalars.TOL_SUM = args.tol_sum
    config = {
        "mode": args.mode,
        "seed": args.seed,
        "tol_sum": args.tol_sum,
        "max_dim": args.max_dim,
    }
    report = Report(args.command, config, [args.input])
    try:
        report = COMMANDS[args.command](args, report, args.mode)
    except InputError as exc:
        json.dump({"error": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return EXIT_PARSE_ERROR
    except PoukitError as exc:
        json.dump({"error": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return EXIT_CHECK_FAILED
    return _emit(report, args.out)


if __name__ == "__main__":
    sys.exit(main())
