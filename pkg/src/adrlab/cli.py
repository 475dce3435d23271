"""Command-line front end.

Subcommands: ``adr`` (build the radical-layer endomorphism algebra and
emit its presentation), ``qh-check``, ``usq-check``, ``tilting``,
``ringel-dual``, ``gldim``, ``verify`` (the full theorem suite), and
``gen brauer|linear -n N`` for the built-in input families.

Exit codes: 0 all requested verdicts pass; 1 a verdict fails; 2 the
input does not parse; 3 internal error.  Reports are canonical JSON on
stdout; ``--dot`` switches to DOT output for quiver-producing commands;
``--report-dir`` additionally writes report.json, summary.tsv and a
rendered quiver.png.
"""

import argparse
import os
import sys

from .adr import ADRData, corner_algebra
from .fields import Field
from .generators import brauer_line_presentation, linear_quiver_presentation
from .patterns import match_adr_pattern
from .presentation import AlgebraBasis, AlgebraPresentation, PresentationError
from .qh import (LabelPoset, QHContext, check_quasihereditary, check_usq,
                 global_dimension, ringel_dual, usq_relabel,
                 verify_structure_theorems)
from .report import canonical_json, emit_dot, write_report_dir

EXIT_OK, EXIT_VERDICT, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


def _parse_field(text):
    if text in (None, "rational", "q", "Q"):
        return Field(0)
    if text.startswith("p:"):
        return Field(int(text[2:]))
    raise argparse.ArgumentTypeError(f"unrecognized field {text!r}; use "
                                     "'rational' or 'p:<prime>'")


def _max_path_len():
    val = os.environ.get("ADRLAB_MAX_PATH_LEN")
    return int(val) if val else None


def _load_algebra(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        pres = AlgebraPresentation.from_json(text, max_path_length=_max_path_len())
        diags = pres.validate()
        if diags:
            raise PresentationError("; ".join(diags))
        return AlgebraBasis(pres)
    except (OSError, ValueError, KeyError, PresentationError) as exc:
        raise _ParseFailure(str(exc))


class _ParseFailure(Exception):
    pass


def _context(args, algebra):
    """QH context per --order: 'adr' builds R with the layer order,
    'natural' takes the input algebra with its vertex order."""
    if args.order == "natural":
        ctx = QHContext(algebra, LabelPoset.natural(algebra.quiver.n_vertices,
                                                    algebra.quiver.vertices))
        return ctx, None
    adr = ADRData(algebra)
    poset = LabelPoset.adr(adr.labels, adr.presentation.quiver.vertices)
    ctx = QHContext(adr.basis, poset, adaptedness="proved (ADR)", adr_data=adr)
    return ctx, adr


def _factor_list(ctx, rep):
    return [[ctx.poset.display[lab], mult] for lab, mult in rep.factors]


def _cmd_adr(args):
    algebra = _load_algebra(args.input)
    adr = ADRData(algebra)
    quiver = adr.presentation.quiver
    report = {
        "dim": adr.dim,
        "base_dim": algebra.dim,
        "vertices": quiver.n_vertices,
        "arrows": quiver.n_arrows,
        "labels": [list(map(str, (algebra.quiver.vertices[i], j)))
                   for i, j in adr.labels],
        "presentation": adr.presentation.to_json_dict(),
        "corner": corner_algebra(adr),
    }
    return report, True, quiver


def _cmd_qh_check(args):
    algebra = _load_algebra(args.input)
    ctx, _ = _context(args, algebra)
    rep = check_quasihereditary(ctx, samples=args.samples, seed=args.seed)
    report = {
        "verdict": rep["verdict"],
        "adaptedness": rep["adaptedness"],
        "multiplicity_one": {ctx.poset.display[v]: ok
                             for v, ok in rep["multiplicity_one"].items()},
        "projectives": {ctx.poset.display[v]: {"verdict": r.verdict,
                                               "factors": _factor_list(ctx, r)}
                        for v, r in rep["projectives"].items()},
        "injectives": {ctx.poset.display[v]: {"verdict": r.verdict,
                                              "factors": _factor_list(ctx, r)}
                       for v, r in rep["injectives"].items()},
    }
    if "adaptedness_stable" in rep:
        report["adaptedness_stable"] = rep["adaptedness_stable"]
    return report, rep["verdict"], ctx.basis.quiver


def _cmd_usq_check(args):
    algebra = _load_algebra(args.input)
    ctx, _ = _context(args, algebra)
    qh = check_quasihereditary(ctx, samples=args.samples, seed=args.seed)
    usq = check_usq(ctx)
    report = {
        "qh_verdict": qh["verdict"],
        "verdict": qh["verdict"] and usq["verdict"],
        "A1": {ctx.poset.display[v]: (ctx.poset.display[m] if isinstance(m, int)
                                      else m)
               for v, m in usq["A1"].items()},
        "A2": {ctx.poset.display[v]: ok for v, ok in usq["A2"].items()},
    }
    return report, report["verdict"], ctx.basis.quiver


def _cmd_tilting(args):
    algebra = _load_algebra(args.input)
    ctx, _ = _context(args, algebra)
    tiltings = {}
    for v in range(ctx.n):
        T = ctx.tilting(v)
        tiltings[ctx.poset.display[v]] = {
            "dims": T.dims,
            "dim": T.total_dim,
        }
    relabel = usq_relabel(ctx)
    report = {
        "verdict": True,
        "tiltings": tiltings,
        "chains": [[ctx.poset.display[v] for v in chain]
                   for chain in relabel.chains],
    }
    return report, True, ctx.basis.quiver


def _cmd_ringel_dual(args):
    algebra = _load_algebra(args.input)
    ctx, _ = _context(args, algebra)
    rd = ringel_dual(ctx)
    quiver = rd.ctx.basis.quiver
    report = {
        "verdict": True,
        "dim": rd.ctx.basis.dim,
        "vertices": quiver.n_vertices,
        "arrows": quiver.n_arrows,
        "presentation": rd.ctx.basis.presentation.to_json_dict(),
    }
    return report, True, quiver


def _cmd_gldim(args):
    algebra = _load_algebra(args.input)
    ctx, _ = _context(args, algebra)
    g = global_dimension(ctx)
    return {"global_dimension": g, "verdict": True}, True, ctx.basis.quiver


def _cmd_verify(args):
    algebra = _load_algebra(args.input)
    ctx, _ = _context(args, algebra)
    qh = check_quasihereditary(ctx, samples=args.samples, seed=args.seed)
    usq = check_usq(ctx)
    items = verify_structure_theorems(ctx, samples=args.samples, seed=args.seed)
    report = {
        "qh_verdict": qh["verdict"],
        "usq_verdict": usq["verdict"],
        "items": {k: v for k, v in items.items()
                  if isinstance(v, bool) and k != "verdict"},
        "verdict": qh["verdict"] and usq["verdict"] and items["verdict"],
    }
    return report, report["verdict"], ctx.basis.quiver


def _cmd_pattern(args):
    algebra = _load_algebra(args.input)
    adr = ADRData(algebra)
    rep = match_adr_pattern(adr)
    rep.pop("arrow_names", None)
    return rep, rep["match"], adr.presentation.quiver


def _cmd_gen(args):
    field = args.field
    if args.family == "brauer":
        pres = brauer_line_presentation(args.n, field)
    else:
        pres = linear_quiver_presentation(args.n, field)
    return pres.to_json_dict(), True, pres.quiver


_COMMANDS = {
    "adr": _cmd_adr,
    "qh-check": _cmd_qh_check,
    "usq-check": _cmd_usq_check,
    "tilting": _cmd_tilting,
    "ringel-dual": _cmd_ringel_dual,
    "gldim": _cmd_gldim,
    "verify": _cmd_verify,
    "pattern": _cmd_pattern,
    "gen": _cmd_gen,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="adrlab",
        description="Radical-layer endomorphism algebras and their "
                    "quasihereditary structure, verified exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        p.add_argument("input", nargs="?", default="-",
                       help="algebra file in JSON form ('-' for stdin)")
        p.add_argument("--dot", action="store_true",
                       help="emit the relevant quiver in DOT format")
        p.add_argument("--report-dir", default=None,
                       help="directory for report.json, summary.tsv, quiver.png")
        p.add_argument("--samples", type=int, default=5,
                       help="sample count for randomized spot checks")
        p.add_argument("--seed", type=int, default=20260823)
        if order:
            p.add_argument("--order", choices=["adr", "natural"], default="adr",
                           help="'adr': build the layer algebra and its order; "
                                "'natural': the input algebra with vertex order")

    for name in ("adr", "pattern"):
        common(sub.add_parser(name), order=False)
    for name in ("qh-check", "usq-check", "tilting", "ringel-dual", "gldim",
                 "verify"):
        common(sub.add_parser(name))
    gen = sub.add_parser("gen", help="emit a built-in algebra file")
    gen.add_argument("family", choices=["brauer", "linear"])
    gen.add_argument("-n", type=int, required=True)
    gen.add_argument("--field", type=_parse_field, default=Field(0),
                     help="'rational' (default) or 'p:<prime>'")
    gen.add_argument("--dot", action="store_true")
    gen.add_argument("--report-dir", default=None)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, verdict, quiver = _COMMANDS[args.command](args)
    except _ParseFailure as exc:
        sys.stderr.write(f"error: cannot parse input: {exc}\n")
        return EXIT_PARSE
    except Exception as exc:  # noqa: BLE001 - the contract maps these to 3
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    if args.dot and quiver is not None:
        sys.stdout.write(emit_dot(quiver))
    elif report is not None:
        sys.stdout.write(canonical_json(report))
    if args.report_dir and report is not None:
        write_report_dir(args.report_dir, report, quiver,
                         title=args.command)
    return EXIT_OK if verdict else EXIT_VERDICT


if __name__ == "__main__":
    sys.exit(main())
