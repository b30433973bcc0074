"""Command-line interface.

Exit codes: 0 success, 1 invalid input or arguments, 2 c1 not torsion
(report still printed, without d3), 3 unsupported contact coefficient.
Errors are printed to stdout as a JSON record ``{"error": {...}}``.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import circle_bundle as cb
from . import io as cio
from .errors import (DiagramFormatError, DomainError, PreconditionError,
                     ReductionIncomplete, UnsupportedCoefficient)
from .exact_arith import to_rat
from .invariants import compute_invariants
from .kirby import MarkedForm, reduce_to_blocks
from .surgery import (CONVENTIONS, DEFAULT_CONVENTION, LegendrianComponent,
                      build_four_manifold, reduce_component, reduce_diagram)

EXIT_OK, EXIT_INPUT, EXIT_NON_TORSION, EXIT_UNSUPPORTED = 0, 1, 2, 3

REPORT_COLUMNS = list(cb.ObstructionReport.FIELDS)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _error(kind: str, message: str, code: int, out) -> int:
    out.write(cio.dumps({"error": {"kind": kind, "message": message, "exit_code": code}}))
    return code


def _reduction_flags(p, with_variant=True):
    if with_variant:
        p.add_argument("--variant", type=int, choices=(0, 1), default=None,
                       help="stabilization sign (-1)**variant for surgery chains")
    p.add_argument("--convention", choices=CONVENTIONS, default=None,
                   help=f"push-off pattern of surgery chains (default {DEFAULT_CONVENTION})")


def _format_flags(p, csv_ok=False):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output")
    if csv_ok:
        g.add_argument("--csv", action="store_true", help="CSV output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="contactd3", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="chi, sigma, c1^2 and d3 of a diagram file")
    p.add_argument("file")
    _reduction_flags(p)
    _format_flags(p)

    p = sub.add_parser("expand", help="reduce one contact surgery to (+-1)-surgeries")
    p.add_argument("coeff", help='contact coefficient, e.g. "1/2" or "-7/3"')
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--rot", type=int, default=0)
    p.add_argument("--id", default="K")
    _reduction_flags(p)
    _format_flags(p)

    p = sub.add_parser("circle-bundle", help="obstruction report for xi_i on Y_{g,n}")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--structure", "--variant", dest="structure", type=int, choices=(0, 1),
                   default=0)
    p.add_argument("--diagram", action="store_true",
                   help="print the contact surgery diagram of xi_i instead of the report")
    _reduction_flags(p, with_variant=False)
    _format_flags(p)

    p = sub.add_parser("sweep", help="obstruction table for 1<=g<=G, 2g<=n<=N")
    p.add_argument("g_max", type=int)
    p.add_argument("n_max", type=int)
    _format_flags(p, csv_ok=True)

    p = sub.add_parser("kirby-reduce", help="reduce a diagram's linking form to blocks")
    p.add_argument("file", help="diagram document, or form document with keys Q and c1")
    p.add_argument("--blow-down", action="store_true", help="also blow down (+-1)-classes")
    _reduction_flags(p)
    _format_flags(p)
    return parser


def _cmd_invariants(args, out) -> int:
    d = cio.diagram_from_dict(cio.read_json(args.file))
    rd = reduce_diagram(d, args.variant, args.convention)
    fmd = build_four_manifold(rd)
    rep = compute_invariants(fmd)
    doc = rep.to_dict()
    doc.update(dim=fmd.dim, one_handles=fmd.one_handles, variant=rd.diagram.variant,
               convention=rd.diagram.convention)
    if not rep.torsion:
        doc["note"] = ("c1 is not torsion: homotopy classes over this Spin^c structure "
                       "are indexed by Z/d, and d3 is undefined")
    out.write(cio.dumps(doc))
    return EXIT_OK if rep.torsion else EXIT_NON_TORSION


def _cmd_expand(args, out) -> int:
    comp = LegendrianComponent(args.id, args.tb, args.rot, to_rat(args.coeff))
    red = reduce_component(comp, args.variant or 0, args.convention or DEFAULT_CONVENTION)
    rows = [{"id": c.id, "tb": c.tb, "rot": c.rot, "coeff": str(c.coeff),
             "smooth_framing": str(c.tb + c.coeff), "stabilizations": c.stabilizations}
            for c in red.components]
    if args.json:
        out.write(cio.dumps({
            "input": {"id": comp.id, "tb": comp.tb, "rot": comp.rot, "coeff": str(comp.coeff),
                      "smooth_framing": str(comp.tb + comp.coeff)},
            "components": rows,
            "linking": [list(r) for r in red.linking],
            "q_count": red.q_count,
        }))
        return EXIT_OK
    out.write(f"contact {comp.coeff} surgery on {comp.id} (tb={comp.tb}, rot={comp.rot}); "
              f"smooth coefficient {comp.tb + comp.coeff}\n")
    header = ("id", "tb", "rot", "coeff", "smooth_framing", "stabilizations")
    widths = [max(len(h), *(len(str(r[h])) for r in rows)) for h in header]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(str(r[h]).ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    out.write("linking:\n")
    for row in red.linking:
        out.write("  " + " ".join(f"{x:>3}" for x in row) + "\n")
    out.write(f"q_count: {red.q_count}\n")
    return EXIT_OK


def _cmd_circle_bundle(args, out) -> int:
    if args.diagram:
        d = cb.honda_diagram(args.g, args.n, args.structure,
                             args.convention or DEFAULT_CONVENTION)
        out.write(cio.dumps(cio.diagram_to_dict(d)))
        return EXIT_OK
    out.write(cio.dumps(cb.obstruction_report(args.g, args.n, args.structure).to_dict()))
    return EXIT_OK


def _cmd_sweep(args, out) -> int:
    rows = [r.to_dict() for r in cb.sweep(args.g_max, args.n_max)]
    if args.json:
        out.write(cio.dumps(rows))
    else:
        out.write(cio.rows_to_csv(rows, REPORT_COLUMNS))
    return EXIT_OK


def _cmd_kirby_reduce(args, out) -> int:
    doc = cio.read_json(args.file)
    if isinstance(doc, dict) and "Q" in doc:
        form = cio.form_from_dict(doc)
    else:
        d = cio.diagram_from_dict(doc)
        form = MarkedForm.from_four_manifold(
            build_four_manifold(reduce_diagram(d, args.variant, args.convention)))
    try:
        result, script, complete = *reduce_to_blocks(form, blow_down=args.blow_down), True
    except ReductionIncomplete as exc:
        result, script, complete = exc.form, exc.script, False
    out.write(cio.dumps({
        "input": cio.form_to_dict(form),
        "output": cio.form_to_dict(result),
        "script": script.dumps().splitlines(),
        "complete": complete,
    }))
    return EXIT_OK


_COMMANDS = {
    "invariants": _cmd_invariants,
    "expand": _cmd_expand,
    "circle-bundle": _cmd_circle_bundle,
    "sweep": _cmd_sweep,
    "kirby-reduce": _cmd_kirby_reduce,
}

_NEG_RATIONAL = re.compile(r"^-\d+/\d+$")


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse would read "-7/3" as an option; U+2212 is accepted by to_rat
    argv = ["−" + a[1:] if _NEG_RATIONAL.match(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return _error("usage", str(exc), EXIT_INPUT, out)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except UnsupportedCoefficient as exc:
        return _error("unsupported_coefficient", str(exc), EXIT_UNSUPPORTED, out)
    except (DiagramFormatError, DomainError, PreconditionError, ValueError, TypeError) as exc:
        return _error(type(exc).__name__, str(exc), EXIT_INPUT, out)


if __name__ == "__main__":
    sys.exit(main())
