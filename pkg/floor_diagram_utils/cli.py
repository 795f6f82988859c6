############################################################
# cli.py contains the command-line interface: listing the
# templates, computing Severi degrees and node polynomials,
# and verifying them against the reference tables
############################################################

### IMPORTING PACKAGES ###

# Default packages
import sys
import json
import logging
import argparse
import warnings
from pathlib import Path
# Pydantic errors raised by the argument models
from pydantic import ValidationError
# The information contained in our helper scripts (validation)
from . import config
from .errors import DomainError, VerificationError, ResourceRefusal, ResourceRefusalWarning
from .validation import commands as cmv
from .defaults.commands import _EXIT_CODES
from .core.sequences import TangencySequence
from .core.floor_diagrams import severi_degree_enum
from .core.polynomials import MultiPoly
from .core.templates import enumerate_templates
from .core.extended_templates import enumerate_extended_templates
from .core.assembly import node_polynomial, leading_terms, evaluate_relative_severi
from .utils.cache import DiskCache
from .utils.verify import run_checks

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["build_parser", "main"]

logger = logging.getLogger(__name__)

### PARSER ###

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="floor-diagram-utils",
                                     description="Relative Severi degrees and node polynomials from floor diagrams")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes for enumeration and assembly")
    parser.add_argument("--cache-dir", default=None, help="directory of the template and node-polynomial cache")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress (repeat for more detail)")
    commands = parser.add_subparsers(dest="command", required=True)

    templates = commands.add_parser("templates", help="list templates or extended templates of one cogenus")
    templates.add_argument("--cogenus", type=int, required=True)
    templates.add_argument("--kind", choices=["plain", "extended"], default=None)
    templates.add_argument("--force", action="store_true", default=None, help="list beyond the usual cogenus ceiling")

    severi = commands.add_parser("severi", help="relative Severi degree for tangency profiles alpha, beta")
    severi.add_argument("--delta", type=int, required=True)
    severi.add_argument("--alpha", default=None, help="comma-separated, such as '2,1'; empty for zero")
    severi.add_argument("--beta", default=None, help="comma-separated, such as '0,1'; empty for zero")
    severi.add_argument("--method", choices=["enumerate", "polynomial", "both"], default=None)

    nodepoly = commands.add_parser("nodepoly", help="the relative node polynomial N_delta")
    nodepoly.add_argument("--delta", type=int, required=True)
    nodepoly.add_argument("--out", default=None, help="write JSON here and text next to it (.txt)")

    leading = commands.add_parser("leading", help="the terms of N_delta of degree >= 3 delta - depth")
    leading.add_argument("--delta", type=int, required=True)
    leading.add_argument("--depth", type=int, default=None)

    verify = commands.add_parser("verify", help="check N_delta against the reference data and the enumeration")
    verify.add_argument("--delta", type=int, required=True)
    verify.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    return parser

### COMMANDS ###

def _emit(data, as_json: bool, text: str):
    print(json.dumps(data, indent=2) if as_json else text)

def _table(headers: list, rows: list) -> str:
    widths = [max([len(str(h))] + [len(str(row[i])) for row in rows]) for i, h in enumerate(headers)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(headers, widths))]
    lines += ["  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)) for row in rows]
    return "\n".join(line.rstrip() for line in lines)

def _template_rows(kind: str, cogenus: int, cache) -> list:
    # JSON rows of every (extended) template of one cogenus, read from the cache when present
    key = "templates" if kind == "plain" else "ext-templates"
    if cache is not None:
        stored = cache.get(key, cogenus)
        if stored is not None:
            return stored["rows"]
    if kind == "plain":
        found = enumerate_templates(cogenus)
    else:
        found = enumerate_extended_templates(cogenus)
    rows = [t.to_json(with_invariants=True) for t in found]
    if cache is not None:
        cache.put(key, cogenus, {"rows": rows})
    return rows

def _edge_text(edges: list) -> str:
    return " ".join(f"({i},{j},{w})" for i, j, w in edges)

def cmd_templates(args, cache=None) -> int:
    options = cmv.TemplatesCommandModel(cogenus=args.cogenus, kind=args.kind, force=args.force)
    if options.cogenus > options.limit and not options.force:
        message = f"{options.kind} templates are listed up to cogenus {options.limit}, got {options.cogenus} (use --force)"
        warnings.warn(message, ResourceRefusalWarning)
        raise ResourceRefusal(message)
    found = _template_rows(options.kind, options.cogenus, cache)
    if options.kind == "plain":
        headers = ["l", "mu", "kappa", "k_min", "s", "edges", "P(k)"]
        rows = [[r["l"], r["invariants"]["multiplicity"], ",".join(map(str, r["invariants"]["kappa"])),
                 r["invariants"]["k_min"], r["invariants"]["s"], _edge_text(r["edges"]),
                 MultiPoly.from_json(r["P"]).to_string()] for r in found]
    else:
        headers = ["l", "mu", "A", "B", "d_min", "s", "edges", "q"]
        rows = [[r["lambda"]["l"], r["invariants"]["multiplicity"], r["A"], r["B"], r["invariants"]["d_min"],
                 r["invariants"]["s"], _edge_text(r["lambda"]["edges"]) or "-",
                 MultiPoly.from_json(r["q"]).to_string()] for r in found]
    data = {"kind": options.kind, "cogenus": options.cogenus, "rows": found}
    _emit(data, args.json, _table(headers, rows))
    return _EXIT_CODES["success"]

def cmd_severi(args, cache) -> int:
    options = cmv.SeveriCommandModel(delta=args.delta, alpha=args.alpha, beta=args.beta, method=args.method)
    alpha, beta = TangencySequence(options.alpha), TangencySequence(options.beta)
    values = {}
    if options.method in ("enumerate", "both"):
        values["enumerate"] = severi_degree_enum(options.delta, alpha, beta, jobs=args.jobs)
    if options.method in ("polynomial", "both"):
        values["polynomial"] = evaluate_relative_severi(options.delta, alpha, beta, jobs=args.jobs, cache=cache)
    data = {"delta": options.delta, "alpha": alpha.to_json(), "beta": beta.to_json()} | values
    if options.method == "both":
        data["verdict"] = "MATCH" if values["enumerate"] == values["polynomial"] else "MISMATCH"
        text = f"enumerate: {values['enumerate']}\npolynomial: {values['polynomial']}\n{data['verdict']}"
    else:
        text = str(values[options.method])
    _emit(data, args.json, text)
    if data.get("verdict") == "MISMATCH":
        return _EXIT_CODES["verification"]
    return _EXIT_CODES["success"]

def cmd_nodepoly(args, cache) -> int:
    options = cmv.NodepolyCommandModel(delta=args.delta, out=args.out)
    result = node_polynomial(options.delta, jobs=args.jobs, cache=cache)
    if options.out is not None:
        out = Path(options.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(result.to_json(), indent=2) + "\n")
        out.with_suffix(".txt").write_text(result.to_text() + "\n")
        logger.info("wrote %s and %s", out, out.with_suffix(".txt"))
    _emit(result.to_json(), args.json, result.to_text())
    return _EXIT_CODES["success"]

def cmd_leading(args) -> int:
    options = cmv.LeadingCommandModel(delta=args.delta, depth=args.depth)
    poly = leading_terms(options.delta, options.depth, jobs=args.jobs)
    data = poly.to_json() | {"delta": options.delta, "min_degree": 3 * options.delta - options.depth}
    _emit(data, args.json, poly.to_text())
    return _EXIT_CODES["success"]

def cmd_verify(args, cache) -> int:
    options = cmv.VerifyCommandModel(delta=args.delta, max_degree=args.max_degree)
    results = run_checks(options.delta, options.max_degree, jobs=args.jobs, cache=cache)
    data = {"delta": options.delta, "max_degree": options.max_degree,
            "checks": [result._asdict() for result in results]}
    _emit(data, args.json, "\n".join(str(result) for result in results))
    if any(result.status == "FAIL" for result in results):
        return _EXIT_CODES["verification"]
    return _EXIT_CODES["success"]

### ENTRY POINT ###

def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
                        format="%(levelname)s %(name)s: %(message)s")
    if args.jobs is not None and args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return _EXIT_CODES["domain"]
    if args.jobs is None:
        args.jobs = config.DEFAULT_JOBS
    cache = None if args.no_cache else DiskCache(args.cache_dir)
    try:
        if args.command == "templates":
            return cmd_templates(args, cache)
        if args.command == "severi":
            return cmd_severi(args, cache)
        if args.command == "nodepoly":
            return cmd_nodepoly(args, cache)
        if args.command == "leading":
            return cmd_leading(args)
        return cmd_verify(args, cache)
    except (DomainError, ValidationError) as error:
        print(f"error: {error}", file=sys.stderr)
        return _EXIT_CODES["domain"]
    except VerificationError as error:
        print(f"verification failed: {error}", file=sys.stderr)
        return _EXIT_CODES["verification"]
    except ResourceRefusal as error:
        print(f"refused: {error}", file=sys.stderr)
        return _EXIT_CODES["resource"]

if __name__ == "__main__":
    sys.exit(main())
