"""Command-line interface: ``assocforms assoc|invariants|classify|verify|synthesize``."""
from __future__ import annotations

import argparse
import json
import sys

from .. import __version__
from ..cit import catalogue
from ..cit.classical import discriminant, invariants, j_invariant, stability_classify
from ..cit.synthesis import CONTRAVARIANT, COVARIANT, CovariantSpec, synthesize_space
from ..errors import AlgebraError, DegenerateForm, ParseError
from ..milnor import CLOSED_FORM_SPACES, associated_form, delta_phi_with_path, hilbert_function
from ..parse import form_from_document, parse_form
from ..scalars import format_rational, is_rational
from .report import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _scalar(x) -> str:
    return format_rational(x) if is_rational(x) else str(x)


def _read_form(args):
    text = args.form
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    if text.lstrip().startswith("{"):
        return form_from_document(text)
    if args.n is None:
        raise ParseError("--n is required for text input", None)
    return parse_form(text, args.n, args.d, args.domain)


def _emit(args, doc: dict, text_lines: list):
    if args.format == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


def cmd_assoc(args) -> int:
    f = _read_form(args)
    try:
        af = associated_form(f)
    except DegenerateForm:
        if (f.n, f.d) not in CLOSED_FORM_SPACES:
            raise
        value, path = delta_phi_with_path(f)
        doc = {"form": str(f), "associated_form": None, "delta_phi": {"value": str(value), "path": path}}
        lines = [f"f        = {f}", "Phi(f)   undefined (Delta(f) = 0)", f"Delta*Phi = {value}  (path: {path})"]
        _emit(args, doc, lines)
        return EXIT_OK
    mu = {",".join(map(str, k)): _scalar(v) for k, v in sorted(af.mu.items(), reverse=True)}
    doc = {"form": str(f), "associated_form": str(af.form), "olddef": str(af.olddef), "mu": mu}
    lines = [f"f        = {f}", f"Phi(f)   = {af.form}", f"olddef   = {af.olddef}", "mu:"]
    lines += [f"  mu[{k}] = {v}" for k, v in mu.items()]
    if (f.n, f.d) in CLOSED_FORM_SPACES:
        value, path = delta_phi_with_path(f)
        doc["delta_phi"] = {"value": str(value), "path": path}
        lines.append(f"Delta*Phi = {value}  (path: {path})")
    _emit(args, doc, lines)
    return EXIT_OK


def _invariant_doc(f) -> dict:
    doc = {"form": str(f)}
    for k, v in invariants(f).items():
        doc[k] = _scalar(v)
    delta = discriminant(f)
    doc["Delta"] = _scalar(delta)
    if (f.n, f.d) in ((2, 4), (3, 3)):
        doc["J"] = _scalar(j_invariant(f)) if delta != 0 else None
        doc["stability"] = stability_classify(f)
    return doc


def cmd_invariants(args) -> int:
    f = _read_form(args)
    doc = _invariant_doc(f)
    lines = [f"{k} = {'undefined' if v is None else v}" for k, v in doc.items()]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    f = _read_form(args)
    doc = {"form": str(f), "stability": stability_classify(f)}
    if doc["stability"] == "stable":
        doc["J"] = _scalar(j_invariant(f))
        doc["hilbert_function"] = list(hilbert_function(f))
    _emit(args, doc, [f"{k}: {v}" for k, v in doc.items()])
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = run_suite(args.checks, args.samples, args.seed, args.timings)
    except KeyError as exc:
        print(f"assocforms: error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _parse_spec(text: str) -> CovariantSpec:
    """``n,d,degree,order[,covariant|contravariant]``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (4, 5):
        raise ValueError("spec must be n,d,degree,order[,variance]")
    variance = parts[4] if len(parts) == 5 else COVARIANT
    if variance not in (COVARIANT, CONTRAVARIANT):
        raise ValueError(f"variance must be {COVARIANT} or {CONTRAVARIANT}")
    return CovariantSpec(*(int(p) for p in parts[:4]), variance)


def cmd_synthesize(args) -> int:
    if args.spec in catalogue.ENTRIES or args.spec == "all":
        names = list(catalogue.ENTRIES) if args.spec == "all" else [args.spec]
        docs = []
        for name in names:
            obj = catalogue.get(name)
            docs.append({"name": name, "spec": obj.spec.to_dict(), "weight": obj.weight,
                         "terms": len(obj.terms), "cache": str(catalogue.cache_dir() / f"{name}.json")})
        lines = [f"{d['name']}: weight {d['weight']}, {d['terms']} terms -> {d['cache']}" for d in docs]
        _emit(args, {"entries": docs}, lines)
        return EXIT_OK
    try:
        spec = _parse_spec(args.spec)
    except ValueError as exc:
        print(f"assocforms: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    space = synthesize_space(spec)
    doc = {"spec": spec.to_dict(), "dimension": space.dimension, "columns": space.columns,
           "full_dimension": space.full_dimension, "strategy": space.strategy}
    _emit(args, doc, [f"{k}: {v}" for k, v in doc.items()])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    form_opts = argparse.ArgumentParser(add_help=False)
    form_opts.add_argument("form", help="form text, a coefficient JSON document, or @file")
    form_opts.add_argument("--n", type=int, help="number of variables")
    form_opts.add_argument("--d", type=int, help="degree (inferred when omitted)")
    form_opts.add_argument("--domain", choices=("q", "qw", "params"), default="q")

    p = _Parser(prog="assocforms", description="Associated forms, classical invariants and the identity suite.")
    p.add_argument("--version", action="version", version=f"assocforms {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("assoc", parents=[common, form_opts], help="associated form, mu table, both avatars").set_defaults(fn=cmd_assoc)
    sub.add_parser("invariants", parents=[common, form_opts], help="invariants, Delta, J and stability").set_defaults(fn=cmd_invariants)
    sub.add_parser("classify", parents=[common, form_opts], help="stability stratum").set_defaults(fn=cmd_classify)
    v = sub.add_parser("verify", parents=[common], help="run the identity suite V1..V20")
    v.add_argument("--checks", default=None, help="comma-separated ids, e.g. V1,V7")
    v.add_argument("--samples", type=int, default=None, help="sample count for sampled parts")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--timings", action="store_true", help="record wall-clock durations (breaks byte-identical output)")
    v.set_defaults(fn=cmd_verify)
    s = sub.add_parser("synthesize", parents=[common], help="synthesize a catalogue entry (or 'all') or a space n,d,degree,order[,variance]")
    s.add_argument("spec")
    s.set_defaults(fn=cmd_synthesize)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (AlgebraError, ValueError) as exc:
        print(f"assocforms: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
