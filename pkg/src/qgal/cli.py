"""Command line entry point.

    qgal verify <target> --suite <name> [--degree D] [--q LIST] [--json]
    qgal haar <target> [--degree D] [--q LIST] [--json]
    qgal cotensor <target> [--comodule SPEC] [--degree D] [--json]
    qgal normalize <target> <expr> [--json]
    qgal parse <target> <expr>

Targets are catalog names (GLq2, Uq2, GLq2m2, Uq2m2, GLqm22, Onp, AuFG,
AuF) or presentation/coaction files in the text DSL.  Exit codes:
0 pass, 1 fail, 2 undecided, 3 error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import characters, comodules, cotensor, galois, haar, presentations
from .ncpoly import ParseError, parse_expr
from .presentations import CatalogError, CoactionData
from .report import FAIL, PASS, Report, ReportItem, UNDECIDED

CATALOG_NAMES = ("GLq2", "Uq2", "GLq2m2", "Uq2m2", "GLqm22", "Onp", "AuFG", "AuF")
COACTION_TARGETS = ("GLq2m2", "Uq2m2", "AuFG")
SUITES = ("hopf", "star", "coaction", "galois", "haar", "biunitarity",
          "cotensor", "spectrum", "all")


class CliError(Exception):
    pass


def _completion_cap(default):
    env = os.environ.get("QGAL_DEGREE_CAP")
    return int(env) if env else default


def resolve_presentation(target, args):
    if target in CATALOG_NAMES:
        if target == "Onp":
            return presentations.catalog("Onp", n=args.n or 2, p=args.p or 1)
        if target == "AuFG":
            return presentations.catalog("AuFG")
        if target == "AuF":
            F = presentations.matrix_fq(1)
            return presentations.catalog("AuFG", F=F, G=F)
        return presentations.catalog(target)
    if os.path.exists(target):
        with open(target) as fh:
            text = fh.read()
        return presentations.parse_presentation_text(
            text, completion_degree=_completion_cap(3))
    raise CliError(f"unknown target {target!r} (not a catalog name or file)")


def resolve_coaction(target, args) -> CoactionData:
    if target in COACTION_TARGETS:
        return presentations.coaction(target)
    if target in ("GLq2", "Uq2", "AuF"):
        p = resolve_presentation(target, args)
        return CoactionData(p, p, dict(p.hopf.delta))
    if os.path.exists(target):
        with open(target) as fh:
            text = fh.read()
        if "coaction " in text:
            return presentations.parse_coaction_text(
                text, lambda name: resolve_presentation(name, args))
    raise CliError(f"no coaction data for target {target!r}")


def galois_witness_for(target, c: CoactionData):
    if target in ("GLq2m2", "Uq2m2"):
        return galois.glq_witness(c)
    if target == "AuFG":
        return galois.aufg_witness(c)
    if c.base is c.total and c.base.hopf is not None:
        return galois.hopf_witness(c.base)
    raise CliError(f"no Galois witness construction for {target!r}")


def comodule_for(spec, base):
    spec = spec.lower()
    if spec == "trivial":
        return comodules.trivial(base)
    if spec == "fundamental":
        return comodules.fundamental(base)
    if spec == "conjugate":
        return comodules.conjugate(comodules.fundamental(base))
    if spec.startswith("tensor"):
        k = int(spec[len("tensor"):] or "2")
        v = comodules.fundamental(base)
        out = v
        for _ in range(k - 1):
            out = comodules.tensor(out, v)
        return out
    raise CliError(f"unknown comodule spec {spec!r}")


def _haar_pair(c: CoactionData, degree):
    """J on the base and mu on the extension, deep enough for degree-d
    Gram matrices (star doubles word degree, products triple it)."""
    depth = 3 * degree
    J = haar.haar_on_hopf(c.base, d=depth)
    if c.base is c.total:
        return J, J
    return J, haar.haar_on_extension(c, J, depth)


# -- suites -----------------------------------------------------------------


def run_suite(target, suite, args):
    degree = args.degree
    q_samples = args.q
    if suite == "star":
        return presentations.verify_star(resolve_presentation(target, args))
    if suite == "hopf":
        return presentations.verify_hopf(resolve_presentation(target, args))
    if suite == "coaction":
        return presentations.verify_coaction(resolve_coaction(target, args))
    if suite == "spectrum":
        return characters.spectrum_report(resolve_presentation(target, args))
    if suite == "galois":
        c = resolve_coaction(target, args)
        return galois.verify_galois(c, galois_witness_for(target, c), degree)
    if suite == "biunitarity":
        c = resolve_coaction(target, args)
        v = comodules.fundamental(c.total)
        return cotensor.verify_biunitarity(c, v.matrix, degree)
    if suite == "haar":
        import time

        t0 = time.perf_counter()
        c = resolve_coaction(target, args)
        J, mu = _haar_pair(c, degree)
        report = haar.verify_invariance(c, mu, degree)
        pos = haar.gram_positivity(c.total, mu, degree, q_samples)
        report.items.extend(pos.items)
        report.check_name = f"haar({c.total.name}, degree {degree})"
        report.params = dict(pos.params)
        report.timing_ms = (time.perf_counter() - t0) * 1000.0
        return report
    if suite == "cotensor":
        return _cotensor_report(target, args, "fundamental", degree, with_gram=True)
    raise CliError(f"unknown suite {suite!r}")


def _cotensor_report(target, args, spec, degree, with_gram):
    c = resolve_coaction(target, args)
    v = comodule_for(spec, c.base)
    report = Report(f"cotensor({c.total.name}, {spec}, degree {degree})")
    from .report import timed

    with timed(report):
        dims = {}
        elements = None
        for d in ([degree - 1, degree] if degree >= 1 else [degree]):
            elements = cotensor.compute_cotensor(v, c, max(d, 0))
            dims[d] = len(elements)
        ds = sorted(dims)
        stable = len(ds) < 2 or dims[ds[0]] == dims[ds[1]]
        report.add(
            f"dim(V wedge Z) = {dims[ds[-1]]} at degree {ds[-1]}", True,
            witness="; ".join(e.pretty() for e in elements))
        if len(ds) == 2:
            report.add(
                f"dimension stable from degree {ds[0]} to {ds[1]}", stable,
                witness=f"dims {dims[ds[0]]} -> {dims[ds[1]]}")
        if with_gram and c.total.star is not None and c.base.hopf is not None \
                and elements:
            _, mu = _haar_pair(c, max(e.degree() for e in elements))
            gram = [[cotensor.cotensor_inner(x, y, mu) for y in elements]
                    for x in elements]
            ident = all(
                (gram[i][j] == (1 if i == j else 0))
                for i in range(len(gram)) for j in range(len(gram)))
            pretty = "; ".join(
                " ".join(repr(gram[i][j]) for j in range(len(gram)))
                for i in range(len(gram)))
            report.add("Gram matrix under the Haar measure is the identity",
                       ident, witness=pretty)
        report.params = {"degree": degree, "comodule": spec}
    return report


def run_all(target, args):
    """Every suite that applies to the target, as one combined report."""
    p = resolve_presentation(target, args)
    suites = ["spectrum"]
    if p.star is not None:
        suites.insert(0, "star")
    if p.hopf is not None:
        suites.insert(0, "hopf")
    if target in COACTION_TARGETS:
        suites += ["coaction", "biunitarity", "haar", "cotensor"]
        if target != "AuFG" or args.degree <= 1:
            suites.append("galois")
    elif p.hopf is not None:
        suites += ["haar", "galois"]
    master = Report(f"all({target})")
    total_ms = 0.0
    for suite in suites:
        sub = run_suite(target, suite, args)
        total_ms += sub.timing_ms
        n_fail = sum(1 for i in sub.items if i.status == FAIL)
        master.items.append(ReportItem(
            f"suite {suite}: {sub.check_name}", sub.status,
            f"{len(sub.items)} checks, {n_fail} failures"))
        if not args.json:
            print(sub.render())
    master.timing_ms = total_ms
    master.params = {"degree": args.degree, "q_samples": list(args.q)}
    return master


# -- argument handling ------------------------------------------------------


def _q_list(text):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q list {text!r}")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qgal",
        description="Exact workbench for q-deformed Hopf algebras, their "
                    "Galois extensions, Haar functionals and cotensor data.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, with_degree=True):
        sp.add_argument("target")
        if with_degree:
            sp.add_argument("--degree", type=int, default=2)
        sp.add_argument("--q", type=_q_list, default=[0.5, 0.9, 2.0])
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--n", type=int, default=None)
        sp.add_argument("--p", type=int, default=None)

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=SUITES, default="all")

    sp = sub.add_parser("haar", help="Haar functional table and positivity")
    common(sp)

    sp = sub.add_parser("cotensor", help="cotensor dimension and Gram data")
    common(sp)
    sp.add_argument("--comodule", default="fundamental")

    sp = sub.add_parser("normalize", help="normal form of an expression")
    common(sp, with_degree=False)
    sp.add_argument("expr")

    sp = sub.add_parser("parse", help="parse and echo an expression")
    common(sp, with_degree=False)
    sp.add_argument("expr")
    return ap


def _emit(report: Report, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        print(report.render())
        print(f"  ({report.timing_ms:.0f} ms)")
    return {PASS: 0, FAIL: 1, UNDECIDED: 2}[report.status]


def cmd_verify(args) -> int:
    if args.suite == "all":
        report = run_all(args.target, args)
    else:
        report = run_suite(args.target, args.suite, args)
        report.params.setdefault("degree", args.degree)
        report.params.setdefault("q_samples", list(args.q))
    return _emit(report, args.json)


def cmd_haar(args) -> int:
    c = resolve_coaction(args.target, args)
    J, mu = _haar_pair(c, args.degree)
    report = Report(f"haar({c.total.name}, degree {args.degree})")
    from .report import timed

    with timed(report):
        shown = [w for w in mu.basis if len(w) <= args.degree]
        table = "; ".join(
            f"{c.total.alphabet.word_str(w)} -> {mu.values[w]!r}" for w in shown)
        report.add(f"functional solved on {len(shown)} basis words", True,
                   witness=table)
        inv = haar.verify_invariance(c, mu, args.degree)
        report.add("invariance (1 (x) mu) alpha = mu(.) 1", inv.ok,
                   witness=f"{len(inv.items)} words checked")
        pos = haar.gram_positivity(c.total, mu, args.degree, args.q) \
            if c.total.star is not None else None
        if pos is not None:
            report.items.extend(pos.items)
            report.params = dict(pos.params)
    if not args.json:
        for w in shown:
            print(f"  {c.total.alphabet.word_str(w):24s} {mu.values[w]!r}")
    return _emit(report, args.json)


def cmd_cotensor(args) -> int:
    report = _cotensor_report(args.target, args, args.comodule, args.degree,
                              with_gram=True)
    return _emit(report, args.json)


def cmd_normalize(args) -> int:
    p = resolve_presentation(args.target, args)
    poly = p.nf(parse_expr(args.expr, p.alphabet))
    if args.json:
        report = Report(f"normalize({args.target})")
        report.add("normal form", True, witness=poly.pretty())
        print(report.to_json())
    else:
        print(poly.pretty())
    return 0


def cmd_parse(args) -> int:
    p = resolve_presentation(args.target, args)
    poly = parse_expr(args.expr, p.alphabet)
    print(poly.pretty())
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "haar": cmd_haar,
        "cotensor": cmd_cotensor,
        "normalize": cmd_normalize,
        "parse": cmd_parse,
    }
    try:
        if any(q0 == 0.0 for q0 in getattr(args, "q", [])):
            raise CliError("q = 0 is outside the valid parameter domain")
        return handlers[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 3
    except (CliError, CatalogError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except Exception as e:  # pragma: no cover - defensive
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
