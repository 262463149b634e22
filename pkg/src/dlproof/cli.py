"""Command line entry points.

    dlproof prove --ontology F --goal G --method M --measure X
                  [--known-signature F2] --out P.json
    dlproof bench condense --ontology F [--signature F2] --seed N --out C.csv
    dlproof bench fbp --ontology F --seed N --out C.csv [--methods ...]
    dlproof serve --port N [--static DIR]
    dlproof classify --ontology F
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, elh, fbp, service
from .errors import DlProofError, ParseError
from .parsing import parse_axiom, parse_ontology, parse_signature
from .proofs import (
    MEASURES, condense_by_signature, extract_optimal_proof, proof_json_bytes,
    proof_to_json, signature_coverage,
)
from .syntax import Fragment, Signature, render_axiom


def _load_ontology(path):
    text = Path(path).read_text(encoding="utf-8")
    return parse_ontology(text, name=Path(path).stem)


def _load_signature(path):
    if not path:
        return Signature.EMPTY
    return parse_signature(Path(path).read_text(encoding="utf-8"))


def cmd_prove(args):
    o = _load_ontology(args.ontology)
    goal = parse_axiom(args.goal)
    known = _load_signature(args.known_signature)
    if args.method == service.ELK_MINIMAL:
        structure = elh.saturate(o)
        proof = extract_optimal_proof(structure, goal, MEASURES[args.measure],
                                      known=known)
    else:
        task = fbp.FbpTask(o, goal, method=args.method,
                           overall_budget_ms=args.budget_ms)
        proof, _trace = fbp.generate(task)
        if known:
            proof = condense_by_signature(proof, known)
    coverage = 100.0 * signature_coverage(proof, known) if known else 0.0
    record = proof_to_json(proof, Path(args.out).stem, args.method,
                           coverage_pct=coverage,
                           known=known if known else None)
    Path(args.out).write_bytes(proof_json_bytes(record))
    print(f"wrote {args.out}")
    return 0


def cmd_bench_condense(args):
    o = _load_ontology(args.ontology)
    s = _load_signature(args.signature)
    tasks = bench.extract_tasks(o, s if s else None,
                                min_symbols=args.min_symbols,
                                sample_size=args.sample_size, seed=args.seed,
                                ontology_ref=args.ontology)
    rows = bench.run_condensation(o, tasks, s, out_csv=args.out)
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def cmd_bench_fbp(args):
    o = _load_ontology(args.ontology)
    patterns = bench.mine_patterns(o, non_elh_only=args.non_elh_only)
    rows = bench.run_fbp_comparison(patterns, args.methods, out_csv=args.out,
                                    budget_ms=args.budget_ms)
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def cmd_serve(args):
    service.serve(args.port, static_dir=args.static)
    return 0


def cmd_classify(args):
    o = _load_ontology(args.ontology)
    fragment = o.fragment()
    print(f"ontology: {o.name}")
    print(f"axioms: {len(o)}")
    print(f"fragment: {fragment.value}")
    if fragment == Fragment.ELH:
        entailed = sorted(elh.entailed_atomic_cis(o), key=lambda a: a.key())
        print(f"entailed atomic inclusions: {len(entailed)}")
        for a in entailed:
            print(f"  {render_axiom(a, 'pretty')}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="dlproof",
                                     description="proof workbench for ELH/ALCH ontologies")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="generate one proof as JSON")
    p.add_argument("--ontology", required=True)
    p.add_argument("--goal", required=True, help="axiom in functional syntax")
    p.add_argument("--method", default=service.ELK_MINIMAL,
                   choices=[service.ELK_MINIMAL, fbp.HEUR, fbp.SYMB,
                            fbp.SIZE, fbp.SIZE_WEIGHTED])
    p.add_argument("--measure", default="size", choices=sorted(MEASURES))
    p.add_argument("--known-signature", default=None)
    p.add_argument("--budget-ms", type=float, default=300_000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_prove)

    b = sub.add_parser("bench", help="experiment harness")
    bsub = b.add_subparsers(dest="bench_command", required=True)

    bc = bsub.add_parser("condense", help="signature-based condensation run")
    bc.add_argument("--ontology", required=True)
    bc.add_argument("--signature", default=None)
    bc.add_argument("--seed", type=int, default=0)
    bc.add_argument("--min-symbols", type=int, default=5)
    bc.add_argument("--sample-size", type=int, default=500)
    bc.add_argument("--out", required=True)
    bc.set_defaults(func=cmd_bench_condense)

    bf = bsub.add_parser("fbp", help="forgetting-based strategy comparison")
    bf.add_argument("--ontology", required=True)
    bf.add_argument("--seed", type=int, default=0)
    bf.add_argument("--methods", nargs="+",
                    default=[fbp.HEUR, fbp.SYMB, fbp.SIZE],
                    choices=[fbp.HEUR, fbp.SYMB, fbp.SIZE, fbp.SIZE_WEIGHTED])
    bf.add_argument("--budget-ms", type=float, default=300_000)
    bf.add_argument("--non-elh-only", action="store_true")
    bf.add_argument("--out", required=True)
    bf.set_defaults(func=cmd_bench_fbp)

    sv = sub.add_parser("serve", help="run the HTTP service")
    sv.add_argument("--port", type=int, default=8080)
    sv.add_argument("--static", default=None)
    sv.set_defaults(func=cmd_serve)

    cl = sub.add_parser("classify", help="fragment and entailment report")
    cl.add_argument("--ontology", required=True)
    cl.set_defaults(func=cmd_classify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DlProofError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
