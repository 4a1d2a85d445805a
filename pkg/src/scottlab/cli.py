"""Command-line entry points: scott / brauer / fusion / verify."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import brauer as br
from . import decomp as dc
from . import fusion as fu
from . import groups as gr
from . import verifiers as vf
from .gf import FieldCtx


def _load_group_file(path):
    with open(path) as f:
        return gr.load_group(json.load(f))


def _parse_gens(spec):
    if not spec:
        return []
    return [int(tok) for tok in spec.replace(",", " ").split()]


def _add_instance_args(sub):
    sub.add_argument("--group", required=True, help="group-spec JSON file")
    sub.add_argument("--p", type=int, required=True, help="prime characteristic")
    sub.add_argument(
        "--subgroup",
        required=True,
        help="comma-separated generator element ids (empty string for the trivial subgroup)",
    )


def main(argv=None):
    parser = argparse.ArgumentParser(prog="scottlab", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_scott = subs.add_parser("scott", help="Scott module certificate")
    _add_instance_args(p_scott)
    p_scott.add_argument("--field-ext", type=int, default=1, help="GF(p^m) extension degree m")

    p_brauer = subs.add_parser("brauer", help="Brauer indecomposability verdict")
    _add_instance_args(p_brauer)
    p_brauer.add_argument(
        "--exhaustive",
        action="store_true",
        help="also check classes outside the vertex (must be zero there)",
    )

    p_fusion = subs.add_parser("fusion", help="fusion system report")
    _add_instance_args(p_fusion)

    p_verify = subs.add_parser("verify", help="run theorem verifiers over a corpus")
    p_verify.add_argument("--theorem", required=True, choices=vf.THEOREMS + ["all"])
    p_verify.add_argument("--corpus", required=True, help="'builtin' or a directory of group-spec JSON files")
    p_verify.add_argument("--out", required=True, help="report JSON output path")
    p_verify.add_argument("--jobs", type=int, default=1, help="accepted for interface parity; runs sequentially")
    p_verify.add_argument("--timeout", type=float, default=60.0, help="per-instance timeout in seconds")
    p_verify.add_argument("--include-slow", action="store_true", help="include corpus entries flagged slow")

    args = parser.parse_args(argv)

    if args.command == "verify":
        return _cmd_verify(args)

    G = _load_group_file(args.group)
    P = gr.subgroup_from_spec(G, _parse_gens(args.subgroup))
    if args.command == "scott":
        F = FieldCtx(args.p, args.field_ext)
        cert = dc.scott_module(G, P, F)
        json.dump(cert.to_json(), sys.stdout, indent=1)
    elif args.command == "brauer":
        F = FieldCtx(args.p, 1)
        cert = dc.scott_module(G, P, F, compute_vertex=False)
        verdict = br.is_brauer_indecomposable(cert.module, P, exhaustive=args.exhaustive)
        json.dump(verdict.to_json(), sys.stdout, indent=1)
    elif args.command == "fusion":
        fsys = fu.build_fusion(G, P, args.p)
        json.dump(fu.fusion_report(fsys), sys.stdout, indent=1)
    print()
    return 0


def _cmd_verify(args):
    if args.corpus == "builtin":
        specs = vf.builtin_corpus()
    else:
        root = Path(args.corpus)
        if not root.is_dir():
            print(f"corpus directory not found: {root}", file=sys.stderr)
            return 2
        specs = []
        for path in sorted(root.glob("*.json")):
            try:
                specs.append(json.loads(path.read_text()))
            except json.JSONDecodeError as exc:
                print(f"unreadable corpus entry {path}: {exc}", file=sys.stderr)
                return 2
    theorems = list(vf.THEOREMS) if args.theorem == "all" else [args.theorem]
    config = vf.CorpusConfig(
        groups=specs,
        theorems=theorems,
        timeout=args.timeout,
        jobs=args.jobs,
        include_slow=args.include_slow,
    )
    report, status = vf.run_corpus(config)
    with open(args.out, "w") as f:
        json.dump(report, f, indent=1)
        f.write("\n")
    counts = {tid: s["counterexamples"] for tid, s in report["summary"].items()}
    print(f"wrote {args.out}; exit {status}; counterexamples: {counts}")
    return status


if __name__ == "__main__":
    sys.exit(main())
