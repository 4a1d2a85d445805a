#!/usr/bin/env python3
"""Scan fusion systems F_P(G) over the built-in corpus.

For each group and prime, report the Sylow fusion system (object count,
isomorphism classes, saturation) and list any non-Sylow p-subgroups P whose
fusion system fails saturation, with the failing object.
"""

import argparse
import sys

from scottlab import fusion as fu
from scottlab import groups as gr
from scottlab import verifiers as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--include-slow", action="store_true")
    ap.add_argument("--all-subgroups", action="store_true", help="also scan non-Sylow P")
    args = ap.parse_args()

    for spec in vf.builtin_corpus():
        if spec.get("slow") and not args.include_slow:
            continue
        G = gr.load_group(spec)
        for p in (2, 3):
            candidates = (
                gr.p_subgroup_class_reps(G, p) if args.all_subgroups else [gr.sylow(G, p)]
            )
            for P in candidates:
                fsys = fu.build_fusion(G, P, p)
                sat, failing = fu.is_saturated(fsys)
                tag = "SATURATED" if sat else "not saturated"
                line = (
                    f"{G.name:<8} p={p} |P|={P.order:<3} objects={len(fsys.objects):<3}"
                    f" classes={len(fsys.classes):<3} {tag}"
                )
                if failing is not None:
                    line += f" (fails at <{','.join(map(str, failing.generators))}>)"
                print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
