#!/usr/bin/env python3
"""Survey Scott modules over the built-in corpus.

For every corpus group, prime, and p-subgroup class representative P, print
the Scott module dimension, its vertex, whether core(P) lies in its kernel,
and the Brauer-indecomposability verdict.
"""

import argparse
import sys
import time

from scottlab import brauer as br
from scottlab import decomp as dc
from scottlab import groups as gr
from scottlab import verifiers as vf
from scottlab.gf import FieldCtx
from scottlab.kmod import InconclusiveError, module_kernel


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=None, help="restrict to one prime")
    ap.add_argument("--group", default=None, help="restrict to one corpus group by name")
    ap.add_argument("--include-slow", action="store_true")
    args = ap.parse_args()

    primes = (args.p,) if args.p else (2, 3)
    header = (
        f"{'group':<8}{'p':>3}{'|P|':>5}  {'P gens':<14}{'dim S':>6}"
        f"{'|vertex|':>9}{'core<=ker':>11}{'Brauer indec':>14}"
    )
    print(header)
    print("-" * len(header))
    t0 = time.perf_counter()
    for spec in vf.builtin_corpus():
        if spec.get("slow") and not args.include_slow:
            continue
        if args.group and spec["name"] != args.group:
            continue
        G = gr.load_group(spec)
        for p in primes:
            F = FieldCtx(p, 1)
            for P in gr.p_subgroup_class_reps(G, p):
                cert = dc.scott_module(G, P, F)
                core_ok = module_kernel(cert.module).contains_subgroup(gr.core(G, P))
                try:
                    verdict = str(br.is_brauer_indecomposable(cert.module, P).verdict)
                except InconclusiveError:
                    verdict = "inconclusive"
                gens = ",".join(map(str, P.generators)) or "-"
                print(
                    f"{G.name:<8}{p:>3}{P.order:>5}  {gens:<14}{cert.module.dim:>6}"
                    f"{cert.c_vertex.order:>9}{str(core_ok):>11}{verdict:>14}"
                )
    print(f"done in {time.perf_counter() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
