"""Acceptance suite: one test (and one pass/fail line) per criterion.

Each criterion is verified end to end with its own wall-clock budget; the
cross-checks inside each test use independently computed oracles (group-theoretic
counts against module-theoretic computations, definition against shortcut,
two execution orders, two runs).
"""

import copy
import json
import time

import numpy as np
import pytest

from scottlab import brauer as br
from scottlab import decomp as dc
from scottlab import fusion as fu
from scottlab import groups as gr
from scottlab import kmod as km
from scottlab import linalg as la
from scottlab import verifiers as vf
from scottlab.gf import FieldCtx

PRIMES = (2, 3)


class _Budget:
    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        verdict = "FAIL" if exc_type else "PASS"
        print(f"[{self.name}] {verdict} ({elapsed:.1f}s / budget {self.seconds:.0f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, f"{self.name}: {elapsed:.1f}s over budget"


@pytest.fixture(scope="module")
def full_run():
    """One all-theorem run over the default corpus, shared by criteria 5, 6, 9."""
    config = vf.CorpusConfig(groups=vf.builtin_corpus())
    t0 = time.perf_counter()
    report, status = vf.run_corpus(config)
    return report, status, time.perf_counter() - t0


def test_criterion_1_kernel_of_induced_trivial_module(corpus_groups):
    """ker(Ind_H^G k) equals core_G(H): module path vs group-theory path."""
    with _Budget("criterion 1: kernel lemma", 5.0):
        checked = 0
        for G in corpus_groups.values():
            for p in PRIMES:
                F = FieldCtx(p, 1)
                for H in gr.p_subgroup_class_reps(G, p):
                    ind = km.induce(G, H, km.trivial_module(G, F, domain=H))
                    module_path = km.module_kernel(ind)
                    group_path = gr.core(G, H)
                    assert module_path.members == group_path.members, (G.name, p, H.members)
                    checked += 1
        assert checked >= 60


def test_criterion_2_brauer_dimension_law(corpus_groups):
    """dim Br_Q(k[G/P]) = #fixed cosets: general construction, permutation
    shortcut, and a pure coset count must all agree."""
    with _Budget("criterion 2: Brauer dimension law", 30.0):
        for G in corpus_groups.values():
            for p in PRIMES:
                F = FieldCtx(p, 1)
                reps = gr.p_subgroup_class_reps(G, p)
                for P in reps:
                    M = km.perm_module(G, P, F)
                    coset_reps, _ = gr.left_transversal(G, P)
                    for Q in reps:
                        # oracle: gP is Q-fixed iff g^{-1} Q g <= P
                        fixed = sum(
                            1
                            for g in coset_reps
                            if all(
                                G.conj(G.inv[g], q) in P.member_set for q in Q.generators
                            )
                        )
                        assert br.brauer_construction(M, Q).dim == fixed
                        assert br.perm_shortcut(M, Q).dim == fixed


def test_criterion_3_scott_certificates(corpus_groups):
    """Scott certificates at the Sylow subgroup of every corpus group: unique
    trivial-head summand with matching socle, vertex equal to P, core in the
    kernel, and the normalizer Scott module deflating to the projective cover
    of the trivial module of N_G(Q)/Q for every fully normalized Q <= P."""
    with _Budget("criterion 3: Scott certificates", 300.0):
        for G in corpus_groups.values():
            for p in PRIMES:
                F = FieldCtx(p, 1)
                P = gr.sylow(G, p)
                cert = dc.scott_module(G, P, F)  # asserts uniqueness, socle=head
                assert cert.a_socle and cert.b_head
                assert gr.conjugacy_equal(G, cert.c_vertex, P)
                assert km.module_kernel(cert.module).contains_subgroup(gr.core(G, P))
                fsys = fu.build_fusion(G, P, p)
                for cls in fsys.classes:
                    Q = next(
                        fsys.objects[i]
                        for i in cls
                        if fu.is_fully_normalized(fsys, fsys.objects[i])
                    )
                    _check_normalizer_deflation(G, Q, F)


def _check_normalizer_deflation(G, Q, F):
    """S(N_G(Q), Q) deflated mod Q is the projective cover of the trivial
    module of N_G(Q)/Q, computed by an independent path."""
    N = gr.normalizer(G, Q)
    K, to_new, _ = gr.as_group(G, N)
    Q_img = K.subgroup(members=sorted(int(to_new[x]) for x in Q.members))
    S = dc.scott_module(K, Q_img, F, compute_vertex=False).module
    defl, Qt = km.deflate(S, Q_img)
    pcov = dc.projective_cover_trivial(Qt, F)
    if defl.field.m != pcov.field.m:
        m = max(defl.field.m, pcov.field.m)
        big = FieldCtx(F.p, m)
        defl, pcov = km.change_field(defl, big), km.change_field(pcov, big)
    assert defl.dim == pcov.dim, (G.name, F.p, Q.members)
    assert km.is_isomorphic(defl, pcov), (G.name, F.p, Q.members)


def test_criterion_4_frobenius_conditions(corpus_groups, s3):
    """The three normal-p-complement conditions agree everywhere; on (S3, 3)
    all three fail with the order-3 subgroup as explicit witness."""
    with _Budget("criterion 4: normal p-complement conditions", 10.0):
        for G in corpus_groups.values():
            for p in PRIMES:
                rep = gr.frobenius_report(G, p)
                assert rep.c1 == rep.c2 == rep.c3, (G.name, p)
        rep = gr.frobenius_report(s3, 3)
        assert not rep.c1 and not rep.c2 and not rep.c3
        assert rep.failing_subgroup is not None and rep.failing_subgroup.order == 3


def test_criterion_5_restriction_criterion_equivalence(full_run):
    """Definition-vs-criterion equivalence (full and core-restricted ranges)
    over the whole corpus: zero counterexamples, nonvacuous coverage."""
    report, status, elapsed = full_run
    with _Budget("criterion 5: criterion equivalence scan", 600.0):
        assert elapsed < 600.0
        for tid in ("ishioka", "th2"):
            s = report["summary"][tid]
            assert s["counterexamples"] == 0
            assert s["nonvacuous"] >= 1
            assert s["inconclusive"] == 0


def test_criterion_6_theorem_scans(full_run):
    """All theorem scans: zero counterexamples; nonvacuity where required;
    vacuity for the lifting statements reported, not hidden."""
    report, status, _ = full_run
    with _Budget("criterion 6: theorem scans", 600.0):
        for s in report["summary"].values():
            assert s["counterexamples"] == 0
        for tid in ("th1", "th2", "kernel", "ishioka"):
            assert report["summary"][tid]["nonvacuous"] >= 1, tid
        # the trivial-subgroup branch of the corollary is nonvacuous at least
        # on C2 and S3
        remark_groups = {
            e["instance"]["group"]
            for e in report["instances"]
            if e["theorem_id"] == "coro"
            and e["status"] == "pass"
            and e["instance"]["P_order"] == 1
        }
        assert {"C2", "S3"} <= remark_groups
        # vacuity of the lifting statements is reported with counts
        for tid in ("th3", "coro"):
            s = report["summary"][tid]
            assert s["vacuous"] + s["nonvacuous"] == s["instances"]
            print(f"  {tid}: {s['nonvacuous']} nonvacuous, {s['vacuous']} vacuous")


def test_criterion_7_decomposition_self_consistency(s4, gf2):
    """Summand-dimension multiset stable under shuffled bases, Fitting
    decomposition for every endomorphism-basis element, idempotent witnesses
    re-verified."""
    with _Budget("criterion 7: decomposition self-consistency", 120.0):
        M = km.perm_module(s4, s4.subgroup(generators=[s4.generators[1]]), gf2)
        cert = dc.decompose(M)
        assert cert.verify_witnesses()
        reference = cert.dims()
        rng = np.random.default_rng(20260823)
        for _ in range(10):
            S = _random_invertible(gf2, M.dim, rng)
            shuffled_cert = dc.decompose(dc.transform_rep(M, S))
            assert shuffled_cert.dims() == reference
            assert shuffled_cert.verify_witnesses()
        for phi in km.hom_space(M, M):
            power = la.mat_pow(gf2, phi, M.dim)
            ker = la.null_space(gf2, power)
            img = la.row_space(gf2, power.T)
            assert ker.shape[0] + img.shape[0] == M.dim
            pieces = [b for b in (ker, img) if b.shape[0]]
            assert la.rank(gf2, np.concatenate(pieces, axis=0)) == M.dim


def _random_invertible(F, n, rng):
    while True:
        S = rng.integers(0, F.q, size=(n, n)).astype(np.int64)
        if la.mat_inv(F, S) is not None:
            return S


def test_criterion_8_mackey_and_green(corpus_groups):
    """Restriction of an induced trivial module decomposes by double cosets
    (orbit-size multisets agree with the index formula); Green's criterion
    verdict holds for every normal subgroup of a corpus p-group."""
    with _Budget("criterion 8: Mackey and Green checks", 30.0):
        for G in corpus_groups.values():
            for p in PRIMES:
                F = FieldCtx(p, 1)
                reps = gr.p_subgroup_class_reps(G, p)
                for H in reps:
                    M = km.perm_module(G, H, F)
                    for K in reps:
                        module_orbits = _orbit_sizes(km.restrict(M, K))
                        formula = sorted(
                            K.order // _conj_intersection(G, K, H, g).order
                            for g in gr.double_cosets(G, K, H)
                        )
                        assert module_orbits == formula, (G.name, p, H.members, K.members)
        green_checked = 0
        for G in corpus_groups.values():
            for p in PRIMES:
                if gr.p_part(G.order, p) != G.order:
                    continue  # Green scan runs over the corpus p-groups
                F = FieldCtx(p, 1)
                for H in gr.all_subgroups(G, G.whole()):
                    if H.is_normal():
                        assert dc.green_indecomposability_check(G, H, F), (G.name, H.members)
                        green_checked += 1
        assert green_checked >= 15


def _orbit_sizes(M):
    """Orbit-size multiset of a permutation action from the matrices alone."""
    succ = [[int(np.nonzero(m[:, j])[0][0]) for j in range(M.dim)] for m in M.gen_mats]
    seen = [False] * M.dim
    sizes = []
    for start in range(M.dim):
        if seen[start]:
            continue
        stack, orbit = [start], set()
        while stack:
            j = stack.pop()
            if j in orbit:
                continue
            orbit.add(j)
            stack.extend(s[j] for s in succ)
        for j in orbit:
            seen[j] = True
        sizes.append(len(orbit))
    return sorted(sizes)


def _conj_intersection(G, K, H, g):
    conj = {G.conj(g, h) for h in H.members}
    return G.subgroup(members=sorted(set(K.members) & conj))


def test_criterion_9_determinism(full_run):
    """A second all-theorem run is byte-identical to the first after removing
    the runtime fields."""
    report1, status1, _ = full_run
    with _Budget("criterion 9: determinism", 600.0):
        config = vf.CorpusConfig(groups=vf.builtin_corpus())
        report2, status2 = vf.run_corpus(config)
        assert status1 == status2 == 0
        b1 = json.dumps(_strip_runtime(report1), sort_keys=True).encode()
        b2 = json.dumps(_strip_runtime(report2), sort_keys=True).encode()
        assert b1 == b2


def _strip_runtime(report):
    report = copy.deepcopy(report)
    for e in report["instances"]:
        e.pop("runtime_ms", None)
    return report
