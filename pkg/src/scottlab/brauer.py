"""The Brauer construction M(Q) and the Brauer-indecomposability decision.

M(Q) is the quotient of the Q-fixed points by the sum of relative traces
from the maximal subgroups of Q, carried with its natural action of the
normalizer of Q.  For permutation modules an independent fixed-point
shortcut provides a cross-validating oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import groups as gr
from . import kmod as km
from . import linalg as la
from .kmod import InconclusiveError, ModuleError, Representation


def _normalizer_in(G, D, Q):
    """N_D(Q) for a subgroup D of G."""
    mem = [x for x in D.members if all(G.conj(x, q) in Q.member_set for q in Q.generators)]
    return G.subgroup(members=mem)


def _centralizer_in(G, D, Q):
    mem = [x for x in D.members if all(G.mul[x, q] == G.mul[q, x] for q in Q.generators)]
    return G.subgroup(members=mem)


@dataclass
class BrauerQuotient:
    source: Representation
    at: gr.Subgroup
    quotient: Representation  # module over N_domain(Q)
    section: np.ndarray  # rows lifting the quotient basis into M^Q
    kind: str  # "general" | "perm-shortcut"

    @property
    def dim(self):
        return self.quotient.dim


def brauer_construction(M: Representation, Q) -> BrauerQuotient:
    """M(Q) = M^Q / sum of Tr^Q_R(M^R) over maximal R < Q, as an N(Q)-module."""
    G = M.group
    p = M.field.p
    if not Q.is_p_group(p):
        raise ModuleError("Brauer construction needs a p-subgroup")
    if not M.domain.contains_subgroup(Q):
        raise ModuleError("Q must lie in the module's domain")
    F = M.field
    fq = km.fixed_points(M, Q).basis
    maxima = gr.maximal_subgroups_of_p_group(G, Q, p)
    rows = [km.relative_trace(M, R, Q).basis for R in maxima]
    rows = [r for r in rows if r.shape[0]]
    small = (
        la.row_space(F, np.concatenate(rows, axis=0))
        if rows
        else np.zeros((0, M.dim), dtype=np.int64)
    )
    if 1 < Q.order <= p**3:
        # cross-check: the full sum over all proper subgroups agrees
        frows = [
            km.relative_trace(M, R, Q).basis
            for R in gr.all_subgroups(G, Q)
            if R.order < Q.order
        ]
        frows = [r for r in frows if r.shape[0]]
        full = (
            la.row_space(F, np.concatenate(frows, axis=0))
            if frows
            else np.zeros((0, M.dim), dtype=np.int64)
        )
        assert np.array_equal(full, small), "maximal-subgroup trace sum != full sum"
    N = _normalizer_in(G, M.domain, Q)
    quotient, section = km.quotient_rep(M, fq, small, domain=N)
    assert quotient.dim == fq.shape[0] - small.shape[0]
    return BrauerQuotient(M, Q, quotient, section, "general")


def perm_shortcut(M: Representation, Q) -> BrauerQuotient:
    """Br_Q of a permutation module via fixed basis points (independent oracle)."""
    G = M.group
    if M.basis_labels is None:
        raise ModuleError("shortcut needs a labelled permutation basis")
    for m in M.gen_mats:
        if not np.array_equal(np.sort(np.nonzero(m.T)[1]), np.arange(M.dim)) or not np.all(
            m[m != 0] == 1
        ):
            raise ModuleError("not a permutation module")
    fixed = [
        j
        for j in range(M.dim)
        if all(M.element_matrix(q)[j, j] == 1 for q in Q.generators)
    ]
    N = _normalizer_in(G, M.domain, Q)
    sub = np.array(fixed, dtype=np.int64)
    mats = []
    for n in N.generators:
        big = M.element_matrix(n)
        restr = big[np.ix_(sub, sub)]
        assert np.array_equal(restr.sum(axis=0), np.ones(len(fixed), dtype=np.int64)) or len(fixed) == 0
        mats.append(restr)
    labels = [M.basis_labels[j] for j in fixed]
    quotient = Representation(G, N, M.field, mats, basis_labels=labels, dim=len(fixed))
    section = np.zeros((len(fixed), M.dim), dtype=np.int64)
    for i, j in enumerate(fixed):
        section[i, j] = 1
    return BrauerQuotient(M, Q, quotient, section, "perm-shortcut")


# -- the Brauer-indecomposability decision --------------------------------------


@dataclass
class Verdict:
    module_dim: int
    p: int
    vertex_hint: gr.Subgroup | None
    entries: list = field(default_factory=list)  # dicts per Q
    verdict: bool = True

    def to_json(self):
        return {
            "module_dim": self.module_dim,
            "p": self.p,
            "vertex_generators": list(self.vertex_hint.generators) if self.vertex_hint else None,
            "verdict": self.verdict,
            "table": self.entries,
        }


def _restriction_status(B: BrauerQuotient, max_ext=None):
    """Status of Res_{QC(Q)}^{N(Q)} B.quotient: zero/indecomposable/decomposable,
    plus summand dims when a decomposition is computed."""
    from . import decomp as dc

    if B.quotient.dim == 0:
        return "zero", []
    G = B.source.group
    Q = B.at
    C = _centralizer_in(G, B.source.domain, Q)
    QC = G.subgroup(members=sorted({int(G.mul[q, c]) for q in Q.members for c in C.members}))
    R = km.restrict(B.quotient, QC)
    kwargs = {} if max_ext is None else {"max_ext": max_ext}
    ok, info = dc.is_indecomposable(R, **kwargs)
    if ok:
        return "indecomposable", [R.dim]
    cert = dc.decompose(R, **kwargs)
    return "decomposable", cert.dims()


def _q_representatives(G, P, p, exhaustive):
    """Conjugacy-class representatives of subgroups of P (fully normalized in
    F_P(G) where possible), plus the outside classes in exhaustive mode."""
    from . import fusion as fu

    classes = gr.subgroup_conjugacy_classes(G, gr.all_subgroups(G, P))
    fsys = fu.build_fusion(G, P, p)
    inside = []
    for cls in classes:
        Q = next((c for c in cls if fu.is_fully_normalized(fsys, c)), cls[0])
        inside.append(Q)
    outside = []
    if exhaustive:
        for Q in gr.p_subgroup_class_reps(G, p):
            if not gr.is_subconjugate(G, Q, P)[0]:
                outside.append(Q)
    return inside, outside


def is_brauer_indecomposable(M: Representation, P=None, exhaustive=False) -> Verdict:
    """Three-valued per-Q table deciding Brauer indecomposability of M.

    With a vertex hint P, Q runs over conjugacy classes of subgroups of P
    (sufficient for trivial-source M with vertex P); without one, or in
    exhaustive mode, over all p-subgroup classes of the group.
    """
    G = M.group
    p = M.field.p
    if P is None:
        inside, outside = gr.p_subgroup_class_reps(G, p), []
    else:
        inside, outside = _q_representatives(G, P, p, exhaustive)
    out = Verdict(module_dim=M.dim, p=p, vertex_hint=P)
    for Q, expected_zero in [(q, False) for q in inside] + [(q, True) for q in outside]:
        B = brauer_construction(M, Q)
        try:
            status, dims = _restriction_status(B)
        except InconclusiveError as exc:
            raise InconclusiveError(f"Q=<{','.join(map(str, Q.generators))}>: {exc}") from exc
        entry = {
            "Q_generators": list(Q.generators),
            "Q_order": Q.order,
            "brauer_dim": B.dim,
            "status": status,
            "restriction_summand_dims": dims,
        }
        if expected_zero:
            entry["outside_vertex"] = True
        out.entries.append(entry)
        if status == "decomposable":
            out.verdict = False
    return out


def vanishing_check(M: Representation, P) -> bool:
    """Br_Q(M) = 0 for every p-subgroup class with Q not subconjugate to P."""
    G = M.group
    p = M.field.p
    for Q in gr.p_subgroup_class_reps(G, p):
        if gr.is_subconjugate(G, Q, P)[0]:
            continue
        if brauer_construction(M, Q).dim != 0:
            return False
    return True


def brauer_transitivity_check(M: Representation, R, Q) -> bool:
    """M(R)(Q) = M(Q) as modules over N_{N(R)}(Q), for R normal in Q."""
    G = M.group
    p = M.field.p
    if not (R.is_p_group(p) and Q.is_p_group(p)):
        raise ModuleError("transitivity check needs p-subgroups")
    if not Q.contains_subgroup(R):
        raise ModuleError("transitivity check needs R <= Q")
    if not all(G.conj(q, r) in R.member_set for q in Q.generators for r in R.generators):
        raise ModuleError("transitivity check needs R normal in Q")
    MR = brauer_construction(M, R).quotient  # module over N_G(R) >= Q
    left = brauer_construction(MR, Q).quotient  # module over N_{N_G(R)}(Q)
    MQ = brauer_construction(M, Q).quotient  # module over N_G(Q)
    small = left.domain  # N_{N_G(R)}(Q) <= N_G(Q)
    right = km.restrict(MQ, small)
    if left.dim != right.dim:
        return False
    if left.dim == 0:
        return True
    return km.is_isomorphic(left, right)
