import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scottlab import groups as gr


def test_s3_basics(s3):
    assert s3.order == 6
    t, r = s3.generators
    assert s3.element_order(t) == 2 and s3.element_order(r) == 3
    H = s3.subgroup(generators=[t])
    N, C = gr.local_subgroups(s3, H)
    assert N.members == H.members == C.members  # self-normalizing C2 in S3


def test_core_of_d8_in_s4_is_v4(s4):
    D8 = gr.sylow(s4, 2)
    assert D8.order == 8
    V4 = gr.core(s4, D8)
    assert V4.order == 4
    assert V4.is_normal()
    assert all(s4.element_order(x) in (1, 2) for x in V4.members)
    # the double-transposition class plus identity
    assert sum(1 for x in V4.members if s4.element_order(x) == 2) == 3


def test_sylow_orders(corpus_groups):
    for G in corpus_groups.values():
        for p in (2, 3):
            S = gr.sylow(G, p)
            assert S.order == gr.p_part(G.order, p)
            assert S.is_p_group(p)


def test_sylow_choice_is_deterministic(s4):
    assert gr.sylow(s4, 2).members == gr.sylow(s4, 2).members
    members = gr.sylow(s4, 2).members
    # lexicographically least among conjugates
    for g in range(s4.order):
        conj = tuple(sorted(s4.conj(g, h) for h in members))
        assert members <= conj


def test_subconjugacy(s4):
    t = s4.generators[1]  # a transposition
    H1 = s4.subgroup(generators=[t])
    V4 = gr.core(s4, gr.sylow(s4, 2))
    ok, wit = gr.is_subconjugate(s4, H1, V4)
    assert not ok  # transpositions never conjugate into the double-transposition V4
    dt = next(x for x in V4.members if x != 0)
    H2 = s4.subgroup(generators=[dt])
    ok, wit = gr.is_subconjugate(s4, H2, V4)
    assert ok and all(s4.conj(wit, h) in V4.member_set for h in H2.members)


def test_double_cosets_partition(s3, s4):
    for G in (s3, s4):
        subs = [G.trivial_subgroup(), G.subgroup(generators=[G.generators[0]]), G.whole()]
        for H in subs:
            for K in subs:
                reps = gr.double_cosets(G, H, K)  # asserts the partition internally
                assert reps[0] == 0


def test_left_transversal(s4):
    H = gr.sylow(s4, 2)
    reps, coset_of = gr.left_transversal(s4, H)
    assert len(reps) == 3
    assert sorted(set(int(c) for c in coset_of)) == [0, 1, 2]


def test_quotient_s4_by_v4(s4):
    V4 = gr.core(s4, gr.sylow(s4, 2))
    Q, proj = gr.quotient_group(s4, V4)
    assert Q.order == 6
    orders = sorted(Q.element_order(x) for x in range(6))
    assert orders == [1, 2, 2, 2, 3, 3]  # S3


def test_as_group_roundtrip(s4):
    H = gr.sylow(s4, 2)
    K, to_new, from_new = gr.as_group(s4, H)
    assert K.order == 8
    for a in H.members:
        for b in H.members:
            assert int(to_new[s4.mul[a, b]]) == int(K.mul[to_new[a], to_new[b]])


def test_all_subgroups_of_d8(s4):
    D8 = gr.sylow(s4, 2)
    subs = gr.all_subgroups(s4, D8)
    assert len(subs) == 10
    assert sorted(S.order for S in subs) == [1, 2, 2, 2, 2, 2, 4, 4, 4, 8]
    assert len(gr.maximal_subgroups_of_p_group(s4, D8, 2)) == 3


def test_p_subgroup_class_reps(s4):
    reps = gr.p_subgroup_class_reps(s4, 2)
    assert sorted(S.order for S in reps) == [1, 2, 2, 4, 4, 4, 8]


def test_frobenius_s3(s3):
    rep2 = gr.frobenius_report(s3, 2)
    assert rep2.c1 and rep2.c2 and rep2.c3
    assert rep2.complement is not None and rep2.complement.order == 3
    rep3 = gr.frobenius_report(s3, 3)
    assert not (rep3.c1 or rep3.c2 or rep3.c3)
    assert rep3.failing_subgroup is not None
    assert rep3.failing_subgroup.order == 3  # the <(123)> witness


def test_frobenius_triple_agreement(corpus_groups):
    for G in corpus_groups.values():
        for p in (2, 3):
            rep = gr.frobenius_report(G, p)
            assert rep.c1 == rep.c2 == rep.c3, (G.name, p)


def test_load_group_rejects_non_associative():
    bad = np.array([[0, 1, 2], [1, 2, 0], [2, 1, 0]])  # not a group table
    with pytest.raises(gr.GroupError):
        gr.load_group({"name": "bad", "kind": "table", "table": bad.tolist()})


def test_load_group_rejects_unknown_kind():
    with pytest.raises(gr.GroupError):
        gr.load_group({"name": "x", "kind": "matrix"})


def test_order_bound(monkeypatch):
    monkeypatch.setenv("SCOTTLAB_MAX_GROUP_ORDER", "10")
    with pytest.raises(gr.GroupError):
        gr.FiniteGroup.from_permutations(4, [(1, 2, 3, 0), (1, 0, 2, 3)])


def test_normal_closure(s4):
    t = s4.generators[1]
    assert gr.normal_closure(s4, [t]).order == 24  # transpositions generate S4


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 23), st.integers(0, 23))
def test_conjugation_is_an_automorphism_s4(a, b):
    G = gr.FiniteGroup.from_permutations(4, [(1, 2, 3, 0), (1, 0, 2, 3)], name="S4")
    for g in (1, 5, 17):
        assert G.conj(g, int(G.mul[a, b])) == int(G.mul[G.conj(g, a), G.conj(g, b)])


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 23))
def test_element_order_divides_group_order(x):
    G = gr.FiniteGroup.from_permutations(4, [(1, 2, 3, 0), (1, 0, 2, 3)], name="S4")
    assert 24 % G.element_order(x) == 0
