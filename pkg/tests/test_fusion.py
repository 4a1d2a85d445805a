import pytest

from scottlab import fusion as fu
from scottlab import groups as gr


def test_s3_fusion_objects_and_homs(s3):
    P = gr.sylow(s3, 2)
    fsys = fu.build_fusion(s3, P, 2)
    assert len(fsys.objects) == 2  # 1 and C2
    i = fsys.object_of(P)
    assert len(fsys.autos(i)) == 1  # Aut_F(C2) is trivial
    j = fsys.object_of(s3.trivial_subgroup())
    assert len(fsys.morphisms[(j, i)]) == 1  # maps are determined on elements
    assert fsys.morphisms[(i, j)] == []  # no map can shrink the order


def test_aut_f_order_matches_normalizer_quotient(s4):
    """|Aut_F(Q)| = |N_G(Q)| / |C_G(Q)| is an independent group-theoretic oracle."""
    for p in (2, 3):
        P = gr.sylow(s4, p)
        fsys = fu.build_fusion(s4, P, p)
        for i, Q in enumerate(fsys.objects):
            N = gr.normalizer(s4, Q)
            C = gr.centralizer(s4, Q)
            assert len(fsys.autos(i)) == N.order // C.order, Q.members


def test_aut_s4_of_v4_has_order_six(s4):
    P = gr.sylow(s4, 2)
    V4 = gr.core(s4, P)
    fsys = fu.build_fusion(s4, P, 2)
    i = fsys.object_of(V4)
    assert len(fsys.autos(i)) == 6  # all of GL(2,2) is realized in S4
    assert len(fsys.p_autos(i)) == 2


def test_fully_normalized_member_exists_in_every_class(corpus_groups):
    for G in corpus_groups.values():
        for p in (2, 3):
            P = gr.sylow(G, p)
            fsys = fu.build_fusion(G, P, p)
            for cls in fsys.classes:
                assert any(
                    fu.is_fully_normalized(fsys, fsys.objects[i]) for i in cls
                ), (G.name, p)


def test_sylow_fusion_is_saturated(corpus_groups):
    for G in corpus_groups.values():
        for p in (2, 3):
            fsys = fu.build_fusion(G, gr.sylow(G, p), p)
            verdict, failing = fu.is_saturated(fsys)
            assert verdict and failing is None, (G.name, p)


def test_p_group_fusion_is_saturated_and_inner(s4):
    D8 = gr.sylow(s4, 2)
    K, to_new, from_new = gr.as_group(s4, D8)
    fsys = fu.build_fusion(K, K.whole(), 2)
    verdict, _ = fu.is_saturated(fsys)
    assert verdict
    # in F_P(P) every Aut_F(Q) is induced by N_P(Q): Aut_F = Aut_P
    for i in range(len(fsys.objects)):
        assert set(fsys.autos(i)) == fsys.p_autos(i)


def test_non_sylow_subgroup_can_fail_saturation():
    # Klein subgroup <s, r^2> of D8: the rotation swaps its two reflections,
    # a 2-automorphism that P (abelian) cannot realize -> not fully automized.
    D8 = gr.FiniteGroup.from_permutations(4, [(1, 2, 3, 0), (2, 1, 0, 3)], name="D8")
    r, s = D8.generators
    r2 = int(D8.mul[r, r])
    P = D8.subgroup(members=sorted({0, s, r2, int(D8.mul[s, r2])}))
    assert P.order == 4
    fsys = fu.build_fusion(D8, P, 2)
    verdict, failing = fu.is_saturated(fsys)
    assert not verdict
    assert failing is not None and failing.order == 4


def test_build_fusion_rejects_non_p_group(s4):
    with pytest.raises(gr.GroupError):
        fu.build_fusion(s4, gr.sylow(s4, 2), 3)


def test_object_of_rejects_outsider(s3):
    fsys = fu.build_fusion(s3, gr.sylow(s3, 2), 2)
    with pytest.raises(gr.GroupError):
        fsys.object_of(s3.subgroup(generators=[s3.generators[1]]))


def test_fusion_report_schema(s4):
    P = gr.sylow(s4, 2)
    doc = fu.fusion_report(fu.build_fusion(s4, P, 2))
    assert set(doc) == {
        "group",
        "p",
        "P_generators",
        "P_order",
        "objects",
        "classes",
        "saturated",
        "failing_object",
    }
    assert doc["P_order"] == 8 and doc["saturated"] is True
    assert len(doc["objects"]) == 10
    assert sorted(i for cls in doc["classes"] for i in cls) == list(range(10))
