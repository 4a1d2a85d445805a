"""The fusion system F_P(G): conjugation morphisms, full normalization,
and the saturation decision (fully automized + receptive axioms)."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groups as gr

MAX_OBJECTS = 512


@dataclass
class Morphism:
    """A conjugation-induced injection Q -> R, stored as an explicit value map."""

    source: int  # object index
    target: int
    images: tuple  # images of the source's sorted members, in order
    witness: int  # a g in G inducing the map


@dataclass
class FusionSystem:
    G: gr.FiniteGroup
    P: gr.Subgroup
    p: int
    objects: list
    index: dict  # members tuple -> object index
    morphisms: dict  # (i, j) -> list[Morphism]
    classes: list = field(default_factory=list)  # F-isomorphism classes (index lists)

    def object_of(self, Q):
        i = self.index.get(Q.members)
        if i is None:
            raise gr.GroupError("subgroup is not an object of the fusion system")
        return i

    def value_map(self, m: Morphism):
        src = self.objects[m.source]
        return dict(zip(src.members, m.images))

    def autos(self, i):
        """Aut_F(Q) as a list of image tuples (all endomorphisms are isos)."""
        return [m.images for m in self.morphisms[(i, i)]]

    def p_autos(self, i):
        """Aut_P(Q): the maps induced by N_P(Q)."""
        G, Q = self.G, self.objects[i]
        out = set()
        for x in self.P.members:
            if all(G.conj(x, q) in Q.member_set for q in Q.generators):
                out.add(tuple(G.conj(x, q) for q in Q.members))
        return out


def build_fusion(G, P, p) -> FusionSystem:
    """Enumerate the objects (subgroups of P) and all Hom_G(Q, R)."""
    if not P.is_p_group(p):
        raise gr.GroupError("fusion system needs a p-subgroup")
    objects = gr.all_subgroups(G, P)
    if len(objects) > MAX_OBJECTS:
        raise gr.GroupError(f"too many objects ({len(objects)} > {MAX_OBJECTS})")
    index = {Q.members: i for i, Q in enumerate(objects)}
    morphisms = {}
    for i, Q in enumerate(objects):
        for j, R in enumerate(objects):
            if R.order % Q.order:
                morphisms[(i, j)] = []
                continue
            seen = {}
            for g in range(G.order):
                if all(G.conj(g, q) in R.member_set for q in Q.generators):
                    images = tuple(G.conj(g, q) for q in Q.members)
                    if images not in seen:
                        seen[images] = Morphism(i, j, images, g)
            morphisms[(i, j)] = list(seen.values())
    fsys = FusionSystem(G, P, p, objects, index, morphisms)
    fsys.classes = _iso_classes(fsys)
    _verify_morphisms(fsys)
    return fsys


def _iso_classes(fsys):
    n = len(fsys.objects)
    remaining = list(range(n))
    classes = []
    while remaining:
        i = remaining.pop(0)
        Qi = fsys.objects[i]
        cls = [i]
        rest = []
        for j in remaining:
            if fsys.objects[j].order == Qi.order and fsys.morphisms[(i, j)]:
                cls.append(j)
            else:
                rest.append(j)
        remaining = rest
        classes.append(cls)
    return classes


def _verify_morphisms(fsys):
    """Every morphism is injective and its witness reproduces the map."""
    G = fsys.G
    for (i, _j), ms in fsys.morphisms.items():
        src = fsys.objects[i]
        for m in ms:
            assert len(set(m.images)) == len(m.images), "morphism not injective"
            assert all(
                G.conj(m.witness, q) == im for q, im in zip(src.members, m.images)
            ), "witness does not induce the stored map"


def is_fully_normalized(fsys: FusionSystem, Q) -> bool:
    """|N_P(Q)| maximal across the F-isomorphism class of Q."""
    i = fsys.object_of(Q)
    mine = _np_order(fsys, i)
    cls = next(c for c in fsys.classes if i in c)
    return all(mine >= _np_order(fsys, j) for j in cls)


def _np_order(fsys, i):
    G, Q = fsys.G, fsys.objects[i]
    return sum(
        1
        for x in fsys.P.members
        if all(G.conj(x, q) in Q.member_set for q in Q.generators)
    )


def is_fully_automized(fsys: FusionSystem, i) -> bool:
    """Aut_P(Q) is a Sylow p-subgroup of Aut_F(Q)."""
    aut = len(fsys.autos(i))
    autp = len(fsys.p_autos(i))
    return autp == gr.p_part(aut, fsys.p)


def is_receptive(fsys: FusionSystem, i) -> bool:
    """Every F-isomorphism onto Q extends over its N_phi."""
    G = fsys.G
    Q = fsys.objects[i]
    autp = fsys.p_autos(i)
    cls = next(c for c in fsys.classes if i in c)
    for j in cls:
        Qp = fsys.objects[j]
        for m in fsys.morphisms[(j, i)]:
            if len(m.images) != Q.order or set(m.images) != Q.member_set:
                continue  # not an isomorphism onto Q
            phi = dict(zip(Qp.members, m.images))
            phi_inv = {v: k for k, v in phi.items()}
            # N_phi = {x in N_P(Q') : phi c_x phi^{-1} in Aut_P(Q)}
            nphi = []
            for x in fsys.P.members:
                if not all(G.conj(x, q) in Qp.member_set for q in Qp.generators):
                    continue
                conj_map = tuple(phi[G.conj(x, phi_inv[t])] for t in Q.members)
                if conj_map in autp:
                    nphi.append(x)
            Nphi = G.subgroup(members=nphi)
            if not _extends(fsys, phi, Qp, Nphi):
                return False
    return True


def _extends(fsys, phi, Qp, Nphi):
    """Some h in G conjugates Nphi into P and agrees with phi on Q'."""
    G, P = fsys.G, fsys.P
    for h in range(G.order):
        if all(G.conj(h, q) == phi[q] for q in Qp.generators) and all(
            G.conj(h, x) in P.member_set for x in Nphi.generators
        ):
            return True
    return False


def is_saturated(fsys: FusionSystem):
    """(verdict, failing_object_or_None): some fully normalized member of
    every class must be fully automized and receptive."""
    for cls in fsys.classes:
        fn = [i for i in cls if is_fully_normalized(fsys, fsys.objects[i])]
        assert fn, "no fully normalized member in an isomorphism class"
        if not any(is_fully_automized(fsys, i) and is_receptive(fsys, i) for i in fn):
            return False, fsys.objects[fn[0]]
    return True, None


def fusion_report(fsys: FusionSystem) -> dict:
    verdict, failing = is_saturated(fsys)
    return {
        "group": fsys.G.name,
        "p": fsys.p,
        "P_generators": list(fsys.P.generators),
        "P_order": fsys.P.order,
        "objects": [
            {
                "generators": list(Q.generators),
                "order": Q.order,
                "fully_normalized": is_fully_normalized(fsys, Q),
            }
            for Q in fsys.objects
        ],
        "classes": [list(c) for c in fsys.classes],
        "saturated": verdict,
        "failing_object": list(failing.generators) if failing is not None else None,
    }
