"""Exact finite-group arithmetic on fully enumerated element tables.

Element ids are 0..order-1 with 0 the identity; enumeration order is the
breadth-first closure of the listed generators, which makes every derived
object (subgroups, transversals, reports) reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np


DEFAULT_MAX_ORDER = 10000


class GroupError(ValueError):
    pass


def _max_order():
    return int(os.environ.get("SCOTTLAB_MAX_GROUP_ORDER", DEFAULT_MAX_ORDER))


class FiniteGroup:
    """A finite group as a multiplication table plus a generator list."""

    def __init__(self, mul, generators, name="G", perms=None, check=True):
        self.mul = np.asarray(mul, dtype=np.int32)
        self.order = self.mul.shape[0]
        self.generators = [int(g) for g in generators]
        self.name = name
        self.perms = perms
        if check:
            self._validate()
        self.inv = np.empty(self.order, dtype=np.int32)
        for x in range(self.order):
            row = np.nonzero(self.mul[x] == 0)[0]
            if len(row) != 1:
                raise GroupError("not a group: missing or non-unique inverse")
            self.inv[x] = row[0]
        self._orders = None
        self._whole = None

    def _validate(self):
        n = self.order
        if self.mul.shape != (n, n):
            raise GroupError("multiplication table is not square")
        if np.any(self.mul < 0) or np.any(self.mul >= n):
            raise GroupError("table entries out of range")
        if not (np.array_equal(self.mul[0], np.arange(n)) and np.array_equal(self.mul[:, 0], np.arange(n))):
            raise GroupError("element 0 is not a two-sided identity")
        if self.perms is None:
            # associativity only needs checking for raw table input
            if n > 512:
                raise GroupError("table too large for associativity check")
            M = self.mul.astype(np.int64)
            left = M[M[:, :, None], np.arange(n)[None, None, :]]
            right = M[np.arange(n)[:, None, None], M[None, :, :]]
            if not np.array_equal(left, right):
                raise GroupError("multiplication table is not associative")
        # generators must generate
        if len(closure_members(self, self.generators)) != n:
            raise GroupError("generators do not generate the group")

    # -- basic arithmetic --------------------------------------------------

    def conj(self, g, x):
        """g x g^{-1}."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def element_order(self, x):
        if self._orders is None:
            self._orders = np.zeros(self.order, dtype=np.int32)
        if self._orders[x] == 0:
            k, y = 1, x
            while y != 0:
                y = int(self.mul[y, x])
                k += 1
            self._orders[x] = k
        return int(self._orders[x])

    def whole(self):
        if self._whole is None:
            self._whole = Subgroup(self, tuple(range(self.order)), tuple(self.generators))
        return self._whole

    def subgroup(self, generators=None, members=None, name=None):
        if members is not None:
            members = tuple(sorted(int(m) for m in set(members)))
            gens = _greedy_generators(self, members)
            return Subgroup(self, members, gens, name=name)
        members = closure_members(self, generators)
        return Subgroup(self, members, tuple(int(g) for g in generators), name=name)

    def trivial_subgroup(self):
        return Subgroup(self, (0,), ())

    @classmethod
    def from_permutations(cls, degree, gens, name="G", check=True):
        """BFS closure of permutation generators (images 0-based, full length)."""
        idgen = tuple(range(degree))
        perms = []
        for g in gens:
            g = tuple(int(i) for i in g)
            if sorted(g) != list(range(degree)):
                raise GroupError(f"not a permutation of 0..{degree - 1}: {g}")
            perms.append(g)
        elems = [idgen]
        index = {idgen: 0}
        frontier = [idgen]
        bound = _max_order()
        while frontier:
            nxt = []
            for x in frontier:
                for g in perms:
                    y = tuple(x[g[i]] for i in range(degree))  # x*g: apply g first
                    if y not in index:
                        index[y] = len(elems)
                        elems.append(y)
                        nxt.append(y)
                        if len(elems) > bound:
                            raise GroupError(f"group order exceeds bound {bound}")
            frontier = nxt
        n = len(elems)
        mul = np.empty((n, n), dtype=np.int32)
        for a, pa in enumerate(elems):
            for b, pb in enumerate(elems):
                mul[a, b] = index[tuple(pa[pb[i]] for i in range(degree))]
        generators = [index[g] for g in perms]
        return cls(mul, generators, name=name, perms=elems, check=check)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def closure_members(G, generators):
    """Members of <generators>, sorted."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = int(G.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def _greedy_generators(G, members):
    gens = []
    have = {0}
    for x in members:
        if x not in have:
            gens.append(x)
            have = set(closure_members(G, gens))
            if len(have) == len(members):
                break
    if len(have) != len(members):
        raise GroupError("member set is not closed (not a subgroup)")
    return tuple(gens)


class Subgroup:
    """A subgroup of a FiniteGroup as a sorted member tuple with generators."""

    def __init__(self, parent, members, generators, name=None):
        self.parent = parent
        self.members = tuple(members)
        self.generators = tuple(generators)
        self.name = name
        self.member_set = frozenset(members)
        self.order = len(members)
        if 0 not in self.member_set:
            raise GroupError("subgroup must contain the identity")
        if parent.order % self.order != 0:
            raise GroupError("Lagrange violation: order does not divide |G|")
        self._words = None

    def __contains__(self, x):
        return x in self.member_set

    def contains_subgroup(self, other):
        return other.member_set <= self.member_set

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        nm = self.name or f"<{','.join(map(str, self.generators))}>"
        return f"Subgroup({nm}, order={self.order})"

    def words(self):
        """BFS factorization of each member as a product of self.generators."""
        if self._words is None:
            G = self.parent
            words = {0: ()}
            frontier = [0]
            while frontier:
                nxt = []
                for x in frontier:
                    for i, g in enumerate(self.generators):
                        y = int(G.mul[x, g])
                        if y not in words:
                            words[y] = words[x] + (i,)
                            nxt.append(y)
                frontier = nxt
            if len(words) != self.order:
                raise GroupError("generators do not generate the subgroup")
            self._words = words
        return self._words

    def is_p_group(self, p):
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def is_normal(self):
        G = self.parent
        return all(G.conj(g, h) in self.member_set for g in G.generators for h in self.generators)


# -- subgroup operations ---------------------------------------------------


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    mem = []
    for g in range(G.order):
        if all(G.conj(g, h) in H.member_set for h in H.generators):
            mem.append(g)
    return G.subgroup(members=mem)


def centralizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    mem = []
    for g in range(G.order):
        if all(G.mul[g, h] == G.mul[h, g] for h in H.generators):
            mem.append(g)
    return G.subgroup(members=mem)


def local_subgroups(G, H):
    """(normalizer, centralizer); the centralizer is normal in the normalizer."""
    N, C = normalizer(G, H), centralizer(G, H)
    assert all(G.conj(n, c) in C.member_set for n in N.generators for c in C.generators)
    return N, C


def conjugate_subgroup(G, g, H) -> Subgroup:
    return G.subgroup(members=[G.conj(g, h) for h in H.members])


def core(G: FiniteGroup, P: Subgroup) -> Subgroup:
    inter = set(P.members)
    for g in range(G.order):
        inter &= {G.conj(g, h) for h in P.members}
        if len(inter) == 1:
            break
    result = G.subgroup(members=sorted(inter))
    assert result.is_normal() and P.contains_subgroup(result)
    return result


def p_part(n, p):
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    target = p_part(G.order, p)
    if target == 1:
        return G.trivial_subgroup()
    members = {0}
    gens = []
    grew = True
    while len(members) < target and grew:
        grew = False
        for x in range(1, G.order):
            if x in members:
                continue
            if G.element_order(x) % p != 0 or p_part(G.element_order(x), p) != G.element_order(x):
                continue
            cand = closure_members(G, gens + [x])
            if p_part(len(cand), p) == len(cand):
                gens.append(x)
                members = set(cand)
                grew = True
                if len(members) == target:
                    break
    if len(members) != target:
        raise GroupError("Sylow search failed")  # pragma: no cover
    S = G.subgroup(members=sorted(members))
    # deterministic choice: lexicographically least member tuple among conjugates
    best = S.members
    for g in range(G.order):
        cand = tuple(sorted(G.conj(g, h) for h in S.members))
        if cand < best:
            best = cand
    return G.subgroup(members=best)


def is_subconjugate(G, H1: Subgroup, H2: Subgroup):
    """True iff some G-conjugate of H1 lies in H2; returns (bool, witness g)."""
    if H2.order % H1.order != 0:
        return False, None
    for g in range(G.order):
        if all(G.conj(g, h) in H2.member_set for h in H1.generators):
            return True, g
    return False, None


def conjugacy_equal(G, H1, H2):
    return H1.order == H2.order and is_subconjugate(G, H1, H2)[0]


def double_cosets(G, H: Subgroup, K: Subgroup):
    """Minimal representatives of H\\G/K, in id order."""
    seen = np.zeros(G.order, dtype=bool)
    reps = []
    sizes = []
    for g in range(G.order):
        if seen[g]:
            continue
        reps.append(g)
        orbit = {int(G.mul[G.mul[h, g], k]) for h in H.members for k in K.members}
        sizes.append(len(orbit))
        for x in orbit:
            seen[x] = True
    assert sum(sizes) == G.order
    return reps


def left_transversal(G, H: Subgroup):
    """Minimal coset representatives of G/H, identity coset first."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for h in H.members:
            coset_of[int(G.mul[g, h])] = idx
    return reps, coset_of


def element_conjugacy_classes(G):
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cls = sorted({G.conj(g, x) for g in range(G.order)})
        for y in cls:
            seen[y] = True
        classes.append(cls)
    return classes


def all_subgroups(G, H: Subgroup):
    """All subgroups of H (exhaustive; intended for small p-groups)."""
    found = {(0,): G.trivial_subgroup()}
    frontier = [(0,)]
    while frontier:
        nxt = []
        for mem in frontier:
            base = found[mem]
            for x in H.members:
                if x in base.member_set:
                    continue
                cand = closure_members(G, list(base.generators) + [x])
                if set(cand) <= H.member_set and cand not in found:
                    found[cand] = G.subgroup(members=cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.members))


def maximal_subgroups_of_p_group(G, P: Subgroup, p):
    """Maximal (index-p) subgroups of the p-group P."""
    return [S for S in all_subgroups(G, P) if S.order * p == P.order]


def subgroup_conjugacy_classes(G, subs):
    """Partition a list of subgroups into G-conjugacy classes (min-rep first)."""
    remaining = list(subs)
    classes = []
    while remaining:
        H = remaining.pop(0)
        orbit = {H.members}
        for g in range(G.order):
            orbit.add(tuple(sorted(G.conj(g, h) for h in H.members)))
        cls = [H] + [S for S in remaining if S.members in orbit]
        remaining = [S for S in remaining if S.members not in orbit]
        cls.sort(key=lambda s: s.members)
        classes.append(cls)
    classes.sort(key=lambda c: (c[0].order, c[0].members))
    return classes


def p_subgroup_class_reps(G, p):
    """One representative per G-conjugacy class of p-subgroups (incl. trivial)."""
    P0 = sylow(G, p)
    classes = subgroup_conjugacy_classes(G, all_subgroups(G, P0))
    return [c[0] for c in classes]


def normal_closure(G, members):
    gens = set(members)
    for x in list(gens):
        for g in range(G.order):
            gens.add(G.conj(g, x))
    return G.subgroup(members=closure_members(G, sorted(gens)))


# -- quotient / reindexed groups -------------------------------------------


def as_group(G, H: Subgroup, check=False):
    """H reindexed as a standalone FiniteGroup.

    Returns (K, to_new, from_new): to_new maps parent ids to K ids (-1 off H),
    from_new maps K ids back.  Element order follows a BFS over H's
    generators so K's id 0 is the identity and enumeration is deterministic.
    """
    words = H.words()
    order_by_bfs = sorted(H.members, key=lambda x: (len(words[x]), words[x]))
    from_new = np.array(order_by_bfs, dtype=np.int64)
    to_new = np.full(G.order, -1, dtype=np.int64)
    for i, x in enumerate(from_new):
        to_new[x] = i
    mul = to_new[G.mul[np.ix_(from_new, from_new)]].astype(np.int32)
    gens = [int(to_new[g]) for g in H.generators]
    K = FiniteGroup(mul, gens, name=f"{G.name}|{H!r}", perms=(), check=check)
    return K, to_new, from_new


def quotient_group(G, N: Subgroup, check=False):
    """G/N for normal N.  Returns (Q, proj) with proj: element id -> coset id."""
    if not N.is_normal():
        raise GroupError("quotient by a non-normal subgroup")
    reps, coset_of = left_transversal(G, N)
    proj = coset_of
    k = len(reps)
    mul = np.empty((k, k), dtype=np.int32)
    for a, ra in enumerate(reps):
        mul[a] = proj[G.mul[ra, reps]]
    gens = []
    seen = set()
    for g in G.generators:
        c = int(proj[g])
        if c != 0 and c not in seen:
            seen.add(c)
            gens.append(c)
    if not gens and k == 1:
        gens = []
    Q = FiniteGroup(mul, gens, name=f"{G.name}/N{N.order}", perms=(), check=check)
    return Q, proj


# -- Frobenius p-nilpotency report ------------------------------------------


@dataclass
class FrobeniusReport:
    c1: bool
    c2: bool
    c3: bool
    complement: Subgroup | None = None
    failing_subgroup: Subgroup | None = None


def has_normal_p_complement(G, H: Subgroup, p):
    """Normal p-complement of the subgroup H, or None.

    If one exists it is exactly the set of p'-elements of H, so the test is
    a closure check on that set.
    """
    pp = p_part(H.order, p)
    prime_elems = sorted(x for x in H.members if G.element_order(x) % p != 0)
    if len(prime_elems) * pp != H.order:
        return None
    s = set(prime_elems)
    idx = np.array(prime_elems, dtype=np.int64)
    products = G.mul[np.ix_(idx, idx)]
    if not all(int(y) in s for y in np.unique(products)):
        return None
    # closed, contains 1, finite => subgroup; conjugation-invariant since
    # conjugates of p'-elements are p'-elements, so it is normal in H
    return G.subgroup(members=prime_elems)


def frobenius_report(G, p) -> FrobeniusReport:
    """The three equivalent conditions of the normal p-complement theorem.

    c1: G has a normal p-complement; c2: every p-local subgroup N_G(Q)
    (Q a nontrivial p-subgroup) has one; c3: N_G(Q)/C_G(Q) is a p-group for
    every p-subgroup Q.  Computed independently of each other.
    """
    comp = has_normal_p_complement(G, G.whole(), p)
    c1 = comp is not None
    reps = p_subgroup_class_reps(G, p)
    c2 = True
    c3 = True
    failing = None
    for Q in reps:
        N, C = normalizer(G, Q), centralizer(G, Q)
        if Q.order > 1 and has_normal_p_complement(G, N, p) is None:
            c2 = False
            failing = failing or Q
        if p_part(N.order // C.order, p) != N.order // C.order:
            c3 = False
            failing = failing or Q
    return FrobeniusReport(c1, c2, c3, complement=comp, failing_subgroup=failing)


# -- group-spec documents ----------------------------------------------------


def load_group(spec: dict) -> FiniteGroup:
    """Build a FiniteGroup from a group-spec JSON document."""
    name = spec.get("name", "G")
    kind = spec.get("kind")
    if kind == "perm":
        degree = int(spec["degree"])
        gens = [[int(i) - 1 for i in g] for g in spec["generators"]]  # 1-based images
        return FiniteGroup.from_permutations(degree, gens, name=name)
    if kind == "table":
        table = np.asarray(spec["table"], dtype=np.int32)
        gens = spec.get("generators")
        if gens is None:
            gens = list(range(1, table.shape[0]))  # all non-identity elements
        return FiniteGroup(table, gens, name=name)
    raise GroupError(f"unknown group-spec kind {kind!r}")


def subgroup_from_spec(G: FiniteGroup, gens_spec) -> Subgroup:
    """Subgroup-spec: a list of generator element ids."""
    gens = [int(g) for g in gens_spec]
    for g in gens:
        if not 0 <= g < G.order:
            raise GroupError(f"generator id {g} out of range")
    return G.subgroup(generators=gens)
