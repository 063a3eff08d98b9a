"""The universal covering group A* and its machinery.

Cover elements are the theta-classes of nonempty words, encoded as pairs
(residue, value) with residue in 1..n-1; id = (residue-1)*k + value.  The
grading A^(i), the correspondent subgroup A_0, subgroup embeddings B*(A) and
B_0(A), index correspondences and the quotient isomorphism all live here.
"""

from __future__ import annotations

from .bingroup import BinaryGroupTable
from .errors import NotInvariant, NotSubgroup


class PostCover:
    """A* as a concrete finite group of order k*(n-1)."""

    def __init__(self, group):
        g = group
        self.group = g
        self.base = g.base
        k, n = g.k, g.n
        self.k = k
        self.n = n
        self.order = k * (n - 1)
        base = g.base
        # multiplication via theta-canonicalization of concatenated reps
        reps = {}
        for i in range(1, n):
            for v in range(k):
                reps[(i, v)] = g.class_representative(i, v)
        mul = [[0] * self.order for _ in range(self.order)]
        for (i1, v1), w1 in reps.items():
            row = mul[(i1 - 1) * k + v1]
            for (i2, v2), w2 in reps.items():
                r, v = g.canonical(w1 + w2)
                row[(i2 - 1) * k + v2] = (r - 1) * k + v
        labels = [
            f"th({g.label(reps[(i, v)][0])};{i})"
            for i in range(1, n) for v in range(k)
        ]
        self.binary = BinaryGroupTable(mul, labels=labels)
        self.mul = self.binary.mul
        self.id = self.binary.id
        self.inv = self.binary.inv
        self._theta = [self.elem_id(1, g._f[a]) for a in range(k)]
        self._theta_inv = {e: a for a, e in enumerate(self._theta)}

    # -- coordinates -----------------------------------------------------

    def elem_id(self, residue, value):
        return (residue - 1) * self.k + value

    def residue(self, e):
        return e // self.k + 1

    def value(self, e):
        return e % self.k

    def theta(self, a):
        """Embedding A -> A^(1)."""
        return self._theta[a]

    def theta_word(self, word):
        r, v = self.group.canonical(word)
        return self.elem_id(r, v)

    def level(self, i):
        """A^(i) as a set of cover element ids."""
        return frozenset(range((i - 1) * self.k, i * self.k))

    def correspondent(self):
        """A_0 = A^(n-1)."""
        return self.level(self.n - 1)

    def pullback(self, elems):
        """Elements of A whose theta-image lies in `elems`."""
        return frozenset(
            self._theta_inv[e] for e in elems if e in self._theta_inv
        )

    def closure(self, elems):
        return self.binary.closure(elems)

    def subgroup_generated_by(self, M):
        """Carrier of the n-ary subgroup generated by M, via the cover.

        <<M>> = {x : theta(x) in <theta(M)>}; the closure of theta(M) in the
        finite group A* needs products only.
        """
        H = self.closure({self._theta[m] for m in M})
        return self.pullback(H)

    def is_nary_subgroup(self, S):
        S = frozenset(S)
        return bool(S) and self.subgroup_generated_by(S) == S

    def star(self, B):
        """B*(A): the subgroup of A* carried by an n-ary subgroup B."""
        return self.closure({self._theta[b] for b in B})


def build_cover(group):
    cover = PostCover(group)
    # structural invariants of the cover (Post coset theorem)
    assert cover.binary.k == group.k * (group.n - 1)
    A0 = cover.correspondent()
    assert cover.binary.is_subgroup(A0) and cover.binary.is_normal(A0)
    Q, proj = cover.binary.quotient(A0)
    assert Q.k == group.n - 1
    assert _is_cyclic_generated_by(Q, proj[cover.theta(group.base)])
    # theta is injective and multiplicative
    n = group.n
    probe = [(a,) * n for a in group.elements]
    for word in probe:
        lhs = cover.theta(group.eval(word))
        rhs = word[0]
        acc = cover.theta(rhs)
        for a in word[1:]:
            acc = cover.mul[acc][cover.theta(a)]
        assert lhs == acc
    return cover


def _is_cyclic_generated_by(Q, q):
    seen = {Q.id}
    v = Q.id
    for _ in range(Q.k):
        v = Q.mul[v][q]
        seen.add(v)
    return len(seen) == Q.k


def correspondent_group(cover):
    """A_0 as a re-indexed binary group; quotient A*/A_0 is checked cyclic."""
    A0 = cover.correspondent()
    sub = cover.binary.subgroup_table(A0)
    assert sub.k == cover.k
    return sub


class EmbeddedSubgroup:
    def __init__(self, B, star, zero):
        self.B = frozenset(B)
        self.star = frozenset(star)
        self.zero = frozenset(zero)


def embed_subgroup(cover, B):
    """B*(A) and B_0(A) for an n-ary subgroup B of the source."""
    B = frozenset(B)
    if not cover.is_nary_subgroup(B):
        raise NotSubgroup("B is not an n-ary subgroup")
    star = cover.star(B)
    zero = star & cover.correspondent()
    assert len(star) == len(B) * (cover.n - 1)
    assert len(zero) == len(B)
    assert cover.binary.is_subgroup(star)
    return EmbeddedSubgroup(B, star, zero)


def index_correspondence(cover, B):
    """|A:B| = |A_0:B_0(A)| = |A*:B*(A)| plus the coset bijections."""
    from .subgroups import coset_decomposition

    emb = embed_subgroup(cover, B)
    g = cover.group
    left = coset_decomposition(g, emb.B, "left")
    index = len(left.cosets)
    idx_star = cover.order // len(emb.star)
    idx_zero = cover.k // len(emb.zero)
    assert index == idx_star == idx_zero, (index, idx_star, idx_zero)

    # Theorem 6.2.1: level-k decomposition by theta(x_i b_1..b_(k-1)) B_0(A)
    bs = sorted(emb.B)
    zero = emb.zero
    for lvl in range(1, cover.n):
        pieces = []
        for rep in left.reps:
            word = (rep,) + tuple(bs[0] for _ in range(lvl - 1))
            t = cover.theta_word(word)
            pieces.append(frozenset(cover.mul[t][z] for z in zero))
        seen = set()
        for piece in pieces:
            assert not (piece & seen)
            seen |= piece
        assert seen == cover.level(lvl)

    # Theorem 6.3.1: A* decomposes into theta(x_i) B*(A)
    star = emb.star
    seen = set()
    for rep in left.reps:
        t = cover.theta(rep)
        piece = frozenset(cover.mul[t][s] for s in star)
        assert not (piece & seen)
        seen |= piece
    assert len(seen) == cover.order
    return {
        "index": index,
        "index_star": idx_star,
        "index_zero": idx_zero,
        "B": emb.B,
        "star_order": len(emb.star),
        "zero_order": len(emb.zero),
    }


def quotient_isomorphism(cover, B):
    """Explicit isomorphism A*/B*(A) -> A_0/B_0(A) for invariant B.

    The map phi: theta(x_i) B*(A) -> theta(x_i b_1...b_(n-2)) B_0(A) is
    built and checked to be a bijective homomorphism.
    """
    from .subgroups import check_normality, coset_decomposition

    g = cover.group
    if not check_normality(g, B, "invariant"):
        raise NotInvariant("B is not invariant in the source group")
    emb = embed_subgroup(cover, B)
    star, zero = emb.star, emb.zero
    binary = cover.binary
    assert binary.is_normal(star)
    A0 = binary.subgroup_table(cover.correspondent())
    a0_elems = sorted(cover.correspondent())
    a0_pos = {e: i for i, e in enumerate(a0_elems)}
    zero_in_A0 = frozenset(a0_pos[e] for e in zero)
    assert A0.is_normal(zero_in_A0)

    left = coset_decomposition(g, emb.B, "left")
    bs = tuple(sorted(emb.B))
    pad = tuple(bs[0] for _ in range(cover.n - 2))

    def star_coset(x):
        t = cover.theta(x)
        return frozenset(cover.mul[t][s] for s in star)

    def zero_coset(x):
        t = cover.theta_word((x,) + pad)
        return frozenset(cover.mul[t][z] for z in zero)

    phi = {star_coset(rep): zero_coset(rep) for rep in left.reps}
    assert len(phi) == len(left.reps)
    assert len(set(map(frozenset, phi.values()))) == len(left.reps)

    # homomorphism: phi(U)phi(V) = phi(UV) coset-wise
    coset_of = {}
    for u, img in phi.items():
        for e in u:
            coset_of[e] = u
    for u in phi:
        for v in phi:
            ru, rv = min(u), min(v)
            prod = coset_of[cover.mul[ru][rv]]
            img = frozenset(
                cover.mul[a][b] for a in phi[u] for b in phi[v]
            )
            assert img == phi[prod]
    return phi
