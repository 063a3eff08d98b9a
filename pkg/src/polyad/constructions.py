"""All the ways n-ary groups are built here.

Derived-from-group, Gluskin twist, inverse-Post coset construction, direct
products, idempotent groups from splitting automorphisms, and the catalog of
named example groups.  Every constructor validates its preconditions (which
prove associativity and solvability) and returns a verified NaryGroup.
"""

from __future__ import annotations

import re

from . import bingroup
from .bingroup import BinaryGroupTable
from .core import NaryGroup, NaryGroupoid
from .errors import (
    ArityMismatch,
    NotAutomorphism,
    NotCentral,
    NotCyclicQuotient,
    NotNormal,
    NotSplitting,
    FixedPointViolation,
    OrderMismatch,
    TwistViolation,
    UnknownName,
)


def derived(G: BinaryGroupTable, c, n, name=None):
    """[a_1...a_n] = a_1*...*a_n*c with c central (c = id: plain derived)."""
    if c not in G.center():
        raise NotCentral(f"element {G.labels[c]} is not central")
    mul = G.mul

    def op(args):
        v = args[0]
        for a in args[1:]:
            v = mul[v][a]
        return mul[v][c]

    g = NaryGroupoid(G.k, n, op, backing="derived", labels=G.labels,
                     associative_by_construction=True)
    g.derived_base = G
    g.derived_c = c
    return NaryGroup.verify(g, name=name or f"derived(k={G.k},n={n})")


def gluskin(G: BinaryGroupTable, beta, d, n, name=None):
    """Hosszu twist: [x_1...x_n] = x_1 * beta(x_2) * ... * beta^(n-1)(x_n) * d.

    Requires beta an automorphism of G, beta(d) = d and
    d*x = beta^(n-1)(x)*d for all x.
    """
    beta = list(beta)
    k = G.k
    if sorted(beta) != list(range(k)):
        raise NotAutomorphism("beta is not a bijection")
    mul = G.mul
    for a in range(k):
        for b in range(k):
            if beta[mul[a][b]] != mul[beta[a]][beta[b]]:
                raise NotAutomorphism(f"beta breaks product at ({a},{b})")
    if beta[d] != d:
        raise FixedPointViolation("beta(d) != d")
    powers = [list(range(k))]
    for _ in range(n - 1):
        powers.append([beta[x] for x in powers[-1]])
    bn1 = powers[n - 1]
    for x in range(k):
        if mul[d][x] != mul[bn1[x]][d]:
            raise TwistViolation(f"d*x != beta^(n-1)(x)*d at x={x}")

    def op(args):
        v = args[0]
        for i in range(1, len(args)):
            v = mul[v][powers[i][args[i]]]
        return mul[v][d]

    g = NaryGroupoid(k, n, op, backing="gluskin", labels=G.labels,
                     associative_by_construction=True)
    g.gluskin_base = G
    g.gluskin_beta = tuple(beta)
    g.gluskin_d = d
    return NaryGroup.verify(g, name=name or f"gluskin(k={k},n={n})")


def coset_construction(G: BinaryGroupTable, H, gelt, n, name=None):
    """Inverse Post theorem: the n-ary group on the coset g*H.

    H must be normal, G/H cyclic generated by g*H, and |G/H| must divide
    n-1.  The coset is re-indexed 0..|H|-1 following the order of H's
    elements; labels keep the original names.
    """
    H = frozenset(H)
    if not G.is_subgroup(H):
        raise NotNormal("H is not a subgroup")
    if not G.is_normal(H):
        raise NotNormal("H is not normal in G")
    q = G.k // len(H)
    if (n - 1) % q != 0:
        raise OrderMismatch(f"|G/H| = {q} does not divide n-1 = {n - 1}")
    # gH must generate the quotient: its q distinct coset powers cover G
    cosets = set()
    v = G.id
    for _ in range(q):
        v = G.mul[v][gelt]
        cosets.add(frozenset(G.mul[v][h] for h in H))
    if len(cosets) != q:
        raise NotCyclicQuotient("gH does not generate G/H")
    helems = sorted(H)
    carrier = [G.mul[gelt][h] for h in helems]
    pos = {a: i for i, a in enumerate(carrier)}
    mul = G.mul

    def op(args):
        v = carrier[args[0]]
        for a in args[1:]:
            v = mul[v][carrier[a]]
        return pos[v]

    g = NaryGroupoid(len(carrier), n, op, backing="coset",
                     labels=[G.labels[a] for a in carrier],
                     associative_by_construction=True)
    g.coset_base = G
    g.coset_H = H
    g.coset_rep = gelt
    g.coset_carrier = carrier
    return NaryGroup.verify(g, name=name or f"coset(k={len(carrier)},n={n})")


def direct_product(groups, name=None):
    """Componentwise n-ary group on the product carrier."""
    groups = list(groups)
    if not groups:
        raise ArityMismatch("empty product")
    n = groups[0].n
    if any(h.n != n for h in groups):
        raise ArityMismatch("factors have different arities")
    sizes = [h.k for h in groups]
    k = 1
    for s in sizes:
        k *= s

    def decode(x):
        out = []
        for s in reversed(sizes):
            out.append(x % s)
            x //= s
        return tuple(reversed(out))

    def encode(parts):
        x = 0
        for s, p in zip(sizes, parts):
            x = x * s + p
        return x

    def op(args):
        cols = [decode(a) for a in args]
        return encode(tuple(
            groups[i].op(tuple(col[i] for col in cols))
            for i in range(len(groups))
        ))

    labels = None
    if all(h.labels for h in groups):
        labels = []
        for x in range(k):
            parts = decode(x)
            labels.append("(" + ",".join(groups[i].label(p)
                                         for i, p in enumerate(parts)) + ")")
    g = NaryGroupoid(k, n, op, backing="product", labels=labels,
                     associative_by_construction=True)
    g.product_factors = groups
    g.product_decode = decode
    g.product_encode = encode
    out = NaryGroup.verify(g, name=name or "x".join(h.name for h in groups))
    # componentwise skew, per the product construction
    for x in range(k):
        parts = decode(x)
        assert out.skew(x) == encode(tuple(
            groups[i].skew(p) for i, p in enumerate(parts)))
    return out


def idempotent_from_splitting(G: BinaryGroupTable, beta, n, name=None):
    """Idempotent n-ary group from a splitting automorphism.

    Needs beta^(n-1) = id and b*beta(b)*...*beta^(n-2)(b) = e for all b;
    the operation is [x_1...x_n] = x_1*beta(x_2)*...*beta^(n-2)(x_(n-1))*x_n.
    """
    beta = list(beta)
    k = G.k
    if sorted(beta) != list(range(k)):
        raise NotAutomorphism("beta is not a bijection")
    mul = G.mul
    for a in range(k):
        for b in range(k):
            if beta[mul[a][b]] != mul[beta[a]][beta[b]]:
                raise NotAutomorphism(f"beta breaks product at ({a},{b})")
    powers = [list(range(k))]
    for _ in range(n - 2):
        powers.append([beta[x] for x in powers[-1]])
    pow_n1 = [beta[x] for x in powers[-1]]
    if pow_n1 != list(range(k)):
        raise NotSplitting("beta^(n-1) is not the identity")
    for b in range(k):
        v = b
        for i in range(1, n - 1):
            v = mul[v][powers[i][b]]
        if v != G.id:
            raise NotSplitting("splitting product is not trivial", witness=b)

    def op(args):
        v = args[0]
        for i in range(1, n - 1):
            v = mul[v][powers[i][args[i]]]
        return mul[v][args[n - 1]]

    g = NaryGroupoid(k, n, op, backing="gluskin", labels=G.labels,
                     associative_by_construction=True)
    g.gluskin_base = G
    g.gluskin_beta = tuple(beta)
    g.gluskin_d = G.id
    g.splitting = True
    out = NaryGroup.verify(g, name=name or f"idempotent(k={k},n={n})")
    for b in range(k):
        assert out.eval((b,) * n) == b, "output is not idempotent"
    return out


# -- named examples ---------------------------------------------------------


def quaternion_rusakov(n=5):
    """Rusakov's n-ary group over the quaternion group, c = a^2."""
    R = bingroup.quaternion()
    return derived(R, 2, n, name=f"Rusakov{n}")


def reflections(m):
    """Ternary group of the m-gon's reflections (coset of C_m in D_m)."""
    D = bingroup.dihedral(m)
    C = frozenset(range(m))  # rotations
    g = derived_label_fix(coset_construction(D, C, m, 3, name=f"V{m}"), m)
    return g


def derived_label_fix(group, m):
    # reflections are labelled b1..bm, matching the worked examples
    group.g.labels = [f"b{i + 1}" for i in range(m)]
    group.labels = group.g.labels
    return group


def odd_permutations(m, n=3):
    """n-ary group of odd permutations on m letters (coset of A_m)."""
    S = bingroup.symmetric(m)
    par = bingroup.symmetric_parity(m)
    A = frozenset(i for i, p in enumerate(par) if p == 0)
    t = min(i for i, p in enumerate(par) if p == 1)
    return coset_construction(S, A, t, n, name=f"T{m}" if n == 3 else f"T{m}_{n}ary")


def cyclic_nary(g, n):
    """Lemma-style cyclic n-ary group on Z_g: [b_1...b_n] = b_1+...+b_n+1."""
    Z = bingroup.cyclic(g)
    return derived(Z, 1 % g, n, name=f"Zg_cyclic({g},{n})")


_DERIVED_BASES = {
    "S3": lambda: bingroup.symmetric(3),
    "S4": lambda: bingroup.symmetric(4),
    "D3": lambda: bingroup.dihedral(3),
    "D4": lambda: bingroup.dihedral(4),
    "D5": lambda: bingroup.dihedral(5),
    "D6": lambda: bingroup.dihedral(6),
    "D7": lambda: bingroup.dihedral(7),
    "D8": lambda: bingroup.dihedral(8),
    "R": bingroup.quaternion,
}


def named_example(name):
    """Catalog lookup: T3, Rusakov5, V6/Vn(6), derived(S3,3), Zg_cyclic(5,3)..."""
    text = name.strip()
    if text == "T3":
        return odd_permutations(3)
    if text == "T5":
        return odd_permutations(5)
    if text == "Rusakov5":
        return quaternion_rusakov(5)
    if text == "B3_5ary":
        return odd_permutations(3, n=5)
    if text == "D6_ternary":
        return derived(bingroup.dihedral(6), 0, 3, name="D6_ternary")
    if text == "RxR":
        R3 = derived(bingroup.quaternion(), 0, 3, name="R_ternary")
        return direct_product([R3, R3], name="RxR")
    m = re.fullmatch(r"V(?:n\()?(\d+)\)?", text)
    if m:
        return reflections(int(m.group(1)))
    m = re.fullmatch(r"Zg(?:_cyclic)?\((\d+),(\d+)\)", text)
    if m:
        return cyclic_nary(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"derived\((\w+),(\d+)\)", text)
    if m:
        base, n = m.group(1), int(m.group(2))
        if base in _DERIVED_BASES:
            G = _DERIVED_BASES[base]()
        elif re.fullmatch(r"Z\d+", base):
            G = bingroup.cyclic(int(base[1:]))
        else:
            raise UnknownName(f"unknown base group {base!r}")
        return derived(G, G.id, n, name=f"derived({base},{n})")
    raise UnknownName(f"unknown example {name!r}")


def catalog():
    """The groups every cross-cutting audit runs over."""
    return [
        named_example("T3"),
        named_example("B3_5ary"),
        named_example("Zg_cyclic(5,3)"),
        named_example("Zg_cyclic(6,4)"),
        named_example("V6"),
        named_example("derived(S3,3)"),
        named_example("derived(Z6,4)"),
        named_example("Rusakov5"),
        named_example("derived(S3,7)"),
        named_example("D6_ternary"),
        named_example("RxR"),
        named_example("derived(S4,3)"),
        named_example("T5"),
    ]


def small_catalog(max_k=8):
    return [g for g in catalog() if g.k <= max_k]
