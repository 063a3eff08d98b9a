"""n-ary permutations: sequences f = {sigma, f_1..f_(n-1)} of bijections
f_j : A_j -> A_sigma(j), their m-ary composition, and the k-ary groups they
form when sigma^k = sigma.  Also the right-regular representation of an
n-ary group on its theta-quotients.
"""

from __future__ import annotations

import itertools

from .core import NaryGroup, NaryGroupoid
from .errors import SigmaNotIdempotentPower, SizeMismatch


class NaryPermutation:
    """sigma: permutation of 0..n-2; maps[j]: bijection A_j -> A_sigma(j).

    All the A_j share the carrier [0, q); composition applies left to
    right, matching the f*sigma convention.
    """

    __slots__ = ("sigma", "maps")

    def __init__(self, sigma, maps):
        self.sigma = tuple(sigma)
        self.maps = tuple(tuple(m) for m in maps)

    def __eq__(self, other):
        return self.sigma == other.sigma and self.maps == other.maps

    def __hash__(self):
        return hash((self.sigma, self.maps))

    def __repr__(self):
        return f"NaryPermutation(sigma={self.sigma}, maps={self.maps})"


def _perm_mul(s1, s2):
    """Left-to-right product: (s1 s2)(j) = s2(s1(j))."""
    return tuple(s2[s1[j]] for j in range(len(s1)))


def compose(fs):
    """m-ary composition g_j = f_(1,j) f_(2,sigma_1(j)) f_(3,sigma_1 sigma_2(j)) ...

    Components compose left to right; the sigma of the result is the
    left-to-right product of the factor sigmas.
    """
    fs = list(fs)
    if not fs:
        raise SizeMismatch("empty composition")
    width = len(fs[0].sigma)
    q = len(fs[0].maps[0])
    for f in fs:
        if len(f.sigma) != width or any(len(m) != q for m in f.maps):
            raise SizeMismatch("factors act on different families")
    maps = []
    for j in range(width):
        # track the running index sigma_1...sigma_(t-1)(j) per factor
        comp = list(range(q))
        pos = j
        for f in fs:
            m = f.maps[pos]
            comp = [m[x] for x in comp]
            pos = f.sigma[pos]
        maps.append(tuple(comp))
    sigma = fs[0].sigma
    for f in fs[1:]:
        sigma = _perm_mul(sigma, f.sigma)
    return NaryPermutation(sigma, maps)


def identity_like(sigma, q):
    width = len(sigma)
    return NaryPermutation(sigma, [tuple(range(q))] * width)


def all_nary_permutations(q, n, sigma):
    """S_(A_1..A_(n-1))(sigma), in deterministic lexicographic order."""
    sigma = tuple(sigma)
    width = n - 1
    if sorted(sigma) != list(range(width)):
        raise SizeMismatch("sigma must be a permutation of 0..n-2")
    bijections = list(itertools.permutations(range(q)))
    out = []
    for choice in itertools.product(bijections, repeat=width):
        out.append(NaryPermutation(sigma, choice))
    return out


def permutation_group(q, n, sigma, arity=None, verify_cap=4096):
    """The k-ary group on S_(A_1..A_(n-1))(sigma) with sigma^k = sigma.

    arity defaults to ord(sigma)+1; raises SigmaNotIdempotentPower if the
    requested arity breaks sigma^k = sigma.
    """
    sigma = tuple(sigma)
    width = n - 1
    if sorted(sigma) != list(range(width)):
        raise SizeMismatch("sigma must be a permutation of 0..n-2")
    order = _perm_order(sigma)
    k_arity = arity if arity is not None else order + 1
    if k_arity < 2 or (k_arity - 1) % order != 0:
        raise SigmaNotIdempotentPower(
            f"sigma^{k_arity} != sigma (order {order})")
    elems = all_nary_permutations(q, n, sigma)
    pos = {f: i for i, f in enumerate(elems)}

    def op(args):
        return pos[compose([elems[a] for a in args])]

    g = NaryGroupoid(len(elems), k_arity, op, backing="permutation",
                     associative_by_construction=True)
    g.perm_q = q
    g.perm_n = n
    g.perm_sigma = sigma
    g.perm_elements = elems
    mode = "full" if len(elems) ** k_arity <= verify_cap else "auto"
    return NaryGroup.verify(
        g, name=f"perm(q={q},n={n},sigma={sigma})", mode=mode)


def _perm_order(sigma):
    width = len(sigma)
    ident = tuple(range(width))
    p, m = sigma, 1
    while p != ident:
        p = _perm_mul(p, sigma)
        m += 1
    return m


def mixed_associativity_holds(fs, i, kblock):
    """Theorem-style regrouping: fold a k-block at position i and compare."""
    m = len(fs)
    if not (0 <= i and i + kblock <= m):
        raise ValueError("block out of range")
    inner = compose(fs[i:i + kblock])
    return compose(fs) == compose(fs[:i] + [inner] + fs[i + kblock:])


# -- right-regular representation ------------------------------------------------


def right_shift(group, c):
    """r_c on the theta-quotients: class (i,v) -> class of the word plus c.

    The quotient A_i is coordinatized by canonical values, so each
    component map is a bijection of [0, k).
    """
    g = group
    n, k = g.n, g.k
    sigma = tuple(list(range(1, n - 1)) + [0])  # cyclic 1->2->...->1
    maps = []
    for i in range(1, n):
        comp = []
        for v in range(k):
            word = g.class_representative(i, v) + (c,)
            r, value = g.canonical(word)
            assert r == i % (n - 1) + 1
            comp.append(value)
        maps.append(tuple(comp))
    return NaryPermutation(sigma, maps)


def regular_embedding_check(group):
    """Every n-ary group embeds in the n-ary group of its right shifts:
    c -> r_c is injective and h(r_(c_1)..r_(c_n)) = r_([c_1..c_n]).
    """
    g = group
    shifts = {c: right_shift(g, c) for c in g.elements}
    assert len({shifts[c] for c in g.elements}) == g.k, "embedding not injective"
    n = g.n
    # exhaustively for tiny carriers, first slice otherwise
    words = itertools.product(g.elements, repeat=n)
    limit = 2000 if g.k**n > 2000 else None
    for count, word in enumerate(words):
        if limit is not None and count >= limit:
            break
        lhs = compose([shifts[c] for c in word])
        assert lhs == shifts[g.eval(word)], f"shift composition fails at {word}"
    return True
