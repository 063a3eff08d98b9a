"""Finite binary groups as validated Cayley tables.

Everything downstream (Gluskin inputs, Post covers, retracts, quotients)
reduces to this representation, so it is validated eagerly: garbage in is
rejected, never propagated.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import NotGroup, NotSubgroup


def _parity(perm):
    # inversion count mod 2
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return inv & 1


class BinaryGroupTable:
    """A finite group given by its multiplication table.

    Elements are dense indices 0..k-1; `labels` keeps human names for
    pretty-printing.  The table is validated on construction (closure,
    associativity, identity, inverses).
    """

    def __init__(self, mul, labels=None, check=True):
        self.k = len(mul)
        self.mul = [list(row) for row in mul]
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.k)]
        if check:
            self._validate()
        self.id = self._find_identity()
        self.inv = self._find_inverses()

    # -- validation ---------------------------------------------------

    def _validate(self):
        import numpy as np

        k = self.k
        if k < 1:
            raise NotGroup("empty carrier")
        for row in self.mul:
            if len(row) != k or any(not (0 <= v < k) for v in row):
                raise NotGroup("table is not closed over [0,k)")
        M = np.asarray(self.mul, dtype=np.int64)
        left = M[M]            # left[a,b,c]  = (a*b)*c
        right = M[:, M]        # right[a,b,c] = a*(b*c)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)[0]
            raise NotGroup("not associative", witness=tuple(int(x) for x in bad))
        rng = np.arange(k)
        if not (np.array_equal(np.sort(M, axis=1), np.tile(rng, (k, 1)))
                and np.array_equal(np.sort(M, axis=0), np.tile(rng[:, None], (1, k)))):
            raise NotGroup("translations are not bijective")

    def _find_identity(self):
        for e in range(self.k):
            if all(self.mul[e][a] == a and self.mul[a][e] == a for a in range(self.k)):
                return e
        raise NotGroup("no identity element")

    def _find_inverses(self):
        inv = [0] * self.k
        for a in range(self.k):
            for b in range(self.k):
                if self.mul[a][b] == self.id:
                    inv[a] = b
                    break
            else:
                raise NotGroup("missing inverse", witness=a)
        return inv

    # -- basics ---------------------------------------------------------

    def __len__(self):
        return self.k

    def __eq__(self, other):
        return isinstance(other, BinaryGroupTable) and self.mul == other.mul

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.mul))

    def prod(self, seq):
        it = iter(seq)
        v = next(it)
        for x in it:
            v = self.mul[v][x]
        return v

    def power(self, a, m):
        if m < 0:
            return self.power(self.inv[a], -m)
        v = self.id
        for _ in range(m):
            v = self.mul[v][a]
        return v

    def element_order(self, a):
        v, m = a, 1
        while v != self.id:
            v = self.mul[v][a]
            m += 1
        return m

    def conjugate(self, a, x):
        """x * a * x^-1."""
        return self.mul[self.mul[x][a]][self.inv[x]]

    def is_abelian(self):
        return all(
            self.mul[a][b] == self.mul[b][a]
            for a in range(self.k)
            for b in range(a + 1, self.k)
        )

    def center(self):
        return frozenset(
            z for z in range(self.k)
            if all(self.mul[z][x] == self.mul[x][z] for x in range(self.k))
        )

    def exponent(self):
        m = 1
        for a in range(self.k):
            o = self.element_order(a)
            m = m * o // _gcd(m, o)
        return m

    # -- subgroups ------------------------------------------------------

    def closure(self, gens):
        """Subgroup generated by `gens` (finite, so products suffice)."""
        seen = set(gens) | {self.id}
        frontier = list(seen)
        while frontier:
            nxt = []
            for a in frontier:
                row = self.mul[a]
                for b in list(seen):
                    for c in (row[b], self.mul[b][a]):
                        if c not in seen:
                            seen.add(c)
                            nxt.append(c)
            frontier = nxt
        return frozenset(seen)

    def is_subgroup(self, S):
        S = frozenset(S)
        return bool(S) and all(self.mul[a][b] in S for a in S for b in S)

    def all_subgroups(self):
        """Every subgroup, by closure extension; sorted by (size, mask)."""
        found = {frozenset({self.id})}
        frontier = [frozenset({self.id})]
        while frontier:
            nxt = []
            for S in frontier:
                for x in range(self.k):
                    if x in S:
                        continue
                    T = self.closure(S | {x})
                    if T not in found:
                        found.add(T)
                        nxt.append(T)
            frontier = nxt
        return sorted(found, key=lambda S: (len(S), _mask(S)))

    def is_normal(self, S):
        S = frozenset(S)
        if not self.is_subgroup(S):
            raise NotSubgroup("not a subgroup")
        return all(self.conjugate(a, x) in S for a in S for x in range(self.k))

    def normalizer(self, S):
        S = frozenset(S)
        return frozenset(
            x for x in range(self.k)
            if all(self.conjugate(a, x) in S for a in S)
        )

    def centralizer(self, S):
        return frozenset(
            x for x in range(self.k)
            if all(self.mul[x][a] == self.mul[a][x] for a in S)
        )

    def right_cosets(self, S):
        S = frozenset(S)
        cosets, covered = [], set()
        for x in range(self.k):
            if x in covered:
                continue
            cs = frozenset(self.mul[a][x] for a in S)
            cosets.append((x, cs))
            covered |= cs
        return cosets

    def quotient(self, N):
        """Quotient group by a normal subgroup; returns (group, projection)."""
        if not self.is_normal(N):
            raise NotSubgroup("subgroup is not normal")
        cosets = self.right_cosets(N)
        index = {}
        for i, (_, cs) in enumerate(cosets):
            for a in cs:
                index[a] = i
        reps = [rep for rep, _ in cosets]
        mul = [[index[self.mul[a][b]] for b in reps] for a in reps]
        labels = [self.labels[r] + "N" for r in reps]
        return BinaryGroupTable(mul, labels=labels), index

    def commutator_subgroup(self, S, T):
        gens = {
            self.prod((a, b, self.inv[a], self.inv[b]))
            for a in S for b in T
        }
        return self.closure(gens)

    def derived_series(self):
        series = [frozenset(range(self.k))]
        while True:
            nxt = self.commutator_subgroup(series[-1], series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
        return series

    def lower_central_series(self):
        whole = frozenset(range(self.k))
        series = [whole]
        while True:
            nxt = self.commutator_subgroup(whole, series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
        return series

    def is_solvable(self):
        return self.derived_series()[-1] == frozenset({self.id})

    def is_nilpotent(self):
        return self.lower_central_series()[-1] == frozenset({self.id})

    def p_elements(self, p):
        out = set()
        for a in range(self.k):
            o = self.element_order(a)
            while o % p == 0:
                o //= p
            if o == 1:
                out.add(a)
        return frozenset(out)

    def sylow_subgroup(self, p):
        """The p-Sylow subgroup of a nilpotent group (unique there)."""
        if not self.is_nilpotent():
            raise NotGroup("sylow_subgroup requires a nilpotent group")
        return frozenset(self.p_elements(p))

    def hall_subgroup(self, primes):
        """The pi-Hall subgroup of a nilpotent group."""
        if not self.is_nilpotent():
            raise NotGroup("hall_subgroup requires a nilpotent group")
        primes = set(primes)
        out = set()
        for a in range(self.k):
            if set(_prime_factors(self.element_order(a))) <= primes:
                out.add(a)
        return frozenset(out)

    def subgroup_table(self, S):
        """Cayley table of a subgroup, re-indexed 0..|S|-1."""
        elems = sorted(S)
        pos = {a: i for i, a in enumerate(elems)}
        mul = [[pos[self.mul[a][b]] for b in elems] for a in elems]
        return BinaryGroupTable(mul, labels=[self.labels[a] for a in elems], check=False)

    # -- generators / isomorphisms ---------------------------------------

    def generating_set(self):
        gens = []
        span = frozenset({self.id})
        for a in sorted(range(self.k), key=lambda x: -self.element_order(x)):
            if a not in span:
                gens.append(a)
                span = self.closure(set(gens))
                if len(span) == self.k:
                    break
        return gens

    def isomorphism_to(self, other):
        """Explicit isomorphism (list image) or None.

        Backtracking on generator images; intended for orders <= 24.
        """
        if self.k != other.k:
            return None
        if sorted(self.element_order(a) for a in range(self.k)) != sorted(
            other.element_order(a) for a in range(other.k)
        ):
            return None
        gens = self.generating_set()
        orders = [self.element_order(g) for g in gens]
        words = self._words_over(gens)

        def try_images(images):
            phi = {self.id: other.id}
            for a, word in words.items():
                phi[a] = other.prod([images[i] for i in word]) if word else other.id
            if len(set(phi.values())) != self.k:
                return None
            for a in range(self.k):
                for b in range(self.k):
                    if phi[self.mul[a][b]] != other.mul[phi[a]][phi[b]]:
                        return None
            return [phi[a] for a in range(self.k)]

        candidates = [
            [b for b in range(other.k) if other.element_order(b) == o] for o in orders
        ]
        for images in itertools.product(*candidates):
            res = try_images(list(images))
            if res is not None:
                return res
        return None

    def _words_over(self, gens):
        """Express every element as a word (tuple of generator slots)."""
        words = {self.id: ()}
        frontier = [self.id]
        while frontier:
            nxt = []
            for a in frontier:
                for i, g in enumerate(gens):
                    b = self.mul[a][g]
                    if b not in words:
                        words[b] = words[a] + (i,)
                        nxt.append(b)
            frontier = nxt
        return words

    def automorphisms(self):
        """All automorphisms, by generator-image backtracking (small k)."""
        gens = self.generating_set()
        orders = [self.element_order(g) for g in gens]
        words = self._words_over(gens)
        autos = []
        candidates = [
            [b for b in range(self.k) if self.element_order(b) == o] for o in orders
        ]
        for images in itertools.product(*candidates):
            phi = {}
            for a, word in words.items():
                phi[a] = self.prod([images[i] for i in word]) if word else self.id
            if len(set(phi.values())) != self.k:
                continue
            if all(
                phi[self.mul[a][b]] == self.mul[phi[a]][phi[b]]
                for a in range(self.k) for b in range(self.k)
            ):
                autos.append([phi[a] for a in range(self.k)])
        return autos


def _mask(S):
    m = 0
    for x in S:
        m |= 1 << x
    return m


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _prime_factors(m):
    out = []
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# -- standard groups ------------------------------------------------------


@lru_cache(maxsize=None)
def cyclic(m):
    mul = [[(a + b) % m for b in range(m)] for a in range(m)]
    return BinaryGroupTable(mul, labels=[str(i) for i in range(m)])


@lru_cache(maxsize=None)
def dihedral(m):
    """Dihedral group of order 2m: rotations c^i then reflections b*c^i.

    Relations: c^m = 1, b^2 = 1, c*b = b*c^-1.
    """
    k = 2 * m

    def enc(j, i):
        return j * m + i % m

    def mulf(x, y):
        jx, ix = divmod(x, m)
        jy, iy = divmod(y, m)
        if jx == 0:
            return enc(jy, iy + ix) if jy == 0 else enc(1, iy - ix)
        return enc(1, ix + iy) if jy == 0 else enc(0, iy - ix)

    mul = [[mulf(x, y) for y in range(k)] for x in range(k)]
    labels = ["e"] + [f"c{i}" if i > 1 else "c" for i in range(1, m)]
    labels += ["b"] + [f"bc{i}" if i > 1 else "bc" for i in range(1, m)]
    return BinaryGroupTable(mul, labels=labels)


@lru_cache(maxsize=None)
def quaternion():
    """Quaternion group of order 8 as {1,a,a2,a3,b,ba,ba2,ba3}.

    Relations: a^4 = 1, a^2 = b^2, a*b = b*a^3.
    """

    def mulf(x, y):
        jx, ix = divmod(x, 4)
        jy, iy = divmod(y, 4)
        if jx == 0 and jy == 0:
            return (ix + iy) % 4
        if jx == 0:
            return 4 + (iy - ix) % 4
        if jy == 0:
            return 4 + (ix + iy) % 4
        return (iy - ix + 2) % 4

    mul = [[mulf(x, y) for y in range(8)] for x in range(8)]
    labels = ["1", "a", "a2", "a3", "b", "ba", "ba2", "ba3"]
    return BinaryGroupTable(mul, labels=labels)


@lru_cache(maxsize=None)
def symmetric(m):
    """Symmetric group on m letters; elements in lexicographic order."""
    perms = list(itertools.permutations(range(m)))
    pos = {p: i for i, p in enumerate(perms)}
    mul = [
        [pos[tuple(p[q[i]] for i in range(m))] for q in perms]
        for p in perms
    ]
    return BinaryGroupTable(mul, labels=[_cycle_label(p) for p in perms])


def symmetric_parity(m):
    """Parity (0 even / 1 odd) of each element of symmetric(m)."""
    return [_parity(p) for p in itertools.permutations(range(m))]


def alternating_set(m):
    par = symmetric_parity(m)
    return frozenset(i for i, p in enumerate(par) if p == 0)


def odd_set(m):
    par = symmetric_parity(m)
    return frozenset(i for i, p in enumerate(par) if p == 1)


def direct(g, h):
    kg, kh = g.k, h.k
    mul = [
        [
            (g.mul[xg][yg]) * kh + h.mul[xh][yh]
            for yg in range(kg) for yh in range(kh)
        ]
        for xg in range(kg) for xh in range(kh)
    ]
    labels = [f"({g.labels[a]},{h.labels[b]})" for a in range(kg) for b in range(kh)]
    return BinaryGroupTable(mul, labels=labels)


def _cycle_label(perm):
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc, j = [], i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = perm[j]
        parts.append("(" + "".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "e"
