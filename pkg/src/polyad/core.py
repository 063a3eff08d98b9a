"""Finite n-ary groupoids and n-ary groups.

Elements are dense integer indices 0..k-1.  An `NaryGroupoid` is a carrier
size, an arity and an operation oracle; an `NaryGroup` is a groupoid that
passed verification, with the skew map cached and word machinery attached
(long products, neutral/inverse sequences, theta-canonical forms, equation
solving).
"""

from __future__ import annotations

import itertools
from collections import namedtuple

from .errors import (
    BudgetExceeded,
    LengthError,
    NoSolution,
    NotAssociative,
    NotGroup,
)

EVAL_BUDGET = 10**8   # cap on exhaustive-scan sizes (tuples examined)
TABLE_CAP = 10**7     # cap on materialized full tables (k**n entries)
EAGER_TABLE_CAP = 10**6   # materialize at construction below this size
VERIFY_CAP = 4 * 10**6    # auto-mode exhaustive re-checks below this cost

CanonicalClass = namedtuple("CanonicalClass", ["residue", "value", "base"])


class NaryGroupoid:
    """Finite carrier + arity + operation oracle.

    `backing` names how the operation is realized (table, derived, gluskin,
    coset, product, permutation); theorem-backed backings set
    `associative_by_construction` so verification can skip exhaustive
    re-checks that would blow the evaluation budget.
    """

    def __init__(self, size, arity, op, backing="table", labels=None,
                 associative_by_construction=False, table_cap=TABLE_CAP,
                 table=None):
        if size < 1:
            raise ValueError("carrier must be nonempty")
        if arity < 2:
            raise ValueError("arity must be at least 2")
        self.k = size
        self.n = arity
        self.backing = backing
        self.labels = list(labels) if labels is not None else None
        self.associative_by_construction = associative_by_construction
        self._op = op
        self.table = table
        self.table_cap = table_cap
        if self.table is None and size**arity <= EAGER_TABLE_CAP:
            self.table = self._materialize()

    def _materialize(self):
        op, k, n = self._op, self.k, self.n
        flat = [0] * k**n
        for i, args in enumerate(itertools.product(range(k), repeat=n)):
            flat[i] = op(args)
        return flat

    def ensure_table(self):
        """Materialize the full table lazily (within the configured cap)."""
        if self.table is None and self.k**self.n <= self.table_cap:
            self.table = self._materialize()
        return self.table

    @classmethod
    def from_table(cls, size, arity, flat, labels=None):
        flat = list(flat)
        if len(flat) != size**arity:
            raise ValueError("table has wrong length")
        if any(not (0 <= v < size) for v in flat):
            raise ValueError("table entries out of range")
        k = size

        def op(args):
            idx = 0
            for a in args:
                idx = idx * k + a
            return flat[idx]

        return cls(size, arity, op, backing="table", labels=labels, table=flat)

    def op(self, args):
        """Apply the n-ary operation to exactly n arguments."""
        if self.table is not None:
            idx = 0
            for a in args:
                idx = idx * self.k + a
            return self.table[idx]
        return self._op(tuple(args))

    def reduce(self, word):
        """Left-fold long product of a word of length 1 mod (n-1)."""
        m = len(word)
        n = self.n
        if m < 1 or (m - 1) % (n - 1) != 0:
            raise LengthError(f"word length {m} is not 1 mod {n - 1}")
        if self.table is not None:
            flat, k = self.table, self.k
            v = word[0]
            i = 1
            while i < m:
                idx = v
                for j in range(i, i + n - 1):
                    idx = idx * k + word[j]
                v = flat[idx]
                i += n - 1
            return v
        v = word[0]
        i = 1
        while i < m:
            v = self._op((v,) + tuple(word[i:i + n - 1]))
            i += n - 1
        return v

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def label_set(self, S):
        return "{" + ",".join(self.label(a) for a in sorted(S)) + "}"

    def __repr__(self):
        return f"NaryGroupoid(k={self.k}, n={self.n}, backing={self.backing!r})"


def nary_eval(g, word):
    """Long-product evaluation (spec op `eval`)."""
    return g.reduce(tuple(word))


def is_associative(g, budget=None, witness=False):
    """Exhaustive Doernte associativity check over all (2n-1)-tuples.

    Compares the fold with the inner bracket at every position.  Raises
    BudgetExceeded when k**(2n-1) tuples will not fit the budget.
    """
    budget = EVAL_BUDGET if budget is None else budget
    k, n = g.k, g.n
    total = k ** (2 * n - 1)
    if total > budget:
        raise BudgetExceeded(
            f"associativity needs {total} tuples > budget {budget}")
    if g.table is None:
        raise BudgetExceeded("no full table within cap; cannot scan")
    import numpy as np

    T = np.asarray(g.table, dtype=np.int64).reshape((k,) * n)
    left = np.take(T, T, axis=0)
    for i in range(1, n):
        right = np.take(T, T, axis=i)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)[0]
            tup = tuple(int(x) for x in bad)
            if witness:
                return False, (i, tup)
            return False
    return (True, None) if witness else True


def is_group(g, budget=None, assume_associative=False):
    """Post's solvability criterion: both border equations solvable.

    Scans the carrier; uniqueness follows from bijectivity of the
    translation maps and is asserted.
    """
    budget = EVAL_BUDGET if budget is None else budget
    k, n = g.k, g.n
    if not assume_associative and not g.associative_by_construction:
        if not is_associative(g, budget=budget):
            raise NotAssociative("groupoid is not associative")
    total = 2 * k**n
    if total > budget:
        raise BudgetExceeded(f"solvability scan needs {total} > budget {budget}")
    rng = range(k)
    for tail in itertools.product(rng, repeat=n - 1):
        seen = {g.op((x,) + tail) for x in rng}
        if len(seen) != k:
            return False
    for head in itertools.product(rng, repeat=n - 1):
        seen = {g.op(head + (y,)) for y in rng}
        if len(seen) != k:
            return False
    return True


def first_group_violation(g):
    """First unsolvable border equation, for counterexample reporting."""
    k, n = g.k, g.n
    rng = range(k)
    for tail in itertools.product(rng, repeat=n - 1):
        seen = {g.op((x,) + tail) for x in rng}
        for b in rng:
            if b not in seen:
                return ("left", tail, b)
    for head in itertools.product(rng, repeat=n - 1):
        seen = {g.op(head + (y,)) for y in rng}
        for b in rng:
            if b not in seen:
                return ("right", head, b)
    return None


class NaryGroup:
    """A verified n-ary group: groupoid + cached skew map + word machinery."""

    def __init__(self, groupoid, skew_map, name=None):
        self.g = groupoid
        self.k = groupoid.k
        self.n = groupoid.n
        self.base = 0  # canonicalization base element, fixed per group
        self._skew = skew_map
        self.name = name or groupoid.backing
        self.labels = groupoid.labels
        self._cover = None
        self._retracts = {}
        self._orbits = {}
        # f(a) = canonical value of the residue-1 class of a; bijection
        self._f = [self.eval((a,) + (self.base,) * (self.n - 1)) for a in range(self.k)]
        self._f_inv = [0] * self.k
        for a, v in enumerate(self._f):
            self._f_inv[v] = a

    # -- construction ------------------------------------------------------

    @classmethod
    def verify(cls, groupoid, budget=None, name=None, mode="auto"):
        """Verify and wrap a groupoid.

        mode='full' forces the exhaustive checks (BudgetExceeded if too big);
        'auto' runs them when affordable and otherwise accepts
        theorem-backed constructions; 'trust' skips checks entirely.
        """
        budget = EVAL_BUDGET if budget is None else budget
        k, n = groupoid.k, groupoid.n
        if mode != "trust":
            assoc_cost = k ** (2 * n - 1)
            solv_cost = 2 * k**n
            if mode == "full" or assoc_cost <= budget:
                ok, wit = is_associative(groupoid, budget=budget, witness=True)
                if not ok:
                    raise NotAssociative(
                        f"fold vs inner bracket at {wit[0]} differ on {wit[1]}",
                        witness=wit)
            elif not groupoid.associative_by_construction:
                raise BudgetExceeded(
                    "associativity not provable within budget for a raw table")
            if mode == "full" or solv_cost <= budget:
                if not is_group(groupoid, budget=budget, assume_associative=True):
                    raise NotGroup("border equations are not solvable",
                                   witness=first_group_violation(groupoid))
            elif not groupoid.associative_by_construction:
                raise BudgetExceeded("solvability scan over budget")
        skew_map = _compute_skew(groupoid)
        return cls(groupoid, skew_map, name=name)

    # -- basic access -------------------------------------------------------

    @property
    def elements(self):
        return range(self.k)

    def op(self, args):
        return self.g.op(args)

    def eval(self, word):
        return self.g.reduce(tuple(word))

    def label(self, a):
        return self.g.label(a)

    def label_set(self, S):
        return self.g.label_set(S)

    def __repr__(self):
        return f"NaryGroup({self.name}, k={self.k}, n={self.n})"

    # -- skew / neutral / inverse -------------------------------------------

    def skew(self, a):
        return self._skew[a]

    def skew_double(self, a):
        """Skew of the skew, via the closed power form a^((n-3)(n-1)+1)."""
        if self.n == 2:
            return a  # inverse of the inverse
        m = (self.n - 3) * (self.n - 1) + 1
        return self.eval((a,) * m)

    def is_neutral(self, word, strict=False):
        m = len(word)
        if m < self.n - 1 or m % (self.n - 1) != 0:
            raise LengthError(f"neutral sequences have length 0 mod {self.n - 1}")
        word = tuple(word)
        probe = 0
        if self.eval(word + (probe,)) != probe:
            return False
        if strict:
            for a in self.elements:
                if self.eval(word + (a,)) != a or self.eval((a,) + word) != a:
                    return False
        return True

    def letter_inverse(self, a):
        """Standard inverse sequence for a single letter: skew(a)·a^(n-3)."""
        if self.n == 2:
            # binary: skew(a) is the identity, so solve a*x = e
            return (self.solve((a, None), self._skew[a]),)
        return (self._skew[a],) + (a,) * (self.n - 3)

    def inverse_sequence(self, word):
        """A minimal-length inverse sequence for `word` (canonicalized)."""
        word = tuple(word)
        if not word:
            raise LengthError("empty word has no inverse sequence")
        long_inv = ()
        for a in reversed(word):
            long_inv += self.letter_inverse(a)
        residue, value = self.canonical(long_inv)
        return self.class_representative(residue, value)

    # -- theta machinery ------------------------------------------------------

    def canonical(self, word, base=None):
        """Theta-canonical record (residue, value) of a nonempty word."""
        word = tuple(word)
        if not word:
            raise LengthError("empty word has no canonical class")
        b = self.base if base is None else base
        n = self.n
        residue = (len(word) - 1) % (n - 1) + 1
        value = self.eval(word + (b,) * (n - residue))
        return residue, value

    def canonical_class(self, word, base=None):
        r, v = self.canonical(word, base=base)
        return CanonicalClass(r, v, self.base if base is None else base)

    def theta_equal(self, w1, w2, strict=False):
        """Theta-equivalence of two words (Theorem 1.3.3 one-completion test)."""
        if self.canonical(w1) != self.canonical(w2):
            return False
        if strict and self.k > 1:
            alt = 1 % self.k
            if self.canonical(w1, base=alt) != self.canonical(w2, base=alt):
                return False
        return True

    def class_representative(self, residue, value):
        """Shortest word (length = residue) in the class (residue, value)."""
        a = self._f_inv[value]
        return (a,) + (self.base,) * (residue - 1)

    # -- equation solving -----------------------------------------------------

    def solve(self, pattern, rhs):
        """Unique x with eval(pattern[x -> hole]) == rhs; hole is None."""
        pattern = tuple(pattern)
        holes = [i for i, v in enumerate(pattern) if v is None]
        if len(holes) != 1:
            raise ValueError("pattern must contain exactly one hole")
        i = holes[0]
        hits = []
        for x in self.elements:
            cand = pattern[:i] + (x,) + pattern[i + 1:]
            if self.eval(cand) == rhs:
                hits.append(x)
        if not hits:
            raise NoSolution("no solution: corrupted input group")
        assert len(hits) == 1, "solution not unique: corrupted input group"
        return hits[0]

    # -- attached structures ---------------------------------------------------

    def cover(self):
        from .post_cover import build_cover
        if self._cover is None:
            self._cover = build_cover(self)
        return self._cover

    def retract(self, a):
        from .retract import retract_at
        if a not in self._retracts:
            self._retracts[a] = retract_at(self, a)
        return self._retracts[a]

    def power_orbit(self, a):
        """Orbit a^[0], a^[1], ... up to (not including) the first repeat."""
        if a not in self._orbits:
            orbit = [a]
            tail = (a,) * (self.n - 1)
            v = a
            while True:
                v = self.eval((v,) + tail)
                if v == a:
                    break
                orbit.append(v)
            self._orbits[a] = orbit
        return self._orbits[a]


def _compute_skew(g):
    """skew(a) solves [a^(n-1) x] = a; existence/uniqueness by group axioms."""
    k, n = g.k, g.n
    out = [0] * k
    for a in range(k):
        prefix = (a,) * (n - 1)
        hits = [x for x in range(k) if g.op(prefix + (x,)) == a]
        if len(hits) != 1:
            raise NotGroup("skew not unique; groupoid is not a group", witness=a)
        out[a] = hits[0]
    return out


def skew(g, a):
    """Spec op `skew` as a function over a verified group."""
    return g.skew(a)


def skew_double(g, a):
    return g.skew_double(a)


def is_neutral(g, word, strict=False):
    return g.is_neutral(word, strict=strict)


def inverse_sequence(g, word):
    return g.inverse_sequence(word)


def theta_canonical(g, word, base=None):
    return g.canonical_class(word, base=base)


def solve(g, pattern, rhs):
    return g.solve(pattern, rhs)
