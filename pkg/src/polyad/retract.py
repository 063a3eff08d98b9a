"""Binary retracts x (*) y = [x a~ y] and the Hosszu data (beta, d).

The retract at an anchor a is an ordinary group with identity a; beta is the
inner twist x -> [a x a~], d = [a^n].  verify_hossu replays the
reconstruction identity and the twist identities exhaustively.
"""

from __future__ import annotations

import itertools

from .bingroup import BinaryGroupTable
from .core import EVAL_BUDGET
from .errors import BudgetExceeded


class Retract:
    """The group <A, (a)> with its twist automorphism and twist element."""

    def __init__(self, group, anchor):
        g = group
        self.group = g
        self.anchor = anchor
        n, k = g.n, g.k
        inv_seq = g.letter_inverse(anchor)
        self.inv_seq = inv_seq
        mul = [
            [g.eval((x,) + inv_seq + (y,)) for y in range(k)]
            for x in range(k)
        ]
        labels = g.labels if g.labels else None
        self.binary = BinaryGroupTable(mul, labels=labels)
        assert self.binary.id == anchor, "retract identity must be the anchor"
        self.mul = self.binary.mul
        self.beta = tuple(g.eval((anchor, x) + inv_seq) for x in range(k))
        self.alpha = tuple(g.eval(inv_seq + (x, anchor)) for x in range(k))
        self.d = g.eval((anchor,) * n)
        # eager beta powers 0..n-1; verify_hossu hits these in a tight loop
        self.beta_powers = [list(range(k))]
        for _ in range(n - 1):
            self.beta_powers.append([self.beta[x] for x in self.beta_powers[-1]])
        self._validate()

    def _validate(self):
        k, n = self.group.k, self.group.n
        beta, alpha, mul, d = self.beta, self.alpha, self.mul, self.d
        for x in range(k):
            assert alpha[beta[x]] == x and beta[alpha[x]] == x
        for x in range(k):
            for y in range(k):
                assert beta[mul[x][y]] == mul[beta[x]][beta[y]]
        assert beta[d] == d
        bn1 = self.beta_power(n - 1)
        for x in range(k):
            assert mul[d][x] == mul[bn1[x]][d]

    def beta_power(self, m):
        if 0 <= m < len(self.beta_powers):
            return self.beta_powers[m]
        k = self.group.k
        out = list(range(k))
        step = self.beta if m >= 0 else self.alpha
        for _ in range(abs(m)):
            out = [step[x] for x in out]
        return out

    def prod(self, seq):
        return self.binary.prod(seq)

    def reconstruct(self, args):
        """x_1 (a) beta(x_2) (a) ... (a) beta^(n-1)(x_n) (a) d."""
        mul = self.mul
        powers = self.beta_powers
        v = args[0]
        for i in range(1, len(args)):
            v = mul[v][powers[i][args[i]]]
        return mul[v][self.d]


def retract_at(group, a):
    return Retract(group, a)


def verify_hossu(r, budget=None):
    """Exhaustive Hosszu replay; returns a small report dict.

    Checks [x_1...x_n] == reconstruction for every n-tuple and the twist
    identities d (a) alpha^(n-1-k)(x) == beta^k(x) (a) d for k = 0..n-1.
    """
    budget = EVAL_BUDGET if budget is None else budget
    g = r.group
    k, n = g.k, g.n
    total = k**n
    if total > budget:
        raise BudgetExceeded(f"verify_hossu needs {total} tuples")
    op = g.op
    for args in itertools.product(range(k), repeat=n):
        if op(args) != r.reconstruct(args):
            raise AssertionError(
                f"hossu reconstruction failed at {args} (anchor {r.anchor})")
    mul, d = r.mul, r.d
    for t in range(n):
        alpha_p = r.beta_power(-(n - 1 - t))
        beta_p = r.beta_power(t)
        for x in range(k):
            if mul[d][alpha_p[x]] != mul[beta_p[x]][d]:
                raise AssertionError(
                    f"twist identity failed at k={t}, x={x}")
    return {"anchor": r.anchor, "tuples": total, "d": r.d, "ok": True}


def retract_isomorphism_witness(group, a, c):
    """The explicit map x -> [c skew(a) a^(n-3) x] from <A,(a)> to <A,(c)>."""
    g = group
    ra, rc = g.retract(a), g.retract(c)
    inv = g.letter_inverse(a)
    phi = [g.eval((c,) + inv + (x,)) for x in g.elements]
    assert sorted(phi) == list(range(g.k)), "witness is not a bijection"
    for x in g.elements:
        for y in g.elements:
            assert phi[ra.mul[x][y]] == rc.mul[phi[x]][phi[y]]
    return phi


def retract_correspondent_isomorphism(group, a):
    """Explicit isomorphism of <A,(a)> onto A_0: x -> theta(x a~).

    a~ is the standard inverse sequence of the anchor, so the image words
    have length n-1 and land in the correspondent subgroup.
    """
    g = group
    r = g.retract(a)
    cover = g.cover()
    inv = g.letter_inverse(a)
    phi = [cover.theta_word((x,) + inv) for x in g.elements]
    assert len(set(phi)) == g.k
    assert set(phi) == set(cover.correspondent())
    for x in g.elements:
        for y in g.elements:
            assert phi[r.mul[x][y]] == cover.mul[phi[x]][phi[y]]
    return phi


def subgroup_correspondence(group, a):
    """Bijection between n-ary subgroups containing a and the retract
    subgroups V with [a^n] in V and beta(V) = V; carriers coincide.
    """
    from .subgroups import all_subgroups

    g = group
    r = g.retract(a)
    nary = [S for S in all_subgroups(g) if a in S]
    beta = r.beta
    retr = [
        V for V in r.binary.all_subgroups()
        if r.d in V and frozenset(beta[x] for x in V) == V
    ]
    nary_set = {frozenset(S) for S in nary}
    retr_set = {frozenset(V) for V in retr}
    assert nary_set == retr_set, "correspondence carriers differ"
    return {"anchor": a, "count": len(nary), "subgroups": sorted(
        nary_set, key=lambda S: (len(S), sorted(S)))}
