"""Chapter-of-axioms as an executable menu.

Every system decides "is this associative magma an n-ary group" by its own
solvability shape; on associative inputs they must all agree with is_group.
Two deliberately non-equivalent shapes (repeated unknowns, interior
multi-unknown) are kept as negative pseudo-systems.
"""

from __future__ import annotations

import itertools

from .core import is_associative, is_group
from .errors import ArityTooSmall, NotAssociative


def _magma(g):
    """Accept either a raw groupoid or a verified NaryGroup."""
    return getattr(g, "g", g)


def _ensure_associative(g):
    if not g.associative_by_construction and not is_associative(g):
        raise NotAssociative("axiom systems require an associative magma")


def post2(g):
    """Border equations with a single unknown (Post's two-equation form)."""
    k, n = g.k, g.n
    rng = range(k)
    for tail in itertools.product(rng, repeat=n - 1):
        if {g.op((x,) + tail) for x in rng} != set(rng):
            return False
    for head in itertools.product(rng, repeat=n - 1):
        if {g.op(head + (y,)) for y in rng} != set(rng):
            return False
    return True


def post1(g, i):
    """Single unknown at interior position i (1-based, 2 <= i <= n-1)."""
    k, n = g.k, g.n
    if n < 3:
        raise ArityTooSmall("interior position needs n >= 3")
    if not 2 <= i <= n - 1:
        raise ValueError("position must be interior")
    rng = range(k)
    for ctx in itertools.product(rng, repeat=n - 1):
        pre, post = ctx[:i - 1], ctx[i - 1:]
        if {g.op(pre + (x,) + post) for x in rng} != set(rng):
            return False
    return True


def main_system(g):
    """Multi-unknown border equations [x_1..x_(n-1) a] = b, [a y...] = b."""
    k, n = g.k, g.n
    rng = range(k)
    for a in rng:
        img = {g.op(xs + (a,)) for xs in itertools.product(rng, repeat=n - 1)}
        if img != set(rng):
            return False
    for a in rng:
        img = {g.op((a,) + ys) for ys in itertools.product(rng, repeat=n - 1)}
        if img != set(rng):
            return False
    return True


def diag(g):
    """Skiba-Tyutin: [x a^(n-1)] = b and [a^(n-1) y] = b solvable."""
    k, n = g.k, g.n
    rng = range(k)
    for a in rng:
        diag_word = (a,) * (n - 1)
        if {g.op((x,) + diag_word) for x in rng} != set(rng):
            return False
        if {g.op(diag_word + (y,)) for y in rng} != set(rng):
            return False
    return True


def one_eq(g, kfix, i):
    """[a_1..a_k x_1..x_i a_(k+i+1)..a_n] = b with i unknowns in a row."""
    k, n = g.k, g.n
    if n < 3:
        raise ArityTooSmall("needs n >= 3")
    if not (1 <= kfix and 1 <= i and kfix + i <= n - 1):
        raise ValueError("bad (k, i) parameters")
    rng = range(k)
    rest = n - kfix - i
    for fixed in itertools.product(rng, repeat=kfix + rest):
        pre, post = fixed[:kfix], fixed[kfix:]
        img = {
            g.op(pre + xs + post)
            for xs in itertools.product(rng, repeat=i)
        }
        if img != set(rng):
            return False
    return True


def sandwich(g):
    """[a x_1..x_(n-2) c] = b solvable for all a, b, c."""
    k, n = g.k, g.n
    if n < 3:
        raise ArityTooSmall("needs n >= 3")
    rng = range(k)
    for a in rng:
        for c in rng:
            img = {
                g.op((a,) + xs + (c,))
                for xs in itertools.product(rng, repeat=n - 2)
            }
            if img != set(rng):
                return False
    return True


def existential(g):
    """For every a there are (n-2)-sequences alpha, beta with
    [b alpha a] = b = [a beta b] for every b."""
    k, n = g.k, g.n
    if n < 3:
        raise ArityTooSmall("needs n >= 3")
    rng = range(k)
    for a in rng:
        ok_alpha = any(
            all(g.op((b,) + alpha + (a,)) == b for b in rng)
            for alpha in itertools.product(rng, repeat=n - 2)
        )
        if not ok_alpha:
            return False
        ok_beta = any(
            all(g.op((a,) + beta + (b,)) == b for b in rng)
            for beta in itertools.product(rng, repeat=n - 2)
        )
        if not ok_beta:
            return False
    return True


def skew_system(g):
    """Dudek-Glazek-Gleichgewicht: one skew witness per element."""
    k, n = g.k, g.n
    if n < 3:
        raise ArityTooSmall("needs n >= 3")
    rng = range(k)
    for a in rng:
        found = False
        for bar in rng:
            left = all(
                g.op((b,) + (a,) * (n - 3) + (bar, a)) == b for b in rng)
            right = all(
                g.op((a, bar) + (a,) * (n - 3) + (b,)) == b for b in rng)
            if left and right:
                found = True
                break
        if not found:
            return False
    return True


def long_system(g, kk, mm):
    """Long border equations of lengths k(n-1)+1 and m(n-1)+1."""
    k, n = g.k, g.n
    rng = range(k)
    for a in rng:
        img = {
            g.reduce(us + (a,))
            for us in itertools.product(rng, repeat=kk * (n - 1))
        }
        if img != set(rng):
            return False
    for a in rng:
        img = {
            g.reduce((a,) + vs)
            for vs in itertools.product(rng, repeat=mm * (n - 1))
        }
        if img != set(rng):
            return False
    return True


def dpoint(g, i, j):
    """Distinguished-element system: some d with [a^i b^(n-1-i) x] = d and
    [y b^(n-1-j) a^j] = b solvable for all a, b."""
    k, n = g.k, g.n
    if n < 3:
        raise ArityTooSmall("needs n >= 3")
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise ValueError("positions out of range")
    rng = range(k)

    def second_ok():
        for a in rng:
            for b in rng:
                word = (b,) * (n - 1 - j) + (a,) * j
                if all(g.op((y,) + word) != b for y in rng):
                    return False
        return True

    if not second_ok():
        return False
    for d in rng:
        ok = True
        for a in rng:
            for b in rng:
                word = (a,) * i + (b,) * (n - 1 - i)
                if all(g.op(word + (x,)) != d for x in rng):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


# negative pseudo-systems (documented counterexample shapes, NOT axioms)


def repeated_unknowns(g):
    """[x^(n-1) a] = b and [a y^(n-1)] = b; fails on derived-over-C_(n-1)."""
    g = _magma(g)
    k, n = g.k, g.n
    rng = range(k)
    for a in rng:
        if {g.op((x,) * (n - 1) + (a,)) for x in rng} != set(rng):
            return False
        if {g.op((a,) + (y,) * (n - 1)) for y in rng} != set(rng):
            return False
    return True


def interior_multi(g, i):
    """All-but-one unknowns with a at position i; true on projections."""
    g = _magma(g)
    k, n = g.k, g.n
    rng = range(k)
    for a in rng:
        img = set()
        for xs in itertools.product(rng, repeat=n - 1):
            img.add(g.op(xs[:i - 1] + (a,) + xs[i - 1:]))
        if img != set(rng):
            return False
    return True


SYSTEM_IDS = [
    "POST2", "POST1", "MAIN", "DIAG", "ONE_EQ", "SANDWICH",
    "EXISTENTIAL", "SKEW", "LONG", "DPOINT",
]


def check_axiom(g, system, **params):
    """Dispatch by system id; parameterized ids take keyword parameters."""
    g = _magma(g)
    _ensure_associative(g)
    if system == "POST2":
        return post2(g)
    if system == "POST1":
        return post1(g, params["i"])
    if system == "MAIN":
        return main_system(g)
    if system == "DIAG":
        return diag(g)
    if system == "ONE_EQ":
        return one_eq(g, params["k"], params["i"])
    if system == "SANDWICH":
        return sandwich(g)
    if system == "EXISTENTIAL":
        return existential(g)
    if system == "SKEW":
        return skew_system(g)
    if system == "LONG":
        return long_system(g, params.get("k", 2), params.get("m", 2))
    if system == "DPOINT":
        return dpoint(g, params["i"], params["j"])
    raise ValueError(f"unknown system {system!r}")


def all_verdicts(g, long_reps=(1, 2)):
    """Every system instantiated over all admissible parameter values."""
    g = _magma(g)
    _ensure_associative(g)
    n = g.n
    out = {}
    out["POST2"] = post2(g)
    for i in range(2, n):
        out[f"POST1(i={i})"] = post1(g, i)
    out["MAIN"] = main_system(g)
    out["DIAG"] = diag(g)
    for kfix in range(1, n - 1):
        for i in range(1, n - kfix):
            out[f"ONE_EQ(k={kfix},i={i})"] = one_eq(g, kfix, i)
    out["SANDWICH"] = sandwich(g)
    out["EXISTENTIAL"] = existential(g)
    out["SKEW"] = skew_system(g)
    for kk in long_reps:
        for mm in long_reps:
            out[f"LONG(k={kk},m={mm})"] = long_system(g, kk, mm)
    for i in range(1, n):
        for j in range(1, n):
            out[f"DPOINT(i={i},j={j})"] = dpoint(g, i, j)
    return out


def equivalence_audit(corpus):
    """Assert every system verdict equals is_group on every magma."""
    report = []
    for name, g in corpus:
        g = _magma(g)
        expected = is_group(g, assume_associative=g.associative_by_construction)
        verdicts = all_verdicts(g)
        bad = {sys: v for sys, v in verdicts.items() if v != expected}
        assert not bad, f"{name}: systems disagree with is_group: {bad}"
        report.append((name, expected, len(verdicts)))
    return report


def count_solutions(g, i, tail, b):
    """Solutions of [x_1..x_i a_(i+1)..a_n] = b; |A|^(i-1) on groups."""
    m = _magma(g)
    tail = tuple(tail)
    if len(tail) != m.n - i:
        raise ValueError("tail must fill the remaining positions")
    count = 0
    for xs in itertools.product(range(m.k), repeat=i):
        if m.reduce(xs + tail) == b:
            count += 1
    return count


def projection_magma(k, n, side="right"):
    """The projection semigroup [a_1...a_n] = a_n (or a_1); not a group."""
    from .core import NaryGroupoid

    pick = (lambda args: args[-1]) if side == "right" else (lambda args: args[0])
    return NaryGroupoid(k, n, pick, backing="table")


def derived_over_small_cyclic(n):
    """Derived n-ary group over C_(n-1): the diagonal counterexample host."""
    from . import bingroup
    from .constructions import derived

    return derived(bingroup.cyclic(n - 1), 0, n,
                   name=f"derived(C{n - 1},{n})")
