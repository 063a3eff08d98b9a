"""Acceptance suite: one test per criterion, exact tolerances, one
pass/fail line each.  Run with -s to see the lines as they print.
"""

import itertools
import math
import time
from math import gcd

import pytest

from polyad import axioms as ax
from polyad import bingroup
from polyad.constructions import (
    catalog,
    cyclic_nary,
    idempotent_from_splitting,
    named_example,
    reflections,
)
from polyad.core import is_group
from polyad.post_cover import (
    correspondent_group,
    index_correspondence,
    quotient_isomorphism,
)
from polyad.retract import retract_at, verify_hossu
from polyad.structure import (
    abelianness,
    center_family,
    classify_solvability,
    idempotent_sylow_partition,
    idempotents,
    nadic_order,
    nadic_power,
    normalizer_family,
    normalizer_gcd_audit,
    units,
    units_are_characteristic,
)
from polyad.subgroups import (
    a_direct_decomposition,
    all_subgroups,
    check_normality,
    normality_implications_audit,
    sylow_hall_semiabelian,
)
from conftest import example


_CATALOG = None


def catalog_groups():
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = catalog()
    return _CATALOG


def _report(num, text, t0):
    print(f"PASS criterion {num}: {text} ({time.time() - t0:.2f}s)")


def test_criterion_01_rusakov_skew_table():
    t0 = time.time()
    g = example("Rusakov5")
    want = {"1": "a2", "a": "a3", "a2": "1", "a3": "a",
            "b": "ba2", "ba": "ba3", "ba2": "b", "ba3": "ba"}
    got = {g.label(a): g.label(g.skew(a)) for a in g.elements}
    assert got == want
    assert time.time() - t0 < 1.0
    _report(1, "Rusakov 5-ary skew table matches the worked example", t0)


def test_criterion_02_post_cover_sizes():
    t0 = time.time()
    for g in catalog_groups():
        tg = time.time()
        cover = g.cover()
        assert cover.binary.k == g.k * (g.n - 1)
        A0 = cover.correspondent()
        Q, proj = cover.binary.quotient(A0)
        assert Q.k == g.n - 1
        gen = proj[cover.theta(0)]
        seen, v = set(), Q.id
        for _ in range(Q.k):
            v = Q.mul[v][gen]
            seen.add(v)
        assert len(seen) == Q.k, "quotient must be cyclic of order n-1 exactly"
        assert time.time() - tg < 1.0, f"{g.name} cover too slow"
    t3 = example("T3")
    assert t3.cover().binary.isomorphism_to(bingroup.symmetric(3)) is not None
    assert correspondent_group(t3.cover()).isomorphism_to(
        bingroup.cyclic(3)) is not None
    _report(2, "|A*| = |A|(n-1), A*/A0 cyclic; T3 cover is S3 with A0 = A3", t0)


def test_criterion_03_hossu_reconstruction():
    t0 = time.time()
    checked = 0
    for g in catalog_groups():
        if g.k ** g.n > 10**6:
            continue
        anchors = {0, g.k // 2} if g.k ** g.n <= 50000 else {0}
        for a in anchors:
            rep = verify_hossu(retract_at(g, a))
            assert rep["ok"]
            checked += 1
    assert checked >= 12
    assert time.time() - t0 < 30.0
    _report(3, f"Hosszu reconstruction exhaustive on {checked} retracts", t0)


def test_criterion_04_lagrange_and_reflection_counts():
    t0 = time.time()
    v6 = example("V6")
    subs = all_subgroups(v6)
    proper = {v6.label_set(S) for S in subs if 1 < len(S) < 6}
    assert proper == {"{b1,b4}", "{b2,b5}", "{b3,b6}",
                      "{b1,b3,b5}", "{b2,b4,b6}"}
    for k in range(3, 13):
        g = example(f"V{k}")
        lattice = all_subgroups(g)
        for d in (d for d in range(1, k + 1) if k % d == 0):
            of_order = [S for S in lattice if len(S) == d]
            assert len(of_order) == k // d
            covered = set()
            for S in of_order:
                assert not (covered & S), "same-order subgroups must partition"
                covered |= S
            assert covered == set(g.elements)
    assert time.time() - t0 < 10.0
    _report(4, "V6 lattice exact; reflection groups partition per divisor", t0)


def test_criterion_05_cyclic_order_formula():
    t0 = time.time()
    for g_order in range(2, 31):
        for n in range(3, 7):
            g = cyclic_nary(g_order, n)
            orbit = g.power_orbit(0)
            assert len(orbit) == g_order  # generated by the anchor
            for kk in range(g_order):
                ek = orbit[kk]
                want = g_order // gcd(kk * (n - 1) + 1, g_order)
                assert nadic_order(g, ek) == want
            # subgroup existence/uniqueness, Theorem-style
            lattice = all_subgroups(g)
            sizes = sorted(len(S) for S in lattice)
            want_sizes = sorted(
                d for d in range(1, g_order + 1)
                if g_order % d == 0 and gcd(g_order // d, n - 1) == 1)
            assert sizes == want_sizes, (g_order, n)
            has_idem = bool(idempotents(g))
            assert has_idem == (gcd(g_order, n - 1) == 1)
    assert time.time() - t0 < 30.0
    _report(5, "n-adic orders, subgroup uniqueness and idempotent "
               "existence match the closed forms (g<=30, n<=6)", t0)


def test_criterion_06_axiom_equivalence():
    t0 = time.time()
    corpus = []
    for g in catalog_groups():
        if g.k <= 3 and g.n <= 4:
            corpus.append((g.name, g))
    corpus.append(("Zg(3,4)", cyclic_nary(3, 4)))
    for k in (2, 3):
        for n in (3, 4):
            corpus.append((f"proj({k},{n})", ax.projection_magma(k, n)))
            corpus.append((f"lproj({k},{n})",
                           ax.projection_magma(k, n, "left")))
    for n in (3, 4):
        corpus.append((f"derivedC{n - 1}", ax.derived_over_small_cyclic(n)))
    report = ax.equivalence_audit(corpus)
    groups = [name for name, flag, _ in report if flag]
    magmas = [name for name, flag, _ in report if not flag]
    assert groups and magmas
    # diagonal counterexample: repeated unknowns fail on a real group
    for n in (3, 4):
        assert not ax.repeated_unknowns(ax.derived_over_small_cyclic(n))
    # solution counts |A|^(i-1)
    t3 = example("T3")
    for i in (1, 2):
        for tail in itertools.product(t3.elements, repeat=3 - i):
            for b in t3.elements:
                assert ax.count_solutions(t3, i, tail, b) == 3 ** (i - 1)
    r5 = example("Rusakov5")
    assert ax.count_solutions(r5, 3, (0, 1), 2) == 64
    assert time.time() - t0 < 60.0
    _report(6, f"axiom systems agree with is_group on {len(report)} magmas; "
               "solution counts match", t0)


def test_criterion_07_units_and_idempotents():
    t0 = time.time()
    assert len(idempotents(example("derived(S3,3)"))) == 4
    for m in range(3, 9):
        g = example(f"derived(D{m},3)")
        want = m + 1 if m % 2 else m + 2
        assert len(idempotents(g)) == want
    assert units(example("derived(Z6,4)")) == frozenset([0, 2, 4])
    assert len(units(example("RxR"))) == 4
    assert idempotents(example("Rusakov5")) == frozenset()
    for g in catalog_groups():
        E = units(g)  # units() asserts E = I ∩ Z and subgroup-hood inside
        if E:
            assert units_are_characteristic(g)
    assert time.time() - t0 < 10.0
    _report(7, "idempotent/unit counts and E = I ∩ Z across the catalog", t0)


def test_criterion_08_normality_zoo():
    t0 = time.time()
    s4t = example("derived(S4,3)")
    S4 = bingroup.symmetric(4)
    V4 = frozenset(a for a in range(24) if S4.labels[a] in
                   ("e", "(12)(34)", "(13)(24)", "(14)(23)"))
    assert check_normality(s4t, V4, "invariant")
    assert not check_normality(s4t, V4, "normal")
    d6t = example("D6_ternary")
    lbl = {d6t.label(a): a for a in d6t.elements}
    B = frozenset([lbl["b"], lbl["bc3"]])
    assert check_normality(d6t, B, "semi_invariant")
    assert not check_normality(d6t, B, "normal")
    assert not check_normality(d6t, B, "invariant")
    for g in catalog_groups():
        for S in all_subgroups(g):
            normality_implications_audit(g, S)
    assert time.time() - t0 < 60.0
    _report(8, "normality zoo examples and the implication lattice over "
               "every catalog subgroup", t0)


def test_criterion_09_covering_transfers():
    t0 = time.time()
    for g in catalog_groups():
        if g.k > 8:
            continue
        cover = g.cover()
        for S in all_subgroups(g):
            rep = index_correspondence(cover, S)
            assert rep["index"] == rep["index_star"] == rep["index_zero"]
            if check_normality(g, S, "invariant"):
                phi = quotient_isomorphism(cover, S)
                assert len(phi) == rep["index"]
    assert time.time() - t0 < 30.0
    _report(9, "|A:B| = |A0:B0(A)| = |A*:B*(A)| and quotient isomorphism "
               "for invariant subgroups (catalog, k <= 8)", t0)


def test_criterion_10_normalizer_center_laws():
    t0 = time.time()
    by_arity = {}
    for g in catalog_groups():
        by_arity.setdefault(g.n - 1, g)
    assert {2, 4, 6} <= set(by_arity)
    for width in (2, 4, 6):
        g = by_arity[width]
        subs = all_subgroups(g)
        picks = subs[: min(4, len(subs))] + [frozenset(g.elements)]
        for B in picks:
            normalizer_gcd_audit(g, B)
            normalizer_family(g, B, g.n, cross_check=True)
            normalizer_family(g, B, 2, cross_check=True)
        from polyad.structure import center_subgroup_audit
        center_subgroup_audit(g)
    assert time.time() - t0 < 60.0
    _report(10, "normalizer/center gcd laws and the retract/covering "
                "normalizer identities for n-1 in {2,4,6}", t0)


def test_criterion_11_permutation_groups():
    t0 = time.time()
    from polyad.permutations import (
        mixed_associativity_holds,
        permutation_group,
        regular_embedding_check,
    )
    import random

    for q in (1, 2, 3):
        for n in (2, 3, 4):
            width = n - 1
            sigma = tuple(list(range(1, width)) + [0])
            g = permutation_group(q, n, sigma)
            fact = math.factorial(q)
            assert g.k == fact ** (n - 1)
            idem = sum(1 for a in g.elements if g.eval((a,) * g.n) == a)
            assert idem == fact ** (n - 2)
    rng = random.Random(42)
    from polyad.permutations import NaryPermutation
    for _ in range(60):
        q = rng.choice([2, 3])
        n = rng.choice([3, 4])
        m = rng.randrange(2, 6)
        fs = []
        for _ in range(m):
            sig = list(range(n - 1))
            rng.shuffle(sig)
            maps = []
            for _ in range(n - 1):
                p = list(range(q))
                rng.shuffle(p)
                maps.append(tuple(p))
            fs.append(NaryPermutation(tuple(sig), maps))
        i = rng.randrange(m)
        kblock = rng.randrange(1, m - i + 1)
        assert mixed_associativity_holds(fs, i, kblock)
    for g in catalog_groups():
        if g.k <= 6:
            assert regular_embedding_check(g)
    assert time.time() - t0 < 60.0
    _report(11, "(q!)^(n-1) orders, (q!)^(n-2) idempotent counts, mixed "
                "associativity and the right-regular embedding", t0)


def test_criterion_12_idempotent_sylow_partition():
    t0 = time.time()
    g = idempotent_from_splitting(
        bingroup.cyclic(6), [(-x) % 6 for x in range(6)], 3)
    parts = idempotent_sylow_partition(g, 2)
    assert len(parts) == 3
    assert sorted(sorted(P) for P in parts) == [[0, 3], [1, 4], [2, 5]]
    for P in parts:
        assert check_normality(g, P, "semi_invariant")
    for anchor in g.elements:
        dec = sylow_hall_semiabelian(g, anchor=anchor)
        assert sorted(len(P) for P in dec[anchor]) == [2, 3]
    assert time.time() - t0 < 10.0
    _report(12, "three disjoint semi-invariant 2-Sylow subgroups cover the "
                "splitting-automorphism group; unique decomposition per "
                "anchor", t0)


def test_criterion_13_semisolvability():
    t0 = time.time()
    t3 = example("T3")
    flags = classify_solvability(t3)
    assert flags["semisolvable"] and flags["seminilpotent"]
    t5 = example("T5")
    flags5 = classify_solvability(t5)
    assert not flags5["semisolvable"]
    bt = t5.retract(0).binary
    assert bt.k == 60
    assert bt.derived_series()[-1] == frozenset(range(60))  # perfect retract
    assert time.time() - t0 < 30.0
    _report(13, "T3 semisolvable + seminilpotent; ternary odd permutations "
                "on 5 letters are not semisolvable", t0)
