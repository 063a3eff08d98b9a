"""Element and global structure: n-adic powers and orders, cyclicity,
idempotents and units, the center/centralizer and normalizer families,
abelianness predicates, idempotent Sylow partitions, semisolvability.

Theta-equality of equal-length short sequences is tested with the single
completion base^(n-len); a strict mode re-tests with a second completion.
"""

from __future__ import annotations

import itertools
from math import gcd

from .errors import BadM, NoIdempotent, NotSubgroup
from .subgroups import (
    all_subgroups,
    check_normality,
    coset_decomposition,
    window_set,
    _prime_factors,
)


# -- n-adic powers and orders -------------------------------------------------


def nadic_power(g, a, s):
    """a^[s]; negative s resolved through the (finite) order."""
    orbit = g.power_orbit(a)
    return orbit[s % len(orbit)]


def nadic_order(g, a):
    return len(g.power_orbit(a))


def order_profile(g):
    return {a: nadic_order(g, a) for a in g.elements}


def classify_cyclic(g):
    """('cyclic', generator) / ('semicyclic', None) / ('neither', None)."""
    for a in g.elements:
        if len(g.power_orbit(a)) == g.k:
            gens = cyclic_generators(g, a)
            return ("cyclic", a, gens)
    if _retract_cyclic(g, 0):
        # anchor independence: retracts are pairwise isomorphic
        if g.k > 1:
            assert _retract_cyclic(g, 1)
        return ("semicyclic", None, None)
    return ("neither", None, None)


def _retract_cyclic(g, a):
    bt = g.retract(a).binary
    return any(bt.element_order(x) == bt.k for x in range(bt.k))


def cyclic_generators(g, a):
    """All generators of a cyclic group with known generator a.

    Closed form: a^[t] generates iff gcd(t(n-1)+1, |A|) = 1; asserted
    against the brute-force orbit scan.
    """
    orbit = g.power_orbit(a)
    k, n = g.k, g.n
    closed = frozenset(
        orbit[t] for t in range(k) if gcd(t * (n - 1) + 1, k) == 1
    )
    brute = frozenset(x for x in g.elements if len(g.power_orbit(x)) == k)
    assert closed == brute, "generator formula disagrees with orbit scan"
    return closed


# -- idempotents and units ------------------------------------------------------


def idempotents(g):
    I = frozenset(a for a in g.elements if g.eval((a,) * g.n) == a)
    base = getattr(g.g, "derived_base", None)
    if base is not None and g.g.derived_c == base.id:
        shortcut = frozenset(
            b for b in g.elements if base.power(b, g.n - 1) == base.id)
        assert I == shortcut, "derived-group idempotent shortcut failed"
    return I


def units(g):
    n = g.n
    E = set()
    for e in g.elements:
        if all(
            g.eval((e,) * (i - 1) + (a,) + (e,) * (n - i)) == a
            for a in g.elements for i in range(1, n + 1)
        ):
            E.add(e)
    E = frozenset(E)
    I = idempotents(g)
    Z = center_family(g, "Z")
    assert E == I & Z, "units must be the central idempotents"
    if E:
        from .subgroups import is_subgroup as _is_sub
        assert _is_sub(g, E), "nonempty unit set must be a subgroup"
        assert E <= Z
    base = getattr(g.g, "derived_base", None)
    if base is not None and g.g.derived_c == base.id:
        shortcut = frozenset(
            z for z in base.center() if base.power(z, n - 1) == base.id)
        assert E == shortcut, "derived-group unit shortcut failed"
    return E


def units_are_characteristic(g, brute_cap=6):
    """E(A) is fixed by the retract twists; brute-force all automorphisms
    on tiny carriers.
    """
    E = units(g)
    if not E:
        return True
    for a in g.elements:
        r = g.retract(a)
        assert frozenset(r.beta[x] for x in E) == E
        assert frozenset(r.alpha[x] for x in E) == E
    if g.k <= brute_cap:
        for phi in nary_automorphisms(g):
            assert frozenset(phi[x] for x in E) == E
    return True


def nary_automorphisms(g):
    """All automorphisms of a tiny n-ary group, by exhaustive search."""
    k, n = g.k, g.n
    autos = []
    words = list(itertools.product(range(k), repeat=n))
    for phi in itertools.permutations(range(k)):
        if all(phi[g.op(w)] == g.op(tuple(phi[x] for x in w)) for w in words):
            autos.append(phi)
    return autos


# -- the center family ----------------------------------------------------------


def _theta_equal_padded(g, w1, w2, strict=False):
    """Equal-length words compared through one completion (Theorem-exact)."""
    n = g.n
    pad = n - len(w1)
    b = g.base
    if g.eval(w1 + (b,) * pad) != g.eval(w2 + (b,) * pad):
        return False
    if strict and g.k > 1:
        c = 1 % g.k
        if g.eval(w1 + (c,) * pad) != g.eval(w2 + (c,) * pad):
            return False
    return True


def center_family(g, kind, m=None, B=None, sigmas=None, strict=False):
    """Members: Z, HZ, Z_m, C, HC, C_m, DZ, HDZ, DC_m, HDC, TZ, HTZ, TC_m,
    HTC, sigma_m (the (Sigma,m)-centralizer).

    B defaults to the whole carrier (turning centralizers into centers).
    """
    n = g.n
    if B is None:
        B = tuple(g.elements)
    else:
        B = tuple(sorted(B))
    plain = {"Z": 2, "C": 2, "HZ": n, "HC": n}
    if kind in plain:
        return _centralizer(g, B, plain[kind], "plain", strict)
    if kind in ("Z_m", "C_m"):
        _check_m(n, m)
        return _centralizer(g, B, m, "plain", strict)
    if kind in ("DZ", "HDZ", "DC_m", "HDC"):
        mm = n if kind in ("HDZ", "HDC") else m
        _check_m(n, mm)
        return _centralizer(g, B, mm, "D", strict)
    if kind in ("TZ", "HTZ", "TC_m", "HTC"):
        mm = n if kind in ("HTZ", "HTC") else m
        _check_m(n, mm)
        return _centralizer(g, B, mm, "T", strict)
    if kind == "sigma_m":
        _check_m(n, m)
        return _sigma_centralizer(g, B, m, sigmas, strict)
    raise ValueError(f"unknown center kind {kind!r}")


def _check_m(n, m):
    if m is None or m < 2 or (n - 1) % (m - 1) != 0:
        raise BadM(f"need (m-1) | (n-1), got m={m}")


def _centralizer(g, B, m, variant, strict):
    out = set()
    for z in g.elements:
        if _central_member(g, B, m, variant, z, strict):
            out.add(z)
    return frozenset(out)


def _central_member(g, B, m, variant, z, strict):
    if variant == "plain":
        for mid in itertools.product(B, repeat=m - 2):
            for x in B:
                if not _theta_equal_padded(
                        g, (z,) + mid + (x,), (x,) + mid + (z,), strict):
                    return False
        return True
    if variant == "D":
        for x in B:
            diag = (x,) * (m - 1)
            if not _theta_equal_padded(g, (z,) + diag, diag + (z,), strict):
                return False
        return True
    # T: full windows of length m-1
    for xs in itertools.product(B, repeat=m - 1):
        if not _theta_equal_padded(g, (z,) + xs, xs + (z,), strict):
            return False
    return True


def _sigma_centralizer(g, B, m, sigmas, strict):
    if sigmas is None:
        raise ValueError("sigma_m needs a set of permutations of 0..m-2")
    out = set()
    for z in g.elements:
        ok = True
        for xs in itertools.product(B, repeat=m - 1):
            for sg in sigmas:
                perm = tuple(xs[sg[i]] for i in range(m - 1))
                if not _theta_equal_padded(g, (z,) + xs, perm + (z,), strict):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(z)
    return frozenset(out)


def center_subgroup_audit(g, B=None):
    """Subgroup-hood of the proven variants and the gcd intersection laws."""
    from .subgroups import is_subgroup as _is_sub

    n = g.n
    ms = [m for m in range(2, n + 1) if (n - 1) % (m - 1) == 0]
    plain = {m: center_family(g, "C_m", m=m, B=B) for m in ms}
    dvar = {m: center_family(g, "DC_m", m=m, B=B) for m in ms}
    tvar = {m: center_family(g, "TC_m", m=m, B=B) for m in ms}
    for fam, name in ((plain, "plain"), (dvar, "D"), (tvar, "T")):
        for m, S in fam.items():
            if S:
                assert _is_sub(g, S), f"{name} m={m} not a subgroup"
    for fam in (dvar, tvar):
        for m1 in ms:
            for m2 in ms:
                r = gcd(m1 - 1, m2 - 1) + 1
                assert fam[r] == fam[m1] & fam[m2], "gcd law failed"
    assert plain[2] == dvar[2] == tvar[2]
    for m in ms:
        assert tvar[m] <= dvar[m]
        assert plain[m] <= dvar[m]
    return {"plain": plain, "D": dvar, "T": tvar}


# -- normalizers -----------------------------------------------------------------


def normalizer_family(g, B, m, cross_check=True):
    """N_A(B, m): all x whose window sets agree at every i(m-1) position."""
    from .subgroups import is_subgroup as _is_sub

    B = frozenset(B)
    if not _is_sub(g, B):
        raise NotSubgroup("normalizer guarantees need a subgroup")
    _check_m(g.n, m)
    n = g.n
    steps = range(1, (n - 1) // (m - 1) + 1)
    out = set()
    for x in g.elements:
        w0 = window_set(g, B, x, 0)
        if all(window_set(g, B, x, i * (m - 1)) == w0 for i in steps):
            out.add(x)
    N = frozenset(out)
    assert B <= N, "normalizer must contain the subgroup"
    assert _is_sub(g, N), "normalizer must be a subgroup"
    if cross_check and m == n:
        _hn_cross_checks(g, B, N)
    if cross_check and m == 2:
        cover = g.cover()
        star = cover.star(B)
        nstar = cover.binary.normalizer(star)
        assert cover.closure({cover.theta(x) for x in N}) == nstar, \
            "(N_A(B))*(A) must be the cover normalizer"
    return N


def _hn_cross_checks(g, B, HN):
    # retract criterion at an element of B
    a = min(B)
    r = g.retract(a)
    assert frozenset(r.binary.normalizer(B)) == HN, \
        "HN must equal the retract normalizer"
    # covering criterion: (HN)_0(A) = N_(A_0)(B_0(A))
    cover = g.cover()
    zero_B = cover.star(B) & cover.correspondent()
    zero_HN = cover.star(HN) & cover.correspondent()
    A0 = cover.correspondent()
    elems = sorted(A0)
    pos = {e: i for i, e in enumerate(elems)}
    bt = cover.binary.subgroup_table(A0)
    nz = bt.normalizer(frozenset(pos[e] for e in zero_B))
    assert frozenset(pos[e] for e in zero_HN) == nz, \
        "(HN)_0(A) must normalize B_0(A) exactly"


def normalizer_gcd_audit(g, B):
    n = g.n
    ms = [m for m in range(2, n + 1) if (n - 1) % (m - 1) == 0]
    N = {m: normalizer_family(g, B, m, cross_check=False) for m in ms}
    for m1 in ms:
        for m2 in ms:
            r = gcd(m1 - 1, m2 - 1) + 1
            assert N[r] == N[m1] & N[m2], f"gcd law failed at ({m1},{m2})"
        for m2 in ms:
            if (m2 - 1) % (m1 - 1) == 0:
                assert N[m1] <= N[m2], "monotonicity failed"
    return N


# -- abelianness -------------------------------------------------------------------


def abelianness(g, strict=False):
    """Flag dict: abelian, semiabelian, m_semiabelian, weakly_semiabelian,
    weakly_m, T_semiabelian, commutative.
    """
    n = g.n
    ms = [m for m in range(2, n + 1) if (n - 1) % (m - 1) == 0]
    flags = {}
    flags["abelian"] = all(
        _theta_equal_padded(g, (x, y), (y, x), strict)
        for x in g.elements for y in g.elements
    )
    m_flags = {m: _is_m_semiabelian(g, m, strict) for m in ms}
    flags["m_semiabelian"] = m_flags
    flags["semiabelian"] = m_flags[n]
    assert m_flags[2] == flags["abelian"], "2-semiabelian must equal abelian"
    weak = {m: _is_weakly_m(g, m, strict) for m in ms}
    flags["weakly_m"] = weak
    flags["weakly_semiabelian"] = weak[n]
    tsemi = {m: _is_T_semiabelian(g, m, strict) for m in ms}
    flags["T_semiabelian"] = tsemi
    flags["commutative"] = flags["semiabelian"]
    # implication and gcd structure
    for m in ms:
        if m_flags[m]:
            assert weak[m], "m-semiabelian must be weakly m-semiabelian"
        if tsemi[m]:
            assert weak[m]
    for m1 in ms:
        for m2 in ms:
            if weak[m1] and weak[m2]:
                t = gcd(m1 - 1, m2 - 1) + 1
                assert weak[t], "weak gcd combination law failed"
    if flags["abelian"]:
        assert all(m_flags.values())
    return flags


def _is_m_semiabelian(g, m, strict):
    # fixed middle c^(m-2) for a single c must work for every (a, b)
    for c in g.elements:
        mid = (c,) * (m - 2)
        if all(
            _theta_equal_padded(g, (a,) + mid + (b,), (b,) + mid + (a,), strict)
            for a in g.elements for b in g.elements
        ):
            return True
    return False


def _is_weakly_m(g, m, strict):
    return all(
        _theta_equal_padded(
            g, (a,) + (b,) * (m - 1), (b,) * (m - 1) + (a,), strict)
        for a in g.elements for b in g.elements
    )


def _is_T_semiabelian(g, m, strict):
    return center_family(g, "TZ" if m == g.n else "TC_m", m=m) == frozenset(
        g.elements)


# -- idempotent Sylow partitions ---------------------------------------------------


def idempotent_sylow_partition(g, p, check_counts=True):
    """The m disjoint semi-invariant p-Sylow subgroups of an idempotent
    group with prime n-1; also the per-anchor a-direct decomposition.
    """
    from .subgroups import sylow_hall_semiabelian, a_direct_decomposition

    n, k = g.n, g.k
    if idempotents(g) != frozenset(g.elements):
        raise NoIdempotent("group must be idempotent")
    if not _is_prime(n - 1):
        raise BadM("n-1 must be prime")
    pk = 1
    kk = k
    while kk % p == 0:
        pk *= p
        kk //= p
    if pk == 1:
        raise BadM(f"p = {p} does not divide |A| = {k}")
    m = k // pk
    a = 0
    r = g.retract(a)
    from .subgroups import is_subgroup as _is_sub

    P1 = r.binary.sylow_subgroup(p)
    assert _is_sub(g, P1)
    dec = coset_decomposition(g, P1, "right")
    parts = [frozenset(c) for c in dec.cosets]
    assert len(parts) == m
    for P in parts:
        assert _is_sub(g, P), "coset fails to be a subgroup"
        assert check_normality(g, P, "semi_invariant")
    if check_counts:
        sylows = [
            S for S in all_subgroups(g) if len(S) == pk
            and check_normality(g, S, "semi_invariant")
        ]
        assert sorted(sylows, key=sorted) == sorted(parts, key=sorted), \
            "partition must exhaust the semi-invariant p-Sylow subgroups"
    # Theorem-style decomposition per anchor
    for anchor in g.elements:
        ra = g.retract(anchor)
        primes = sorted(set(_prime_factors(k)))
        fam = [ra.binary.sylow_subgroup(q) for q in primes]
        assert a_direct_decomposition(g, anchor, fam)
    return parts


def _is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


# -- semisolvability ------------------------------------------------------------------


def classify_solvability(g):
    """(semisolvable, seminilpotent) via the retract's series at anchor 0;
    spot-checked at a second anchor.
    """
    bt = g.retract(0).binary
    flags = (bt.is_solvable(), bt.is_nilpotent())
    if g.k > 1:
        bt2 = g.retract(1).binary
        assert (bt2.is_solvable(), bt2.is_nilpotent()) == flags, \
            "solvability must not depend on the anchor"
    return {"semisolvable": flags[0], "seminilpotent": flags[1]}
