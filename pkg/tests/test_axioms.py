import itertools
import random

import pytest

from polyad import axioms as ax
from polyad import bingroup
from polyad.constructions import derived
from polyad.core import NaryGroupoid, is_associative, is_group
from polyad.errors import NotAssociative
from conftest import example


def _associative_corpus(seed=11, count=1000):
    """Perturb-and-filter: random tables are rarely associative, so the
    corpus is dominated by constructions plus the known non-group
    semigroups; rejects are documented by construction."""
    rng = random.Random(seed)
    corpus = []
    kept = 0
    for trial in range(count):
        k = rng.choice([2, 3])
        n = 3
        flat = [rng.randrange(k) for _ in range(k**n)]
        g = NaryGroupoid.from_table(k, n, flat)
        if is_associative(g):
            corpus.append((f"random#{trial}", g))
            kept += 1
    return corpus, kept


class TestSystems:
    def test_all_true_on_groups(self, t3, b3_5ary):
        for g in (t3, b3_5ary):
            verdicts = ax.all_verdicts(g)
            assert all(verdicts.values())

    @pytest.mark.parametrize("k,n", [(2, 3), (3, 3), (2, 4), (3, 4)])
    def test_projections_all_false(self, k, n):
        for side in ("right", "left"):
            g = ax.projection_magma(k, n, side)
            verdicts = ax.all_verdicts(g)
            assert not any(verdicts.values()), (k, n, side)

    @pytest.mark.parametrize("n", [3, 4])
    def test_derived_over_small_cyclic_all_true(self, n):
        g = ax.derived_over_small_cyclic(n)
        assert all(ax.all_verdicts(g).values())

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_repeated_unknowns_fails_there(self, n):
        # the diagonal counterexample: a real group where the repeated
        # unknown shape is unsolvable
        g = ax.derived_over_small_cyclic(n)
        assert is_group(g.g, assume_associative=True)
        assert not ax.repeated_unknowns(g)

    def test_interior_multi_true_on_projection(self):
        g = ax.projection_magma(2, 3, "right")
        assert ax.interior_multi(g, 1)
        assert ax.interior_multi(g, 2)
        assert not is_group(g)
        # only the border pair (i=n, j=1) defines a group: encoded as MAIN
        assert not ax.main_system(g)

    def test_left_projection_dual(self):
        g = ax.projection_magma(2, 3, "left")
        assert ax.interior_multi(g, 3)
        assert not is_group(g)

    def test_post1_on_projection_false(self):
        g = ax.projection_magma(2, 3, "right")
        assert not ax.post1(g, 2)

    def test_not_associative_rejected(self):
        flat = [0, 1, 1, 0, 1, 0, 0, 0]
        g = NaryGroupoid.from_table(2, 3, flat)
        if not is_associative(g):
            with pytest.raises(NotAssociative):
                ax.check_axiom(g, "POST2")

    def test_dispatch(self, t3):
        assert ax.check_axiom(t3, "POST2")
        assert ax.check_axiom(t3, "POST1", i=2)
        assert ax.check_axiom(t3, "ONE_EQ", k=1, i=1)
        assert ax.check_axiom(t3, "DPOINT", i=1, j=2)
        assert ax.check_axiom(t3, "LONG", k=2, m=1)


class TestUniqueSolvability:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_multi_unknown_unique_iff_singleton(self, k):
        g = derived(bingroup.cyclic(k), 0, 3)
        unique = True
        for a in range(k):
            for b in range(k):
                sols = [
                    xs for xs in itertools.product(range(k), repeat=2)
                    if g.op(xs + (a,)) == b
                ]
                if len(sols) != 1:
                    unique = False
        assert unique == (k == 1)


class TestSolutionStructure:
    def test_partition_by_suffix(self, t3):
        # solutions of [x1 x2 a] = b split into nonempty disjoint classes
        # X(alpha2) by the second coordinate
        g = t3
        a, b = 0, 2
        sols = [
            xs for xs in itertools.product(g.elements, repeat=2)
            if g.eval(xs + (a,)) == b
        ]
        by_second = {}
        for x1, x2 in sols:
            by_second.setdefault(x2, set()).add((x1, x2))
        assert len(sols) == 3
        assert all(len(v) == 1 for v in by_second.values())
        assert len(by_second) == 3

    def test_counts(self, t3, rusakov5):
        for tail in itertools.product(t3.elements, repeat=1):
            for b in t3.elements:
                assert ax.count_solutions(t3, 2, tail, b) == 3
        assert ax.count_solutions(rusakov5, 3, (1, 2), 0) == 64


class TestAudit:
    def test_catalog_small(self, t3):
        corpus = [("T3", t3), ("Zg(3,3)", example("Zg_cyclic(3,3)"))]
        report = ax.equivalence_audit(corpus)
        assert all(flag for _, flag, _ in report)

    def test_projection_and_counterexample_corpus(self):
        corpus = []
        for k in (2, 3):
            for n in (3, 4):
                corpus.append((f"proj({k},{n})", ax.projection_magma(k, n)))
                corpus.append(
                    (f"lproj({k},{n})", ax.projection_magma(k, n, "left")))
        for n in (3, 4):
            corpus.append((f"dC{n - 1}", ax.derived_over_small_cyclic(n)))
        ax.equivalence_audit(corpus)

    def test_random_associative_corpus(self):
        corpus, kept = _associative_corpus(seed=11, count=1000)
        report = ax.equivalence_audit(corpus)
        assert len(report) == kept
