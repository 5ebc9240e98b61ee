"""Attack graphs, labellings, the information order, completions."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from maymust import (
    LABELS,
    AttackGraph,
    DomainMismatchError,
    Label,
    Labelling,
    LabellingSet,
    UnknownArgumentError,
    labelling_leq,
    maximal_completions,
)

from .strategies import labellings_over


def all_labellings(names):
    for combo in product(LABELS, repeat=len(names)):
        yield Labelling(dict(zip(names, combo)))


class TestAttackGraph:
    def test_attackers_in_declaration_order(self):
        g = AttackGraph(
            ("a_p", "a_r", "a_q"),
            (("a_p", "a_r"), ("a_r", "a_p"), ("a_r", "a_q"), ("a_q", "a_r")),
        )
        assert g.attackers("a_r") == ("a_p", "a_q")
        assert g.attackers("a_p") == ("a_r",)

    def test_attackers_empty(self):
        g = AttackGraph(("a_1", "a_2"), (("a_1", "a_2"),))
        assert g.attackers("a_1") == ()

    def test_self_attack(self):
        g = AttackGraph(("a",), (("a", "a"),))
        assert g.attackers("a") == ("a",)

    def test_unknown_argument(self):
        g = AttackGraph(("a",), ())
        with pytest.raises(UnknownArgumentError):
            g.attackers("b")

    def test_rejects_undeclared_endpoint(self):
        with pytest.raises(UnknownArgumentError):
            AttackGraph(("a",), (("a", "b"),))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            AttackGraph(("a", "a"), ())
        with pytest.raises(ValueError):
            AttackGraph(("a",), (("a", "a"), ("a", "a")))

    def test_rejects_bad_name(self):
        with pytest.raises(ValueError):
            AttackGraph(("a b",), ())


class TestInformationOrder:
    def test_all_undec_below_everything(self):
        bottom = Labelling.all_undec(["a", "b"])
        for other in all_labellings(("a", "b")):
            assert bottom.leq(other)

    def test_in_out_incomparable(self):
        l1 = Labelling({"a": Label.IN})
        l2 = Labelling({"a": Label.OUT})
        assert not l1.leq(l2)
        assert not l2.leq(l1)

    def test_pointwise_refinement(self):
        l1 = Labelling({"a": Label.IN, "b": Label.UNDEC})
        l2 = Labelling({"a": Label.IN, "b": Label.OUT})
        assert labelling_leq(l1, l2)
        assert not labelling_leq(l2, l1)

    def test_cross_domain_is_an_error(self):
        with pytest.raises(DomainMismatchError):
            Labelling({"a": Label.IN}).leq(Labelling({"b": Label.IN}))

    def test_partial_order_laws(self):
        everything = list(all_labellings(("a", "b", "c")))
        for x in everything:
            assert x.leq(x)
        for x in everything:
            for y in everything:
                if x.leq(y) and y.leq(x):
                    assert x == y
                if not x.leq(y):
                    continue
                for z in everything:
                    if y.leq(z):
                        assert x.leq(z)


class TestMaximalCompletions:
    def test_already_maximal(self):
        l = Labelling({"a": Label.IN, "b": Label.OUT})
        assert maximal_completions(l) == LabellingSet([l])

    def test_one_undec(self):
        l = Labelling({"a": Label.UNDEC})
        assert maximal_completions(l) == LabellingSet(
            [Labelling({"a": Label.IN}), Labelling({"a": Label.OUT})]
        )

    def test_all_undec_three_arguments(self):
        completions = maximal_completions(Labelling.all_undec(["a_p", "a_r", "a_q"]))
        assert len(completions) == 8

    def test_matches_filter_of_full_enumeration(self):
        names = ("a", "b", "c")
        for labelling in all_labellings(names):
            expected = [
                other
                for other in all_labellings(names)
                if labelling.leq(other)
                and all(other[n] is not Label.UNDEC for n in names)
            ]
            assert maximal_completions(labelling) == LabellingSet(expected)


class TestRestrict:
    def test_drops_arguments(self):
        l = Labelling({"a": Label.IN, "b": Label.OUT})
        assert l.restrict({"a"}) == Labelling({"a": Label.IN})

    def test_full_domain_is_identity(self):
        l = Labelling({"a": Label.IN, "b": Label.OUT})
        assert l.restrict(l.domain) == l

    def test_empty_restriction(self):
        l = Labelling({"a": Label.IN})
        assert l.restrict(set()) == Labelling({})

    def test_outside_domain_is_an_error(self):
        with pytest.raises(DomainMismatchError):
            Labelling({"a": Label.IN}).restrict({"a", "b"})

    @given(labellings_over(("a", "b", "c")), labellings_over(("a", "b", "c")),
           st.sets(st.sampled_from(["a", "b", "c"])))
    def test_idempotent_and_monotone(self, l1, l2, subset):
        assert l1.restrict(subset).restrict(subset) == l1.restrict(subset)
        if l1.leq(l2):
            assert l1.restrict(subset).leq(l2.restrict(subset))


class TestLabellingSet:
    def test_canonical_order(self):
        members = [
            Labelling({"a": Label.UNDEC, "b": Label.IN}),
            Labelling({"a": Label.IN, "b": Label.OUT}),
            Labelling({"a": Label.IN, "b": Label.IN}),
        ]
        ordered = LabellingSet(members)
        assert [m.render() for m in ordered] == [
            "a=in b=in",
            "a=in b=out",
            "a=undec b=in",
        ]

    def test_deduplicates(self):
        l = Labelling({"a": Label.IN})
        assert len(LabellingSet([l, Labelling({"a": Label.IN})])) == 1

    def test_mixed_domains_rejected(self):
        with pytest.raises(DomainMismatchError):
            LabellingSet([Labelling({"a": Label.IN}), Labelling({"b": Label.IN})])
