"""Scale classification, designations, proper labels, exact labellings."""

import pytest
from hypothesis import given, strategies as st

from maymust import (
    DESIGNATION_CELLS,
    ConditionClass,
    DomainMismatchError,
    Label,
    Labelling,
    MayMustScale,
    MmaFramework,
    NuanceTuple,
    classify,
    classify_counts,
    count_labelled,
    designation_cell,
    designation_for_counts,
    designations_mma,
    is_exact_mma,
    is_proper_mma,
    scale_warnings,
)
from maymust.core import AttackGraph

from .instances import THREE_CYCLE_MMA

NOT, MAYS, MUST = ConditionClass.NOT, ConditionClass.MAYS, ConditionClass.MUST
IN, OUT, UNDEC = Label.IN, Label.OUT, Label.UNDEC


def scale_pairs(bound):
    for may in range(bound + 1):
        for must in range(may, bound + 1):
            yield MayMustScale(may, must)


def nuance_tuples(bound):
    for acc in scale_pairs(bound):
        for rej in scale_pairs(bound):
            yield NuanceTuple(acc, rej)


class TestScaleTypes:
    def test_rejects_may_above_must(self):
        with pytest.raises(ValueError):
            MayMustScale(2, 1)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            MayMustScale(-1, 0)

    def test_classify_thresholds(self):
        scale = MayMustScale(1, 2)
        assert scale.classify(0) is NOT
        assert scale.classify(1) is MAYS
        assert scale.classify(2) is MUST
        assert scale.classify(5) is MUST


class TestCountLabelled:
    def test_mixed_attackers(self):
        l = Labelling({"a_p": OUT, "a_q": IN, "a_r": UNDEC})
        assert count_labelled(THREE_CYCLE_MMA, l, "a_r", OUT) == 1
        assert count_labelled(THREE_CYCLE_MMA, l, "a_r", IN) == 1

    def test_attackerless_argument(self):
        graph = AttackGraph(("a",), ())
        fw = MmaFramework(graph, {"a": NuanceTuple.of(0, 0, 1, 1)})
        empty = Labelling({})
        assert count_labelled(fw, empty, "a", OUT) == 0
        assert count_labelled(fw, empty, "a", IN) == 0

    def test_undec_attackers_count_for_neither(self):
        l = Labelling({"a_p": UNDEC, "a_q": UNDEC})
        assert count_labelled(THREE_CYCLE_MMA, l, "a_r", OUT) == 0
        assert count_labelled(THREE_CYCLE_MMA, l, "a_r", IN) == 0

    def test_unlabelled_attacker_is_an_error(self):
        l = Labelling({"a_p": OUT})
        with pytest.raises(DomainMismatchError):
            count_labelled(THREE_CYCLE_MMA, l, "a_r", OUT)

    def test_undec_target_rejected(self):
        l = Labelling({"a_p": OUT, "a_q": IN})
        with pytest.raises(ValueError):
            count_labelled(THREE_CYCLE_MMA, l, "a_r", UNDEC)


class TestClassify:
    def test_both_attackers_out(self):
        scales = NuanceTuple.of(1, 2, 1, 1)
        assert classify_counts(scales, 2, 0) == (MUST, NOT)

    def test_one_out_one_in(self):
        scales = NuanceTuple.of(1, 2, 1, 1)
        assert classify_counts(scales, 1, 1) == (MAYS, MUST)

    def test_unconditional_acceptance(self):
        scales = NuanceTuple.of(0, 0, 2, 2)
        assert classify_counts(scales, 0, 0) == (MUST, NOT)

    def test_framework_level(self):
        l = Labelling({"a_p": OUT, "a_q": IN, "a_r": OUT})
        assert classify(THREE_CYCLE_MMA, l, "a_r") == (MAYS, MUST)

    def test_exactly_one_class_per_axis(self):
        for scales in nuance_tuples(4):
            for out_count in range(5):
                for in_count in range(5):
                    acc, rej = classify_counts(scales, out_count, in_count)
                    assert isinstance(acc, ConditionClass)
                    assert isinstance(rej, ConditionClass)

    def test_monotone_in_counts(self):
        # more rejected attackers never pushes acceptance back toward NOT
        order = {NOT: 0, MAYS: 1, MUST: 2}
        for scales in nuance_tuples(3):
            for count in range(4):
                before, _ = classify_counts(scales, count, 0)
                after, _ = classify_counts(scales, count + 1, 0)
                assert order[before] <= order[after]
                _, rej_before = classify_counts(scales, 0, count)
                _, rej_after = classify_counts(scales, 0, count + 1)
                assert order[rej_before] <= order[rej_after]


class TestDesignations:
    def test_both_attackers_undecided(self):
        l = Labelling({"a_p": UNDEC, "a_q": UNDEC})
        assert designations_mma(THREE_CYCLE_MMA, l, "a_r") == {UNDEC}

    def test_one_out_one_undecided(self):
        l = Labelling({"a_p": OUT, "a_q": UNDEC})
        assert designations_mma(THREE_CYCLE_MMA, l, "a_r") == {IN, UNDEC}

    def test_single_in_attacker(self):
        scales = NuanceTuple.of(1, 2, 1, 2)
        assert designation_for_counts(scales, 0, 1) == {OUT, UNDEC}

    def test_never_empty(self):
        for scales in nuance_tuples(4):
            for out_count in range(5):
                for in_count in range(5):
                    assert designation_for_counts(scales, out_count, in_count)

    def test_rules_agree_with_table(self):
        for scales in nuance_tuples(4):
            for out_count in range(5):
                for in_count in range(5):
                    region = classify_counts(scales, out_count, in_count)
                    assert designation_for_counts(scales, out_count, in_count) == \
                        designation_cell(*region)

    def test_cell_subsumption(self):
        # every cell is contained in its two MAYS-ward neighbours
        for x in ConditionClass:
            for y in ConditionClass:
                cell = DESIGNATION_CELLS[(x, y)]
                assert cell <= DESIGNATION_CELLS[(MAYS, y)]
                assert cell <= DESIGNATION_CELLS[(x, MAYS)]


class TestProperAndExact:
    def test_proper_label(self):
        l = Labelling({"a_p": OUT, "a_r": OUT, "a_q": IN})
        assert is_proper_mma(THREE_CYCLE_MMA, l, "a_r")

    def test_improper_label(self):
        l = Labelling({"a_p": IN, "a_r": OUT, "a_q": IN})
        assert not is_proper_mma(THREE_CYCLE_MMA, l, "a_p")

    def test_undefined_argument_is_not_proper(self):
        l = Labelling({"a_p": OUT, "a_q": IN})
        assert not is_proper_mma(THREE_CYCLE_MMA, l, "a_r")

    def test_exact_labellings(self):
        assert is_exact_mma(
            THREE_CYCLE_MMA, Labelling({"a_p": OUT, "a_r": OUT, "a_q": IN})
        )
        assert is_exact_mma(
            THREE_CYCLE_MMA, Labelling({"a_p": OUT, "a_r": UNDEC, "a_q": IN})
        )

    def test_not_exact(self):
        assert not is_exact_mma(
            THREE_CYCLE_MMA, Labelling({"a_p": OUT, "a_r": IN, "a_q": IN})
        )

    def test_empty_framework_vacuously_exact(self):
        fw = MmaFramework(AttackGraph((), ()), {})
        assert is_exact_mma(fw, Labelling({}))

    def test_wrong_domain_is_an_error(self):
        with pytest.raises(DomainMismatchError):
            is_exact_mma(THREE_CYCLE_MMA, Labelling({"a_p": OUT}))


class TestFrameworkValidation:
    def test_scales_must_cover_arguments(self):
        graph = AttackGraph(("a", "b"), ())
        with pytest.raises(ValueError):
            MmaFramework(graph, {"a": NuanceTuple.of(0, 0, 1, 1)})

    def test_unreachable_thresholds_warn(self):
        fw = THREE_CYCLE_MMA
        assert scale_warnings(fw) == []
        graph = AttackGraph(("a",), ())
        big = MmaFramework(graph, {"a": NuanceTuple.of(0, 5, 0, 1)})
        notes = scale_warnings(big)
        assert len(notes) == 1 and "n2=5" in notes[0]


@given(st.integers(0, 5), st.integers(0, 5), st.data())
def test_designations_never_empty_random(out_count, in_count, data):
    bound = 5
    n1 = data.draw(st.integers(0, bound))
    n2 = data.draw(st.integers(n1, bound))
    m1 = data.draw(st.integers(0, bound))
    m2 = data.draw(st.integers(m1, bound))
    scales = NuanceTuple.of(n1, n2, m1, m2)
    assert designation_for_counts(scales, out_count, in_count)
