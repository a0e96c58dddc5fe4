import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from randfca import (
    Concept,
    FormalContext,
    InputError,
    SizeError,
    contranomial,
    count_concepts,
    derive_attributes,
    derive_objects,
    empty_relation,
    enumerate_concepts,
    full_relation,
    is_concept,
)

from conftest import build_context, contexts, random_context


class TestConstruction:
    def test_duplicate_object_labels_rejected(self):
        with pytest.raises(InputError):
            FormalContext(("a", "a"), ("x",), ((True,), (False,)))

    def test_duplicate_attribute_labels_rejected(self):
        with pytest.raises(InputError):
            FormalContext(("a",), ("x", "x"), ((True, False),))

    def test_row_count_mismatch_rejected(self):
        with pytest.raises(InputError):
            FormalContext(("a", "b"), ("x",), ((True,),))

    def test_row_width_mismatch_rejected(self):
        with pytest.raises(InputError):
            FormalContext(("a",), ("x", "y"), ((True,),))

    def test_equality_is_structural(self):
        a = build_context(2, 2, [0b01, 0b10])
        b = FormalContext(("g1", "g2"), ("m1", "m2"), ((1, 0), (0, 1)))
        assert a == b
        assert hash(a) == hash(b)

    def test_labels_do_not_affect_concepts(self):
        plain = build_context(2, 2, [0b01, 0b10])
        renamed = FormalContext(("x", "y"), ("u", "v"), plain.incidence)
        assert enumerate_concepts(plain) == enumerate_concepts(renamed)


class TestDerivations:
    def test_contranomial_row_readoff(self):
        ctx = contranomial(2)
        assert derive_objects(ctx, {0}) == {1}

    def test_empty_object_set_derives_all_attributes(self):
        ctx = contranomial(3)
        assert derive_objects(ctx, set()) == {0, 1, 2}

    def test_full_relation_all_objects(self):
        ctx = full_relation(3, 2)
        assert derive_objects(ctx, {0, 1, 2}) == {0, 1}

    def test_contranomial_column_readoff(self):
        ctx = contranomial(2)
        assert derive_attributes(ctx, {1}) == {0}

    def test_empty_attribute_set_derives_all_objects(self):
        ctx = empty_relation(2, 2)
        assert derive_attributes(ctx, set()) == {0, 1}

    def test_empty_relation_attribute_derivation_empty(self):
        ctx = empty_relation(2, 2)
        assert derive_attributes(ctx, {0}) == set()

    def test_out_of_range_index_rejected(self):
        ctx = contranomial(2)
        with pytest.raises(InputError):
            derive_objects(ctx, {2})
        with pytest.raises(InputError):
            derive_attributes(ctx, {-1})


class TestIsConcept:
    def test_full_relation_top(self):
        ctx = full_relation(2, 2)
        assert is_concept(ctx, {0, 1}, {0, 1})

    def test_empty_relation_all_objects_no_attributes(self):
        ctx = empty_relation(2, 2)
        assert is_concept(ctx, {0, 1}, set())

    def test_empty_pair_is_not_a_concept_here(self):
        # deriving the empty object set gives all attributes, not none
        ctx = empty_relation(2, 2)
        assert not is_concept(ctx, set(), set())


class TestEnumeration:
    def test_contranomial_3_has_8_concepts(self):
        assert count_concepts(contranomial(3)) == 8

    def test_empty_relation_two_concepts(self):
        concepts = enumerate_concepts(empty_relation(2, 2))
        assert concepts == [
            Concept(frozenset(), frozenset({0, 1})),
            Concept(frozenset({0, 1}), frozenset()),
        ]

    def test_full_relation_single_concept(self):
        concepts = enumerate_concepts(full_relation(2, 3))
        assert concepts == [Concept(frozenset({0, 1}), frozenset({0, 1, 2}))]

    def test_single_cross(self):
        assert count_concepts(full_relation(1, 1)) == 1

    def test_single_missing_cross(self):
        assert count_concepts(empty_relation(1, 1)) == 2

    def test_contranomial_4_has_16_concepts(self):
        assert count_concepts(contranomial(4)) == 16

    @pytest.mark.parametrize("k", range(1, 13))
    def test_contranomial_counts_are_powers_of_two(self, k):
        assert count_concepts(contranomial(k)) == 2**k

    def test_no_objects_still_one_concept(self):
        assert count_concepts(empty_relation(0, 3)) == 1

    def test_no_attributes_still_one_concept(self):
        assert count_concepts(empty_relation(3, 0)) == 1

    def test_unknown_algorithm_rejected(self):
        with pytest.raises(InputError):
            enumerate_concepts(contranomial(2), algorithm="magic")

    def test_scan_guard(self):
        with pytest.raises(SizeError):
            enumerate_concepts(empty_relation(21, 1), algorithm="scan")

    def test_algorithms_agree_on_seeded_contexts(self):
        for trial in range(60):
            ctx = random_context(random.Random(trial))
            via_cbo = enumerate_concepts(ctx, algorithm="close-by-one")
            via_scan = enumerate_concepts(ctx, algorithm="closure-scan")
            assert via_cbo == via_scan

    def test_output_is_sorted_by_extent_bit_pattern(self):
        ctx = contranomial(3)
        masks = [
            sum(1 << i for i in concept.extent) for concept in enumerate_concepts(ctx)
        ]
        assert masks == sorted(masks)

    def test_every_output_is_a_concept_and_unique(self):
        for trial in range(30):
            ctx = random_context(random.Random(1000 + trial))
            concepts = enumerate_concepts(ctx)
            assert len(set(concepts)) == len(concepts)
            for concept in concepts:
                assert is_concept(ctx, concept.extent, concept.intent)


class TestBuilders:
    def test_contranomial_1_is_a_single_empty_cell(self):
        ctx = contranomial(1)
        assert ctx.incidence == ((False,),)

    def test_contranomial_requires_positive_size(self):
        with pytest.raises(InputError):
            contranomial(0)

    def test_full_relation_all_true(self):
        assert full_relation(2, 2).incidence == ((True, True), (True, True))

    def test_negative_sizes_rejected(self):
        with pytest.raises(InputError):
            empty_relation(-1, 2)


@given(contexts(), st.data())
def test_galois_connection(ctx, data):
    g, m = len(ctx.objects), len(ctx.attributes)
    objs = frozenset(data.draw(st.sets(st.integers(0, g - 1)) if g else st.just(set())))
    attrs = frozenset(data.draw(st.sets(st.integers(0, m - 1)) if m else st.just(set())))
    lhs = objs <= derive_attributes(ctx, attrs)
    rhs = attrs <= derive_objects(ctx, objs)
    assert lhs == rhs


@given(contexts(), st.data())
def test_extensive_and_idempotent(ctx, data):
    g = len(ctx.objects)
    objs = frozenset(data.draw(st.sets(st.integers(0, g - 1)) if g else st.just(set())))
    once = derive_objects(ctx, objs)
    closed = derive_attributes(ctx, once)
    assert objs <= closed
    assert derive_objects(ctx, closed) == once


@given(contexts(), st.data())
def test_derivation_is_antitone(ctx, data):
    g = len(ctx.objects)
    small = frozenset(data.draw(st.sets(st.integers(0, g - 1)) if g else st.just(set())))
    extra = frozenset(data.draw(st.sets(st.integers(0, g - 1)) if g else st.just(set())))
    large = small | extra
    assert derive_objects(ctx, large) <= derive_objects(ctx, small)


@given(contexts(max_objects=6, max_attributes=6))
def test_enumeration_algorithms_agree(ctx):
    assert enumerate_concepts(ctx, "close-by-one") == enumerate_concepts(ctx, "closure-scan")
