from __future__ import annotations

import json
import random
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from wpp.sequences import (CoefficientRing, CoefficientSequence, PowerSequence, Q, SequenceError,
                           ViolationError, all_faces, coefficient_sequence_from_rule,
                           divisor_closed, generator_c, generator_d, generator_frak_c,
                           generator_frak_d, minimal_power_sequence, monoid_mul, normalize,
                           ones_power_sequence, phi, phi_extended, random_power_sequence, ratio,
                           validate_power_sequence)

from helpers import power_sequence_pairs, power_sequences


def three_vertex(p, q, r, s=1, t=1):
    return PowerSequence(3, {
        (): (1, 1, 1), (1,): (p, 1, 1), (2,): (1, q, 1), (3,): (1, 1, r),
        (1, 2): (p, q, 1), (1, 3): (p, 1, r), (2, 3): (1, q, s * r), (1, 2, 3): (p, q, t * s * r)})


# ---------- power sequences ----------

def test_three_vertex_minimal():
    c = three_vertex(2, 3, 5)
    assert c.is_valid and c.is_minimal() and not c.in_ps
    assert c == minimal_power_sequence(3, [2, 3, 5])
    assert ratio(c, (1, 3), (1, 2, 3)) == (1, 3, 1)


def test_three_vertex_non_minimal():
    c = three_vertex(2, 3, 5, s=7, t=2)
    assert c.is_valid and not c.is_minimal()
    assert ratio(c, (1, 3), (1, 2, 3)) == (1, 3, 14)


def test_divisibility_violation_is_itemized():
    table = dict(ones_power_sequence(3).table)
    table[(1, 2)] = (2, 1, 1)
    table[(1, 2, 3)] = (3, 1, 1)
    with pytest.raises(ViolationError) as info:
        validate_power_sequence(3, table)
    kinds = {(v.kind, v.small, v.big, v.vertex) for v in info.value.violations}
    assert ("divisibility", (1, 2), (1, 2, 3), 1) in kinds


def test_off_face_violation():
    table = dict(ones_power_sequence(2).table)
    table[(1,)] = (1, 2)
    with pytest.raises(ViolationError) as info:
        PowerSequence(2, table)
    kinds = {(v.kind, v.big, v.vertex) for v in info.value.violations}
    assert kinds == {("off-face", (1,), 2), ("divisibility", (1, 2), 2)}


def test_malformed_tables():
    table = dict(ones_power_sequence(2).table)
    del table[(1, 2)]
    with pytest.raises(SequenceError):
        PowerSequence(2, table)
    table = dict(ones_power_sequence(2).table)
    table[(1, 2)] = (0, 1)
    with pytest.raises(SequenceError):
        PowerSequence(2, table)


def test_ones_are_the_identity():
    one = ones_power_sequence(3)
    c = three_vertex(2, 3, 5, s=2)
    assert one * c == c
    assert phi(one) == coefficient_sequence_from_rule(3, lambda s: 1)


def test_json_round_trip_example():
    c = three_vertex(2, 3, 5)
    data = json.loads(json.dumps(c.to_json()))
    assert data["entries"]["[1,2,3]"] == [2, 3, 5]
    assert PowerSequence.from_json(data) == c


def test_random_power_sequence_needs_lattice():
    with pytest.raises(ValueError):
        random_power_sequence(2, random.Random(0), (1, 2, 3))
    assert divisor_closed(12) == [1, 2, 3, 4, 6, 12]


@given(power_sequences(normalized=False))
def test_random_sequences_are_valid(c):
    assert c.is_valid
    assert PowerSequence.from_json(json.loads(json.dumps(c.to_json()))) == c


@given(power_sequence_pairs())
def test_power_sequences_form_a_monoid(pair):
    a, b = pair
    ab = a * b
    assert ab.is_valid and ab.in_ps
    assert ab == b * a


@given(power_sequence_pairs())
def test_phi_is_a_monoid_map(pair):
    a, b = pair
    assert phi(a * b) == phi(a) * phi(b)


@given(power_sequences())
def test_phi_lands_in_cs(c):
    cs = phi(c)
    assert cs.is_valid
    assert cs == phi_extended(c)
    for s in all_faces(c.m):
        assert cs[s] == prod(c.entry(s, i) for i in s)


def test_phi_rejects_unnormalized():
    with pytest.raises(ViolationError) as info:
        phi(three_vertex(2, 3, 5))
    assert {v.kind for v in info.value.violations} == {"phi-domain"}


def test_monoid_mul_type_checks():
    with pytest.raises(TypeError):
        monoid_mul(ones_power_sequence(2), phi(ones_power_sequence(2)))
    with pytest.raises(ValueError):
        monoid_mul(ones_power_sequence(2), ones_power_sequence(3))


# ---------- coefficient sequences and rings ----------

def test_ring_parsing():
    assert str(CoefficientRing.parse("Z")) == "Z"
    assert str(CoefficientRing.parse("Q")) == "Q"
    R = CoefficientRing.parse("Z[1/3, 1/2]")
    assert str(R) == "Z[1/2,1/3]"
    assert R.is_unit(12) and not R.is_unit(10)
    assert R.unit_part(60) == 12
    assert CoefficientRing.from_json(R.to_json()) == R
    with pytest.raises(ValueError):
        CoefficientRing.parse("Z[1/4]")
    with pytest.raises(ValueError):
        CoefficientRing.parse("R")


def test_condition_1():
    with pytest.raises(ViolationError) as info:
        CoefficientSequence(2, {(): 1, (1,): 2, (2,): 1, (1, 2): 2})
    assert [v.kind for v in info.value.violations] == ["condition-1"]


def test_condition_2():
    table = {s: 2 if len(s) >= 2 else 1 for s in all_faces(3)}
    CoefficientSequence(3, table)
    table[(1, 2, 3)] = 3
    with pytest.raises(ViolationError) as info:
        CoefficientSequence(3, table)
    bad = {(v.kind, v.small, v.big) for v in info.value.violations}
    assert bad == {("condition-2", (1,), (1, 2, 3)), ("condition-2", (1, 2), (1, 2, 3)),
                   ("condition-2", (1, 3), (1, 2, 3))}


def test_condition_3_and_normalization():
    table = {(): 1, (1,): 1, (2,): 1, (1, 2): 6}
    CoefficientSequence(2, table)
    with pytest.raises(ViolationError) as info:
        CoefficientSequence(2, table, CoefficientRing.parse("Z[1/2]"))
    assert [v.kind for v in info.value.violations] == ["condition-3"]
    cs, units = normalize(2, table, CoefficientRing.parse("Z[1/2]"))
    assert cs[(1, 2)] == 3 and units[(1, 2)] == 2
    cs, _ = normalize(2, table, Q)
    assert cs[(1, 2)] == 1


def test_coefficient_monoid():
    a = coefficient_sequence_from_rule(3, lambda s: 2 ** max(0, len(s) - 1))
    b = coefficient_sequence_from_rule(3, lambda s: 3 if len(s) == 3 else 1)
    ab = a * b
    assert ab.is_valid and ab[(1, 2, 3)] == 12
    assert CoefficientSequence.from_json(json.loads(json.dumps(ab.to_json()))) == ab


# ---------- distinguished generators ----------

@pytest.mark.parametrize("m", [2, 3, 4])
def test_generator_membership(m):
    p = 2
    top = tuple(range(1, m + 1))
    for tau in all_faces(m):
        for j in range(1, m + 1):
            c = generator_c(m, tau, j, p)
            assert c.is_valid == (j in tau)
            assert c.in_ps == (j in tau and len(tau) >= 2)
            assert generator_d(m, tau, j, p).is_valid == (tau == top)
        assert generator_frak_c(m, tau, p).is_valid == (len(tau) >= 2)
        assert generator_frak_d(m, tau, p).is_valid == (tau == top and m >= 2)


def test_restricted_product_differs_off_face():
    # with j outside tau the face-restricted product misses the p on tau itself
    c = generator_c(3, (1, 2), 3, 2)
    restricted = {s: prod(c.entry(s, i) for i in s) for s in all_faces(3)}
    assert restricted[(1, 2)] == 1
    assert generator_frak_c(3, (1, 2), 2)[(1, 2)] == 2
    assert phi_extended(c) == generator_frak_c(3, (1, 2), 2)


@settings(max_examples=30)
@given(st.integers(1, 4), st.sampled_from([2, 3, 5]), st.data())
def test_generator_images(m, p, data):
    tau = data.draw(st.sampled_from(all_faces(m)))
    j = data.draw(st.integers(1, m))
    assert phi_extended(generator_c(m, tau, j, p)) == generator_frak_c(m, tau, p)
    assert phi_extended(generator_d(m, tau, j, p)) == generator_frak_d(m, tau, p)


@given(power_sequences(normalized=False), st.data())
def test_ratio_chains_compose(c, data):
    sigma = data.draw(st.sampled_from(all_faces(c.m)))
    tau = tuple(v for v in sigma if data.draw(st.booleans()))
    mu = tuple(v for v in tau if data.draw(st.booleans()))
    left = tuple(a * b for a, b in zip(ratio(c, tau, sigma), ratio(c, mu, tau)))
    assert left == ratio(c, mu, sigma)


@given(power_sequences(), st.sampled_from(["Z", "Q", "Z[1/2]", "Z[1/3]", "Z[1/2,1/5]"]))
def test_normalize_idempotent(c, ring_text):
    ring = CoefficientRing.parse(ring_text)
    cs, _ = normalize(c.m, phi(c).table, ring)
    again, units = normalize(c.m, cs.table, ring)
    assert again == cs and set(units.values()) == {1}
