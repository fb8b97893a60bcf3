import random

import pytest

from zdring import (
    CyclicGroupSpec,
    CyclicSubgroup,
    FiniteTableSpec,
    FreeGroupSpec,
    FreeProductSpec,
    Nil2Spec,
    commutator,
    enumerate_elements,
    is_antinormal_bounded,
    parse_table,
)

from oracles import mat_mul, mat_order, nil2_to_matrix, random_element


# ---------------------------------------------------------------------------
# multiplication and canonical forms


def test_freeprod_generator_power_wraps():
    spec = FreeProductSpec(3, None)
    a = spec.generator(0)
    assert (a * a * a).is_identity()
    assert a * (a * a) == spec.identity()


def test_freeprod_no_cancellation_in_alternating_words():
    spec = FreeProductSpec(2, 2)
    a, b = spec.generator(0), spec.generator(1)
    ab = a * b
    assert (ab * ab).key == ((0, 1), (1, 1), (0, 1), (1, 1))


def test_freeprod_cascading_cancellation():
    spec = FreeProductSpec(3, None)
    a, b = spec.generator(0), spec.generator(1)
    w1 = a * b * a  # a b a
    w2 = a * a * b.inverse() * a  # a^2 b^-1 a
    assert w1 * w2 == a * a  # a b a * a^2 b^-1 a = a^2


def test_nil2_multiplication_matches_matrix_model():
    spec = Nil2Spec(5)
    a, b = spec.gen_a(), spec.gen_b()
    ba = b * a
    assert ba.key == (1, 1, 4)  # a b c^(n-1)
    assert nil2_to_matrix(ba) == mat_mul(nil2_to_matrix(b), nil2_to_matrix(a), 5)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_nil2_sampled_products_match_matrix_model(n):
    spec = Nil2Spec(n)
    rng = random.Random(7 * n)
    for _ in range(300):
        g1 = random_element(rng, spec)
        g2 = random_element(rng, spec)
        assert nil2_to_matrix(g1 * g2) == mat_mul(
            nil2_to_matrix(g1), nil2_to_matrix(g2), n
        )


def test_mixed_group_operands_rejected():
    a = CyclicGroupSpec(3).generator()
    b = CyclicGroupSpec(4).generator()
    with pytest.raises(ValueError):
        a * b


# ---------------------------------------------------------------------------
# inversion


def test_inverse_examples():
    free = FreeGroupSpec(2)
    b1, b2 = free.generators()
    assert free.identity().inverse() == free.identity()
    assert (b1 * b2).inverse() == b2.inverse() * b1.inverse()

    nil = Nil2Spec(3)
    assert nil.gen_a().inverse() == nil.gen_a() ** 2
    assert nil2_to_matrix(nil.gen_a().inverse()) == nil2_to_matrix(nil.gen_a() ** 2)


@pytest.mark.parametrize(
    "spec",
    [
        FreeGroupSpec(2),
        CyclicGroupSpec(6),
        FreeProductSpec(3, None),
        FreeProductSpec(2, 2),
        Nil2Spec(4),
    ],
)
def test_inverse_cancels(spec):
    rng = random.Random(11)
    for _ in range(50):
        g = random_element(rng, spec)
        assert (g * g.inverse()).is_identity()
        assert (g.inverse() * g).is_identity()


# ---------------------------------------------------------------------------
# element order


def test_order_examples(klein4):
    assert CyclicGroupSpec(4).identity().order() == 1
    ab = FreeProductSpec(2, 2).generator(0) * FreeProductSpec(2, 2).generator(1)
    assert ab.order() is None
    assert Nil2Spec(5).gen_c().order() == 5
    assert mat_order(nil2_to_matrix(Nil2Spec(5).gen_c()), 5) == 5
    assert klein4.element_by_name("x").order() == 2


def test_freeprod_order_is_finite_iff_single_finite_syllable():
    spec = FreeProductSpec(3, None)
    for g in enumerate_elements(spec, 4):
        _, core = spec.cyclically_reduce(g.key)
        expected_finite = len(core) <= 1 and (not core or core[0][0] == 0)
        assert (g.order() is not None) == expected_finite


def test_nil2_orders_divide_n_for_odd_n():
    for n in (3, 5):
        spec = Nil2Spec(n)
        for g in enumerate_elements(spec):
            assert n % g.order() == 0
    # c is central
    spec = Nil2Spec(4)
    c = spec.gen_c()
    for g in enumerate_elements(spec):
        assert c * g == g * c


def test_free_group_order():
    b1 = FreeGroupSpec(2).generator(1)
    assert b1.order() is None
    assert FreeGroupSpec(2).identity().order() == 1


# ---------------------------------------------------------------------------
# commutator


def test_commutator_examples():
    nil = Nil2Spec(7)
    assert commutator(nil.gen_a(), nil.gen_b()) == nil.gen_c()
    assert nil2_to_matrix(commutator(nil.gen_a(), nil.gen_b())) == nil2_to_matrix(
        nil.gen_c()
    )

    free = FreeGroupSpec(2)
    b1, b2 = free.generators()
    w = commutator(b1, b2)
    assert w.key == ((0, 1), (1, 1), (0, -1), (1, -1))
    assert w.length() == 4

    g = FreeProductSpec(2, 2).generator(0)
    assert commutator(g, g).is_identity()


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_cyclic_full():
    spec = CyclicGroupSpec(3)
    got = set(enumerate_elements(spec))
    assert got == {spec.identity(), spec.generator(), spec.generator() ** 2}


def test_enumerate_nil2_full_count():
    assert sum(1 for _ in enumerate_elements(Nil2Spec(3))) == 27


def test_enumerate_freeprod_bound_two():
    spec = FreeProductSpec(2, 2)
    a, b = spec.generator(0), spec.generator(1)
    got = list(enumerate_elements(spec, 2))
    assert got == [spec.identity(), a, b, a * b, b * a]


@pytest.mark.parametrize(
    "spec,bound",
    [(FreeGroupSpec(2), 4), (FreeProductSpec(3, None), 5), (FreeProductSpec(2, 2), 6)],
)
def test_enumerate_unique_canonical_nondecreasing(spec, bound):
    seen = set()
    last_length = 0
    for g in enumerate_elements(spec, bound):
        spec.validate_key(g.key)
        assert g not in seen
        seen.add(g)
        assert g.length() >= last_length
        assert g.length() <= bound
        last_length = g.length()


def test_enumerate_infinite_requires_bound():
    with pytest.raises(ValueError):
        list(enumerate_elements(FreeGroupSpec(1)))


# ---------------------------------------------------------------------------
# associativity and canonicality spot checks


@pytest.mark.parametrize(
    "spec",
    [
        FreeGroupSpec(3),
        CyclicGroupSpec(5),
        FreeProductSpec(4, None),
        FreeProductSpec(2, 2),
        Nil2Spec(6),
    ],
)
def test_associativity_sampled(spec):
    rng = random.Random(spec.short_str())
    for _ in range(60):
        g1, g2, g3 = (random_element(rng, spec) for _ in range(3))
        assert (g1 * g2) * g3 == g1 * (g2 * g3)
        spec.validate_key((g1 * g2).key)


# ---------------------------------------------------------------------------
# finite tables


def test_table_validation_rejects_non_latin():
    with pytest.raises(ValueError, match="permute"):
        FiniteTableSpec(names=("e", "x"), table=((0, 1), (1, 1)))


def test_table_validation_rejects_wrong_identity():
    with pytest.raises(ValueError, match="identity"):
        FiniteTableSpec(names=("e", "x"), table=((1, 0), (0, 1)))


def test_table_validation_rejects_non_associative():
    # a Latin square with identity that fails associativity (order 5 loop)
    table = (
        (0, 1, 2, 3, 4),
        (1, 0, 3, 4, 2),
        (2, 4, 0, 1, 3),
        (3, 2, 4, 0, 1),
        (4, 3, 1, 2, 0),
    )
    with pytest.raises(ValueError, match="associative"):
        FiniteTableSpec(names=("e", "p", "q", "r", "s"), table=table)


def test_table_names_must_be_identifiers():
    with pytest.raises(ValueError, match="identifier"):
        FiniteTableSpec(names=("e", "2x"), table=((0, 1), (1, 0)))


def test_parse_table_rejects_malformed():
    with pytest.raises(ValueError):
        parse_table("2\ne x\ne x\n")  # missing a row
    with pytest.raises(ValueError):
        parse_table("2\ne x\ne x\nx y\n")  # unknown name


def test_parse_table_klein(klein4):
    assert klein4.group_order() == 4
    x, y = klein4.element_by_name("x"), klein4.element_by_name("y")
    assert x * y == klein4.element_by_name("xy")
    assert (x * x).is_identity()


# ---------------------------------------------------------------------------
# cyclic subgroups and antinormality


def test_cyclic_subgroup_checks_order():
    a = CyclicGroupSpec(6).generator()
    with pytest.raises(ValueError, match="order"):
        CyclicSubgroup(generator=a, order=3)
    assert CyclicSubgroup.generated_by(a).order == 6


def test_infinite_cyclic_membership():
    spec = FreeProductSpec(2, None)
    a, b = spec.generator(0), spec.generator(1)
    g = a * b  # infinite order
    K = CyclicSubgroup.generated_by(g)
    assert K.order is None
    assert K.contains(g ** 5)
    assert K.contains((g ** 3).inverse())
    assert K.contains(spec.identity())
    assert not K.contains(a)
    assert not K.contains(b * a)
    # conjugated generator: x (ab) x^-1 powers
    h = b * g * b.inverse()
    Kh = CyclicSubgroup.generated_by(h)
    assert Kh.contains(h ** 4)
    assert not Kh.contains(g)


def test_antinormal_klein_violation(klein4):
    K = CyclicSubgroup.generated_by(klein4.element_by_name("x"))
    report = is_antinormal_bounded(K)
    assert not report.ok
    assert report.exhaustive
    assert report.witness == klein4.element_by_name("y")


def test_antinormal_freeprod_generator():
    spec = FreeProductSpec(3, None)
    K = CyclicSubgroup.generated_by(spec.generator(0))
    report = is_antinormal_bounded(K, 6)
    assert report.ok
    assert not report.exhaustive
    assert report.conjugators_checked > 0


def test_antinormal_whole_cyclic_group():
    spec = CyclicGroupSpec(5)
    K = CyclicSubgroup.generated_by(spec.generator())
    report = is_antinormal_bounded(K)
    assert report.ok
    assert report.exhaustive
