import pytest

from delpezzo.groups import (
    NoFaithfulActionError,
    PermGroup,
    character_table,
    compose,
    equivariant_bundle_parity,
    from_cycles,
    is_simple,
    maximal_cyclic_orders,
    min_orbit_on_curve,
    p1_special_orbit_sizes,
    standard_group,
    verify_character_table,
)


@pytest.fixture(scope="module")
def groups():
    return {name: standard_group(name) for name in ("A5", "A6", "L2_7")}


def test_orders(groups):
    assert groups["A5"].order == 60
    assert groups["A6"].order == 360
    assert groups["L2_7"].order == 168


def test_class_counts(groups):
    assert len(groups["A5"].classes) == 5
    assert len(groups["A6"].classes) == 7
    assert len(groups["L2_7"].classes) == 6


def test_class_profiles(groups):
    a5 = [(c.order, c.size) for c in groups["A5"].classes]
    assert a5 == [(1, 1), (2, 15), (3, 20), (5, 12), (5, 12)]
    l27 = [(c.order, c.size) for c in groups["L2_7"].classes]
    assert l27 == [(1, 1), (2, 21), (3, 56), (4, 42), (7, 24), (7, 24)]


def test_class_sizes_divide_and_sum(groups):
    for group in groups.values():
        sizes = [c.size for c in group.classes]
        assert sum(sizes) == group.order
        assert all(group.order % s == 0 for s in sizes)
        identity_classes = [c for c in group.classes if c.order == 1]
        assert len(identity_classes) == 1 and identity_classes[0].size == 1


def test_simplicity(groups):
    for group in groups.values():
        assert is_simple(group)
    c4 = PermGroup.generate("C4", 4, [from_cycles(4, [(0, 1, 2, 3)])])
    assert not is_simple(c4)
    s3 = PermGroup.generate(
        "S3", 3, [from_cycles(3, [(0, 1)]), from_cycles(3, [(0, 1, 2)])]
    )
    assert not is_simple(s3)


def test_no_small_index_subgroups(groups):
    # an index-k subgroup of a simple group embeds it into S_k
    for group in groups.values():
        assert is_simple(group) and group.order > 24  # 24 = |S_4|


def test_p1_orbit_sizes(groups):
    assert p1_special_orbit_sizes(groups["A5"]) == frozenset({12, 20, 30, 60})
    assert p1_special_orbit_sizes(groups["A6"]) is None
    assert p1_special_orbit_sizes(groups["L2_7"]) is None


def test_maximal_cyclic_orders(groups):
    assert maximal_cyclic_orders(groups["A5"]) == [2, 3, 5]


def test_min_orbit(groups):
    assert min_orbit_on_curve(groups["A5"]) == 12
    assert min_orbit_on_curve(groups["A5"]) >= 6
    with pytest.raises(NoFaithfulActionError):
        min_orbit_on_curve(groups["A6"])
    with pytest.raises(NoFaithfulActionError):
        min_orbit_on_curve(groups["L2_7"])


def test_orbit_sizes_divide_group_order(groups):
    sizes = p1_special_orbit_sizes(groups["A5"])
    assert all(60 % s == 0 and s >= 12 for s in sizes)


def test_parity():
    assert equivariant_bundle_parity(2)
    assert not equivariant_bundle_parity(3)
    assert equivariant_bundle_parity(60)
    for r in range(1, 101):
        assert equivariant_bundle_parity(r) == (r % 2 == 0)
    for r in range(1, 99):
        assert equivariant_bundle_parity(r) == equivariant_bundle_parity(r + 2)


def test_character_tables_verify(groups):
    for name, group in groups.items():
        table = character_table(name)
        assert verify_character_table(group, table)


def test_character_table_degree_gaps(groups):
    for name in ("A5", "A6", "L2_7"):
        degrees = [d.a for d in character_table(name).degrees()]
        assert 2 not in degrees
    for name in ("A6", "L2_7"):
        degrees = [d.a for d in character_table(name).degrees()]
        assert 4 not in degrees
    # the icosahedral group does have a four-dimensional irreducible
    assert 4 in [d.a for d in character_table("A5").degrees()]


def test_broken_table_fails(groups):
    import dataclasses

    from delpezzo.groups import QuadVal

    table = character_table("A5")
    # substitute a degree-2 row: sum of squares no longer matches
    rows = list(table.rows)
    bad_row = tuple([QuadVal.of(2, 5)] + list(rows[1][1:]))
    broken = dataclasses.replace(table, rows=tuple([rows[0], bad_row] + rows[2:]))
    assert not verify_character_table(groups["A5"], broken)


def test_perm_helpers():
    p = from_cycles(5, [(0, 1, 2, 3, 4)])
    q = from_cycles(5, [(0, 1, 2)])
    assert compose(p, q) != compose(q, p)
    assert sorted(p) == list(range(5))
