import itertools
from fractions import Fraction

import pytest

from delpezzo.families import (
    FamilyError,
    FamilyParams,
    a5_orbit_sizes_match,
    build,
    clebsch_cubic_is_smooth,
    closed_form_k2,
    cuspidal_cubic,
    default_grid,
    expected_singular_types,
    family_report,
    klein_double_cover,
    klein_quartic,
    plane_curve_is_smooth,
    s5_line_graph,
    verify_claims,
)
from delpezzo.poly import Poly
from delpezzo.surfaces import is_del_pezzo, k2_direct


def test_parameter_validation():
    with pytest.raises(FamilyError):
        FamilyParams("F", n=1, k=13, a=1).validate()
    with pytest.raises(FamilyError):
        FamilyParams("F", n=6, k=12, a=1).validate()  # ak - 2n = 0
    with pytest.raises(FamilyError):
        FamilyParams("PTilde", k=12, s=-1).validate()
    with pytest.raises(FamilyError):
        FamilyParams("P11n", n=0).validate()
    FamilyParams("F", n=5, k=12, a=1).validate()  # ak - 2n = 2 is fine


def test_f_two_singular_points_for_a_equal_one():
    sing = build(FamilyParams("F", n=1, k=12, a=1))
    assert sorted(p.type_string for p in sing.singular_points) == [
        "1/10(1,1)",
        "1/2(1,1)",
    ]
    assert sing.k2 == Fraction(12, 5)
    assert sing.rho == 12


def test_f_chains_for_a_equal_two():
    sing = build(FamilyParams("F", n=1, k=12, a=2))
    types = sorted(p.type_string for p in sing.singular_points)
    assert types.count("1/2(1,1)") == 13  # 12 chains of length one plus the D point
    assert "1/22(1,1)" in types
    assert len(types) == 14


def test_f_chains_for_a_equal_three():
    sing = build(FamilyParams("F", n=1, k=12, a=3))
    types = [p.type_string for p in sing.singular_points]
    assert types.count("A2") == 12
    assert "1/34(1,1)" in types and "1/2(1,1)" in types


def test_ptilde_single_point():
    sing = build(FamilyParams("PTilde", k=12, s=0))
    assert [p.type_string for p in sing.singular_points] == ["1/8(1,1)"]
    assert sing.k2 == Fraction(3, 2)


def test_ptilde_with_du_val_points():
    sing = build(FamilyParams("PTilde", k=12, s=1))
    types = sorted(p.type_string for p in sing.singular_points)
    assert types.count("1/2(1,1)") == 12  # A_1 = 1/2(1,1)
    assert "1/20(1,1)" in types


def test_p112_values():
    sing = build(FamilyParams("P11n", n=1))
    assert sing.k2 == 8
    assert sing.rho == 1
    assert [p.type_string for p in sing.singular_points] == ["1/2(1,1)"]
    assert is_del_pezzo(sing).status == "Yes"


def test_p11n_anticanonical_anchor():
    # -K = (2n+2) l with l the Weil generator of square 1/2n
    for n in range(1, 6):
        sing = build(FamilyParams("P11n", n=n))
        assert sing.k2 == Fraction((2 * n + 2) ** 2, 2 * n)


def test_f_10_10_1_constants():
    sing = build(FamilyParams("F", n=5, k=20, a=1))
    assert sing.rho == 20
    assert sing.k2 == Fraction(4, 5)
    assert sing.resolution.rho == 22


def test_s5():
    sing = build(FamilyParams("S5"))
    assert sing.k2 == 5 and sing.rho == 5
    assert sing.singular_points == ()
    assert is_del_pezzo(sing).status == "Yes"
    report = family_report(FamilyParams("S5"))
    assert report.rho_g == 1


def test_closed_form_matches_lattice_on_grid():
    for params in default_grid():
        if params.tag == "KleinDoubleCover":
            continue
        sing = build(params)
        assert sing.k2 == closed_form_k2(params)
        assert sing.k2 == k2_direct(sing)


def test_grid_all_claims_pass():
    for params in default_grid():
        for check in verify_claims(params):
            assert check.passed, (params.label(), check.name, check.detail)


def test_grid_k2_positive():
    for params in default_grid():
        if params.tag == "KleinDoubleCover":
            continue
        assert build(params).k2 > 0


def test_expected_singular_types_shapes():
    assert expected_singular_types(FamilyParams("PTilde", k=12, s=0)) == ["1/8(1,1)"]
    f = expected_singular_types(FamilyParams("F", n=1, k=12, a=2))
    assert f.count("1/2(1,1)") == 13


def test_orbit_sizes_feed_the_constructors():
    assert a5_orbit_sizes_match()


# -- the quintic line graph ------------------------------------------------------


def test_line_graph_is_petersen():
    lg = s5_line_graph()
    assert len(lg.names) == 10
    assert len(lg.edges) == 15
    degrees = {i: 0 for i in range(10)}
    for i, j in lg.edges:
        degrees[i] += 1
        degrees[j] += 1
    assert all(d == 3 for d in degrees.values())
    assert _girth(lg) == 5  # the (3,5)-cage on 10 vertices is the Petersen graph


def _girth(lg):
    adjacency = {i: set() for i in range(10)}
    for i, j in lg.edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    best = None
    for start in range(10):
        dist = {start: 0}
        parent = {start: None}
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    cycle = dist[v] + dist[u] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def test_line_graph_pencils():
    lg = s5_line_graph()
    assert len(lg.pencils) == 5
    assert all(len(members) == 3 for _, members in lg.pencils)
    covered = [edge for _, members in lg.pencils for edge in members]
    assert sorted(covered) == sorted(lg.edges)  # a partition of the 15 edges


# -- plane curve smoothness --------------------------------------------------------


def test_klein_quartic_smooth():
    assert plane_curve_is_smooth(klein_quartic(), 4)


def test_cuspidal_cubic_singular():
    assert not plane_curve_is_smooth(cuspidal_cubic(), 3)


def test_fermat_curves_smooth():
    x, y, z = Poly.gens(("x", "y", "z"))
    assert plane_curve_is_smooth(x**3 + y**3 + z**3, 3)
    assert plane_curve_is_smooth(x**4 + y**4 + z**4, 4)


def test_nodal_and_reducible_cases():
    x, y, z = Poly.gens(("x", "y", "z"))
    nodal = x**3 + y**3 - x * y * z
    assert not plane_curve_is_smooth(nodal, 3)
    reducible = (x + y + z) * (x**2 + y**2 + z**2)
    assert not plane_curve_is_smooth(reducible, 3)
    # singular point away from the affine chart (at z = 0)
    assert not plane_curve_is_smooth(x**2 * y + y**2 * x, 3)


def test_smoothness_invariant_under_variable_permutation():
    x, y, z = Poly.gens(("x", "y", "z"))
    curves = {
        "klein": [
            x**3 * y + y**3 * z + z**3 * x,
            y**3 * x + x**3 * z + z**3 * y,
            z**3 * y + y**3 * x + x**3 * z,
        ],
        "cusp": [x**3 - y**2 * z, y**3 - z**2 * x, z**3 - x**2 * y],
    }
    assert all(plane_curve_is_smooth(f, 4) for f in curves["klein"])
    assert not any(plane_curve_is_smooth(f, 3) for f in curves["cusp"])


def test_smoothness_preconditions():
    x, y, z = Poly.gens(("x", "y", "z"))
    with pytest.raises(ValueError):
        plane_curve_is_smooth(x**2 + y, 2)
    with pytest.raises(ValueError):
        plane_curve_is_smooth(x**5 + y**5 + z**5, 5)
    with pytest.raises(ValueError):
        plane_curve_is_smooth(x**3 + y, 3)  # not homogeneous


def test_clebsch_cubic_smooth():
    assert clebsch_cubic_is_smooth()


def test_klein_double_cover_record():
    record = klein_double_cover()
    assert record.degree == 2
    assert record.rho == 8
    assert record.rho_g == 1
    assert record.branch_smooth
    report = family_report(FamilyParams("KleinDoubleCover"))
    assert report.del_pezzo == "Yes"
    assert report.k2 == 2
