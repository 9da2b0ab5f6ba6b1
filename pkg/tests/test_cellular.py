import pytest

from tilting.core.cellular import (assign_degrees, cell_module, cellular_basis, gram_contravariance,
                                   gram_semisimplicity, grading_diagnostic, in_lower_span, multiplication_table,
                                   pairing_check, semisimplicity_test, simple_dimensions, summand_test, swapped,
                                   verify_cell_axioms)
from tilting.core.characters import catalan
from tilting.core.errors import InvalidInput
from tilting.core.modules import tensor_power
from tilting.core.tilting import build_tilting


def test_v3_at_l3(v3_l3):
    assert len(v3_l3) == 5
    assert v3_l3.poset == [1, 3]
    assert v3_l3.index_sets == {1: [1, 2], 3: [1]}
    assert v3_l3.keys()[0] == (1, 0, 0)
    assert v3_l3.degrees() == [0, 1, 1, 2, 0]
    assert verify_cell_axioms(v3_l3).passed


@pytest.mark.parametrize("ctx_name", ["generic", "l3", "l5"])
def test_cell_axioms_on_tensor_powers(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    for d in range(1, 5):
        cd = cellular_basis(tensor_power(d, ctx))
        assert len(cd) == catalan(d)
        report = verify_cell_axioms(cd)
        assert report.passed, report.failures()


def test_simple_dimensions(v3_l3, v3_generic):
    assert simple_dimensions(v3_l3) == {1: (2, 1, 1), 3: (1, 1, 1)}
    assert simple_dimensions(v3_generic) == {1: (2, 2, 2), 3: (1, 1, 1)}
    assert cell_module(v3_l3, 1).radical_dimension() == 1


def test_semisimplicity(v3_l3, v3_generic):
    assert not semisimplicity_test(v3_l3)
    assert not gram_semisimplicity(v3_l3)
    assert semisimplicity_test(v3_generic)
    assert gram_semisimplicity(v3_generic)


def test_summand_test(v3_l3, l3):
    assert summand_test(v3_l3, 3)
    assert summand_test(v3_l3, 1)
    assert not summand_test(v3_l3, 2)
    cd = cellular_basis(build_tilting(3, l3).module)
    assert summand_test(cd, 3)
    assert not summand_test(cd, 1)


def test_end_of_t3_multiplication(l3):
    cd = cellular_basis(build_tilting(3, l3).module)
    c1, c3 = (1, 0, 0), (3, 0, 0)
    one = l3.one()
    expected = {
        (c1, c1): {},
        (c1, c3): {c1: one},
        (c3, c1): {c1: one},
        (c3, c3): {c3: one},
    }
    for (a, b), coords in expected.items():
        assert cd.coordinates(cd.element(a) @ cd.element(b)) == coords


def test_swapped_datum_fails(v3_l3):
    bad = swapped(v3_l3, (1, 0, 1), (3, 0, 0))
    report = verify_cell_axioms(bad)
    assert not report.passed
    assert "involution" in [c.name for c in report.failures()]


def test_other_bases_are_lower_unitriangular(v3_l3, l3):
    other = cellular_basis(v3_l3.module, rebase=lambda vs: list(reversed(vs)))
    assert verify_cell_axioms(other).passed
    assert in_lower_span(v3_l3, other)
    assert in_lower_span(other, v3_l3)


def test_pairing(v3_l3):
    for lam in v3_l3.poset:
        assert pairing_check(v3_l3, lam)
        for key in v3_l3.keys():
            assert gram_contravariance(v3_l3, lam, v3_l3.element(key))


def test_degrees(v3_l3, v3_generic):
    assert assign_degrees(v3_l3) == {(1, 0): 0, (1, 1): 1, (3, 0): 0}
    with pytest.raises(ValueError):
        assign_degrees(v3_generic)
    assert isinstance(grading_diagnostic(v3_l3), list)


def test_degrees_follow_summands_in_fundamental_alcove(v3_l3, l5):
    # weight 1 sits in the fundamental alcove at l=3, yet one of its vectors lives in T(3)
    degrees = assign_degrees(v3_l3, l=3)
    assert [degrees[(1, 0)], degrees[(1, 1)]] == [0, 1]
    with pytest.raises(InvalidInput):
        assign_degrees(v3_l3, l=5)
    semisimple = cellular_basis(tensor_power(3, l5), graded=True)
    assert set(assign_degrees(semisimple).values()) == {0}


def test_multiplication_table(v3_l3):
    table = multiplication_table(v3_l3)
    assert list(table.columns) == ["left", "right", "product"]
    assert len(table) == 25
    row = table[(table.left == "c^3_11") & (table.right == "c^3_11")]
    assert row["product"].iat[0] != "0"
