import pytest

from tilting.core.characters import (Character, TiltingMultiset, catalan, decompose_tilting, power_character,
                                     simple_dimension_formula, standard_count, tensor_character,
                                     tilting_character, tilting_weyl_factors, tilting_weyl_mult, tilting_weyl_poly,
                                     translated_pair, weyl_character)
from tilting.core.errors import InconsistentCharacter, InvalidInput
from tilting.core.roots import is_regular, linkage_class
from tilting.core.scalars import LaurentPoly


def test_weyl_character():
    assert weyl_character(3).to_dict() == {3: 1, 1: 1, -1: 1, -3: 1}
    assert weyl_character(0).dim == 1


def test_power_character():
    assert power_character(3).to_dict() == {3: 1, 1: 3, -1: 3, -3: 1}
    assert power_character(0) == Character(0, [1])


@pytest.mark.parametrize("lam, l, factors", [
    (3, 3, [3, 1]),
    (4, 3, [4, 0]),
    (2, 3, [2]),
    (1, 3, [1]),
    (6, 5, [6, 2]),
    (3, None, [3]),
])
def test_tilting_weyl_factors(lam, l, factors):
    assert tilting_weyl_factors(lam, l) == factors


def test_tilting_weyl_poly():
    assert tilting_weyl_poly(3, 1, 3) == LaurentPoly.monomial(1)
    assert tilting_weyl_poly(3, 3, 3) == LaurentPoly.monomial(0)
    assert tilting_weyl_poly(3, 1, None).is_zero()


def test_tilting_character():
    assert tilting_character(3, 3).dim == 6
    assert tilting_character(3, 3) == weyl_character(3) + weyl_character(1)


@pytest.mark.parametrize("d, l, expected", [
    (3, 3, {3: 1, 1: 1}),
    (3, None, {3: 1, 1: 2}),
    (3, 5, {3: 1, 1: 2}),
    (4, 3, {4: 1, 2: 3, 0: 1}),
    (2, 3, {2: 1, 0: 1}),
    (1, 3, {1: 1}),
])
def test_decompose_powers(d, l, expected):
    assert decompose_tilting(power_character(d), l).entries == expected


def test_decompose_tensor():
    ms = decompose_tilting(tensor_character([1, 2], 3), 3)
    assert ms.entries == {3: 1}
    assert ms.character() == tensor_character([1, 2], 3)


def test_decompose_rejects_bad_characters():
    with pytest.raises(InconsistentCharacter, match="symmetric"):
        decompose_tilting(Character.from_dict({1: 1}), 3)
    with pytest.raises(InconsistentCharacter):
        decompose_tilting(Character.from_dict({1: 1, -1: 1, 3: -1, -3: -1}), 3)


def test_weyl_multiplicities():
    ms = TiltingMultiset({3: 1, 1: 1}, 3)
    assert ms.weyl_multiplicities() == {1: 2, 3: 1}
    assert ms.end_dimension() == 5
    assert ms.to_json() == {"3": 1, "1": 1}


@pytest.mark.parametrize("l", [None, 3, 5, 7])
def test_end_dimension_is_catalan(l):
    for d in range(1, 9):
        assert decompose_tilting(power_character(d), l).end_dimension() == catalan(d)


def test_standard_count():
    assert [standard_count(4, lam) for lam in (0, 2, 4)] == [2, 3, 1]
    assert standard_count(3, 2) == 0
    assert sum(standard_count(6, lam) ** 2 for lam in range(0, 7, 2)) == catalan(6)


def test_simple_dimension_formula():
    assert simple_dimension_formula(1, 3, 3) == 1
    assert simple_dimension_formula(3, 3, 3) == 1
    assert simple_dimension_formula(1, 3, None) == 2
    for d in range(1, 9):
        ms = decompose_tilting(power_character(d), 3)
        for lam in range(d % 2, d + 1, 2):
            assert simple_dimension_formula(lam, d, 3) == ms.get(lam)


@pytest.mark.parametrize("l", [3, 5])
def test_multiplicities_survive_translation_off_the_walls(l):
    checked = 0
    for lam in range(4 * l):
        for mu in linkage_class(lam, l, lam):
            for base in range(l - 1):
                lam_bar, mu_bar = translated_pair(lam, mu, l, base)
                assert is_regular(lam_bar, l) and is_regular(mu_bar, l)
                assert tilting_weyl_mult(lam, mu, l) == tilting_weyl_mult(lam_bar, mu_bar, l)
                checked += 1
    assert checked > 4 * l


def test_singular_tilting_is_weyl_after_translation():
    # T(8) = Delta(8) at l=3, and the translate T(10) has no Delta(4)
    assert translated_pair(8, 2, 3) == (10, 4)
    assert tilting_weyl_mult(8, 2, 3) == tilting_weyl_mult(10, 4, 3) == 0
    assert tilting_weyl_factors(10, 3) == [10, 6]
    with pytest.raises(InvalidInput):
        translated_pair(4, 2, 3)
    with pytest.raises(InvalidInput):
        translated_pair(3, 1, None)
