import pytest

from tilting.core.roots import (a2_dominates, a2_fixture_checks, a2_in_closure, a2_in_fundamental_alcove,
                                alcove_index, dominates, in_closure, in_fundamental_alcove, is_linked,
                                is_regular, is_singular, linkage_class, nearest_walls, orbit_base, reflect, translate,
                                upper_alcove, walls_between)


def test_alcoves_at_l3():
    assert in_fundamental_alcove(0, 3)
    assert in_fundamental_alcove(1, 3)
    assert not in_fundamental_alcove(2, 3)
    assert in_closure(2, 3)
    assert not in_closure(3, 3)
    assert [lam for lam in range(12) if is_singular(lam, 3)] == [2, 5, 8, 11]
    assert is_regular(4, 3) and not is_regular(5, 3)


@pytest.mark.parametrize("lam, index", [(0, 0), (1, 0), (2, None), (3, 1), (4, 1), (6, 2), (7, 2)])
def test_alcove_index(lam, index):
    assert alcove_index(lam, 3) == index


def test_walls():
    assert walls_between(1, 7, 3) == 2
    assert walls_between(3, 4, 3) == 0
    assert walls_between(2, 4, 3) is None
    assert nearest_walls(4, 3) == (1, 2)
    assert nearest_walls(5, 3) == (1, 3)


def test_reflect_fixes_walls():
    for r in range(4):
        wall = 3 * r - 1
        assert reflect(wall, r, 3) == wall
        assert reflect(reflect(4, r, 3), r, 3) == 4


def test_linkage_class():
    assert linkage_class(1, 3, 20) == [1, 3, 7, 9, 13, 15, 19]
    assert linkage_class(3, 3, 20) == linkage_class(1, 3, 20)
    assert linkage_class(2, 3, 20) == [2, 8, 14, 20]
    assert linkage_class(0, 5, 12) == [0, 8, 10]
    assert is_linked(1, 3, 3)
    assert not is_linked(1, 4, 3)


def test_linkage_needs_bound():
    with pytest.raises(ValueError):
        linkage_class(5, 3, 4)


def test_dominance():
    assert dominates(3, 1)
    assert dominates(3, 3)
    assert not dominates(3, 2)
    assert not dominates(1, 3)


def test_a2_alcove():
    assert a2_in_fundamental_alcove((0, 0))
    assert not a2_in_fundamental_alcove((1, 0))
    assert a2_in_closure((1, 0))
    assert a2_in_closure((-1, 0))
    assert not a2_in_closure((1, 1))


def test_a2_dominance():
    assert a2_dominates((1, 1), (0, 0))
    assert a2_dominates((3, 0), (0, 0))
    assert not a2_dominates((1, 0), (0, 0))


@pytest.mark.parametrize("name, expected, actual", a2_fixture_checks())
def test_a2_fixtures(name, expected, actual):
    assert expected == actual, name


@pytest.mark.parametrize("lam, l, base", [(0, 3, 0), (1, 3, 1), (3, 3, 1), (4, 3, 0), (7, 5, 1), (12, 5, 2)])
def test_orbit_base_and_translation(lam, l, base):
    assert orbit_base(lam, l) == base
    assert translate(lam, l, base) == lam
    assert is_linked(lam, translate(lam, l, base), l)


def test_translation_leaves_the_walls():
    # walls at l=3: 2, 5, 8; each lands in the alcove above it
    assert [orbit_base(lam, 3) for lam in (2, 5, 8)] == [2, -1, 2]
    assert [translate(lam, 3) for lam in (2, 5, 8)] == [4, 6, 10]
    assert all(alcove_index(translate(lam, 3), 3) == upper_alcove(lam, 3) for lam in range(30))
    with pytest.raises(ValueError):
        translate(4, 3, base=2)
