import pytest

from tilting.core.linalg import Echelon, Matrix, inverse, matrix_rank, nullspace, solve
from tilting.core.scalars import qint


def dense(rows, ctx):
    return Matrix.from_dense([[ctx.from_int(x) for x in r] for r in rows], ctx)


def test_matmul_and_identity(generic):
    a = dense([[1, 2], [3, 4]], generic)
    assert a @ Matrix.identity(2, generic) == a
    assert (a @ a)[0, 1] == 10
    assert a.transpose()[0, 1] == 3


def test_kron(generic):
    a = dense([[1, 2], [0, 1]], generic)
    b = dense([[0, 1], [1, 0]], generic)
    k = a.kron(b)
    assert k.shape == (4, 4)
    assert k[0, 3] == 2
    assert k[2, 0] == 0
    assert k[3, 2] == 1


def test_inverse(generic, l5):
    for ctx in (generic, l5):
        m = Matrix.from_dense([[qint(2, ctx), ctx.one()], [ctx.one(), qint(3, ctx)]], ctx)
        assert m @ inverse(m) == Matrix.identity(2, ctx)


def test_singular_inverse(l3):
    m = Matrix.from_dense([[qint(2, l3), l3.one()], [l3.one(), qint(4, l3)]], l3)
    # det = [2][4] - 1 = -1 - 1 at l=3
    assert matrix_rank(m) == 2
    s = Matrix.from_dense([[qint(3, l3), l3.zero()], [l3.zero(), l3.one()]], l3)
    with pytest.raises(ZeroDivisionError):
        inverse(s)


def test_nullspace(generic):
    one = generic.one()
    rows = [{0: one, 1: -one}, {1: one, 2: -one}]
    basis = nullspace(rows, 3, generic)
    assert basis == [{2: one, 0: one, 1: one}]


def test_solve(generic):
    one = generic.one()
    rows = [{0: one, 1: one}, {1: one}]
    assert solve(rows, [generic.from_int(3), generic.from_int(1)], 2, generic) == {0: 2, 1: 1}
    assert solve([{0: one}, {0: one}], [one, generic.zero()], 1, generic) is None


def test_echelon_coordinates(generic):
    one, two = generic.one(), generic.from_int(2)
    ech = Echelon(generic, track=True)
    assert ech.add({0: one, 1: one})
    assert ech.add({1: one})
    assert not ech.add({0: two, 1: two})
    assert ech.rank == 2
    assert ech.coordinates({0: one, 1: two}) == {0: one, 1: one}
    assert ech.coordinates({}) == {}


def test_vectorize_and_text(l3):
    m = dense([[1, 0], [0, -1]], l3)
    assert m.vectorize() == {0: 1, 3: -1}
    assert m.to_text() == [['1*z^0', '0'], ['0', '-1*z^0']]
    assert m.is_symmetric()
