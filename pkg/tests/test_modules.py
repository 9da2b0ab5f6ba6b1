import pytest

from tilting.core.errors import AsymmetricForm
from tilting.core.linalg import Echelon, Matrix
from tilting.core.modules import (Intertwiner, _tensor_integral, check_relations, dual_weyl_module,
                                  duality_involution, highest_weight_vectors, hom_space, is_contravariant,
                                  tensor, tensor_power, trivial_module, weyl_map, weyl_module)
from tilting.core.scalars import qint


def test_weyl_action(generic):
    M = weyl_module(3, generic)
    assert M.weights == (3, 1, -1, -3)
    assert M.Ediv(1)[0, 1] == qint(3, generic)
    assert M.Fdiv(1)[1, 0] == 1
    assert M.Fdiv(1)[3, 2] == qint(3, generic)
    assert M.Ediv(3)[0, 3] == 1


def test_weyl_action_at_l3(l3):
    M = weyl_module(3, l3)
    assert not M.Ediv(1)[0, 1]
    assert not M.Fdiv(1)[3, 2]
    assert M.Ediv(3)[0, 3] == 1
    assert M.Fdiv(3)[3, 0] == 1
    assert M.generator_powers() == [1, 3]


@pytest.mark.parametrize("ctx_name", ["generic", "l3", "l5"])
def test_relations_hold(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    for i in range(5):
        assert check_relations(weyl_module(i, ctx)) == []
        assert check_relations(dual_weyl_module(i, ctx)) == []
    for d in range(1, 5):
        assert check_relations(tensor_power(d, ctx)) == []


def test_weyl_form(generic):
    V = weyl_module(1, generic)
    assert V.form == Matrix.diagonal([generic.one(), -generic.v_power(1)], generic)
    for i in range(5):
        M = weyl_module(i, generic)
        assert is_contravariant(M.form, M)


def test_integral_coproduct_matches_lift(l3):
    M, N = weyl_module(1, l3), weyl_module(2, l3)
    X = tensor(M, N)
    E, F = _tensor_integral(M, N)
    assert list(X.E) == E
    assert list(X.F) == F


def test_tensor_form_is_kron(generic):
    T = tensor_power(2, generic)
    V = weyl_module(1, generic)
    assert T.form == V.form.kron(V.form)
    assert T.label == "V^2"


def test_tensor_of_two_weight_zero(l3):
    K = trivial_module(l3)
    assert tensor(K, K).dim == 1


def test_symmetric_square_submodule(l3):
    # span{m00, v^-1 m10 + m01, m11} in V (x) V
    T = tensor_power(2, l3)
    one = l3.one()
    vectors = [{0: one}, {1: one, 2: l3.v_power(-1)}, {3: one}]
    span = Echelon(l3)
    for w in vectors:
        span.add(w)
    for j in (1, 2):
        for X in (T.Ediv(j), T.Fdiv(j)):
            for w in vectors:
                assert span.contains(X.apply(w))


@pytest.mark.parametrize("source, target, ctx_name, dim", [
    ((3, "weyl"), (3, "power"), "l3", 1),
    ((1, "weyl"), (3, "power"), "generic", 2),
    ((1, "weyl"), (3, "power"), "l3", 2),
    ((0, "weyl"), (2, "weyl"), "generic", 0),
    ((3, "weyl"), (3, "dual"), "l3", 1),
    ((1, "weyl"), (3, "weyl"), "l3", 1),
    ((1, "weyl"), (3, "weyl"), "generic", 0),
    ((0, "weyl"), (4, "weyl"), "l3", 1),
    ((3, "weyl"), (1, "weyl"), "l3", 0),
])
def test_hom_dimensions(source, target, ctx_name, dim, request):
    ctx = request.getfixturevalue(ctx_name)
    build = {"weyl": weyl_module, "dual": dual_weyl_module, "power": tensor_power}
    M = build[source[1]](source[0], ctx)
    N = build[target[1]](target[0], ctx)
    homs = hom_space(M, N)
    assert len(homs) == dim
    for h in homs:
        assert h.check()


def test_highest_weight_vectors(generic, l3):
    assert len(highest_weight_vectors(tensor_power(3, generic), 1)) == 2
    assert len(highest_weight_vectors(tensor_power(3, l3), 1)) == 2
    assert len(highest_weight_vectors(tensor_power(3, l3), 3)) == 1


def test_weyl_map_is_intertwiner(l3):
    T = tensor_power(3, l3)
    for w in highest_weight_vectors(T, 1):
        g = weyl_map(T, 1, w)
        assert g.check()
        assert g.matrix.column(0) == w


def test_duality_on_tensor_power(generic, l3):
    for ctx in (generic, l3):
        T = tensor_power(3, ctx)
        D = duality_involution(T)
        assert D.source == "carried"
        assert not D.adjusted
        X = hom_space(T, T)[0].matrix
        assert D(D(X)) == X


def test_duality_solves_without_carried_form(l3):
    V = weyl_module(2, l3)
    bare = type(V)(V.weights, V.E, V.F, l3, label="bare")
    D = duality_involution(bare)
    assert D.source == "solved"
    assert is_contravariant(D.form, bare)


def test_no_form_raises(generic):
    V = weyl_module(1, generic)
    lopsided = type(V)(V.weights, V.E, [Matrix.zeros(2, 2, generic)], generic, label="lopsided")
    with pytest.raises(AsymmetricForm):
        duality_involution(lopsided)


def test_intertwiner_algebra(generic):
    T = tensor_power(2, generic)
    ident = Intertwiner(T, T, Matrix.identity(4, generic))
    h = hom_space(T, T)[0]
    assert (ident @ h) == h
    assert (h - h).is_zero()
