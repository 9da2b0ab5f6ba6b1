import pytest

from tilting.core.characters import catalan
from tilting.core.diagrams import (TLDiagram, TLElement, Tableau, generalized_jw, graham_lehrer_basis, half_jw,
                                   jones_wenzl, rescale_to_idempotents, sign_sequences, standard_tableaux,
                                   tableau_to_half_diagram, tl_basis, tl_semisimplicity, two_row_shapes,
                                   verify_tl_cell_axioms)
from tilting.core.errors import CoefficientPole, InvalidInput, NotIdempotentable, StrandMismatch
from tilting.core.scalars import qint


def U(i, n, ctx):
    return TLElement.generator(i, n, ctx)


def test_generator_diagram():
    assert TLDiagram.generator(1, 2).to_text() == "2; (1,2) (3,4)"
    assert TLDiagram.parse("2; (1,2) (3,4)") == TLDiagram.generator(1, 2)
    assert TLDiagram.parse("3,1; (1,2) (3,4)").through == 1


def test_compose_counts_loops():
    cap, cup = TLDiagram.cap(2, 1), TLDiagram.cup(0, 1)
    D, loops = cap.compose(cup)
    assert (D.bottom, D.top, loops) == (0, 0, 1)
    D, loops = TLDiagram.identity(3).compose(TLDiagram.generator(2, 3))
    assert D == TLDiagram.generator(2, 3) and loops == 0


def test_identity_is_neutral(generic):
    x = U(1, 3, generic) * U(2, 3, generic)
    one = TLElement.identity(3, generic)
    assert one * x == x
    assert x * one == x


def test_tl_relations(generic, l3):
    for ctx in (generic, l3):
        u1, u2 = U(1, 3, ctx), U(2, 3, ctx)
        assert u1 * u1 == u1.scale(qint(2, ctx))
        assert u1 * u2 * u1 == u1
        assert u2 * u1 * u2 == u2
        assert U(1, 4, ctx) * U(3, 4, ctx) == U(3, 4, ctx) * U(1, 4, ctx)


def test_flip_is_anti_involution(generic):
    x, y = U(1, 3, generic), U(2, 3, generic)
    assert (x * y).flip() == y.flip() * x.flip()
    assert (x * y).flip().flip() == x * y


def test_tensor_of_generators(generic):
    assert U(1, 2, generic) @ TLElement.identity(1, generic) == U(1, 3, generic)
    assert TLElement.identity(1, generic) @ U(1, 2, generic) == U(2, 3, generic)


def test_strand_mismatch(generic):
    with pytest.raises(StrandMismatch):
        TLElement.identity(2, generic) * TLElement.identity(3, generic)
    with pytest.raises(StrandMismatch):
        TLElement.identity(2, generic) + TLElement.identity(3, generic)


@pytest.mark.parametrize("text", ["2; (1,4) (2,3)", "2; (1,2)", "two; (1,2) (3,4)", "2; (1,2) (1,3)"])
def test_bad_diagrams(text):
    with pytest.raises(InvalidInput):
        TLDiagram.parse(text)


def test_tl_basis_counts():
    assert [len(tl_basis(d)) for d in range(1, 7)] == [catalan(d) for d in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    with pytest.raises(InvalidInput):
        tl_basis(0)


def test_jw2_and_jw3(generic):
    one = generic.one()
    two, three = qint(2, generic), qint(3, generic)
    ident = TLElement.identity(2, generic)
    assert jones_wenzl(2, generic) == ident - U(1, 2, generic).scale(one / two)
    u1, u2 = U(1, 3, generic), U(2, 3, generic)
    expected = TLElement.identity(3, generic) - (u1 + u2).scale(two / three) + (u1 * u2 + u2 * u1).scale(one / three)
    assert jones_wenzl(3, generic) == expected


@pytest.mark.parametrize("ctx_name, top", [("generic", 5), ("l5", 4), ("l3", 2)])
def test_jw_idempotent_and_killed(ctx_name, top, request):
    ctx = request.getfixturevalue(ctx_name)
    for d in range(2, top + 1):
        jw = jones_wenzl(d, ctx)
        assert jw * jw == jw
        for i in range(1, d):
            assert (jw * U(i, d, ctx)).is_zero()
            assert (U(i, d, ctx) * jw).is_zero()


@pytest.mark.parametrize("d, ctx_name", [(3, "l3"), (5, "l5"), (6, "l3")])
def test_jw_poles(d, ctx_name, request):
    with pytest.raises(CoefficientPole):
        jones_wenzl(d, request.getfixturevalue(ctx_name))


def test_generalized_jw(generic):
    one, two = generic.one(), qint(2, generic)
    u1, u2 = U(1, 3, generic), U(2, 3, generic)
    assert generalized_jw((1, -1), generic) == U(1, 2, generic)
    assert generalized_jw((1, -1, 1), generic) == u1
    assert generalized_jw((1, 1, -1), generic) == u2 - (u1 * u2 + u2 * u1).scale(one / two) + u1.scale(one / (two * two))
    assert generalized_jw((1, 1, 1), generic) == jones_wenzl(3, generic)
    t = half_jw((1, 1, -1), generic)
    assert (t.bottom, t.top) == (3, 1)


@pytest.mark.parametrize("eps", [(1, -1, -1), (-1, 1), (1, 2), ()])
def test_invalid_signs(eps, generic):
    with pytest.raises(InvalidInput):
        generalized_jw(eps, generic)


def test_generalized_jw_pole(l3):
    with pytest.raises(CoefficientPole):
        generalized_jw((1, 1, 1), l3)
    assert generalized_jw((1, 1, -1), l3).bottom == 3


def test_sign_sequences():
    assert sign_sequences(3) == [(1, 1, 1), (1, 1, -1), (1, -1, 1)]
    assert len(sign_sequences(6)) == 20


@pytest.mark.parametrize("d", [2, 3])
def test_rescale_to_idempotents(d, generic):
    idems = rescale_to_idempotents([generalized_jw(eps, generic) for eps in sign_sequences(d)], generic)
    assert len(idems) == len(sign_sequences(d))
    for e in idems:
        assert e * e == e


def test_not_idempotentable(generic):
    x = TLElement.identity(2, generic) + U(1, 2, generic)
    with pytest.raises(NotIdempotentable):
        rescale_to_idempotents([x], generic)
    with pytest.raises(NotIdempotentable):
        rescale_to_idempotents([TLElement.identity(2, generic), TLElement.identity(2, generic)], generic)


def test_tableaux():
    assert [len(standard_tableaux(4, lam)) for lam in (0, 2, 4)] == [2, 3, 1]
    assert Tableau(((1, 2), (3, 4))).is_standard()
    assert not Tableau(((2, 3), (1, 4))).is_standard()
    t = Tableau(((1, 3, 4, 5), (2, 6)))
    assert Tableau.from_signs(t.signs()) == t
    assert t.shape == (4, 2) and t.weight == 2
    assert two_row_shapes(4) == [(2, 2), (3, 1), (4, 0)]


def test_tableau_to_half_diagram():
    assert tableau_to_half_diagram(Tableau(((1, 2, 3, 6), (4, 5)))) == \
        TLDiagram(6, 2, [(2, 3), (1, 4), (0, 6), (5, 7)])
    assert tableau_to_half_diagram(Tableau(((1, 3, 4, 5), (2, 6)))) == \
        TLDiagram(6, 2, [(0, 1), (4, 5), (2, 6), (3, 7)])
    with pytest.raises(InvalidInput):
        tableau_to_half_diagram(Tableau(((2, 3), (1, 4))))


@pytest.mark.parametrize("ctx_name", ["generic", "l3"])
def test_graham_lehrer_basis(ctx_name, request):
    ctx = request.getfixturevalue(ctx_name)
    for d in range(1, 5):
        cd = graham_lehrer_basis(d, ctx)
        assert len(cd) == catalan(d)
        assert verify_tl_cell_axioms(cd).passed
        for lam, s, t in cd.keys():
            assert cd.basis[(lam, s, t)].flip() == cd.basis[(lam, t, s)]


def test_tl_semisimplicity(generic, l3):
    assert tl_semisimplicity(9, generic)
    assert tl_semisimplicity(2, l3)
    assert not tl_semisimplicity(3, l3)
