import itertools

import pytest

from zerohecke.combinat import Composition, compositions
from zerohecke.nsqsym import (
    F,
    M,
    NSymElt,
    QSymElt,
    bz_inner,
    bz_substitution,
    check_parameter_name,
    f_to_m,
    h,
    h_to_s,
    hall_littlewood,
    hl_product_formula_check,
    hl_transition_is_unitriangular,
    lnt_substitution,
    m_to_f,
    pairing,
    periodic_corollary_check,
    principal_specialization,
    ps_generating_function,
    ps_generating_function_closed,
    qt_substitution,
    ribbon_product,
    s,
    s_to_h,
    specialize,
)
from zerohecke.poly import Caps, Poly

q, t = Poly.var("q"), Poly.var("t")
C = Composition.of


def ones(n):
    return Composition((1,) * n)


class TestBases:
    def test_f_to_m(self):
        assert f_to_m(F(3)) == M(3) + M(2, 1) + M(1, 2) + M(1, 1, 1)
        assert f_to_m(F(1, 1)) == M(1, 1)
        assert f_to_m(F(2, 1)) == M(2, 1) + M(1, 1, 1)

    def test_h_to_s(self):
        assert s_to_h(s(1, 1)) == h(1, 1) - h(2)
        assert h_to_s(h(2, 1)) == s(2, 1) + s(3)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_roundtrips(self, n):
        for a in compositions(n):
            assert m_to_f(f_to_m(F(*a.parts))) == F(*a.parts)
            assert s_to_h(h_to_s(h(*a.parts))) == h(*a.parts)

    def test_ribbon_product(self):
        assert ribbon_product(C(1), C(1)) == s(1, 1) + s(2)
        assert s(2) * s(1, 1) == s(2, 1, 1) + s(3, 1)
        assert ribbon_product(Composition(()), C(2)) == s(2)

    def test_ribbon_associative(self):
        for a, b, c in itertools.product(compositions(2), compositions(2), compositions(1)):
            x, y, z = s(*a.parts), s(*b.parts), s(*c.parts)
            assert (x * y) * z == x * (y * z)

    def test_h_is_multiplicative(self):
        assert h(2) * h(1, 3) == h(2, 1, 3)

    def test_text(self):
        assert (F(2) + F(1, 1).scale(q)).to_text() == "F[2] + q*F[1,1]"
        assert NSymElt("s").to_text() == "0"
        x = s(2, 1).scale(t) - s(3)
        assert NSymElt.from_json(x.to_json()) == x

    def test_basis_mismatch(self):
        with pytest.raises((TypeError, ValueError)):
            F(2) + M(2)


class TestForms:
    def test_pairing_duality(self):
        for a, b in itertools.product(compositions(3), repeat=2):
            assert pairing(F(*a.parts), s(*b.parts)) == (1 if a == b else 0)
            assert pairing(M(*a.parts), h(*b.parts)) == (1 if a == b else 0)

    def test_bz_examples(self):
        assert bz_inner(s(2, 1), s(1, 2)) == -1
        assert bz_inner(s(2, 1), s(2, 1)) == 0
        assert bz_inner(s(3), s(1, 1, 1)) == 1

    @pytest.mark.parametrize("n", range(1, 5))
    def test_hl_semi_self_dual(self, n):
        for a, b in itertools.product(compositions(n), repeat=2):
            expect = (-1) ** (n + len(a)) if a == b.complement() else 0
            assert bz_inner(hall_littlewood(a, False), hall_littlewood(b, False)) == expect

    def test_bz_vanishes_across_sizes(self):
        assert bz_inner(hall_littlewood(C(2, 1), False), hall_littlewood(C(2), False)) == 0


class TestHallLittlewood:
    def test_modified_top(self):
        for n in range(1, 6):
            assert hall_littlewood(C(n)) == s(n)

    def test_modified_small(self):
        assert hall_littlewood(C(1, 1)) == s(2) + s(1, 1, coeff=Poly.var("t1"))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_t_zero_and_one(self, n):
        zero = {f"t{i}": 0 for i in range(1, n)}
        one = {f"t{i}": 1 for i in range(1, n)}
        for a in compositions(n):
            hl = hall_littlewood(a, modified=False)
            assert specialize(hl, zero) == s(*a.parts)
            assert specialize(hl, one) == h_to_s(h(*a.parts))

    def test_lnt_example(self):
        p = specialize(hall_littlewood(ones(4)), lnt_substitution(C(2, 1, 1)))
        assert p.to_text() == (
            "s[4] + y011*s[3,1] + y01*s[2,2] + y01*y011*s[2,1,1] + y0*s[1,3] + y0*y011*s[1,2,1]"
            " + y0*y01*s[1,1,2] + y0*y01*y011*s[1,1,1,1]"
        )

    def test_bz_power(self):
        for n in range(1, 6):
            x = specialize(hall_littlewood(ones(n)), bz_substitution(n))
            for b in compositions(n):
                assert x.coeff(b) == t ** b.maj()

    def test_qt_substitution(self):
        sub = qt_substitution(C(2, 1))
        assert sub == {"t1": q ** 2, "t2": t ** 2}

    @pytest.mark.parametrize("total", range(1, 7))
    def test_product_formula(self, total):
        for k in range(1, total):
            for a in compositions(k):
                for b in compositions(total - k):
                    assert hl_product_formula_check(a, b)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_periodic_corollary(self, n):
        for a in compositions(n):
            for m in range(1, 4):
                for b in compositions(m):
                    assert periodic_corollary_check(a, b)

    def test_unitriangular(self):
        assert all(hl_transition_is_unitriangular(n) for n in range(1, 6))


class TestPrincipalSpecialization:
    def test_examples(self):
        assert principal_specialization(F(3), 1) == 1
        assert principal_specialization(F(2, 1), 1) == 0
        assert principal_specialization(F(2, 1), 3) == q ** 2 + q ** 3 + q ** 4 + q ** 5

    def test_monomial_basis(self):
        # M_(1,1) at ell = 2 picks i1 > i2 only: q^1
        assert principal_specialization(M(1, 1), 2) == q

    def test_infinite(self):
        caps = Caps.make({"q": 6})
        got = principal_specialization(F(1, 1), float("inf"), caps)
        # q / ((1-q)(1-q^2))
        expect = sum((Poly.monomial({"q": d}, (d + 1) // 2) for d in range(1, 7)), Poly())
        assert got.poly == expect

    def test_generating_function(self):
        caps = Caps.make({"u": 4, "q": 8})
        for a in [C(2, 1), C(1, 2), C(3), C(1, 1, 1)]:
            assert ps_generating_function(a, caps) == ps_generating_function_closed(a, caps)

    def test_bad_ell(self):
        with pytest.raises(ValueError):
            principal_specialization(F(2), -1)
        with pytest.raises(ValueError):
            principal_specialization(F(2), float("inf"))


def test_unknown_parameter():
    with pytest.raises(ValueError):
        check_parameter_name("w")
    with pytest.raises(ValueError):
        specialize(s(2), {"x": 1})
    check_parameter_name("t12")
