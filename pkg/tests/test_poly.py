import pytest

from zerohecke.poly import Caps, Poly, Series, geometric, inverse, pochhammer, q_integer, truncated_product

q, t1, t2, u = (Poly.var(v) for v in ("q", "t1", "t2", "u"))


def test_arithmetic_and_text():
    p = (q + 1) ** 2 - 2 * q
    assert p == q ** 2 + 1
    assert str(3 * q ** 2 * t1 - t2 + 1) == "1 - t2 + 3*q^2*t1"
    assert str(Poly()) == "0"


@pytest.mark.parametrize("text", ["1 - t2 + 3*q^2*t1", "q", "-2*u^3*q", "y011*y0 + 7"])
def test_parse_roundtrip(text):
    p = Poly.parse(text)
    assert Poly.parse(str(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Poly.parse("q**2")
    with pytest.raises(ValueError):
        Poly.parse("")


def test_subs_is_simultaneous():
    p = q * t1
    assert p.subs({"q": t1, "t1": q}) == q * t1
    assert (q ** 2 + q).subs({"q": 2}) == Poly.const(6)


def test_gcd_and_divide():
    p = q ** 2 * t1 + q * t1 ** 3
    g = p.monomial_gcd()
    assert dict(g) == {"q": 1, "t1": 1}
    assert p.divide_monomial(g) == q + t1 ** 2
    with pytest.raises(ValueError):
        q.divide_monomial((("t1", 1),))


def test_caps_and_truncation():
    caps = Caps.make({"q": 2}, total=3, total_vars=["t1", "t2"])
    p = q ** 3 + q ** 2 * t1 ** 3 + t1 * t2 ** 3
    assert p.truncate(caps) == q ** 2 * t1 ** 3
    with pytest.raises(ValueError):
        Caps.make({"q": -1})


@pytest.mark.parametrize("v", ["q", "u", "z", "t1", "q0", "y01"])
def test_geometric_times_one_minus(v):
    caps = Caps.make({v: 7})
    g = geometric(v, caps)
    assert (Series(1 - Poly.var(v), caps) * g).poly == Poly.const(1)
    assert g.poly == sum((Poly.var(v) ** i for i in range(8)), Poly())


def test_inverse_needs_bounded_caps():
    with pytest.raises(ValueError):
        inverse(1 - q, Caps.make({"u": 3}))
    with pytest.raises(ValueError):
        inverse(2 - q, Caps.make({"q": 3}))


def test_inverse_multivariate():
    caps = Caps.make({"u": 4})
    d = pochhammer("u", "q", 2)
    prod = Series(d, caps) * inverse(d, caps)
    assert prod.poly == Poly.const(1)


def test_pochhammer_has_n_plus_one_factors():
    assert pochhammer("u", "q", 1) == (1 - u) * (1 - q * u)
    assert pochhammer("u", "q", 0) == 1 - u


def test_q_integer():
    assert q_integer(3) == 1 + q + q ** 2
    assert q_integer(0) == Poly()


def test_series_caps_must_match():
    with pytest.raises(ValueError):
        Series(q, Caps.make({"q": 2})) + Series(q, Caps.make({"q": 3}))


def test_truncated_product_drops_capped_terms():
    caps = Caps.make({"q": 2})
    assert truncated_product(1 + q, 1 + q ** 2, caps) == 1 + q + q ** 2


def test_evaluate_and_degrees():
    p = q ** 2 * t1 + 3
    assert p.evaluate({"q": 2, "t1": 5}) == 23
    assert p.degree("q") == 2
    assert p.total_degree() == 3
