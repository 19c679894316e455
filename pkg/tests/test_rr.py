import pytest

from qvanish.dsl import parse
from qvanish.qproducts import eta_like, expand
from qvanish.rr import RRContext, bb_residual_1, bb_residual_2, rq, rq2
from qvanish.series import interleave
from qvanish.verify import A_SERIES, B_SERIES, C_SERIES, D_SERIES

from oracles import dense, finite_product, pochhammer_terms, power_series_divide


def oracle_r(order: int) -> list[int]:
    num = finite_product(pochhammer_terms(1, 1, 5, order) + pochhammer_terms(1, 4, 5, order), order)
    den = finite_product(pochhammer_terms(1, 2, 5, order) + pochhammer_terms(1, 3, 5, order), order)
    return power_series_divide(dense(num, order), dense(den, order))


def test_rq_first_coefficients():
    assert oracle_r(6) == [1, -1, 1, 0, -1, 1]
    assert rq(6).to_list() == [1, -1, 1, 0, -1, 1]


def test_rq_matches_oracle():
    assert rq(120).to_list() == oracle_r(120)


def test_rq_defining_quotient():
    n = 300
    num = expand(parse("(q,q^4;q^5)"), n)
    den = expand(parse("(q^2,q^3;q^5)"), n)
    r = rq(n)
    assert r.coeff(0) == 1
    assert r * den == num


def test_rq2_is_rq_at_q_squared():
    r, r2 = rq(200), rq2(400)
    zero = r.scale(0)
    assert interleave([r, zero], 2).truncate(400) == r2


def test_context():
    ctx = RRContext.build(50)
    assert ctx.order == 50 and ctx.r1 == rq(50) and ctx.r2 == rq2(50)


@pytest.mark.parametrize("n", [100, 500])
def test_first_identity(n):
    res = bb_residual_1(n)
    assert res.order >= n and res.is_zero()


def test_second_identity():
    res = bb_residual_2(100)
    assert res.order >= 100 and res.is_zero()


def test_second_identity_sides():
    n = 40
    ctx = RRContext.build(n)
    x = ctx.r2 * (ctx.r1 * ctx.r1).inverse()
    lhs = x - x.inverse()
    assert lhs.coeff(0) == 0
    rhs = eta_like(10, n) ** 5 * eta_like(1, n) * (eta_like(5, n) ** 5 * eta_like(2, n)).inverse()
    assert rhs.scale(4).shift(1).coeff(1) == 4
    assert lhs.coeff(1) == 4


def test_second_identity_as_printed_fails():
    res = bb_residual_2(100, as_printed=True)
    first = next(res.items())
    assert first == (6, 16)


def test_small_order_rejected():
    with pytest.raises(ValueError):
        bb_residual_1(2)
    with pytest.raises(ValueError):
        bb_residual_2(1)


def _rewrites(n):
    x = rq(n) * rq2(n) * rq2(n)
    y = rq2(n) * (rq(n) * rq(n)).inverse()
    f = {k: eta_like(k, n) for k in (1, 2, 5, 10)}
    eta_ab = f[1] * f[10] * (f[2] * f[5]).inverse()
    eta_cd = f[5] * f[2] * (f[1] * f[10]).inverse()
    return x, y, f, eta_ab, eta_cd


def test_series_rewritten_through_r():
    n = 300
    x, y, _, eta_ab, eta_cd = _rewrites(n)
    assert expand(parse(A_SERIES), n) == eta_ab * x
    assert expand(parse(B_SERIES), n) == eta_ab * x.inverse()
    assert expand(parse(C_SERIES), n) == eta_cd * y
    assert expand(parse(D_SERIES), n) == eta_cd * y.inverse()


def test_b_minus_q2a_chain():
    n = 300
    _, _, f, _, _ = _rewrites(n)
    lhs = expand(parse(B_SERIES), n) - expand(parse(A_SERIES), n).shift(2)
    assert lhs == f[5] ** 4 * (f[10] ** 4).inverse()


def test_c_minus_d_chain():
    n = 300
    _, _, f, _, _ = _rewrites(n)
    lhs = expand(parse(C_SERIES), n) - expand(parse(D_SERIES), n)
    assert lhs == (f[10] ** 4 * (f[5] ** 4).inverse()).scale(4).shift(1)


def test_minus_q_rewrite():
    n = 200
    assert expand(parse("(-q,-q^4;q^5)"), n) == expand(parse("(q^2,q^8;q^10)/(q,q^4;q^5)"), n)
