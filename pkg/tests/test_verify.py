import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvanish.errors import InvalidCaseError
from qvanish.dsl import parse
from qvanish.qproducts import expand
from qvanish.verify import (
    A_SERIES,
    B_SERIES,
    C_SERIES,
    D_SERIES,
    Claim,
    Term,
    VerificationReport,
    alladi_gordon_case,
    alladi_gordon_companion,
    alladi_gordon_grid,
    alladi_gordon_params,
    andrews_bressoud_case,
    andrews_bressoud_grid,
    check,
    mclaughlin_case,
    mclaughlin_companion,
    mclaughlin_grid,
    mclaughlin_params,
    paper_suite,
    richmond_szekeres_suite,
    run_cases,
    suite_cases,
    summarize,
)


def vanishes(expr, m, r):
    return Claim("vanishes", (Term(expr, m, r),))


def test_hirschhorn_check_count():
    rep = check(vanishes(A_SERIES, 5, 2), 500)
    assert rep.status == "pass" and rep.checked_count == 100 and rep.first_failure is None


def test_progression_equality():
    claim = Claim("equals_progression", (Term(B_SERIES, 5, 2),), (Term(A_SERIES, 5, 0),))
    assert check(claim, 500).status == "pass"


def test_vacuous_window():
    rep = check(vanishes(A_SERIES, 5, 3), 2)
    assert rep.status == "vacuous" and rep.checked_count == 0 and not rep.passed


def test_mutation_sensitivity():
    rep = check(vanishes(A_SERIES, 5, 3), 500)
    assert rep.status == "fail"
    n, a, b = rep.first_failure
    assert n < 20 and a != 0 and b == 0


def test_failure_reports_first_index():
    rep = check(Claim("equals_series", (Term("(q;q)"),), (Term("(q^2;q^2)"),)), 50)
    assert rep.status == "fail" and rep.first_failure == (1, -1, 0) and rep.checked_count == 1


def test_index_shift_window():
    claim = Claim("equals_progression", (Term(B_SERIES, 5, 1),), (Term(A_SERIES, 5, 4),), index_shift=1)
    rep = check(claim, 500)
    assert rep.status == "pass" and rep.checked_count == 99


def test_positive_difference_strict():
    claim = Claim("positive_difference", (Term(C_SERIES, 5, 1),), (Term(D_SERIES, 5, 1),))
    assert check(claim, 500).passed
    # the reverse comparison fails immediately
    rev = Claim("positive_difference", (Term(D_SERIES, 5, 1),), (Term(C_SERIES, 5, 1),))
    assert check(rev, 100).first_failure[0] == 0


def test_difference_constant():
    c = expand(parse(C_SERIES), 10)
    d = expand(parse(D_SERIES), 10)
    assert (c.coeff(1), d.coeff(1)) == (3, -1)
    assert c.coeff(1) - d.coeff(1) == 4


def test_5a_difference_constant():
    b = expand(parse(B_SERIES), 10)
    assert b.coeff(0) == 1


def test_claim_validation():
    with pytest.raises(ValueError):
        Claim("nonsense", (Term("(q;q)"),))
    with pytest.raises(ValueError):
        Claim("equals_series", (Term("(q;q)"),))
    with pytest.raises(ValueError):
        Term("(q;q)", 5, 5)


def test_report_validation():
    with pytest.raises(ValueError):
        VerificationReport("x", "c", 10, 0, "fail")
    with pytest.raises(ValueError):
        VerificationReport("x", "c", 10, 0, "pass", (1, 2, 3))
    with pytest.raises(ValueError):
        VerificationReport("x", "c", 10, 0, "maybe")


@settings(max_examples=100, deadline=None)
@given(
    st.text(min_size=1, max_size=20),
    st.integers(2, 2000),
    st.integers(0, 500),
    st.sampled_from(["pass", "fail", "vacuous"]),
    st.tuples(st.integers(0, 999), st.integers(-10**30, 10**30), st.integers(-5, 5)),
)
def test_report_json_roundtrip(cid, order, count, status, ff):
    rep = VerificationReport(cid, "claim text", order, count, status, ff if status == "fail" else None)
    back = VerificationReport.from_json(rep.to_json())
    assert back == rep
    d = json.loads(rep.to_json())
    assert d["N"] == order and "order" not in d


def test_reports_deterministic():
    a = [r.to_json() for r in run_cases(suite_cases("theorem5b"), 300)]
    b = [r.to_json() for r in run_cases(suite_cases("theorem5b"), 300)]
    assert a == b


def test_parallel_matches_serial():
    cases = suite_cases("hirschhorn") + suite_cases("tang")
    assert run_cases(cases, 300) == run_cases(cases, 300, parallel=True)


# -- families -----------------------------------------------------------------


def test_richmond_szekeres():
    reps = richmond_szekeres_suite(400)
    assert [r.status for r in reps] == ["pass"] * 4


def test_andrews_bressoud_examples():
    assert andrews_bressoud_case(4, 1, 400).passed
    assert andrews_bressoud_case(6, 1, 400).passed
    with pytest.raises(InvalidCaseError):
        andrews_bressoud_case(4, 2, 400)


def test_andrews_bressoud_grid_size():
    grid = andrews_bressoud_grid()
    assert len(grid) >= 15 and (4, 1) in grid and (4, 2) not in grid


def test_alladi_gordon_examples():
    assert alladi_gordon_params(2, 3, 1) == (2, 1)
    rep = alladi_gordon_case(2, 3, 1, 300)
    assert rep.passed and rep.checked_count == 100
    assert alladi_gordon_companion(2, 5, 1, 300).passed
    with pytest.raises(InvalidCaseError):
        alladi_gordon_case(3, 2, 1, 300)
    with pytest.raises(InvalidCaseError):
        alladi_gordon_companion(2, 4, 1, 300)


def test_alladi_gordon_grid():
    main, comp = alladi_gordon_grid(), alladi_gordon_grid(companion=True)
    assert (2, 3, 1) in main and all(k % 2 for _, k, _ in comp)


def test_mclaughlin_examples():
    assert mclaughlin_params(3, 4, 1, 1) == 5
    assert mclaughlin_case(3, 4, 1, 1, 300).passed
    assert mclaughlin_companion(3, 4, 1, 1, 300).passed
    with pytest.raises(InvalidCaseError):
        mclaughlin_case(2, 3, 1, 1, 300)


def test_mclaughlin_rejects_nonpositive_offset(caplog):
    with pytest.raises(InvalidCaseError):
        mclaughlin_params(3, 4, 0, 1)
    with caplog.at_level("INFO", logger="qvanish.verify"):
        grid = mclaughlin_grid()
    assert (3, 4, 0, 1) not in grid
    assert any("rejected" in rec.message for rec in caplog.records)
    assert any(k <= m for k, m, _, _ in grid)


def test_main_suite():
    reps = paper_suite(500)
    assert all(r.passed for r in reps), summarize(reps)
    claim_reps = [r for r in reps if not r.case_id.startswith("section5")]
    assert min(r.checked_count for r in claim_reps) >= 90


def test_unknown_suite():
    with pytest.raises(KeyError):
        suite_cases("nosuch")
