import json
import math

import pytest

from coverlab import bounds as B


def test_trivial_identities():
    assert B.ramsey(1, 9).value == 1
    assert B.ramsey(2, 7) == B.ramsey(7, 2)
    assert B.ramsey(2, 7).value == 7
    assert B.ramsey(2, 7).status is B.Status.EXACT
    with pytest.raises(ValueError):
        B.ramsey(0, 3)


def test_table_values():
    expected = {(3, 3): 6, (3, 4): 9, (3, 5): 14, (3, 6): 18, (3, 7): 23,
                (3, 8): 28, (3, 9): 36, (4, 4): 18, (4, 5): 25}
    for (s, t), v in expected.items():
        assert B.ramsey(s, t).value == v


def test_search_rederives_small_value():
    bv = B.ramsey(3, 3)
    assert bv.value == 6 and bv.status is B.Status.EXACT
    assert bv.witness == {"method": "exhaustive", "order": 6}


def test_exhaustive_search_direct():
    assert B.ramsey_exact_search(3, 3, max_order=7) == 6
    with pytest.raises(B.SearchBudgetExceeded):
        B.ramsey_exact_search(3, 4, max_order=5)


def test_larger_value_stays_table_exact_by_default():
    assert B.ramsey(3, 4).status in (B.Status.TABLE_EXACT, B.Status.EXACT)
    assert B.ramsey(4, 4).status is B.Status.TABLE_EXACT


def test_binomial_fallback():
    bv = B.ramsey(4, 30)
    assert bv.status is B.Status.UPPER_BOUND_ONLY
    assert bv.value == math.comb(32, 3)


def test_weakest_status_ordering():
    assert B.weakest(B.Status.EXACT, B.Status.TABLE_EXACT) is B.Status.TABLE_EXACT
    assert B.weakest(B.Status.TABLE_EXACT,
                     B.Status.UPPER_BOUND_ONLY) is B.Status.UPPER_BOUND_ONLY
    assert B.weakest(B.Status.EXACT) is B.Status.EXACT


def test_alpha_recursion():
    assert B.alpha_value(4, 1).value == 1
    # second level: R(4, 3*1+1) - 1 = R(4,4) - 1 = 17
    a2 = B.alpha_value(4, 2)
    assert a2.value == 17
    # third level: R(4, 3*17+1) = R(4,52) has no table entry
    a3 = B.alpha_value(4, 3)
    assert a3.value == math.comb(54, 3) - 1
    assert a3.status is B.Status.UPPER_BOUND_ONLY


def test_alpha_digit_budget():
    a = B.alpha_value(4, 12, max_digits=100)
    assert a.value is None
    assert a.status is B.Status.UPPER_BOUND_ONLY
    assert "budget" in a.note


def test_xi_values():
    # nu = R(3,4) - 1 = 8; xi_{4,2} = (8^2 - 1) / 7 = 9
    assert B.xi_value(4, 2).value == 9
    assert B.xi_value(4, 1).value == 1
    # nu = R(4,5) - 1 = 24 at n = 5
    assert B.xi_value(5, 3).value == (24 ** 3 - 1) // 23


def test_paper_constants_structure():
    pc = B.paper_constants(4)
    assert pc["nu"].value == 8
    assert pc["xi"].value == 9
    assert pc["c_inspc"].constant_term.value == (4 - 1) ** 2 * 8
    # the dominating-set component is far beyond any digit budget
    assert pc["dom_large"].value is None
    assert pc["c_inspp"].value is None
    with pytest.raises(ValueError):
        B.paper_constants(3)


def test_symbolic_constant_evaluation():
    zero = B.BoundValue(0, B.Status.EXACT)
    five = B.BoundValue(5, B.Status.TABLE_EXACT)
    sym = B.SymbolicConstant(zero, five)
    got = sym.evaluate(7)
    assert got.value == 35
    assert got.status is B.Status.UPPER_BOUND_ONLY  # external c_chi is a bound
    assert "c_chi" in str(sym)


def test_status_propagates_through_arithmetic():
    # constants built only from table values keep table_exact status
    pc = B.paper_constants(4)
    assert pc["nu"].status is B.Status.TABLE_EXACT
    assert pc["xi"].status is B.Status.TABLE_EXACT
    assert pc["c_inspc"].constant_term.status is B.Status.TABLE_EXACT


def test_table_override(tmp_path, monkeypatch):
    path = tmp_path / "table.json"
    path.write_text(json.dumps({"3,3": 99}))
    monkeypatch.setenv(B.TABLE_ENV_VAR, str(path))
    # avoid the search path (and its cache) so the table value is visible
    B._search_cache.clear()
    bv = B.ramsey(3, 3, max_search_order=0)
    assert bv.value == 99
    monkeypatch.delenv(B.TABLE_ENV_VAR)
    assert B.ramsey(3, 4).value == 9


def test_dominating_set_bound_small_cases():
    # l0 = 2: R(4,4) * alpha_{4,2} + 1 = 18*17 + 1
    bv = B.dominating_set_bound(4, 2)
    assert bv.value == 18 * 17 + 1
    assert bv.status is B.Status.TABLE_EXACT
