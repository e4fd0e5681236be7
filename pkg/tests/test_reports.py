import io
from fractions import Fraction

import pytest

from errors import DomainError
from graphs import build_graph
from reports import (
    CSV_COLUMNS,
    baseline_certificate,
    blowup_coef_certificate,
    complete_certificate,
    dense1_certificate,
    dense2_certificate,
    maclaurin_certificate,
    monte_carlo_fraction,
    recurrence_certificate,
    render_text,
    report_row,
    star_upper_certificate,
    stars_certificate,
    table_rows,
    write_csv,
)
from schemas import SearchParams
from search import convergence_table, exact_rb, local_search


def test_report_row_for_exact_result():
    graph = build_graph("K3")
    row = report_row("K3", graph, 4, 3, exact_rb(graph, 4, 3))
    assert row.rb == 4 and row.exact
    assert row.fraction_exact == "1/1"
    assert row.fraction_decimal == "1"
    assert row.baseline_exact == "2/9"
    assert row.verdicts == ["above-baseline"]


def test_report_row_at_baseline():
    graph = build_graph("K2")
    row = report_row("K2", graph, 4, 1, exact_rb(graph, 4, 1))
    assert row.verdicts == ["at-baseline"]


def test_heuristic_row_can_fall_below_baseline():
    graph = build_graph("K3")
    params = SearchParams(seed=1, restarts=1, iterations=0)
    from colorings import EdgeColoring

    constant = EdgeColoring(n=5, r=3, colors=[0] * 10)
    row = report_row("K3", graph, 5, 3, local_search(graph, 5, 3, params=params, warm=constant))
    assert not row.exact
    assert row.verdicts == ["below-baseline"]


def test_table_rows_carry_the_monotone_verdict():
    params = SearchParams(seed=1, restarts=1, iterations=100)
    exact = table_rows("K3", convergence_table(build_graph("K3"), 3, [3, 4]))
    assert [row.verdicts[-1] for row in exact] == ["monotone-ok", "monotone-ok"]
    mixed = table_rows("K3", convergence_table(build_graph("K3"), 3, [4, 5], mode="search", params=params))
    assert all(row.verdicts[-1] == "monotone-skipped" for row in mixed)


def test_csv_has_fixed_columns():
    rows = table_rows("K3", convergence_table(build_graph("K3"), 3, [3, 4]))
    text = write_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "3,3,K3,1,True,1,1/1,2/9"
    assert lines[2] == "4,3,K3,4,True,1,1/1,2/9"
    buffer = io.StringIO()
    write_csv(rows, buffer)
    assert buffer.getvalue() == text


def test_render_text_lists_every_row():
    rows = table_rows("K3", convergence_table(build_graph("K3"), 3, [3, 4]))
    text = render_text(rows)
    assert "fraction_exact" in text.splitlines()[0]
    assert len(text.splitlines()) == 3
    assert "monotone-ok" in text


def test_certificates():
    assert baseline_certificate(3, 3).summary == "2/9 ≈ 0.2222"
    assert dense2_certificate(6, 14).summary == "not 15-anti-common: TRUE"
    assert dense2_certificate(6, 13).summary == "not 15-anti-common: FALSE"
    complete = complete_certificate(4)
    assert complete.holds and complete.values["lhs"] == "2/21" and complete.values["rhs"] == "5/324"
    assert complete.summary == "not 6-anti-common: TRUE"
    assert dense1_certificate(6, 14, "0.99").summary == "not 15-anti-common: NOT APPLICABLE"


def test_supplementary_certificates():
    recurrence = recurrence_certificate(5, 10, 4, 2, aut=4)
    assert recurrence.values["value"] == "6300"
    assert recurrence.values["density"] == "2/31"
    stars = stars_certificate([3, 3, 2], 8, 10)
    assert stars.holds
    assert stars.values["automorphisms"] == "16"
    maclaurin = maclaurin_certificate(["1", "2", "3"], 2)
    assert maclaurin.values["sum"] == "11/1" and maclaurin.values["upper"] == "12/1"
    assert maclaurin.holds and maclaurin.values["equal"] == "false"


def test_monte_carlo_is_reproducible():
    graph = build_graph("K3")
    first = monte_carlo_fraction(graph, 8, 3, seed=5, samples=10)
    second = monte_carlo_fraction(graph, 8, 3, seed=5, samples=10)
    assert first.mean == second.mean and first.stderr == second.stderr
    assert first.baseline == Fraction(2, 9)
    assert first.fractions.shape == (10,)


def test_monte_carlo_single_sample_has_zero_stderr():
    assert monte_carlo_fraction(build_graph("K3"), 6, 3, seed=1, samples=1).stderr == 0.0


@pytest.mark.parametrize("n, r, samples", [(2, 3, 5), (6, 0, 5), (6, 3, 0)])
def test_monte_carlo_domain(n, r, samples):
    with pytest.raises(DomainError):
        monte_carlo_fraction(build_graph("K3"), n, r, seed=1, samples=samples)


@pytest.mark.slow
def test_monte_carlo_triangle_fraction_near_baseline():
    estimate = monte_carlo_fraction(build_graph("K3"), 60, 3, seed=1, samples=200)
    assert abs(estimate.mean - 2 / 9) < 0.01
    assert estimate.stderr < 0.001


def test_large_certificate_values_print_as_plain_numbers():
    assert star_upper_certificate(300, 2, 4).summary == "rb_4(S2;300) <= 89700/1 ≈ 89700"
    assert blowup_coef_certificate(2, 100000, 2).summary == "coefficient=50000/1 ≈ 50000"
    assert recurrence_certificate(5, 10, 4, 3).summary == "F(125)=3937750"
