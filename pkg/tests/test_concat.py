"""Concatenated layered codes: parameter tables and end-to-end recovery."""

import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from graphcodes.concat import (
    ScenarioLayout,
    admissible_scenarios,
    balance_table,
    build_concat,
    cascade_scenario,
    concat_params,
    demand_row,
    parse_scenario,
    scenario_table,
    series_multiplicities,
    subgraph_code_table,
)


def test_series_multiplicities():
    assert series_multiplicities(5, 3) == [1, 0, 6, 8, 39]
    # ell = 0: only the top copy
    assert series_multiplicities(4, 0) == [1, 0, 0, 0]


def test_parameters_854():
    p = concat_params(8, 5, 4)
    assert p.counts == {5: 1, 3: 6, 2: 8, 1: 39}
    assert (p.M1, p.M0, p.M) == (1120, 96, 1024)
    assert (p.alpha, p.beta) == (256, 64)
    # MSR point for d = n-1
    assert p.M == p.k * p.alpha
    assert p.alpha == (p.n - p.k) ** p.k
    assert p.beta == (p.n - p.k) ** (p.k - 1)


def test_balance_table_854():
    rows, sums = balance_table(8, 5, 4)
    assert sums == [0, 0, 0, 0, -96]
    # top row supplies nothing and misses (u-1-c) symbols per sublayer
    top = rows[0]
    assert top == {3: -6, 2: -8, 1: -3}
    # size-4 copies are fully accessed in column 4
    assert rows[1][4] == 1


def test_demand_row_854():
    assert demand_row(8, 5, 4) == [24, 48, 12]


def test_subgraph_code_table_854():
    rows = subgraph_code_table(8, 5, 4)
    dims = [(r["length"], r["dim"]) for r in rows]
    assert dims == [
        (10, 4), (10, 10),
        (20, 4), (20, 16), (20, 20),
        (35, 4), (35, 22), (35, 34), (35, 35),
    ]
    shells = [r["shell"] for r in rows]
    assert shells == [4, 6, 4, 12, 4, 4, 18, 12, 1]
    # syndrome lengths of the proper subcodes
    syn = [r["length"] - r["dim"] for r in rows if r["dim"] < r["length"]]
    assert syn == [6, 16, 4, 31, 13, 1]


def test_scenario_parsing():
    assert parse_scenario("3-2-1") == (3, 2, 1)
    assert cascade_scenario(8, 5, 4) == "3-2-1"
    with pytest.raises(ValueError):
        parse_scenario("3-x-1")
    with pytest.raises(ValueError):
        parse_scenario("3-0-1")


def test_admissible_scenarios_854():
    assert admissible_scenarios(8, 5, 4) == [
        (1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2, 1)]


def test_scenario_layouts_854():
    expect = {
        "3-2-1": (1024, 256, 64, (Fraction(1), Fraction(2), Fraction(3))),
        "3-1-1": (848, 212, 56, (Fraction(1), Fraction(1), Fraction(2))),
        "2-2-1": (1464, 366, 96,
                  (Fraction(1, 3), Fraction(5, 3), Fraction(3))),
        "1-1-1": (672, 168, 60,
                  (Fraction(1, 3), Fraction(2, 3), Fraction(2))),
    }
    for name, (M, alpha, beta, mult) in expect.items():
        lay = ScenarioLayout(8, 5, 4, parse_scenario(name))
        assert (lay.M, lay.alpha, lay.beta) == (M, alpha, beta)
        assert lay.multiplicities == mult
    rows = scenario_table(8, 5, 4, ["3-2-1", "3-1-1", "2-2-1", "1-1-1"])
    assert [(r["M"], r["alpha"], r["beta"]) for r in rows] == [
        (1024, 256, 64), (848, 212, 56), (1464, 366, 96), (672, 168, 60)]


def test_cascade_counts_match_series():
    lay = ScenarioLayout(8, 5, 4, (3, 2, 1))
    assert lay.is_cascade()
    assert lay.scale == 1
    assert lay.counts == concat_params(8, 5, 4).counts


def test_oversupplied_scenario_rejected():
    with pytest.raises(ValueError):
        ScenarioLayout(8, 5, 4, (3, 3, 1))


def test_small_layer_size_rejected():
    # layers disjoint from the accessed nodes cannot be completed
    with pytest.raises(ValueError):
        build_concat(7, 3, 2, 11)


def test_non_cascade_end_to_end_rejected():
    with pytest.raises(ValueError):
        build_concat(8, 5, 4, 11, "3-1-1")


def test_field_too_small_rejected():
    with pytest.raises(ValueError):
        build_concat(8, 5, 4, 7)


def _roundtrip(n, v, k, q):
    code = build_concat(n, v, k, q)
    rng = random.Random(42)
    blob = [rng.randrange(q) for _ in range(code.M)]
    nodes = code.encode(blob)
    assert len(nodes) == n
    assert all(len(col) == code.alpha for col in nodes)
    for A in itertools.combinations(range(n), k):
        got, log = code.collect(nodes, A)
        assert got == blob
        assert {i for i, _ in log} <= set(A)
        assert len(log) == k * code.alpha
    for f in range(n):
        column, counts = code.repair(nodes, f)
        assert column == nodes[f]
        assert set(counts.values()) == {code.layout.beta}
    return code


def test_end_to_end_643():
    code = _roundtrip(6, 4, 3, 7)
    assert code.layout.name == "2-1"
    assert code.M == code.k * code.alpha


def test_end_to_end_543():
    _roundtrip(5, 4, 3, 5)


def test_end_to_end_654():
    # single round, no helper codes below the top layer size
    code = _roundtrip(6, 5, 4, 7)
    assert code.alpha == (6 - 4) ** 4


def test_wrong_blob_length_rejected():
    code = build_concat(5, 4, 3, 5)
    with pytest.raises(ValueError):
        code.encode([0] * (code.M + 1))
