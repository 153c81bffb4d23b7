import pytest

from atqc.complexes import dual_complex
from atqc.distance import (
    certified_distances,
    code_distances,
    compare_hex_distances,
    oracle_ceiling_from_env,
    oracle_distances,
    shortest_nontrivial_cycle,
)
from atqc.errors import InputError
from atqc.homology import edges_to_mask, homology_signature, is_cycle
from atqc.stabilizer import build_css
from atqc.torus import HexTorusSpec, SquareTorusSpec, build_hex_torus, build_square_torus


@pytest.mark.parametrize("l,expected", [(2, 2), (3, 3), (4, 4), (5, 5)])
def test_square_torus_distance(l, expected):
    weight, witness = shortest_nontrivial_cycle(build_square_torus(SquareTorusSpec(l)))
    assert weight == expected
    assert witness.bit_count() == expected


@pytest.mark.parametrize(
    "spec,expected",
    [
        (HexTorusSpec("apothem", 2), (4, 2)),
        (HexTorusSpec("apothem", 3), (6, 3)),
        (HexTorusSpec("edge", 3), (4, 2)),
        (HexTorusSpec("edge", 6), (8, 4)),
    ],
)
def test_hex_torus_distances(spec, expected):
    r = code_distances(build_hex_torus(spec))
    assert (r.d_x, r.d_z) == expected


def test_search_equals_oracle_on_corpus(corpus):
    for c in corpus:
        if c.num_edges > 30:
            continue
        r = code_distances(c)
        assert oracle_distances(build_css(c)) == (r.d_x, r.d_z), c.label


def test_witness_validity(corpus):
    for c in corpus:
        r = code_distances(c)
        wx = edges_to_mask(c, r.witness_x)
        assert is_cycle(c, wx)
        assert homology_signature(c, wx) != 0
        assert wx.bit_count() == r.d_x
        d = dual_complex(c)
        wz = edges_to_mask(d, r.witness_z)
        assert is_cycle(d, wz)
        assert homology_signature(d, wz) != 0
        assert wz.bit_count() == r.d_z


def test_distance_symmetry_under_dual(corpus):
    for c in corpus:
        if c.num_edges > 30:
            continue
        r = code_distances(c)
        rd = code_distances(dual_complex(c))
        assert (rd.d_x, rd.d_z) == (r.d_z, r.d_x)


def test_witness_determinism():
    a = code_distances(build_square_torus(SquareTorusSpec(3)))
    b = code_distances(build_square_torus(SquareTorusSpec(3)))
    assert a == b
    assert a.witness_x == (0, 1, 2)


def test_oracle_examples():
    assert oracle_distances(build_css(build_square_torus(SquareTorusSpec(2)))) == (2, 2)
    assert oracle_distances(build_css(build_hex_torus(HexTorusSpec("apothem", 2)))) == (4, 2)


def test_oracle_ingested(ingested_genus2):
    assert oracle_distances(build_css(ingested_genus2)) == (5, 2)


def test_oracle_refuses_above_ceiling():
    code = build_css(build_square_torus(SquareTorusSpec(4)))  # n = 32
    with pytest.raises(InputError, match="ceiling"):
        oracle_distances(code, 30)
    # but a raised ceiling admits it
    assert oracle_distances(code, 32) == (4, 4)


def test_oracle_ceiling_env_override(monkeypatch):
    monkeypatch.setenv("ATQC_ORACLE_CEILING", "12")
    assert oracle_ceiling_from_env() == 12
    monkeypatch.setenv("ATQC_ORACLE_CEILING", "zeppelin")
    with pytest.raises(InputError):
        oracle_ceiling_from_env()
    monkeypatch.delenv("ATQC_ORACLE_CEILING")
    assert oracle_ceiling_from_env() == 30


def test_certified_distances_method(ingested_genus2):
    r = certified_distances(ingested_genus2)
    assert r.method == "both-agree"
    big = build_hex_torus(HexTorusSpec("edge", 6))
    assert certified_distances(big).method == "search"


def test_ceiling_formula_matches_at_small_apothem_scales():
    for xi in (2, 3):
        cmp = compare_hex_distances(HexTorusSpec("apothem", xi))
        assert cmp.matches
        assert cmp.finding is None


def test_ceiling_formula_finding_at_apothem_four():
    # the ceiling formula predicts d_x = 7 but the honeycomb torus is
    # bipartite, so every cycle is even: the exact distance is 8
    cmp = compare_hex_distances(HexTorusSpec("apothem", 4))
    assert cmp.formula == (7, 4)
    assert cmp.computed == (8, 4)
    assert not cmp.matches
    assert "lower bounds" in cmp.finding


def test_ceiling_formula_finding_at_edge_scales():
    cmp3 = compare_hex_distances(HexTorusSpec("edge", 3))
    assert cmp3.formula == (3, 2)
    assert cmp3.computed == (4, 2)
    assert cmp3.finding is not None
    cmp6 = compare_hex_distances(HexTorusSpec("edge", 6))
    assert cmp6.formula == (6, 4)
    assert cmp6.computed == (8, 4)
    assert cmp6.finding is not None


def test_exact_distances_dominate_hyperbolic_bounds(ingested_genus2):
    from atqc.geometry import SchlafliPair, distance_bounds

    r = code_distances(ingested_genus2)
    bx, bz = distance_bounds(SchlafliPair(8, 3), 2)
    assert r.d_x >= bx and r.d_z >= bz
