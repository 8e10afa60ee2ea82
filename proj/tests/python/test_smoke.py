import pytest

import twinspec


def test_charpoly_of_k2():
    assert twinspec.charpoly(twinspec.Graph(2, [(1, 2)])) == [-1, 0, 1]


def test_cofactor_of_reference_nsg():
    g = twinspec.Graph.nsg("2,2,2,2,2,2,2,2,1,1")
    h = twinspec.cofactor(g, 5, 6)
    assert h[::-1][:4] == [7, 42, 20, -348]
    assert len(h) == 16


def test_twins_and_identity():
    g = twinspec.Graph.nsg("2,2,2,2,2,2,2,2,1,1")
    twins = twinspec.find_twins(g)
    assert any(t["ell"] == 5 and t["k"] == 6 for t in twins)
    report = twinspec.verify(g, 3, 4)
    assert report["identity_holds"]


def test_twin_deleted_charpoly_matches_deletion():
    g = twinspec.Graph.nsg("2,2,1,1")
    assert twinspec.twin_deleted_charpoly(g, 1, 2) == twinspec.charpoly(g.delete_vertex(1))


def test_eigenvalues_of_path():
    ev = twinspec.eigenvalues(twinspec.Graph(3, [(1, 2), (2, 3)]))
    assert ev == pytest.approx([-(2**0.5), 0.0, 2**0.5], abs=1e-12)


def test_estimate_report():
    g = twinspec.Graph.nsg("2,2,2,2,2,2,2,2,1,1")
    report = twinspec.estimate(g, 5, 6)
    assert len(report["rows"]) == 18
    assert "Displacement" in twinspec.estimate(g, 5, 6, format="csv")


def test_errors_carry_codes():
    g = twinspec.Graph.nsg("2,2,1,1")
    with pytest.raises(twinspec.TwinspecError) as info:
        twinspec.estimate(g, 1, 3)
    assert info.value.code == "NotTwins"
    with pytest.raises(ValueError):
        twinspec.Graph.nsg("2,2,1")


def test_reproduce_first_table():
    result = twinspec.reproduce("A1")
    assert result["passed"]


def test_reference_graph_loads():
    g = twinspec.load_g8()
    assert g.order == 8
    assert twinspec.verify(g, 7, 8)["identity_holds"]
