import os

import pytest

import angleset

INSTANCES = os.environ.get(
    "ANGLESET_INSTANCE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "instances")
)


def test_catalogue_verdicts():
    for name in ["fig1", "fig2a", "fig3", "fig4-yes", "fig4-no", "laman-fig6"]:
        inst = angleset.get_instance(name)
        result = angleset.oracle_solve(inst["graph"])
        assert result["verdict"] == inst["expected"]


def test_build_and_solve_cycle():
    g = angleset.RotationGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.num_edges == 4
    assert g.is_plane()
    cert = angleset.solve_deg4(g)
    assert cert["verdict"] == "YES"
    assert angleset.check_cover(g, cert["angles"])["valid"]


def test_text_round_trip():
    g = angleset.get_instance("fig2a")["graph"]
    text = g.to_text()
    assert angleset.RotationGraph.from_text(text).to_text() == text


def test_bad_rotation_raises():
    with pytest.raises(ValueError):
        angleset.RotationGraph(2, [(0, 1)], [[0], []])


def test_density_and_allocation():
    k6 = angleset.get_instance("k6")["graph"]
    low, witness = angleset.check_low_density(k6)
    assert not low and len(witness) == 6
    size, angles = angleset.optimal_allocation(angleset.get_instance("c4")["graph"])
    assert size == 2 and len(angles) == 2


def test_decompose_and_reduce():
    g = angleset.gen_random_plane(15, 4, 3)
    cert = angleset.solve_deg4(g)
    h, h_tilde, ok = angleset.decompose(g, cert["angles"])
    assert ok and h.num_edges == 2 * g.num_edges and h_tilde.is_plane()
    red = angleset.reduce_3col(3, [(0, 1), (1, 2), (0, 2)])
    assert red.num_vertices == 57 and red.num_edges == 63


def test_cli_entry():
    code, out, _ = angleset.run_cli(["solve", "--algo", "oracle", os.path.join(INSTANCES, "fig2a.rg")])
    assert code == 1 and "NO" in out
