import math

import pytest

import hyperppr as hp

F1 = "4 2\n1 0 1 2\n1 2 3\n"


def test_parse_and_stats():
    H = hp.parse(F1)
    assert H.n == 4
    assert H.m == 2
    assert H.degree(2) == 2.0
    assert H.total_volume() == 5.0
    assert hp.serialize(H) == "4 2\n1 0 1 2\n1 2 3\n"


def test_measure():
    H = hp.parse(F1)
    vol, cut, phi = hp.measure(H, [0, 1])
    assert vol == 2.0
    assert cut == 1.0
    assert phi == 0.5


def test_ppr_is_distribution():
    H = hp.parse(F1)
    rho = hp.ppr(H, 0, alpha=0.2, exact=True)
    assert math.isclose(sum(rho), 1.0, abs_tol=1e-6)
    assert min(rho) >= -1e-9
    ratios = [rho[v] / H.degree(v) for v in range(H.n)]
    assert ratios[0] >= max(ratios) - 1e-12


def test_sweep_and_local():
    H = hp.parse(F1)
    rho = hp.ppr(H, 0, alpha=0.2, exact=True)
    members, phi = hp.sweep(H, rho, mu=0.5)
    assert 0 in members
    result = hp.local_clustering(H, 0, mu=0.5)
    assert result[0] == [0, 1]
    assert result[1] == 0.5


def test_global_matches_brute_force():
    H = hp.parse(F1)
    members, phi, seed = hp.global_clustering(H)
    bf_members, bf_phi = hp.brute_force_conductance(H)
    assert phi == bf_phi == 0.5


def test_planted_recovery():
    H = hp.planted(clusters=2, cluster_size=8, edges_per_cluster=20, edge_size=3,
                   crossing=1, rng_seed=7)
    assert H.n == 16
    members, phi, alpha = hp.local_clustering(H, 0, mu=0.5)
    assert set(members) == set(range(8))


def test_errors():
    with pytest.raises(ValueError):
        hp.parse("2 1\n-1 0 1\n")
    H = hp.parse(F1)
    with pytest.raises(RuntimeError):
        hp.measure(H, [0, 1, 2, 3])
