import pytest

import astopo


def test_version():
    assert astopo.__version__ == "1.0.0"


def test_distribution_basic_values():
    d = astopo.BoundedPowerLaw(2.25, 1, 1500)
    assert d.lambda_ == 2.25
    assert d.k_min == 1
    assert d.k_max == 1500
    assert d.support_size == 1500
    assert d.z_norm == pytest.approx(1.4601262028262972, rel=1e-12)
    assert d.mean_degree() == pytest.approx(2.7069048124005646, rel=1e-12)
    # Exact endpoint identities, not approximations.
    assert d.ccdf(1) == 1.0
    assert d.cdf(1500) == 1.0
    assert d.quantile(0.0) == 1
    table = d.cumulative_table()
    assert len(table) == 1500
    assert table[-1] == 1.0
    assert sum(d.pmf(k) for k in range(1, 1501)) == pytest.approx(1.0, abs=1e-9)


def test_truncated_zeta_closed_form():
    assert astopo.truncated_zeta(2.0, 1, 2) == 1.25


def test_metrics_match_frozen_values():
    d = astopo.BoundedPowerLaw(2.25, 1, 1500)
    assert astopo.ratio_min_degree(d) == pytest.approx(0.685, abs=0.005)
    assert astopo.ratio_max_degree(d) == pytest.approx(4.9e-8, rel=0.10)
    assert astopo.degrees_at_top_fraction(d, 0.17) == pytest.approx(
        0.63933762423512358, rel=1e-12)
    point = astopo.rich_fractions(d, 2)
    assert point.threshold_k == 2
    assert point.r_nodes == pytest.approx(0.31512769371281239, rel=1e-12)
    assert point.r_degrees == pytest.approx(0.74699062074524067, rel=1e-12)
    assert astopo.newman_mean_degree(2.25, 1) == pytest.approx(5.0, rel=1e-12)
    assert astopo.newman_rich_fraction(2.25, 0.20) == pytest.approx(
        0.72477966367769553, rel=1e-12)
    assert astopo.xpp_min_ratio_reference() == 0.608


def test_theory_table_mirrors_distribution():
    d = astopo.BoundedPowerLaw(2.5, 1, 1500)
    table = astopo.theory_table(2.5, 1, 1500, targets=[0.20])
    assert table["mean_degree"] == d.mean_degree()
    assert table["r_kmin"] == astopo.ratio_min_degree(d)
    assert table["r_kmax"] == astopo.ratio_max_degree(d)
    assert table["rich"] == [(0.20, astopo.degrees_at_top_fraction(d, 0.20))]


def test_sweep_decay_fit():
    out = astopo.sweep("ratio_max_degree", "k_max", 500, 5000, 500, fit_decay=True)
    assert out["varied_parameter"] == "k_max"
    assert len(out["rows"]) == 10
    assert out["decay_exponent"] == pytest.approx(2.25, abs=0.05)
    plain = astopo.sweep("mean_degree", "lambda", 2.0, 3.0, 0.25)
    assert plain["decay_exponent"] is None


def test_exception_mapping():
    assert issubclass(astopo.DomainError, ValueError)
    assert issubclass(astopo.DataError, RuntimeError)
    assert issubclass(astopo.ParseError, astopo.DataError)
    with pytest.raises(ValueError):
        astopo.BoundedPowerLaw(2.25, 0, 10)
    with pytest.raises(ValueError):
        astopo.BoundedPowerLaw(2.25, 1, 1500).quantile(1.0)
    with pytest.raises(astopo.ParseError):
        astopo.parse_edge_list("a b\n")
    with pytest.raises(RuntimeError):
        astopo.load_edge_list("/nonexistent/astopo_smoke.txt")


def test_random_state_determinism():
    a = astopo.RandomState(42)
    b = astopo.RandomState(42)
    assert [a.next_uniform() for _ in range(5)] == [b.next_uniform() for _ in range(5)]
    assert a.seed == 42
    with pytest.raises(ValueError):
        a.next_below(0)


def test_sample_fit_round_trip():
    d = astopo.BoundedPowerLaw(2.25, 1, 1500)
    state = astopo.RandomState(2024)
    degrees = astopo.sample_degrees(d, 20000, state)
    assert len(degrees) == 20000
    assert min(degrees) >= 1 and max(degrees) <= 1500
    result = astopo.fit(degrees, strategy="fixed", k_min=1, k_max=1500)
    assert abs(result["lambda_hat"] - 2.25) < 0.05
    assert result["lambda_hat"] == astopo.mle_lambda(degrees, 1, 1500)
    assert result["n_tail"] == 20000
    assert result["ks_stat"] < 0.02


def test_graph_pipeline(tmp_path):
    edges = astopo.parse_edge_list("5 5\n5 6\n6 5\n# comment\n5 6\n")
    cleaned = astopo.clean(edges)
    assert cleaned["edges"] == [(5, 6)]
    assert cleaned["self_loops_removed"] == 1
    assert cleaned["duplicates_removed"] == 2

    d = astopo.BoundedPowerLaw(2.25, 1, 1500)
    state = astopo.RandomState(7)
    degrees = astopo.sample_degrees(d, 400, state)
    out = astopo.configuration_model(degrees, state, simple=True)
    stubs = sum(degrees) + (1 if out["degree_adjusted"] else 0)
    assert len(out["edges"]) == stubs // 2 - out["residual_self_loops"] - \
        out["residual_duplicates"]

    path = tmp_path / "smoke_graph.txt"
    path.write_text("".join(f"{u} {v}\n" for u, v in out["edges"]))
    report = astopo.analyze_file(str(path), k_min=1, k_max=1500)
    assert report["dataset"] == str(path)
    assert report["summary"]["m"] == len(out["edges"])
    assert report["clean_stats"]["self_loops_removed"] == 0
    metrics = {row["metric"] for row in report["report"]}
    assert "mean_degree" in metrics and "r_kmin" in metrics


def test_empirical_rich_fraction():
    assert astopo.empirical_rich_fraction([4, 3, 2, 1], 0.5) == pytest.approx(0.7)
    hist = astopo.degree_histogram([1, 1, 2, 3])
    assert hist == {1: 2, 2: 1, 3: 1}
