"""Smoke tests for the Python bindings; runnable as a script or under pytest."""
import darkstate as ds


def test_defaults_roundtrip():
    p = ds.default_params()
    assert abs(p.g0 - 50.0 / 5.18) < 1e-12
    assert p.r0 == 1.0 and p.alpha0 == 30.0
    q = ds.parse_params(ds.emit_config(p))
    for name in ("g0", "r0", "alpha0", "T0", "tW", "delta",
                 "lambda_si", "gamma_si", "mass_si", "waist0"):
        assert getattr(p, name) == getattr(q, name), name


def test_units():
    p = ds.default_params()
    # one natural time unit is 1/gamma seconds
    assert abs(ds.to_si(1.0, ds.Kind.time, p) - 1.0 / p.gamma_si) < 1e-25
    v = ds.to_natural(27.7638, ds.Kind.velocity, p)
    assert abs(v - 27.7638 / (p.lambda_si * p.gamma_si)) < 1e-6


def test_dressed_spectrum():
    p = ds.default_params()
    sp = ds.dressed_energies(1.0, 0.0, p)  # antinode, pump off
    assert abs(sp.e_plus - p.g0) < 1e-12
    assert abs(sp.e_minus + p.g0) < 1e-12
    assert sp.e0 == 0.0
    d = ds.dark_state(2.0 + 0j, 1.0 + 0j)
    assert abs(d[0]) == 0.0
    assert abs(abs(d[1]) ** 2 + abs(d[2]) ** 2 - 1.0) < 1e-12


def test_crossings_and_prediction():
    p = ds.default_params()
    pulse = ds.PulseShape.from_params(p)
    traj = ds.Trajectory.constant(0.017, 0.25)
    ev = ds.find_node_crossings(traj, pulse, 0.0, 2 * pulse.T0)
    assert len(ev) == 1
    assert abs(ev[0].t_star - 0.25 / 0.017) < 1e-6
    lz = ds.predict(traj, pulse, p, 0.0, 2 * pulse.T0)
    assert 0.0 < lz.p_total < 1.0


def test_integration_matches_prediction():
    p = ds.default_params()
    pulse = ds.PulseShape.from_params(p)
    traj = ds.Trajectory.constant(0.017, 0.25)
    rep = ds.integrate(traj, pulse, p, 0.0, 2 * pulse.T0, 1e-8, 1e-10)
    assert rep.max_norm_drift < 1e-6
    lz = ds.predict(traj, pulse, p, 0.0, 2 * pulse.T0)
    assert abs(rep.p_dark - lz.p_total) < 0.05


def test_ensemble_trivial():
    p = ds.default_params()
    pulse = ds.PulseShape.from_params(p)
    dist = ds.VelocityDistribution(0.0, 1.2e-3)
    val = ds.ensemble_survival(dist, pulse, p, 0.25)
    assert val > 0.99


def test_scenario_run():
    res = ds.run_scenario("fig4_f", points=101)
    assert res.columns == ["t", "alpha", "f"]
    assert len(res.rows) == 101
    fmax = max(r[2] for r in res.rows)
    assert fmax < 0.035
    assert res.csv_path == ""  # no out_dir: nothing written


def test_diagnostics():
    p = ds.default_params()
    assert abs(ds.linearization_error(0.7) - 0.1077) < 5e-4
    peak = ds.small_term_S(ds.small_term_peak_x(0.012, p), 0.012, p)
    assert abs(peak - 2.0) < 1e-9
    f = ds.trap_frequencies(p)
    assert f.omega_z_si > f.omega_rho_si > 0
    assert abs(ds.speed_threshold - 1.0 / 48.0) < 1e-15


if __name__ == "__main__":
    fns = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for fn in fns:
        fn()
        print(f"{fn.__name__} ok")
    print(f"{len(fns)} smoke tests passed")
