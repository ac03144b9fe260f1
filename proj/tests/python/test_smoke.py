"""Smoke tests for the python bindings: exercise one call into each area."""

import math

import quiverinv as qi


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * (1.0 + abs(b))


def test_sampling_and_actions():
    p = qi.random_rep(3, 2, 42)
    assert p.m == 3 and p.n == 2
    assert qi.is_generic(p)

    g = qi.random_gauge(3, 2, 43)
    moved = qi.act_gauge(g, p)
    for k in range(1, 3):
        assert close(qi.charpoly_invariant(k, moved), qi.charpoly_invariant(k, p), 1e-8)


def test_moment_zero_sampler():
    z = qi.random_z_point(2, 2, 7)
    assert qi.moment_residual_norm(z) < 1e-10


def test_identities():
    assert qi.rho_identity_residual([3.0 + 0j], 2, 1) < 1e-12
    assert qi.phi_identity_residual([1 + 1j], [2 - 1j], 2, 2, 0) < 1e-12
    assert close(qi.e_zm(1, [1.0 + 0j, 2.0 + 0j], 2), 5.0 + 0j)
    assert close(qi.p_rs(0, 0, [1j, 2j], [0j, 0j]), 2.0 + 0j)


def test_trace_word_on_embedded_point():
    z, zp = [1.5 + 0.5j], [0.25 - 1j]
    p = qi.embed_ll(z, zp, 2)
    expected = z[0] ** 2 * zp[0] ** 2
    assert close(qi.trace_word(2, 2, p), expected, 1e-12)


def test_canonical_form():
    p = qi.embed_l([1.0 + 0j, 2.0 + 0j], 2)
    z = qi.canonical_form(p)
    assert close(z[0], 1.0 + 0j, 1e-8) and close(z[1], 2.0 + 0j, 1e-8)
    assert qi.orbit_equal(p, qi.embed_l([2.0 + 0j, 1.0 + 0j], 2))

    d, e = qi.z1_normal_form(
        qi.DoubleRepPoint(2, 1, [[2 + 0j], [3 + 0j]], [[3 + 0j], [2 + 0j]])
    )
    assert close(d, math.sqrt(6.0) + 0j, 1e-12)
    assert close(e, math.sqrt(6.0) + 0j, 1e-12)


def test_plant_and_recover():
    z = qi.random_z_point(2, 2, 99)
    rec = qi.canonicalize_double(z)
    assert rec["on_saturation"]
    assert len(rec["z"]) == 2 and len(rec["zp"]) == 2


def test_exact_layer():
    assert qi.molien_closed_form_L(1, 2, 6) == [1, 0, 1, 0, 1, 0, 1]
    assert qi.molien_L(2, 2, 8) == qi.molien_closed_form_L(2, 2, 8)

    rep = qi.generation_check(1, 2, 2, 2, "LL")
    assert rep["verdict"] and rep["molien_dim"] == 3

    jac = qi.jacobian_check(1, 3, trials=10, seed=5)
    assert jac["proportional"] and jac["exact_constant"] == "3"
    assert jac["relative_spread"] < 1e-6


def test_error_surface():
    try:
        qi.canonical_form(qi.embed_l([1.0 + 0j, -1.0 + 0j], 2))
    except qi.NotGenericError:
        pass
    else:
        raise AssertionError("expected NotGenericError")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except AssertionError as exc:
                print(f"FAIL {name}: {exc}")
                failures += 1
    raise SystemExit(1 if failures else 0)
