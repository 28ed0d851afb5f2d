import random

import pytest

from rootgain.algebra import PolyFp, PolyQ, factor_mod_p, legendre, primes_up_to
from rootgain.jacobian import (
    JacobianError,
    NodePrimeRecord,
    StableModelData,
    alternating_profiles,
    find_node_primes,
    hyperelliptic_rank_gain_report,
    local_root_number_bks,
    orbit_simulation_root_number,
    root_number_after_extension,
    tau_sign,
)


def model(orbits, s=1):
    return StableModelData(
        prime=5,
        components=s,
        all_components_absolutely_irreducible=True,
        orbit_list=tuple(orbits),
    )


# ---------------------------------------------------------------- node primes


def node_pattern_oracle(f, p):
    """Directly factor f mod p and test for exactly one double linear factor
    with everything else simple and away from the node."""
    fp = PolyFp.reduce(f, p)
    if fp.degree != f.degree:
        return None
    fac = factor_mod_p(fp)
    doubles = [(g, m) for g, m in fac if m == 2 and g.degree == 1]
    if len(doubles) != 1:
        return None
    if any(m != 1 for g, m in fac if (g, m) != doubles[0]):
        return None
    g, _ = doubles[0]
    a = (-g[0]) % p
    rest = [h for h, m in fac if h != g]
    if any(h(a) == 0 for h in rest):
        return None
    # cofactor separable: distinct irreducible factors, all multiplicity one
    if len(set(rest)) != len(rest):
        return None
    return a


def test_find_node_primes_against_factorization_oracle():
    f = PolyQ([0, -1, 0, 0, 0, 1])  # X^5 - X
    found = {rec.prime: rec.node for rec in find_node_primes(f, 50)}
    expected = {}
    for p in primes_up_to(50):
        if p == 2:
            continue
        a = node_pattern_oracle(f, p)
        if a is not None:
            expected[p] = a
    assert found == expected


def test_find_node_primes_simple_disc_root():
    # f = X^5 + X + 1: disc = 3381 = 3 * 7^2 * 23, so 3 and 23 are simple
    f = PolyQ([1, 1, 0, 0, 0, 1])
    recs = find_node_primes(f, 200)
    assert any(r.disc_valuation_one for r in recs)
    assert {r.prime for r in recs} == {3, 7, 23}
    assert {r.prime for r in recs if r.disc_valuation_one} == {3, 23}
    for r in recs:
        assert r.cofactor.degree == f.degree - 2


def test_triple_root_prime_excluded():
    # X^5 + X^2 has a triple root at 0 mod any p; use a separable shift with a
    # planted triple root mod 7: (X-1)^3 * (X^2+X+3) mod 7
    lift = (PolyQ([-1, 1]) ** 3) * PolyQ([3, 1, 1]) + PolyQ([7])
    assert lift.is_separable()
    recs = find_node_primes(lift, 7)
    assert all(r.prime != 7 for r in recs)


def test_inseparable_rejected():
    with pytest.raises(JacobianError):
        find_node_primes(PolyQ([0, 0, 1, 2, 1]) * PolyQ([0, 1]), 50)


# ---------------------------------------------------------------- tau


def test_tau_examples():
    rec = NodePrimeRecord(7, 0, PolyFp(7, [1, 0, 0, 1]), False)
    assert rec.cofactor(0) == 1
    assert tau_sign(rec) == 1
    rec2 = NodePrimeRecord(7, 0, PolyFp(7, [3, 0, 0, 1]), False)
    assert tau_sign(rec2) == -1  # 3 is a non-residue mod 7


def test_tau_against_quadratic_splitting_oracle():
    rng = random.Random(1234)
    count = 0
    while count < 500:
        p = rng.choice([3, 5, 7, 11, 13, 17])
        a = rng.randrange(p)
        coeffs = [rng.randrange(p) for _ in range(3)] + [1]
        cof = PolyFp(p, coeffs)
        if cof(a) == 0:
            continue
        count += 1
        rec = NodePrimeRecord(p, a, cof, False)
        # oracle: Y^2 - cof(a) splits into linears iff cof(a) is a square
        quad = PolyFp(p, [(-cof(a)) % p, 0, 1])
        split = all(g.degree == 1 for g, _ in factor_mod_p(quad))
        assert (tau_sign(rec) == 1) == split


# ---------------------------------------------------------------- base formula


def test_bks_direct_cases():
    assert local_root_number_bks(model([(1, -1)])) == 1
    assert local_root_number_bks(model([(1, 1)])) == -1
    assert local_root_number_bks(model([])) == 1  # smooth degenerate encoding


def test_bks_multi_orbit():
    assert local_root_number_bks(model([(1, 1), (2, -1)])) == (-1) ** (2 + 1 + 1) * -1


# ---------------------------------------------------------------- extension engine


def test_trivial_extension_matches_base():
    for orbits in ([(1, 1)], [(1, -1)], [(2, -1), (3, 1)], []):
        M = model(orbits)
        assert root_number_after_extension(M, [1]) == local_root_number_bks(M)


def test_case_b_flip_example():
    M = model([(1, -1)])  # ground sign tau = -1, omega = +1, base W = +1
    assert local_root_number_bks(M) == 1
    assert root_number_after_extension(M, [2]) == -1


def test_engine_matches_simulation_exhaustively():
    mismatches = []
    for tau in (1, -1):
        for dz in range(1, 13):
            for d in range(1, 13):
                M = model([(dz, tau)])
                e = root_number_after_extension(M, [d])
                o = orbit_simulation_root_number(M, [d])
                if e != o:
                    mismatches.append((tau, dz, d, e, o))
    assert mismatches == []


def test_case_a_biconditional_literal():
    # ground sign -tau = -1 means tau = +1: the orbit part of W_q equals +1
    # exactly when d and d(z) are both even
    for dz in range(1, 13):
        for d in range(1, 13):
            M = model([(dz, 1)])
            omega_q = orbit_simulation_root_number(M, [d])  # s = 1: W_q = omega_q
            assert (omega_q == 1) == (d % 2 == 0 and dz % 2 == 0)


def test_multiplicativity_over_degree_lists():
    rng = random.Random(77)
    for _ in range(100):
        orbits = [
            (rng.randint(1, 6), rng.choice([1, -1])) for _ in range(rng.randint(1, 3))
        ]
        M = model(orbits)
        d1 = [rng.randint(1, 6) for _ in range(rng.randint(1, 3))]
        d2 = [rng.randint(1, 6) for _ in range(rng.randint(1, 3))]
        assert root_number_after_extension(M, d1 + d2) == root_number_after_extension(
            M, d1
        ) * root_number_after_extension(M, d2)


def test_engine_requires_absolutely_irreducible_components():
    M = StableModelData(5, 1, False, ((1, 1),))
    with pytest.raises(JacobianError):
        root_number_after_extension(M, [2])


def test_empty_degree_list_rejected():
    with pytest.raises(JacobianError):
        root_number_after_extension(model([(1, 1)]), [])


# ---------------------------------------------------------------- reports


def test_profiles_shape():
    assert alternating_profiles(4) == ([2], [1, 1, 1, 1])
    assert alternating_profiles(5) == ([2, 1], [1] * 5)


def test_report_flips_always():
    f = PolyQ([1, 1, 0, 0, 0, 1])
    rep = hyperelliptic_rank_gain_report(f, 5, 200)
    assert rep.rows
    for row in rep.rows:
        assert row.verdict == "flip"
        assert row.profile_a_w == -row.profile_b_w
    assert rep.disclaimer == "conditional-on-parity-conjecture"


def test_report_verdict_independent_of_degree():
    f = PolyQ([1, 1, 0, 0, 0, 1])
    r4 = hyperelliptic_rank_gain_report(f, 4, 200)
    r6 = hyperelliptic_rank_gain_report(f, 6, 200)
    assert [(row.prime, row.verdict) for row in r4.rows] == [
        (row.prime, row.verdict) for row in r6.rows
    ]


def test_random_quintics_sextics_flip():
    rng = random.Random(20240640)
    found = 0
    tried = 0
    while found < 20 and tried < 500:
        tried += 1
        deg = rng.choice([5, 6])
        coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [1]
        f = PolyQ(coeffs)
        if not f.is_separable():
            continue
        rep = hyperelliptic_rank_gain_report(f, 5, 100)
        if not rep.rows:
            continue
        found += 1
        for row in rep.rows:
            assert row.profile_a_w == -row.profile_b_w
    assert found == 20
