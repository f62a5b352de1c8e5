#include <doctest.h>

#include "corpus.hpp"
#include "multizero/engine.hpp"
#include "multizero/witness.hpp"

using namespace multizero;

namespace {

BigFloat two_pow(long e, long precision = 256) { return BigFloat::power_of_two(e, precision); }

Verdict decide_with(const AugmentedVerticalSystem& sys, PartitionMode mode = PartitionMode::Maximal) {
    DecideOptions options;
    options.mode = mode;
    return decide(sys, options);
}

BigFloat max_abs(const std::vector<BigFloat>& v) {
    BigFloat m(0L, 256);
    for (const auto& x : v) {
        m = max(m, abs(x));
    }
    return m;
}

}  // namespace

TEST_CASE("oriented solution for the example") {
    const auto sys = corpus::hhk_from_matrices();
    const auto v = decide_with(sys);
    REQUIRE(v.kind == VerdictKind::Multiple);
    const auto& cert = v.certificates.front();
    const auto low = solve_oriented_characteristic(cert, v.reduction, 128);
    const auto high = solve_oriented_characteristic(cert, v.reduction, 256);
    REQUIRE(low.mu.size() == 2);
    CHECK(max_abs(low.row_residuals) <= two_pow(-64));
    CHECK(max_abs(high.row_residuals) <= two_pow(-128));
    for (const auto& m : low.mu) {
        CHECK(m.sign() > 0);
    }
    for (const auto& w : low.row_scale) {
        CHECK(w.sign() > 0);
    }
    for (std::size_t i = 0; i < v.reduction.P.rows(); ++i) {
        BigFloat sum(0L, 128);
        for (std::size_t j = 0; j < 2; ++j) {
            sum += BigFloat(v.reduction.P(i, j), 128) * low.mu[j];
        }
        CHECK(sum.sign() > 0);
    }
    const auto a = oriented_characteristic_matrix(cert, v.reduction, 128);
    CHECK(a.size() == 6);
    // Entries with S = 0 vanish exactly.
    CHECK(a[2].is_zero());
    CHECK(a[5].is_zero());
}

TEST_CASE("zero sign matrix keeps the positive point") {
    const auto sys = corpus::univariate(2, 2);
    const auto v = decide_with(sys);
    REQUIRE(v.kind == VerdictKind::Multiple);
    const auto& cert = v.certificates.front();
    CHECK(cert.S == SignMatrix{{0}});
    const auto sol = solve_oriented_characteristic(cert, v.reduction, 128);
    REQUIRE(sol.mu.size() == 1);
    CHECK(sol.mu[0].sign() > 0);
    CHECK(sol.row_residuals[0].is_zero());
}

TEST_CASE("convex weights of two values") {
    const std::vector<BigFloat> values{BigFloat(1L, 128), BigFloat(3L, 128)};
    const auto w = convex_weights(values, BigFloat(Rat(5, 2), 128));
    REQUIRE(w.size() == 2);
    CHECK(w[0].to_rat() == Rat(1, 4));
    CHECK(w[1].to_rat() == Rat(3, 4));
    const std::vector<BigFloat> same{BigFloat(2L, 128), BigFloat(2L, 128), BigFloat(2L, 128)};
    const auto u = convex_weights(same, BigFloat(2L, 128));
    for (const auto& x : u) {
        CHECK(abs(x - BigFloat(1L, 128) / BigFloat(3L, 128)) < two_pow(-120, 128));
    }
}

TEST_CASE("convex weights of several values") {
    const std::vector<BigFloat> values{BigFloat(1L, 128), BigFloat(2L, 128), BigFloat(5L, 128), BigFloat(4L, 128)};
    const BigFloat target(Rat(3, 1), 128);
    const auto w = convex_weights(values, target);
    BigFloat total(0L, 128);
    BigFloat combo(0L, 128);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(w[j].sign() > 0);
        CHECK(w[j] < BigFloat(1L, 128));
        total += w[j];
        combo += w[j] * values[j];
    }
    CHECK(abs(total - BigFloat(1L, 128)) < two_pow(-120, 128));
    CHECK(abs(combo - target) < two_pow(-120, 128));
}

TEST_CASE("singleton lift is the identity") {
    // P equals Pbar in singleton mode, so a forest-inducing Pbar is needed.
    std::size_t lifted = 0;
    for (const auto& sys : corpus::random_forest_systems(20, 31)) {
        const auto v = decide_with(sys, PartitionMode::Singleton);
        if (v.kind != VerdictKind::Multiple) {
            continue;
        }
        ++lifted;
        const auto& cert = v.certificates.front();
        const auto sol = solve_oriented_characteristic(cert, v.reduction, 128);
        const auto lift = lift_simplification(sol.mu, cert, v.reduction, sys.M, 128);
        REQUIRE(lift.mu_bar.size() == sol.mu.size());
        for (std::size_t j = 0; j < sol.mu.size(); ++j) {
            CHECK(lift.mu_bar[j] == sol.mu[j]);
        }
        // rho-bar = M^T delta; representatives carry rho.
        for (std::size_t i = 0; i < cert.rho.size(); ++i) {
            const std::size_t orig = i < v.reduction.s() ? v.reduction.row_rep[i]
                                                         : v.reduction.Pbar.rows() + v.reduction.col_rep[i - v.reduction.s()];
            CHECK(lift.rho_bar[orig] == cert.rho[i]);
        }
    }
    CHECK(lifted > 0);
}

TEST_CASE("witness of the example") {
    const auto sys = corpus::hhk_from_network();
    const auto v = decide_with(sys);
    REQUIRE(v.witness);
    const auto& w = *v.witness;
    CHECK(w.kappa.size() == 6);
    for (const auto& k : w.kappa) {
        CHECK(k.sign() > 0);
    }
    bool differs = false;
    for (std::size_t i = 0; i < 6; ++i) {
        differs = differs || !(w.x[i] == w.y[i]);
    }
    CHECK(differs);
    const auto report = verify_witness(sys, w, two_pow(-64));
    CHECK(report.passed);
    CHECK(report.max_residual() <= two_pow(-64));
    REQUIRE(report.find("separation"));
    CHECK(report.find("separation")->passed);
}

TEST_CASE("univariate witness has equal rate constants") {
    const auto sys = corpus::univariate(2, 2);
    const auto v = decide_with(sys);
    REQUIRE(v.witness);
    const auto& k = v.witness->kappa;
    CHECK(abs(k[0] - k[1]) <= two_pow(-64) * max(k[0], k[1]));
}

TEST_CASE("zero delta coordinates give y = 1") {
    std::size_t seen = 0;
    for (const auto& sys : corpus::random_forest_systems(60, 2024)) {
        const auto v = decide_with(sys);
        if (!v.witness) {
            continue;
        }
        for (std::size_t r = 0; r < v.witness->delta.size(); ++r) {
            if (v.witness->delta[r] == 0) {
                ++seen;
                CHECK(v.witness->y[r] == BigFloat(1L, 128));
                CHECK(v.witness->x[r] == BigFloat(1L, 128));
            }
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("verification rejects perturbed witnesses") {
    const auto sys = corpus::hhk_from_matrices();
    const auto v = decide_with(sys);
    REQUIRE(v.witness);
    auto bent = *v.witness;
    bent.kappa[0] *= BigFloat(Rat(101, 100), 128);
    const auto r1 = verify_witness(sys, bent, two_pow(-64));
    CHECK_FALSE(r1.passed);

    auto flat = *v.witness;
    flat.x = flat.y;
    flat.delta.clear();
    flat.kernel_witness.clear();
    const auto r2 = verify_witness(sys, flat, two_pow(-64));
    CHECK_FALSE(r2.passed);
    REQUIRE(r2.find("separation"));
    CHECK_FALSE(r2.find("separation")->passed);
}

TEST_CASE("construct_witness reports the precision used") {
    const auto sys = corpus::hhk_from_matrices();
    const auto v = decide_with(sys);
    const auto w = construct_witness(v.certificates.front(), v.reduction, sys, 256);
    CHECK(w.precision >= 256);
    CHECK(verify_witness(sys, w, two_pow(-128, 512)).passed);
}
