#include <doctest.h>

#include <random>
#include <set>

#include "multizero/cones.hpp"
#include "multizero/errors.hpp"
#include "multizero/linearize.hpp"
#include "multizero/lp.hpp"
#include "oracles.hpp"

using namespace multizero;

namespace {

ConstraintSystem random_system(std::mt19937& rng, std::size_t vars, std::size_t rows) {
    ConstraintSystem sys(oracle::names("x", vars));
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> rel(0, 2);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Rat> row(vars);
        for (auto& c : row) {
            c = coef(rng);
        }
        sys.add(row, static_cast<Relation>(rel(rng)));
    }
    return sys;
}

}  // namespace

TEST_CASE("simple cones") {
    ConstraintSystem a({"x1", "x2"});
    a.add({Rat(1), Rat(-1)}, Relation::Greater);
    a.add({Rat(0), Rat(1)}, Relation::Greater);
    const auto p = cone_feasible(a);
    REQUIRE(p);
    CHECK(a.satisfied_by(*p));
    CHECK(fourier_motzkin_feasible(a));

    ConstraintSystem b({"x"});
    b.add({Rat(1)}, Relation::Greater);
    b.add({Rat(-1)}, Relation::Greater);
    CHECK_FALSE(cone_feasible(b));
    CHECK_FALSE(fourier_motzkin_feasible(b));

    ConstraintSystem c({"x"});
    c.add({Rat(1)}, Relation::GreaterEqual);
    c.add({Rat(-1)}, Relation::GreaterEqual);
    REQUIRE(cone_feasible(c));
    CHECK(cone_feasible(c)->at(0) == 0);
}

TEST_CASE("eliminating a middle variable") {
    ConstraintSystem sys({"x", "y", "z"});
    sys.add_difference(0, 1, Relation::Greater);
    sys.add_difference(2, 0, Relation::Greater);
    const auto out = fourier_motzkin_eliminate(sys, 0);
    std::size_t nontrivial = 0;
    for (const auto& c : out.constraints()) {
        CHECK(c.coefficients[0] == 0);
        if (c.coefficients[1] != 0 || c.coefficients[2] != 0) {
            ++nontrivial;
            CHECK(c.relation == Relation::Greater);
            CHECK(c.coefficients[1] < 0);
            CHECK(c.coefficients[2] == -c.coefficients[1]);
        }
    }
    CHECK(nontrivial == 1);
}

TEST_CASE("eliminating every variable of a feasible system") {
    ConstraintSystem sys({"x", "y"});
    sys.add({Rat(1), Rat(0)}, Relation::Greater);
    sys.add({Rat(1), Rat(1)}, Relation::GreaterEqual);
    auto cur = sys;
    for (std::size_t v = 0; v < 2; ++v) {
        cur = fourier_motzkin_eliminate(cur, v);
    }
    for (const auto& c : cur.constraints()) {
        for (const auto& x : c.coefficients) {
            CHECK(x == 0);
        }
        CHECK(c.relation != Relation::Greater);
    }
}

TEST_CASE("Fourier-Motzkin row cap") {
    std::mt19937 rng(1);
    ConstraintSystem sys(oracle::names("x", 2));
    for (int r = 0; r < 60; ++r) {
        sys.add({Rat(r % 2 == 0 ? 1 : -1), Rat(r + 1)}, Relation::Greater);
    }
    CHECK_THROWS_AS(fourier_motzkin_eliminate(sys, 0, 100), BlowupLimit);
}

TEST_CASE("cone_feasible cross-checked on random 4-variable systems") {
    std::mt19937 rng(23);
    for (int t = 0; t < 150; ++t) {
        const auto sys = random_system(rng, 4, 1 + t % 8);
        const auto p = cone_feasible(sys);
        CHECK(p.has_value() == fourier_motzkin_feasible(sys));
        if (p) {
            CHECK(sys.satisfied_by(*p));
        }
    }
}

TEST_CASE("exact LP") {
    const RatMatrix a{{1, 1, 0}, {0, 1, 1}};
    const auto y = nonnegative_solution(a, {Rat(2), Rat(3)});
    REQUIRE(y);
    CHECK(a * std::span<const Rat>(*y) == std::vector<Rat>{Rat(2), Rat(3)});
    for (const auto& v : *y) {
        CHECK(v >= 0);
    }
    CHECK_FALSE(nonnegative_solution(RatMatrix{{1, 1}}, {Rat(-1)}));
    const auto before = lp_calls_on_this_thread();
    (void)nonnegative_solution(RatMatrix{{1}}, {Rat(1)});
    CHECK(lp_calls_on_this_thread() == before + 1);
}

TEST_CASE("sign vectors of the example kernel") {
    const RatMatrix l{{1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
    const auto all = realizable_sign_vectors(l, 6);
    const SignVector target{1, -1, -1, -1, 1, -1};
    CHECK(std::find(all.begin(), all.end(), target) != all.end());
    bool saw = false;
    for_each_realizable_sign_vector(l, 6, [&](const SignVector& v, const std::vector<Rat>& z) {
        CHECK((l * std::span<const Rat>(z)) == std::vector<Rat>(2));
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(sign_of(z[i]) == v[i]);
        }
        saw = saw || v == target;
        return true;
    });
    CHECK(saw);
    // z = (3,-1,-1,-1,1,-1) lies in ker L with this sign.
    const std::vector<Rat> z{Rat(3), Rat(-1), Rat(-1), Rat(-1), Rat(1), Rat(-1)};
    CHECK((l * std::span<const Rat>(z)) == std::vector<Rat>(2));
}

TEST_CASE("sign vectors of trivial and full kernels") {
    CHECK(realizable_sign_vectors(RatMatrix::identity(3), 3).empty());
    const auto all = realizable_sign_vectors(RatMatrix(0, 2), 2);
    CHECK(all.size() == 8);
    std::set<SignVector> unique(all.begin(), all.end());
    CHECK(unique.size() == 8);
    CHECK(all.front() == SignVector{1, 1});
}

TEST_CASE("kernel sign oracle on prefixes") {
    KernelSignOracle oracle(RatMatrix{{1, 1}}, 2);
    CHECK(oracle.realizable({1}));
    CHECK(oracle.realizable({1, -1}));
    CHECK_FALSE(oracle.realizable({1, 1}));
    CHECK_FALSE(oracle.realizable({0, 1}));
    const auto w = oracle.witness({-1});
    REQUIRE(w);
    CHECK((*w)[0] < 0);
    CHECK((*w)[0] + (*w)[1] == 0);
}

TEST_CASE("exponential comparisons") {
    const auto c = compare_exp(1, 0, 1, 1);
    CHECK_FALSE(c.constant);
    CHECK(c.factor == 1);
    CHECK(c.evaluate({Rat(2), Rat(1)}) == 1);
    CHECK(compare_exp(1, 0, -1, 1).constant == Sign(1));
    CHECK(compare_exp(0, 0, 1, 1).constant == Sign(-1));
    CHECK(compare_exp(0, 0, 0, 1).constant == Sign(0));
    const auto d = compare_exp(-1, 0, -1, 1);
    CHECK(d.factor == -1);
    CHECK(d.evaluate({Rat(2), Rat(1)}) == -1);
}

TEST_CASE("require_sign adds linear constraints") {
    ConstraintSystem sys({"a", "b"});
    CHECK(require_sign(sys, compare_exp(1, 0, 1, 1), SignSet::of(1)));
    CHECK(sys.satisfied_by({Rat(1), Rat(0)}));
    CHECK_FALSE(sys.satisfied_by({Rat(0), Rat(0)}));

    ConstraintSystem eq({"a", "b"});
    CHECK(require_sign(eq, compare_exp(-1, 0, -1, 1), SignSet::at_most_zero()));
    CHECK(eq.satisfied_by({Rat(1), Rat(1)}));
    CHECK(eq.satisfied_by({Rat(2), Rat(1)}));
    CHECK_FALSE(eq.satisfied_by({Rat(0), Rat(1)}));

    ConstraintSystem bad({"a", "b"});
    CHECK_FALSE(require_sign(bad, compare_exp(1, 0, -1, 1), SignSet::of(-1)));
    SignSet split;
    split.bits = static_cast<std::uint8_t>(SignSet::of(-1).bits | SignSet::of(1).bits);
    CHECK_THROWS_AS(require_sign(bad, compare_exp(1, 0, 1, 1), split), InternalError);
}
