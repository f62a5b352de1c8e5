// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "multizero/engine.hpp"
#include "multizero/witness.hpp"
#include "oracles.hpp"

using namespace multizero;

namespace {

constexpr long residual_exponent = -64;  // criteria 1 and 2
constexpr long shrink_exponent = 32;     // criterion 7
constexpr double example_seconds = 5.0;
constexpr double univariate_seconds = 1.0;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (passed) {
                detail << "failed: ";
            } else {
                detail << "; ";
            }
            detail << what;
            passed = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Rat> rats(std::initializer_list<long> values) {
    std::vector<Rat> out;
    for (long v : values) {
        out.emplace_back(v);
    }
    return out;
}

// Witnesses collected from every suite for criterion 7.
struct ShippedWitness {
    std::string origin;
    AugmentedVerticalSystem sys;
    Witness witness;
};
std::vector<ShippedWitness> shipped;
std::size_t missing_witnesses = 0;

Verdict decide_and_collect(const std::string& origin, const AugmentedVerticalSystem& sys,
                           PartitionMode mode = PartitionMode::Maximal) {
    DecideOptions options;
    options.mode = mode;
    Verdict v = decide(sys, options);
    if (v.kind == VerdictKind::Multiple || v.kind == VerdictKind::MultipleNumeric) {
        if (v.witness) {
            shipped.push_back({origin, sys, *v.witness});
        } else {
            ++missing_witnesses;
        }
    }
    return v;
}

bool conclusive(VerdictKind k) { return k != VerdictKind::Inconclusive; }
bool positive(VerdictKind k) { return k == VerdictKind::Multiple || k == VerdictKind::MultipleNumeric; }

void example_end_to_end(Outcome& out) {
    const std::vector<std::pair<std::string, std::function<AugmentedVerticalSystem()>>> inputs{
        {"network", corpus::hhk_from_network}, {"matrices", corpus::hhk_from_matrices}};
    double slowest = 0.0;
    BigFloat worst(0L, 256);
    for (const auto& [name, load] : inputs) {
        const auto start = std::chrono::steady_clock::now();
        const auto sys = load();
        const Verdict v = decide_and_collect("example/" + name, sys);
        slowest = std::max(slowest, seconds_since(start));
        const Reduction& red = v.reduction;
        out.require(v.kind == VerdictKind::Multiple, name + ": verdict");
        out.require(red.Pbar == RatMatrix{{-1, 1}, {0, 1}, {1, 0}, {-1, 1}}, name + ": Pbar");
        out.require(red.tau == std::vector<std::vector<std::size_t>>{{0, 3}, {1}, {2}}, name + ": tau");
        out.require(red.P == RatMatrix{{-1, 1}, {0, 1}, {1, 0}}, name + ": P");
        const auto orientations = enumerate_orientations(red);
        out.require(orientations.size() == 1 && orientations[0].is_positive(), name + ": orientations");
        if (v.certificates.empty() || !v.witness || !v.verification) {
            out.require(false, name + ": certificate and witness");
            continue;
        }
        const Certificate& cert = v.certificates.front();
        out.require(cert.sigma.is_positive(), name + ": certificate orientation");
        out.require(cert.delta_sign == SignVector{1, -1, -1, -1, 1, -1}, name + ": delta sign");
        const auto lam = lambda_sets(red.P, cert.sigma, cert.S);
        using Index = std::vector<std::size_t>;
        bool lambda_ok = lam.rows[0].plus_plus == Index{1} && lam.rows[0].minus_minus == Index{0} &&
                         lam.rows[1].plus_zero == Index{1} && lam.rows[2].plus_zero == Index{0};
        std::size_t total = 0;
        for (const auto& r : lam.rows) {
            total += r.plus_plus.size() + r.plus_minus.size() + r.zero_plus.size() + r.zero_minus.size() +
                     r.minus_plus.size() + r.minus_minus.size() + r.plus_zero.size();
        }
        out.require(lambda_ok && total == 4, name + ": Lambda-sets");

        // not D <=> rho5 > rho4, sampled over a grid that includes ties.
        const VariableLayout layout(red, sys.species_count());
        const auto enc = encode_not_D(red.P, cert.sigma, cert.S, lam, layout);
        bool not_d_ok = true;
        for (long r4 = -2; r4 <= 2; ++r4) {
            for (long r5 = -2; r5 <= 2; ++r5) {
                for (long r1 = -1; r1 <= 1; ++r1) {
                    std::vector<Rat> p(layout.count());
                    p[layout.rho(0)] = r1;
                    p[layout.rho(3)] = r4;
                    p[layout.rho(4)] = r5;
                    not_d_ok = not_d_ok && enc.outside_D(p) == (r5 > r4);
                }
            }
        }
        out.require(not_d_ok, name + ": not D <=> rho5 > rho4");

        const BigFloat r = v.verification->max_residual();
        worst = max(worst, r);
        out.require(v.witness->precision == 128, name + ": witness precision");
        out.require(v.verification->passed, name + ": verification");
        out.require(r <= BigFloat::power_of_two(residual_exponent, 256), name + ": residual");
    }
    out.require(slowest < example_seconds, "runtime");
    out.detail << (out.passed ? "" : "; ") << "max residual " << worst.to_double() << " (bound 2^" << residual_exponent
               << "), slowest " << slowest << " s (bound " << example_seconds << " s)";
}

void univariate_pair(Outcome& out) {
    for (const auto& [a, b] : {std::pair{1L, 3L}, std::pair{2L, 2L}}) {
        const std::string name = "M=(" + std::to_string(a) + " " + std::to_string(b) + ")";
        const auto start = std::chrono::steady_clock::now();
        const auto sys = corpus::univariate(a, b);
        const Verdict v = decide_and_collect("univariate " + name, sys);
        const double t = seconds_since(start);
        // kappa1 x^a = kappa2 x^b: a != b gives the single root (kappa2/kappa1)^(1/(a-b)),
        // a == b gives a continuum exactly when kappa1 = kappa2.
        const VerdictKind expected = a == b ? VerdictKind::Multiple : VerdictKind::Precluded;
        out.require(v.kind == expected, name + ": verdict " + to_string(v.kind));
        out.require(t < univariate_seconds, name + ": runtime");
        if (a == b && v.witness) {
            const auto& w = *v.witness;
            const long p = 2 * w.precision;
            const BigFloat k1 = w.kappa[0].with_precision(p);
            const BigFloat k2 = w.kappa[1].with_precision(p);
            const BigFloat rel = abs(k1 - k2) / max(k1, k2);
            out.require(rel <= BigFloat::power_of_two(residual_exponent, p), name + ": kappa1 = kappa2");
            for (const auto& pt : {w.x[0], w.y[0]}) {
                const BigFloat x = pt.with_precision(p);
                const BigFloat lhs = k1 * pow(x, a);
                const BigFloat rhs = k2 * pow(x, b);
                out.require(abs(lhs - rhs) <= BigFloat::power_of_two(residual_exponent, p) * max(lhs, rhs),
                            name + ": root check");
            }
            out.require(!(w.x[0] == w.y[0]), name + ": distinct points");
            out.detail << (out.passed ? "" : "; ") << "relative |kappa1-kappa2| = " << rel.to_double() << "; ";
        } else if (a == b) {
            out.require(false, name + ": witness missing");
        }
    }
    out.detail << "bound 2^" << residual_exponent;
}

std::optional<std::vector<Rat>> positive_mu(std::mt19937& rng, const RatMatrix& ps) {
    std::uniform_int_distribution<int> d(1, 6);
    for (int attempt = 0; attempt < 300; ++attempt) {
        std::vector<Rat> mu(ps.cols());
        for (auto& m : mu) {
            m = d(rng);
        }
        const auto v = ps * std::span<const Rat>(mu);
        bool ok = true;
        for (const auto& x : v) {
            ok = ok && x > 0;
        }
        if (ok) {
            return mu;
        }
    }
    return std::nullopt;
}

void feasible_sign_equivalence(Outcome& out) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> rows_d(1, 3);
    std::uniform_int_distribution<int> cols_d(1, 4);
    std::size_t checked = 0;
    std::size_t feasible = 0;
    std::size_t disagree = 0;
    std::size_t bad_q = 0;
    while (checked < 600) {
        const auto p = oracle::random_matrix(rng, rows_d(rng), cols_d(rng), -2, 2);
        const auto sigma = oracle::random_orientation(rng, p.cols());
        const auto mu = positive_mu(rng, oracle::oriented(p, sigma));
        if (!mu) {
            continue;
        }
        const auto s = oracle::random_signs(rng, p.rows(), p.cols());
        const bool lib = is_feasible_sign(p, sigma, s);
        const bool ref = oracle::q_exists(s, *mu);
        ++checked;
        disagree += lib != ref;
        if (ref) {
            ++feasible;
            const auto q = oracle::construct_q(s, *mu);
            const auto qm = q * std::span<const Rat>(*mu);
            bool ok = true;
            for (std::size_t i = 0; i < q.rows(); ++i) {
                ok = ok && qm[i] == 0;
                for (std::size_t j = 0; j < q.cols(); ++j) {
                    ok = ok && sign_of(q(i, j)) == s(i, j);
                }
            }
            bad_q += !ok;
        }
    }
    out.require(disagree == 0, std::to_string(disagree) + " disagreements");
    out.require(bad_q == 0, std::to_string(bad_q) + " bad Q constructions");
    out.detail << (out.passed ? "" : "; ") << checked << " triples, " << feasible << " feasible, agreement "
               << (checked - disagree) << "/" << checked;
}

void cone_solver_equivalence(Outcome& out) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> vars_d(1, 6);
    std::uniform_int_distribution<int> rows_d(1, 10);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> rel(0, 2);
    std::size_t checked = 0, feasible = 0, disagree = 0, unverified = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t vars = static_cast<std::size_t>(vars_d(rng));
        const std::size_t rows = static_cast<std::size_t>(rows_d(rng));
        ConstraintSystem sys(oracle::names("x", vars));
        // Half of the systems are built around a hidden point so both answers occur.
        std::vector<Rat> hidden(vars);
        for (auto& h : hidden) {
            h = coef(rng);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Rat> row(vars);
            for (auto& c : row) {
                c = coef(rng);
            }
            auto relation = static_cast<Relation>(rel(rng));
            if (t % 2 == 1) {
                Rat value = 0;
                for (std::size_t k = 0; k < vars; ++k) {
                    value += row[k] * hidden[k];
                }
                if (value < 0) {
                    for (auto& c : row) {
                        c = -c;
                    }
                } else if (value == 0 && relation == Relation::Greater) {
                    relation = Relation::GreaterEqual;
                }
            }
            sys.add(row, relation);
        }
        const auto point = cone_feasible(sys);
        bool fm = false;
        try {
            fm = fourier_motzkin_feasible(sys);
        } catch (const BlowupLimit&) {
            continue;
        }
        ++checked;
        disagree += point.has_value() != fm;
        if (point) {
            ++feasible;
            unverified += !sys.satisfied_by(*point);
        }
    }
    out.require(checked >= 200, "only " + std::to_string(checked) + " systems");
    out.require(disagree == 0, std::to_string(disagree) + " disagreements");
    out.require(unverified == 0, std::to_string(unverified) + " points failed substitution");
    out.detail << (out.passed ? "" : "; ") << checked << " systems, " << feasible
               << " feasible (all re-verified), agreement " << (checked - disagree) << "/" << checked;
}

void d_membership(Outcome& out) {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> value(-2, 2);
    std::size_t checked = 0, inside = 0, disagree = 0;
    while (checked < 300) {
        const auto p = oracle::random_matrix(rng, dim(rng), dim(rng), -2, 2);
        const auto sigma = oracle::random_orientation(rng, p.cols());
        const auto candidates = all_sign_matrices(p, sigma);
        if (candidates.empty()) {
            continue;
        }
        const SignMatrix& s = candidates[rng() % candidates.size()];
        const auto red = compute_partitions(p, PartitionMode::Singleton);
        const VariableLayout layout(red, 1);
        const auto enc = encode_not_D(p, sigma, s, lambda_sets(p, sigma, s), layout);
        for (int sample = 0; sample < 4; ++sample) {
            std::vector<Rat> rho(p.rows() + p.cols());
            for (auto& r : rho) {
                r = Rat(value(rng), 1 + static_cast<long>(rng() % 2));
            }
            std::vector<Rat> point(layout.count());
            for (std::size_t i = 0; i < rho.size(); ++i) {
                point[layout.rho(i)] = rho[i];
            }
            const bool ref = oracle::in_D(p, sigma, s, rho);
            inside += ref;
            disagree += ref == enc.outside_D(point);
            ++checked;
        }
    }
    out.require(disagree == 0, std::to_string(disagree) + " disagreements");
    out.detail << (out.passed ? "" : "; ") << checked << " samples, " << inside << " inside D, agreement "
               << (checked - disagree) << "/" << checked;
}

void partition_consistency(Outcome& out) {
    std::vector<std::pair<std::string, AugmentedVerticalSystem>> corpus_systems{
        {"example/network", corpus::hhk_from_network()},
        {"example/matrices", corpus::hhk_from_matrices()},
        {"univariate (1 3)", corpus::univariate(1, 3)},
        {"univariate (2 2)", corpus::univariate(2, 2)}};
    std::size_t k = 0;
    for (auto& sys : corpus::random_forest_systems(30, 515)) {
        corpus_systems.emplace_back("random #" + std::to_string(++k), std::move(sys));
    }
    std::size_t contradictions = 0, positives = 0, negatives = 0, non_trivial = 0;
    for (const auto& [name, sys] : corpus_systems) {
        const Verdict a = decide_and_collect(name + " max", sys, PartitionMode::Maximal);
        const Verdict b = decide_and_collect(name + " singleton", sys, PartitionMode::Singleton);
        if (conclusive(a.kind) && conclusive(b.kind) && positive(a.kind) != positive(b.kind)) {
            ++contradictions;
            out.require(false, name + ": " + to_string(a.kind) + " vs " + to_string(b.kind));
        }
        positives += positive(a.kind);
        negatives += a.kind == VerdictKind::Precluded;
        non_trivial += a.reduction.s() < a.reduction.Pbar.rows() || a.reduction.l() < a.reduction.Pbar.cols();
    }
    out.detail << (out.passed ? "" : "; ") << corpus_systems.size() << " systems (" << positives << " multiple, "
               << negatives << " precluded, " << non_trivial << " with nontrivial partitions), " << contradictions
               << " contradictions";
}

void witness_soundness(Outcome& out) {
    std::size_t failed = 0;
    for (const auto& s : shipped) {
        const auto report = verify_witness(s.sys, s.witness, BigFloat::power_of_two(-s.witness.precision / 2, 256));
        if (!report.passed) {
            ++failed;
            out.require(false, s.origin + ": verification");
        }
    }
    out.require(missing_witnesses == 0, std::to_string(missing_witnesses) + " positive verdicts without witness");

    // Residual shrinkage from 128 to 256 bits on every forest corpus system with a certificate.
    std::vector<AugmentedVerticalSystem> systems{corpus::hhk_from_network(), corpus::hhk_from_matrices(),
                                                 corpus::univariate(2, 2)};
    for (auto& sys : corpus::random_forest_systems(30, 515)) {
        systems.push_back(std::move(sys));
    }
    std::size_t compared = 0, weak = 0;
    double worst_log2 = 1e9;
    for (const auto& sys : systems) {
        DecideOptions options;
        options.construct_witness = false;
        const Verdict v = decide(sys, options);
        if (v.kind != VerdictKind::Multiple || v.certificates.empty()) {
            continue;
        }
        const auto& cert = v.certificates.front();
        const Witness lo = construct_witness(cert, v.reduction, sys, 128);
        const Witness hi = construct_witness(cert, v.reduction, sys, 256);
        const BigFloat tol = BigFloat::power_of_two(-64, 512);
        const BigFloat r_lo = verify_witness(sys, lo, tol, 512).max_residual();
        const BigFloat r_hi = verify_witness(sys, hi, tol, 512).max_residual();
        ++compared;
        if (r_hi.is_zero()) {
            continue;
        }
        const double log2_ratio = static_cast<double>(r_lo.exponent() - r_hi.exponent());
        worst_log2 = std::min(worst_log2, log2_ratio);
        if (r_lo.is_zero() || r_lo < r_hi * BigFloat::power_of_two(shrink_exponent, 512)) {
            ++weak;
        }
    }
    out.require(weak == 0, std::to_string(weak) + " systems shrank by less than 2^" + std::to_string(shrink_exponent));
    out.detail << (out.passed ? "" : "; ") << shipped.size() << " witnesses verified, " << failed << " failed; "
               << compared << " systems compared at 128/256 bits, smallest shrink about 2^" << worst_log2
               << " (bound 2^" << shrink_exponent << ")";
}

void forest_detection(Outcome& out) {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> dim(0, 8);
    std::uniform_int_distribution<int> density(1, 6);
    std::size_t checked = 0, forests = 0, disagree = 0;
    for (int t = 0; t < 1500; ++t) {
        const std::size_t rows = static_cast<std::size_t>(dim(rng));
        const std::size_t cols = static_cast<std::size_t>(dim(rng));
        const int dens = density(rng);
        RatMatrix p(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                p(i, j) = static_cast<int>(rng() % 8) < dens ? 1 : 0;
            }
        }
        const bool ref = oracle::support_is_forest(p);
        forests += ref;
        disagree += induces_forest(p).is_forest != ref;
        ++checked;
    }
    out.require(disagree == 0, std::to_string(disagree) + " disagreements");
    out.detail << (out.passed ? "" : "; ") << checked << " patterns, " << forests << " forests, agreement "
               << (checked - disagree) << "/" << checked;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria{
        {"example end-to-end", example_end_to_end},
        {"univariate pair", univariate_pair},
        {"feasible sign equivalence", feasible_sign_equivalence},
        {"cone solver vs Fourier-Motzkin", cone_solver_equivalence},
        {"D membership", d_membership},
        {"partition-mode consistency", partition_consistency},
        {"witness soundness", witness_soundness},
        {"forest detection", forest_detection}};
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome out;
        try {
            criteria[k].second(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        all = all && out.passed;
        std::printf("criterion %zu (%s): %s - %s\n", k + 1, criteria[k].first.c_str(), out.passed ? "PASS" : "FAIL",
                    out.detail.str().c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
