#include "multizero/witness.hpp"

#include <algorithm>

#include "multizero/cones.hpp"
#include "multizero/linalg.hpp"
#include "multizero/linearize.hpp"
#include "multizero/signs.hpp"

namespace multizero {

namespace {

BigFloat constant(long v, long precision) { return BigFloat(v, precision); }

BigFloat margin_threshold(long precision) { return BigFloat::power_of_two(-precision / 2, precision); }

std::vector<BigFloat> exp_of(const std::vector<Rat>& values, long precision) {
    std::vector<BigFloat> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.push_back(exp(BigFloat(v, precision)));
    }
    return out;
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

std::vector<BigFloat> oriented_characteristic_matrix(const Certificate& cert, const Reduction& red, long precision) {
    const std::size_t s = red.s();
    const std::size_t l = red.l();
    const auto e = exp_of(cert.rho, precision);
    std::vector<BigFloat> a(s * l, BigFloat(precision));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t k = 0; k < l; ++k) {
            if (cert.S(i, k) == 0) {
                continue;
            }
            const BigFloat term = constant(cert.sigma.first[k], precision) * e[i] -
                                  constant(cert.sigma.second[k], precision) * e[s + k];
            a[i * l + k] = BigFloat(red.P(i, k), precision) * term;
        }
    }
    return a;
}

OrientedSolution solve_oriented_characteristic(const Certificate& cert, const Reduction& red, long precision) {
    const auto forest = induces_forest(red.P);
    if (!forest.is_forest) {
        throw NotForest("the simplified reduced matrix does not induce a forest");
    }
    const std::size_t s = red.s();
    const std::size_t l = red.l();
    const auto& sigma = cert.sigma;
    const auto lambda = lambda_sets(red.P, sigma, cert.S);
    const auto e = exp_of(cert.rho, precision);
    const auto a = oriented_characteristic_matrix(cert, red, precision);
    const BigFloat eps = margin_threshold(precision);

    std::vector<Rat> mu_bar = cert.base_mu;
    if (mu_bar.size() != l) {
        throw InternalError("base point has the wrong length");
    }
    std::vector<BigFloat> mu_bar_f;
    for (const auto& v : mu_bar) {
        mu_bar_f.emplace_back(v, precision);
    }
    RatMatrix p_sigma(s, l);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            p_sigma(i, j) = red.P(i, j) * sigma.first[j];
        }
    }

    OrientedSolution sol;
    sol.Q_tilde = RatMatrix(s, l);
    sol.Q.assign(s * l, BigFloat(precision));
    sol.row_scale.assign(s, constant(1, precision));
    sol.pairs.assign(s, std::nullopt);

    const auto in_t = [&](std::size_t i) {
        return std::find(cert.i_plus.begin(), cert.i_plus.end(), i) != cert.i_plus.end() ||
               std::find(cert.i_minus.begin(), cert.i_minus.end(), i) != cert.i_minus.end();
    };

    for (std::size_t i = 0; i < s; ++i) {
        const auto& row = lambda.rows[i];
        std::size_t pos_count = 0;
        std::size_t neg_count = 0;
        for (std::size_t j = 0; j < l; ++j) {
            pos_count += cert.S(i, j) > 0;
            neg_count += cert.S(i, j) < 0;
        }
        for (std::size_t j = 0; j < l; ++j) {
            if (cert.S(i, j) > 0) {
                sol.Q_tilde(i, j) = Rat(1) / (Rat(static_cast<long>(pos_count)) * mu_bar[j]);
            } else if (cert.S(i, j) < 0) {
                sol.Q_tilde(i, j) = Rat(-1) / (Rat(static_cast<long>(neg_count)) * mu_bar[j]);
            }
        }

        // d_ij = e^{rho_i} - r_j e^{rho_{s+j}}, A_ij = P^sigma_ij d_ij on Lambda^{!=}.
        std::vector<std::optional<BigFloat>> d(l);
        BigFloat x(precision);
        BigFloat y(precision);
        for (std::size_t j = 0; j < l; ++j) {
            const bool in_nonzero = cert.S(i, j) != 0 && p_sigma(i, j) != 0;
            if (in_nonzero) {
                const Sign r = static_cast<Sign>(sigma.second[j] * sigma.first[j]);
                BigFloat dij = e[i] - constant(r, precision) * e[s + j];
                if (dij.sign() != cert.S(i, j) * sign_of(p_sigma(i, j))) {
                    throw PrecisionExhausted("sign of A[" + idx(i) + "," + idx(j) + "] not resolved");
                }
                x += BigFloat(Rat(sol.Q_tilde(i, j) * mu_bar[j]), precision) / dij;
                d[j] = std::move(dij);
            }
            if (cert.S(i, j) == 0) {
                y += BigFloat(Rat(p_sigma(i, j) * mu_bar[j]), precision);
            }
        }

        const bool small = in_t(i) || (row.plus_plus.empty() && row.plus_minus.empty());
        BigFloat omega = constant(1, precision);
        for (std::size_t j = 0; j < l; ++j) {
            sol.Q[i * l + j] = BigFloat(sol.Q_tilde(i, j), precision);
        }
        if (small) {
            if (y.sign() <= 0 && !row.all().empty()) {
                throw InternalError("row " + idx(i) + " has no positive slack");
            }
            if (x.sign() < 0) {
                omega = y / (constant(2, precision) * abs(x));
            }
            for (std::size_t j = 0; j < l; ++j) {
                sol.Q[i * l + j] *= omega;
            }
            sol.row_scale[i] = omega;
            sol.trace.push_back("row " + idx(i) + ": scaled, omega = " + omega.to_string());
            continue;
        }

        // First pair (j1, j2), S_ij1 > 0 > S_ij2, with theta > 0.
        std::optional<std::pair<std::size_t, std::size_t>> pair;
        for (std::size_t j1 = 0; j1 < l && !pair; ++j1) {
            if (cert.S(i, j1) <= 0) {
                continue;
            }
            for (std::size_t j2 = 0; j2 < l && !pair; ++j2) {
                if (cert.S(i, j2) >= 0) {
                    continue;
                }
                const Sign a1 = sign_of(p_sigma(i, j1));
                const Sign a2 = sign_of(p_sigma(i, j2));
                bool good = false;
                if (a1 >= 0 && a2 >= 0) {
                    good = a1 + a2 > 0;
                } else if (a1 != 0 && a2 != 0 && a1 == -a2) {
                    const Sign r1 = static_cast<Sign>(sigma.second[j1] * sigma.first[j1]);
                    const Sign r2 = static_cast<Sign>(sigma.second[j2] * sigma.first[j2]);
                    good = compare_exp(r1, s + j1, r2, s + j2).evaluate(cert.rho) > 0;
                }
                if (good) {
                    pair = std::make_pair(j1, j2);
                }
            }
        }
        if (!pair) {
            throw InternalError("row " + idx(i) + " has no admissible pair");
        }
        const auto [j1, j2] = *pair;
        BigFloat theta(precision);
        if (d[j1]) {
            theta += mu_bar_f[j1] / *d[j1];
        }
        if (d[j2]) {
            theta -= mu_bar_f[j1] / *d[j2];
        }
        if (theta.sign() <= 0) {
            throw PrecisionExhausted("pair coefficient of row " + idx(i) + " not resolved");
        }
        const BigFloat f = x + y;
        const BigFloat one = constant(1, precision);
        omega = f < one ? (one - f) / theta : one / theta;
        sol.Q[i * l + j1] += omega;
        sol.Q[i * l + j2] -= mu_bar_f[j1] / mu_bar_f[j2] * omega;
        sol.row_scale[i] = omega;
        sol.pairs[i] = pair;
        sol.trace.push_back("row " + idx(i) + ": pair (" + idx(j1) + "," + idx(j2) + "), omega = " + omega.to_string());
    }

    // Propagate along the spanning trees; (Q/A) is taken as 1 where both vanish.
    const auto ratio = [&](std::size_t i, std::size_t j) {
        const BigFloat& q = sol.Q[i * l + j];
        const BigFloat& aij = a[i * l + j];
        if (q.is_zero() && aij.is_zero()) {
            return constant(1, precision);
        }
        if (q.is_zero() || aij.is_zero() || q.sign() != aij.sign()) {
            throw PrecisionExhausted("entry (" + idx(i) + "," + idx(j) + ") of Q and A disagree in sign");
        }
        return q / aij;
    };
    sol.path_weight.assign(s, constant(1, precision));
    sol.mu.assign(l, BigFloat(precision));
    for (const auto& comp : forest.components) {
        for (const auto& node : comp.order) {
            if (node.side == GraphNode::Side::Column) {
                const std::size_t j = node.index;
                const std::size_t parent = forest.column_parent[j];
                if (parent == no_node) {
                    sol.mu[j] = mu_bar_f[j];
                } else {
                    sol.mu[j] = sol.path_weight[parent] * ratio(parent, j) * mu_bar_f[j];
                }
            } else {
                const std::size_t i = node.index;
                const std::size_t parent = forest.row_parent[i];
                if (parent != no_node) {
                    const std::size_t grand = forest.column_parent[parent];
                    sol.path_weight[i] = sol.path_weight[grand] * ratio(grand, parent) / ratio(i, parent);
                }
            }
        }
    }

    for (std::size_t j = 0; j < l; ++j) {
        if (sol.mu[j].sign() <= 0) {
            throw PrecisionExhausted("mu_" + idx(j) + " is not positive");
        }
    }
    sol.row_residuals.assign(s, BigFloat(precision));
    for (std::size_t i = 0; i < s; ++i) {
        BigFloat pm(precision);
        BigFloat scale(precision);
        for (std::size_t j = 0; j < l; ++j) {
            const BigFloat t = BigFloat(p_sigma(i, j), precision) * sol.mu[j];
            pm += t;
            scale += abs(t);
            sol.row_residuals[i] += a[i * l + j] * sol.mu[j];
        }
        if (pm.sign() <= 0 || pm < eps * scale) {
            throw PrecisionExhausted("row " + idx(i) + " of P^sigma mu is not safely positive");
        }
    }
    return sol;
}

std::vector<BigFloat> convex_weights(const std::vector<BigFloat>& values, const BigFloat& target) {
    if (values.empty()) {
        throw InternalError("convex weights of an empty set");
    }
    const long precision = target.precision();
    const std::size_t n = values.size();
    const BigFloat uniform = constant(1, precision) / constant(static_cast<long>(n), precision);
    const bool all_equal =
        std::all_of(values.begin(), values.end(), [&](const BigFloat& v) { return v == values.front(); });
    if (all_equal) {
        return std::vector<BigFloat>(n, uniform);
    }
    BigFloat mean(precision);
    for (const auto& v : values) {
        mean += v;
    }
    mean *= uniform;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end(),
                                              [](const BigFloat& a, const BigFloat& b) { return a < b; });
    std::size_t target_index = 0;
    BigFloat t(precision);
    if (target >= mean) {
        target_index = static_cast<std::size_t>(hi - values.begin());
        t = (*hi - target) / (*hi - mean);
    } else {
        target_index = static_cast<std::size_t>(lo - values.begin());
        t = (target - *lo) / (mean - *lo);
    }
    if (t.sign() <= 0) {
        throw PrecisionExhausted("target is not inside the convex hull");
    }
    std::vector<BigFloat> w(n, t * uniform);
    w[target_index] += constant(1, precision) - t;
    return w;
}

Lift lift_simplification(const std::vector<BigFloat>& mu, const Certificate& cert, const Reduction& red,
                         const IntMatrix& m, long precision) {
    const std::size_t s = red.s();
    const std::size_t s_bar = red.Pbar.rows();
    const std::size_t l_bar = red.Pbar.cols();
    Lift lift;
    lift.rho_bar.assign(m.cols(), Rat(0));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            lift.rho_bar[c] += Rat(m(r, c)) * cert.delta[r];
        }
    }
    lift.mu_bar.assign(l_bar, BigFloat(precision));
    lift.beta.assign(l_bar, BigFloat(precision));
    lift.omega_plus.assign(red.l(), BigFloat(precision));
    lift.omega_minus.assign(red.l(), BigFloat(precision));

    const auto weights_for = [&](const std::vector<std::size_t>& cols, const BigFloat& target) {
        std::vector<BigFloat> values;
        for (auto j : cols) {
            values.push_back(exp(BigFloat(lift.rho_bar[s_bar + j], precision)));
        }
        const auto w = convex_weights(values, target);
        for (std::size_t t = 0; t < cols.size(); ++t) {
            lift.beta[cols[t]] = w[t];
        }
    };

    for (std::size_t k = 0; k < red.l(); ++k) {
        const BigFloat e_k = exp(BigFloat(cert.rho[s + k], precision));
        if (red.in_U1[k]) {
            weights_for(red.alpha[k], e_k);
            lift.omega_plus[k] = constant(1, precision);
            lift.omega_minus[k] = BigFloat(precision);
        } else {
            std::vector<std::size_t> plus;
            std::vector<std::size_t> minus;
            for (auto j : red.alpha[k]) {
                (red.gamma[j] > 0 ? plus : minus).push_back(j);
            }
            const BigFloat ep = exp(BigFloat(cert.alpha_plus[k], precision));
            const BigFloat em = exp(BigFloat(cert.alpha_minus[k], precision));
            weights_for(plus, ep);
            weights_for(minus, em);
            const BigFloat s1 = constant(cert.sigma.first[k], precision);
            const BigFloat s2 = constant(cert.sigma.second[k], precision);
            if (cert.alpha_plus[k] != cert.alpha_minus[k]) {
                const BigFloat gap = ep - em;
                lift.omega_plus[k] = (s2 * e_k - s1 * em) / gap;
                lift.omega_minus[k] = (s2 * e_k - s1 * ep) / gap;
            } else if (cert.sigma.first[k] > 0) {
                lift.omega_plus[k] = constant(2, precision) * s1;
                lift.omega_minus[k] = s1;
            } else if (cert.sigma.first[k] < 0) {
                lift.omega_plus[k] = -s1;
                lift.omega_minus[k] = constant(-2, precision) * s1;
            } else {
                lift.omega_plus[k] = constant(1, precision);
                lift.omega_minus[k] = constant(1, precision);
            }
            if (lift.omega_plus[k].sign() <= 0 || lift.omega_minus[k].sign() <= 0) {
                throw PrecisionExhausted("block " + idx(k) + " split weights are not positive");
            }
        }
        for (auto j : red.alpha[k]) {
            const BigFloat base = lift.beta[j] * mu[k] / BigFloat(red.gamma[j], precision);
            lift.mu_bar[j] = red.gamma[j] > 0 ? lift.omega_plus[k] * base : -(lift.omega_minus[k] * base);
        }
    }
    return lift;
}

Witness build_witness(const Lift& lift, const Certificate& cert, const AugmentedVerticalSystem& sys, long precision) {
    const std::size_t n = sys.species_count();
    const std::size_t m_bar = sys.monomial_count();
    const auto& pbar_basis = kernel_basis_principal(sys.C);

    std::vector<BigFloat> beta(m_bar, BigFloat(precision));
    for (std::size_t r = 0; r < m_bar; ++r) {
        for (std::size_t j = 0; j < lift.mu_bar.size(); ++j) {
            if (pbar_basis(r, j) != 0) {
                beta[r] += BigFloat(pbar_basis(r, j), precision) * lift.mu_bar[j];
            }
        }
        if (beta[r].sign() <= 0) {
            throw PrecisionExhausted("monomial weight " + idx(r) + " is not positive");
        }
    }

    Witness w;
    w.precision = precision;
    w.delta = cert.delta;
    w.kernel_witness = cert.kernel_witness;
    w.y.assign(n, BigFloat(precision));
    w.x.assign(n, BigFloat(precision));
    for (std::size_t i = 0; i < n; ++i) {
        const BigFloat e = exp(BigFloat(cert.delta[i], precision));
        if (cert.delta[i] == 0) {
            w.y[i] = constant(1, precision);
        } else {
            w.y[i] = BigFloat(cert.kernel_witness[i], precision) / (e - constant(1, precision));
        }
        if (w.y[i].sign() <= 0) {
            throw InternalError("kernel witness sign disagrees with delta");
        }
        w.x[i] = e * w.y[i];
    }
    w.kappa.assign(m_bar, BigFloat(precision));
    for (std::size_t c = 0; c < m_bar; ++c) {
        BigFloat mono = constant(1, precision);
        for (std::size_t r = 0; r < n; ++r) {
            if (sys.M(r, c) != 0) {
                mono *= pow(w.y[r], sys.M(r, c));
            }
        }
        w.kappa[sys.column_permutation[c]] = beta[c] / mono;
    }
    w.b.assign(sys.L.rows(), BigFloat(precision));
    for (std::size_t r = 0; r < sys.L.rows(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            if (sys.L(r, i) != 0) {
                w.b[r] += BigFloat(sys.L(r, i), precision) * w.y[i];
            }
        }
    }
    return w;
}

BigFloat VerificationReport::max_residual() const {
    BigFloat out(precision > 0 ? precision : default_precision);
    for (const auto& c : checks) {
        if (c.name.rfind("residual", 0) == 0 && c.value > out) {
            out = c.value;
        }
    }
    return out;
}

const VerificationCheck* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

/// max_i |res_i| and max_i scale_i for C (kappa o v^M).
std::pair<BigFloat, BigFloat> mass_action_residual(const RatMatrix& c, const IntMatrix& m,
                                                   const std::vector<BigFloat>& kappa, const std::vector<BigFloat>& v,
                                                   long precision) {
    std::vector<BigFloat> rates;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        BigFloat r = kappa[col].with_precision(precision);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, col) != 0) {
                r *= pow(v[i].with_precision(precision), m(i, col));
            }
        }
        rates.push_back(std::move(r));
    }
    BigFloat worst(precision);
    BigFloat scale(precision);
    for (std::size_t i = 0; i < c.rows(); ++i) {
        BigFloat res(precision);
        BigFloat mag(precision);
        for (std::size_t col = 0; col < c.cols(); ++col) {
            if (c(i, col) != 0) {
                const BigFloat t = BigFloat(c(i, col), precision) * rates[col];
                res += t;
                mag += abs(t);
            }
        }
        worst = max(worst, abs(res));
        scale = max(scale, mag);
    }
    return {worst, scale};
}

std::pair<BigFloat, BigFloat> conservation_residual(const RatMatrix& l, const std::vector<BigFloat>& v,
                                                    const std::vector<BigFloat>& b, long precision) {
    BigFloat worst(precision);
    BigFloat scale(precision);
    for (std::size_t r = 0; r < l.rows(); ++r) {
        BigFloat res = -b[r].with_precision(precision);
        BigFloat mag = abs(res);
        for (std::size_t i = 0; i < l.cols(); ++i) {
            if (l(r, i) != 0) {
                const BigFloat t = BigFloat(l(r, i), precision) * v[i].with_precision(precision);
                res += t;
                mag += abs(t);
            }
        }
        worst = max(worst, abs(res));
        scale = max(scale, mag);
    }
    return {worst, scale};
}

}  // namespace

VerificationReport verify_witness(const AugmentedVerticalSystem& sys, const Witness& w, const BigFloat& tolerance,
                                  long precision) {
    const long prec = precision > 0 ? precision : 2 * w.precision;
    const std::size_t n = sys.species_count();
    if (w.x.size() != n || w.y.size() != n || w.kappa.size() != sys.monomial_count() || w.b.size() != sys.L.rows()) {
        throw DimensionMismatch("witness dimensions do not match the system");
    }
    VerificationReport report;
    report.precision = prec;
    report.tolerance = tolerance.with_precision(prec);
    const BigFloat& tol = report.tolerance;
    const BigFloat one = constant(1, prec);
    const RatMatrix c = sys.original_C();
    const IntMatrix m = sys.original_M();

    const auto add_residual = [&](const std::string& name, const std::pair<BigFloat, BigFloat>& r) {
        const BigFloat bound = tol * (one + r.second);
        report.checks.push_back({name, r.first, bound, r.first <= bound});
    };
    add_residual("residual C(kappa x^M)", mass_action_residual(c, m, w.kappa, w.x, prec));
    add_residual("residual C(kappa y^M)", mass_action_residual(c, m, w.kappa, w.y, prec));
    add_residual("residual Lx-b", conservation_residual(sys.L, w.x, w.b, prec));
    add_residual("residual Ly-b", conservation_residual(sys.L, w.y, w.b, prec));

    std::optional<BigFloat> smallest;
    for (const auto* vec : {&w.kappa, &w.x, &w.y}) {
        for (const auto& v : *vec) {
            if (!smallest || v < *smallest) {
                smallest = v.with_precision(prec);
            }
        }
    }
    const BigFloat min_value = smallest ? *smallest : BigFloat(prec);
    report.checks.push_back({"positivity", min_value, BigFloat(prec), min_value.sign() > 0});

    BigFloat separation(prec);
    for (std::size_t i = 0; i < n; ++i) {
        const BigFloat xi = w.x[i].with_precision(prec);
        const BigFloat yi = w.y[i].with_precision(prec);
        const BigFloat denom = max(xi, yi);
        if (denom.sign() > 0) {
            separation = max(separation, abs(xi - yi) / denom);
        }
    }
    report.checks.push_back({"separation", separation, tol, separation >= tol});

    if (w.delta.size() == n) {
        BigFloat worst(prec);
        for (std::size_t i = 0; i < n; ++i) {
            const BigFloat xi = w.x[i].with_precision(prec);
            const BigFloat target = exp(BigFloat(w.delta[i], prec)) * w.y[i].with_precision(prec);
            worst = max(worst, abs(xi - target) / (one + abs(target)));
        }
        report.checks.push_back({"x = e^delta y", worst, tol, worst <= tol});
    }
    if (w.kernel_witness.size() == n) {
        BigFloat worst(prec);
        for (std::size_t i = 0; i < n; ++i) {
            const BigFloat z(w.kernel_witness[i], prec);
            const BigFloat diff = w.x[i].with_precision(prec) - w.y[i].with_precision(prec) - z;
            worst = max(worst, abs(diff) / (one + abs(z)));
        }
        report.checks.push_back({"x - y = z", worst, tol, worst <= tol});
    }
    report.passed = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.passed; });
    return report;
}

BigFloat default_tolerance() { return BigFloat::power_of_two(default_tolerance_exponent, default_precision); }

Witness construct_witness(const Certificate& cert, const Reduction& red, const AugmentedVerticalSystem& sys,
                          long precision) {
    long p = std::max(precision, BigFloat::min_precision);
    constexpr int attempts = 4;
    for (int attempt = 0;; ++attempt) {
        try {
            const auto sol = solve_oriented_characteristic(cert, red, p);
            const auto lift = lift_simplification(sol.mu, cert, red, sys.M, p);
            return build_witness(lift, cert, sys, p);
        } catch (const PrecisionExhausted&) {
            if (attempt + 1 >= attempts) {
                throw;
            }
            p *= 2;
        }
    }
}

std::optional<Witness> numeric_witness(const Certificate& cert, const Reduction& red,
                                       const AugmentedVerticalSystem& sys, long precision) {
    const long p = std::max(precision, BigFloat::min_precision);
    const std::size_t s = red.s();
    const std::size_t l = red.l();
    try {
        const auto a = oriented_characteristic_matrix(cert, red, p);
        std::vector<std::string> names;
        for (std::size_t j = 0; j < l; ++j) {
            names.push_back("mu" + idx(j));
        }
        ConstraintSystem lp(std::move(names));
        for (std::size_t j = 0; j < l; ++j) {
            lp.add_terms({{j, Rat(1)}}, Relation::Greater);
        }
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<Rat> eq(l);
            std::vector<Rat> pos(l);
            for (std::size_t j = 0; j < l; ++j) {
                eq[j] = a[i * l + j].to_rat();
                pos[j] = red.P(i, j) * cert.sigma.first[j];
            }
            lp.add(std::move(eq), Relation::Equal);
            lp.add(std::move(pos), Relation::Greater);
        }
        const auto point = cone_feasible(lp);
        if (!point) {
            return std::nullopt;
        }
        std::vector<BigFloat> mu;
        for (const auto& v : *point) {
            mu.emplace_back(v, p);
        }
        const auto lift = lift_simplification(mu, cert, red, sys.M, p);
        return build_witness(lift, cert, sys, p);
    } catch (const PrecisionExhausted&) {
        return std::nullopt;
    } catch (const BlowupLimit&) {
        return std::nullopt;
    }
}

}  // namespace multizero
