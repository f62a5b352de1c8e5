#include "multizero/engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "multizero/linearize.hpp"
#include "multizero/lp.hpp"

namespace multizero {

VariableLayout::VariableLayout(const Reduction& red, std::size_t n)
    : s_(red.s()), l_(red.l()), n_(n), alpha_slot_(red.l(), no_node) {
    for (std::size_t k = 0; k < l_; ++k) {
        if (!red.in_U1[k]) {
            alpha_slot_[k] = u2_count_++;
        }
    }
}

std::vector<std::string> VariableLayout::names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m(); ++i) {
        out.push_back("rho" + std::to_string(i + 1));
    }
    for (std::size_t r = 0; r < n_; ++r) {
        out.push_back("delta" + std::to_string(r + 1));
    }
    for (std::size_t k = 0; k < l_; ++k) {
        if (has_alpha(k)) {
            out.push_back("a+" + std::to_string(k + 1));
            out.push_back("a-" + std::to_string(k + 1));
        }
    }
    return out;
}

bool FactoredDisjunction::empty() const {
    return std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.empty(); });
}

std::size_t FactoredDisjunction::branch_count() const {
    std::size_t count = 1;
    for (const auto& f : factors) {
        count *= f.size();
    }
    return count;
}

Disjunction FactoredDisjunction::expand() const {
    Disjunction out;
    if (empty()) {
        return out;
    }
    std::vector<std::size_t> choice(factors.size(), 0);
    while (true) {
        Branch b{fixed, {}};
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const auto& alt = factors[f][choice[f]];
            b.system.append(alt.system);
            if (!alt.provenance.empty()) {
                b.provenance += (b.provenance.empty() ? "" : "; ") + alt.provenance;
            }
        }
        out.branches.push_back(std::move(b));
        std::size_t pos = factors.size();
        bool wrapped = true;
        while (pos > 0) {
            --pos;
            if (++choice[pos] < factors[pos].size()) {
                wrapped = false;
                break;
            }
            choice[pos] = 0;
        }
        if (wrapped) {
            return out;
        }
    }
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

std::string set_string(const std::vector<std::size_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ",") + idx(v[i]);
    }
    return out + "}";
}

}  // namespace

std::optional<ConstraintSystem> encode_sign_conditions(const RatMatrix& p, const Orientation& sigma,
                                                       const SignMatrix& s, const VariableLayout& layout) {
    ConstraintSystem out = layout.empty_system();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t k = 0; k < p.cols(); ++k) {
            const Sign sp = sign_of(p(i, k));
            if (sp == 0) {
                if (s(i, k) != 0) {
                    return std::nullopt;
                }
                continue;
            }
            const auto cmp = compare_exp(sigma.first[k], layout.rho(i), sigma.second[k], layout.rho(layout.s() + k));
            const Sign need = static_cast<Sign>(s(i, k) * sp);
            const std::string label = "sign A[" + idx(i) + "," + idx(k) + "] = " + std::to_string(int(s(i, k)));
            if (!require_sign(out, cmp, SignSet::of(need), label)) {
                return std::nullopt;
            }
        }
    }
    return out;
}

namespace {

/// Terms of (M^T delta)_col.
std::vector<std::pair<std::size_t, Rat>> monomial_terms(const IntMatrix& m, std::size_t col,
                                                        const VariableLayout& layout) {
    std::vector<std::pair<std::size_t, Rat>> terms;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, col) != 0) {
            terms.emplace_back(layout.delta(r), Rat(m(r, col)));
        }
    }
    return terms;
}

/// X = v_col, as terms X - v = 0 (or the negation when flip).
std::vector<std::pair<std::size_t, Rat>> difference_terms(std::size_t x, const IntMatrix& m, std::size_t col,
                                                          const VariableLayout& layout, bool flip) {
    std::vector<std::pair<std::size_t, Rat>> terms{{x, Rat(flip ? -1 : 1)}};
    for (auto [var, coef] : monomial_terms(m, col, layout)) {
        terms.emplace_back(var, flip ? coef : Rat(-coef));
    }
    return terms;
}

std::string mtd(std::size_t col) { return "(M^T delta)_" + idx(col); }

/// Relative-interior alternatives for X inside the hull of {v_col : col in cols}.
std::vector<Branch> interval_alternatives(std::size_t x, const std::string& x_name, const std::vector<std::size_t>& cols,
                                          const IntMatrix& m, const VariableLayout& layout) {
    std::vector<Branch> out;
    Branch equal{layout.empty_system(), {}};
    for (auto col : cols) {
        equal.system.add_terms(difference_terms(x, m, col, layout, false), Relation::Equal, x_name + " = " + mtd(col));
    }
    equal.provenance = cols.size() == 1 ? x_name + " = " + mtd(cols[0]) : x_name + " equals every value of its block";
    out.push_back(std::move(equal));
    for (auto c1 : cols) {
        for (auto c2 : cols) {
            if (c1 == c2) {
                continue;
            }
            Branch b{layout.empty_system(), mtd(c1) + " < " + x_name + " < " + mtd(c2)};
            b.system.add_terms(difference_terms(x, m, c1, layout, false), Relation::Greater, mtd(c1) + " < " + x_name);
            b.system.add_terms(difference_terms(x, m, c2, layout, true), Relation::Greater, x_name + " < " + mtd(c2));
            out.push_back(std::move(b));
        }
    }
    return out;
}

void add_factor(FactoredDisjunction& fd, std::vector<Branch> alternatives) {
    if (alternatives.size() == 1) {
        fd.fixed.append(alternatives[0].system);
    } else {
        fd.factors.push_back(std::move(alternatives));
    }
}

}  // namespace

FactoredDisjunction encode_ground_set(const Reduction& red, const IntMatrix& m, const Orientation& sigma,
                                      const VariableLayout& layout) {
    FactoredDisjunction fd{layout.empty_system(), {}};
    const std::size_t s_bar = red.Pbar.rows();
    const auto names = layout.names();
    for (std::size_t k = 0; k < red.s(); ++k) {
        for (auto i : red.tau[k]) {
            fd.fixed.add_terms(difference_terms(layout.rho(k), m, i, layout, false), Relation::Equal,
                               names[layout.rho(k)] + " = " + mtd(i));
        }
    }
    for (std::size_t k = 0; k < red.l(); ++k) {
        const std::size_t x = layout.rho(layout.s() + k);
        if (red.in_U1[k]) {
            std::vector<std::size_t> cols;
            for (auto j : red.alpha[k]) {
                cols.push_back(s_bar + j);
            }
            add_factor(fd, interval_alternatives(x, names[x], cols, m, layout));
            continue;
        }
        std::vector<std::size_t> plus;
        std::vector<std::size_t> minus;
        for (auto j : red.alpha[k]) {
            (red.gamma[j] > 0 ? plus : minus).push_back(s_bar + j);
        }
        const std::size_t ap = layout.alpha_plus(k);
        const std::size_t am = layout.alpha_minus(k);
        add_factor(fd, interval_alternatives(ap, names[ap], plus, m, layout));
        add_factor(fd, interval_alternatives(am, names[am], minus, m, layout));
        std::vector<Branch> chain;
        for (Sign v : {Sign(1), Sign(0), Sign(-1)}) {
            Branch b{layout.empty_system(), "block " + idx(k) + " sign chain " + std::to_string(int(v))};
            const auto set = SignSet::of(v);
            const bool ok = require_sign(b.system, compare_exp(1, ap, 1, am), set, "sign(e^a+ - e^a-)") &&
                            require_sign(b.system, compare_exp(sigma.second[k], x, sigma.first[k], ap), set,
                                         "sign(s2 e^" + names[x] + " - s1 e^a+)") &&
                            require_sign(b.system, compare_exp(sigma.second[k], x, sigma.first[k], am), set,
                                         "sign(s2 e^" + names[x] + " - s1 e^a-)");
            if (ok) {
                chain.push_back(std::move(b));
            }
        }
        if (chain.size() == 1) {
            fd.fixed.append(chain[0].system);
        } else {
            fd.factors.push_back(std::move(chain));
        }
    }
    return fd;
}

void add_delta_sign(ConstraintSystem& sys, const VariableLayout& layout, std::size_t r, Sign value) {
    const std::string name = "delta" + idx(r);
    if (value == 0) {
        sys.add_terms({{layout.delta(r), Rat(1)}}, Relation::Equal, name + " = 0");
    } else {
        sys.add_terms({{layout.delta(r), Rat(value)}}, Relation::Greater, name + (value > 0 ? " > 0" : " < 0"));
    }
}

Disjunction encode_ground_set(const Reduction& red, const IntMatrix& m, const Orientation& sigma,
                              const SignVector& delta_sign, const VariableLayout& layout) {
    Disjunction out = encode_ground_set(red, m, sigma, layout).expand();
    for (auto& b : out.branches) {
        for (std::size_t r = 0; r < delta_sign.size(); ++r) {
            add_delta_sign(b.system, layout, r, delta_sign[r]);
        }
    }
    return out;
}

std::optional<std::vector<Rat>> oriented_positive_point(const RatMatrix& p, const Orientation& sigma) {
    const std::size_t l = p.cols();
    std::vector<std::string> names;
    for (std::size_t j = 0; j < l; ++j) {
        names.push_back("mu" + idx(j));
    }
    ConstraintSystem sys(std::move(names));
    for (std::size_t j = 0; j < l; ++j) {
        sys.add_terms({{j, Rat(1)}}, Relation::Greater);
    }
    for (std::size_t i = 0; i < p.rows(); ++i) {
        std::vector<Rat> row(l);
        for (std::size_t j = 0; j < l; ++j) {
            row[j] = p(i, j) * sigma.first[j];
        }
        sys.add(std::move(row), Relation::Greater);
    }
    return cone_feasible(sys);
}

std::optional<std::vector<Rat>> gamma_intersection(const RatMatrix& p, const Orientation& sigma,
                                                   const LambdaSets& lambda, const std::vector<std::size_t>& rows) {
    const std::size_t l = p.cols();
    std::vector<std::string> names;
    for (std::size_t j = 0; j < l; ++j) {
        names.push_back("mu" + idx(j));
    }
    ConstraintSystem sys(std::move(names));
    for (std::size_t j = 0; j < l; ++j) {
        sys.add_terms({{j, Rat(1)}}, Relation::Greater);
    }
    for (std::size_t i = 0; i < p.rows(); ++i) {
        std::vector<Rat> row(l);
        for (std::size_t j = 0; j < l; ++j) {
            row[j] = p(i, j) * sigma.first[j];
        }
        sys.add(std::move(row), Relation::Greater);
    }
    for (auto i : rows) {
        std::vector<Rat> row(l);
        for (std::size_t j = 0; j < l; ++j) {
            if (!lambda.rows[i].contains(j)) {
                row[j] = p(i, j) * sigma.first[j];
            }
        }
        sys.add(std::move(row), Relation::Greater);
    }
    return cone_feasible(sys);
}

namespace {

struct RowKind {
    bool plus = false;  // may enter I^+
    std::vector<std::size_t> high;  // Lambda^{++} (I^+) or Lambda^{-+} (I^-)
    std::vector<std::size_t> low;   // Lambda^{--} (I^+) or Lambda^{+-} (I^-)
};

Sign ratio(const Orientation& sigma, std::size_t j) { return static_cast<Sign>(sigma.second[j] * sigma.first[j]); }

std::string ratio_term(const Orientation& sigma, std::size_t j, const VariableLayout& layout) {
    const Sign r = ratio(sigma, j);
    const std::string e = "e^rho" + idx(layout.s() + j);
    return r == 0 ? "0" : (r > 0 ? e : "-" + e);
}

ExpComparison pair_comparison(const Orientation& sigma, std::size_t j1, std::size_t j2, const VariableLayout& layout) {
    return compare_exp(ratio(sigma, j1), layout.rho(layout.s() + j1), ratio(sigma, j2), layout.rho(layout.s() + j2));
}

/// Alternatives making row i leave I^{+/-}: some pair with r1 e^{..j1} > r2 e^{..j2}.
std::vector<Branch> violation_alternatives(std::size_t i, const RowKind& kind, const Orientation& sigma,
                                           const VariableLayout& layout) {
    std::vector<Branch> out;
    for (auto j1 : kind.high) {
        for (auto j2 : kind.low) {
            const std::string text = "row " + idx(i) + " outside I" + (kind.plus ? "+" : "-") + ": " +
                                     ratio_term(sigma, j1, layout) + " > " + ratio_term(sigma, j2, layout);
            Branch b{layout.empty_system(), text};
            if (require_sign(b.system, pair_comparison(sigma, j1, j2, layout), SignSet::of(1), text)) {
                out.push_back(std::move(b));
            }
        }
    }
    return out;
}

bool add_membership(ConstraintSystem& sys, std::size_t i, const RowKind& kind, const Orientation& sigma,
                    const VariableLayout& layout) {
    for (auto j1 : kind.high) {
        for (auto j2 : kind.low) {
            const std::string text = "row " + idx(i) + " in I" + (kind.plus ? "+" : "-") + ": " +
                                     ratio_term(sigma, j1, layout) + " <= " + ratio_term(sigma, j2, layout);
            if (!require_sign(sys, pair_comparison(sigma, j1, j2, layout), SignSet::at_most_zero(), text)) {
                return false;
            }
        }
    }
    return true;
}

std::map<std::size_t, RowKind> eligible_rows(const LambdaSets& lambda) {
    std::map<std::size_t, RowKind> out;
    for (std::size_t i = 0; i < lambda.rows.size(); ++i) {
        const auto& row = lambda.rows[i];
        if (row.plus_minus.empty() && row.zero_minus.empty() && !row.plus_plus.empty() && !row.minus_minus.empty()) {
            out[i] = {true, row.plus_plus, row.minus_minus};
        } else if (row.plus_plus.empty() && row.zero_plus.empty() && !row.minus_plus.empty() &&
                   !row.plus_minus.empty()) {
            out[i] = {false, row.minus_plus, row.plus_minus};
        }
    }
    return out;
}

bool satisfies_branch_factors(const FactoredDisjunction& fd, const std::vector<Rat>& point) {
    if (!fd.fixed.satisfied_by(point)) {
        return false;
    }
    return std::all_of(fd.factors.begin(), fd.factors.end(), [&](const std::vector<Branch>& alts) {
        return std::any_of(alts.begin(), alts.end(), [&](const Branch& b) { return b.system.satisfied_by(point); });
    });
}

}  // namespace

bool NotDEncoding::outside_D(const std::vector<Rat>& point) const {
    return std::any_of(cases.begin(), cases.end(), [&](const NotDCase& c) {
        return c.gamma_feasible && satisfies_branch_factors(c.constraints, point);
    });
}

NotDEncoding encode_not_D(const RatMatrix& p, const Orientation& sigma, const SignMatrix&, const LambdaSets& lambda,
                          const VariableLayout& layout, bool prune) {
    NotDEncoding out;
    const auto eligible = eligible_rows(lambda);
    std::vector<std::size_t> rows;
    for (const auto& [i, kind] : eligible) {
        (kind.plus ? out.eligible_plus : out.eligible_minus).push_back(i);
        rows.push_back(i);
    }

    // No active row.
    {
        NotDCase c;
        c.constraints.fixed = layout.empty_system();
        c.provenance = rows.empty() ? "no row can be active" : "I+ and I- empty";
        bool alive = true;
        for (auto i : rows) {
            auto alts = violation_alternatives(i, eligible.at(i), sigma, layout);
            alive = alive && !alts.empty();
            c.constraints.factors.push_back(std::move(alts));
        }
        if (alive) {
            out.cases.push_back(std::move(c));
        }
    }

    std::vector<std::uint64_t> infeasible_masks;
    const std::size_t e = rows.size();
    if (e >= 63) {
        throw BlowupLimit("too many rows eligible for I+/I-");
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << e); ++mask) {
        const bool known_bad = std::any_of(infeasible_masks.begin(), infeasible_masks.end(),
                                           [mask](std::uint64_t bad) { return (bad & mask) == bad; });
        if (known_bad && prune) {
            ++out.pruned;
            continue;
        }
        NotDCase c;
        c.constraints.fixed = layout.empty_system();
        std::vector<std::size_t> active;
        bool alive = true;
        for (std::size_t b = 0; b < e; ++b) {
            const std::size_t i = rows[b];
            const auto& kind = eligible.at(i);
            if (mask >> b & 1u) {
                active.push_back(i);
                (kind.plus ? c.i_plus : c.i_minus).push_back(i);
                alive = alive && add_membership(c.constraints.fixed, i, kind, sigma, layout);
            } else {
                auto alts = violation_alternatives(i, kind, sigma, layout);
                alive = alive && !alts.empty();
                c.constraints.factors.push_back(std::move(alts));
            }
        }
        if (!alive) {
            continue;
        }
        const auto gamma = known_bad ? std::nullopt : gamma_intersection(p, sigma, lambda, active);
        if (!gamma) {
            if (!known_bad) {
                infeasible_masks.push_back(mask);
            }
            if (prune) {
                ++out.pruned;
                continue;
            }
            c.gamma_feasible = false;
        } else {
            c.gamma_witness = *gamma;
        }
        c.provenance = "I+ = " + set_string(c.i_plus) + ", I- = " + set_string(c.i_minus);
        out.cases.push_back(std::move(c));
    }
    return out;
}

std::string describe_D(const RatMatrix& p, const Orientation& sigma, const LambdaSets& lambda,
                       const VariableLayout& layout) {
    const auto eligible = eligible_rows(lambda);
    if (eligible.empty()) {
        return "D is empty: no row can enter I+ or I-";
    }
    std::ostringstream os;
    for (const auto& [i, kind] : eligible) {
        std::string high;
        std::string low;
        for (auto j : kind.high) {
            high += (high.empty() ? "" : ", ") + ratio_term(sigma, j, layout);
        }
        for (auto j : kind.low) {
            low += (low.empty() ? "" : ", ") + ratio_term(sigma, j, layout);
        }
        const bool gamma = gamma_intersection(p, sigma, lambda, {i}).has_value();
        os << "row " << idx(i) << " in I" << (kind.plus ? '+' : '-') << " iff max{" << high << "} <= min{" << low
           << "}; Gamma_" << idx(i) << (gamma ? " nonempty" : " empty") << '\n';
    }
    os << "D = {rho : I+ or I- nonempty and the Gamma sets of its rows have empty intersection}";
    return os.str();
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    orientations += o.orientations;
    orientations_skipped += o.orientations_skipped;
    sign_matrices += o.sign_matrices;
    sign_condition_dead += o.sign_condition_dead;
    branches += o.branches;
    lp_calls += o.lp_calls;
    gamma_pruned += o.gamma_pruned;
    return *this;
}

namespace {

class LpCounter {
public:
    explicit LpCounter(SearchStats& stats) : stats_(stats), start_(lp_calls_on_this_thread()) {}
    ~LpCounter() { stats_.lp_calls += lp_calls_on_this_thread() - start_; }
    LpCounter(const LpCounter&) = delete;
    LpCounter& operator=(const LpCounter&) = delete;

private:
    SearchStats& stats_;
    std::uint64_t start_;
};

}  // namespace

std::optional<Certificate> feasible_ground_set_search(const AugmentedVerticalSystem& sys, const Reduction& red,
                                                      const Orientation& sigma, const SignMatrix& s,
                                                      KernelSignOracle& kernel, const std::vector<Rat>& mu_star,
                                                      SearchStats& stats, const SearchOptions& options) {
    LpCounter counter(stats);
    const VariableLayout layout(red, sys.species_count());
    const auto sign_conditions = encode_sign_conditions(red.P, sigma, s, layout);
    if (!sign_conditions) {
        ++stats.sign_condition_dead;
        return std::nullopt;
    }
    const auto ground = encode_ground_set(red, sys.M, sigma, layout);
    if (ground.empty()) {
        return std::nullopt;
    }
    ConstraintSystem base = *sign_conditions;
    base.append(ground.fixed);
    ++stats.branches;
    const auto base_point = cone_feasible(base);
    if (!base_point) {
        return std::nullopt;
    }
    const auto lambda = lambda_sets(red.P, sigma, s);
    const auto not_d = encode_not_D(red.P, sigma, s, lambda, layout, options.prune_gamma);
    stats.gamma_pruned += not_d.pruned;
    const std::size_t n = layout.n();

    // Feasible extension of `current`, reusing `point` when it already fits.
    const auto extend = [&](const ConstraintSystem& current, const std::vector<Rat>& point) {
        if (current.satisfied_by(point)) {
            return std::optional<std::vector<Rat>>(point);
        }
        ++stats.branches;
        return cone_feasible(current);
    };

    SignVector prefix;
    std::vector<std::string> trace;
    std::optional<Certificate> found;

    const auto make_certificate = [&](const NotDCase& c, const ConstraintSystem& system,
                                      const std::vector<Rat>& point) {
        Certificate cert;
        cert.sigma = sigma;
        cert.S = s;
        cert.point = point;
        cert.rho.assign(point.begin(), point.begin() + static_cast<long>(layout.m()));
        cert.delta.assign(point.begin() + static_cast<long>(layout.m()),
                          point.begin() + static_cast<long>(layout.m() + n));
        cert.delta_sign = prefix;
        cert.alpha_plus.assign(red.l(), Rat(0));
        cert.alpha_minus.assign(red.l(), Rat(0));
        for (std::size_t k = 0; k < red.l(); ++k) {
            if (layout.has_alpha(k)) {
                cert.alpha_plus[k] = point[layout.alpha_plus(k)];
                cert.alpha_minus[k] = point[layout.alpha_minus(k)];
            }
        }
        cert.kernel_witness = *kernel.witness(prefix);
        cert.i_plus = c.i_plus;
        cert.i_minus = c.i_minus;
        cert.base_mu = (c.i_plus.empty() && c.i_minus.empty()) ? mu_star : c.gamma_witness;
        std::string pattern;
        for (auto v : prefix) {
            pattern += (pattern.empty() ? "" : ",") + std::to_string(int(v));
        }
        cert.branch_trace = {"orientation " + to_string(sigma), "S = " + to_string(s), "delta sign (" + pattern + ")"};
        cert.branch_trace.insert(cert.branch_trace.end(), trace.begin(), trace.end());
        cert.system = system;
        found = std::move(cert);
    };

    // Case factors of one not-D case, then the ground set factors.
    std::function<bool(const NotDCase&, const std::vector<const std::vector<Branch>*>&, std::size_t,
                       const ConstraintSystem&, const std::vector<Rat>&)>
        explore = [&](const NotDCase& c, const std::vector<const std::vector<Branch>*>& levels, std::size_t level,
                      const ConstraintSystem& current, const std::vector<Rat>& point) -> bool {
        if (level == levels.size()) {
            if (!c.gamma_feasible) {
                return false;  // sound only with a Gamma witness
            }
            make_certificate(c, current, point);
            return true;
        }
        for (const auto& alt : *levels[level]) {
            ConstraintSystem next = current;
            next.append(alt.system);
            const auto next_point = extend(next, point);
            if (!next_point) {
                continue;
            }
            trace.push_back(alt.provenance);
            if (explore(c, levels, level + 1, next, *next_point)) {
                return true;
            }
            trace.pop_back();
        }
        return false;
    };

    const auto explore_cases = [&](const ConstraintSystem& current, const std::vector<Rat>& point) {
        for (const auto& c : not_d.cases) {
            ConstraintSystem next = current;
            next.append(c.constraints.fixed);
            const auto next_point = extend(next, point);
            if (!next_point) {
                continue;
            }
            std::vector<const std::vector<Branch>*> levels;
            for (const auto& f : c.constraints.factors) {
                levels.push_back(&f);
            }
            for (const auto& f : ground.factors) {
                levels.push_back(&f);
            }
            trace.push_back("not D: " + c.provenance);
            if (explore(c, levels, 0, next, *next_point)) {
                return true;
            }
            trace.pop_back();
        }
        return false;
    };

    // Sign pattern of delta, coordinates in order, branch order (+, -, 0).
    std::function<bool(std::size_t, const ConstraintSystem&, const std::vector<Rat>&)> delta_dfs =
        [&](std::size_t r, const ConstraintSystem& current, const std::vector<Rat>& point) -> bool {
        if (r == n) {
            if (std::all_of(prefix.begin(), prefix.end(), [](Sign v) { return v == 0; })) {
                return false;
            }
            return explore_cases(current, point);
        }
        for (Sign v : {Sign(1), Sign(-1), Sign(0)}) {
            prefix.push_back(v);
            if (kernel.realizable(prefix)) {
                ConstraintSystem next = current;
                add_delta_sign(next, layout, r, v);
                const auto next_point = extend(next, point);
                if (next_point && delta_dfs(r + 1, next, *next_point)) {
                    return true;
                }
            }
            prefix.pop_back();
        }
        return false;
    };

    if (delta_dfs(0, base, *base_point)) {
        return found;
    }
    return std::nullopt;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Precluded:
            return "PRECLUDED";
        case VerdictKind::Multiple:
            return "MULTIPLE";
        case VerdictKind::MultipleNumeric:
            return "MULTIPLE_NUMERIC";
        case VerdictKind::Inconclusive:
            return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

VerdictKind parse_verdict_kind(const std::string& text) {
    for (auto k : {VerdictKind::Precluded, VerdictKind::Multiple, VerdictKind::MultipleNumeric,
                   VerdictKind::Inconclusive}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw Error("unknown verdict '" + text + "'");
}

int exit_code(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Precluded:
            return 0;
        case VerdictKind::Multiple:
            return 10;
        case VerdictKind::MultipleNumeric:
            return 11;
        case VerdictKind::Inconclusive:
            return 20;
    }
    return 20;
}

namespace {

struct OrientationResult {
    std::vector<Certificate> certificates;
    SearchStats stats;
};

}  // namespace

Verdict decide(const AugmentedVerticalSystem& sys, const DecideOptions& options) {
    Verdict verdict;
    const RatMatrix pbar = reduced_matrix(sys);
    verdict.reduction = compute_partitions(pbar, options.mode);
    const Reduction& red = verdict.reduction;
    verdict.pbar_forest = induces_forest(pbar).is_forest;
    verdict.p_forest = induces_forest(red.P).is_forest;

    if (red.negative_row_proportionality) {
        verdict.kind = VerdictKind::Precluded;
        verdict.reason = "two nonzero rows of Pbar are proportional with a negative factor";
        return verdict;
    }
    {
        LpCounter counter(verdict.stats);
        if (!oriented_positive_point(pbar, Orientation::positive(pbar.cols()))) {
            verdict.kind = VerdictKind::Precluded;
            verdict.reason = "no mu > 0 with Pbar mu > 0";
            return verdict;
        }
    }

    const auto orientations = enumerate_orientations(red);
    KernelSignOracle kernel(sys.L, sys.species_count());
    const bool stop_at_first = verdict.p_forest;
    const std::size_t cap = std::max<std::size_t>(1, options.max_certificates);
    SearchOptions search_options;
    search_options.prune_gamma = options.prune_gamma;

    std::vector<OrientationResult> results(orientations.size());
    std::atomic<std::size_t> first_hit{orientations.size()};
    std::atomic<std::size_t> next{0};

    const auto work = [&]() {
        while (true) {
            const std::size_t o = next.fetch_add(1);
            if (o >= orientations.size()) {
                return;
            }
            if (stop_at_first && o > first_hit.load()) {
                continue;
            }
            OrientationResult& res = results[o];
            LpCounter counter(res.stats);
            ++res.stats.orientations;
            const auto& sigma = orientations[o];
            const auto mu_star = oriented_positive_point(red.P, sigma);
            if (!mu_star) {
                ++res.stats.orientations_skipped;
                continue;
            }
            enumerate_sign_matrices(red.P, sigma, [&](const SignMatrix& s) {
                if (stop_at_first && o > first_hit.load()) {
                    return false;
                }
                ++res.stats.sign_matrices;
                auto cert = feasible_ground_set_search(sys, red, sigma, s, kernel, *mu_star, res.stats, search_options);
                if (cert) {
                    cert->orientation_index = o;
                    res.certificates.push_back(std::move(*cert));
                    if (stop_at_first) {
                        std::size_t cur = first_hit.load();
                        while (o < cur && !first_hit.compare_exchange_weak(cur, o)) {
                        }
                        return false;
                    }
                    return res.certificates.size() < cap;
                }
                return true;
            });
        }
    };

    const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, orientations.size()));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    for (auto& res : results) {
        verdict.stats += res.stats;
        for (auto& cert : res.certificates) {
            if (verdict.certificates.size() < (stop_at_first ? 1 : cap)) {
                verdict.certificates.push_back(std::move(cert));
            }
        }
    }

    if (verdict.certificates.empty()) {
        verdict.kind = VerdictKind::Precluded;
        verdict.reason = "every feasible ground set is empty";
        return verdict;
    }

    const long precision = std::max(options.precision, BigFloat::min_precision);
    const BigFloat tolerance = BigFloat::power_of_two(-precision / 2, precision);
    if (verdict.p_forest) {
        verdict.kind = VerdictKind::Multiple;
        verdict.reason = "feasible ground set nonempty and P induces a forest";
        if (options.construct_witness) {
            Witness w = construct_witness(verdict.certificates.front(), red, sys, precision);
            auto report = verify_witness(sys, w, tolerance);
            if (!report.passed) {
                std::string failed;
                for (const auto& check : report.checks) {
                    if (!check.passed) {
                        failed += (failed.empty() ? "" : ", ") + check.name + " = " + check.value.to_string();
                    }
                }
                throw InternalError("witness for a forest certificate failed verification: " + failed);
            }
            verdict.witness = std::move(w);
            verdict.verification = std::move(report);
        }
        return verdict;
    }

    verdict.kind = VerdictKind::Inconclusive;
    verdict.reason = "feasible ground set nonempty but P does not induce a forest";
    if (!options.construct_witness) {
        return verdict;
    }
    for (const auto& cert : verdict.certificates) {
        auto w = numeric_witness(cert, red, sys, precision);
        if (!w) {
            continue;
        }
        auto report = verify_witness(sys, *w, tolerance);
        if (report.passed) {
            verdict.kind = VerdictKind::MultipleNumeric;
            verdict.reason = "numeric solution of the oriented system verified";
            // Put the certificate that produced the witness first.
            const auto it = std::find_if(verdict.certificates.begin(), verdict.certificates.end(),
                                         [&](const Certificate& c) { return &c == &cert; });
            std::rotate(verdict.certificates.begin(), it, it + 1);
            verdict.witness = std::move(*w);
            verdict.verification = std::move(report);
            return verdict;
        }
    }
    return verdict;
}

}  // namespace multizero
