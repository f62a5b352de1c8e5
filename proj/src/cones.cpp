#include "multizero/cones.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "multizero/lp.hpp"

namespace multizero {

std::size_t ConstraintSystem::add_variable(std::string name) {
    variables_.push_back(std::move(name));
    for (auto& c : constraints_) {
        c.coefficients.emplace_back(0);
    }
    return variables_.size() - 1;
}

std::optional<std::size_t> ConstraintSystem::find_variable(const std::string& name) const {
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - variables_.begin());
}

void ConstraintSystem::add(std::vector<Rat> coefficients, Relation relation, std::string label) {
    if (coefficients.size() != variables_.size()) {
        throw DimensionMismatch("constraint length differs from variable count");
    }
    constraints_.push_back({std::move(coefficients), relation, std::move(label)});
}

void ConstraintSystem::add_terms(const std::vector<std::pair<std::size_t, Rat>>& terms, Relation relation,
                                 std::string label) {
    std::vector<Rat> row(variables_.size());
    for (const auto& [var, coef] : terms) {
        row.at(var) += coef;
    }
    add(std::move(row), relation, std::move(label));
}

void ConstraintSystem::add_difference(std::size_t a, std::size_t b, Relation relation, std::string label) {
    add_terms({{a, Rat(1)}, {b, Rat(-1)}}, relation, std::move(label));
}

void ConstraintSystem::append(const ConstraintSystem& other) {
    if (other.variables_.size() > variables_.size() ||
        !std::equal(other.variables_.begin(), other.variables_.end(), variables_.begin())) {
        throw DimensionMismatch("appended system uses unknown variables");
    }
    for (const auto& c : other.constraints_) {
        auto row = c.coefficients;
        row.resize(variables_.size());
        constraints_.push_back({std::move(row), c.relation, c.label});
    }
}

std::size_t ConstraintSystem::strict_count() const {
    return static_cast<std::size_t>(std::count_if(constraints_.begin(), constraints_.end(),
                                                  [](const Constraint& c) { return c.relation == Relation::Greater; }));
}

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& x) {
    Rat sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) {
            sum += a[i] * x[i];
        }
    }
    return sum;
}

bool holds(const Rat& value, Relation relation) {
    switch (relation) {
        case Relation::Equal:
            return value == 0;
        case Relation::Greater:
            return value > 0;
        case Relation::GreaterEqual:
            return value >= 0;
    }
    return false;
}

const char* symbol(Relation relation) {
    switch (relation) {
        case Relation::Equal:
            return "=";
        case Relation::Greater:
            return ">";
        case Relation::GreaterEqual:
            return ">=";
    }
    return "?";
}

}  // namespace

bool ConstraintSystem::satisfied_by(const std::vector<Rat>& point) const {
    if (point.size() != variables_.size()) {
        return false;
    }
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const Constraint& c) { return holds(dot(c.coefficients, point), c.relation); });
}

std::string ConstraintSystem::describe(const Constraint& c) const {
    // Positive terms on the left, negated negative terms on the right.
    std::ostringstream lhs;
    std::ostringstream rhs;
    const auto put = [this](std::ostringstream& os, const Rat& coef, std::size_t var) {
        if (os.tellp() > 0) {
            os << " + ";
        }
        if (coef != 1) {
            os << to_string(coef) << '*';
        }
        os << variables_[var];
    };
    for (std::size_t v = 0; v < c.coefficients.size(); ++v) {
        if (c.coefficients[v] > 0) {
            put(lhs, c.coefficients[v], v);
        } else if (c.coefficients[v] < 0) {
            put(rhs, Rat(-c.coefficients[v]), v);
        }
    }
    std::string l = lhs.str();
    std::string r = rhs.str();
    return (l.empty() ? "0" : l) + ' ' + symbol(c.relation) + ' ' + (r.empty() ? "0" : r);
}

std::optional<std::vector<Rat>> cone_feasible(const ConstraintSystem& sys) {
    const std::size_t n = sys.variable_count();
    if (sys.strict_count() == 0) {
        // Homogeneous with no strict rows: the origin works.
        return std::vector<Rat>(n);
    }
    // x = x+ - x-; strict rows a.x - s = 1 (cone scaling), nonstrict a.x - s = 0.
    const auto& rows = sys.constraints();
    std::size_t slacks = 0;
    for (const auto& c : rows) {
        if (c.relation != Relation::Equal) {
            ++slacks;
        }
    }
    RatMatrix a(rows.size(), 2 * n + slacks);
    std::vector<Rat> b(rows.size());
    std::size_t slack = 2 * n;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t v = 0; v < n; ++v) {
            a(i, v) = rows[i].coefficients[v];
            a(i, n + v) = -rows[i].coefficients[v];
        }
        if (rows[i].relation != Relation::Equal) {
            a(i, slack++) = -1;
        }
        if (rows[i].relation == Relation::Greater) {
            b[i] = 1;
        }
    }
    const auto y = nonnegative_solution(a, b);
    if (!y) {
        return std::nullopt;
    }
    std::vector<Rat> x(n);
    for (std::size_t v = 0; v < n; ++v) {
        x[v] = (*y)[v] - (*y)[n + v];
    }
    if (!sys.satisfied_by(x)) {
        throw InternalError("LP point fails exact re-substitution");
    }
    return x;
}

namespace {

/// Scales a row so its first nonzero coefficient has absolute value 1.
void normalize(Constraint& c) {
    for (const auto& v : c.coefficients) {
        if (v != 0) {
            const Rat scale = abs(v);
            for (auto& w : c.coefficients) {
                w /= scale;
            }
            return;
        }
    }
}

bool is_zero_row(const Constraint& c) {
    return std::all_of(c.coefficients.begin(), c.coefficients.end(), [](const Rat& v) { return v == 0; });
}

}  // namespace

ConstraintSystem fourier_motzkin_eliminate(const ConstraintSystem& sys, std::size_t var, std::size_t row_cap) {
    ConstraintSystem out(sys.variables());
    const auto& rows = sys.constraints();

    // An equality involving var lets us substitute it away.
    const auto eq = std::find_if(rows.begin(), rows.end(), [var](const Constraint& c) {
        return c.relation == Relation::Equal && c.coefficients[var] != 0;
    });
    std::vector<Constraint> produced;
    if (eq != rows.end()) {
        const Rat pivot = eq->coefficients[var];
        for (auto it = rows.begin(); it != rows.end(); ++it) {
            if (it == eq) {
                continue;
            }
            Constraint c = *it;
            if (c.coefficients[var] != 0) {
                const Rat factor = c.coefficients[var] / pivot;
                for (std::size_t v = 0; v < c.coefficients.size(); ++v) {
                    c.coefficients[v] -= factor * eq->coefficients[v];
                }
            }
            produced.push_back(std::move(c));
        }
    } else {
        std::vector<const Constraint*> pos;
        std::vector<const Constraint*> neg;
        for (const auto& c : rows) {
            if (c.coefficients[var] > 0) {
                pos.push_back(&c);
            } else if (c.coefficients[var] < 0) {
                neg.push_back(&c);
            } else {
                produced.push_back(c);
            }
        }
        if (produced.size() + pos.size() * neg.size() > row_cap) {
            throw BlowupLimit("Fourier-Motzkin elimination exceeds " + std::to_string(row_cap) + " rows");
        }
        for (const auto* p : pos) {
            for (const auto* q : neg) {
                Constraint c;
                c.coefficients.resize(p->coefficients.size());
                const Rat wp = -q->coefficients[var];
                const Rat wq = p->coefficients[var];
                for (std::size_t v = 0; v < c.coefficients.size(); ++v) {
                    c.coefficients[v] = wp * p->coefficients[v] + wq * q->coefficients[v];
                }
                c.coefficients[var] = 0;
                c.relation = (p->relation == Relation::Greater || q->relation == Relation::Greater)
                                 ? Relation::Greater
                                 : Relation::GreaterEqual;
                produced.push_back(std::move(c));
            }
        }
    }

    std::set<std::pair<std::vector<Rat>, int>> seen;
    for (auto& c : produced) {
        if (is_zero_row(c)) {
            if (c.relation == Relation::Greater) {
                // 0 > 0: keep a single witness of infeasibility.
                if (seen.insert({c.coefficients, 1}).second) {
                    out.add(c.coefficients, c.relation);
                }
            }
            continue;
        }
        normalize(c);
        if (seen.insert({c.coefficients, static_cast<int>(c.relation)}).second) {
            out.add(std::move(c.coefficients), c.relation);
        }
    }
    return out;
}

bool fourier_motzkin_feasible(const ConstraintSystem& sys, std::size_t row_cap) {
    ConstraintSystem current = sys;
    for (std::size_t v = 0; v < sys.variable_count(); ++v) {
        current = fourier_motzkin_eliminate(current, v, row_cap);
    }
    return std::none_of(current.constraints().begin(), current.constraints().end(),
                        [](const Constraint& c) { return c.relation == Relation::Greater; });
}

namespace {

ConstraintSystem kernel_sign_system(const RatMatrix& l, std::size_t n, const SignVector& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("z" + std::to_string(i + 1));
    }
    ConstraintSystem sys(std::move(names));
    for (std::size_t r = 0; r < l.rows(); ++r) {
        const auto row = l.row(r);
        sys.add({row.begin(), row.end()}, Relation::Equal);
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        std::vector<Rat> e(n);
        e[i] = prefix[i] < 0 ? -1 : 1;
        sys.add(std::move(e), prefix[i] == 0 ? Relation::Equal : Relation::Greater);
    }
    return sys;
}

std::vector<Rat> sign_point(const SignVector& s) {
    std::vector<Rat> out;
    for (auto v : s) {
        out.emplace_back(v);
    }
    return out;
}

}  // namespace

KernelSignOracle::KernelSignOracle(RatMatrix l, std::size_t n) : L_(std::move(l)), n_(n) {}

std::optional<std::vector<Rat>> KernelSignOracle::witness(const SignVector& prefix) {
    {
        std::lock_guard lock(mutex_);
        const auto it = cache_.find(prefix);
        if (it != cache_.end()) {
            return it->second;
        }
    }
    std::optional<std::vector<Rat>> result;
    if (L_.rows() == 0) {
        SignVector full = prefix;
        full.resize(n_, 0);
        result = sign_point(full);
    } else {
        result = cone_feasible(kernel_sign_system(L_, n_, prefix));
    }
    std::lock_guard lock(mutex_);
    cache_.emplace(prefix, result);
    return result;
}

void for_each_realizable_sign_vector(const RatMatrix& l, std::size_t n,
                                     const std::function<bool(const SignVector&, const std::vector<Rat>&)>& visit) {
    if (l.rows() > 0 && l.cols() != n) {
        throw DimensionMismatch("L column count differs from n");
    }
    static constexpr Sign order[3] = {1, -1, 0};
    SignVector prefix;
    bool stop = false;
    const std::function<void()> dfs = [&]() {
        if (stop) {
            return;
        }
        std::optional<std::vector<Rat>> w;
        if (l.rows() == 0) {
            w = sign_point(prefix);
        } else {
            w = cone_feasible(kernel_sign_system(l, n, prefix));
        }
        if (!w) {
            return;
        }
        if (prefix.size() == n) {
            const bool nonzero = std::any_of(prefix.begin(), prefix.end(), [](Sign v) { return v != 0; });
            if (nonzero && !visit(prefix, *w)) {
                stop = true;
            }
            return;
        }
        for (Sign v : order) {
            prefix.push_back(v);
            dfs();
            prefix.pop_back();
            if (stop) {
                return;
            }
        }
    };
    dfs();
}

std::vector<SignVector> realizable_sign_vectors(const RatMatrix& l, std::size_t n) {
    std::vector<SignVector> out;
    for_each_realizable_sign_vector(l, n, [&out](const SignVector& s, const std::vector<Rat>&) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace multizero
