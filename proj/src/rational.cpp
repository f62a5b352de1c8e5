#include "multizero/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace multizero {

Sign sign_of(const Rat& value) { return static_cast<Sign>(sgn(value)); }

Sign sign_of(long value) { return static_cast<Sign>((value > 0) - (value < 0)); }

namespace {

bool is_integer_literal(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    if (num[0] == '+') {
        num.remove_prefix(1);
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matrix product: inner dimensions differ");
    }
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

std::vector<Rat> operator*(const RatMatrix& a, std::span<const Rat> x) {
    if (a.cols() != x.size()) {
        throw DimensionMismatch("matrix-vector product: dimensions differ");
    }
    std::vector<Rat> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out[i] += a(i, j) * x[j];
        }
    }
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = Rat(m(i, j));
        }
    }
    return out;
}

namespace {

template <typename T, typename F>
void print_matrix(std::ostream& os, const Matrix<T>& m, F&& format) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "(" : " ");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j == 0 ? "" : " ") << format(m(i, j));
        }
        os << (i + 1 == m.rows() ? ")" : ";\n");
    }
    if (m.rows() == 0) {
        os << "()";
    }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    print_matrix(os, m, [](const Rat& v) { return v.get_str(); });
    return os;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    print_matrix(os, m, [](long v) { return std::to_string(v); });
    return os;
}

}  // namespace multizero
