#include "multizero/model.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "multizero/linalg.hpp"

namespace multizero {

IntMatrix ReactionNetwork::stoichiometric_matrix() const {
    IntMatrix n(species.size(), reactions.size());
    for (std::size_t j = 0; j < reactions.size(); ++j) {
        for (std::size_t i = 0; i < species.size(); ++i) {
            n(i, j) = reactions[j].product[i] - reactions[j].reactant[i];
        }
    }
    return n;
}

IntMatrix ReactionNetwork::reactant_matrix() const {
    IntMatrix m(species.size(), reactions.size());
    for (std::size_t j = 0; j < reactions.size(); ++j) {
        for (std::size_t i = 0; i < species.size(); ++i) {
            m(i, j) = reactions[j].reactant[i];
        }
    }
    return m;
}

RatMatrix AugmentedVerticalSystem::original_C() const {
    RatMatrix out(C.rows(), C.cols());
    for (std::size_t i = 0; i < C.rows(); ++i) {
        for (std::size_t k = 0; k < C.cols(); ++k) {
            out(i, column_permutation[k]) = C(i, k);
        }
    }
    return out;
}

IntMatrix AugmentedVerticalSystem::original_M() const {
    IntMatrix out(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t k = 0; k < M.cols(); ++k) {
            out(i, column_permutation[k]) = M(i, k);
        }
    }
    return out;
}

AugmentedVerticalSystem make_system(RatMatrix c, IntMatrix m, RatMatrix l) {
    if (c.rows() == 0) {
        throw DimensionMismatch("C must have at least one row");
    }
    if (m.cols() != c.cols()) {
        throw DimensionMismatch("M has " + std::to_string(m.cols()) + " columns but C has " +
                                std::to_string(c.cols()));
    }
    const std::size_t n = m.rows();
    if (c.rows() > n) {
        throw DimensionMismatch("C has more rows than there are variables");
    }
    if (l.rows() == 0) {
        l = RatMatrix(0, n);
    }
    if (l.cols() != n) {
        throw DimensionMismatch("L has " + std::to_string(l.cols()) + " columns but M has " + std::to_string(n) +
                                " rows");
    }
    if (l.rows() != n - c.rows()) {
        throw DimensionMismatch("L must have n - rank(C) = " + std::to_string(n - c.rows()) + " rows, got " +
                                std::to_string(l.rows()));
    }
    if (rank(l) != l.rows()) {
        throw RankDeficient("L does not have full row rank");
    }
    auto principal = make_principal(c);
    AugmentedVerticalSystem sys;
    sys.C = std::move(principal.matrix);
    sys.M = m.select_columns(principal.permutation);
    sys.L = std::move(l);
    sys.column_permutation = std::move(principal.permutation);
    return sys;
}

namespace {

enum class TokenKind { Identifier, Integer, Rational, Plus, Arrow, Colon, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }

bool is_ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '\'';
}

/// Splits one line of the network format into tokens.
std::vector<Token> tokenize_network_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char ch = line[i];
        const std::size_t col = i + 1;
        if (ch == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '+') {
            out.push_back({TokenKind::Plus, "+", line_no, col});
            ++i;
        } else if (ch == ':') {
            out.push_back({TokenKind::Colon, ":", line_no, col});
            ++i;
        } else if (ch == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({TokenKind::Arrow, "->", line_no, col});
            i += 2;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) {
                ++j;
            }
            out.push_back({TokenKind::Integer, std::string(line.substr(i, j - i)), line_no, col});
            i = j;
        } else if (is_ident_start(ch)) {
            std::size_t j = i;
            while (j < line.size() && is_ident_char(line[j])) {
                ++j;
            }
            out.push_back({TokenKind::Identifier, std::string(line.substr(i, j - i)), line_no, col});
            i = j;
        } else {
            throw SyntaxError(std::string("unexpected character '") + ch + "'", line_no, col);
        }
    }
    out.push_back({TokenKind::End, "", line_no, line.size() + 1});
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

class NetworkParser {
public:
    ReactionNetwork parse(std::string_view text) {
        const auto lines = split_lines(text);
        for (std::size_t n = 0; n < lines.size(); ++n) {
            tokens_ = tokenize_network_line(lines[n], n + 1);
            pos_ = 0;
            if (peek().kind == TokenKind::End) {
                continue;
            }
            const Token head = expect(TokenKind::Identifier, "'species' or 'rxn'");
            if (head.text == "species") {
                parse_species();
            } else if (head.text == "rxn") {
                parse_reaction();
            } else {
                throw SyntaxError("expected 'species' or 'rxn', found '" + head.text + "'", head.line, head.column);
            }
        }
        for (auto& r : net_.reactions) {
            r.reactant.resize(net_.species.size(), 0);
            r.product.resize(net_.species.size(), 0);
        }
        return std::move(net_);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token expect(TokenKind kind, const std::string& what) {
        const Token& t = peek();
        if (t.kind != kind) {
            throw SyntaxError("expected " + what + (t.kind == TokenKind::End ? ", found end of line"
                                                                             : ", found '" + t.text + "'"),
                              t.line, t.column);
        }
        return tokens_[pos_++];
    }

    void parse_species() {
        if (peek().kind == TokenKind::End) {
            throw SyntaxError("species declaration lists no names", peek().line, peek().column);
        }
        while (peek().kind != TokenKind::End) {
            const Token name = expect(TokenKind::Identifier, "species name");
            if (index_.count(name.text) != 0) {
                throw SyntaxError("species '" + name.text + "' declared twice", name.line, name.column);
            }
            index_[name.text] = net_.species.size();
            net_.species.push_back(name.text);
        }
    }

    std::vector<long> parse_side() {
        std::vector<long> coeffs(net_.species.size(), 0);
        if (peek().kind == TokenKind::Integer && peek().text == "0") {
            const Token zero = tokens_[pos_++];
            if (peek().kind == TokenKind::Identifier) {
                throw SyntaxError("coefficient must be a positive integer", zero.line, zero.column);
            }
            return coeffs;
        }
        while (true) {
            long coefficient = 1;
            if (peek().kind == TokenKind::Integer) {
                const Token c = tokens_[pos_++];
                coefficient = std::stol(c.text);
                if (coefficient <= 0) {
                    throw SyntaxError("coefficient must be a positive integer", c.line, c.column);
                }
            }
            const Token name = expect(TokenKind::Identifier, "species name");
            const auto it = index_.find(name.text);
            if (it == index_.end()) {
                throw UnknownSpecies("line " + std::to_string(name.line) + ", column " +
                                     std::to_string(name.column) + ": undeclared species '" + name.text + "'");
            }
            coeffs[it->second] += coefficient;
            if (peek().kind != TokenKind::Plus) {
                break;
            }
            ++pos_;
        }
        return coeffs;
    }

    void parse_reaction() {
        const Token label = expect(TokenKind::Identifier, "rate label");
        expect(TokenKind::Colon, "':' after rate label");
        if (!labels_.insert(label.text).second) {
            throw DuplicateRateLabel("line " + std::to_string(label.line) + ": rate label '" + label.text +
                                     "' used twice");
        }
        Reaction r;
        r.label = label.text;
        r.reactant = parse_side();
        expect(TokenKind::Arrow, "'->'");
        r.product = parse_side();
        expect(TokenKind::End, "end of line");
        net_.reactions.push_back(std::move(r));
    }

    ReactionNetwork net_;
    std::map<std::string, std::size_t> index_;
    std::set<std::string> labels_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ReactionNetwork parse_network(std::string_view text) { return NetworkParser{}.parse(text); }

AugmentedVerticalSystem network_to_system(const ReactionNetwork& net) {
    const RatMatrix n = to_rational(net.stoichiometric_matrix());
    const auto echelon = rref(n);
    const std::size_t r = echelon.pivot_columns.size();
    if (r == 0) {
        throw RankDeficient("stoichiometric matrix is zero");
    }
    std::vector<std::size_t> nonzero_rows(r);
    for (std::size_t i = 0; i < r; ++i) {
        nonzero_rows[i] = i;
    }
    const auto principal = make_principal(echelon.reduced.select_rows(nonzero_rows));
    // Re-reduce in the permuted order so that C = (I | -Pbar).
    RatMatrix c = rref(principal.matrix).reduced;

    AugmentedVerticalSystem sys;
    sys.C = std::move(c);
    sys.M = net.reactant_matrix().select_columns(principal.permutation);
    sys.L = left_kernel(n);
    sys.column_permutation = principal.permutation;
    for (const auto& reaction : net.reactions) {
        sys.rate_labels.push_back(reaction.label);
    }
    return sys;
}

namespace {

struct MatrixToken {
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<MatrixToken> tokenize_matrix_text(std::string_view text) {
    std::vector<MatrixToken> out;
    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto line = lines[n];
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == '#') {
                break;
            }
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') {
                ++j;
            }
            out.push_back({std::string(line.substr(i, j - i)), n + 1, i + 1});
            i = j;
        }
    }
    return out;
}

std::size_t parse_dimension(const MatrixToken& t) {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos) {
        throw SyntaxError("expected a nonnegative integer dimension, found '" + t.text + "'", t.line, t.column);
    }
    return std::stoul(t.text);
}

}  // namespace

AugmentedVerticalSystem parse_system(std::string_view text) {
    const auto tokens = tokenize_matrix_text(text);
    std::optional<RatMatrix> c;
    std::optional<RatMatrix> m;
    std::optional<RatMatrix> l;
    std::size_t pos = 0;
    const auto next = [&](const char* what) -> const MatrixToken& {
        if (pos >= tokens.size()) {
            const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
            throw SyntaxError(std::string("unexpected end of input, expected ") + what, line, 1);
        }
        return tokens[pos++];
    };
    while (pos < tokens.size()) {
        const MatrixToken& head = next("block name");
        std::optional<RatMatrix>* target = nullptr;
        if (head.text == "C") {
            target = &c;
        } else if (head.text == "M") {
            target = &m;
        } else if (head.text == "L") {
            target = &l;
        } else {
            throw SyntaxError("expected block name C, M or L, found '" + head.text + "'", head.line, head.column);
        }
        if (target->has_value()) {
            throw SyntaxError("block " + head.text + " given twice", head.line, head.column);
        }
        const std::size_t rows = parse_dimension(next("row count"));
        const std::size_t cols = parse_dimension(next("column count"));
        RatMatrix block(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const MatrixToken& t = next("matrix entry");
                try {
                    block(i, j) = parse_rat(t.text);
                } catch (const std::invalid_argument&) {
                    throw SyntaxError("expected a rational entry, found '" + t.text + "'", t.line, t.column);
                }
                if (head.text == "M" && block(i, j).get_den() != 1) {
                    throw SyntaxError("M entries must be integers, found '" + t.text + "'", t.line, t.column);
                }
            }
        }
        *target = std::move(block);
    }
    if (!c) {
        throw SyntaxError("missing C block", 1, 1);
    }
    if (!m) {
        throw SyntaxError("missing M block", 1, 1);
    }
    IntMatrix mi(m->rows(), m->cols());
    for (std::size_t i = 0; i < m->rows(); ++i) {
        for (std::size_t j = 0; j < m->cols(); ++j) {
            const mpz_class& v = (*m)(i, j).get_num();
            if (!v.fits_slong_p()) {
                throw DimensionMismatch("M entry out of range");
            }
            mi(i, j) = v.get_si();
        }
    }
    return make_system(std::move(*c), std::move(mi), l ? std::move(*l) : RatMatrix(0, 0));
}

std::string format_system(const AugmentedVerticalSystem& sys) {
    std::ostringstream os;
    const auto write_block = [&os](const char* name, std::size_t rows, std::size_t cols, auto&& entry) {
        os << name << ' ' << rows << ' ' << cols << '\n';
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                os << (j == 0 ? "" : " ") << entry(i, j);
            }
            os << '\n';
        }
    };
    const RatMatrix c = sys.original_C();
    const IntMatrix m = sys.original_M();
    write_block("C", c.rows(), c.cols(), [&](std::size_t i, std::size_t j) { return c(i, j).get_str(); });
    write_block("M", m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return std::to_string(m(i, j)); });
    if (sys.L.rows() > 0) {
        write_block("L", sys.L.rows(), sys.L.cols(),
                    [&](std::size_t i, std::size_t j) { return sys.L(i, j).get_str(); });
    }
    return os.str();
}

}  // namespace multizero
