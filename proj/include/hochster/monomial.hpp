#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hochster/vertex_set.hpp"

namespace hochster {

/// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}; all entries >= 0.
/// Variable indices are 0-based in the C++ API.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        for (int e : exponents_) {
            if (e < 0) {
                throw std::invalid_argument("monomial exponents must be nonnegative");
            }
        }
    }
    /// The constant monomial 1 in n variables.
    static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int num_vars() const { return static_cast<int>(exponents_.size()); }
    std::span<const int> exponents() const { return exponents_; }
    int operator[](int j) const { return exponents_[static_cast<std::size_t>(j)]; }

    bool is_one() const {
        return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
    }
    bool is_squarefree() const {
        return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
    }
    long long total_degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0LL); }

    /// True if this monomial divides other.
    bool divides(const Monomial& other) const {
        for (std::size_t j = 0; j < exponents_.size(); ++j) {
            if (exponents_[j] > other.exponents_[j]) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents_ <=> b.exponents_; }

private:
    std::vector<int> exponents_;
};

/// A multidegree a in Z^n.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> entries) : entries_(std::move(entries)) {}

    int num_vars() const { return static_cast<int>(entries_.size()); }
    std::span<const int> entries() const { return entries_; }
    int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
    long long total_degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0LL); }

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
};

/// Exponent of variable j in u.
inline int nu(const Monomial& u, int j) {
    if (j < 0 || j >= u.num_vars()) {
        throw std::out_of_range("variable index " + std::to_string(j) + " out of range");
    }
    return u[j];
}

/// Variables with positive exponent.
inline VertexSet support(const Monomial& u) {
    VertexSet s;
    for (int j = 0; j < u.num_vars(); ++j) {
        if (u[j] > 0) {
            s = s.with(j);
        }
    }
    return s;
}

struct SignSplit {
    VertexSet negative;  // G_a
    VertexSet positive;  // H_a
};

inline SignSplit sign_split(const MultiDegree& a) {
    SignSplit out;
    for (int j = 0; j < a.num_vars(); ++j) {
        if (a[j] < 0) {
            out.negative = out.negative.with(j);
        } else if (a[j] > 0) {
            out.positive = out.positive.with(j);
        }
    }
    return out;
}

class UnitIdealError : public std::invalid_argument {
public:
    UnitIdealError() : std::invalid_argument("the unit ideal (1) is not supported: S/I = 0") {}
};

/// A monomial ideal in K[x_1..x_n], held by its minimal generating set G(I).
///
/// Generators are stored without duplicates, with no generator dividing
/// another, sorted descending lexicographically by exponent vector
/// (x1^2 before x1*x2 before x2). An empty generator list is the zero ideal.
class MonomialIdeal {
public:
    /// Minimizes the given generators. Throws UnitIdealError if 1 is among them.
    MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
        check_ambient(n);
        for (const Monomial& u : generators) {
            if (u.num_vars() != n) {
                throw std::invalid_argument("generator has wrong number of variables");
            }
            if (u.is_one()) {
                throw UnitIdealError();
            }
        }
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        std::vector<Monomial> minimal;
        for (std::size_t k = 0; k < generators.size(); ++k) {
            bool redundant = false;
            for (std::size_t l = 0; l < generators.size() && !redundant; ++l) {
                redundant = l != k && generators[l].divides(generators[k]);
            }
            if (!redundant) {
                minimal.push_back(generators[k]);
            }
        }
        std::sort(minimal.begin(), minimal.end(), std::greater<>());
        generators_ = std::move(minimal);
    }

    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

    int num_vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }
    bool is_squarefree() const {
        return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& u) { return u.is_squarefree(); });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_;
    std::vector<Monomial> generators_;
};

/// Coordinatewise maximum exponent over G(I); 0 where no generator uses the
/// variable (in particular everywhere for the zero ideal).
inline std::vector<int> rho(const MonomialIdeal& ideal) {
    std::vector<int> out(static_cast<std::size_t>(ideal.num_vars()), 0);
    for (const Monomial& u : ideal.generators()) {
        for (int j = 0; j < ideal.num_vars(); ++j) {
            out[static_cast<std::size_t>(j)] = std::max(out[static_cast<std::size_t>(j)], u[j]);
        }
    }
    return out;
}

inline MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& u : ideal.generators()) {
        std::vector<int> e(static_cast<std::size_t>(ideal.num_vars()), 0);
        for (int j = 0; j < ideal.num_vars(); ++j) {
            e[static_cast<std::size_t>(j)] = u[j] > 0 ? 1 : 0;
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Text format
//
//   n=<int>[;]
//   <monomial>, <monomial>, ...     or the literal 0 for the zero ideal
//
// A monomial is a '*'-joined product of factors x<i> or x<i>^<e> with
// 1 <= i <= n. Whitespace is insignificant.
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(position) + ": " + what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class IdealParser {
public:
    explicit IdealParser(std::string_view text) : text_(text) {}

    MonomialIdeal parse() {
        expect('n');
        expect('=');
        const std::size_t n_pos = peek_position();
        const long long n = integer();
        if (n <= 0 || n > kMaxVariables) {
            throw ParseError(n_pos, "n must be in 1..64");
        }
        n_ = static_cast<int>(n);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ';') {
            ++pos_;
        }
        skip_ws();
        if (at_end()) {
            throw ParseError(pos_, "expected a generator list or 0");
        }
        std::vector<Monomial> gens;
        bool has_unit = false;
        if (text_[pos_] == '0') {
            ++pos_;
            skip_ws();
            if (!at_end()) {
                throw ParseError(pos_, "unexpected input after zero ideal");
            }
            return MonomialIdeal::zero(n_);
        }
        while (true) {
            Monomial u = monomial();
            has_unit = has_unit || u.is_one();
            gens.push_back(std::move(u));
            skip_ws();
            if (at_end()) {
                break;
            }
            expect(',');
        }
        if (has_unit) {
            throw UnitIdealError();
        }
        return MonomialIdeal(n_, std::move(gens));
    }

private:
    Monomial monomial() {
        skip_ws();
        std::vector<int> e(static_cast<std::size_t>(n_), 0);
        if (!at_end() && text_[pos_] == '1') {
            ++pos_;
            return Monomial(std::move(e));
        }
        while (true) {
            expect('x');
            const std::size_t var_pos = pos_;
            const long long var = integer();
            if (var < 1 || var > n_) {
                throw ParseError(var_pos, "variable index out of range 1.." + std::to_string(n_));
            }
            long long exponent = 1;
            skip_ws();
            if (!at_end() && text_[pos_] == '^') {
                ++pos_;
                exponent = integer();
            }
            const long long total = e[static_cast<std::size_t>(var - 1)] + exponent;
            if (total > std::numeric_limits<int>::max()) {
                throw ParseError(var_pos, "exponent too large");
            }
            e[static_cast<std::size_t>(var - 1)] = static_cast<int>(total);
            skip_ws();
            if (at_end() || text_[pos_] != '*') {
                break;
            }
            ++pos_;
        }
        return Monomial(std::move(e));
    }

    long long integer() {
        skip_ws();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) {
                throw ParseError(start, "integer too large");
            }
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError(start, "expected a nonnegative integer");
        }
        return value;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || text_[pos_] != c) {
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    std::size_t peek_position() {
        skip_ws();
        return pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_ = 0;
};

}  // namespace detail

inline MonomialIdeal parse_ideal(std::string_view text) { return detail::IdealParser(text).parse(); }

inline std::string format_monomial(const Monomial& u) {
    std::string out;
    for (int j = 0; j < u.num_vars(); ++j) {
        if (u[j] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'x' + std::to_string(j + 1);
        if (u[j] > 1) {
            out += '^' + std::to_string(u[j]);
        }
    }
    return out.empty() ? "1" : out;
}

/// Inverse of parse_ideal: "n=<n>\n<gens>\n".
inline std::string format_ideal(const MonomialIdeal& ideal) {
    std::string out = "n=" + std::to_string(ideal.num_vars()) + "\n";
    if (ideal.is_zero()) {
        return out + "0\n";
    }
    bool first = true;
    for (const Monomial& u : ideal.generators()) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += format_monomial(u);
    }
    return out + "\n";
}

}  // namespace hochster
