#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hochster/degree_complex.hpp"
#include "hochster/linalg.hpp"
#include "hochster/monomial.hpp"
#include "hochster/simplicial.hpp"

namespace hochster {

/// dim_K H^i_m(S/I)_a for every a of `pattern`.
struct TableEntry {
    int index = 0;
    DegreePattern pattern;
    std::uint64_t coefficient = 0;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct EntryLess {
    bool operator()(const TableEntry& x, const TableEntry& y) const {
        if (x.index != y.index) {
            return x.index < y.index;
        }
        return PatternLess{}(x.pattern, y.pattern);
    }
};

/// All nonzero graded dimensions of the local cohomology modules of S/I,
/// indexed by (i, degree pattern). Entries are sorted by (i, pattern order).
class CohomologyTable {
public:
    CohomologyTable(int n, int krull_dim, std::vector<int> rho, std::vector<TableEntry> entries)
        : n_(n), dim_(krull_dim), rho_(std::move(rho)), entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(), EntryLess{});
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            const TableEntry& e = entries_[k];
            if (e.coefficient == 0 || e.index < 0 || e.index > n_) {
                throw std::logic_error("invalid cohomology table entry");
            }
            for (int j = 0; j < n_; ++j) {
                const int bj = e.pattern.b[static_cast<std::size_t>(j)];
                const bool in_box = e.pattern.negative.contains(j) ? bj == 0 : (bj >= 0 && bj < rho_[static_cast<std::size_t>(j)]);
                if (!in_box) {
                    throw std::logic_error("cohomology table entry outside the degree box");
                }
            }
            if (k > 0 && !EntryLess{}(entries_[k - 1], e)) {
                throw std::logic_error("duplicate cohomology table entry");
            }
        }
    }

    int num_vars() const { return n_; }
    /// Krull dimension of S/I.
    int krull_dim() const { return dim_; }
    const std::vector<int>& rho() const { return rho_; }
    const std::vector<TableEntry>& entries() const { return entries_; }

    /// Entries with cohomological index i, in pattern order.
    std::vector<TableEntry> entries_at(int i) const {
        std::vector<TableEntry> out;
        for (const TableEntry& e : entries_) {
            if (e.index == i) {
                out.push_back(e);
            }
        }
        return out;
    }

    /// Coefficient of (i, pattern), 0 if absent.
    std::uint64_t lookup(int i, const DegreePattern& p) const {
        const TableEntry key{i, p, 0};
        const auto it = std::lower_bound(entries_.begin(), entries_.end(), key, EntryLess{});
        if (it != entries_.end() && it->index == i && it->pattern == p) {
            return it->coefficient;
        }
        return 0;
    }

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

private:
    int n_;
    int dim_;
    std::vector<int> rho_;
    std::vector<TableEntry> entries_;
};

struct TableOptions {
    std::size_t pattern_cap = kDefaultPatternCap;
    /// Worker threads for pattern evaluation; 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Krull dimension of S/I: dim of the radical's complex plus one.
inline int krull_dim(const MonomialIdeal& ideal) { return radical_complex(ideal).dimension() + 1; }

namespace detail {

inline std::vector<TableEntry> evaluate_pattern(const MonomialIdeal& ideal, const DegreePattern& p, FieldSpec field) {
    const SimplicialComplex complex = delta_a(ideal, pattern_to_representative(p));
    std::vector<TableEntry> out;
    if (complex.is_void()) {
        return out;
    }
    const std::vector<std::size_t> dims = reduced_homology_dims(complex, field);
    const int shift = p.negative.size() + 1;
    // dims[k+1] is reduced H_k; it lands in H^i for i = k + |F| + 1.
    for (std::size_t slot = 0; slot < dims.size(); ++slot) {
        if (dims[slot] == 0) {
            continue;
        }
        const int i = static_cast<int>(slot) - 1 + shift;
        if (i >= 0 && i <= ideal.num_vars()) {
            out.push_back(TableEntry{i, p, dims[slot]});
        }
    }
    return out;
}

}  // namespace detail

/// Evaluates the generalized Hochster formula: for each degree pattern p=(F,b)
/// the coefficient of H^i is dim_K of reduced H_{i-|F|-1}(Delta_a; K) at the
/// representative a of p. The result does not depend on options.threads.
inline CohomologyTable cohomology_table(const MonomialIdeal& ideal, FieldSpec field = {}, TableOptions options = {}) {
    const std::vector<DegreePattern> patterns = enumerate_patterns(ideal, options.pattern_cap);
    std::vector<std::vector<TableEntry>> per_pattern(patterns.size());

    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, patterns.size())));
    if (threads <= 1) {
        for (std::size_t k = 0; k < patterns.size(); ++k) {
            per_pattern[k] = detail::evaluate_pattern(ideal, patterns[k], field);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t k = next++; k < patterns.size(); k = next++) {
                    per_pattern[k] = detail::evaluate_pattern(ideal, patterns[k], field);
                }
            });
        }
    }

    std::vector<TableEntry> entries;
    for (auto& chunk : per_pattern) {
        entries.insert(entries.end(), chunk.begin(), chunk.end());
    }
    return CohomologyTable(ideal.num_vars(), krull_dim(ideal), rho(ideal), std::move(entries));
}

/// dim_K H^i_m(S/I)_a read off the table.
inline std::uint64_t coefficient_at(const CohomologyTable& table, int i, const MultiDegree& a) {
    if (a.num_vars() != table.num_vars()) {
        throw std::invalid_argument("multidegree has wrong number of variables");
    }
    const DegreePattern p = pattern_of(a);
    for (int j = 0; j < table.num_vars(); ++j) {
        if (!p.negative.contains(j) && a[j] >= table.rho()[static_cast<std::size_t>(j)]) {
            return 0;
        }
    }
    return table.lookup(i, p);
}

/// Classical Hochster formula for a square-free ideal, through links of the
/// Stanley-Reisner complex: coefficient of (F, 0) in H^i is
/// dim_K reduced H_{i-|F|-1}(lk F; K).
inline CohomologyTable classical_hochster(const MonomialIdeal& ideal, FieldSpec field = {}) {
    const SimplicialComplex complex = complex_of_squarefree(ideal);
    const int n = ideal.num_vars();
    std::vector<TableEntry> entries;
    for (VertexSet f : faces_in_pattern_order(complex)) {
        const std::vector<std::size_t> dims = reduced_homology_dims(link(complex, f), field);
        for (std::size_t slot = 0; slot < dims.size(); ++slot) {
            if (dims[slot] == 0) {
                continue;
            }
            const int i = static_cast<int>(slot) + f.size();
            entries.push_back(TableEntry{i, DegreePattern{f, std::vector<int>(static_cast<std::size_t>(n), 0)}, dims[slot]});
        }
    }
    return CohomologyTable(n, complex.dimension() + 1, rho(ideal), std::move(entries));
}

// ---------------------------------------------------------------------------
// Series rendering
// ---------------------------------------------------------------------------

/// c * t^b * prod_{j in F} t_j^{-1} / (1 - t_j^{-1}).
struct SeriesTerm {
    std::uint64_t coefficient = 0;
    std::vector<int> b;
    VertexSet negative;

    friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

struct SeriesExpr {
    std::vector<SeriesTerm> terms;

    bool empty() const { return terms.empty(); }
    friend bool operator==(const SeriesExpr&, const SeriesExpr&) = default;
};

/// Hilbert series of H^i_m(S/I) as a sum of rational terms, one per entry.
inline SeriesExpr hilbert_series(const CohomologyTable& table, int i) {
    if (i < 0 || i > table.num_vars()) {
        throw std::out_of_range("cohomological index out of range");
    }
    SeriesExpr out;
    for (const TableEntry& e : table.entries_at(i)) {
        out.terms.push_back(SeriesTerm{e.coefficient, e.pattern.b, e.pattern.negative});
    }
    return out;
}

/// "2*t1^2*t3*t2^-1/(1-t2^-1)"; a bare coefficient for the constant term.
inline std::string format_term(const SeriesTerm& term) {
    std::string out = std::to_string(term.coefficient);
    for (std::size_t j = 0; j < term.b.size(); ++j) {
        if (term.b[j] == 0) {
            continue;
        }
        out += "*t" + std::to_string(j + 1);
        if (term.b[j] != 1) {
            out += '^' + std::to_string(term.b[j]);
        }
    }
    for (int j : term.negative.members()) {
        const std::string t = "t" + std::to_string(j + 1);
        out += '*' + t + "^-1/(1-" + t + "^-1)";
    }
    return out;
}

/// Terms joined by " + "; "0" for the empty series.
inline std::string format_series(const SeriesExpr& series) {
    if (series.empty()) {
        return "0";
    }
    std::string out;
    for (const SeriesTerm& term : series.terms) {
        if (!out.empty()) {
            out += " + ";
        }
        out += format_term(term);
    }
    return out;
}

/// One "H^i: <series>" line per index with nonzero cohomology, up to max_index.
inline std::string format_all_series(const CohomologyTable& table, int max_index) {
    std::string out;
    for (int i = 0; i <= std::min(max_index, table.num_vars()); ++i) {
        const SeriesExpr s = hilbert_series(table, i);
        if (!s.empty()) {
            out += "H^" + std::to_string(i) + ": " + format_series(s) + "\n";
        }
    }
    return out;
}

/// "1,*,0": b-vector with '*' at the negative positions.
inline std::string format_pattern_b(const DegreePattern& p) {
    std::string out;
    for (std::size_t j = 0; j < p.b.size(); ++j) {
        if (j > 0) {
            out += ',';
        }
        out += p.negative.contains(static_cast<int>(j)) ? std::string("*") : std::to_string(p.b[j]);
    }
    return out;
}

/// Tab-separated rows "i  F-bitmask  b-vector  coefficient" in table order.
/// The bitmask is decimal with bit j-1 standing for x_j.
inline std::string format_table_tsv(const CohomologyTable& table, int max_index) {
    std::ostringstream os;
    for (const TableEntry& e : table.entries()) {
        if (e.index > max_index) {
            continue;
        }
        os << e.index << '\t' << e.pattern.negative.bits() << '\t' << format_pattern_b(e.pattern) << '\t'
           << e.coefficient << '\n';
    }
    return os.str();
}

}  // namespace hochster
