#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hochster {

/// Coefficient field K, identified by its characteristic (0 for Q, or a prime p).
class FieldSpec {
public:
    /// Characteristic 0.
    constexpr FieldSpec() = default;

    /// Throws std::invalid_argument unless p is 0 or a prime below 2^31.
    explicit FieldSpec(std::uint64_t characteristic) : characteristic_(characteristic) {
        if (characteristic == 0) {
            return;
        }
        if (characteristic >= (std::uint64_t{1} << 31) || !is_prime(characteristic)) {
            throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31, got " +
                                        std::to_string(characteristic));
        }
    }

    static FieldSpec rationals() { return FieldSpec(); }

    std::uint64_t characteristic() const { return characteristic_; }

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    static bool is_prime(std::uint64_t p) {
        if (p < 2) {
            return false;
        }
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                return false;
            }
        }
        return true;
    }

    std::uint64_t characteristic_ = 0;
};

/// Dense row-major integer matrix. Used for boundary and Cech differentials,
/// whose entries are 0 and +-1.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<std::int64_t>& data() const { return data_; }

    bool is_zero() const {
        for (std::int64_t v : data_) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact product; throws std::invalid_argument on shape mismatch.
inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix shapes do not compose");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

namespace detail {

template <class Int>
struct CheckedOps;

template <>
struct CheckedOps<std::int64_t> {
    // Returns false on overflow.
    static bool cross(std::int64_t p, std::int64_t x, std::int64_t q, std::int64_t y, std::int64_t prev,
                      std::int64_t& out) {
        std::int64_t px = 0;
        std::int64_t qy = 0;
        std::int64_t diff = 0;
        if (__builtin_mul_overflow(p, x, &px) || __builtin_mul_overflow(q, y, &qy) ||
            __builtin_sub_overflow(px, qy, &diff)) {
            return false;
        }
        out = diff / prev;
        return true;
    }
    static bool is_small_magnitude_less(std::int64_t a, std::int64_t b) { return (a < 0 ? -a : a) < (b < 0 ? -b : b); }
};

template <>
struct CheckedOps<boost::multiprecision::cpp_int> {
    using Int = boost::multiprecision::cpp_int;
    static bool cross(const Int& p, const Int& x, const Int& q, const Int& y, const Int& prev, Int& out) {
        out = (p * x - q * y) / prev;
        return true;
    }
    static bool is_small_magnitude_less(const Int& a, const Int& b) { return abs(a) < abs(b); }
};

/// Fraction-free (Bareiss) elimination; returns nullopt if Int overflows.
template <class Int>
std::optional<std::size_t> bareiss_rank(std::vector<Int> m, std::size_t rows, std::size_t cols) {
    using Ops = CheckedOps<Int>;
    auto at = [&](std::size_t r, std::size_t c) -> Int& { return m[r * cols + c]; };
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        // Smallest nonzero pivot limits entry growth.
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (at(r, c) != 0 && (pivot == rows || Ops::is_small_magnitude_less(at(r, c), at(pivot, c)))) {
                pivot = r;
            }
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) {
                std::swap(at(pivot, j), at(rank, j));
            }
        }
        const Int p = at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Int q = at(r, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int value;
                if (!Ops::cross(p, at(r, j), q, at(rank, j), prev, value)) {
                    return std::nullopt;
                }
                at(r, j) = std::move(value);
            }
            at(r, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

inline std::size_t modular_rank(const IntMatrix& a, std::uint64_t p) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::uint64_t> m(rows * cols);
    const auto sp = static_cast<std::int64_t>(p);
    for (std::size_t k = 0; k < m.size(); ++k) {
        std::int64_t v = a.data()[k] % sp;
        m[k] = static_cast<std::uint64_t>(v < 0 ? v + sp : v);
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return m[r * cols + c]; };
    auto inverse = [p](std::uint64_t x) {
        // Fermat: x^(p-2) mod p.
        std::uint64_t result = 1;
        std::uint64_t base = x % p;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1U) {
                result = result * base % p;
            }
            base = base * base % p;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) {
                std::swap(at(pivot, j), at(rank, j));
            }
        }
        const std::uint64_t inv = inverse(at(rank, c));
        for (std::size_t j = c; j < cols; ++j) {
            at(rank, j) = at(rank, j) * inv % p;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t factor = at(r, c);
            if (factor == 0) {
                continue;
            }
            for (std::size_t j = c; j < cols; ++j) {
                at(r, j) = (at(r, j) + (p - factor) * at(rank, j)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Exact rank of an integer matrix over the field K.
///
/// Characteristic 0 uses Bareiss elimination in 64-bit integers and repeats
/// the elimination in arbitrary precision if an intermediate overflows.
inline std::size_t rank(const IntMatrix& a, FieldSpec field) {
    if (a.rows() == 0 || a.cols() == 0) {
        return 0;
    }
    if (field.characteristic() != 0) {
        return detail::modular_rank(a, field.characteristic());
    }
    if (auto r = detail::bareiss_rank<std::int64_t>(a.data(), a.rows(), a.cols())) {
        return *r;
    }
    std::vector<boost::multiprecision::cpp_int> big(a.data().begin(), a.data().end());
    return *detail::bareiss_rank<boost::multiprecision::cpp_int>(std::move(big), a.rows(), a.cols());
}

}  // namespace hochster
