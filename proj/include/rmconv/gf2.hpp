#pragma once

// Dense linear algebra over GF(2).
//
// Bits are packed little-endian into 64-bit words; bits past size() in the
// last word are always zero. All indices are 0-based. Gaussian elimination
// always takes the leftmost pivot column and the topmost candidate row, so
// every reduced form is canonical.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmconv {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parses a string of '0'/'1' characters; position 0 is the first char.
    static BitVector from_string(std::string_view bits);
    /// Vector of length `len` with ones at the given 1-based positions.
    static BitVector from_support(std::size_t len, std::span<const std::size_t> one_based);
    static BitVector from_support(std::size_t len, std::initializer_list<std::size_t> one_based);
    static BitVector ones(std::size_t len);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    BitVector& operator&=(const BitVector& other);
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    std::size_t weight() const;
    bool none() const;
    bool any() const { return !none(); }
    /// GF(2) inner product.
    bool dot(const BitVector& other) const;

    /// 0-based positions of set bits, ascending.
    std::vector<std::size_t> support() const;
    std::string to_string() const;

    BitVector concat(const BitVector& tail) const;
    /// Bits [begin, begin + count).
    BitVector slice(std::size_t begin, std::size_t count) const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> mutable_words() { return words_; }

    bool operator==(const BitVector&) const = default;

private:
    void require_same_size(const BitVector& other, const char* what) const;

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Orders by weight, then by ascending 1-based support lexicographically.
bool weight_then_support_less(const BitVector& a, const BitVector& b);
/// Lexicographic comparison of ascending supports.
bool support_less(const BitVector& a, const BitVector& b);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    /// All rows must share a length; `cols` is needed for the 0-row case.
    BitMatrix(std::vector<BitVector> rows, std::size_t cols);

    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_.at(i); }
    BitVector& row(std::size_t i) { return rows_.at(i); }
    const std::vector<BitVector>& row_list() const { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_.at(r).set(c, v); }

    void append_row(BitVector row);
    /// Rows of *this followed by rows of `below`.
    BitMatrix vstack(const BitMatrix& below) const;
    /// [*this | right]; row counts must match.
    BitMatrix hconcat(const BitMatrix& right) const;
    /// [*this | 0 (width `pad`)].
    BitMatrix pad_right(std::size_t pad) const;
    /// [0 (width `pad`) | *this].
    BitMatrix pad_left(std::size_t pad) const;

    bool is_zero() const;
    std::string to_string() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

std::size_t rank(const BitMatrix& m);

/// A · Bᵀ over GF(2). Throws std::invalid_argument unless A.cols == B.cols.
BitMatrix mat_mul_t(const BitMatrix& a, const BitMatrix& b);

/// Finds x with xᵀA = bᵀ (x selects rows of A), or nullopt when b is not in
/// the row space. Throws std::invalid_argument unless b.size() == A.cols.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

/// Basis of {v : A·vᵀ = 0}; one row per free column, in ascending column order.
BitMatrix nullspace(const BitMatrix& a);

/// Incremental row-reduced basis with combination tracking: the reusable core
/// of solve() for callers that test many vectors against one matrix.
class RowReducer {
public:
    explicit RowReducer(const BitMatrix& a);

    std::size_t rank() const { return pivots_.size(); }
    /// Same contract as solve().
    std::optional<BitVector> express(const BitVector& b) const;
    bool contains(const BitVector& b) const;

private:
    struct Pivot {
        std::size_t col;
        BitVector row;
        BitVector combo;
    };
    std::size_t n_rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Pivot> pivots_;  // ascending pivot column
};

}  // namespace rmconv
