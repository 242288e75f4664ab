#include "rmconv/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "rmconv/simd/bit_kernels.hpp"

namespace rmconv {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
}

BitVector BitVector::from_support(std::size_t len, std::span<const std::size_t> one_based) {
    BitVector v(len);
    for (auto p : one_based) {
        if (p == 0 || p > len) throw std::out_of_range("support position out of range");
        v.set(p - 1);
    }
    return v;
}

BitVector BitVector::from_support(std::size_t len, std::initializer_list<std::size_t> one_based) {
    return from_support(len, std::span<const std::size_t>(one_based.begin(), one_based.size()));
}

BitVector BitVector::ones(std::size_t len) {
    BitVector v(len);
    for (std::size_t i = 0; i < len; ++i) v.set(i);
    return v;
}

bool BitVector::test(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVector index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("BitVector index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i) {
    if (i >= len_) throw std::out_of_range("BitVector index out of range");
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

void BitVector::require_same_size(const BitVector& other, const char* what) const {
    if (other.len_ != len_)
        throw std::invalid_argument(std::string(what) + ": BitVector length mismatch");
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_size(other, "xor");
    simd::active_kernels().xor_into(words_, other.words_);
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_size(other, "and");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::size_t BitVector::weight() const { return simd::active_kernels().popcount(words_); }

bool BitVector::none() const { return simd::active_kernels().is_zero(words_); }

bool BitVector::dot(const BitVector& other) const {
    require_same_size(other, "dot");
    return simd::active_kernels().and_parity(words_, other.words_);
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            const int tz = __builtin_ctzll(bits);
            out.push_back(w * kWordBits + static_cast<std::size_t>(tz));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (auto i : support()) s[i] = '1';
    return s;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector out(len_ + tail.len_);
    for (auto i : support()) out.set(i);
    for (auto i : tail.support()) out.set(len_ + i);
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > len_) throw std::out_of_range("BitVector slice out of range");
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i)
        if (test(begin + i)) out.set(i);
    return out;
}

bool support_less(const BitVector& a, const BitVector& b) {
    const auto sa = a.support();
    const auto sb = b.support();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

bool weight_then_support_less(const BitVector& a, const BitVector& b) {
    const auto wa = a.weight();
    const auto wb = b.weight();
    if (wa != wb) return wa < wb;
    return support_less(a, b);
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::vector<BitVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix rows must all have length cols");
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> out;
    for (auto r : rows) out.push_back(BitVector::from_string(r));
    const std::size_t cols = out.empty() ? 0 : out.front().size();
    return BitMatrix(std::move(out), cols);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::vstack(const BitMatrix& below) const {
    if (below.cols_ != cols_) throw std::invalid_argument("vstack: column mismatch");
    BitMatrix out = *this;
    for (const auto& r : below.rows_) out.rows_.push_back(r);
    return out;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& right) const {
    if (right.rows() != rows()) throw std::invalid_argument("hconcat: row mismatch");
    std::vector<BitVector> out;
    out.reserve(rows());
    for (std::size_t i = 0; i < rows(); ++i) out.push_back(rows_[i].concat(right.rows_[i]));
    return BitMatrix(std::move(out), cols_ + right.cols_);
}

BitMatrix BitMatrix::pad_right(std::size_t pad) const { return hconcat(BitMatrix(rows(), pad)); }

BitMatrix BitMatrix::pad_left(std::size_t pad) const { return BitMatrix(rows(), pad).hconcat(*this); }

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------

std::size_t rank(const BitMatrix& m) { return RowReducer(m).rank(); }

BitMatrix mat_mul_t(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("mat_mul_t: A.cols != B.cols");
    BitMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j)
            if (a.row(i).dot(b.row(j))) out.set(i, j);
    return out;
}

RowReducer::RowReducer(const BitMatrix& a) : n_rows_(a.rows()), cols_(a.cols()) {
    std::vector<BitVector> rows = a.row_list();
    std::vector<BitVector> combos;
    combos.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BitVector c(n_rows_);
        c.set(i);
        combos.push_back(std::move(c));
    }
    std::vector<bool> used(rows.size(), false);
    for (std::size_t col = 0; col < cols_ && pivots_.size() < rows.size(); ++col) {
        std::size_t pick = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!used[r] && rows[r].test(col)) {
                pick = r;
                break;
            }
        }
        if (pick == rows.size()) continue;
        used[pick] = true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pick && rows[r].test(col)) {
                rows[r] ^= rows[pick];
                combos[r] ^= combos[pick];
            }
        }
        pivots_.push_back({col, rows[pick], combos[pick]});
    }
}

std::optional<BitVector> RowReducer::express(const BitVector& b) const {
    if (b.size() != cols_) throw std::invalid_argument("solve: b.len != A.cols");
    BitVector rest = b;
    BitVector x(n_rows_);
    for (const auto& p : pivots_) {
        if (rest.test(p.col)) {
            rest ^= p.row;
            x ^= p.combo;
        }
    }
    if (rest.any()) return std::nullopt;
    return x;
}

bool RowReducer::contains(const BitVector& b) const { return express(b).has_value(); }

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) { return RowReducer(a).express(b); }

BitMatrix nullspace(const BitMatrix& a) {
    // Reduced row echelon form, then one basis vector per free column.
    std::vector<BitVector> rows = a.row_list();
    std::vector<std::size_t> pivot_cols;
    std::size_t next = 0;
    for (std::size_t col = 0; col < a.cols() && next < rows.size(); ++col) {
        std::size_t pick = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r].test(col)) {
                pick = r;
                break;
            }
        }
        if (pick == rows.size()) continue;
        std::swap(rows[next], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].test(col)) rows[r] ^= rows[next];
        pivot_cols.push_back(col);
        ++next;
    }
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    BitMatrix basis(0, a.cols());
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(a.cols());
        v.set(free);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            if (rows[k].test(free)) v.set(pivot_cols[k]);
        basis.append_row(std::move(v));
    }
    return basis;
}

}  // namespace rmconv
