#include "rmconv/pauli.hpp"

#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

#include "rmconv/simd/bit_kernels.hpp"

namespace rmconv {

PauliOperator::PauliOperator(std::size_t n) : x_(n), z_(n) {}

PauliOperator::PauliOperator(BitVector x, BitVector z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3U) {
    if (x_.size() != z_.size()) throw std::invalid_argument("PauliOperator: x/z length mismatch");
}

PauliOperator PauliOperator::from_row(const BitVector& row, PauliKind kind) {
    if (kind == PauliKind::x) return PauliOperator(row, BitVector(row.size()));
    return PauliOperator(BitVector(row.size()), row);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char letter) {
    if (qubit == 0 || qubit > n) throw std::out_of_range("qubit index out of range");
    PauliOperator p(n);
    switch (std::toupper(static_cast<unsigned char>(letter))) {
        case 'I':
            break;
        case 'X':
            p.x_.set(qubit - 1);
            break;
        case 'Z':
            p.z_.set(qubit - 1);
            break;
        case 'Y':
            p.x_.set(qubit - 1);
            p.z_.set(qubit - 1);
            p.phase_ = 1;
            break;
        default:
            throw std::invalid_argument(fmt::format("unknown Pauli letter '{}'", letter));
    }
    return p;
}

PauliOperator PauliOperator::parse(std::size_t n, std::string_view text) {
    PauliOperator out(n);
    bool negative = false;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
        skip_space();
    }
    while (i < text.size()) {
        const char letter = text[i++];
        std::size_t q = 0;
        bool digits = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            q = q * 10 + static_cast<std::size_t>(text[i++] - '0');
            digits = true;
        }
        if (!digits) {
            if (std::toupper(static_cast<unsigned char>(letter)) == 'I') {
                skip_space();
                continue;
            }
            throw std::invalid_argument(fmt::format("malformed Pauli text '{}'", text));
        }
        out *= single(n, q, letter);
        skip_space();
    }
    return negative ? out.negated() : out;
}

void PauliOperator::require_same_n(const PauliOperator& other, const char* what) const {
    if (other.n() != n())
        throw std::invalid_argument(fmt::format("{}: qubit count mismatch ({} vs {})", what, n(), other.n()));
}

std::size_t PauliOperator::weight() const {
    BitVector both = x_;
    for (std::size_t w = 0; w < both.words().size(); ++w) both.mutable_words()[w] |= z_.words()[w];
    return both.weight();
}

bool PauliOperator::is_identity() const { return x_.none() && z_.none(); }

bool PauliOperator::is_hermitian() const {
    const auto ys = simd::active_kernels().and_popcount(x_.words(), z_.words());
    return ((phase_ + ys) & 1U) == 0;
}

int PauliOperator::sign() const {
    if (!is_hermitian()) throw std::logic_error("sign() of a non-Hermitian Pauli");
    const auto ys = static_cast<unsigned>(simd::active_kernels().and_popcount(x_.words(), z_.words()));
    // X·Z = −i·Y, so i^phase (XZ)^{#y} = i^{phase − #y} · (letters).
    return ((phase_ + 4U - (ys & 3U)) & 3U) == 0 ? 1 : -1;
}

bool PauliOperator::commutes(const PauliOperator& other) const {
    require_same_n(other, "commutes");
    return !simd::active_kernels().symplectic_parity(x_.words(), z_.words(), other.x_.words(),
                                                     other.z_.words());
}

PauliOperator PauliOperator::operator*(const PauliOperator& rhs) const {
    PauliOperator out = *this;
    out *= rhs;
    return out;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
    require_same_n(rhs, "multiply");
    // Moving Z^{z1} past X^{x2} costs (−1)^{z1·x2}.
    const auto swaps = simd::active_kernels().and_popcount(z_.words(), rhs.x_.words());
    phase_ = static_cast<unsigned>((phase_ + rhs.phase_ + 2 * swaps) & 3U);
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

PauliOperator PauliOperator::negated() const { return PauliOperator(x_, z_, phase_ + 2); }

PauliOperator PauliOperator::unsigned_hermitian() const {
    const auto ys = static_cast<unsigned>(simd::active_kernels().and_popcount(x_.words(), z_.words()));
    return PauliOperator(x_, z_, ys & 3U);
}

PauliOperator PauliOperator::restricted(std::size_t begin, std::size_t count) const {
    return PauliOperator(x_.slice(begin, count), z_.slice(begin, count)).unsigned_hermitian();
}

PauliOperator PauliOperator::padded(std::size_t before, std::size_t after) const {
    BitVector x = BitVector(before).concat(x_).concat(BitVector(after));
    BitVector z = BitVector(before).concat(z_).concat(BitVector(after));
    return PauliOperator(std::move(x), std::move(z), phase_);
}

char PauliOperator::letter(std::size_t q) const {
    const bool xb = x_.test(q);
    const bool zb = z_.test(q);
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
}

std::string PauliOperator::to_string() const {
    std::string prefix;
    if (is_hermitian()) {
        if (sign() < 0) prefix = "-";
    } else {
        const auto ys = static_cast<unsigned>(simd::active_kernels().and_popcount(x_.words(), z_.words()));
        prefix = ((phase_ + 4U - (ys & 3U)) & 3U) == 1 ? "i" : "-i";
    }
    if (is_identity()) return prefix + "I";
    std::string body;
    for (std::size_t q = 0; q < n(); ++q) {
        const char c = letter(q);
        if (c == 'I') continue;
        if (!body.empty()) body += ' ';
        body += fmt::format("{}{}", c, q + 1);
    }
    return prefix + body;
}

BitVector symplectic_vector(const PauliOperator& p) { return p.x().concat(p.z()); }

}  // namespace rmconv
