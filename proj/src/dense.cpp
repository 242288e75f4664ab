#include "rmconv/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace rmconv {
namespace {

std::uint64_t mask_of(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

Amplitude i_pow(unsigned k) {
    switch (k & 3U) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

void require_n(std::size_t got, std::size_t want) {
    if (got != want) throw std::invalid_argument(fmt::format("dense: operator on {} qubits, state on {}", got, want));
}

// P|ψ⟩ as a new amplitude vector.
std::vector<Amplitude> applied(const std::vector<Amplitude>& amps, const PauliOperator& p) {
    const std::uint64_t x = mask_of(p.x());
    const std::uint64_t z = mask_of(p.z());
    const Amplitude ph = i_pow(p.phase());
    std::vector<Amplitude> out(amps.size());
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        const Amplitude a = (std::popcount(b & z) & 1) ? -amps[b] : amps[b];
        out[b ^ x] = ph * a;
    }
    return out;
}

}  // namespace

DenseState::DenseState(std::size_t n) : n_(n) {
    if (n > dense_qubit_cap)
        throw std::invalid_argument(fmt::format("dense state limited to {} qubits (got {})", dense_qubit_cap, n));
    amps_.assign(std::size_t{1} << n, Amplitude{0, 0});
    amps_[0] = 1;
}

double DenseState::norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void DenseState::normalize() {
    const double nrm = norm();
    if (nrm == 0) throw std::domain_error("dense: cannot normalize the zero vector");
    for (auto& a : amps_) a /= nrm;
}

void DenseState::apply_pauli(const PauliOperator& p) {
    require_n(p.n(), n_);
    amps_ = applied(amps_, p);
}

double DenseState::expectation(const PauliOperator& p) const {
    require_n(p.n(), n_);
    const auto pa = applied(amps_, p);
    Amplitude s = 0;
    for (std::size_t b = 0; b < amps_.size(); ++b) s += std::conj(amps_[b]) * pa[b];
    return s.real();
}

double DenseState::probability(const PauliOperator& p, bool outcome) const {
    const double e = expectation(p);
    return outcome ? (1 - e) / 2 : (1 + e) / 2;
}

double DenseState::project(const PauliOperator& p, bool outcome) {
    require_n(p.n(), n_);
    if (!p.is_hermitian()) throw std::invalid_argument("dense: projector needs a Hermitian Pauli");
    const auto pa = applied(amps_, p);
    const double s = outcome ? -1.0 : 1.0;
    for (std::size_t b = 0; b < amps_.size(); ++b) amps_[b] = (amps_[b] + s * pa[b]) / 2.0;
    const double prob = norm() * norm();
    if (prob < 1e-12) throw std::domain_error("dense: projected onto a zero-probability outcome");
    normalize();
    return prob;
}

void DenseState::apply_hadamard_all() {
    const double r = 1 / std::sqrt(2.0);
    for (std::size_t h = 1; h < amps_.size(); h <<= 1)
        for (std::size_t i = 0; i < amps_.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const Amplitude a = amps_[j], b = amps_[j + h];
                amps_[j] = (a + b) * r;
                amps_[j + h] = (a - b) * r;
            }
}

void DenseState::apply_t_all(bool dagger) {
    const double step = (dagger ? -1.0 : 1.0) * std::acos(-1.0) / 4;
    for (std::uint64_t b = 0; b < amps_.size(); ++b) amps_[b] *= std::polar(1.0, step * std::popcount(b));
}

double fidelity(const DenseState& a, const DenseState& b) {
    require_n(a.n(), b.n());
    Amplitude s = 0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return std::norm(s);
}

std::vector<Amplitude> reduced_density(const DenseState& s, std::size_t begin, std::size_t count) {
    if (begin + count > s.n()) throw std::invalid_argument("reduced_density: block outside the register");
    const std::size_t dim = std::size_t{1} << count;
    const std::uint64_t block = (dim - 1) << begin;
    std::vector<Amplitude> rho(dim * dim);
    const auto& amps = s.amplitudes();
    // Group basis states by their environment bits.
    for (std::uint64_t env = 0; env < amps.size(); ++env) {
        if (env & block) continue;
        for (std::size_t a = 0; a < dim; ++a) {
            const Amplitude va = amps[env | (a << begin)];
            if (va == Amplitude{}) continue;
            for (std::size_t b = 0; b < dim; ++b) rho[a * dim + b] += va * std::conj(amps[env | (b << begin)]);
        }
    }
    return rho;
}

double block_fidelity(const DenseState& s, const DenseState& psi) {
    if (psi.n() > s.n()) throw std::invalid_argument("block_fidelity: target larger than register");
    const std::size_t dim = std::size_t{1} << psi.n();
    const auto& amps = s.amplitudes();
    double f = 0;
    for (std::size_t env = 0; env < amps.size(); env += dim) {
        Amplitude overlap = 0;
        for (std::size_t a = 0; a < dim; ++a) overlap += std::conj(psi.amplitudes()[a]) * amps[env + a];
        f += std::norm(overlap);
    }
    return f;
}

DenseState dense_encode(Amplitude alpha, Amplitude beta, const CssCode& code) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1) > 1e-9)
        throw std::invalid_argument("dense_encode: |alpha|^2 + |beta|^2 must be 1");
    DenseState zero(code.n);
    std::vector<std::uint64_t> span{0};
    for (const auto& s : code.x_stabs) {
        const std::uint64_t g = mask_of(s.op.x());
        const std::size_t k = span.size();
        // Dependent generators only repeat entries; the amplitude fill below is idempotent.
        for (std::size_t i = 0; i < k; ++i) span.push_back(span[i] ^ g);
    }
    auto& amps = zero.amplitudes();
    amps[0] = 0;
    for (auto v : span) amps[v] = 1;
    zero.normalize();
    DenseState one = zero;
    one.apply_pauli(code.logical_x);
    DenseState out(code.n);
    for (std::size_t b = 0; b < amps.size(); ++b)
        out.amplitudes()[b] = alpha * zero.amplitudes()[b] + beta * one.amplitudes()[b];
    return out;
}

}  // namespace rmconv
