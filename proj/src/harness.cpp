#include "rmconv/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "rmconv/dense.hpp"

namespace rmconv {
namespace {

constexpr double fidelity_tol = 1e-9;
constexpr double prob_tol = 1e-9;

// Uniform double in [0,1) from the top 53 bits; portable across libstdc++/libc++.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::pair<Amplitude, Amplitude> random_qubit(std::mt19937_64& rng) {
    const double pi = std::acos(-1.0);
    const double theta = std::acos(1 - 2 * unit(rng));
    const double phi = 2 * pi * unit(rng);
    return {Amplitude(std::cos(theta / 2), 0), std::polar(std::sin(theta / 2), phi)};
}

}  // namespace

std::vector<PauliOperator> single_error_list(std::size_t n) {
    std::vector<PauliOperator> out{PauliOperator::identity(n)};
    for (std::size_t q = 1; q <= n; ++q)
        for (char c : {'X', 'Y', 'Z'}) out.push_back(PauliOperator::single(n, q, c).unsigned_hermitian());
    return out;
}

std::vector<std::vector<bool>> branch_list(std::size_t k) {
    std::vector<std::vector<bool>> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
        std::vector<bool> bits(k);
        for (std::size_t i = 0; i < k; ++i) bits[i] = ((b >> (k - 1 - i)) & 1U) != 0;
        out.push_back(std::move(bits));
    }
    return out;
}

std::string bits_string(const std::vector<bool>& bits) {
    std::string s;
    for (bool b : bits) s += b ? '1' : '0';
    return s;
}

SweepResult sweep(int m, Direction direction, Mode mode, unsigned threads) {
    const Converter conv(direction, m, mode);
    const auto errors = single_error_list(conv.input_frame().n());
    const auto branches = branch_list(conv.plan().gauge_row_count());

    SweepResult res;
    res.m = m;
    res.direction = direction;
    res.mode = mode;
    res.error_count = errors.size();
    res.branch_count = branches.size();
    res.cases.resize(errors.size() * branches.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < res.cases.size(); i = next++) {
            SweepCase& c = res.cases[i];
            c.error = errors[i / branches.size()];
            c.branch = branches[i % branches.size()];
            c.report = conv.run(c.error, BranchPolicy::bits(c.branch));
            c.passed = c.report.passed();
        }
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, res.cases.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (const auto& c : res.cases) {
        (c.passed ? res.passed : res.failed)++;
        if (c.error.is_identity() && c.report.fixing_is_identity()) ++res.identity_fix_branches;
    }
    return res;
}

CrossValidation cross_validate(std::size_t trials, std::uint64_t seed) {
    constexpr int m = 3;
    std::mt19937_64 rng(seed);
    CrossValidation cv;
    const Converter converters[2][2] = {
        {Converter(Direction::forward, m, Mode::full), Converter(Direction::forward, m, Mode::ft)},
        {Converter(Direction::backward, m, Mode::full), Converter(Direction::backward, m, Mode::ft)}};
    const CssCode source[2] = {extended_code(m), rm_code(m + 1)};
    const CssCode target[2] = {rm_code(m + 1), rm_code(m)};

    for (std::size_t t = 0; t < trials; ++t) {
        const int d = static_cast<int>(rng() & 1U);
        const int md = static_cast<int>(rng() & 1U);
        const Converter& conv = converters[d][md];
        const auto errors = single_error_list(source[d].n);
        const PauliOperator error = errors[rng() % errors.size()];
        std::vector<bool> branch(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < branch.size(); ++i) branch[i] = (rng() & 1U) != 0;
        const auto [alpha, beta] = random_qubit(rng);
        ++cv.trials;

        const auto tag = fmt::format("trial {} {} {} error={} branch={}", t, to_string(conv.direction()),
                                     to_string(conv.mode()), error_label(error), bits_string(branch));
        const ConversionReport rep = conv.run(error, BranchPolicy::bits(branch));

        DenseState psi = dense_encode(alpha, beta, source[d]);
        psi.apply_pauli(error);
        bool outcomes_ok = true;
        try {
            for (std::size_t i = 0; i < rep.measurements.size(); ++i) {
                const bool outcome = rep.raw_syndromes[i].value;
                const double p = psi.project(rep.measurements[i].op, outcome);
                const double want = rep.deterministic[i] ? 1.0 : 0.5;
                (rep.deterministic[i] ? cv.forced_outcomes : cv.free_outcomes)++;
                if (std::abs(p - want) > prob_tol) {
                    ++cv.outcome_mismatches;
                    outcomes_ok = false;
                    cv.failures.push_back(fmt::format("{}: {} outcome {} has probability {}", tag,
                                                      rep.measurements[i].label, outcome, p));
                }
            }
        } catch (const std::domain_error& e) {
            ++cv.outcome_mismatches;
            cv.failures.push_back(fmt::format("{}: {}", tag, e.what()));
            continue;
        }
        psi.apply_pauli(rep.correction);

        DenseState want = dense_encode(alpha, beta, target[d]);
        want.apply_pauli(rep.residual_error);
        const double f = d == 0 ? fidelity(want, psi) : block_fidelity(psi, want);
        cv.min_fidelity = std::min(cv.min_fidelity, f);
        const bool ok = outcomes_ok && rep.passed() && f >= 1 - fidelity_tol;
        if (ok)
            ++cv.passed;
        else
            cv.failures.push_back(fmt::format("{}: fidelity {:.12f} passed={}", tag, f, rep.passed()));
    }
    return cv;
}

CrossValidation engine_oracle_sequences(std::size_t trials, std::uint64_t seed) {
    constexpr int m = 3;
    constexpr int steps = 12;
    std::mt19937_64 rng(seed);
    CrossValidation cv;
    const CssCode code = extended_code(m);
    const std::size_t n = code.n;

    auto random_pauli = [&](std::size_t max_weight) {
        PauliOperator p = PauliOperator::identity(n);
        const std::size_t w = 1 + rng() % max_weight;
        for (std::size_t k = 0; k < w; ++k) p *= PauliOperator::single(n, 1 + rng() % n, "XYZ"[rng() % 3]);
        return p.unsigned_hermitian();
    };

    for (std::size_t t = 0; t < trials; ++t) {
        ++cv.trials;
        const auto [alpha, beta] = random_qubit(rng);
        StabilizerFrame frame = StabilizerFrame::from_code(code);
        DenseState psi = dense_encode(alpha, beta, code);
        bool ok = true;
        for (int s = 0; s < steps && ok; ++s) {
            const auto kind = rng() % 3;
            if (kind == 0) {
                const auto p = random_pauli(3);
                frame.apply_pauli(p);
                psi.apply_pauli(p);
                continue;
            }
            PauliOperator p = PauliOperator::identity(n);
            if (kind == 1) {
                // Product of current generators: always deterministic.
                for (const auto& g : frame.generators())
                    if (rng() & 1U) p *= g;
                if (rng() & 1U) p *= random_pauli(2);
            } else {
                p = random_pauli(6);
            }
            p = p.is_hermitian() ? p : p.unsigned_hermitian();
            if (p.is_identity()) continue;
            MeasurementResult r;
            const bool bit = (rng() & 1U) != 0;
            try {
                r = frame.measure(p, BranchChoice::forced(bit));
            } catch (const std::domain_error&) {
                continue;  // would reveal the logical state
            }
            double prob = 0;
            try {
                prob = psi.project(p, r.outcome);
            } catch (const std::domain_error&) {
                prob = 0;
            }
            const double want = r.deterministic ? 1.0 : 0.5;
            (r.deterministic ? cv.forced_outcomes : cv.free_outcomes)++;
            if (std::abs(prob - want) > prob_tol) {
                ++cv.outcome_mismatches;
                ok = false;
                cv.failures.push_back(fmt::format("sequence {} step {}: {} outcome {} probability {}", t, s,
                                                  p.to_string(), r.outcome, prob));
            }
        }
        if (ok) {
            for (const auto& g : frame.generators())
                if (std::abs(psi.expectation(g) - 1) > prob_tol) ok = false;
            const double ex = 2 * (std::conj(alpha) * beta).real();
            const double ez = std::norm(alpha) - std::norm(beta);
            if (std::abs(psi.expectation(frame.logical_x()) - ex) > prob_tol) ok = false;
            if (std::abs(psi.expectation(frame.logical_z()) - ez) > prob_tol) ok = false;
            if (!ok) cv.failures.push_back(fmt::format("sequence {}: final frame disagrees with dense state", t));
        }
        if (ok) ++cv.passed;
    }
    return cv;
}

TransversalReport transversal_checks(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TransversalReport rep;
    const double r = 1 / std::sqrt(2.0);

    std::vector<std::pair<Amplitude, Amplitude>> states{{1, 0}, {0, 1}, {r, r}, {r, Amplitude(0, r)}};
    for (int i = 0; i < 6; ++i) states.push_back(random_qubit(rng));

    const CssCode steane = rm_code(3);
    rep.hadamard_min_fidelity = 1;
    for (const auto& [a, b] : states) {
        DenseState s = dense_encode(a, b, steane);
        s.apply_hadamard_all();
        const DenseState want = dense_encode((a + b) * r, (a - b) * r, steane);
        rep.hadamard_min_fidelity = std::min(rep.hadamard_min_fidelity, fidelity(want, s));
    }
    rep.hadamard_ok = rep.hadamard_min_fidelity >= 1 - fidelity_tol;

    const CssCode rm4 = rm_code(4);
    {
        DenseState s = dense_encode(1, 0, rm4);
        s.apply_t_all();
        rep.t_zero_fidelity = fidelity(dense_encode(1, 0, rm4), s);
    }
    const Amplitude t_phase = std::polar(1.0, std::acos(-1.0) / 4);
    rep.t_min_fidelity = 1;
    std::string answer;
    bool stable = true;
    for (const auto& [a, b] : states) {
        DenseState s = dense_encode(a, b, rm4);
        s.apply_t_all();
        const double ft = fidelity(dense_encode(a, b * t_phase, rm4), s);
        const double ftd = fidelity(dense_encode(a, b * std::conj(t_phase), rm4), s);
        const bool basis_state = std::abs(a) < 1e-12 || std::abs(b) < 1e-12;
        std::string here;
        if (ft >= 1 - fidelity_tol && ftd < 1 - fidelity_tol) here = "T";
        if (ftd >= 1 - fidelity_tol && ft < 1 - fidelity_tol) here = "T†";
        if (basis_state) {
            // Both candidates agree on |0̄⟩ and |1̄⟩ up to global phase.
            if (std::max(ft, ftd) < 1 - fidelity_tol) stable = false;
            continue;
        }
        if (here.empty()) {
            stable = false;
            continue;
        }
        if (answer.empty()) answer = here;
        if (here != answer) stable = false;
        rep.t_min_fidelity = std::min(rep.t_min_fidelity, std::max(ft, ftd));
    }
    rep.t_logical = answer.empty() ? "none" : answer;
    rep.t_stable = stable && !answer.empty();
    return rep;
}

}  // namespace rmconv
