#include "rmconv/stabilizer.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace rmconv {

StabilizerFrame::StabilizerFrame(std::vector<PauliOperator> generators, PauliOperator logical_x,
                                 PauliOperator logical_z)
    : generators_(std::move(generators)), logical_x_(std::move(logical_x)), logical_z_(std::move(logical_z)) {
    try {
        check_invariants();
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(e.what());
    }
}

StabilizerFrame StabilizerFrame::from_code(const CssCode& code) {
    return StabilizerFrame(code.generators(), code.logical_x, code.logical_z);
}

void StabilizerFrame::check_invariants() const {
    const std::size_t n = logical_x_.n();
    if (logical_z_.n() != n) throw std::logic_error("frame: logical size mismatch");
    if (generators_.size() + 1 != n)
        throw std::logic_error(fmt::format("frame: {} generators for {} qubits", generators_.size(), n));
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.n() != n) throw std::logic_error("frame: generator size mismatch");
        if (!g.is_hermitian()) throw std::logic_error("frame: non-Hermitian generator");
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (!g.commutes(generators_[j])) throw std::logic_error("frame: generators do not commute");
        if (!g.commutes(logical_x_) || !g.commutes(logical_z_))
            throw std::logic_error("frame: logical anticommutes with a generator");
    }
    if (logical_x_.commutes(logical_z_)) throw std::logic_error("frame: logicals commute");
    BitMatrix rows(0, 2 * n);
    for (const auto& g : generators_) rows.append_row(symplectic_vector(g));
    if (rank(rows) != generators_.size()) throw std::logic_error("frame: dependent generators");
    // A −1-free group: every generator is its own signed product, so checking
    // independence plus Hermitian generators suffices.
}

void StabilizerFrame::apply_pauli(const PauliOperator& p) {
    if (p.n() != n()) throw std::invalid_argument("apply_pauli: size mismatch");
    for (auto& g : generators_)
        if (!g.commutes(p)) g = g.negated();
    if (!logical_x_.commutes(p)) logical_x_ = logical_x_.negated();
    if (!logical_z_.commutes(p)) logical_z_ = logical_z_.negated();
}

std::optional<int> StabilizerFrame::expectation(const PauliOperator& p) const {
    if (p.n() != n()) throw std::invalid_argument("expectation: size mismatch");
    BitMatrix rows(0, 2 * n());
    for (const auto& g : generators_) rows.append_row(symplectic_vector(g));
    const auto combo = solve(rows, symplectic_vector(p));
    if (!combo) return std::nullopt;
    PauliOperator product = PauliOperator::identity(n());
    for (auto i : combo->support()) product *= generators_[i];
    // product and p share x|z; their phases differ by 0 (same sign) or 2.
    return product.phase() == p.phase() ? 1 : -1;
}

bool StabilizerFrame::is_deterministic(const PauliOperator& p) const {
    for (const auto& g : generators_)
        if (!g.commutes(p)) return false;
    return true;
}

MeasurementResult StabilizerFrame::measure(const PauliOperator& p, BranchChoice branch) {
    if (p.n() != n()) throw std::invalid_argument("measure: size mismatch");
    if (!p.is_hermitian()) throw std::invalid_argument("measure: operator is not Hermitian");

    std::vector<std::size_t> anti;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (!generators_[i].commutes(p)) anti.push_back(i);

    if (anti.empty()) {
        if (!p.commutes(logical_x_) || !p.commutes(logical_z_))
            throw std::domain_error("measure: operator acts on the encoded qubit: " + p.to_string());
        const auto e = expectation(p);
        if (!e) throw std::logic_error("measure: commuting operator outside the group");
        return {*e < 0, true};
    }

    const std::size_t pivot = anti.front();
    const PauliOperator g = generators_[pivot];
    for (std::size_t k = 1; k < anti.size(); ++k) generators_[anti[k]] *= g;
    if (!logical_x_.commutes(p)) logical_x_ *= g;
    if (!logical_z_.commutes(p)) logical_z_ *= g;

    const bool outcome = branch.draw();
    const PauliOperator plus = p.unsigned_hermitian();
    const PauliOperator signed_p = p.sign() > 0 ? plus : plus.negated();
    generators_[pivot] = outcome ? signed_p.negated() : signed_p;
    return {outcome, false};
}

std::optional<StabilizerFrame> StabilizerFrame::restrict_to_code(const CssCode& code, std::size_t begin) const {
    if (begin + code.n > n()) throw std::invalid_argument("restrict_to_code: block out of range");
    const std::size_t after = n() - begin - code.n;
    std::vector<PauliOperator> gens;
    for (const auto& g : code.generators()) {
        const auto e = expectation(g.padded(begin, after));
        if (!e) return std::nullopt;
        gens.push_back(*e > 0 ? g : g.negated());
    }
    const auto ex = expectation(logical_x_ * code.logical_x.padded(begin, after));
    const auto ez = expectation(logical_z_ * code.logical_z.padded(begin, after));
    if (!ex || !ez) return std::nullopt;
    return StabilizerFrame(std::move(gens), *ex > 0 ? code.logical_x : code.logical_x.negated(),
                           *ez > 0 ? code.logical_z : code.logical_z.negated());
}

StabilizerFrame prepare_extended(int m) { return StabilizerFrame::from_code(extended_code(m)); }

std::pair<StabilizerFrame, MeasurementResult> measure(StabilizerFrame frame, const PauliOperator& p,
                                                      BranchChoice branch) {
    const auto r = frame.measure(p, branch);
    return {std::move(frame), r};
}

StabilizerFrame apply_pauli(StabilizerFrame frame, const PauliOperator& p) {
    frame.apply_pauli(p);
    return frame;
}

std::vector<Branch> branch_enumerate(const StabilizerFrame& frame, const std::vector<PauliOperator>& ops) {
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (!ops[i].commutes(ops[j])) throw std::invalid_argument("branch_enumerate: operators do not commute");

    std::vector<Branch> branches{Branch{{}, {}, frame}};
    for (const auto& op : ops) {
        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (auto& b : branches) {
            if (b.frame.is_deterministic(op)) {
                const auto r = b.frame.measure(op, BranchChoice::forced(false));
                b.outcomes.push_back(r.outcome);
                b.random.push_back(false);
                next.push_back(std::move(b));
                continue;
            }
            for (bool bit : {false, true}) {
                Branch child = b;
                child.frame.measure(op, BranchChoice::forced(bit));
                child.outcomes.push_back(bit);
                child.random.push_back(true);
                next.push_back(std::move(child));
            }
        }
        branches = std::move(next);
    }
    return branches;
}

}  // namespace rmconv
