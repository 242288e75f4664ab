#include "rmconv/conversion.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace rmconv {
namespace {

struct Simplified {
    BitVector remainder;
    std::vector<std::size_t> combo;  // indices into the searched list
};

struct SearchKey {
    std::size_t weight;
    std::size_t size;
    std::vector<std::size_t> support;

    bool operator<(const SearchKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (size != o.size) return size < o.size;
        return std::lexicographical_compare(support.begin(), support.end(), o.support.begin(), o.support.end());
    }
};

// Lightest target ⊕ (sum of a subset of `measured`). Subsets are visited by
// increasing size, lexicographically within a size, until `cap` candidates
// have been seen. Ties prefer fewer members, then the smaller support.
Simplified simplify(const BitVector& target, const std::vector<BitVector>& measured, std::size_t cap) {
    Simplified best{target, {}};
    SearchKey best_key{target.weight(), 0, target.support()};
    std::size_t seen = 1;

    std::vector<std::size_t> combo;
    auto visit = [&](auto&& self, std::size_t start, std::size_t left, const BitVector& acc) -> void {
        if (seen >= cap) return;
        if (left == 0) {
            ++seen;
            SearchKey key{acc.weight(), combo.size(), acc.support()};
            if (key < best_key) {
                best_key = std::move(key);
                best = {acc, combo};
            }
            return;
        }
        for (std::size_t i = start; i + left <= measured.size(); ++i) {
            combo.push_back(i);
            self(self, i + 1, left - 1, acc ^ measured[i]);
            combo.pop_back();
            if (seen >= cap) return;
        }
    };
    for (std::size_t k = 1; k <= measured.size() && seen < cap; ++k) visit(visit, 0, k, target);
    return best;
}

std::string measurement_label(Direction d, std::size_t one_based) {
    return d == Direction::forward ? fmt::format("S{}", one_based) : fmt::format("S'{}", one_based);
}

std::string g_row_label(int m, std::size_t row, PauliKind kind) {
    return fmt::format("S(1,{})_{}^{}", m, row, kind == PauliKind::x ? "X" : "Z");
}

bool anticommutes_with_all_as_flagged(const PauliOperator& p, const FixingProblem& problem,
                                      const std::vector<bool>& flagged) {
    for (std::size_t k = 0; k < problem.gauge_rows.size(); ++k)
        if (p.commutes(problem.gauge_rows[k]) == flagged[k]) return false;
    return std::all_of(problem.must_commute.begin(), problem.must_commute.end(),
                       [&](const PauliOperator& c) { return p.commutes(c); });
}

BitVector qubit_support(const PauliOperator& p) {
    BitVector s = p.x();
    for (std::size_t w = 0; w < s.words().size(); ++w) s.mutable_words()[w] |= p.z().words()[w];
    return s;
}

struct Assessment {
    bool deterministic = true;
    std::vector<bool> syndrome;
    bool flip_x = false;
    bool flip_z = false;

    bool clean() const {
        return deterministic && !flip_x && !flip_z && std::none_of(syndrome.begin(), syndrome.end(), [](bool b) { return b; });
    }
};

Assessment assess(const StabilizerFrame& frame, const CssCode& code) {
    Assessment a;
    for (const auto& g : code.generators()) {
        const auto e = frame.expectation(g);
        if (!e) {
            a.deterministic = false;
            a.syndrome.push_back(false);
            continue;
        }
        a.syndrome.push_back(*e < 0);
    }
    const auto ex = frame.expectation(frame.logical_x() * code.logical_x);
    const auto ez = frame.expectation(frame.logical_z() * code.logical_z);
    if (!ex || !ez) {
        a.deterministic = false;
        return a;
    }
    a.flip_x = *ex < 0;
    a.flip_z = *ez < 0;
    return a;
}

// Pauli whose commutation with the code's generators and logicals reproduces
// the assessment: the frame equals this operator applied to the ideal state.
PauliOperator explain(const Assessment& a, const CssCode& code) {
    const std::size_t n = code.n;
    std::vector<PauliOperator> constraints = code.generators();
    std::vector<bool> target = a.syndrome;
    constraints.push_back(code.logical_x);
    target.push_back(a.flip_x);
    constraints.push_back(code.logical_z);
    target.push_back(a.flip_z);

    BitMatrix vars(2 * n, constraints.size());
    for (std::size_t c = 0; c < constraints.size(); ++c) {
        for (auto q : constraints[c].z().support()) vars.set(q, c);
        for (auto q : constraints[c].x().support()) vars.set(n + q, c);
    }
    BitVector t(constraints.size());
    for (std::size_t c = 0; c < target.size(); ++c) t.set(c, target[c]);
    const auto sol = solve(vars, t);
    if (!sol) throw std::logic_error("explain: inconsistent code constraints");
    return PauliOperator(sol->slice(0, n), sol->slice(n, n)).unsigned_hermitian();
}

// Single-qubit (or identity) error with the given syndrome, if any.
std::optional<PauliOperator> lookup_single(const std::vector<bool>& syndrome, const CssCode& code) {
    const auto gens = code.generators();
    auto matches = [&](const PauliOperator& e) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].commutes(e) == syndrome[i]) return false;
        return true;
    };
    const PauliOperator id = PauliOperator::identity(code.n);
    if (matches(id)) return id;
    for (std::size_t q = 1; q <= code.n; ++q)
        for (char c : {'X', 'Y', 'Z'}) {
            auto e = PauliOperator::single(code.n, q, c);
            if (matches(e)) return e.unsigned_hermitian();
        }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::forward ? "forward" : "backward"; }
std::string_view to_string(Mode m) { return m == Mode::full ? "full" : "ft"; }

std::string_view to_string(MeasurementRole r) {
    switch (r) {
        case MeasurementRole::gauge:
            return "gauge";
        case MeasurementRole::remainder:
            return "remainder";
        case MeasurementRole::split:
            return "split";
        case MeasurementRole::diagnostic:
            return "diagnostic";
    }
    return "";
}

std::vector<PlannedMeasurement> SyndromePlan::measurements() const {
    std::vector<PlannedMeasurement> all = gauge_measurements;
    all.insert(all.end(), diagnostic_measurements.begin(), diagnostic_measurements.end());
    return all;
}

std::size_t SyndromePlan::measurement_count() const {
    return gauge_measurements.size() + diagnostic_measurements.size();
}

std::size_t SyndromePlan::total_weight() const {
    std::size_t w = 0;
    for (const auto& p : gauge_measurements) w += p.op.weight();
    for (const auto& p : diagnostic_measurements) w += p.op.weight();
    return w;
}

SyndromePlan build_plan(Direction direction, int m, Mode mode, bool split) {
    if (m < 3) throw std::invalid_argument(fmt::format("build_plan: m must be >= 3 (got {})", m));
    SyndromePlan plan;
    plan.direction = direction;
    plan.mode = mode;
    plan.m = m;
    plan.split = split;

    const BitMatrix g_next = generator_matrix(m + 1);
    const std::size_t n = g_next.cols();
    const std::size_t cap = std::size_t{1} << (2 * m);
    const PauliKind kind = plan.gauge_kind();
    const PauliKind other = kind == PauliKind::x ? PauliKind::z : PauliKind::x;
    const char* kind_letter = kind == PauliKind::x ? "X" : "Z";

    auto add = [&](std::vector<PlannedMeasurement>& dst, BitVector row, PauliKind k, MeasurementRole role,
                   std::string stands_for) {
        const std::size_t index = plan.gauge_measurements.size() + plan.diagnostic_measurements.size() + 1;
        dst.push_back({measurement_label(direction, index), PauliOperator::from_row(row, k), role,
                       std::move(stands_for)});
    };

    // Gauge rows.
    std::vector<BitVector> measured;
    if (direction == Direction::forward) {
        const BitMatrix h_next = h_tilde(m + 1);
        for (int i = 0; i < m; ++i) {
            measured.push_back(h_next.row(static_cast<std::size_t>(i)));
            add(plan.gauge_measurements, measured.back(), kind, MeasurementRole::gauge,
                fmt::format("H(1,{})_{}^Z", m + 1, i + 1));
        }
    } else {
        const BitMatrix g_first = generator_matrix(m).pad_right(std::size_t{1} << m);
        for (int i = 0; i < m; ++i) {
            measured.push_back(g_first.row(static_cast<std::size_t>(i)));
            add(plan.gauge_measurements, measured.back(), kind, MeasurementRole::gauge,
                fmt::format("(G(1,{})|0)_{}^X", m, i + 1));
        }
    }

    // Stand-ins for Ḡ(1,m+1) rows of the gauge type.
    const std::size_t simplified_rows = direction == Direction::forward ? static_cast<std::size_t>(m)
                                                                        : static_cast<std::size_t>(m + 1);
    for (std::size_t r = 0; r < simplified_rows; ++r) {
        const auto s = simplify(g_next.row(r), measured, cap);
        CombinationRule rule{g_row_label(m + 1, r + 1, kind), PauliOperator::from_row(g_next.row(r), kind), s.combo};
        rule.members.push_back(measured.size());
        std::sort(rule.members.begin(), rule.members.end());
        plan.combination_rules.push_back(std::move(rule));
        measured.push_back(s.remainder);
        add(plan.gauge_measurements, s.remainder, kind, MeasurementRole::remainder,
            fmt::format("G(1,{})_{}^{}", m + 1, r + 1, kind_letter));
    }

    if (direction == Direction::forward) {
        // The last row has no lighter stand-in; measure it as two commuting
        // halves when both halves are stabilizers of the extended code.
        const BitVector& last = g_next.row(static_cast<std::size_t>(m));
        const auto support = last.support();
        const std::size_t half = support.size() / 2;
        BitVector lo(n), hi(n);
        for (std::size_t i = 0; i < support.size(); ++i) (i < half ? lo : hi).set(support[i]);
        bool can_split = split && support.size() > 4;
        if (can_split) {
            const auto ext = extended_code(m).generators();
            for (const auto& part : {lo, hi}) {
                const auto op = PauliOperator::from_row(part, kind);
                for (const auto& g : ext)
                    if (!g.commutes(op)) can_split = false;
            }
        }
        CombinationRule rule{g_row_label(m + 1, static_cast<std::size_t>(m) + 1, kind),
                             PauliOperator::from_row(last, kind), {}};
        const std::string stands = fmt::format("G(1,{})_{}^{}", m + 1, m + 1, kind_letter);
        if (can_split) {
            rule.members = {measured.size(), measured.size() + 1};
            measured.push_back(lo);
            add(plan.gauge_measurements, lo, kind, MeasurementRole::split, stands);
            measured.push_back(hi);
            add(plan.gauge_measurements, hi, kind, MeasurementRole::split, stands);
        } else {
            rule.members = {measured.size()};
            measured.push_back(last);
            add(plan.gauge_measurements, last, kind, MeasurementRole::remainder, stands);
        }
        plan.combination_rules.push_back(std::move(rule));
    }

    if (mode == Mode::full) {
        for (std::size_t r = 0; r < g_next.rows(); ++r) {
            const std::size_t index = plan.gauge_measurements.size() + plan.diagnostic_measurements.size();
            add(plan.diagnostic_measurements, g_next.row(r), other, MeasurementRole::diagnostic,
                fmt::format("G(1,{})_{}^{}", m + 1, r + 1, other == PauliKind::x ? "X" : "Z"));
            plan.combination_rules.push_back(
                {g_row_label(m + 1, r + 1, other), PauliOperator::from_row(g_next.row(r), other), {index}});
        }
    }
    return plan;
}

std::optional<std::size_t> diagnose(const std::vector<bool>& bits) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) j |= std::size_t{1} << i;
    if (j == 0) return std::nullopt;
    return j;
}

std::vector<bool> fix_syndromes(const SyndromePlan& plan, const std::vector<bool>& raw_gauge,
                                std::optional<std::size_t> diagnosed) {
    if (raw_gauge.size() != plan.gauge_row_count())
        throw std::invalid_argument("fix_syndromes: expected one bit per gauge row");
    std::vector<bool> fixed(raw_gauge.begin(), raw_gauge.end());
    if (!diagnosed) return fixed;
    for (std::size_t k = 0; k < fixed.size(); ++k) {
        const auto& op = plan.gauge_measurements[k].op;
        const std::size_t q = *diagnosed - 1;
        if (q >= op.n()) throw std::out_of_range("fix_syndromes: diagnosed qubit out of range");
        if (op.x().test(q) || op.z().test(q)) fixed[k] = !fixed[k];
    }
    return fixed;
}

FixingProblem fixing_problem(Direction direction, int m) {
    if (m < 3) throw std::invalid_argument("fixing_problem: m must be >= 3");
    FixingProblem p;
    const BitMatrix h_next = h_tilde(m + 1);
    if (direction == Direction::forward) {
        const CssCode target = rm_code(m + 1);
        for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
            p.gauge_rows.push_back(PauliOperator::from_row(h_next.row(i), PauliKind::z));
        for (const auto& g : target.generators())
            if (std::find(p.gauge_rows.begin(), p.gauge_rows.end(), g) == p.gauge_rows.end())
                p.must_commute.push_back(g);
        p.must_commute.push_back(target.logical_x);
        p.must_commute.push_back(target.logical_z);
        const std::size_t first = (std::size_t{1} << m) + 1;
        for (std::size_t q = first; q <= target.n; ++q) p.candidate_basis.push_back(PauliOperator::single(target.n, q, 'X'));
    } else {
        const CssCode target = extended_code(m);
        for (const auto& s : target.x_stabs)
            if (s.origin.placement == StabilizerOrigin::Placement::first_block) p.gauge_rows.push_back(s.op);
        for (const auto& g : target.generators())
            if (std::find(p.gauge_rows.begin(), p.gauge_rows.end(), g) == p.gauge_rows.end())
                p.must_commute.push_back(g);
        p.must_commute.push_back(target.logical_x);
        p.must_commute.push_back(target.logical_z);
        for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
            p.candidate_basis.push_back(PauliOperator::from_row(h_next.row(i), PauliKind::z));
    }
    return p;
}

PauliOperator solve_fixing_operator(const FixingProblem& problem, const std::vector<bool>& flagged) {
    if (flagged.size() != problem.gauge_rows.size())
        throw std::invalid_argument("solve_fixing_operator: one flag per gauge row required");
    if (problem.candidate_basis.empty()) throw std::invalid_argument("solve_fixing_operator: empty search space");
    const std::size_t n = problem.candidate_basis.front().n();
    const std::size_t k = problem.candidate_basis.size();

    std::vector<const PauliOperator*> constraints;
    for (const auto& g : problem.gauge_rows) constraints.push_back(&g);
    for (const auto& c : problem.must_commute) constraints.push_back(&c);

    // Row b, column c: basis element b anticommutes with constraint c.
    BitMatrix a(k, constraints.size());
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < constraints.size(); ++c)
            if (!problem.candidate_basis[b].commutes(*constraints[c])) a.set(b, c);
    BitVector want(constraints.size());
    for (std::size_t i = 0; i < flagged.size(); ++i) want.set(i, flagged[i]);

    const auto particular = solve(a, want);
    if (!particular) throw std::logic_error("solve_fixing_operator: no operator with the required commutation");

    BitMatrix at(constraints.size(), k);
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < constraints.size(); ++c)
            if (a.get(b, c)) at.set(c, b);
    const BitMatrix free = nullspace(at);
    if (free.rows() > 24) throw std::logic_error("solve_fixing_operator: solution space too large to search");

    auto build = [&](const BitVector& coeffs) {
        PauliOperator p = PauliOperator::identity(n);
        for (auto b : coeffs.support()) p *= problem.candidate_basis[b];
        return p.unsigned_hermitian();
    };

    // Gray-code walk over the coset particular + span(free).
    BitVector coeffs = *particular;
    PauliOperator best = build(coeffs);
    BitVector best_support = qubit_support(best);
    const std::uint64_t count = std::uint64_t{1} << free.rows();
    for (std::uint64_t i = 1; i < count; ++i) {
        coeffs ^= free.row(static_cast<std::size_t>(__builtin_ctzll(i)));
        PauliOperator cand = build(coeffs);
        BitVector s = qubit_support(cand);
        if (weight_then_support_less(s, best_support)) {
            best = std::move(cand);
            best_support = std::move(s);
        }
    }
    if (!anticommutes_with_all_as_flagged(best, problem, flagged))
        throw std::logic_error("solve_fixing_operator: internal inconsistency");
    return best;
}

// ---------------------------------------------------------------------------

BranchPolicy::BranchPolicy(std::vector<bool> bits, std::optional<std::uint64_t> seed) : bits_(std::move(bits)) {
    if (seed) rng_.emplace(*seed);
}

bool BranchPolicy::next() {
    if (rng_) return ((*rng_)() & 1U) != 0;
    if (pos_ >= bits_.size()) throw std::logic_error("branch policy: more random outcomes than branch bits");
    return bits_[pos_++];
}

bool ConversionReport::passed() const {
    if (uncorrectable || !logical_preserved) return false;
    if (mode == Mode::full) return residual_error.is_identity() && target_syndrome_zero && ancilla_block_restored;
    return residual_error.weight() <= 1;
}

Converter::Converter(Direction direction, int m, Mode mode, bool split)
    : plan_(build_plan(direction, m, mode, split)), fixing_(fixing_problem(direction, m)) {
    if (direction == Direction::forward) {
        source_ = extended_code(m);
        landing_ = rm_code(m + 1);
        target_ = landing_;
    } else {
        source_ = rm_code(m + 1);
        landing_ = extended_code(m);
        target_ = rm_code(m);
    }
}

StabilizerFrame Converter::input_frame() const { return StabilizerFrame::from_code(source_); }

ConversionReport Converter::run(const PauliOperator& error, BranchPolicy branch) const {
    StabilizerFrame frame = input_frame();
    frame.apply_pauli(error);
    return convert(std::move(frame), std::move(branch), error);
}

ConversionReport Converter::convert(StabilizerFrame frame, BranchPolicy branch, const PauliOperator& injected) const {
    const bool forward = plan_.direction == Direction::forward;
    ConversionReport rep;
    rep.direction = plan_.direction;
    rep.mode = plan_.mode;
    rep.m = plan_.m;
    rep.injected_error = injected;
    rep.measurements = plan_.measurements();
    rep.measurement_count = plan_.measurement_count();
    rep.total_weight = plan_.total_weight();

    // Measure in plan order: gauge rows, stand-ins, diagnostics.
    std::vector<bool> raw;
    for (const auto& pm : rep.measurements) {
        const bool det = frame.is_deterministic(pm.op);
        const bool bit = det ? false : branch.next();
        const auto r = frame.measure(pm.op, BranchChoice::forced(bit));
        raw.push_back(r.outcome);
        rep.deterministic.push_back(r.deterministic);
        if (!r.deterministic) rep.branch_outcomes.push_back(r.outcome);
        rep.raw_syndromes.push_back({pm.label, r.outcome});
    }

    std::vector<bool> gauge_type_bits, other_type_bits;
    for (std::size_t i = 0; i < plan_.combination_rules.size(); ++i) {
        const auto& rule = plan_.combination_rules[i];
        bool v = false;
        for (auto idx : rule.members) v = v != raw[idx];
        rep.combined_syndromes.push_back({rule.target, v});
        const bool gauge_type = (rule.target_op.x().any()) == (plan_.gauge_kind() == PauliKind::x);
        (gauge_type ? gauge_type_bits : other_type_bits).push_back(v);
    }

    // Gauge-type syndromes locate the error type that disturbs the gauge rows.
    const auto disturbing = diagnose(gauge_type_bits);
    const auto other = other_type_bits.empty() ? std::nullopt : diagnose(other_type_bits);
    if (forward) {
        rep.diagnosis.x_error_qubit = disturbing;
        rep.diagnosis.z_error_qubit = other;
    } else {
        rep.diagnosis.z_error_qubit = disturbing;
        rep.diagnosis.x_error_qubit = other;
    }

    const std::vector<bool> raw_gauge_bits(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(plan_.gauge_row_count()));
    const auto fixed = fix_syndromes(plan_, raw_gauge_bits, disturbing);
    for (std::size_t k = 0; k < fixed.size(); ++k)
        rep.fixed_syndromes.push_back({plan_.gauge_measurements[k].label, static_cast<bool>(fixed[k])});

    rep.fixing_operation = solve_fixing_operator(fixing_, fixed);
    PauliOperator correction = rep.fixing_operation;
    const std::size_t n = frame.n();
    if (rep.diagnosis.x_error_qubit) correction *= PauliOperator::single(n, *rep.diagnosis.x_error_qubit, 'X');
    if (rep.diagnosis.z_error_qubit) correction *= PauliOperator::single(n, *rep.diagnosis.z_error_qubit, 'Z');
    rep.correction = correction.unsigned_hermitian();
    frame.apply_pauli(rep.correction);

    // Verification round.
    if (!forward) {
        const Assessment landing = assess(frame, landing_);
        rep.ancilla_block_restored = landing.clean();
    }
    std::optional<StabilizerFrame> target_frame =
        forward ? std::optional<StabilizerFrame>(frame) : frame.restrict_to_code(target_, 0);
    if (!target_frame) {
        rep.uncorrectable = true;
        rep.final_frame = std::move(frame);
        rep.residual_error = PauliOperator::identity(target_.n);
        return rep;
    }

    const Assessment a = assess(*target_frame, target_);
    rep.target_syndrome = a.syndrome;
    rep.target_syndrome_zero = std::none_of(a.syndrome.begin(), a.syndrome.end(), [](bool b) { return b; });
    if (!a.deterministic) {
        rep.uncorrectable = true;
        rep.final_frame = std::move(*target_frame);
        rep.residual_error = PauliOperator::identity(target_.n);
        return rep;
    }

    const PauliOperator exact = explain(a, target_);
    const auto single = lookup_single(a.syndrome, target_);
    if (single) {
        StabilizerFrame probe = *target_frame;
        probe.apply_pauli(*single);
        rep.logical_preserved = assess(probe, target_).clean();
    }
    rep.residual_error = rep.logical_preserved ? *single : exact;
    if (!rep.logical_preserved) rep.uncorrectable = true;
    if (rep.mode == Mode::full && !(rep.residual_error.is_identity() && rep.ancilla_block_restored))
        rep.uncorrectable = true;
    rep.final_frame = std::move(*target_frame);
    return rep;
}

ConversionReport convert(StabilizerFrame frame, Direction direction, int m, Mode mode, BranchPolicy branch) {
    const Converter conv(direction, m, mode);
    return conv.convert(std::move(frame), std::move(branch), PauliOperator::identity(conv.input_frame().n()));
}

PauliOperator parse_error_spec(std::string_view spec, std::size_t n) {
    PauliOperator out = PauliOperator::identity(n);
    if (spec == "none" || spec == "I") return out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', pos), spec.size());
        const std::string_view item = spec.substr(pos, comma - pos);
        if (item.size() < 3 || item[1] != ':')
            throw std::invalid_argument(fmt::format("malformed error spec '{}' (expected e.g. X:5)", item));
        const char letter = item[0];
        if (letter != 'X' && letter != 'Y' && letter != 'Z')
            throw std::invalid_argument(fmt::format("unknown Pauli '{}' in error spec", letter));
        std::size_t q = 0;
        for (char c : item.substr(2)) {
            if (c < '0' || c > '9') throw std::invalid_argument(fmt::format("malformed qubit index in '{}'", item));
            q = q * 10 + static_cast<std::size_t>(c - '0');
        }
        if (q < 1 || q > n)
            throw std::invalid_argument(fmt::format("qubit {} out of range 1..{}", q, n));
        out *= PauliOperator::single(n, q, letter);
        pos = comma + 1;
    }
    return out.unsigned_hermitian();
}

std::string error_label(const PauliOperator& error) {
    if (error.is_identity()) return "none";
    return error.unsigned_hermitian().to_string();
}

}  // namespace rmconv
