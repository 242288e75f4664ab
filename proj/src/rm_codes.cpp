#include "rmconv/rm_codes.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace rmconv {
namespace {

void require_m(int m, int min, const char* what) {
    if (m < min) throw std::invalid_argument(fmt::format("{}: m must be >= {} (got {})", what, min, m));
}

std::size_t block_len(int m) { return (std::size_t{1} << m) - 1; }

/// Vector of length 2^m − 1 with ones at x, y, x + 2^{m−1}, y + 2^{m−1}.
BitVector paired_ones(int m, std::size_t x, std::size_t y) {
    const std::size_t half = std::size_t{1} << (m - 1);
    return BitVector::from_support(block_len(m), {x, y, x + half, y + half});
}

std::vector<LabeledStabilizer> label_rows(const BitMatrix& rows, PauliKind kind, StabilizerOrigin base) {
    std::vector<LabeledStabilizer> out;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        StabilizerOrigin o = base;
        o.row = static_cast<int>(i + 1);
        o.kind = kind;
        out.push_back({PauliOperator::from_row(rows.row(i), kind), o});
    }
    return out;
}

StabilizerOrigin origin(StabilizerOrigin::Matrix mat, int m, StabilizerOrigin::Placement where) {
    StabilizerOrigin o;
    o.matrix = mat;
    o.m = m;
    o.placement = where;
    return o;
}

void append(std::vector<LabeledStabilizer>& dst, std::vector<LabeledStabilizer> src) {
    for (auto& s : src) dst.push_back(std::move(s));
}

}  // namespace

BitMatrix generator_matrix(int m) {
    require_m(m, 3, "generator_matrix");
    if (m == 3) return BitMatrix::from_strings({"1010101", "0110011", "0001111"});
    // [Ḡ(1,m−1) 0 Ḡ(1,m−1); 0…0 1 1…1]
    const BitMatrix prev = generator_matrix(m - 1);
    const std::size_t w = prev.cols();
    BitMatrix out(0, 2 * w + 1);
    for (const auto& r : prev.row_list()) out.append_row(r.concat(BitVector(1)).concat(r));
    BitVector last(2 * w + 1);
    for (std::size_t i = w; i < 2 * w + 1; ++i) last.set(i);
    out.append_row(std::move(last));
    return out;
}

BitMatrix h_tilde(int m) {
    require_m(m, 3, "h_tilde");
    const std::size_t n = block_len(m);
    if (m == 3) return BitMatrix(0, n);
    BitMatrix out(0, n);
    out.append_row(paired_ones(m, 1, 3));
    out.append_row(paired_ones(m, 2, 3));
    for (int k = 3; k <= m - 1; ++k) out.append_row(paired_ones(m, 3, 3 + (std::size_t{1} << (k - 1))));

    const std::size_t half = std::size_t{1} << (m - 1);
    const BitMatrix g_prev = generator_matrix(m - 1);
    const BitMatrix h_prev = h_tilde(m - 1);
    return out.vstack(g_prev.pad_right(half)).vstack(h_prev.pad_right(half)).vstack(h_prev.pad_left(half));
}

std::string StabilizerOrigin::label() const {
    const std::string mat = matrix == Matrix::g ? fmt::format("G(1,{})", m) : fmt::format("H(1,{})", m);
    const char* type = kind == PauliKind::x ? "X" : "Z";
    switch (placement) {
        case Placement::whole:
            return fmt::format("{}_{}^{}", mat, row, type);
        case Placement::first_block:
            return fmt::format("({}|0)_{}^{}", mat, row, type);
        case Placement::last_block:
            return fmt::format("(0|{})_{}^{}", mat, row, type);
    }
    return {};
}

std::vector<PauliOperator> CssCode::generators() const {
    std::vector<PauliOperator> out;
    out.reserve(generator_count());
    for (const auto& s : x_stabs) out.push_back(s.op);
    for (const auto& s : z_stabs) out.push_back(s.op);
    return out;
}

CssCode rm_code(int m) {
    require_m(m, 3, "rm_code");
    using M = StabilizerOrigin::Matrix;
    using P = StabilizerOrigin::Placement;
    CssCode code;
    code.label = fmt::format("RM(1,{})", m);
    code.m = m;
    code.n = block_len(m);
    const BitMatrix g = generator_matrix(m);
    const BitMatrix h = h_tilde(m);
    code.x_stabs = label_rows(g, PauliKind::x, origin(M::g, m, P::whole));
    code.z_stabs = label_rows(g, PauliKind::z, origin(M::g, m, P::whole));
    append(code.z_stabs, label_rows(h, PauliKind::z, origin(M::h_tilde, m, P::whole)));
    code.logical_x = PauliOperator::from_row(BitVector::ones(code.n), PauliKind::x);
    code.logical_z = PauliOperator::from_row(BitVector::ones(code.n), PauliKind::z);
    return code;
}

CssCode extended_code(int m) {
    require_m(m, 3, "extended_code");
    using M = StabilizerOrigin::Matrix;
    using P = StabilizerOrigin::Placement;
    const std::size_t pad = std::size_t{1} << m;  // interconnect + block two
    const BitMatrix g_first = generator_matrix(m).pad_right(pad);
    const BitMatrix g_next = generator_matrix(m + 1);
    const BitMatrix h = h_tilde(m);

    CssCode code;
    code.label = fmt::format("ERM({}~{})", m, m + 1);
    code.m = m;
    code.n = block_len(m + 1);
    code.x_stabs = label_rows(g_first, PauliKind::x, origin(M::g, m, P::first_block));
    append(code.x_stabs, label_rows(g_next, PauliKind::x, origin(M::g, m + 1, P::whole)));
    code.z_stabs = label_rows(g_first, PauliKind::z, origin(M::g, m, P::first_block));
    append(code.z_stabs, label_rows(g_next, PauliKind::z, origin(M::g, m + 1, P::whole)));
    append(code.z_stabs, label_rows(h.pad_right(pad), PauliKind::z, origin(M::h_tilde, m, P::first_block)));
    append(code.z_stabs, label_rows(h.pad_left(pad), PauliKind::z, origin(M::h_tilde, m, P::last_block)));

    const CssCode inner = rm_code(m);
    code.logical_x = inner.logical_x.padded(0, pad);
    code.logical_z = inner.logical_z.padded(0, pad);
    return code;
}

SubsystemSpec subsystem_spec(int m) {
    require_m(m, 3, "subsystem_spec");
    using M = StabilizerOrigin::Matrix;
    using P = StabilizerOrigin::Placement;
    const std::size_t pad = std::size_t{1} << m;
    const BitMatrix g_first = generator_matrix(m).pad_right(pad);
    const BitMatrix g_next = generator_matrix(m + 1);
    const BitMatrix h = h_tilde(m);
    const BitMatrix h_next = h_tilde(m + 1);

    SubsystemSpec spec;
    spec.m = m;
    append(spec.stabilizers, label_rows(g_next, PauliKind::x, origin(M::g, m + 1, P::whole)));
    append(spec.stabilizers, label_rows(g_next, PauliKind::z, origin(M::g, m + 1, P::whole)));
    append(spec.stabilizers, label_rows(g_first, PauliKind::z, origin(M::g, m, P::first_block)));
    append(spec.stabilizers, label_rows(h.pad_right(pad), PauliKind::z, origin(M::h_tilde, m, P::first_block)));
    append(spec.stabilizers, label_rows(h.pad_left(pad), PauliKind::z, origin(M::h_tilde, m, P::last_block)));

    spec.gauge_generators = label_rows(g_first, PauliKind::x, origin(M::g, m, P::first_block));
    BitMatrix first_rows(0, h_next.cols());
    for (int i = 0; i < m; ++i) first_rows.append_row(h_next.row(static_cast<std::size_t>(i)));
    append(spec.gauge_generators, label_rows(first_rows, PauliKind::z, origin(M::h_tilde, m + 1, P::whole)));
    return spec;
}

bool in_group_span(const std::vector<PauliOperator>& generators, const PauliOperator& p) {
    BitMatrix rows(0, 2 * p.n());
    for (const auto& g : generators) rows.append_row(symplectic_vector(g));
    return RowReducer(rows).contains(symplectic_vector(p));
}

CodeCheck check_code(const CssCode& code) {
    CodeCheck c;
    const auto gens = code.generators();
    c.generators_commute = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].commutes(gens[j])) c.generators_commute = false;

    BitMatrix rows(0, 2 * code.n);
    for (const auto& g : gens) rows.append_row(symplectic_vector(g));
    c.generators_independent = rank(rows) == gens.size();
    c.count_is_n_minus_1 = gens.size() + 1 == code.n;

    c.logicals_commute_with_stabilizers = true;
    for (const auto& g : gens)
        if (!g.commutes(code.logical_x) || !g.commutes(code.logical_z)) c.logicals_commute_with_stabilizers = false;
    c.logicals_anticommute = !code.logical_x.commutes(code.logical_z);

    RowReducer reducer(rows);
    c.logicals_outside_group = !reducer.contains(symplectic_vector(code.logical_x)) &&
                               !reducer.contains(symplectic_vector(code.logical_z));
    return c;
}

}  // namespace rmconv
