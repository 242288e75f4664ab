#include "rmconv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "rmconv/conversion.hpp"
#include "rmconv/cost.hpp"
#include "rmconv/harness.hpp"
#include "rmconv/report_json.hpp"
#include "rmconv/rm_codes.hpp"

namespace rmconv::cli {
namespace {

// Thrown for bad flag values that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int m = 3;
    std::string direction = "fwd";
    std::string mode = "full";
    std::string error = "none";
    std::string branch;  // empty: all gauge outcomes 0
    std::string out_path;
    std::string log_path;
    std::string config_path;
    double epsilon = 0;
    bool json = false;
    bool no_split = false;
    unsigned threads = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

Direction parse_direction(const std::string& s) {
    if (s == "fwd" || s == "forward") return Direction::forward;
    if (s == "bwd" || s == "backward") return Direction::backward;
    throw UsageError(fmt::format("unknown direction '{}' (fwd|bwd)", s));
}

Mode parse_mode(const std::string& s) {
    if (s == "full") return Mode::full;
    if (s == "ft") return Mode::ft;
    throw UsageError(fmt::format("unknown mode '{}' (full|ft)", s));
}

template <class T, class F>
std::vector<T> expand_both(const std::string& s, F parse, std::vector<T> both) {
    if (s == "both") return both;
    return {parse(s)};
}

void write_json(const Json& doc, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << doc.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError(fmt::format("cannot write '{}'", path));
    f << doc.dump(2) << '\n';
}

std::string matrix_text(const BitMatrix& m) {
    if (m.rows() == 0) return fmt::format("  (empty, 0 x {})\n", m.cols());
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) s += "  " + m.row(r).to_string() + '\n';
    return s;
}

void print_code(const CssCode& code, std::ostream& out) {
    fmt::print(out, "{} on {} qubits\n", code.label, code.n);
    for (const auto& s : code.x_stabs) fmt::print(out, "  {:<22} {}\n", s.origin.label(), s.op.to_string());
    for (const auto& s : code.z_stabs) fmt::print(out, "  {:<22} {}\n", s.origin.label(), s.op.to_string());
    fmt::print(out, "  logical X: {}\n  logical Z: {}\n", code.logical_x.to_string(), code.logical_z.to_string());
}

int cmd_dump(const Options& o, std::ostream& out) {
    const CssCode code = rm_code(o.m);
    const CssCode ext = extended_code(o.m);
    if (o.json) {
        Json doc = json_document("dump");
        doc["m"] = o.m;
        Json g = Json::array(), h = Json::array();
        const auto gm = generator_matrix(o.m), hm = h_tilde(o.m);
        for (std::size_t r = 0; r < gm.rows(); ++r) g.push_back(gm.row(r).to_string());
        for (std::size_t r = 0; r < hm.rows(); ++r) h.push_back(hm.row(r).to_string());
        doc["generator_matrix"] = g;
        doc["h_tilde"] = h;
        doc["code"] = to_json(code);
        doc["extended_code"] = to_json(ext);
        write_json(doc, o.out_path, out);
        return exit_ok;
    }
    fmt::print(out, "G(1,{}):\n{}", o.m, matrix_text(generator_matrix(o.m)));
    fmt::print(out, "H(1,{}):\n{}", o.m, matrix_text(h_tilde(o.m)));
    print_code(code, out);
    print_code(ext, out);
    return exit_ok;
}

std::vector<bool> parse_bits(const std::string& s, std::size_t want) {
    std::vector<bool> bits;
    for (char c : s) {
        if (c != '0' && c != '1') throw UsageError(fmt::format("branch bits must be 0/1 (got '{}')", s));
        bits.push_back(c == '1');
    }
    if (bits.size() != want) throw UsageError(fmt::format("branch needs {} bits (got {})", want, bits.size()));
    return bits;
}

void print_report(const ConversionReport& r, std::ostream& out) {
    fmt::print(out, "{} conversion m={} mode={} error={} branch=", to_string(r.direction), r.m, to_string(r.mode),
               error_label(r.injected_error));
    for (bool b : r.branch_outcomes) out << (b ? '1' : '0');
    out << '\n';
    for (std::size_t i = 0; i < r.measurements.size(); ++i)
        fmt::print(out, "  {:<4} {:<40} -> {}{}\n", r.measurements[i].label, r.measurements[i].op.to_string(),
                   r.raw_syndromes[i].value ? 1 : 0, r.deterministic[i] ? "" : " (random)");
    out << "  combined:";
    for (const auto& b : r.combined_syndromes) fmt::print(out, " {}={}", b.label, b.value ? 1 : 0);
    out << "\n  fixed:";
    for (const auto& b : r.fixed_syndromes) fmt::print(out, " {}={}", b.label, b.value ? 1 : 0);
    auto q = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
    fmt::print(out, "\n  diagnosis: x error qubit {}, z error qubit {}\n", q(r.diagnosis.x_error_qubit),
               q(r.diagnosis.z_error_qubit));
    fmt::print(out, "  fixing operation: {}\n", r.fixing_operation.to_string());
    fmt::print(out, "  correction: {}\n", r.correction.to_string());
    fmt::print(out, "  residual error: {}\n", r.residual_error.to_string());
    fmt::print(out, "  logical preserved: {}\n", r.logical_preserved ? "yes" : "no");
    if (r.direction == Direction::backward && r.mode == Mode::full)
        fmt::print(out, "  ancilla block restored: {}\n", r.ancilla_block_restored ? "yes" : "no");
    fmt::print(out, "  measurements: {}, total weight: {}\n", r.measurement_count, r.total_weight);
    fmt::print(out, "  result: {}\n", r.passed() ? "pass" : "FAIL");
}

int cmd_convert(const Options& o, std::ostream& out) {
    const Direction dir = parse_direction(o.direction);
    const Mode mode = parse_mode(o.mode);
    if (o.m < 3) throw UsageError("--m must be at least 3");
    const Converter conv(dir, o.m, mode, !o.no_split);
    PauliOperator error;
    try {
        error = parse_error_spec(o.error, conv.input_frame().n());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::vector<std::vector<bool>> branches;
    std::optional<std::uint64_t> seed;
    const std::size_t k = conv.plan().gauge_row_count();
    if (o.branch.empty()) {
        branches.emplace_back(k, false);
    } else if (o.branch == "all") {
        branches = branch_list(k);
    } else if (o.branch.rfind("random:", 0) == 0) {
        try {
            seed = std::stoull(o.branch.substr(7));
        } catch (const std::exception&) {
            throw UsageError(fmt::format("bad seed in '{}'", o.branch));
        }
    } else {
        branches.push_back(parse_bits(o.branch, k));
    }

    std::vector<ConversionReport> reports;
    if (seed)
        reports.push_back(conv.run(error, BranchPolicy::seeded(*seed)));
    else
        for (const auto& b : branches) reports.push_back(conv.run(error, BranchPolicy::bits(b)));

    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    if (o.json || !o.out_path.empty()) {
        Json doc = json_document("conversion");
        doc["plan"] = to_json(conv.plan());
        Json rs = Json::array();
        for (const auto& r : reports) rs.push_back(to_json(r));
        doc["reports"] = rs;
        write_json(doc, o.out_path, out);
    }
    if (!o.json)
        for (const auto& r : reports) print_report(r, out);
    return all_pass ? exit_ok : exit_failed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    if (o.m < 3) throw UsageError("--m must be at least 3");
    const auto dirs = expand_both<Direction>(o.direction, parse_direction, {Direction::forward, Direction::backward});
    const auto modes = expand_both<Mode>(o.mode, parse_mode, {Mode::full, Mode::ft});

    Json doc = json_document("sweep");
    doc["m"] = o.m;
    Json sections = Json::array();
    std::ofstream log;
    if (!o.log_path.empty()) {
        log.open(o.log_path);
        if (!log) throw UsageError(fmt::format("cannot write '{}'", o.log_path));
    }
    bool all_pass = true;
    for (auto d : dirs)
        for (auto md : modes) {
            const SweepResult s = sweep(o.m, d, md, o.threads);
            all_pass = all_pass && s.all_passed();
            fmt::print(out, "{} {} m={}: {}/{} pass ({} errors x {} branches), identity fix in {}/{} no-error branches\n",
                       to_string(d), to_string(md), o.m, s.passed, s.cases.size(), s.error_count, s.branch_count,
                       s.identity_fix_branches, s.branch_count);
            for (const auto& c : s.cases)
                if (!c.passed)
                    fmt::print(out, "  FAIL error={} branch={} residual={}\n", error_label(c.error), bits_string(c.branch),
                               c.report.residual_error.to_string());
            if (log)
                for (const auto& c : s.cases) {
                    Json line = to_json(c.report);
                    line["branch"] = bits_string(c.branch);
                    log << line.dump() << '\n';
                }
            sections.push_back(to_json(s));
        }
    doc["sections"] = sections;
    doc["all_passed"] = all_pass;
    if (!o.out_path.empty()) write_json(doc, o.out_path, out);
    out << (all_pass ? "all cases pass\n" : "FAILURES present\n");
    return all_pass ? exit_ok : exit_failed;
}

void print_breakdown(const CostBreakdown& b, std::ostream& out) {
    fmt::print(out, "{}:\n", b.method);
    for (const auto& li : b.line_items)
        fmt::print(out, "  {:<20} {:<36} {:>12.4f}  {}\n", li.label, li.formula, li.value, li.explanation);
    fmt::print(out, "  {:<20} {:<36} {:>12.4f}\n", "Average cost", "sum of all costs", b.total);
}

int cmd_cost(const Options& o, std::ostream& out) {
    const std::optional<double> eps = o.epsilon > 0 ? std::optional<double>(o.epsilon) : std::nullopt;
    CostModel model;
    try {
        model = o.config_path.empty() ? CostModel::unit() : load_cost_model(o.config_path, eps);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.config_path.empty() && eps) model.epsilon = eps;
    const CostBreakdown adp = cost_adp14(model);
    const CostBreakdown ours = cost_ours(model);
    if (o.json || !o.out_path.empty()) {
        Json doc = json_document("cost");
        doc["epsilon"] = model.epsilon ? Json(*model.epsilon) : Json(nullptr);
        Json prim = Json::object();
        for (auto name : cost_primitive_names)
            if (model.primitives.count(std::string(name))) prim[std::string(name)] = model.get(name);
        doc["primitives"] = prim;
        doc["adp14"] = to_json(adp);
        doc["ours"] = to_json(ours);
        doc["delta"] = adp.total - ours.total;
        if (model.standard_method) doc["standard_method"] = *model.standard_method;
        if (model.reference)
            doc["reference"] = {{"standard", model.reference->standard},
                                {"adp14", model.reference->adp14},
                                {"ours", model.reference->ours}};
        doc["note"] = cost_reference_note;
        write_json(doc, o.out_path, out);
        if (o.json) return exit_ok;
    }
    if (model.epsilon) fmt::print(out, "epsilon = {}\n", *model.epsilon);
    print_breakdown(adp, out);
    print_breakdown(ours, out);
    fmt::print(out, "delta (adp14 - ours) = {:.4f}\n", adp.total - ours.total);
    if (model.standard_method) fmt::print(out, "standard method (supplied) = {:.4f}\n", *model.standard_method);
    if (model.reference)
        fmt::print(out, "reference totals at this epsilon: standard {}, adp14 {}, ours {}\n", model.reference->standard,
                   model.reference->adp14, model.reference->ours);
    fmt::print(out, "note: {}\n", cost_reference_note);
    return exit_ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const CrossValidation cv = cross_validate(o.trials, o.seed);
    const CrossValidation seq = engine_oracle_sequences(o.trials, o.seed + 1);
    const TransversalReport tr = transversal_checks(o.seed);
    if (o.json || !o.out_path.empty()) {
        Json doc = json_document("oracle");
        doc["seed"] = o.seed;
        doc["conversion"] = to_json(cv);
        doc["sequences"] = to_json(seq);
        doc["transversal"] = to_json(tr);
        write_json(doc, o.out_path, out);
    }
    if (!o.json) {
        fmt::print(out, "conversion vs dense oracle: {}/{} pass, min fidelity {:.12f}, outcome mismatches {}\n",
                   cv.passed, cv.trials, cv.min_fidelity, cv.outcome_mismatches);
        fmt::print(out, "engine vs dense sequences: {}/{} pass ({} forced, {} free outcomes), outcome mismatches {}\n",
                   seq.passed, seq.trials, seq.forced_outcomes, seq.free_outcomes, seq.outcome_mismatches);
        fmt::print(out, "H^7 on Steane is logical H: {} (min fidelity {:.12f})\n", tr.hadamard_ok ? "yes" : "no",
                   tr.hadamard_min_fidelity);
        fmt::print(out, "T^15 on RM(1,4) acts as logical {} ({})\n", tr.t_logical, tr.t_stable ? "stable" : "UNSTABLE");
        for (const auto& f : cv.failures) fmt::print(out, "  {}\n", f);
        for (const auto& f : seq.failures) fmt::print(out, "  {}\n", f);
    }
    return cv.ok() && seq.ok() && tr.ok() ? exit_ok : exit_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gauge-fixing conversion between adjacent punctured Reed-Muller quantum codes", "rmconv"};
    app.require_subcommand(1);
    Options o;

    auto* dump = app.add_subcommand("dump", "print generator matrices, stabilizers and logicals");
    dump->add_option("--m", o.m, "code parameter (RM(1,m))")->check(CLI::Range(3, 12));
    dump->add_flag("--json", o.json, "JSON output");
    dump->add_option("--out", o.out_path, "write JSON here");

    auto* convert = app.add_subcommand("convert", "run one conversion");
    convert->add_option("--m", o.m, "source code RM(1,m) forward, target backward")->check(CLI::Range(3, 12));
    convert->add_option("--direction", o.direction, "fwd|bwd");
    convert->add_option("--mode", o.mode, "full|ft");
    convert->add_option("--error", o.error, "none, X:5, Y:11, Z:3 or a comma list");
    convert->add_option("--branch", o.branch, "gauge outcome bits (e.g. 001), all, or random:SEED; default all zeros");
    convert->add_flag("--json", o.json, "JSON output");
    convert->add_flag("--no-split", o.no_split, "measure the last forward row whole");
    convert->add_option("--out", o.out_path, "write JSON here");

    auto* sw = app.add_subcommand("sweep", "every single-qubit error on every gauge branch");
    sw->add_option("--m", o.m, "code parameter")->check(CLI::Range(3, 8));
    sw->add_option("--direction", o.direction, "fwd|bwd|both")->default_str("both");
    sw->add_option("--mode", o.mode, "full|ft|both")->default_str("both");
    sw->add_option("--out", o.out_path, "write the sweep JSON here");
    sw->add_option("--log", o.log_path, "write one JSON report per case here");
    sw->add_option("--threads", o.threads, "worker threads (0 = all cores)");

    auto* cost = app.add_subcommand("cost", "cost breakdowns for one logical T");
    cost->add_option("--config", o.config_path, "JSON cost config (default: unit costs)");
    cost->add_option("--epsilon", o.epsilon, "physical error rate")->check(CLI::Range(0.0, 1.0));
    cost->add_flag("--json", o.json, "JSON output");
    cost->add_option("--out", o.out_path, "write JSON here");

    auto* oracle = app.add_subcommand("oracle", "dense state-vector cross-checks at m = 3");
    oracle->add_option("--trials", o.trials, "random conversions / sequences")->check(CLI::Range(1, 100000));
    oracle->add_option("--seed", o.seed, "RNG seed");
    oracle->add_flag("--json", o.json, "JSON output");
    oracle->add_option("--out", o.out_path, "write JSON here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (sw->parsed()) {
        if (sw->count("--direction") == 0) o.direction = "both";
        if (sw->count("--mode") == 0) o.mode = "both";
    }

    try {
        if (dump->parsed()) return cmd_dump(o, out);
        if (convert->parsed()) return cmd_convert(o, out);
        if (sw->parsed()) return cmd_sweep(o, out);
        if (cost->parsed()) return cmd_cost(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
    } catch (const UsageError& e) {
        err << "rmconv: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "rmconv: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}

}  // namespace rmconv::cli
