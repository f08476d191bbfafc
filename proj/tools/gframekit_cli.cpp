// gframekit command-line front end: JSON in, JSON report out.
//
// Exit codes: 0 = the checked property holds, 2 = it fails, 1 = input or
// usage error. Reports go to stdout, error objects to stderr.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gframekit/gframekit.hpp"

namespace gk = gframekit;
using gk::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPropertyFails = 2;

struct ToleranceFlag {
    std::optional<double> cli_value;

    /// Flag beats GFRAMEKIT_TOL beats the per-command default.
    double resolve(double fallback) const {
        if (cli_value) return *cli_value;
        if (const char* env = std::getenv("GFRAMEKIT_TOL")) {
            try {
                return std::stod(env);
            } catch (...) {
                throw gk::ValidationError("GFRAMEKIT_TOL is not a number");
            }
        }
        return fallback;
    }
};

class ReportBuilder {
public:
    explicit ReportBuilder(std::string command) : start_(clock::now()) {
        report_["command"] = std::move(command);
        report_["inputs"] = json::array();
        report_["tolerances"] = json::object();
        report_["results"] = json::object();
    }

    void add_input(const std::string& path, const std::string& bytes) {
        report_["inputs"].push_back({{"path", path}, {"digest", gk::fnv1a_digest(bytes)}});
    }

    void tolerance(const std::string& name, double value) {
        report_["tolerances"][name] = value;
    }

    json& results() { return report_["results"]; }

    int emit(int code) {
        using ms = std::chrono::duration<double, std::milli>;
        report_["wall_time_ms"] = ms(clock::now() - start_).count();
        std::cout << report_.dump(2) << "\n";
        return code;
    }

private:
    using clock = std::chrono::steady_clock;
    json report_;
    clock::time_point start_;
};

json asserted(bool value, double tolerance) {
    return json{{"value", value}, {"tolerance", tolerance}};
}

json bounds_json(const gk::FrameBounds& b) {
    return json{{"lower", b.lower}, {"upper", b.upper}};
}

json vector_json(const gk::ComplexVector& v) {
    json out = json::array();
    for (const gk::cplx& x : v) out.push_back(json::array({x.real(), x.imag()}));
    return out;
}

json classification_json(const gk::ClassificationReport& r) {
    json out;
    out["is_bessel"] = r.is_bessel;
    out["bessel_bound"] = r.bessel_bound;
    out["is_complete"] = asserted(r.is_complete, gk::kDefaultRankTol);
    out["is_frame"] = asserted(r.is_frame, gk::kFrameThreshold);
    out["bounds"] = bounds_json(r.bounds);
    out["is_tight"] = asserted(r.is_tight, gk::kTightGapTol);
    out["is_riesz"] = asserted(r.is_riesz, gk::kDefaultRankTol);
    out["riesz_bounds"] = bounds_json(r.riesz_bounds);
    out["is_orthonormal"] = asserted(r.is_orthonormal, gk::kOrthonormalTol);
    out["is_exact"] = asserted(r.is_exact, gk::kRemovalEigTol);
    out["dim_sum"] = r.dim_sum;
    out["dim_u"] = r.dim_u;
    return out;
}

gk::GFrame load_gframe(const std::string& path, ReportBuilder& report) {
    const std::string bytes = gk::read_file(path);
    report.add_input(path, bytes);
    return gk::parse_gframe(bytes);
}

int error_exit(const std::string& type, const std::string& message, int code) {
    json err;
    err["error"] = {{"type", type}, {"message", message}};
    std::cerr << err.dump(2) << "\n";
    return code;
}

int classify_error(const gk::Error& e) {
    // input/usage problems
    if (dynamic_cast<const gk::ParseError*>(&e)) return error_exit("ParseError", e.what(), kExitUsage);
    if (dynamic_cast<const gk::ValidationError*>(&e))
        return error_exit("ValidationError", e.what(), kExitUsage);
    if (dynamic_cast<const gk::UnknownIndex*>(&e))
        return error_exit("UnknownIndex", e.what(), kExitUsage);
    if (dynamic_cast<const gk::IndexOutOfRange*>(&e))
        return error_exit("IndexOutOfRange", e.what(), kExitUsage);
    if (dynamic_cast<const gk::DimensionMismatch*>(&e))
        return error_exit("DimensionMismatch", e.what(), kExitUsage);
    if (dynamic_cast<const gk::InvalidGrouping*>(&e))
        return error_exit("InvalidGrouping", e.what(), kExitUsage);
    if (dynamic_cast<const gk::InvalidLattice*>(&e))
        return error_exit("InvalidLattice", e.what(), kExitUsage);
    if (dynamic_cast<const gk::InfeasibleSpec*>(&e))
        return error_exit("InfeasibleSpec", e.what(), kExitUsage);
    if (dynamic_cast<const gk::NotUnitary*>(&e))
        return error_exit("NotUnitary", e.what(), kExitUsage);
    if (dynamic_cast<const gk::NotHermitian*>(&e))
        return error_exit("NotHermitian", e.what(), kExitUsage);
    // failed mathematical properties
    if (dynamic_cast<const gk::NotAFrame*>(&e))
        return error_exit("NotAFrame", e.what(), kExitPropertyFails);
    if (dynamic_cast<const gk::NotDualPair*>(&e))
        return error_exit("NotDualPair", e.what(), kExitPropertyFails);
    if (dynamic_cast<const gk::NotRieszBasis*>(&e))
        return error_exit("NotRieszBasis", e.what(), kExitPropertyFails);
    if (dynamic_cast<const gk::SingularSplitting*>(&e))
        return error_exit("SingularSplitting", e.what(), kExitPropertyFails);
    if (dynamic_cast<const gk::SingularOperator*>(&e))
        return error_exit("SingularOperator", e.what(), kExitPropertyFails);
    if (dynamic_cast<const gk::NotPositiveDefinite*>(&e))
        return error_exit("NotPositiveDefinite", e.what(), kExitPropertyFails);
    return error_exit("Error", e.what(), kExitPropertyFails);
}

// ---- commands -------------------------------------------------------------

int cmd_check(const std::string& file, const ToleranceFlag& tol) {
    ReportBuilder report("check");
    const double threshold = tol.resolve(gk::kFrameThreshold);
    report.tolerance("frame_threshold", threshold);
    const gk::GFrame f = load_gframe(file, report);
    const gk::ClassificationReport c = gk::classify(f, gk::kDefaultRankTol, threshold);
    report.results()["classification"] = classification_json(c);
    return report.emit(c.is_frame ? kExitOk : kExitPropertyFails);
}

int cmd_bounds(const std::string& file, const ToleranceFlag& tol) {
    ReportBuilder report("bounds");
    const double threshold = tol.resolve(gk::kFrameThreshold);
    report.tolerance("frame_threshold", threshold);
    const gk::GFrame f = load_gframe(file, report);
    const gk::FrameOperatorMatrix s = gk::frame_operator(f);
    const gk::FrameBounds b{std::max(0.0, s.spectrum.min_eigenvalue()),
                            std::max(0.0, s.spectrum.max_eigenvalue())};
    report.results()["bounds"] = bounds_json(b);
    report.results()["is_frame"] = asserted(gk::is_frame(s, threshold), threshold);
    return report.emit(gk::is_frame(s, threshold) ? kExitOk : kExitPropertyFails);
}

int cmd_dual_like(const std::string& command, const std::string& file, const std::string& out,
                  const ToleranceFlag& tol) {
    ReportBuilder report(command);
    const double residual_tol = tol.resolve(gk::kDualResidualTol);
    report.tolerance("dual_residual", residual_tol);

    const gk::GFrame f = load_gframe(file, report);
    const bool tight = command == "tight";
    const gk::GFrame result = tight ? gk::tight_transform(f) : gk::canonical_dual(f);
    gk::write_file(out, gk::serialize_gframe(result));

    report.results()["output"] = out;
    report.results()["bounds"] = bounds_json(gk::optimal_bounds(result));
    if (tight) {
        const double identity_residual =
            (gk::frame_operator(result).s - gk::ComplexMatrix::identity(f.dim_u()))
                .frobenius_norm();
        report.results()["frame_operator_identity_residual"] = identity_residual;
    } else {
        const gk::DualVerification v = gk::verify_dual_pair(f, result, residual_tol);
        report.results()["pair_residual"] = v.residual;
        report.results()["is_dual"] = asserted(v.is_dual, residual_tol);

        // dual of dual comes back to the original blocks
        const gk::GFrame back = gk::canonical_dual(result);
        double round_trip = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            round_trip = std::max(
                round_trip, (back.element(i).block - f.element(i).block).frobenius_norm());
        report.results()["dual_of_dual_residual"] = round_trip;
    }
    return report.emit(kExitOk);
}

int cmd_induced(const std::string& file, const std::string& out, const ToleranceFlag& tol) {
    ReportBuilder report("induced");
    const double threshold = tol.resolve(gk::kFrameThreshold);
    report.tolerance("frame_threshold", threshold);

    const gk::GFrame f = load_gframe(file, report);
    const gk::VectorFrame vf = gk::induced_sequence(f);
    if (!out.empty()) {
        gk::write_file(out, gk::serialize_vector_frame(vf));
        report.results()["output"] = out;
    }
    const gk::EquivalenceReport eq = gk::equivalence_report(f);
    report.results()["vector_count"] = vf.size();
    report.results()["statuses_agree"] = asserted(eq.statuses_agree, 1e-9);
    report.results()["frame_operator_residual"] = eq.frame_operator_residual;
    report.results()["operator_side"] = classification_json(eq.operator_side);
    report.results()["vector_side"] = {
        {"is_frame", eq.vector_side.is_frame},
        {"is_tight", eq.vector_side.is_tight},
        {"is_riesz", eq.vector_side.is_riesz},
        {"is_orthonormal", eq.vector_side.is_orthonormal},
        {"bounds", bounds_json(eq.vector_side.bounds)},
    };
    return report.emit(eq.statuses_agree ? kExitOk : kExitPropertyFails);
}

int cmd_remove(const std::string& file, int index, const ToleranceFlag& tol) {
    ReportBuilder report("remove");
    const double eig_tol = tol.resolve(gk::kRemovalEigTol);
    report.tolerance("eigenvalue_one", eig_tol);

    const gk::GFrame f = load_gframe(file, report);
    const gk::RemovalVerdict v = gk::classify_removal(f, index, eig_tol);
    report.results()["removed_index"] = v.removed_index;
    report.results()["verdict"] =
        v.verdict == gk::RemovalOutcome::kNotGComplete ? "not-g-complete" : "still-g-frame";
    report.results()["gap"] = v.gap;
    report.results()["borderline"] = v.borderline;
    if (v.certificate) report.results()["certificate"] = vector_json(*v.certificate);
    if (v.new_bounds) report.results()["new_bounds"] = bounds_json(*v.new_bounds);
    return report.emit(v.verdict == gk::RemovalOutcome::kStillGFrame ? kExitOk
                                                                     : kExitPropertyFails);
}

int cmd_exact(const std::string& file, const ToleranceFlag& tol) {
    ReportBuilder report("exact");
    const double eig_tol = tol.resolve(gk::kRemovalEigTol);
    report.tolerance("eigenvalue_one", eig_tol);

    const gk::GFrame f = load_gframe(file, report);
    const gk::ExactnessReport r = gk::exactness(f, eig_tol);
    report.results()["is_exact"] = asserted(r.is_exact, eig_tol);
    json verdicts = json::array();
    for (const gk::RemovalVerdict& v : r.verdicts) {
        verdicts.push_back(
            {{"index", v.removed_index},
             {"verdict",
              v.verdict == gk::RemovalOutcome::kNotGComplete ? "not-g-complete"
                                                             : "still-g-frame"},
             {"gap", v.gap}});
    }
    report.results()["removals"] = std::move(verdicts);
    return report.emit(r.is_exact ? kExitOk : kExitPropertyFails);
}

int cmd_resolve(const std::string& file, const std::string& operator_file,
                const std::string& variant_name, const ToleranceFlag& tol) {
    ReportBuilder report("resolve");
    const double residual_tol = tol.resolve(1e-9);
    report.tolerance("resolution_residual", residual_tol);

    const gk::GFrame f = load_gframe(file, report);
    const std::string op_bytes = gk::read_file(operator_file);
    report.add_input(operator_file, op_bytes);
    const gk::ComplexMatrix t = gk::parse_matrix(op_bytes);

    gk::AtomVariant variant;
    if (variant_name == "t-pd") variant = gk::AtomVariant::kOperatorTimesPrimalDual;
    else if (variant_name == "t-dp") variant = gk::AtomVariant::kOperatorTimesDualPrimal;
    else if (variant_name == "pd-t") variant = gk::AtomVariant::kPrimalDualTimesOperator;
    else if (variant_name == "dp-t") variant = gk::AtomVariant::kDualPrimalTimesOperator;
    else throw gk::ValidationError("unknown variant '" + variant_name +
                                   "' (expected t-pd, t-dp, pd-t or dp-t)");

    const gk::DualPair p = gk::canonical_pair(f);
    const gk::AtomicResolution r = gk::resolve(p, t, variant);
    const gk::AtomRankProfile ranks = gk::atom_rank_profile(r);

    report.results()["variant"] = gk::atom_variant_name(r.variant);
    report.results()["residual"] = r.residual;
    json atoms = json::array();
    for (std::size_t i = 0; i < r.atoms.size(); ++i)
        atoms.push_back({{"index", r.indices[i]},
                         {"frobenius_norm", r.atoms[i].frobenius_norm()},
                         {"rank", ranks.entries[i].rank},
                         {"rank_bound", ranks.entries[i].bound}});
    report.results()["atoms"] = std::move(atoms);

    const double budget = residual_tol * std::max(1.0, t.frobenius_norm());
    report.results()["within_tolerance"] = asserted(r.residual <= budget, residual_tol);
    return report.emit(r.residual <= budget ? kExitOk : kExitPropertyFails);
}

int cmd_splitting(const std::string& file, const std::string& forms_file,
                  const ToleranceFlag& tol) {
    ReportBuilder report("splitting");
    const double threshold = tol.resolve(gk::kFrameThreshold);
    report.tolerance("frame_threshold", threshold);
    report.tolerance("sandwich_epsilon_rel", 1e-8);

    const gk::GFrame f = load_gframe(file, report);
    const std::string forms_bytes = gk::read_file(forms_file);
    report.add_input(forms_file, forms_bytes);
    const gk::BilinearFormFamily forms = gk::align_forms(f, gk::parse_forms(forms_bytes));

    const gk::SandwichReport sandwich = gk::verify_sandwich(f, forms);
    report.results()["constants"] = {{"lower", sandwich.constants.lower},
                                     {"upper", sandwich.constants.upper}};
    report.results()["frame_bounds"] = bounds_json(sandwich.frame_bounds);
    report.results()["form_envelope"] = {{"c1", forms.c1()}, {"c2", forms.c2()}};
    report.results()["sandwich"] = {{"c1_over_b", sandwich.c1_over_b},
                                    {"c2_over_a", sandwich.c2_over_a},
                                    {"passes", sandwich.passes}};
    return report.emit(sandwich.passes ? kExitOk : kExitPropertyFails);
}

int cmd_verify_pair(const std::string& file_a, const std::string& file_b,
                    const ToleranceFlag& tol) {
    ReportBuilder report("verify-pair");
    const double residual_tol = tol.resolve(gk::kDualResidualTol);
    report.tolerance("dual_residual", residual_tol);

    const gk::GFrame a = load_gframe(file_a, report);
    const std::string b_bytes = gk::read_file(file_b);
    report.add_input(file_b, b_bytes);
    const gk::GFrame b = gk::parse_gframe(b_bytes);

    const gk::DualVerification v = gk::verify_dual_pair(a, b, residual_tol);
    report.results()["residual"] = v.residual;
    report.results()["is_dual"] = asserted(v.is_dual, residual_tol);
    return report.emit(v.is_dual ? kExitOk : kExitPropertyFails);
}

struct GenOptions {
    std::string out;
    std::size_t dim = 2;
    std::string sets;
    std::string dims;
    std::string matrix_file;
    std::string vectors_file;
    std::size_t group = 1, overlap = 0, pad = 0;
    std::size_t length = 8, tstep = 1, fstep = 1;
    std::string window = "delta";
    std::uint64_t seed = 1;
    double cond = 1.0;
};

std::vector<std::vector<std::size_t>> parse_sets(const std::string& text) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) throw gk::ValidationError("--sets: empty coordinate");
        current.push_back(static_cast<std::size_t>(std::stoull(token)));
        token.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            token.push_back(c);
        } else if (c == ',') {
            flush_token();
        } else if (c == '/') {
            flush_token();
            out.push_back(std::move(current));
            current.clear();
        } else {
            throw gk::ValidationError(std::string("--sets: unexpected character '") + c + "'");
        }
    }
    flush_token();
    out.push_back(std::move(current));
    return out;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> out;
    std::string token;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            token.push_back(c);
        } else if (c == ',') {
            if (token.empty()) throw gk::ValidationError("--dims: empty entry");
            out.push_back(static_cast<std::size_t>(std::stoull(token)));
            token.clear();
        } else {
            throw gk::ValidationError(std::string("--dims: unexpected character '") + c + "'");
        }
    }
    if (token.empty()) throw gk::ValidationError("--dims: empty entry");
    out.push_back(static_cast<std::size_t>(std::stoull(token)));
    return out;
}

gk::ComplexVector make_window(const GenOptions& opt) {
    gk::ComplexVector w(opt.length, gk::cplx(0.0, 0.0));
    if (opt.window == "delta") {
        w[0] = 1.0;
    } else if (opt.window == "gaussian") {
        const double center = static_cast<double>(opt.length) / 2.0;
        for (std::size_t t = 0; t < opt.length; ++t) {
            const double d = (static_cast<double>(t) - center) / center;
            w[t] = std::exp(-4.0 * d * d);
        }
    } else if (opt.window == "random") {
        gk::Rng rng(opt.seed + 0x9e37ULL);
        w = rng.cnormal_vector(opt.length);
    } else {
        throw gk::ValidationError("--window: expected delta, gaussian or random");
    }
    return w;
}

int cmd_gen(const std::string& kind, const GenOptions& opt) {
    ReportBuilder report("gen " + kind);
    std::optional<gk::GFrame> f;
    if (kind == "identity") {
        f.emplace(gk::GFrame(opt.dim, {{1, gk::ComplexMatrix::identity(opt.dim)}}));
    } else if (kind == "partition") {
        f.emplace(gk::from_partition_projections(opt.dim, parse_sets(opt.sets)));
    } else if (kind == "operator") {
        const std::string bytes = gk::read_file(opt.matrix_file);
        report.add_input(opt.matrix_file, bytes);
        f.emplace(gk::from_operator(gk::parse_matrix(bytes)));
    } else if (kind == "vectors") {
        const std::string bytes = gk::read_file(opt.vectors_file);
        report.add_input(opt.vectors_file, bytes);
        f.emplace(gk::from_vector_frame(gk::parse_vector_frame(bytes)));
    } else if (kind == "grouped") {
        f.emplace(gk::grouped_riesz(opt.dim, opt.group, opt.overlap, opt.seed, opt.pad));
    } else if (kind == "gabor") {
        f.emplace(gk::discrete_gabor(opt.length, opt.tstep, opt.fstep, make_window(opt)));
    } else if (kind == "random") {
        f.emplace(gk::random_gframe(opt.dim, parse_dims(opt.dims), opt.seed, opt.cond));
    }
    if (!f) throw gk::ValidationError("gen: unknown generator kind '" + kind + "'");

    gk::write_file(opt.out, gk::serialize_gframe(*f));
    report.results()["output"] = opt.out;
    report.results()["dim_u"] = f->dim_u();
    report.results()["elements"] = f->size();
    report.results()["dim_sum"] = f->dim_sum();
    return report.emit(kExitOk);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"g-frame toolkit: analysis, duality, classification and splittings "
                 "of operator frames over finite-dimensional complex spaces"};
    app.require_subcommand(1);

    ToleranceFlag tol;
    app.add_option("--tol", tol.cli_value,
                   "Override the command's decision tolerance (also: GFRAMEKIT_TOL)");

    std::string file, file_b, out, operator_file, forms_file, variant = "t-pd";
    int remove_index = 0;

    CLI::App* check = app.add_subcommand("check", "Classify a g-frame file");
    check->add_option("file", file)->required();

    CLI::App* bounds = app.add_subcommand("bounds", "Optimal frame bounds");
    bounds->add_option("file", file)->required();

    CLI::App* dual = app.add_subcommand("dual", "Write the canonical dual frame");
    dual->add_option("file", file)->required();
    dual->add_option("--out", out)->required();

    CLI::App* tight = app.add_subcommand("tight", "Write the Parseval (tight) transform");
    tight->add_option("file", file)->required();
    tight->add_option("--out", out)->required();

    CLI::App* induced = app.add_subcommand("induced", "Induced vector family and equivalence");
    induced->add_option("file", file)->required();
    induced->add_option("--out", out);

    CLI::App* remove = app.add_subcommand("remove", "Classify removal of one element");
    remove->add_option("file", file)->required();
    remove->add_option("--index", remove_index)->required();

    CLI::App* exact = app.add_subcommand("exact", "Exactness via per-element removal");
    exact->add_option("file", file)->required();

    CLI::App* resolve = app.add_subcommand("resolve", "Atomic resolution of an operator");
    resolve->add_option("file", file)->required();
    resolve->add_option("--operator", operator_file)->required();
    resolve->add_option("--variant", variant)->capture_default_str();

    CLI::App* splitting = app.add_subcommand("splitting", "Stable-splitting constants");
    splitting->add_option("file", file)->required();
    splitting->add_option("--forms", forms_file)->required();

    CLI::App* verify_pair = app.add_subcommand("verify-pair", "Check the duality of two frames");
    verify_pair->add_option("first", file)->required();
    verify_pair->add_option("second", file_b)->required();

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "Generate frame files");
    gen->require_subcommand(1);
    CLI::App* gen_identity = gen->add_subcommand("identity", "{I_n}");
    gen_identity->add_option("--dim", gen_opt.dim)->required();
    CLI::App* gen_partition = gen->add_subcommand("partition", "Coordinate selections");
    gen_partition->add_option("--dim", gen_opt.dim)->required();
    gen_partition->add_option("--sets", gen_opt.sets, "e.g. 1,2/2,3")->required();
    CLI::App* gen_operator = gen->add_subcommand("operator", "Single invertible operator");
    gen_operator->add_option("--matrix", gen_opt.matrix_file)->required();
    CLI::App* gen_vectors = gen->add_subcommand("vectors", "Rank-one functionals of a family");
    gen_vectors->add_option("--vectors", gen_opt.vectors_file)->required();
    CLI::App* gen_grouped = gen->add_subcommand("grouped", "Cyclic grouped functionals");
    gen_grouped->add_option("--dim", gen_opt.dim)->required();
    gen_grouped->add_option("--group", gen_opt.group)->required();
    gen_grouped->add_option("--overlap", gen_opt.overlap)->capture_default_str();
    gen_grouped->add_option("--pad", gen_opt.pad)->capture_default_str();
    gen_grouped->add_option("--seed", gen_opt.seed)->capture_default_str();
    CLI::App* gen_gabor = gen->add_subcommand("gabor", "Finite cyclic Gabor family");
    gen_gabor->add_option("--length", gen_opt.length)->required();
    gen_gabor->add_option("--tstep", gen_opt.tstep)->required();
    gen_gabor->add_option("--fstep", gen_opt.fstep)->required();
    gen_gabor->add_option("--window", gen_opt.window, "delta|gaussian|random")
        ->capture_default_str();
    gen_gabor->add_option("--seed", gen_opt.seed)->capture_default_str();
    CLI::App* gen_random = gen->add_subcommand("random", "Seeded random family");
    gen_random->add_option("--dim", gen_opt.dim)->required();
    gen_random->add_option("--dims", gen_opt.dims, "e.g. 2,3,1")->required();
    gen_random->add_option("--seed", gen_opt.seed)->capture_default_str();
    gen_random->add_option("--cond", gen_opt.cond, "target bound ratio")->capture_default_str();
    for (CLI::App* sub : gen->get_subcommands(nullptr))
        sub->add_option("--out", gen_opt.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) return cmd_check(file, tol);
        if (*bounds) return cmd_bounds(file, tol);
        if (*dual) return cmd_dual_like("dual", file, out, tol);
        if (*tight) return cmd_dual_like("tight", file, out, tol);
        if (*induced) return cmd_induced(file, out, tol);
        if (*remove) return cmd_remove(file, remove_index, tol);
        if (*exact) return cmd_exact(file, tol);
        if (*resolve) return cmd_resolve(file, operator_file, variant, tol);
        if (*splitting) return cmd_splitting(file, forms_file, tol);
        if (*verify_pair) return cmd_verify_pair(file, file_b, tol);
        if (*gen) {
            for (CLI::App* sub : gen->get_subcommands())
                return cmd_gen(sub->get_name(), gen_opt);
        }
    } catch (const gk::Error& e) {
        return classify_error(e);
    } catch (const std::exception& e) {
        return error_exit("Error", e.what(), kExitUsage);
    }
    return kExitUsage;
}
