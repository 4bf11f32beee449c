#include "commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "sigalg/asymptotics.hpp"
#include "sigalg/complexify.hpp"
#include "sigalg/errors.hpp"
#include "sigalg/io.hpp"
#include "sigalg/lie.hpp"
#include "sigalg/path.hpp"
#include "sigalg/selftest.hpp"
#include "sigalg/semigroup.hpp"
#include "sigalg/signature.hpp"
#include "sigalg/tensor.hpp"

namespace sigtool {

namespace {

using namespace sigalg;

struct RunConfig {
    std::string command;
    std::string input;
    std::size_t depth = 8;
    bool depth_given = false;
    NormKind norm = NormKind::L1Projective;
    ScalarKind scalar = ScalarKind::Rational;
    std::optional<double> tol;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string lie;
    std::optional<std::size_t> dim;
    std::optional<std::uint64_t> modulus;
};

enum class Source { Path, Tensor, Lie };

std::string_view to_string(Source s) {
    switch (s) {
        case Source::Path: return "path";
        case Source::Tensor: return "tensor";
        case Source::Lie: return "lie";
    }
    return "?";
}

struct Loaded {
    Source source = Source::Tensor;
    std::optional<AnyPath> path;
    std::optional<AnyTensor> tensor;
};

AnyTensor signature_of(const AnyPath& path, std::size_t depth) {
    return std::visit([depth](const auto& p) -> AnyTensor { return signature(p, depth); }, path);
}

bool tensor_is_exact(const AnyTensor& g) { return std::holds_alternative<Tensor<Rational>>(g); }

std::string join(const std::vector<std::uint64_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

std::string show(const std::optional<double>& x) { return x ? fmt::format("{:.12g}", *x) : "-"; }

class Session {
public:
    Session(RunConfig config, std::istream& in, std::ostream& out, std::ostream& err)
        : cfg_(std::move(config)), in_(in), out_(out), err_(err) {}

    int dispatch() {
        const auto& c = cfg_.command;
        if (c == "sig") return sig();
        if (c == "zeros") return zeros();
        if (c == "asym") return asym();
        if (c == "dilate") return dilate();
        if (c == "reduce") return reduce();
        if (c == "exp") return exp_lie();
        if (c == "selftest") return selftest();
        throw InvalidArgument("unknown command " + c);
    }

private:
    // JSON goes to --out or stdout; tables go to stdout when --out is set, else stderr
    std::ostream& table() { return cfg_.out.empty() ? err_ : out_; }

    void emit(const Json& doc) {
        const std::string text = dump(doc);
        if (cfg_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(cfg_.out, std::ios::binary);
        if (!file) throw InvalidArgument("cannot write output file '" + cfg_.out + "'");
        file << text;
        if (!file) throw InvalidArgument("failed writing output file '" + cfg_.out + "'");
    }

    std::string read_input() {
        std::ostringstream buf;
        if (cfg_.input == "-") {
            buf << in_.rdbuf();
            return buf.str();
        }
        std::ifstream file(cfg_.input, std::ios::binary);
        if (!file) throw InvalidArgument("cannot read input file '" + cfg_.input + "'");
        buf << file.rdbuf();
        return buf.str();
    }

    Loaded load() {
        Loaded loaded;
        if (!cfg_.lie.empty()) {
            if (!cfg_.input.empty()) throw InvalidArgument("give either an input file or --lie, not both");
            if (!cfg_.dim) throw InvalidArgument("--lie requires --dim");
            const auto lie = lie_generator(cfg_.lie, *cfg_.dim);
            auto g = tensor_exp(lie.embed(cfg_.depth));
            loaded.source = Source::Lie;
            if (cfg_.scalar == ScalarKind::F64) loaded.tensor = to_f64(g);
            else loaded.tensor = std::move(g);
            return loaded;
        }
        if (cfg_.input.empty()) throw InvalidArgument("no input given (file path, '-' for stdin, or --lie)");
        const std::string text = read_input();
        if (cfg_.input.size() >= 4 && cfg_.input.ends_with(".csv")) {
            loaded.source = Source::Path;
            loaded.path = path_from_csv(text, cfg_.scalar);
            return loaded;
        }
        const Json doc = parse_json(text);
        if (is_tensor_document(doc)) {
            loaded.source = Source::Tensor;
            loaded.tensor = tensor_from_json(doc);
        } else {
            loaded.source = Source::Path;
            loaded.path = path_from_json(doc, cfg_.scalar);
        }
        return loaded;
    }

    AnyTensor load_tensor(Source* source = nullptr) {
        auto loaded = load();
        if (source) *source = loaded.source;
        if (loaded.path) return signature_of(*loaded.path, cfg_.depth);
        return std::move(*loaded.tensor);
    }

    void level_table(const AnyTensor& g) {
        auto& os = table();
        fmt::print(os, "{:>6}  {:>22}  {:>22}\n", "degree", "l1proj", "l2hs");
        std::visit(
            [&](const auto& t) {
                for (std::size_t k = 1; k <= t.depth(); ++k)
                    fmt::print(os, "{:>6}  {:>22.15g}  {:>22.15g}\n", k, level_norm(t, k, NormKind::L1Projective),
                               level_norm(t, k, NormKind::L2HilbertSchmidt));
            },
            g);
    }

    int sig() {
        // tensor inputs are re-emitted canonically, so sig output round-trips byte for byte
        const auto g = load_tensor();
        emit(to_json(g));
        level_table(g);
        return kExitOk;
    }

    int zeros() {
        Source source;
        const auto g = load_tensor(&source);
        const bool exact = tensor_is_exact(g);
        if (exact && cfg_.tol.value_or(0.0) > 0.0)
            throw InvalidArgument("rational mode forbids a positive tolerance for zero testing");
        const double tol = cfg_.tol.value_or(exact ? 0.0 : 1e-12);
        const auto pattern = std::visit([tol](const auto& t) { return extract_pattern(t, tol); }, g);

        Json doc = modulus_report(pattern);
        doc["source"] = std::string(to_string(source));
        doc["tolerance"] = tol;
        emit(doc);

        const auto additive = verify_additive(pattern.nonzero, pattern.depth);
        auto& os = table();
        fmt::print(os, "depth            {}\n", pattern.depth);
        fmt::print(os, "exact            {}\n", pattern.exact ? "yes" : "no");
        fmt::print(os, "nonzero degrees  {}\n", join(pattern.nonzero));
        fmt::print(os, "additively closed {}\n", additive.closed ? "yes" : "no");
        if (!pattern.trivial()) {
            const auto d = min_modulus(pattern.nonzero);
            fmt::print(os, "min modulus      {}\n", d ? std::to_string(*d) : "none");
        }
        fmt::print(os, "{}\n", doc["note"].get<std::string>());

        // signatures and exp of Lie elements are group-like, so an open pattern is a defect
        if (source != Source::Tensor && pattern.exact && !additive.closed) {
            fmt::print(err_, "sigtool: invariant failure: nonzero degrees of a group-like element are not additively closed\n");
            return kExitInvariant;
        }
        return kExitOk;
    }

    int asym() {
        auto loaded = load();
        AsymptoticsReport report;
        Json doc;
        bool failed = false;
        if (loaded.path) {
            const auto est = std::visit(
                [this](const auto& p) { return length_estimate(p, cfg_.norm, cfg_.depth); }, *loaded.path);
            report = est.report;
            doc = to_json(report);
            Json le;
            le["sup"] = est.sup ? Json(*est.sup) : Json(nullptr);
            le["length"] = est.length;
            le["ratio"] = est.ratio ? Json(*est.ratio) : Json(nullptr);
            le["trivial"] = est.trivial;
            le["within_bound"] = est.within_bound;
            le["saturated"] = est.saturated ? Json(*est.saturated) : Json(nullptr);
            if (est.trivial) le["note"] = "signature trivial to depth " + std::to_string(cfg_.depth);
            doc["length_estimate"] = std::move(le);
            failed = !est.within_bound || !report.violations.empty();
        } else {
            report = std::visit([this](const auto& t) { return analyze(t, cfg_.norm); }, *loaded.tensor);
            doc = to_json(report);
            failed = loaded.source == Source::Lie && !report.violations.empty();
        }
        doc["source"] = std::string(to_string(loaded.source));
        emit(doc);

        auto& os = table();
        fmt::print(os, "norm {}  depth {}\n", sigalg::to_string(report.kind), report.depth);
        fmt::print(os, "{:>6}  {:>22}  {:>18}  {:>18}\n", "n", "b_n = n!|g_n|", "a_n = b_n^(1/n)", "S_n");
        for (const auto& t : report.terms)
            fmt::print(os, "{:>6}  {:>22.15g}  {:>18}  {:>18}\n", t.degree, t.b, show(t.a), show(t.running_sup));
        fmt::print(os, "nonzero degrees  {}\n", join(report.nonzero_degrees));
        fmt::print(os, "S_N {}", show(report.sup));
        if (report.length) fmt::print(os, "  L {}  ratio {}", show(report.length), show(report.ratio));
        fmt::print(os, "\n");
        if (report.within_length) fmt::print(os, "S_N <= L: {}\n", *report.within_length ? "yes" : "NO");
        fmt::print(os, "supermultiplicativity violations: {}\n", report.violations.size());
        if (!report.sup) fmt::print(os, "signature trivial to depth {}\n", report.depth);
        if (failed) {
            fmt::print(err_, "sigtool: invariant failure: decay bound or supermultiplicativity violated\n");
            return kExitInvariant;
        }
        return kExitOk;
    }

    int dilate() {
        if (!cfg_.modulus) throw InvalidArgument("dilate requires --modulus");
        if (*cfg_.modulus < 2) throw InvalidArgument("--modulus must be at least 2");
        const auto g = load_tensor();
        const double tol = cfg_.tol.value_or(1e-12);
        const auto report = std::visit(
            [&](const auto& t) { return dilation_invariance_check(t, *cfg_.modulus, cfg_.norm, tol); }, g);
        emit(to_json(report));

        auto& os = table();
        fmt::print(os, "modulus {}  norm {}  tol {:g}\n", report.modulus, sigalg::to_string(report.kind), tol);
        fmt::print(os, "{:>6}  {:>22}\n", "degree", "residual");
        for (const auto& r : report.residuals) fmt::print(os, "{:>6}  {:>22.6g}\n", r.degree, r.residual);
        fmt::print(os, "residual verdict  {}\n", report.pass ? "invariant" : "not invariant");
        fmt::print(os, "pattern verdict   {}\n", report.pattern_verdict ? "invariant" : "not invariant");
        if (!report.agree) {
            fmt::print(err_, "sigtool: invariant failure: residual and divisibility verdicts disagree\n");
            return kExitInvariant;
        }
        return kExitOk;
    }

    int reduce() {
        auto loaded = load();
        if (!loaded.path) throw InvalidArgument("reduce needs a path input");
        return std::visit([this](const auto& p) { return reduce_path(p); }, *loaded.path);
    }

    template <RealScalar S>
    int reduce_path(const Path<S>& path) {
        const auto reduced = tree_reduce(path);
        emit(to_json(reduced));

        const double before = path_length(path, cfg_.norm);
        const double after = path_length(reduced, cfg_.norm);
        auto& os = table();
        fmt::print(os, "segments  {} -> {}\n", path.segment_count(), reduced.segment_count());
        fmt::print(os, "length    {:.15g} -> {:.15g} ({})\n", before, after, sigalg::to_string(cfg_.norm));
        fmt::print(os, "removed   {:.15g}\n", before - after);
        const auto a = signature(path, cfg_.depth);
        const auto b = signature(reduced, cfg_.depth);
        if constexpr (is_exact_v<S>) {
            const bool same = a == b;
            fmt::print(os, "signature preserved to depth {}: {}\n", cfg_.depth, same ? "yes (exact)" : "NO");
            if (!same) {
                fmt::print(err_, "sigtool: invariant failure: reduction changed the signature\n");
                return kExitInvariant;
            }
        } else {
            fmt::print(os, "signature deviation to depth {}: {:.3g}\n", cfg_.depth, max_abs_difference(a, b));
        }
        return kExitOk;
    }

    int exp_lie() {
        if (cfg_.lie.empty()) throw InvalidArgument("exp requires --lie");
        const auto g = load_tensor();
        emit(to_json(g));
        level_table(g);
        return kExitOk;
    }

    int selftest() {
        SelftestConfig config;
        config.seed = cfg_.seed;
        if (cfg_.depth_given) config.depth = cfg_.depth;
        config.dimension = cfg_.dim;
        const auto results = run_selftest(config);
        bool pass = true;
        double total = 0.0;
        Json suites = Json::array();
        for (const auto& r : results) {
            pass = pass && r.pass;
            total += r.seconds;
            fmt::print(out_, "{} {:<24} {:>8.2f}s  {}\n", r.pass ? "PASS" : "FAIL", r.name, r.seconds, r.detail);
            suites.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        }
        fmt::print(out_, "{} suites, {} ({:.2f}s, seed {})\n", results.size(), pass ? "all passed" : "FAILURES",
                   total, cfg_.seed);
        if (!cfg_.out.empty()) {
            Json doc;
            doc["schema_version"] = kReportSchemaVersion;
            doc["seed"] = cfg_.seed;
            doc["depth"] = config.depth ? Json(*config.depth) : Json(nullptr);
            doc["dimension"] = config.dimension ? Json(*config.dimension) : Json(nullptr);
            doc["suites"] = std::move(suites);
            doc["pass"] = pass;
            emit(doc);
        }
        return pass ? kExitOk : kExitInvariant;
    }

    RunConfig cfg_;
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string norm = "l1proj";
    std::string scalar = "rational";

    CLI::App app{"Signatures of piecewise-linear paths in the truncated tensor algebra", "sigtool"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* depth = app.add_option("--depth", cfg.depth, "truncation depth N (default 8)")->check(CLI::PositiveNumber);
    app.add_option("--norm", norm, "tensor norm: l1proj or l2hs")->check(CLI::IsMember({"l1proj", "l2hs"}));
    app.add_option("--scalar", scalar, "path arithmetic: rational or f64")->check(CLI::IsMember({"rational", "f64"}));
    app.add_option("--tol", cfg.tol, "zero / residual tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "random seed (selftest)");
    app.add_option("--out", cfg.out, "write the JSON result here instead of stdout");

    const auto input_opt = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "path JSON, path CSV, tensor JSON, or - for stdin");
    };
    const auto lie_opts = [&](CLI::App* sub) {
        sub->add_option("--lie", cfg.lie, "bracket expression; input becomes exp of it, e.g. \"[1,[1,2]]\"");
        sub->add_option("--dim", cfg.dim, "dimension for --lie")->check(CLI::PositiveNumber);
    };

    auto* sig = app.add_subcommand("sig", "signature of a path as tensor JSON");
    input_opt(sig);
    lie_opts(sig);
    auto* zeros = app.add_subcommand("zeros", "zero pattern, additivity and modulus of the nonzero degrees");
    input_opt(zeros);
    lie_opts(zeros);
    auto* asym = app.add_subcommand("asym", "normalized norms n!|g_n|, their roots and the length bound");
    input_opt(asym);
    lie_opts(asym);
    auto* dil = app.add_subcommand("dilate", "invariance under dilation by a primitive root of unity");
    input_opt(dil);
    lie_opts(dil);
    dil->add_option("--modulus", cfg.modulus, "order d of the root of unity (>= 2)");
    auto* red = app.add_subcommand("reduce", "remove zero segments, merge collinear runs, cancel backtracks");
    input_opt(red);
    auto* ex = app.add_subcommand("exp", "exp of a homogeneous Lie polynomial as tensor JSON");
    lie_opts(ex);
    auto* self = app.add_subcommand("selftest", "run the invariant suites");
    self->add_option("--dim", cfg.dim, "dimension of random paths")->check(CLI::PositiveNumber);

    std::vector<std::string> storage{"sigtool"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.depth_given = depth->count() > 0;
    cfg.norm = parse_norm_kind(norm);
    cfg.scalar = parse_scalar_kind(scalar);

    try {
        Session session(std::move(cfg), in, out, err);
        return session.dispatch();
    } catch (const ParseError& e) {
        fmt::print(err, "sigtool: parse error: {}\n", e.what());
    } catch (const ShapeMismatch& e) {
        fmt::print(err, "sigtool: shape error: {}\n", e.what());
    } catch (const Error& e) {
        fmt::print(err, "sigtool: error: {}\n", e.what());
    } catch (const nlohmann::json::exception& e) {
        fmt::print(err, "sigtool: error: {}\n", e.what());
    } catch (const std::exception& e) {
        fmt::print(err, "sigtool: internal error: {}\n", e.what());
        return kExitInvariant;
    }
    return kExitInput;
}

}  // namespace sigtool
