#include "hyper/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyper/constructors.hpp"
#include "hyper/io.hpp"
#include "hyper/random.hpp"
#include "hyper/sobolev.hpp"

namespace hyper::cli {

namespace {

using io::Json;

struct GlobalOptions {
    double tol = kDefaultValidationTol;
    std::string format = "json";
    bool project = false;
};

struct PairOptions {
    std::string file;
    std::vector<std::string> k;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Command {
public:
    Command(const GlobalOptions& global, std::ostream& out) : global_(global), out_(out) {
        out_ << std::setprecision(17);
    }

    bool csv() const { return global_.format == "csv"; }

    FiniteHypergroup load_hypergroup(const std::string& file) const {
        return io::parse(io::load_json(file), global_.tol);
    }

    GelfandPair load_pair(const PairOptions& opts) const {
        auto g = load_hypergroup(opts.file);
        std::vector<Index> k;
        for (const auto& label : opts.k) k.push_back(g.index_of(label));
        if (k.empty()) k.push_back(g.identity());
        return GelfandPair(std::move(g), std::move(k));
    }

    PointFunction load_function(const GelfandPair& pair, const std::string& file) const {
        auto f = io::parse_function(pair.group(), io::load_json(file));
        if (global_.project) f = biinvariant_project(pair, f);
        return f;
    }

    std::vector<double> load_gamma(const GelfandPair& pair, const DualData& dual, const std::string& source) const {
        std::string name = source;
        std::optional<Index> block;
        if (const auto colon = source.find(':'); colon != std::string::npos) {
            name = source.substr(0, colon);
            block = pair.block_of(pair.group().index_of(source.substr(colon + 1)));
        }
        if (const auto preset = parse_gamma_preset(name)) return gamma_preset(pair, dual, *preset, block);
        return io::parse_gamma(io::load_json(source));
    }

    FourierOptions fourier_options() const { return FourierOptions{global_.project, global_.tol}; }

    void emit(const Json& doc) { out_ << io::dump(doc); }
    void emit_line(const Json& doc) { out_ << doc.dump() << "\n"; }
    std::ostream& out() { return out_; }
    double tol() const { return global_.tol; }

private:
    const GlobalOptions& global_;
    std::ostream& out_;
};

Json summary(std::size_t trials, std::size_t violations) {
    Json s;
    s["trials"] = trials;
    s["violations"] = violations;
    s["pass"] = violations == 0;
    return s;
}

int cmd_validate(Command& cmd, const std::string& file) {
    const auto h = io::parse_structure(io::load_json(file));
    auto report = validate_axioms(h, cmd.tol());
    // Weights missing from the file are computed once the structure holds.
    if (!h.has_haar() && report.passed()) {
        report = validate_axioms(h.with_haar(compute_haar(h)), cmd.tol());
    }
    if (cmd.csv()) {
        cmd.out() << "check,evaluated,residual,pass\n";
        for (const auto& c : report.checks) {
            cmd.out() << c.name << "," << c.evaluated << "," << c.residual << "," << (!c.evaluated || c.passed)
                      << "\n";
        }
    } else {
        cmd.emit(io::serialize_report(h, report));
    }
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_haar(Command& cmd, const std::string& file) {
    const auto h = io::parse_structure(io::load_json(file));
    require_structure_axioms(h, cmd.tol());
    const auto weights = compute_haar(h);
    const double residual = haar_residual(h, weights);
    const bool supplied_ok = !h.has_haar() || validate_axioms(h, cmd.tol()).passed();
    if (cmd.csv()) {
        cmd.out() << "label,weight\n";
        for (Index x = 0; x < h.size(); ++x) cmd.out() << h.label(x) << "," << weights[x] << "\n";
    } else {
        Json doc;
        Json w = Json::object();
        for (Index x = 0; x < h.size(); ++x) w[h.label(x)] = io::encode_real(weights[x]);
        doc["haar"] = std::move(w);
        doc["residual"] = residual;
        doc["supplied_weights_valid"] = supplied_ok;
        cmd.emit(doc);
    }
    return residual <= cmd.tol() && supplied_ok ? kExitOk : kExitCheckFailed;
}

int cmd_make(Command& cmd, const std::string& family, const std::string& param, const std::string& output) {
    auto positive = [&](const char* what) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(param, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != param.size() || v <= 0) throw UsageError(std::string(what) + " requires a positive integer");
        return static_cast<std::size_t>(v);
    };
    auto table = [&]() {
        if (param.empty() || param == "s3") return s3_table();
        return io::parse_cayley(io::load_json(param));
    };

    Json doc;
    if (family == "cyclic") {
        doc = io::serialize(cyclic(positive("cyclic")));
    } else if (family == "hamming") {
        doc = io::serialize(hamming(positive("hamming")));
    } else if (family == "group") {
        doc = io::serialize(from_cayley_table(table()));
    } else if (family == "classes") {
        doc = io::serialize(conjugacy_class_hypergroup(table()));
    } else if (family == "s3-table") {
        doc = io::serialize_cayley(s3_table());
    } else {
        throw UsageError("unknown family '" + family + "' (cyclic, hamming, group, classes, s3-table)");
    }
    if (output.empty() || output == "-") {
        cmd.emit(doc);
    } else {
        io::save_json(output, doc);
    }
    return kExitOk;
}

int cmd_cosets(Command& cmd, const PairOptions& opts) {
    const auto pair = cmd.load_pair(opts);
    const bool gelfand = is_gelfand_pair(pair);
    if (cmd.csv()) {
        cmd.out() << "block,representative,size,haar\n";
        for (Index b = 0; b < pair.blocks(); ++b) {
            cmd.out() << b << "," << pair.group().label(pair.partition().representatives[b]) << ","
                      << pair.partition().blocks[b].size() << "," << pair.block_haar(b) << "\n";
        }
    } else {
        Json doc;
        doc["blocks"] = io::serialize_partition(pair.group(), pair.partition());
        doc["quotient"] = io::serialize(pair.quotient());
        doc["gelfand_pair"] = gelfand;
        doc["commutativity_residual"] = commutativity_residual(pair);
        cmd.emit(doc);
    }
    return kExitOk;
}

int cmd_dual(Command& cmd, const PairOptions& opts) {
    const auto pair = cmd.load_pair(opts);
    const auto dual = compute_dual(pair, DualOptions{.tol = cmd.tol()});
    if (cmd.csv()) {
        cmd.out() << "character,plancherel";
        for (Index b = 0; b < pair.blocks(); ++b) {
            const auto& label = pair.group().label(pair.partition().representatives[b]);
            cmd.out() << "," << label << ".re," << label << ".im";
        }
        cmd.out() << "\n";
        for (Index i = 0; i < dual.size(); ++i) {
            cmd.out() << i << "," << dual.plancherel[i];
            for (const auto& v : dual.characters[i].values) cmd.out() << "," << v.real() << "," << v.imag();
            cmd.out() << "\n";
        }
    } else {
        cmd.emit(io::serialize_dual(pair, dual));
    }
    return kExitOk;
}

void emit_coefficients(Command& cmd, const FourierCoefficients& coeffs) {
    if (cmd.csv()) {
        cmd.out() << "character,re,im\n";
        for (Index i = 0; i < coeffs.size(); ++i) cmd.out() << i << "," << coeffs[i].real() << "," << coeffs[i].imag() << "\n";
    } else {
        cmd.emit(io::serialize_coefficients(coeffs));
    }
}

int cmd_fourier(Command& cmd, const PairOptions& opts, const std::string& fn_file) {
    const auto pair = cmd.load_pair(opts);
    const auto dual = compute_dual(pair);
    const auto f = io::parse_function(pair.group(), io::load_json(fn_file));
    emit_coefficients(cmd, fourier(pair, dual, f, cmd.fourier_options()));
    return kExitOk;
}

int cmd_ifourier(Command& cmd, const PairOptions& opts, const std::string& coeff_file) {
    const auto pair = cmd.load_pair(opts);
    const auto dual = compute_dual(pair);
    const auto coeffs = io::parse_coefficients(io::load_json(coeff_file));
    const auto f = inverse_fourier(pair, dual, coeffs);
    if (cmd.csv()) {
        cmd.out() << "label,re,im\n";
        for (Index x = 0; x < f.size(); ++x) cmd.out() << pair.group().label(x) << "," << f[x].real() << "," << f[x].imag() << "\n";
    } else {
        cmd.emit(io::serialize_function(pair.group(), f));
    }
    return kExitOk;
}

int cmd_plancherel(Command& cmd, const PairOptions& opts, std::size_t trials, std::uint64_t seed) {
    const auto pair = cmd.load_pair(opts);
    const auto dual = compute_dual(pair);
    Rng rng(seed);
    std::size_t violations = 0;
    if (cmd.csv()) cmd.out() << "trial,residual,pass\n";
    for (std::size_t t = 0; t < trials; ++t) {
        const auto f = lift_blocks(pair, rng.complex_normals(pair.blocks()));
        const double residual = plancherel_residual(pair, dual, f);
        const bool pass = residual <= cmd.tol();
        if (!pass) ++violations;
        if (cmd.csv()) {
            cmd.out() << t << "," << residual << "," << pass << "\n";
        } else {
            Json row;
            row["trial"] = t;
            row["residual"] = residual;
            row["pass"] = pass;
            cmd.emit_line(row);
        }
    }
    if (!cmd.csv()) {
        Json s = summary(trials, violations);
        s["plancherel"] = dual.plancherel;
        Json doc;
        doc["summary"] = std::move(s);
        cmd.emit_line(doc);
    }
    return violations == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_sobolev(Command& cmd, const PairOptions& opts, const std::string& gamma_source, double s,
                const std::string& fn_file) {
    const auto pair = cmd.load_pair(opts);
    const auto dual = compute_dual(pair);
    const auto params = SobolevParams::make(s, cmd.load_gamma(pair, dual, gamma_source));
    const auto f = io::parse_function(pair.group(), io::load_json(fn_file));
    const auto coeffs = fourier(pair, dual, f, cmd.fourier_options());
    const double norm = sobolev_norm(dual, coeffs, params);
    const double l2 = std::sqrt(l2_norm_squared(pair.group(), inverse_fourier(pair, dual, coeffs)));
    if (cmd.csv()) {
        cmd.out() << "s,norm,l2_norm,supnorm_constant\n"
                  << s << "," << norm << "," << l2 << "," << supnorm_constant(pair, dual, params) << "\n";
    } else {
        Json doc;
        doc["s"] = s;
        doc["gamma"] = params.gamma;
        doc["norm"] = norm;
        doc["l2_norm"] = l2;
        doc["supnorm_constant"] = supnorm_constant(pair, dual, params);
        cmd.emit(doc);
    }
    return kExitOk;
}

struct EmbedOptions {
    std::string gamma = "zero";
    double s = 1.0;
    std::optional<double> sigma;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double slack = kDefaultSlack;
};

int cmd_embed_report(Command& cmd, const PairOptions& opts, const EmbedOptions& e) {
    const auto pair = cmd.load_pair(opts);
    const auto dual = compute_dual(pair);
    const auto params = SobolevParams::make(e.s, cmd.load_gamma(pair, dual, e.gamma));
    if (e.sigma && !(e.s > *e.sigma && *e.sigma > 0.0)) throw ParameterError("--sigma requires s > sigma > 0");

    Rng rng(e.seed);
    std::size_t violations = 0;
    if (cmd.csv()) cmd.out() << "trial,check,lhs,rhs,constant,margin,pass\n";
    for (std::size_t t = 0; t < e.trials; ++t) {
        const auto f = lift_blocks(pair, rng.complex_normals(pair.blocks()));
        std::vector<std::pair<std::string, EmbeddingReport>> checks;
        checks.emplace_back("l2", check_l2_embedding(pair, dual, f, params, e.slack));
        if (e.sigma) {
            checks.emplace_back("monotone", check_monotone_embedding(pair, dual, f, e.s, *e.sigma, params.gamma, e.slack));
        }
        checks.emplace_back("supnorm", check_supnorm_embedding(pair, dual, f, params, e.slack));
        checks.emplace_back("modulus", check_modulus_embedding(pair, dual, f, params, e.slack));

        bool pass = true;
        for (const auto& [name, r] : checks) pass = pass && r.pass;
        if (!pass) ++violations;

        if (cmd.csv()) {
            for (const auto& [name, r] : checks) {
                cmd.out() << t << "," << name << "," << r.lhs << "," << r.rhs << "," << r.constant << "," << r.margin
                          << "," << r.pass << "\n";
            }
        } else {
            Json row;
            row["trial"] = t;
            row["pass"] = pass;
            for (const auto& [name, r] : checks) row[name] = io::serialize_embedding(r);
            cmd.emit_line(row);
        }
    }
    if (!cmd.csv()) {
        Json s = summary(e.trials, violations);
        s["s"] = e.s;
        if (e.sigma) s["sigma"] = *e.sigma;
        s["gamma"] = params.gamma;
        s["supnorm_constant"] = supnorm_constant(pair, dual, params);
        s["character_oscillation"] = character_oscillation(dual);
        Json doc;
        doc["summary"] = std::move(s);
        cmd.emit_line(doc);
    }
    return violations == 0 ? kExitOk : kExitCheckFailed;
}

void add_pair_options(CLI::App* sub, PairOptions& opts) {
    sub->add_option("file", opts.file, "Hypergroup definition (JSON)")->required();
    sub->add_option("--k", opts.k, "Labels of the subhypergroup K (default: identity only)")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harmonic analysis and Sobolev embeddings on finite hypergroup Gelfand pairs", "hgtool"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--tol", global.tol, "Numeric tolerance for checks")->check(CLI::PositiveNumber);
    app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--project", global.project, "Project non-bi-invariant functions instead of failing");

    std::string file;
    auto* validate = app.add_subcommand("validate", "Check the hypergroup axioms");
    validate->add_option("file", file, "Hypergroup definition (JSON)")->required();

    auto* haar = app.add_subcommand("haar", "Compute left Haar weights");
    haar->add_option("file", file, "Hypergroup definition (JSON)")->required();

    std::string family, param, output;
    auto* make = app.add_subcommand("make", "Build a bundled hypergroup family");
    make->add_option("family", family, "cyclic | hamming | group | classes | s3-table")->required();
    make->add_option("param", param, "Order, dimension, or Cayley table file (default s3)");
    make->add_option("-o,--output", output, "Output file (default stdout)");

    PairOptions pair_opts;
    auto* cosets = app.add_subcommand("cosets", "Double-coset partition and quotient hypergroup");
    add_pair_options(cosets, pair_opts);

    auto* dual = app.add_subcommand("dual", "Spherical characters and Plancherel weights");
    add_pair_options(dual, pair_opts);

    std::string fn_file;
    auto* fourier_cmd = app.add_subcommand("fourier", "Spherical Fourier transform of a function");
    add_pair_options(fourier_cmd, pair_opts);
    fourier_cmd->add_option("--f", fn_file, "Function file")->required();

    std::string coeff_file;
    auto* ifourier = app.add_subcommand("ifourier", "Inverse spherical Fourier transform");
    add_pair_options(ifourier, pair_opts);
    ifourier->add_option("--c", coeff_file, "Coefficient file")->required();

    std::size_t trials = 100;
    std::uint64_t seed = 0;
    auto* plancherel = app.add_subcommand("plancherel", "Plancherel identity on random bi-invariant functions");
    add_pair_options(plancherel, pair_opts);
    plancherel->add_option("--trials", trials, "Number of random functions");
    plancherel->add_option("--seed", seed, "Random seed");

    std::string gamma = "zero";
    double s = 1.0;
    auto* sobolev = app.add_subcommand("sobolev", "Sobolev norm of a function");
    sobolev->alias("sobolev-norm");
    add_pair_options(sobolev, pair_opts);
    sobolev->add_option("--gamma", gamma, "zero | index | spectral-gap[:label] | gamma file");
    sobolev->add_option("--s", s, "Smoothness exponent s > 0")->required();
    sobolev->add_option("--f", fn_file, "Function file")->required();

    EmbedOptions embed;
    double sigma = 0.0;
    auto* embed_cmd = app.add_subcommand("embed-report", "Check the embedding inequalities on random functions");
    add_pair_options(embed_cmd, pair_opts);
    embed_cmd->add_option("--gamma", embed.gamma, "zero | index | spectral-gap[:label] | gamma file");
    embed_cmd->add_option("--s", embed.s, "Smoothness exponent s > 0")->required();
    auto* sigma_opt = embed_cmd->add_option("--sigma", sigma, "Lower exponent for the monotone embedding");
    embed_cmd->add_option("--trials", embed.trials, "Number of random functions");
    embed_cmd->add_option("--seed", embed.seed, "Random seed");
    embed_cmd->add_option("--slack", embed.slack, "Absolute slack, scaled by max(1, rhs)");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    Command cmd(global, out);
    try {
        if (*validate) return cmd_validate(cmd, file);
        if (*haar) return cmd_haar(cmd, file);
        if (*make) return cmd_make(cmd, family, param, output);
        if (*cosets) return cmd_cosets(cmd, pair_opts);
        if (*dual) return cmd_dual(cmd, pair_opts);
        if (*fourier_cmd) return cmd_fourier(cmd, pair_opts, fn_file);
        if (*ifourier) return cmd_ifourier(cmd, pair_opts, coeff_file);
        if (*plancherel) return cmd_plancherel(cmd, pair_opts, trials, seed);
        if (*sobolev) return cmd_sobolev(cmd, pair_opts, gamma, s, fn_file);
        if (*embed_cmd) {
            if (sigma_opt->count() > 0) embed.sigma = sigma;
            return cmd_embed_report(cmd, pair_opts, embed);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AxiomError& e) {
        err << "error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitStructural;
    }
    return kExitUsage;
}

}  // namespace hyper::cli
