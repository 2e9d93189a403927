#include "motrec/run.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "motrec/formulas.hpp"
#include "motrec/generators.hpp"

namespace motrec {

namespace {

using nlohmann::json;

/// Raised for bad flag combinations discovered after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WordSource resolve_source(const RunConfig& config) {
    if (config.source.empty()) throw UsageError("--source is required");
    WordSource source = parse_source(config.source);
    if (config.substitution) return transformed(source, *config.substitution);
    return source;
}

void require_within_cap(std::size_t n_max, const RunConfig& config) {
    if (n_max + 2 > config.prefix_cap) {
        throw UsageError("n_max " + std::to_string(n_max) + " too large for prefix cap " +
                         std::to_string(config.prefix_cap));
    }
}

StabilizeOptions stabilize_options(const RunConfig& config, std::ostream& err) {
    StabilizeOptions options;
    options.cap = config.prefix_cap;
    options.engine = config.engine == Engine::automatic ? Engine::automaton : config.engine;
    options.on_step = [&err](std::size_t len) {
        if (len >= (std::size_t{1} << 20)) err << "stabilize: analysing prefix of length " << len << '\n';
    };
    return options;
}

struct Measured {
    ComplexityProfile profile;
    FiniteWord word;
};

Measured measure(const WordSource& source, std::size_t n_max, const RunConfig& config, std::ostream& err) {
    if (config.length) {
        auto word = source.prefix(*config.length);
        return {count_factors(word, n_max, config.engine), std::move(word)};
    }
    require_within_cap(n_max, config);
    auto stabilized = stabilize(source, n_max, stabilize_options(config, err));
    if (!stabilized.profile.stable) {
        err << "warning: profile of " << source.descriptor() << " did not stabilize below the prefix cap "
            << config.prefix_cap << '\n';
    }
    return {std::move(stabilized.profile), std::move(stabilized.word)};
}

// The empty word prints as nothing at all.
void write_word(const FiniteWord& word, std::ostream& out) {
    if (!word.empty()) out << word.str() << '\n';
}

int do_generate(const RunConfig& config, std::ostream& out) {
    if (!config.length) throw UsageError("generate needs --length");
    write_word(resolve_source(config).prefix(*config.length), out);
    return kExitOk;
}

int do_transform(const RunConfig& config, std::istream& in, std::ostream& out) {
    if (!config.substitution) throw UsageError("transform needs --k, --power and --letter");
    if (!config.source.empty()) {
        if (!config.length) throw UsageError("transform --source needs --length");
        write_word(resolve_source(config).prefix(*config.length), out);
        return kExitOk;
    }
    std::string text(std::istreambuf_iterator<char>(in), {});
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    if (text.empty()) throw UsageError("transform read an empty word from standard input");
    write_word(substitute(FiniteWord::parse(text), *config.substitution), out);
    return kExitOk;
}

int do_complexity(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto source = resolve_source(config);
    const auto measured = measure(source, config.n_max, config, err);
    const auto& p = measured.profile;
    if (config.format == Format::csv) {
        out << "n,P,S,Pf\n";
        for (std::size_t n = 1; n <= p.n_max; ++n) {
            out << n << ',' << p.P[n] << ',' << p.S[n] << ',' << p.Pf[n] << '\n';
        }
        return kExitOk;
    }
    json rows = json::array();
    for (std::size_t n = 1; n <= p.n_max; ++n) {
        rows.push_back({{"n", n}, {"P", p.P[n]}, {"S", p.S[n]}, {"Pf", p.Pf[n]}});
    }
    json doc{{"source", source.descriptor()}, {"prefix_len", p.prefix_len}, {"stable", p.stable},
             {"n_max", p.n_max},              {"rows", rows}};
    out << doc.dump(2) << '\n';
    return kExitOk;
}

int do_check_mr(const RunConfig& config, std::ostream& out) {
    const auto source = resolve_source(config);
    const auto word = source.prefix(config.length.value_or(100000));
    const auto report = check_modulo_recurrence(word, config.n_max, config.mod_max);
    if (config.format == Format::csv) {
        out << "n,factor,modulus,verdict,missing_residue,occurrences\n";
        for (const auto& c : report.checks) {
            out << c.factor.size() << ',' << c.factor << ',' << c.modulus << ',' << to_string(c.verdict) << ',';
            if (c.missing_residue) out << *c.missing_residue;
            out << ',' << c.occurrences << '\n';
        }
    } else {
        json checks = json::array();
        for (const auto& c : report.checks) {
            json row{{"n", c.factor.size()},
                     {"factor", c.factor},
                     {"modulus", c.modulus},
                     {"verdict", to_string(c.verdict)},
                     {"occurrences", c.occurrences}};
            row["missing_residue"] = c.missing_residue ? json(*c.missing_residue) : json(nullptr);
            checks.push_back(std::move(row));
        }
        json doc{{"source", source.descriptor()}, {"prefix_len", report.prefix_len},
                 {"n_max", report.n_max},         {"mod_max", report.mod_max},
                 {"passed", report.passed},       {"failed", report.failed},
                 {"inconclusive", report.inconclusive}, {"checks", checks}};
        out << doc.dump(2) << '\n';
    }
    return report.failed == 0 ? kExitOk : kExitMismatch;
}

void write_table(const ComparisonTable& table, const RunConfig& config, json extra, std::ostream& out) {
    if (config.format == Format::csv) {
        out << "n,branch,closed,empirical,match\n";
        for (const auto& r : table.rows) {
            out << r.n << ',' << to_string(r.branch) << ',' << r.closed << ',' << r.empirical << ','
                << (r.match ? "true" : "false") << '\n';
        }
        return;
    }
    json rows = json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"n", r.n},
                        {"branch", to_string(r.branch)},
                        {"closed", r.closed},
                        {"empirical", r.empirical},
                        {"match", r.match}});
    }
    json branches = json::object();
    for (const auto& [branch, tally] : table.by_branch) {
        branches[std::string(to_string(branch))] = {{"rows", tally.rows}, {"matches", tally.matches}};
    }
    extra["rows"] = std::move(rows);
    extra["branches"] = std::move(branches);
    extra["mismatches"] = table.mismatches();
    out << extra.dump(2) << '\n';
}

int do_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.substitution) throw UsageError("verify needs --k, --power and --letter");
    const auto& spec = *config.substitution;
    if (config.theorem == Theorem::internal && !spec.internal) {
        throw UsageError("--theorem internal needs an internal letter (--internal)");
    }
    if (config.theorem != Theorem::internal && spec.internal) {
        throw UsageError("--theorem sturmian|general apply to external letters; drop --internal");
    }
    if (config.source.empty()) throw UsageError("--source is required");
    const WordSource base = parse_source(config.source);
    const WordSource v = transformed(base, spec);
    const auto measured = measure(v, config.n_max, config, err);
    auto profile = measured.profile;
    if (config.length) profile.stable = true;  // an explicit length is taken as given
    if (!profile.stable) {
        err << "error: transformed profile is unstable; refusing to compare\n";
        return kExitMismatch;
    }

    json meta{{"source", base.descriptor()},
              {"k", spec.step},
              {"power", spec.power},
              {"letter", std::string(1, spec.letter)},
              {"prefix_len", profile.prefix_len},
              {"stable", profile.stable}};

    if (config.theorem == Theorem::internal) {
        const auto K = spec.step;
        auto linear = [K](std::size_t n) {
            BranchedValue b;
            b.branch = Branch::sturmian_linear;
            b.value = static_cast<std::int64_t>((K + 1) * n + K - 1);
            b.params = branch_params(n, K, 1);
            return b;
        };
        const auto table = compare(1, config.n_max, linear, profile);
        const auto n_k = internal_stabilization(profile, K);
        meta["theorem"] = "internal";
        meta["n_k"] = n_k ? json(*n_k) : json(nullptr);
        write_table(table, config, meta, out);
        if (config.format == Format::csv) err << "n_k: " << (n_k ? std::to_string(*n_k) : "none") << '\n';
        return n_k ? kExitOk : kExitMismatch;
    }

    ClosedForm closed;
    std::optional<SourceComplexity> source_complexity;
    if (config.theorem == Theorem::sturmian) {
        closed = [&spec](std::size_t n) { return eval_sturmian(n, spec.step, spec.power); };
        meta["theorem"] = "sturmian";
    } else {
        switch (config.source_model) {
        case SourceModel::sturmian: source_complexity = SourceComplexity::sturmian(); break;
        case SourceModel::full: source_complexity = SourceComplexity::full(base.alphabet().size()); break;
        case SourceModel::empirical: {
            const auto needed = source_length_needed(config.n_max, spec.step, spec.power);
            require_within_cap(needed, config);
            auto u = stabilize(base, needed, stabilize_options(config, err));
            if (!u.profile.stable) {
                err << "error: source profile is unstable; refusing to compare\n";
                return kExitMismatch;
            }
            source_complexity = SourceComplexity::empirical(u.profile, base.descriptor());
            break;
        }
        }
        closed = [&spec, &source_complexity](std::size_t n) {
            return eval_general(n, spec.step, spec.power, *source_complexity);
        };
        meta["theorem"] = "general";
        meta["source_model"] = source_complexity->description();
    }
    const auto table = compare(1, config.n_max, closed, profile);
    write_table(table, config, meta, out);
    return table.all_match() ? kExitOk : kExitMismatch;
}

int do_selftest(const RunConfig& config, std::ostream& out) {
    std::mt19937_64 rng(config.seed);
    const std::size_t length = config.length.value_or(2000);
    if (length < 2) throw UsageError("selftest needs --length >= 2");
    const std::size_t n_max = std::min<std::size_t>(length - 1, 32);
    std::size_t failures = 0;
    out << "trial,alphabet,length,match\n";
    for (std::size_t t = 0; t < config.trials; ++t) {
        const std::size_t sigma = 2 + rng() % 3;
        std::vector<Symbol> data(length);
        for (auto& s : data) s = static_cast<Symbol>(rng() % sigma);
        const FiniteWord word(Alphabet(std::string("abcd").substr(0, sigma)), std::move(data));
        const bool match = factor_counts(word, n_max, Engine::naive) == factor_counts(word, n_max, Engine::automaton);
        if (!match) ++failures;
        out << t << ',' << sigma << ',' << length << ',' << (match ? "true" : "false") << '\n';
    }
    return failures == 0 ? kExitOk : kExitMismatch;
}

int dispatch(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    switch (config.command) {
    case Command::generate: return do_generate(config, out);
    case Command::transform: return do_transform(config, in, out);
    case Command::complexity: return do_complexity(config, out, err);
    case Command::check_mr: return do_check_mr(config, out);
    case Command::verify: return do_verify(config, out, err);
    case Command::selftest: return do_selftest(config, out);
    }
    return kExitUsage;
}

std::size_t default_prefix_cap() {
    if (const char* env = std::getenv("MOTREC_PREFIX_CAP")) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string_view(env).size() && value > 0) return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("MOTREC_PREFIX_CAP is not a positive integer: '") + env + "'");
    }
    return kDefaultPrefixCap;
}

} // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (config.output_path.empty()) return dispatch(config, in, out, err);
        std::ostringstream buffer;
        const int status = dispatch(config, in, buffer, err);
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) throw UsageError("cannot open output file '" + config.output_path + "'");
        file << buffer.str();
        return status;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config.prefix_cap = default_prefix_cap();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Letter-power substitution on infinite words: generation, complexity and verification"};
    app.require_subcommand(1);

    std::optional<std::size_t> k, power;
    std::optional<char> letter;
    bool internal = false;
    std::string engine = "auto", format = "csv", theorem = "sturmian", model = "empirical";

    const std::string source_help =
        "Generator: fibonacci | sturmian:<d1,d2,...> (last entry repeats) | champernowne | "
        "periodic:<pattern> | morphic:<a=ab;b=a;seed=a>";

    auto add_source = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--source", config.source, source_help);
        if (required) opt->required();
    };
    auto add_transform = [&](CLI::App* sub) {
        sub->add_option("--k", k, "Substitution step k >= 1")->check(CLI::PositiveNumber);
        sub->add_option("--power", power, "Letter power l >= 1")->check(CLI::PositiveNumber);
        sub->add_option("--letter", letter, "Substituted letter");
        sub->add_flag("--internal", internal, "The letter belongs to the source alphabet");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", config.output_path, "Write the report to a file instead of stdout");
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--prefix-cap", config.prefix_cap, "Largest prefix examined while stabilizing")
            ->check(CLI::PositiveNumber);
    };

    auto* generate = app.add_subcommand("generate", "Print a prefix of a word");
    add_source(generate, true);
    add_transform(generate);
    generate->add_option("--length", config.length, "Prefix length")->required();
    generate->add_option("--output", config.output_path, "Write to a file instead of stdout");

    auto* transform = app.add_subcommand("transform", "Apply the k-to-k substitution of a letter power");
    add_source(transform, false);
    add_transform(transform);
    transform->add_option("--length", config.length, "Output prefix length (with --source)");
    transform->add_option("--output", config.output_path, "Write to a file instead of stdout");

    auto* complexity = app.add_subcommand("complexity", "Factor and window complexity, columns n,P,S,Pf");
    add_source(complexity, true);
    add_transform(complexity);
    complexity->add_option("--n-max", config.n_max, "Largest factor length")->required()->check(CLI::PositiveNumber);
    complexity->add_option("--engine", engine, "Counting engine")->check(CLI::IsMember({"auto", "naive", "automaton"}));
    complexity->add_option("--length", config.length, "Analyse this exact prefix instead of stabilizing");
    add_cap(complexity);
    add_output(complexity);

    auto* check_mr = app.add_subcommand("check-mr", "Bounded modulo-recurrence check");
    add_source(check_mr, true);
    add_transform(check_mr);
    check_mr->add_option("--n-max", config.n_max, "Largest factor length")->required()->check(CLI::PositiveNumber);
    check_mr->add_option("--mod-max", config.mod_max, "Largest modulus (<= 64)")
        ->required()
        ->check(CLI::Range(1, 64));
    check_mr->add_option("--length", config.length, "Prefix length (default 100000)");
    add_output(check_mr);

    auto* verify = app.add_subcommand("verify", "Compare a closed form with brute-force counts, columns "
                                                "n,branch,closed,empirical,match");
    add_source(verify, true);
    add_transform(verify);
    verify->add_option("--theorem", theorem, "Closed form to check")
        ->check(CLI::IsMember({"sturmian", "general", "internal"}));
    verify->add_option("--source-model", model, "Source complexity used by --theorem general")
        ->check(CLI::IsMember({"empirical", "sturmian", "full"}));
    verify->add_option("--n-max", config.n_max, "Largest factor length")->required()->check(CLI::PositiveNumber);
    verify->add_option("--engine", engine, "Counting engine")->check(CLI::IsMember({"auto", "naive", "automaton"}));
    verify->add_option("--length", config.length, "Use this exact prefix instead of stabilizing");
    add_cap(verify);
    add_output(verify);

    auto* selftest = app.add_subcommand("selftest", "Naive vs automaton engine agreement on random words");
    selftest->add_option("--seed", config.seed, "Random seed");
    selftest->add_option("--trials", config.trials, "Number of random words");
    selftest->add_option("--length", config.length, "Word length (default 2000)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (*generate) config.command = Command::generate;
    if (*transform) config.command = Command::transform;
    if (*complexity) config.command = Command::complexity;
    if (*check_mr) config.command = Command::check_mr;
    if (*verify) config.command = Command::verify;
    if (*selftest) config.command = Command::selftest;

    try {
        config.engine = parse_engine(engine);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    config.format = format == "json" ? Format::json : Format::csv;
    config.theorem = theorem == "general" ? Theorem::general
                     : theorem == "internal" ? Theorem::internal
                                             : Theorem::sturmian;
    config.source_model = model == "sturmian" ? SourceModel::sturmian
                           : model == "full"  ? SourceModel::full
                                              : SourceModel::empirical;

    if (k || power || letter) {
        if (!k || !power || !letter) {
            err << "error: --k, --power and --letter must be given together\n";
            return kExitUsage;
        }
        config.substitution = SubstitutionSpec{*k, *power, *letter, internal};
    } else if (internal) {
        err << "error: --internal needs --k, --power and --letter\n";
        return kExitUsage;
    }
    return run(config, in, out, err);
}

} // namespace motrec
