#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/bounds.hpp"
#include "hardy/corpus.hpp"
#include "hardy/extremal.hpp"
#include "hardy/io.hpp"
#include "hardy/multiplier.hpp"
#include "hardy/norms.hpp"
#include "hardy/numtheory.hpp"

namespace hardy::cli {

namespace {

enum class Format { json, csv };

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;
    bool exact = false;
    bool mc = false;
    std::size_t term_cap = kDefaultTermCap;
    Format format = Format::json;
    std::string out_path;

    NormOptions norm_options() const {
        NormOptions o;
        o.policy = exact ? MethodPolicy::exact : mc ? MethodPolicy::monte_carlo : MethodPolicy::automatic;
        o.mc.seed = seed;
        o.mc.samples = samples;
        o.term_cap = term_cap;
        return o;
    }
};

void check_exponents(double p, double q) {
    require(p >= 1.0, ErrorKind::domain, "p must be >= 1");
    require(p < q, ErrorKind::domain, "ratio requires p < q");
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    require(parts.size() == 3, ErrorKind::parse, "--x-grid expects start:stop:factor");
    double v[3];
    for (int i = 0; i < 3; ++i) {
        try {
            std::size_t used = 0;
            v[i] = std::stod(parts[i], &used);
            require(used == parts[i].size(), ErrorKind::parse, "bad number in --x-grid: " + parts[i]);
        } catch (const std::logic_error&) {
            fail(ErrorKind::parse, "bad number in --x-grid: " + parts[i]);
        }
    }
    require(v[0] > 0.0 && v[1] >= v[0] && v[2] > 1.0, ErrorKind::domain,
            "--x-grid needs 0 < start <= stop and factor > 1");
    std::vector<double> xs;
    for (double x = v[0]; x <= v[1] * (1.0 + 1e-12); x *= v[2]) xs.push_back(x);
    return xs;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(part, &used));
            require(used == part.size(), ErrorKind::parse, "bad number in --params: " + part);
        } catch (const std::logic_error&) {
            fail(ErrorKind::parse, "bad number in --params: " + part);
        }
    }
    return out;
}

template<class Report>
void emit(std::ostream& os, Format format, const Report& r) {
    if (format == Format::json) {
        os << to_json(r) << '\n';
    } else {
        os << csv_header(r) << '\n' << csv_row(r) << '\n';
    }
}

void cmd_norm(const std::string& file, double p, const RunConfig& cfg, std::ostream& os) {
    require(p >= 1.0, ErrorKind::domain, "p must be >= 1");
    DirichletPoly d = read_dirichlet_file(file);
    emit(os, cfg.format, norm(d, p, cfg.norm_options()));
}

void cmd_ratio(const std::string& file, double p, double q, const RunConfig& cfg, std::ostream& os) {
    check_exponents(p, q);
    DirichletPoly d = read_dirichlet_file(file);
    emit(os, cfg.format, ratio(d, q, p, cfg.norm_options()));
}

void cmd_extremal(std::optional<double> x, const std::string& grid, double p, double q, const RunConfig& cfg,
                  std::ostream& os) {
    check_exponents(p, q);
    require(x.has_value() != !grid.empty(), ErrorKind::domain, "give exactly one of --x and --x-grid");
    std::vector<double> xs = x ? std::vector<double>{*x} : parse_grid(grid);
    if (cfg.format == Format::csv) os << csv_header(LowerBoundReport{}) << '\n' << std::flush;
    for (double v : xs) {
        LowerBoundReport r = lower_bound_report(v, p, q, cfg.norm_options());
        os << (cfg.format == Format::csv ? csv_row(r) : to_json(r)) << '\n' << std::flush;
    }
}

void cmd_bounds(double x, double p, double q, std::optional<double> y, const RunConfig& cfg, std::ostream& os) {
    check_exponents(p, q);
    emit(os, cfg.format, certified_upper_bound(x, p, q, y));
}

void cmd_smooth(double x, double y, bool list, const RunConfig& cfg, std::ostream& os) {
    require(x >= 1.0 && y >= 1.0, ErrorKind::domain, "smooth needs x >= 1 and y >= 1");
    if (cfg.format == Format::csv) {
        if (list) {
            os << "n\n";
            for (auto n : smooth_numbers(x, y)) os << n << '\n';
        } else {
            os << "x,y,count\n" << format_double(x) << ',' << format_double(y) << ',' << smooth_count(x, y) << '\n';
        }
        return;
    }
    nlohmann::ordered_json j;
    j["x"] = x;
    j["y"] = y;
    if (list) {
        auto numbers = smooth_numbers(x, y);
        j["count"] = numbers.size();
        j["numbers"] = numbers;
    } else {
        j["count"] = smooth_count(x, y);
    }
    os << j.dump() << '\n';
}

void cmd_conjecture(unsigned m_max, unsigned corpus_size, double p, double q, const RunConfig& cfg,
                    std::ostream& os) {
    check_exponents(p, q);
    require(m_max >= 1 && corpus_size >= 1, ErrorKind::domain, "conjecture needs --m-max >= 1 and --corpus-size >= 1");
    Corpus corpus(cfg.seed);
    NormOptions opts = cfg.norm_options();
    if (cfg.format == Format::csv) os << "m,polynomials,max_ratio,bound,violations,status,seed\n";
    for (unsigned m = 1; m <= m_max; ++m) {
        double bound = conjecture_bound(m, p, q);
        double worst = 0.0;
        unsigned violations = 0;
        for (unsigned i = 0; i < corpus_size; ++i) {
            auto vars = static_cast<unsigned>(1 + corpus.below(6));
            TrigPoly poly = corpus.homogeneous(m, vars, 12);
            double r = ratio(poly, q, p, opts).value;
            worst = std::max(worst, r);
            if (r > bound) ++violations;
        }
        const char* status = violations == 0 ? "pass" : "fail";
        if (cfg.format == Format::csv) {
            os << m << ',' << corpus_size << ',' << format_double(worst) << ',' << format_double(bound) << ','
               << violations << ',' << status << ',' << cfg.seed << '\n';
        } else {
            nlohmann::ordered_json j;
            j["m"] = m;
            j["polynomials"] = corpus_size;
            j["max_ratio"] = worst;
            j["bound"] = bound;
            j["violations"] = violations;
            j["status"] = status;
            j["seed"] = cfg.seed;
            os << j.dump() << '\n';
        }
        os << std::flush;
    }
}

void cmd_multiplier(const std::string& family, const std::string& params, std::uint64_t N, double p, double q,
                    double eps, const RunConfig& cfg, std::ostream& os) {
    check_exponents(p, q);
    std::vector<double> values = parse_list(params);
    std::optional<MultiplierSeq> lambda;
    if (family == "power" || family == "logexp") {
        require(values.size() == 1, ErrorKind::parse, "--params takes one value for family " + family);
        lambda = family == "power" ? MultiplierSeq::power(values[0]) : MultiplierSeq::log_exp(values[0]);
    } else {
        lambda = MultiplierSeq::table(std::move(values));
    }
    require(lambda->decreasing(), ErrorKind::domain, "multiplier sequence must be non-increasing");
    ConditionSeries s = condition_series(*lambda, p, q, eps, N);
    if (cfg.format == Format::csv) {
        os << series_csv(s);
        return;
    }
    auto j = nlohmann::ordered_json::parse(to_json(s));
    j["family"] = family;
    j["description"] = lambda->description();
    j["p"] = p;
    j["q"] = q;
    j["eps"] = eps;
    os << j.dump() << '\n';
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::term_cap ? kExitCap : kExitUsage; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hardy-space norms of Dirichlet polynomials", "hardy"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "json";
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str()->check(CLI::PositiveNumber);
    auto* exact_flag = app.add_flag("--exact", cfg.exact, "require exact computation");
    app.add_flag("--mc", cfg.mc, "force Monte Carlo")->excludes(exact_flag);
    app.add_option("--term-cap", cfg.term_cap, "maximum materialized terms")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--out", cfg.out_path, "write output to this file");

    std::string file;
    double p = 2.0;
    double q = 4.0;
    double eps = 0.1;
    std::optional<double> x;
    std::optional<double> y;
    double x_plain = 0.0;
    std::string grid;
    bool list = false;
    unsigned m_max = 4;
    unsigned corpus_size = 100;
    std::string family = "power";
    std::string params = "1";
    std::uint64_t N = 1000;

    auto* norm_cmd = app.add_subcommand("norm", "H_p norm of a Dirichlet polynomial file");
    norm_cmd->add_option("file", file, "polynomial JSON")->required();
    norm_cmd->add_option("--p", p, "exponent")->required();

    auto* ratio_cmd = app.add_subcommand("ratio", "||D||_q / ||D||_p for a Dirichlet polynomial file");
    ratio_cmd->add_option("file", file, "polynomial JSON")->required();
    ratio_cmd->add_option("--p", p)->capture_default_str();
    ratio_cmd->add_option("--q", q)->capture_default_str();

    auto* extremal_cmd = app.add_subcommand("extremal", "lower-bound report for the extremal family");
    extremal_cmd->add_option("--x", x, "length");
    extremal_cmd->add_option("--x-grid", grid, "start:stop:factor");
    extremal_cmd->add_option("--p", p)->capture_default_str();
    extremal_cmd->add_option("--q", q)->capture_default_str();

    auto* bounds_cmd = app.add_subcommand("bounds", "certified upper bound for length x");
    bounds_cmd->add_option("--x", x_plain)->required();
    bounds_cmd->add_option("--p", p)->capture_default_str();
    bounds_cmd->add_option("--q", q)->capture_default_str();
    bounds_cmd->add_option("--y", y, "smoothness parameter (default: optimal)");

    auto* smooth_cmd = app.add_subcommand("smooth", "count y-smooth integers up to x");
    smooth_cmd->add_option("--x", x_plain)->required();
    double y_plain = 2.0;
    smooth_cmd->add_option("--y", y_plain)->required();
    smooth_cmd->add_flag("--list", list, "list the numbers");

    auto* conj_cmd = app.add_subcommand("conjecture", "test the homogeneous-norm conjecture on a random corpus");
    conj_cmd->add_option("--m-max", m_max)->capture_default_str();
    conj_cmd->add_option("--corpus-size", corpus_size)->capture_default_str();
    conj_cmd->add_option("--p", p)->capture_default_str();
    conj_cmd->add_option("--q", q)->capture_default_str();

    auto* mult_cmd = app.add_subcommand("multiplier", "partial sums of the multiplier condition");
    mult_cmd->add_option("--family", family)->check(CLI::IsMember({"power", "logexp", "table"}))->capture_default_str();
    mult_cmd->add_option("--params", params, "comma-separated parameters or table values")->capture_default_str();
    mult_cmd->add_option("--N", N)->capture_default_str();
    mult_cmd->add_option("--p", p)->capture_default_str();
    mult_cmd->add_option("--q", q)->capture_default_str();
    mult_cmd->add_option("--eps", eps)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "hardy: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.format = format == "csv" ? Format::csv : Format::json;

    std::ofstream file_out;
    if (!cfg.out_path.empty()) {
        file_out.open(cfg.out_path);
        if (!file_out) {
            err << "hardy: cannot open " << cfg.out_path << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& os = cfg.out_path.empty() ? out : file_out;

    try {
        if (norm_cmd->parsed()) {
            cmd_norm(file, p, cfg, os);
        } else if (ratio_cmd->parsed()) {
            cmd_ratio(file, p, q, cfg, os);
        } else if (extremal_cmd->parsed()) {
            cmd_extremal(x, grid, p, q, cfg, os);
        } else if (bounds_cmd->parsed()) {
            cmd_bounds(x_plain, p, q, y, cfg, os);
        } else if (smooth_cmd->parsed()) {
            cmd_smooth(x_plain, y_plain, list, cfg, os);
        } else if (conj_cmd->parsed()) {
            cmd_conjecture(m_max, corpus_size, p, q, cfg, os);
        } else if (mult_cmd->parsed()) {
            cmd_multiplier(family, params, N, p, q, eps, cfg, os);
        }
    } catch (const Error& e) {
        err << "hardy: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "hardy: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}

} // namespace hardy::cli
