// Command-line front end: norms, cyclicity diagnostics, and the named
// verification suites, with machine-readable JSON/CSV reports.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <dakit/dakit.hpp>

namespace {

// exit codes shared with the acceptance suite
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitInstability = 4;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw dakit::ParseError("cannot open output file: " + out_path);
    out << text;
}

// space strings may reference a moment-table file: measure=moments:<path>
dakit::SpaceSpec parse_space(const std::string& str) {
    const std::string key = "measure=moments:";
    const auto pos = str.find(key);
    if (pos == std::string::npos) return dakit::SpaceSpec::parse(str);
    const std::string path = str.substr(pos + key.size());
    std::ifstream in(path);
    if (!in) throw dakit::ParseError("cannot open moments file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw dakit::ParseError(std::string("moments file: invalid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw dakit::ParseError("moments file: expected a non-empty JSON array");
    std::vector<double> moments;
    for (const auto& v : j) moments.push_back(v.get<double>());
    dakit::SpaceSpec base = dakit::SpaceSpec::parse(str.substr(0, pos) + "measure=sigma");
    return dakit::SpaceSpec::besov(base.dimension, base.order, dakit::RadialMeasure::custom(std::move(moments)),
                                   str);
}

std::string diagnose_text(const nlohmann::json& rep) {
    std::ostringstream os;
    os.precision(10);
    os << "declared degree: " << rep["declared_degree"].get<int>() << "\n";
    const auto& st = rep["stability"];
    os << "stability: min slice-root modulus " << st["min_slice_root_modulus"].get<double>() << " -> "
       << (st["stable"].get<bool>() ? "stable" : "NOT STABLE") << "\n";
    if (rep.contains("bounded_argument")) {
        const auto& ba = rep["bounded_argument"];
        os << "argument bound: " << ba["estimate"].get<double>() << " (n*pi = " << ba["n_pi_bound"].get<double>()
           << ")\n";
    }
    if (rep.contains("normalized_sup_norm"))
        os << "normalized sup norm: " << rep["normalized_sup_norm"]["estimate"].get<double>() << " (bound 1)\n";
    for (const auto& lvl : rep["ladder"]) {
        os << "level " << lvl["level"].get<int>() << ": ";
        const auto& slope = lvl["profile"]["decay_slope"];
        if (slope.is_null())
            os << "slope undefined";
        else
            os << "slope " << slope.get<double>();
        os << " -> " << lvl["verdict"].get<std::string>() << "\n";
    }
    os << "verdict: " << rep["verdict"].get<std::string>() << "\n";
    return os.str();
}

std::string diagnose_csv(const nlohmann::json& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "level,degree,partial_norm_sq,increment\n";
    for (const auto& lvl : rep["ladder"]) {
        const auto& pn = lvl["profile"]["partial_norms"];
        const auto& inc = lvl["profile"]["increments"];
        for (size_t d = 0; d < pn.size(); ++d)
            os << lvl["level"].get<int>() << "," << d << "," << pn[d].get<double>() << "," << inc[d].get<double>()
               << "\n";
    }
    return os.str();
}

std::string verify_csv(const std::vector<dakit::CheckRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "name,observed,bound,pass\n";
    for (const auto& r : rows) os << "\"" << r.name << "\"," << r.observed << "," << r.bound << "," << r.pass << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dakit: Drury-Arveson / weighted Besov norms and iterated-log cyclicity diagnostics"};
    app.require_subcommand(1);

    std::string input_path, space_str = "h2d:d=1", out_path, format = "json", suite = "all";
    int degree_cap = -1, ladder_max = 2, sphere_samples = 200, radial_grid = 50, dim = 1;
    std::uint64_t seed = 0;
    long long mc_points = 1'000'000;
    double tol = 1e-6;

    auto* norm = app.add_subcommand("norm", "squared norm and tail profile of a polynomial/series input");
    norm->add_option("--input", input_path, "series JSON file")->required();
    norm->add_option("--space", space_str, "space string, e.g. h2d:d=2 | dirichlet | besov:d=2,N=1,measure=lebesgue");
    norm->add_option("--degree-cap", degree_cap, "truncation degree (default: input's max degree)");
    norm->add_option("--out", out_path, "write the report here instead of stdout");
    norm->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* diag = app.add_subcommand("diagnose", "stability, argument bound, and iterated-log tail profiles");
    diag->add_option("--input", input_path, "polynomial JSON file")->required();
    diag->add_option("--space", space_str, "space string");
    diag->add_option("--degree-cap", degree_cap, "ladder truncation degree");
    diag->add_option("--ladder-max", ladder_max, "highest iterated-log level (0: raw profile only)");
    diag->add_option("--seed", seed, "sampling seed");
    diag->add_option("--sphere-samples", sphere_samples, "directions on the sphere");
    diag->add_option("--radial-grid", radial_grid, "radii per direction");
    diag->add_option("--out", out_path, "write the report here instead of stdout");
    diag->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("suite", suite,
                    "lemma-6.1 | lemma-6.2 | lemma-6.3 | theorem-6.4 | faa-di-bruno | r-identities | log1m | "
                    "weights | all");
    ver->add_option("--seed", seed, "randomized-instance seed");
    ver->add_option("--mc-points", mc_points, "Monte Carlo oracle points");
    ver->add_option("--sphere-samples", sphere_samples, "directions on the sphere");
    ver->add_option("--radial-grid", radial_grid, "radii per direction");
    ver->add_option("--tol", tol, "quadrature tolerance");
    ver->add_option("--out", out_path, "write the report here instead of stdout");
    ver->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* vid = app.add_subcommand("verify-identities", "the series-identity suites (Faa di Bruno, R-identities, log1m)");
    vid->add_option("--seed", seed, "randomized-instance seed");
    vid->add_option("--out", out_path, "write the report here instead of stdout");
    vid->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* smp = app.add_subcommand("samples-dump", "emit the sigma-distributed sphere sample set");
    smp->add_option("--dim", dim, "complex dimension d");
    smp->add_option("--sphere-samples", sphere_samples, "number of points");
    smp->add_option("--seed", seed, "sampling seed");
    smp->add_option("--out", out_path, "write here instead of stdout");
    smp->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (norm->parsed()) {
            const dakit::SpaceSpec space = parse_space(space_str);
            const dakit::TruncatedSeries input = dakit::series_from_file(
                input_path, degree_cap >= 0 ? std::optional<int>(degree_cap) : std::nullopt);
            if (input.dimension() != space.dimension) {
                std::cerr << "error: input dimension " << input.dimension() << " does not match space dimension "
                          << space.dimension << "\n";
                return kExitDimension;
            }
            dakit::NormOptions opt;
            opt.space = space;
            opt.degree_cap = degree_cap;
            const nlohmann::json rep = dakit::run_norm(input, opt);
            if (format == "json")
                write_output(rep.dump(2), out_path);
            else if (format == "csv") {
                std::ostringstream os;
                os.precision(17);
                os << "degree,partial_norm_sq,increment\n";
                const auto& pn = rep["profile"]["partial_norms"];
                const auto& inc = rep["profile"]["increments"];
                for (size_t d = 0; d < pn.size(); ++d)
                    os << d << "," << pn[d].get<double>() << "," << inc[d].get<double>() << "\n";
                write_output(os.str(), out_path);
            } else {
                std::ostringstream os;
                os.precision(12);
                os << "space: " << rep["space"].get<std::string>() << "\n"
                   << "norm_sq: " << rep["norm_sq"].get<double>() << "\n"
                   << "norm: " << rep["norm"].get<double>() << "\n";
                write_output(os.str(), out_path);
            }
            return kExitOk;
        }

        if (diag->parsed()) {
            const dakit::SpaceSpec space = parse_space(space_str);
            const dakit::TruncatedSeries input = dakit::series_from_file(input_path);
            if (input.dimension() != space.dimension) {
                std::cerr << "error: input dimension " << input.dimension() << " does not match space dimension "
                          << space.dimension << "\n";
                return kExitDimension;
            }
            dakit::DiagnoseOptions opt;
            opt.space = space;
            opt.ladder_max = ladder_max;
            opt.degree_cap = degree_cap >= 0 ? degree_cap : std::max(input.total_degree(), 0);
            opt.samples = {sphere_samples, radial_grid, seed};
            const nlohmann::json rep = dakit::run_diagnose(input, opt);
            if (format == "json")
                write_output(rep.dump(2), out_path);
            else if (format == "csv")
                write_output(diagnose_csv(rep), out_path);
            else
                write_output(diagnose_text(rep), out_path);
            return rep["stability"]["stable"].get<bool>() ? kExitOk : kExitInstability;
        }

        if (ver->parsed() || vid->parsed()) {
            dakit::VerifyOptions opt;
            opt.seed = seed;
            opt.mc_points = mc_points;
            opt.sphere_samples = sphere_samples;
            opt.radial_grid = radial_grid;
            opt.tol = tol;
            std::vector<dakit::CheckRow> rows;
            std::string label = suite;
            if (vid->parsed()) {
                label = "identities";
                for (const char* s : {"faa-di-bruno", "r-identities", "log1m"}) {
                    auto more = dakit::verify_suite(s, opt);
                    rows.insert(rows.end(), more.begin(), more.end());
                }
            } else {
                rows = dakit::verify_suite(suite, opt);
            }
            bool all = true;
            for (const auto& r : rows) all = all && r.pass;
            if (format == "json")
                write_output(dakit::verify_report(label, rows).dump(2), out_path);
            else if (format == "csv")
                write_output(verify_csv(rows), out_path);
            else
                write_output(dakit::verify_text(rows), out_path);
            return all ? kExitOk : kExitVerifyFailure;
        }

        if (smp->parsed()) {
            const auto pts = dakit::sphere_points(dim, sphere_samples, seed);
            if (format == "csv") {
                std::ostringstream os;
                os.precision(17);
                os << "index,component,re,im\n";
                for (size_t i = 0; i < pts.size(); ++i)
                    for (size_t j = 0; j < pts[i].size(); ++j)
                        os << i << "," << j << "," << pts[i][j].real() << "," << pts[i][j].imag() << "\n";
                write_output(os.str(), out_path);
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& p : pts) {
                    nlohmann::json row = nlohmann::json::array();
                    for (const auto& z : p) row.push_back({z.real(), z.imag()});
                    arr.push_back(row);
                }
                write_output(nlohmann::json{{"dimension", dim}, {"seed", seed}, {"points", arr}}.dump(2), out_path);
            }
            return kExitOk;
        }
    } catch (const dakit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dakit::InstabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInstability;
    } catch (const dakit::BranchViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInstability;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInstability;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
