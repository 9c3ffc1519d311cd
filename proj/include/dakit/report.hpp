#ifndef DAKIT_REPORT_HPP
#define DAKIT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "norms.hpp"
#include "series_io.hpp"
#include "transforms.hpp"
#include "verify.hpp"

namespace dakit {

// Verdict policy: sum of increments converges iff they decay faster than
// 1/D, so a log-log slope separates the regimes; +-0.05 around -1 is the
// undecided band. A profile with no positive increments in the fit window
// is flat, i.e. trivially summable.
inline std::string verdict_from_profile(const TailProfile& t) {
    if (t.slope_points == 0) return "consistent-with-membership";
    if (!t.slope_defined) return "inconclusive";
    if (t.decay_slope < -1.05) return "consistent-with-membership";
    if (t.decay_slope > -0.95) return "diverging";
    return "inconclusive";
}

namespace detail {

inline nlohmann::json profile_json(const TailProfile& t) {
    nlohmann::json j;
    j["space"] = t.space_label;
    j["partial_norms"] = t.partial_norms;
    j["increments"] = t.increments;
    if (t.slope_defined)
        j["decay_slope"] = t.decay_slope;
    else
        j["decay_slope"] = nullptr;
    j["slope_points"] = t.slope_points;
    return j;
}

}  // namespace detail

struct DiagnoseOptions {
    SpaceSpec space = SpaceSpec::dirichlet();
    int ladder_max = 2;
    int degree_cap = 100;
    SampleConfig samples;
};

// Full cyclicity diagnostic for a polynomial input: stability check,
// argument bound, sup norm of the normalized polynomial, then tail profiles
// of the iterated-log ladder. Level 0 is the raw profile of the input.
// Always returns a report; when the input is unstable the ladder is skipped
// and the stability witness is embedded.
inline nlohmann::json run_diagnose(const TruncatedSeries& input, const DiagnoseOptions& opt) {
    nlohmann::json rep;
    rep["input"] = series_to_json(input);
    rep["config"] = {{"space", opt.space.label},
                     {"ladder_max", opt.ladder_max},
                     {"degree_cap", opt.degree_cap},
                     {"seed", opt.samples.rng_seed},
                     {"sphere_samples", opt.samples.sphere_samples},
                     {"radial_grid", opt.samples.radial_grid},
                     {"stability_tolerance", kStabilityTolerance}};

    StablePolynomial sp(input);
    rep["declared_degree"] = sp.declared_degree;

    const StabilityEvidence ev = stability_check(input, opt.samples);
    nlohmann::json evj;
    evj["min_slice_root_modulus"] = ev.min_root_modulus;
    evj["stable"] = ev.stable;
    evj["tolerance"] = kStabilityTolerance;
    if (!ev.witness_direction.empty()) {
        nlohmann::json dir = nlohmann::json::array();
        for (const auto& z : ev.witness_direction) dir.push_back({z.real(), z.imag()});
        evj["witness_direction"] = dir;
        evj["witness_root"] = {ev.witness_root.real(), ev.witness_root.imag()};
    }
    rep["stability"] = evj;

    const TruncatedSeries full = input.with_cap(opt.degree_cap);
    nlohmann::json ladder = nlohmann::json::array();
    {
        const TailProfile raw = tail_profile(full, opt.space);
        nlohmann::json lvl;
        lvl["level"] = 0;
        lvl["transform"] = "raw input";
        lvl["profile"] = detail::profile_json(raw);
        lvl["verdict"] = verdict_from_profile(raw);
        ladder.push_back(lvl);
    }

    std::string verdict = ladder[0]["verdict"].get<std::string>();
    if (!ev.stable) {
        rep["ladder"] = ladder;
        rep["verdict"] = "inconclusive";
        rep["note"] = "input not stable: iterated-log diagnostics skipped";
        return rep;
    }

    const double nb = sp.declared_degree * M_PI;
    const double arg_est = bounded_argument_estimate(sp, opt.samples);
    rep["bounded_argument"] = {{"estimate", arg_est}, {"n_pi_bound", nb}, {"within_bound", arg_est <= nb + 1e-6}};

    const TruncatedSeries q = normalize_stable(sp).with_cap(opt.degree_cap);
    const double sup = sup_norm_estimate(q, opt.samples);
    rep["normalized_sup_norm"] = {{"estimate", sup}, {"bound", 1.0}, {"within_bound", sup <= 1.0 + 1e-9}};

    for (int k = 1; k <= opt.ladder_max; ++k) {
        const TruncatedSeries Fk = iterated_log(q, k);
        const TailProfile t = tail_profile(Fk, opt.space);
        nlohmann::json lvl;
        lvl["level"] = k;
        lvl["transform"] = "G_" + std::to_string(k) + " o log(1/q)";
        const Complex c0 = Fk.constant_term();
        lvl["constant_term"] = {c0.real(), c0.imag()};
        lvl["profile"] = detail::profile_json(t);
        lvl["verdict"] = verdict_from_profile(t);
        ladder.push_back(lvl);
        verdict = lvl["verdict"].get<std::string>();
    }
    rep["ladder"] = ladder;
    rep["verdict"] = verdict;
    return rep;
}

struct NormOptions {
    SpaceSpec space = SpaceSpec::h2d(1);
    int degree_cap = -1;  // -1: keep the input's natural cap
};

inline nlohmann::json run_norm(const TruncatedSeries& input, const NormOptions& opt) {
    const TruncatedSeries f = opt.degree_cap >= 0 ? input.with_cap(opt.degree_cap) : input;
    const TailProfile t = tail_profile(f, opt.space);
    const double nsq = t.partial_norms.empty() ? 0.0 : t.partial_norms.back();
    nlohmann::json rep;
    rep["space"] = opt.space.label;
    rep["degree_cap"] = f.degree_cap();
    rep["norm_sq"] = nsq;
    rep["norm"] = std::sqrt(nsq);
    rep["profile"] = detail::profile_json(t);
    return rep;
}

inline nlohmann::json verify_report(const std::string& suite, const std::vector<CheckRow>& rows) {
    nlohmann::json res = nlohmann::json::array();
    bool all = true;
    for (const auto& r : rows) {
        nlohmann::json j;
        j["name"] = r.name;
        j["observed"] = r.observed;
        j["bound"] = r.bound;
        j["pass"] = r.pass;
        if (!r.note.empty()) j["note"] = r.note;
        res.push_back(j);
        all = all && r.pass;
    }
    return {{"suite", suite}, {"results", res}, {"all_pass", all}};
}

inline std::string verify_text(const std::vector<CheckRow>& rows) {
    std::ostringstream os;
    os.precision(10);
    bool all = true;
    for (const auto& r : rows) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": observed " << r.observed << " vs bound " << r.bound;
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
        all = all && r.pass;
    }
    os << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace dakit

#endif
