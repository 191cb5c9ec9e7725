// Command-line surface: detection reports, parameter sweeps with boundary
// refinement, and shot-based estimation of the first realigned moment.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "realign/criteria.hpp"
#include "realign/estimator.hpp"
#include "realign/state_io.hpp"
#include "realign/sweep.hpp"
#include "realign/tripartite.hpp"

namespace {

using nlohmann::json;
using namespace realignment;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitContract = 5;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw Error("cannot open output file: " + output_path);
    out << text;
}

std::vector<Criterion> parse_criteria(const std::string& list) {
    if (list.empty() || list == "all") return all_criteria();
    std::vector<Criterion> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(criterion_from_name(item));
    return out;
}

json dims_to_json(const DimensionSignature& dims) {
    if (dims.is_bipartite())
        return json{{"kind", "bipartite"}, {"m", dims.m()}, {"n", dims.n()}};
    return json{{"kind", "tripartite-qubit"}};
}

json result_to_json(const CriterionResult& r) {
    json j;
    j["name"] = r.name;
    if (!r.error.empty()) {
        j["error"] = r.error;
        return j;
    }
    j["value"] = r.value;
    j["threshold"] = r.threshold;
    j["violated"] = r.violated;
    j["detail"] = r.detail;
    return j;
}

std::string render_bipartite_detect(const DetectionReport& report, const DensityMatrix& rho,
                                    const std::string& format) {
    std::optional<double> conc_full, conc_t1;
    if (rho.dims().is_square_bipartite()) {
        conc_full = concurrence_lower_bound(rho, ConcurrenceMode::Full);
        conc_t1 = concurrence_lower_bound(rho, ConcurrenceMode::T1Only);
    }

    if (format == "json") {
        json j;
        j["label"] = report.state_label;
        j["dims"] = dims_to_json(rho.dims());
        j["verdict"] = report.entangled ? "entangled" : "undetected";
        j["results"] = json::array();
        for (const auto& r : report.results) j["results"].push_back(result_to_json(r));
        if (conc_full) {
            j["concurrence_lower_bound"] = {{"full", *conc_full}, {"t1_only", *conc_t1}};
        }
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "criterion,value,threshold,violated\n";
        for (const auto& r : report.results) {
            if (!r.error.empty())
                os << r.name << ",nan,nan,error\n";
            else
                os << r.name << ',' << fmt(r.value) << ',' << fmt(r.threshold) << ','
                   << (r.violated ? 1 : 0) << '\n';
        }
        return os.str();
    }

    std::ostringstream os;
    os << "state: " << (report.state_label.empty() ? "<unlabeled>" : report.state_label) << " ("
       << rho.dims().to_string() << ")\n";
    os << "criterion        value           threshold       violated\n";
    for (const auto& r : report.results) {
        if (!r.error.empty()) {
            os << "  " << r.name << ": not applicable (" << r.error << ")\n";
            continue;
        }
        char line[160];
        std::snprintf(line, sizeof(line), "%-16s %-15.10g %-15.10g %s\n", r.name.c_str(), r.value,
                      r.threshold, r.violated ? "yes" : "no");
        os << line;
    }
    os << "verdict: " << (report.entangled ? "entangled" : "undetected") << "\n";
    if (conc_full)
        os << "concurrence lower bound: full " << fmt(*conc_full) << ", t1-only " << fmt(*conc_t1)
           << "\n";
    return os.str();
}

std::string render_tripartite_detect(const DensityMatrix& rho, const std::string& label,
                                     const std::string& format) {
    const TriClass cls = classify(rho);
    std::vector<CutVerdict> thm4, bisep;
    for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
        thm4.push_back(gram_cut_check(rho, q));
        bisep.push_back(biseparability_check(rho, q));
    }

    if (format == "json") {
        json j;
        j["label"] = label;
        j["dims"] = dims_to_json(rho.dims());
        j["classification"] = tri_class_name(cls);
        j["gram_cuts"] = json::array();
        for (const auto& v : thm4)
            j["gram_cuts"].push_back({{"cut", qubit_name(v.cut)},
                                          {"lhs", v.lhs},
                                          {"rhs", v.rhs},
                                          {"consistent", v.biseparable_consistent}});
        j["spa_pt_cuts"] = json::array();
        for (const auto& v : bisep)
            j["spa_pt_cuts"].push_back({{"cut", qubit_name(v.cut)},
                                        {"lhs", v.lhs},
                                        {"rhs", v.rhs},
                                        {"consistent", v.biseparable_consistent}});
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "check,cut,lhs,rhs,consistent\n";
        for (const auto& v : thm4)
            os << "gram_cut," << qubit_name(v.cut) << ',' << fmt(v.lhs) << ',' << fmt(v.rhs)
               << ',' << (v.biseparable_consistent ? 1 : 0) << '\n';
        for (const auto& v : bisep)
            os << "spa_pt," << qubit_name(v.cut) << ',' << fmt(v.lhs) << ',' << fmt(v.rhs) << ','
               << (v.biseparable_consistent ? 1 : 0) << '\n';
        os << "# classification," << tri_class_name(cls) << '\n';
        return os.str();
    }

    std::ostringstream os;
    os << "state: " << (label.empty() ? "<unlabeled>" : label) << " (2x2x2)\n";
    os << "check      cut   lhs             rhs             consistent\n";
    for (const auto& v : thm4) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-10s %-5s %-15.10g %-15.10g %s\n", "gram_cut",
                      qubit_name(v.cut).c_str(), v.lhs, v.rhs,
                      v.biseparable_consistent ? "yes" : "no");
        os << line;
    }
    for (const auto& v : bisep) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-10s %-5s %-15.10g %-15.10g %s\n", "spa_pt",
                      qubit_name(v.cut).c_str(), v.lhs, v.rhs,
                      v.biseparable_consistent ? "yes" : "no");
        os << line;
    }
    os << "classification: " << tri_class_name(cls) << "\n";
    return os.str();
}

int run_detect(const std::string& input, const std::string& criteria_list,
               const std::string& format, double rel_tol, const std::string& output) {
    const StateFile sf = read_state_file(input);
    if (sf.state.dims().is_tripartite()) {
        if (!criteria_list.empty() && criteria_list != "all")
            std::cerr << "note: --criteria ignored for tripartite states (classification run)\n";
        emit(render_tripartite_detect(sf.state, sf.label, format), output);
        return kExitOk;
    }
    const DetectionReport report = detect(sf.state, parse_criteria(criteria_list), rel_tol, sf.label);
    emit(render_bipartite_detect(report, sf.state, format), output);
    return kExitOk;
}

int run_sweep(const std::string& family_str, const std::string& criterion_str,
              std::optional<double> min, std::optional<double> max, std::optional<double> step,
              double p1_min, double p1_max, double p1_step, double p3_min, double p3_max,
              double p3_step, double refine_tol, double rel_tol, const std::string& format,
              const std::string& output) {
    const Family family = family_from_name(family_str);

    if (family == Family::TriFamily) {
        if (!criterion_str.empty())
            throw UnsupportedError("tri-family sweeps evaluate the gram-cut margins; "
                                   "--criterion does not apply");
        const TriSweepResult result =
            sweep_tri_family(p1_min, p1_max, p1_step, p3_min, p3_max, p3_step);
        emit(format == "json" ? to_json(result) : to_csv(result), output);
        return kExitOk;
    }

    const Criterion criterion =
        criterion_from_name(criterion_str.empty() ? "t1_moment" : criterion_str);
    double lo, hi, st;
    if (family == Family::RhoA) {
        lo = min.value_or(rho_a_min());
        hi = max.value_or(rho_a_max());
        st = step.value_or((rho_a_max() - rho_a_min()) / 199.0);
    } else {
        if (!min || !max || !step)
            throw UnsupportedError("rho-eps sweeps require --min, --max and --step");
        lo = *min;
        hi = *max;
        st = *step;
        if (lo <= 0.0) throw DomainError("rho-eps grid must stay within eps > 0");
    }
    SweepOptions opts;
    opts.refine_tol = refine_tol;
    opts.rel_tol = rel_tol;
    const SweepResult result = sweep_family(family, criterion, lo, hi, st, opts);
    emit(format == "json" ? to_json(result) : to_csv(result), output);
    return kExitOk;
}

int run_estimate(const std::string& input, std::int64_t shots, std::uint64_t seed,
                 const std::string& format, const std::string& output) {
    const StateFile sf = read_state_file(input);
    const ShotEstimate est = sample_t1(sf.state, shots, seed);
    const double exact = first_moment(sf.state);
    const double diff = est.estimate - exact;
    const double diff_sigmas = est.stderr_ > 0.0 ? diff / est.stderr_ : 0.0;

    if (format == "json") {
        json j;
        j["label"] = sf.label;
        j["estimate"] = est.estimate;
        j["stderr"] = est.stderr_;
        j["shots"] = est.shots;
        j["seed"] = est.seed;
        j["exact_t1"] = exact;
        j["difference"] = diff;
        j["difference_stderr_units"] = diff_sigmas;
        emit(j.dump(2) + "\n", output);
        return kExitOk;
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "estimate,stderr,shots,seed,exact_t1,difference,difference_stderr_units\n";
        os << fmt(est.estimate) << ',' << fmt(est.stderr_) << ',' << est.shots << ',' << est.seed
           << ',' << fmt(exact) << ',' << fmt(diff) << ',' << fmt(diff_sigmas) << '\n';
        emit(os.str(), output);
        return kExitOk;
    }

    std::ostringstream os;
    os << "t1 estimate: " << fmt(est.estimate) << " +/- " << fmt(est.stderr_) << " (" << est.shots
       << " shots, seed " << est.seed << ")\n";
    os << "exact t1:    " << fmt(exact) << "\n";
    os << "difference:  " << fmt(diff) << " (" << fmt(diff_sigmas) << " stderr units)\n";
    emit(os.str(), output);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realignment-based entanglement detection toolkit"};
    app.require_subcommand(1);

    std::string input, output, format, criteria_list, family_str, criterion_str;
    double rel_tol = kDefaultRankTol;
    double refine_tol = 1e-6;
    std::int64_t shots = 100000;
    std::uint64_t seed = 12345;
    std::optional<double> min, max, step;
    double p1_min = 0.0, p1_max = 1.0, p1_step = 0.01;
    double p3_min = 0.0, p3_max = 1.0 / 3.0, p3_step = 0.01;

    auto* detect_cmd = app.add_subcommand("detect", "Run separability criteria on a state file");
    detect_cmd->add_option("--input", input, "state file (JSON)")->required();
    detect_cmd->add_option("--output", output, "output path (default stdout)");
    detect_cmd->add_option("--format", format, "table|json|csv")->default_val("table");
    detect_cmd->add_option("--criteria", criteria_list,
                           "comma-separated criteria (default: ccnr,t1,r_moment,t1_moment)");
    detect_cmd->add_option("--rel-tol", rel_tol, "singular-value rank threshold");

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a state family against a criterion");
    sweep_cmd->add_option("--family", family_str, "rho-eps|rho-a|tri-family")->required();
    sweep_cmd->add_option("--criterion", criterion_str, "ccnr|t1|r_moment|t1_moment");
    sweep_cmd->add_option("--min", min, "grid minimum (1-D families)");
    sweep_cmd->add_option("--max", max, "grid maximum (1-D families)");
    sweep_cmd->add_option("--step", step, "grid step (1-D families)");
    sweep_cmd->add_option("--p1-min", p1_min, "tri-family p1 grid minimum");
    sweep_cmd->add_option("--p1-max", p1_max, "tri-family p1 grid maximum");
    sweep_cmd->add_option("--p1-step", p1_step, "tri-family p1 grid step");
    sweep_cmd->add_option("--p3-min", p3_min, "tri-family p3 grid minimum");
    sweep_cmd->add_option("--p3-max", p3_max, "tri-family p3 grid maximum");
    sweep_cmd->add_option("--p3-step", p3_step, "tri-family p3 grid step");
    sweep_cmd->add_option("--refine-tol", refine_tol, "bisection refinement tolerance");
    sweep_cmd->add_option("--rel-tol", rel_tol, "singular-value rank threshold");
    sweep_cmd->add_option("--output", output, "output path (default stdout)");
    sweep_cmd->add_option("--format", format, "csv|json")->default_val("csv");

    auto* estimate_cmd =
        app.add_subcommand("estimate", "Shot-based estimate of the first realigned moment");
    estimate_cmd->add_option("--input", input, "state file (JSON)")->required();
    estimate_cmd->add_option("--shots", shots, "number of Bernoulli shots");
    estimate_cmd->add_option("--seed", seed, "PRNG seed");
    estimate_cmd->add_option("--output", output, "output path (default stdout)");
    estimate_cmd->add_option("--format", format, "table|json|csv")->default_val("table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect_cmd->parsed())
            return run_detect(input, criteria_list, format, rel_tol, output);
        if (sweep_cmd->parsed())
            return run_sweep(family_str, criterion_str, min, max, step, p1_min, p1_max, p1_step,
                             p3_min, p3_max, p3_step, refine_tol, rel_tol, format, output);
        if (estimate_cmd->parsed()) return run_estimate(input, shots, seed, format, output);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DomainError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ContractError& e) {
        std::cerr << "internal contract failure: " << e.what() << "\n";
        return kExitContract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
