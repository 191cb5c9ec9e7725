#include "realign/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace realignment {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CriterionResult evaluate_criterion(const DensityMatrix& rho, Criterion criterion,
                                   double rel_tol) {
    switch (criterion) {
        case Criterion::Ccnr: return ccnr(rho);
        case Criterion::T1: return t1_criterion(rho);
        case Criterion::RMoment: return r_moment_criterion(rho, rel_tol);
        case Criterion::T1Moment: return t1_moment_criterion(rho, rel_tol);
        default: throw UnsupportedError("criterion not sweepable: " + criterion_name(criterion));
    }
}

DensityMatrix make_family_state(Family family, double parameter) {
    switch (family) {
        case Family::RhoEps: return rho_epsilon(parameter);
        case Family::RhoA: return rho_a(parameter);
        default: throw UnsupportedError("1-D sweep requires rho-eps or rho-a");
    }
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::RhoEps: return "rho-eps";
        case Family::RhoA: return "rho-a";
        case Family::TriFamily: return "tri-family";
    }
    throw ArgumentError("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "rho-eps") return Family::RhoEps;
    if (name == "rho-a") return Family::RhoA;
    if (name == "tri-family") return Family::TriFamily;
    throw UnsupportedError("unknown family name: " + name);
}

std::vector<double> make_grid(double min, double max, double step) {
    if (!(step > 0.0)) throw ArgumentError("grid step must be positive");
    if (max < min) throw ArgumentError("grid max must be >= min");
    const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = min + static_cast<double>(i) * step;
    return grid;
}

std::pair<double, double> criterion_sides(Family family, Criterion criterion, double parameter,
                                          double rel_tol) {
    const DensityMatrix rho = make_family_state(family, parameter);
    const CriterionResult res = evaluate_criterion(rho, criterion, rel_tol);
    return {res.value, res.threshold};
}

double refine_boundary(const std::function<double(double)>& margin, double lo, double hi,
                       const SweepOptions& opts) {
    double flo = margin(lo);
    double fhi = margin(hi);
    const bool lo_violated = flo > 0.0;
    if (lo_violated == (fhi > 0.0)) throw ArgumentError("refine_boundary bracket has no sign change");
    double fmid = flo;
    for (int iter = 0; iter < opts.max_bisection_iters; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket exhausted at fp resolution
        fmid = margin(mid);
        if ((fmid > 0.0) == lo_violated) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if (hi - lo <= opts.refine_tol && std::abs(fmid) <= kViolationSlack) break;
    }
    return 0.5 * (lo + hi);
}

SweepResult sweep_family(Family family, Criterion criterion, double min, double max, double step,
                         const SweepOptions& opts) {
    if (family == Family::TriFamily)
        throw UnsupportedError("tri-family sweeps use sweep_tri_family");
    SweepResult result;
    result.parameter_name = family == Family::RhoEps ? "eps" : "a";
    result.criterion = criterion_name(criterion);

    const std::vector<double> grid = make_grid(min, max, step);
    result.points.reserve(grid.size());
    for (double x : grid) {
        SweepPoint pt;
        pt.parameter = x;
        try {
            const auto [lhs, rhs] = criterion_sides(family, criterion, x, opts.rel_tol);
            pt.lhs = lhs;
            pt.rhs = rhs;
            pt.margin = lhs - rhs;
            pt.violated = pt.margin > kViolationSlack;
        } catch (const DomainError&) {
            pt.lhs = pt.rhs = pt.margin = kNan; // domain hole (e.g. eps = 1)
            pt.violated = false;
        }
        result.points.push_back(pt);
    }

    const auto margin_at = [&](double x) -> double {
        const auto [lhs, rhs] = criterion_sides(family, criterion, x, opts.rel_tol);
        return lhs - rhs;
    };

    // Maximal runs of positive margin; refine interior edges by bisection.
    const auto is_pos = [&](std::size_t i) {
        return !std::isnan(result.points[i].margin) && result.points[i].margin > 0.0;
    };
    std::size_t i = 0;
    const std::size_t n = result.points.size();
    while (i < n) {
        if (!is_pos(i)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && is_pos(j + 1)) ++j;

        Interval iv;
        if (i == 0 || std::isnan(result.points[i - 1].margin))
            iv.lo = result.points[i].parameter;
        else
            iv.lo = refine_boundary(margin_at, result.points[i - 1].parameter,
                                    result.points[i].parameter, opts);
        if (j + 1 >= n || std::isnan(result.points[j + 1].margin))
            iv.hi = result.points[j].parameter;
        else
            iv.hi = refine_boundary(margin_at, result.points[j].parameter,
                                    result.points[j + 1].parameter, opts);
        result.detected_intervals.push_back(iv);
        i = j + 1;
    }
    return result;
}

TriSweepResult sweep_tri_family(double p1_min, double p1_max, double p1_step, double p3_min,
                                double p3_max, double p3_step) {
    TriSweepResult result;
    const std::vector<double> g1 = make_grid(p1_min, p1_max, p1_step);
    const std::vector<double> g3 = make_grid(p3_min, p3_max, p3_step);
    result.points.reserve(g1.size() * g3.size());
    for (double p1 : g1)
        for (double p3 : g3) {
            TriSweepPoint pt;
            pt.p1 = p1;
            pt.p3 = p3;
            if (!tri_family_feasible(p1, p3)) {
                pt.feasible = false;
                pt.margin[0] = pt.margin[1] = pt.margin[2] = kNan;
                result.points.push_back(pt);
                continue;
            }
            const DensityMatrix rho = tri_family(p1, p3);
            bool all = true;
            int idx = 0;
            for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
                const CutVerdict v = gram_cut_check(rho, q);
                pt.margin[idx++] = v.lhs - v.rhs;
                all = all && v.violated();
            }
            pt.all_violated = all;
            result.points.push_back(pt);
        }
    return result;
}

std::string to_csv(const SweepResult& result) {
    std::ostringstream os;
    os << result.parameter_name << ",lhs,rhs,margin,violated\n";
    for (const SweepPoint& pt : result.points)
        os << fmt(pt.parameter) << ',' << fmt(pt.lhs) << ',' << fmt(pt.rhs) << ','
           << fmt(pt.margin) << ',' << (pt.violated ? 1 : 0) << '\n';
    for (const Interval& iv : result.detected_intervals)
        os << "# interval," << fmt(iv.lo) << ',' << fmt(iv.hi) << '\n';
    return os.str();
}

std::string to_csv(const TriSweepResult& result) {
    std::ostringstream os;
    os << "p1,p3,margin_A,margin_B,margin_C,all_violated\n";
    for (const TriSweepPoint& pt : result.points)
        os << fmt(pt.p1) << ',' << fmt(pt.p3) << ',' << fmt(pt.margin[0]) << ','
           << fmt(pt.margin[1]) << ',' << fmt(pt.margin[2]) << ','
           << (pt.all_violated ? 1 : 0) << '\n';
    return os.str();
}

std::string to_json(const SweepResult& result) {
    nlohmann::json j;
    j["parameter"] = result.parameter_name;
    j["criterion"] = result.criterion;
    auto points = nlohmann::json::array();
    for (const SweepPoint& pt : result.points) {
        nlohmann::json p;
        p["parameter"] = pt.parameter;
        p["lhs"] = std::isnan(pt.lhs) ? nlohmann::json() : nlohmann::json(pt.lhs);
        p["rhs"] = std::isnan(pt.rhs) ? nlohmann::json() : nlohmann::json(pt.rhs);
        p["margin"] = std::isnan(pt.margin) ? nlohmann::json() : nlohmann::json(pt.margin);
        p["violated"] = pt.violated;
        points.push_back(std::move(p));
    }
    j["points"] = std::move(points);
    auto intervals = nlohmann::json::array();
    for (const Interval& iv : result.detected_intervals) intervals.push_back({iv.lo, iv.hi});
    j["detected_intervals"] = std::move(intervals);
    return j.dump(2) + "\n";
}

std::string to_json(const TriSweepResult& result) {
    nlohmann::json j;
    auto points = nlohmann::json::array();
    for (const TriSweepPoint& pt : result.points) {
        nlohmann::json p;
        p["p1"] = pt.p1;
        p["p3"] = pt.p3;
        p["feasible"] = pt.feasible;
        for (int c = 0; c < 3; ++c) {
            const char* keys[3] = {"margin_A", "margin_B", "margin_C"};
            p[keys[c]] =
                std::isnan(pt.margin[c]) ? nlohmann::json() : nlohmann::json(pt.margin[c]);
        }
        p["all_violated"] = pt.all_violated;
        points.push_back(std::move(p));
    }
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

} // namespace realignment
