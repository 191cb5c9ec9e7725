#include "realign/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace realignment {

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::Ccnr: return "ccnr";
        case Criterion::T1: return "t1";
        case Criterion::RMoment: return "r_moment";
        case Criterion::T1Moment: return "t1_moment";
        case Criterion::ConcurrenceLb: return "concurrence_lb";
    }
    throw ArgumentError("unknown criterion");
}

Criterion criterion_from_name(const std::string& name) {
    if (name == "ccnr") return Criterion::Ccnr;
    if (name == "t1") return Criterion::T1;
    if (name == "r_moment") return Criterion::RMoment;
    if (name == "t1_moment") return Criterion::T1Moment;
    if (name == "concurrence_lb") return Criterion::ConcurrenceLb;
    throw UnsupportedError("unknown criterion name: " + name);
}

namespace {

void require_bipartite(const DensityMatrix& rho, const char* what) {
    if (!rho.dims().is_bipartite())
        throw UnsupportedError(std::string(what) + " requires a bipartite state");
}

void require_square(const DensityMatrix& rho, const char* what) {
    if (!rho.dims().is_square_bipartite())
        throw UnsupportedError(std::string(what) + " requires a square (d x d) bipartite state");
}

} // namespace

CriterionResult ccnr(const DensityMatrix& rho) {
    require_bipartite(rho, "ccnr");
    const RealignedMatrix r = realign(rho);
    CriterionResult res;
    res.name = criterion_name(Criterion::Ccnr);
    res.value = r.trace_norm();
    res.threshold = 1.0;
    res.violated = res.value > res.threshold + kViolationSlack;
    res.detail["trace_norm"] = res.value;
    return res;
}

CriterionResult t1_criterion(const DensityMatrix& rho) {
    require_square(rho, "t1 criterion");
    CriterionResult res;
    res.name = criterion_name(Criterion::T1);
    res.value = first_moment(rho);
    res.threshold = 1.0;
    res.violated = res.value > res.threshold + kViolationSlack;
    res.detail["t1"] = res.value;
    return res;
}

double concurrence_lower_bound(const DensityMatrix& rho, ConcurrenceMode mode) {
    require_square(rho, "concurrence lower bound");
    const double d = static_cast<double>(rho.dims().m());
    const double scale = std::sqrt(2.0 / (d * (d - 1.0)));
    double arg;
    if (mode == ConcurrenceMode::Full) {
        const double pt_norm = trace_norm(partial_transpose(rho, Subsystem::B));
        const double re_norm = realign(rho).trace_norm();
        arg = std::max(pt_norm, re_norm);
    } else {
        arg = first_moment(rho);
    }
    return std::max(0.0, scale * (arg - 1.0));
}

CriterionResult r_moment_criterion(const DensityMatrix& rho, double rel_tol) {
    require_bipartite(rho, "r_moment criterion");
    const MomentVector mv = moments(rho, 1, rel_tol);
    const double k = static_cast<double>(mv.k);
    const double d_root = mv.D_k_root();
    CriterionResult res;
    res.name = criterion_name(Criterion::RMoment);
    res.value = k * (k - 1.0) * d_root + mv.T1();
    res.threshold = 1.0;
    res.violated = res.value > res.threshold + kViolationSlack;
    res.detail["k"] = k;
    res.detail["D_k_root"] = d_root;
    res.detail["T1"] = mv.T1();
    return res;
}

CriterionResult t1_moment_criterion(const DensityMatrix& rho, double rel_tol) {
    require_square(rho, "t1_moment criterion");
    const MomentVector mv = moments(rho, 1, rel_tol);
    const double k = static_cast<double>(mv.k);
    const double d_root = mv.D_k_root();
    CriterionResult res;
    res.name = criterion_name(Criterion::T1Moment);
    res.value = mv.t1.value() * mv.t1.value() / k;
    res.threshold = 1.0 - k * (k - 1.0) * d_root;
    res.violated = res.value > res.threshold + kViolationSlack;
    res.detail["k"] = k;
    res.detail["D_k_root"] = d_root;
    res.detail["T1"] = mv.T1();
    res.detail["t1"] = mv.t1.value();
    return res;
}

std::vector<Criterion> all_criteria() {
    return {Criterion::Ccnr, Criterion::T1, Criterion::RMoment, Criterion::T1Moment};
}

DetectionReport detect(const DensityMatrix& rho, const std::vector<Criterion>& selection,
                       double rel_tol, const std::string& label) {
    DetectionReport report;
    report.state_label = label;
    for (Criterion c : selection) {
        try {
            switch (c) {
                case Criterion::Ccnr:
                    report.results.push_back(ccnr(rho));
                    break;
                case Criterion::T1:
                    report.results.push_back(t1_criterion(rho));
                    break;
                case Criterion::RMoment:
                    report.results.push_back(r_moment_criterion(rho, rel_tol));
                    break;
                case Criterion::T1Moment:
                    report.results.push_back(t1_moment_criterion(rho, rel_tol));
                    break;
                case Criterion::ConcurrenceLb: {
                    CriterionResult res;
                    res.name = criterion_name(c);
                    res.value = concurrence_lower_bound(rho, ConcurrenceMode::Full);
                    res.threshold = 0.0;
                    res.violated = res.value > kViolationSlack;
                    res.detail["t1_only"] = concurrence_lower_bound(rho, ConcurrenceMode::T1Only);
                    report.results.push_back(std::move(res));
                    break;
                }
            }
        } catch (const UnsupportedError& e) {
            CriterionResult res;
            res.name = criterion_name(c);
            res.error = e.what();
            report.results.push_back(std::move(res));
        }
    }
    report.entangled = std::any_of(report.results.begin(), report.results.end(),
                                   [](const CriterionResult& r) { return r.violated; });
    return report;
}

} // namespace realignment
