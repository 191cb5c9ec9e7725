#ifndef REALIGN_CRITERIA_HPP
#define REALIGN_CRITERIA_HPP

#include <map>
#include <string>
#include <vector>

#include "realign/bipartite.hpp"

namespace realignment {

enum class Criterion { Ccnr, T1, RMoment, T1Moment, ConcurrenceLb };

std::string criterion_name(Criterion c);
Criterion criterion_from_name(const std::string& name);

/// Absolute slack applied to every violation inequality so boundary
/// states never flap; sweeps expose signed margins instead.
inline constexpr double kViolationSlack = 1e-9;

/// One evaluated criterion: value is the computed left-hand quantity,
/// threshold the right-hand side; violated means value > threshold + slack.
/// A nonempty error marks a criterion that does not apply to the state.
struct CriterionResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool violated = false;
    std::map<std::string, double> detail;
    std::string error;

    double margin() const { return value - threshold; }
};

struct DetectionReport {
    std::string state_label;
    std::vector<CriterionResult> results;
    bool entangled = false; // true iff at least one result violated
};

/// CCNR: ||rho^R||_1 <= 1 for separable states.
CriterionResult ccnr(const DensityMatrix& rho);

/// First-moment criterion (square bipartite): Tr[rho P^{T_B}] <= 1.
CriterionResult t1_criterion(const DensityMatrix& rho);

enum class ConcurrenceMode { Full, T1Only };

/// Concurrence lower bound, clamped at zero.
/// Full: sqrt(2/(d(d-1))) (max(||rho^{T_B}||_1, ||rho^R||_1) - 1);
/// T1Only: sqrt(2/(d(d-1))) (t1 - 1).
double concurrence_lower_bound(const DensityMatrix& rho, ConcurrenceMode mode);

/// R-moment criterion: k(k-1) D_k^{1/k} + T1 <= 1 for separable states.
CriterionResult r_moment_criterion(const DensityMatrix& rho, double rel_tol = kDefaultRankTol);

/// Moment form of the first-moment criterion (square bipartite):
/// t1^2 / k <= 1 - k(k-1) D_k^{1/k} for separable states.
CriterionResult t1_moment_criterion(const DensityMatrix& rho, double rel_tol = kDefaultRankTol);

/// All four inequality criteria (the default `detect` selection).
std::vector<Criterion> all_criteria();

/// Run the selected criteria; inapplicable ones produce an error entry
/// and the report is still returned.
DetectionReport detect(const DensityMatrix& rho, const std::vector<Criterion>& selection,
                       double rel_tol = kDefaultRankTol, const std::string& label = "");

} // namespace realignment

#endif
