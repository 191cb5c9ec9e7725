#ifndef REALIGN_SWEEP_HPP
#define REALIGN_SWEEP_HPP

#include <functional>
#include <string>
#include <vector>

#include "realign/criteria.hpp"
#include "realign/tripartite.hpp"

namespace realignment {

enum class Family { RhoEps, RhoA, TriFamily };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// One evaluated grid point of a 1-D sweep. Margin is lhs - rhs, so
/// positive margin means the separability inequality is violated.
/// Points outside the family domain carry NaN values.
struct SweepPoint {
    double parameter = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool violated = false;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct SweepResult {
    std::string parameter_name;
    std::string criterion;
    std::vector<SweepPoint> points;
    /// Disjoint, sorted violation intervals; boundaries interior to the
    /// grid are refined by bisection on the margin.
    std::vector<Interval> detected_intervals;
};

struct SweepOptions {
    double refine_tol = 1e-6;
    double rel_tol = kDefaultRankTol;
    int max_bisection_iters = 60;
};

/// Evaluate (lhs, rhs) of a criterion for a 1-D family member.
/// Exposed for tests; cmd-level sweeps use sweep_family below.
std::pair<double, double> criterion_sides(Family family, Criterion criterion, double parameter,
                                          double rel_tol);

/// 1-D sweep over rho-eps or rho-a with sign-change refinement.
SweepResult sweep_family(Family family, Criterion criterion, double min, double max, double step,
                         const SweepOptions& opts = {});

/// Refine a margin zero crossing inside [lo, hi] by bisection; keeps
/// narrowing (up to the iteration cap) until the bracket is below
/// refine_tol and the midpoint margin is within the violation slack.
double refine_boundary(const std::function<double(double)>& margin, double lo, double hi,
                       const SweepOptions& opts);

/// One tri-family grid point: Theorem-4 margins (lhs - rhs, negative =
/// violated) for the three cuts. Infeasible (p1, p3) carry NaN margins.
struct TriSweepPoint {
    double p1 = 0.0;
    double p3 = 0.0;
    double margin[3] = {0.0, 0.0, 0.0}; // cuts A, B, C
    bool all_violated = false;
    bool feasible = true;
};

struct TriSweepResult {
    std::vector<TriSweepPoint> points;
};

TriSweepResult sweep_tri_family(double p1_min, double p1_max, double p1_step, double p3_min,
                                double p3_max, double p3_step);

/// Deterministic CSV renderings (byte-identical for identical inputs).
std::string to_csv(const SweepResult& result);
std::string to_csv(const TriSweepResult& result);
std::string to_json(const SweepResult& result);
std::string to_json(const TriSweepResult& result);

/// Grid helper: points min + i*step for i = 0 .. floor((max-min)/step).
std::vector<double> make_grid(double min, double max, double step);

} // namespace realignment

#endif
