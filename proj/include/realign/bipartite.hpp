#ifndef REALIGN_BIPARTITE_HPP
#define REALIGN_BIPARTITE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "realign/states.hpp"

namespace realignment {

enum class Subsystem { A, B };

/// Row-major flattening of x into a 1 x (rows*cols) matrix.
ComplexMatrix vec_row(const ComplexMatrix& x);

/// The m^2 x n^2 realignment of a bipartite state, with its singular
/// values cached at construction.
struct RealignedMatrix {
    DimensionSignature source_dims;
    ComplexMatrix mat;
    Spectrum singulars; // descending

    double trace_norm() const;
    double frobenius_norm() const;
};

/// Block-vec realignment: entry ((i,k),(j,l)) = rho((i,j),(k,l)).
/// This is the normative definition; the SWAP factorization below is a
/// second, independently computed route for square signatures.
RealignedMatrix realign(const DensityMatrix& rho);

/// Partial transposition of one tensor factor of a bipartite state.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem);

/// Partial transposition of a raw mn x mn matrix with factor sizes (m, n).
ComplexMatrix partial_transpose_raw(const ComplexMatrix& mat, std::size_t m, std::size_t n,
                                    Subsystem subsystem);

/// SWAP operator P = sum |ij><ji| on d (x) d. P^2 = I, Tr P = d.
struct SwapOperator {
    std::size_t d;
    ComplexMatrix mat;
};

SwapOperator swap_operator(std::size_t d);

/// P^{T_B} = sum |ii><jj| = d |Phi+><Phi+|.
ComplexMatrix swap_pt(std::size_t d);

/// Realignment via the factorization (rho P)^{T_B} P; defined for
/// square signatures only. Equals realign(rho) entrywise.
RealignedMatrix realign_via_swap(const DensityMatrix& rho);

/// First realigned moment t1 = Tr[rho P^{T_B}] = Tr[rho^R] (square only).
/// Throws ContractError if the imaginary residue exceeds 1e-10.
double first_moment(const DensityMatrix& rho);

/// Moments of (rho^R)^dagger rho^R together with the rank data used by
/// the moment criteria. T[j-1] = sum_i sigma_i^{2j}; k is the numerical
/// rank of rho^R; D_k the product of the k retained squared singular
/// values (accumulated in log space).
struct MomentVector {
    std::optional<double> t1; // square signatures only
    std::vector<double> T;    // T_1 .. T_K
    double D_k = 1.0;
    int k = 0;

    double T1() const { return T.front(); }
    /// D_k^{1/k}, evaluated as exp((1/k) sum log sigma_i^2); 0 if k == 0.
    double D_k_root() const;
};

MomentVector moments(const DensityMatrix& rho, int K, double rel_tol = kDefaultRankTol);

/// Theorem-2 style brackets for T_{k_index}:
/// ((sig_min^2)^{k-1} T1, (sig_max^2)^{k-1} T1).
std::pair<double, double> moment_brackets(const MomentVector& mv, double sig_min, double sig_max,
                                          int k_index);

} // namespace realignment

#endif
