#ifndef REALIGN_TRIPARTITE_HPP
#define REALIGN_TRIPARTITE_HPP

#include <string>

#include "realign/states.hpp"

namespace realignment {

enum class Qubit { A, B, C };

std::string qubit_name(Qubit q);

/// Partial transposition of one qubit of a three-qubit state.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Qubit which);

/// 8x8 realignment of a three-qubit state, with the minimum eigenvalue of
/// the Gram operator (rho^R)^dagger rho^R cached.
///
/// Layout: the sixteen 2x2 blocks of rho in row-major block order, two
/// blocks per realigned row, each block flattened COLUMN-major (this vec
/// convention is distinct from the row-major one used bipartitely).
struct TripartiteRealigned {
    ComplexMatrix mat;
    double gram_min_eig = 0.0;

    ComplexMatrix gram() const { return mat.adjoint() * mat; }
};

TripartiteRealigned realign3(const DensityMatrix& rho);

/// Permutation operator Q with Q[i][pi_i] = 1, pi = (1,3,5,7,2,4,6,8);
/// orientation fixed so that (rho Q)^tau equals realign3.
ComplexMatrix q_operator();

/// Blockwise transpose: transposes each 2x2 block of an 8x8 matrix.
ComplexMatrix tau(const ComplexMatrix& x);

/// Realignment via (rho Q)^tau; cross-checked against realign3 entrywise
/// (ContractError on mismatch).
ComplexMatrix realign3_via_q(const DensityMatrix& rho);

/// SPA-PT map on qubit X: (1/10) I_8 + (1/5) rho^{T_X}. Completely
/// positive; output is Hermitian, trace one, PSD.
ComplexMatrix spa_pt(const DensityMatrix& rho, Qubit which);

/// One biseparability-style inequality for one cut: consistent means
/// lhs >= rhs - slack, i.e. the state could still be biseparable there.
struct CutVerdict {
    Qubit cut;
    double lhs = 0.0;
    double rhs = 0.0;
    bool biseparable_consistent = true;

    bool violated() const { return !biseparable_consistent; }
};

/// SPA-PT condition: lambda_min(spa_pt(rho, x)) >= 1/10 for states
/// biseparable in the cut isolating x.
CutVerdict biseparability_check(const DensityMatrix& rho, Qubit which);

/// Realignment-Gram condition: lambda_min(Gram + spa_pt) >=
/// lambda_min(Gram) + 1/10 for states biseparable in the cut.
CutVerdict gram_cut_check(const DensityMatrix& rho, Qubit which);

enum class TriClass { FullyEntangled, NotFullySeparable, Inconclusive };

std::string tri_class_name(TriClass c);

/// fully_entangled if gram_cut_check is violated in all three cuts,
/// not_fully_separable if violated in at least one, else inconclusive.
TriClass classify(const DensityMatrix& rho);

} // namespace realignment

#endif
