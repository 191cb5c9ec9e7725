#ifndef REALIGN_STATES_HPP
#define REALIGN_STATES_HPP

#include <cstddef>
#include <string>

#include "realign/matrix.hpp"

namespace realignment {

/// Tensor structure of a state: bipartite m (x) n, or the fixed
/// three-qubit 2 (x) 2 (x) 2 system.
class DimensionSignature {
public:
    enum class Kind { Bipartite, TripartiteQubit };

    static DimensionSignature bipartite(std::size_t m, std::size_t n);
    static DimensionSignature tripartite_qubit();

    Kind kind() const { return kind_; }
    bool is_bipartite() const { return kind_ == Kind::Bipartite; }
    bool is_tripartite() const { return kind_ == Kind::TripartiteQubit; }
    /// Bipartite with m == n (the SWAP factorization and t1 need this).
    bool is_square_bipartite() const { return is_bipartite() && m_ == n_; }

    std::size_t m() const;
    std::size_t n() const;
    std::size_t total() const { return total_; }

    bool operator==(const DimensionSignature& o) const {
        return kind_ == o.kind_ && m_ == o.m_ && n_ == o.n_;
    }

    std::string to_string() const;

private:
    DimensionSignature(Kind kind, std::size_t m, std::size_t n, std::size_t total)
        : kind_(kind), m_(m), n_(n), total_(total) {}

    Kind kind_;
    std::size_t m_, n_;
    std::size_t total_;
};

/// Validated quantum state: Hermitian, unit trace, positive semidefinite
/// (all within fixed tolerances), carrying its dimension signature.
class DensityMatrix {
public:
    /// The only public construction path; throws ValidationError with a
    /// distinct kind per violated invariant.
    static DensityMatrix validate(ComplexMatrix m, DimensionSignature dims);

    const ComplexMatrix& matrix() const { return mat_; }
    const DimensionSignature& dims() const { return dims_; }

    /// Tr(rho^2); equals the squared Frobenius norm.
    double purity() const;

private:
    DensityMatrix(ComplexMatrix m, DimensionSignature dims)
        : mat_(std::move(m)), dims_(dims) {}

    ComplexMatrix mat_;
    DimensionSignature dims_;
};

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// |Phi+><Phi+| with |Phi+> = (1/sqrt(d)) sum_i |ii>, in d (x) d.
DensityMatrix max_entangled(std::size_t d);

/// |ij><ij| in d (x) d.
DensityMatrix product_basis_state(std::size_t i, std::size_t j, std::size_t d);

/// I / total for the given signature.
DensityMatrix max_mixed(DimensionSignature dims);

/// The 3 (x) 3 PPT entangled family, parameterized by eps > 0, eps != 1,
/// normalized by N = 3 (1 + eps^2 + eps^-2).
DensityMatrix rho_epsilon(double eps);

/// Domain of the 3 (x) 3 NPT family rho_a.
double rho_a_min();
double rho_a_max();

/// The 3 (x) 3 NPT entangled family; a restricted to
/// [(25 - sqrt(141))/50, (25 + sqrt(141))/100].
DensityMatrix rho_a(double a);

/// Three-qubit family built from the Pauli tensor expansion with
/// r1 = r2 = r3 = p1 + p2 - p3, r4 = p1 - p2 + 3 p3,
/// r5 = r6 = r7 = -p1 + p2 + p3, where p2 = 1 - p1 - 3 p3.
/// Requires 0 <= p1, p2, p3 <= 1.
DensityMatrix tri_family(double p1, double p3);

/// Whether (p1, p3) is in the tri_family domain (p2 in [0,1] up to slack).
bool tri_family_feasible(double p1, double p3);

/// (|000> + |111>)(<000| + <111|) / 2.
DensityMatrix ghz();

} // namespace realignment

#endif
