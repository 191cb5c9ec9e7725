#ifndef REALIGN_MATRIX_HPP
#define REALIGN_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "realign/errors.hpp"

namespace realignment {

/// Dense complex matrix, row-major storage, explicit row/column counts.
/// Entries are validated to be finite on construction from user data.
class ComplexMatrix {
public:
    using Scalar = std::complex<double>;

    ComplexMatrix() : rows_(0), cols_(0) {}

    // Zero matrix of the given shape.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    // Row-major entries; throws if the count or finiteness invariant fails.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Scalar>& entries() const { return entries_; }

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator*(Scalar s) const;
    ComplexMatrix operator*(double s) const { return (*this) * Scalar(s, 0.0); }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    Scalar trace() const;

    double max_abs_entry() const;

    /// Largest entrywise |a - b|; shapes must agree.
    static double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

    /// Relative Hermiticity tolerance: 1e-10 * max(1, max|entry|).
    double hermiticity_tolerance() const;

    /// max |a_ij - conj(a_ji)| over all entries (square matrices).
    double hermiticity_deviation() const;

    bool is_hermitian() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;

    void check_finite() const;
};

/// Real spectrum: eigenvalues sorted ascending or singular values sorted
/// descending, per `kind`.
enum class SpectrumKind { Eigen, Singular };

struct Spectrum {
    std::vector<double> values;
    SpectrumKind kind = SpectrumKind::Eigen;

    double min() const { return kind == SpectrumKind::Eigen ? values.front() : values.back(); }
    double max() const { return kind == SpectrumKind::Eigen ? values.back() : values.front(); }
};

inline constexpr double kDefaultRankTol = 1e-10;

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ascending eigenvalues of a Hermitian matrix. Throws ShapeError if not
/// square, HermiticityError if the deviation exceeds the relative tolerance.
Spectrum hermitian_spectrum(const ComplexMatrix& a);

/// Descending singular values; length min(rows, cols).
Spectrum singular_values(const ComplexMatrix& a);

/// Trace norm: sum of singular values.
double trace_norm(const ComplexMatrix& a);

/// Frobenius (Hilbert-Schmidt) norm, computed from singular values.
double frobenius_norm(const ComplexMatrix& a);

/// Count of singular values above rel_tol * sigma_max; 0 for the zero matrix.
int numerical_rank(const ComplexMatrix& a, double rel_tol = kDefaultRankTol);

} // namespace realignment

#endif
