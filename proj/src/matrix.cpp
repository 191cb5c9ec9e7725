#include "realign/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace realignment {

namespace {

using EigenMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EigenMap = Eigen::Map<const EigenMatrix>;

EigenMap as_eigen(const ComplexMatrix& m) {
    return EigenMap(m.entries().data(), static_cast<Eigen::Index>(m.rows()),
                    static_cast<Eigen::Index>(m.cols()));
}

ComplexMatrix from_eigen(const EigenMatrix& e) {
    std::vector<std::complex<double>> entries(e.data(), e.data() + e.size());
    return ComplexMatrix(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()),
                         std::move(entries));
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0.0, 0.0)) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
        throw ShapeError("entry count does not match rows * cols");
    check_finite();
}

void ComplexMatrix::check_finite() const {
    for (const Scalar& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ArgumentError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("shape mismatch in matrix addition");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("shape mismatch in matrix subtraction");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw ShapeError("shape mismatch in matrix product");
    EigenMatrix prod = as_eigen(*this) * as_eigen(other);
    return from_eigen(prod);
}

ComplexMatrix ComplexMatrix::operator*(Scalar s) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * s;
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix::Scalar ComplexMatrix::trace() const {
    if (!is_square()) throw ShapeError("trace requires a square matrix");
    Scalar t(0.0, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_entry() const {
    double m = 0.0;
    for (const Scalar& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("shape mismatch in matrix comparison");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        m = std::max(m, std::abs(a.entries_[i] - b.entries_[i]));
    return m;
}

double ComplexMatrix::hermiticity_tolerance() const {
    return 1e-10 * std::max(1.0, max_abs_entry());
}

double ComplexMatrix::hermiticity_deviation() const {
    if (!is_square()) throw ShapeError("hermiticity check requires a square matrix");
    double dev = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return dev;
}

bool ComplexMatrix::is_hermitian() const {
    return hermiticity_deviation() <= hermiticity_tolerance();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t limit = std::size_t(1) << 24;
    if (a.rows() > limit / b.rows() || a.cols() > limit / b.cols())
        throw DimensionError("Kronecker product dimensions overflow");
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto aij = a(i, j);
            if (aij == ComplexMatrix::Scalar(0.0, 0.0)) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
        }
    return out;
}

Spectrum hermitian_spectrum(const ComplexMatrix& a) {
    if (!a.is_square()) throw ShapeError("hermitian_spectrum requires a square matrix");
    const double dev = a.hermiticity_deviation();
    if (dev > a.hermiticity_tolerance())
        throw HermiticityError("matrix is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(as_eigen(a), Eigen::EigenvaluesOnly);
    Spectrum s;
    s.kind = SpectrumKind::Eigen;
    const auto& ev = solver.eigenvalues();
    s.values.assign(ev.data(), ev.data() + ev.size());
    return s;
}

Spectrum singular_values(const ComplexMatrix& a) {
    Eigen::JacobiSVD<EigenMatrix> svd(as_eigen(a));
    Spectrum s;
    s.kind = SpectrumKind::Singular;
    const auto& sv = svd.singularValues();
    s.values.assign(sv.data(), sv.data() + sv.size());
    return s;
}

double trace_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (double s : singular_values(a).values) sum += s;
    return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (double s : singular_values(a).values) sum += s * s;
    return std::sqrt(sum);
}

int numerical_rank(const ComplexMatrix& a, double rel_tol) {
    if (rel_tol <= 0.0) throw ArgumentError("rel_tol must be positive");
    const Spectrum s = singular_values(a);
    const double smax = s.values.empty() ? 0.0 : s.values.front();
    if (smax == 0.0) return 0;
    int k = 0;
    for (double v : s.values)
        if (v > rel_tol * smax) ++k;
    return k;
}

} // namespace realignment
