#include "realign/states.hpp"

#include <cmath>
#include <sstream>

namespace realignment {

namespace {
constexpr double kDomainSlack = 1e-12;
}

DimensionSignature DimensionSignature::bipartite(std::size_t m, std::size_t n) {
    if (m < 2 || n < 2) throw DimensionError("bipartite factors must have dimension >= 2");
    return DimensionSignature(Kind::Bipartite, m, n, m * n);
}

DimensionSignature DimensionSignature::tripartite_qubit() {
    return DimensionSignature(Kind::TripartiteQubit, 0, 0, 8);
}

std::size_t DimensionSignature::m() const {
    if (!is_bipartite()) throw UnsupportedError("m() requires a bipartite signature");
    return m_;
}

std::size_t DimensionSignature::n() const {
    if (!is_bipartite()) throw UnsupportedError("n() requires a bipartite signature");
    return n_;
}

std::string DimensionSignature::to_string() const {
    if (is_tripartite()) return "2x2x2";
    std::ostringstream os;
    os << m_ << "x" << n_;
    return os.str();
}

DensityMatrix DensityMatrix::validate(ComplexMatrix m, DimensionSignature dims) {
    if (m.rows() != dims.total() || m.cols() != dims.total()) {
        std::ostringstream os;
        os << "matrix shape " << m.rows() << "x" << m.cols() << " does not match signature "
           << dims.to_string() << " (total " << dims.total() << ")";
        throw ValidationError(ValidationError::Kind::Shape, os.str());
    }
    if (m.hermiticity_deviation() > m.hermiticity_tolerance())
        throw ValidationError(ValidationError::Kind::Hermiticity,
                              "matrix is not Hermitian within tolerance");
    const auto tr = m.trace();
    if (std::abs(tr - ComplexMatrix::Scalar(1.0, 0.0)) > kTraceTol) {
        std::ostringstream os;
        os << "trace " << tr.real() << " != 1 beyond tolerance";
        throw ValidationError(ValidationError::Kind::Trace, os.str());
    }
    const Spectrum spec = hermitian_spectrum(m);
    if (spec.min() < -kPsdTol) {
        std::ostringstream os;
        os << "negative eigenvalue " << spec.min() << " below tolerance";
        throw ValidationError(ValidationError::Kind::Positivity, os.str());
    }
    return DensityMatrix(std::move(m), dims);
}

double DensityMatrix::purity() const {
    double sum = 0.0;
    for (const auto& z : mat_.entries()) sum += std::norm(z);
    return sum;
}

DensityMatrix max_entangled(std::size_t d) {
    if (d < 2) throw DimensionError("max_entangled requires d >= 2");
    ComplexMatrix m(d * d, d * d);
    const double v = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) m(i * d + i, k * d + k) = v;
    return DensityMatrix::validate(std::move(m), DimensionSignature::bipartite(d, d));
}

DensityMatrix product_basis_state(std::size_t i, std::size_t j, std::size_t d) {
    if (d < 2) throw DimensionError("product_basis_state requires d >= 2");
    if (i >= d || j >= d) throw ArgumentError("basis index out of range");
    ComplexMatrix m(d * d, d * d);
    m(i * d + j, i * d + j) = 1.0;
    return DensityMatrix::validate(std::move(m), DimensionSignature::bipartite(d, d));
}

DensityMatrix max_mixed(DimensionSignature dims) {
    const std::size_t t = dims.total();
    ComplexMatrix m(t, t);
    for (std::size_t i = 0; i < t; ++i) m(i, i) = 1.0 / static_cast<double>(t);
    return DensityMatrix::validate(std::move(m), dims);
}

DensityMatrix rho_epsilon(double eps) {
    if (!(eps > 0.0)) throw DomainError("rho_epsilon requires eps > 0");
    if (eps == 1.0) throw DomainError("rho_epsilon excludes eps = 1");
    const double e2 = eps * eps;
    const double ie2 = 1.0 / e2;
    const double N = 3.0 * (1.0 + e2 + ie2);

    ComplexMatrix m(9, 9);
    const double diag[9] = {1.0, ie2, e2, e2, 1.0, ie2, ie2, e2, 1.0};
    for (std::size_t i = 0; i < 9; ++i) m(i, i) = diag[i];
    // corner |ii><kk| entries and the rank-one pair couplings
    const std::size_t ones[6][2] = {{0, 4}, {0, 8}, {4, 8}, {1, 3}, {2, 6}, {5, 7}};
    for (const auto& p : ones) {
        m(p[0], p[1]) = 1.0;
        m(p[1], p[0]) = 1.0;
    }
    m = m * (1.0 / N);
    return DensityMatrix::validate(std::move(m), DimensionSignature::bipartite(3, 3));
}

double rho_a_min() { return (25.0 - std::sqrt(141.0)) / 50.0; }
double rho_a_max() { return (25.0 + std::sqrt(141.0)) / 100.0; }

DensityMatrix rho_a(double a) {
    if (a < rho_a_min() - kDomainSlack || a > rho_a_max() + kDomainSlack)
        throw DomainError("rho_a parameter outside [(25-sqrt(141))/50, (25+sqrt(141))/100]");
    ComplexMatrix m(9, 9);
    const double c = -11.0 / 50.0;
    m(0, 0) = (1.0 - a) / 2.0;
    m(0, 8) = c;
    m(8, 0) = c;
    m(4, 4) = 0.5 - a;
    m(4, 5) = c;
    m(5, 4) = c;
    m(5, 5) = a;
    m(8, 8) = a / 2.0;
    return DensityMatrix::validate(std::move(m), DimensionSignature::bipartite(3, 3));
}

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = ComplexMatrix::Scalar(0.0, -1.0);
    m(1, 0) = ComplexMatrix::Scalar(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
    return kron(kron(a, b), c);
}

} // namespace

bool tri_family_feasible(double p1, double p3) {
    const double p2 = 1.0 - p1 - 3.0 * p3;
    return p1 >= -kDomainSlack && p1 <= 1.0 + kDomainSlack && p3 >= -kDomainSlack &&
           p3 <= 1.0 + kDomainSlack && p2 >= -kDomainSlack && p2 <= 1.0 + kDomainSlack;
}

DensityMatrix tri_family(double p1, double p3) {
    if (!tri_family_feasible(p1, p3))
        throw DomainError("tri_family requires 0 <= p1, p2, p3 <= 1 with p2 = 1 - p1 - 3 p3");
    const double p2 = 1.0 - p1 - 3.0 * p3;
    const double r123 = p1 + p2 - p3;
    const double r4 = p1 - p2 + 3.0 * p3;
    const double r567 = -p1 + p2 + p3;

    const ComplexMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    const ComplexMatrix id = ComplexMatrix::identity(2);

    ComplexMatrix m = kron3(id, id, id);
    m = m + (kron3(sz, sz, id) + kron3(sz, id, sz) + kron3(id, sz, sz)) * r123;
    m = m + kron3(sx, sx, sx) * r4;
    m = m + (kron3(sx, sy, sy) + kron3(sy, sx, sy) + kron3(sy, sy, sx)) * r567;
    m = m * 0.125;
    return DensityMatrix::validate(std::move(m), DimensionSignature::tripartite_qubit());
}

DensityMatrix ghz() {
    ComplexMatrix m(8, 8);
    m(0, 0) = 0.5;
    m(0, 7) = 0.5;
    m(7, 0) = 0.5;
    m(7, 7) = 0.5;
    return DensityMatrix::validate(std::move(m), DimensionSignature::tripartite_qubit());
}

} // namespace realignment
