#include "realign/bipartite.hpp"

#include <cmath>

namespace realignment {

ComplexMatrix vec_row(const ComplexMatrix& x) {
    return ComplexMatrix(1, x.rows() * x.cols(), x.entries());
}

double RealignedMatrix::trace_norm() const {
    double sum = 0.0;
    for (double s : singulars.values) sum += s;
    return sum;
}

double RealignedMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double s : singulars.values) sum += s * s;
    return std::sqrt(sum);
}

namespace {

RealignedMatrix make_realigned(const DimensionSignature& dims, ComplexMatrix mat) {
    Spectrum s = singular_values(mat);
    return RealignedMatrix{dims, std::move(mat), std::move(s)};
}

} // namespace

RealignedMatrix realign(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    if (!dims.is_bipartite()) throw UnsupportedError("realign requires a bipartite signature");
    const std::size_t m = dims.m(), n = dims.n();
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix out(m * m, n * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    out(i * m + k, j * n + l) = r(i * n + j, k * n + l);
    return make_realigned(dims, std::move(out));
}

ComplexMatrix partial_transpose_raw(const ComplexMatrix& mat, std::size_t m, std::size_t n,
                                    Subsystem subsystem) {
    if (mat.rows() != m * n || mat.cols() != m * n)
        throw ShapeError("partial transpose shape mismatch");
    ComplexMatrix out(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    if (subsystem == Subsystem::B)
                        out(i * n + l, k * n + j) = mat(i * n + j, k * n + l);
                    else
                        out(k * n + j, i * n + l) = mat(i * n + j, k * n + l);
                }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem) {
    const auto& dims = rho.dims();
    if (!dims.is_bipartite())
        throw UnsupportedError("partial_transpose requires a bipartite signature");
    return partial_transpose_raw(rho.matrix(), dims.m(), dims.n(), subsystem);
}

SwapOperator swap_operator(std::size_t d) {
    if (d < 2) throw DimensionError("swap_operator requires d >= 2");
    ComplexMatrix p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
    return SwapOperator{d, std::move(p)};
}

ComplexMatrix swap_pt(std::size_t d) {
    if (d < 2) throw DimensionError("swap_pt requires d >= 2");
    ComplexMatrix p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p(i * d + i, j * d + j) = 1.0;
    return p;
}

RealignedMatrix realign_via_swap(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    if (!dims.is_square_bipartite())
        throw UnsupportedError("realign_via_swap is defined for d (x) d signatures only");
    const std::size_t d = dims.m();
    const ComplexMatrix p = swap_operator(d).mat;
    ComplexMatrix result = partial_transpose_raw(rho.matrix() * p, d, d, Subsystem::B) * p;
    return make_realigned(dims, std::move(result));
}

double first_moment(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    if (!dims.is_square_bipartite())
        throw UnsupportedError("first_moment requires a square bipartite signature");
    const std::size_t d = dims.m();
    const ComplexMatrix& r = rho.matrix();
    // Tr[rho P^{T_B}] = sum_{i,k} rho((i,i),(k,k))
    ComplexMatrix::Scalar t(0.0, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) t += r(i * d + i, k * d + k);
    if (std::abs(t.imag()) > 1e-10)
        throw ContractError("first moment has a non-negligible imaginary residue");
    return t.real();
}

double MomentVector::D_k_root() const {
    if (k <= 0) return 0.0;
    return std::pow(D_k, 1.0 / static_cast<double>(k));
}

MomentVector moments(const DensityMatrix& rho, int K, double rel_tol) {
    if (K < 1) throw ArgumentError("moments requires K >= 1");
    const RealignedMatrix r = realign(rho);
    const auto& sv = r.singulars.values;

    MomentVector mv;
    mv.T.resize(static_cast<std::size_t>(K), 0.0);
    for (double s : sv) {
        const double s2 = s * s;
        double power = 1.0;
        for (int j = 0; j < K; ++j) {
            power *= s2;
            mv.T[static_cast<std::size_t>(j)] += power;
        }
    }

    const double smax = sv.empty() ? 0.0 : sv.front();
    double log_prod = 0.0;
    int k = 0;
    for (double s : sv) {
        if (smax > 0.0 && s > rel_tol * smax) {
            ++k;
            log_prod += 2.0 * std::log(s);
        }
    }
    mv.k = k;
    mv.D_k = k > 0 ? std::exp(log_prod) : 1.0;

    if (rho.dims().is_square_bipartite()) mv.t1 = first_moment(rho);
    return mv;
}

std::pair<double, double> moment_brackets(const MomentVector& mv, double sig_min, double sig_max,
                                          int k_index) {
    if (k_index < 1) throw ArgumentError("moment_brackets requires k_index >= 1");
    if (sig_min < 0.0 || sig_min > sig_max)
        throw ArgumentError("moment_brackets requires 0 <= sig_min <= sig_max");
    if (mv.T.empty()) throw ArgumentError("moment vector has no T1");
    const double t1 = mv.T.front();
    const double lo = std::pow(sig_min * sig_min, k_index - 1) * t1;
    const double hi = std::pow(sig_max * sig_max, k_index - 1) * t1;
    return {lo, hi};
}

} // namespace realignment
