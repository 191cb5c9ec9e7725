#include "realign/tripartite.hpp"

#include <array>
#include <cmath>

#include "realign/criteria.hpp"

namespace realignment {

namespace {

void require_tripartite(const DensityMatrix& rho, const char* what) {
    if (!rho.dims().is_tripartite())
        throw UnsupportedError(std::string(what) + " requires a tripartite signature");
}

// pi = (1,3,5,7,2,4,6,8), 1-based
constexpr std::array<std::size_t, 8> kPi = {1, 3, 5, 7, 2, 4, 6, 8};

} // namespace

std::string qubit_name(Qubit q) {
    switch (q) {
        case Qubit::A: return "A";
        case Qubit::B: return "B";
        case Qubit::C: return "C";
    }
    throw ArgumentError("unknown qubit");
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Qubit which) {
    require_tripartite(rho, "tripartite partial_transpose");
    const int bit = which == Qubit::A ? 2 : (which == Qubit::B ? 1 : 0);
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix out(8, 8);
    for (std::size_t row = 0; row < 8; ++row)
        for (std::size_t col = 0; col < 8; ++col) {
            const std::size_t rb = (row >> bit) & 1, cb = (col >> bit) & 1;
            const std::size_t row2 = (row & ~(std::size_t(1) << bit)) | (cb << bit);
            const std::size_t col2 = (col & ~(std::size_t(1) << bit)) | (rb << bit);
            out(row2, col2) = r(row, col);
        }
    return out;
}

TripartiteRealigned realign3(const DensityMatrix& rho) {
    require_tripartite(rho, "realign3");
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix out(8, 8);
    // Row 2I+s holds blocks (I, 2s) and (I, 2s+1) of the 4x4 block grid,
    // each flattened column-major.
    for (std::size_t row = 0; row < 8; ++row) {
        const std::size_t I = row / 2, s = row % 2;
        for (std::size_t col = 0; col < 8; ++col) {
            const std::size_t u = col / 4, v = col % 4;
            const std::size_t J = 2 * s + u;
            const std::size_t i = v % 2, j = v / 2;
            out(row, col) = r(2 * I + i, 2 * J + j);
        }
    }
    const Spectrum gram_spec = hermitian_spectrum(out.adjoint() * out);
    return TripartiteRealigned{std::move(out), gram_spec.min()};
}

ComplexMatrix q_operator() {
    ComplexMatrix q(8, 8);
    for (std::size_t i = 0; i < 8; ++i) q(i, kPi[i] - 1) = 1.0;
    return q;
}

ComplexMatrix tau(const ComplexMatrix& x) {
    if (x.rows() != 8 || x.cols() != 8) throw ShapeError("tau requires an 8x8 matrix");
    ComplexMatrix out(8, 8);
    for (std::size_t I = 0; I < 4; ++I)
        for (std::size_t J = 0; J < 4; ++J)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    out(2 * I + i, 2 * J + j) = x(2 * I + j, 2 * J + i);
    return out;
}

ComplexMatrix realign3_via_q(const DensityMatrix& rho) {
    require_tripartite(rho, "realign3_via_q");
    ComplexMatrix result = tau(rho.matrix() * q_operator());
    const TripartiteRealigned direct = realign3(rho);
    if (ComplexMatrix::max_abs_diff(result, direct.mat) > 1e-12)
        throw ContractError("realign3_via_q disagrees with the block-vec realignment");
    return result;
}

ComplexMatrix spa_pt(const DensityMatrix& rho, Qubit which) {
    require_tripartite(rho, "spa_pt");
    ComplexMatrix pt = partial_transpose(rho, which);
    ComplexMatrix out = ComplexMatrix::identity(8) * 0.1 + pt * 0.2;
    return out;
}

CutVerdict biseparability_check(const DensityMatrix& rho, Qubit which) {
    const Spectrum spec = hermitian_spectrum(spa_pt(rho, which));
    CutVerdict v;
    v.cut = which;
    v.lhs = spec.min();
    v.rhs = 0.1;
    v.biseparable_consistent = v.lhs >= v.rhs - kViolationSlack;
    return v;
}

CutVerdict gram_cut_check(const DensityMatrix& rho, Qubit which) {
    const TripartiteRealigned r = realign3(rho);
    const ComplexMatrix gram = r.gram();
    const Spectrum sum_spec = hermitian_spectrum(gram + spa_pt(rho, which));
    CutVerdict v;
    v.cut = which;
    v.lhs = sum_spec.min();
    v.rhs = r.gram_min_eig + 0.1;
    v.biseparable_consistent = v.lhs >= v.rhs - kViolationSlack;
    return v;
}

std::string tri_class_name(TriClass c) {
    switch (c) {
        case TriClass::FullyEntangled: return "fully_entangled";
        case TriClass::NotFullySeparable: return "not_fully_separable";
        case TriClass::Inconclusive: return "inconclusive";
    }
    throw ArgumentError("unknown classification");
}

TriClass classify(const DensityMatrix& rho) {
    int violated = 0;
    for (Qubit q : {Qubit::A, Qubit::B, Qubit::C})
        if (gram_cut_check(rho, q).violated()) ++violated;
    if (violated == 3) return TriClass::FullyEntangled;
    if (violated >= 1) return TriClass::NotFullySeparable;
    return TriClass::Inconclusive;
}

} // namespace realignment
