#include "unirat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace unirat {

cplx eval(const BarycentricRational& r, cplx z) {
    const std::size_t m = r.support_nodes.size();
    if (z.real() == 0.0) {
        for (std::size_t k = 0; k < m; ++k)
            if (z.imag() == r.support_nodes[k]) return r.support_values[k];
    }
    cplx num{0.0, 0.0};
    cplx den{0.0, 0.0};
    for (std::size_t k = 0; k < m; ++k) {
        const cplx c = r.weights[k] / (z - cplx{0.0, r.support_nodes[k]});
        num += c * r.support_values[k];
        den += c;
    }
    if (den == cplx{0.0, 0.0}) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    return num / den;
}

cplx eval_ix(const BarycentricRational& r, double x) {
    const std::size_t m = r.support_nodes.size();
    for (std::size_t k = 0; k < m; ++k)
        if (x == r.support_nodes[k]) return r.support_values[k];
    // r(ix) = [sum w_k f_k / (i(x - x_k))] / [sum w_k / (i(x - x_k))];
    // the common factor 1/i cancels, leaving real denominators only.
    cplx num{0.0, 0.0};
    cplx den{0.0, 0.0};
    for (std::size_t k = 0; k < m; ++k) {
        const cplx c = r.weights[k] / (x - r.support_nodes[k]);
        num += c * r.support_values[k];
        den += c;
    }
    if (den == cplx{0.0, 0.0}) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    return num / den;
}

double unitarity_defect(const BarycentricRational& r,
                        const std::vector<double>& grid) {
    double worst = 0.0;
    for (const double x : grid)
        worst = std::max(worst, std::abs(std::abs(eval_ix(r, x)) - 1.0));
    return worst;
}

namespace {

// Finite generalized eigenvalues of the (m+1)-dimensional arrowhead pencil
//   [0   w^T ]        [0    ]
//   [1  diag(i x_k)] - lambda [  I  ] ,
// whose finite spectrum is the root set of sum_k w_k rho_k / (z - i x_k).
std::vector<cplx> arrowhead_roots(const std::vector<double>& nodes,
                                  const std::vector<cplx>& top) {
    const lapack_int m = static_cast<lapack_int>(nodes.size());
    const lapack_int dim = m + 1;
    std::vector<cplx> a(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
    std::vector<cplx> b(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
    auto at = [dim](std::vector<cplx>& mat, lapack_int row, lapack_int col) -> cplx& {
        return mat[static_cast<std::size_t>(col) * dim + row];
    };
    for (lapack_int k = 0; k < m; ++k) {
        at(a, 0, k + 1) = top[static_cast<std::size_t>(k)];
        at(a, k + 1, 0) = cplx{1.0, 0.0};
        at(a, k + 1, k + 1) = cplx{0.0, nodes[static_cast<std::size_t>(k)]};
        at(b, k + 1, k + 1) = cplx{1.0, 0.0};
    }
    std::vector<cplx> alpha(static_cast<std::size_t>(dim));
    std::vector<cplx> beta(static_cast<std::size_t>(dim));
    const lapack_int info = LAPACKE_zggev(
        LAPACK_COL_MAJOR, 'N', 'N', dim, a.data(), dim, b.data(), dim,
        alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw Breakdown("generalized eigenvalue solve failed, info " +
                        std::to_string(info));
    std::vector<cplx> roots;
    for (lapack_int j = 0; j < dim; ++j) {
        const double an = std::abs(alpha[static_cast<std::size_t>(j)]);
        const double bn = std::abs(beta[static_cast<std::size_t>(j)]);
        if (bn > 1e-10 * (an + bn))
            roots.push_back(alpha[static_cast<std::size_t>(j)] /
                            beta[static_cast<std::size_t>(j)]);
    }
    std::sort(roots.begin(), roots.end(), [](cplx lhs, cplx rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
        return lhs.imag() < rhs.imag();
    });
    return roots;
}

}  // namespace

PoleZeroSet poles_zeros(const BarycentricRational& r) {
    for (const cplx w : r.weights)
        if (w == cplx{0.0, 0.0})
            throw PreconditionNotMet("poles_zeros requires nonzero weights");
    std::vector<cplx> num_top(r.weights.size());
    for (std::size_t k = 0; k < r.weights.size(); ++k)
        num_top[k] = r.weights[k] * r.support_values[k];
    PoleZeroSet out;
    out.poles = arrowhead_roots(r.support_nodes, r.weights);
    out.zeros = arrowhead_roots(r.support_nodes, num_top);
    const std::size_t n = static_cast<std::size_t>(r.degree_n);
    out.degenerate = out.poles.size() != n || out.zeros.size() != n;
    return out;
}

}  // namespace unirat
