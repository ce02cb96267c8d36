#include "unirat/interpolation.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "unirat/numerics.hpp"

namespace unirat {

namespace {

// Classical barycentric weights w_k = prod_{j != k} 1/(s_k - s_j), scaled to
// unit norm. Accumulated in log space so wide node sets cannot overflow.
Eigen::VectorXd polynomial_weight_direction(const std::vector<double>& s) {
    const Eigen::Index cols = static_cast<Eigen::Index>(s.size());
    Eigen::VectorXd logw(cols), sign(cols);
    for (Eigen::Index k = 0; k < cols; ++k) {
        double lg = 0.0, sg = 1.0;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (j == k) continue;
            const double d = s[static_cast<std::size_t>(k)] -
                             s[static_cast<std::size_t>(j)];
            lg -= std::log(std::abs(d));
            if (d < 0.0) sg = -sg;
        }
        logw(k) = lg;
        sign(k) = sg;
    }
    const double shift = logw.maxCoeff();
    Eigen::VectorXd w(cols);
    for (Eigen::Index k = 0; k < cols; ++k)
        w(k) = sign(k) * std::exp(logw(k) - shift);
    return w / w.norm();
}

// Weight direction for a mirror-symmetric node set. With support values
// factored as f_k = e^{i omega s_k}, the kernel entry against a test node t
// reduces to the real function sin(omega (t - s)/2) / (t - s), so the null
// vector v is real and the weights are w_k = e^{-i omega s_k / 2} v_k. Any
// real v then yields |r(ix)| = 1 identically, and the error curve is even.
Eigen::VectorXd symmetric_weight_direction(double omega,
                                           const std::vector<double>& s,
                                           const std::vector<double>& t) {
    const Eigen::Index rows = static_cast<Eigen::Index>(t.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(s.size());
    Eigen::MatrixXd kernel(rows, cols);
    for (Eigen::Index j = 0; j < rows; ++j)
        for (Eigen::Index k = 0; k < cols; ++k) {
            const double gap = t[static_cast<std::size_t>(j)] -
                               s[static_cast<std::size_t>(k)];
            kernel(j, k) = std::sin(0.5 * omega * gap) / gap;
        }
    std::vector<double> sigma(static_cast<std::size_t>(rows));
    Eigen::MatrixXd u(rows, rows), vt(cols, cols);
    const lapack_int info = LAPACKE_dgesdd(
        LAPACK_COL_MAJOR, 'A', static_cast<lapack_int>(rows),
        static_cast<lapack_int>(cols), kernel.data(),
        static_cast<lapack_int>(rows), sigma.data(), u.data(),
        static_cast<lapack_int>(rows), vt.data(), static_cast<lapack_int>(cols));
    if (info != 0)
        throw SmallestSingularValueNotIsolated("SVD failed to converge");
    const Eigen::VectorXd v = vt.row(cols - 1);
    // The kernel commutes with the mirror flip, so its singular directions
    // split into flip-even and flip-odd families; the null direction is
    // even for even n and odd for odd n. Projecting onto that parity
    // removes roundoff mixing, and keeps the right family even when the
    // two trailing singular values nearly coincide far from the optimum.
    const bool want_even = cols % 2 == 1;
    Eigen::VectorXd picked(cols);
    for (Eigen::Index k = 0; k < cols; ++k)
        picked(k) = want_even ? 0.5 * (v(k) + v(cols - 1 - k))
                              : 0.5 * (v(k) - v(cols - 1 - k));
    // At frequencies far below machine precision the kernel is numerically
    // rank one, so v is an arbitrary null-space basis vector and its
    // projection can contain exact zeros. Polynomial barycentric weights
    // carry the same parity on a mirror-symmetric set and stand in as the
    // limiting direction; the residual check downstream has the final word.
    bool exact_zero = false;
    for (Eigen::Index k = 0; k < cols; ++k) exact_zero |= picked(k) == 0.0;
    if (exact_zero) return polynomial_weight_direction(s);
    return picked / picked.norm();
}

Eigen::VectorXcd loewner_weight_direction(double omega,
                                          const std::vector<double>& s,
                                          const std::vector<double>& t) {
    const Eigen::Index rows = static_cast<Eigen::Index>(t.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(s.size());
    Eigen::MatrixXcd loewner(rows, cols);
    for (Eigen::Index j = 0; j < rows; ++j) {
        const double tj = t[static_cast<std::size_t>(j)];
        const cplx ft = std::polar(1.0, omega * tj);
        for (Eigen::Index k = 0; k < cols; ++k) {
            const double sk = s[static_cast<std::size_t>(k)];
            loewner(j, k) = (ft - std::polar(1.0, omega * sk)) / (tj - sk);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(loewner, Eigen::ComputeFullV);
    return svd.matrixV().col(cols - 1);
}

}  // namespace

BarycentricRational build_interpolant(double omega, const NodeSet& nodes) {
    const int n = nodes.degree();
    if (!(omega > 0.0) || !(omega < (n + 1) * std::numbers::pi))
        throw DomainError("omega must lie in (0, (n+1) pi)");

    const std::vector<double> x = nodes.values();
    std::vector<double> s, t;
    s.reserve(static_cast<std::size_t>(n) + 1);
    t.reserve(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < x.size(); ++j)
        (j % 2 == 0 ? s : t).push_back(x[j]);

    BarycentricRational r;
    r.degree_n = n;
    r.support_nodes = s;
    r.support_values.resize(s.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        r.support_values[k] = std::polar(1.0, omega * s[k]);

    r.weights.resize(s.size());
    if (n == 0) {
        r.weights[0] = cplx{1.0, 0.0};
        return r;
    }
    if (nodes.symmetric()) {
        const Eigen::VectorXd v = symmetric_weight_direction(omega, s, t);
        for (std::size_t k = 0; k < s.size(); ++k)
            r.weights[k] =
                v(static_cast<Eigen::Index>(k)) * std::polar(1.0, -0.5 * omega * s[k]);
    } else {
        const Eigen::VectorXcd v = loewner_weight_direction(omega, s, t);
        for (std::size_t k = 0; k < s.size(); ++k)
            r.weights[k] = v(static_cast<Eigen::Index>(k));
    }

    double wmax = 0.0, wmin = std::numeric_limits<double>::infinity();
    for (const cplx w : r.weights) {
        wmax = std::max(wmax, std::abs(w));
        wmin = std::min(wmin, std::abs(w));
    }
    if (wmin == 0.0)
        throw SmallestSingularValueNotIsolated(
            "weight vector has an exactly zero component");
    r.near_degenerate = wmin < 1e-14 * wmax;

    // Functional degeneracy check: the null vector is only trustworthy if
    // the resulting function actually reproduces the data at the test
    // nodes (support nodes are exact by construction). Healthy instances
    // stay below 1e-9 even when the weights span twelve decades; an
    // ambiguous kernel leaves residuals many orders larger.
    double residual = 0.0;
    for (const double tj : t)
        residual = std::max(
            residual, std::abs(eval_ix(r, tj) - std::polar(1.0, omega * tj)));
    if (!(residual <= 1e-8)) {
        char msg[96];
        std::snprintf(msg, sizeof msg,
                      "interpolation residual %.3e indicates a non-isolated "
                      "smallest singular value",
                      residual);
        throw SmallestSingularValueNotIsolated(msg);
    }
    return r;
}

}  // namespace unirat
