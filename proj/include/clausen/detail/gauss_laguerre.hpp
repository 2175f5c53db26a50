#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "clausen/errors.hpp"
#include "clausen/gamma.hpp"

namespace clausen::detail {

struct QuadratureRule {
    std::vector<RealHP> nodes, weights;
};

/// Generalized Gauss-Laguerre rule: integral_0^inf x^a e^-x f(x) dx
/// = sum w_i f(x_i), exact for polynomials f of degree <= 2n-1.  Golub-Welsch:
/// nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix
/// (diagonal 2i+1+a, off-diagonal sqrt(i(i+a))), weights are Gamma(a+1) times
/// the squared first eigenvector components; QL with implicit shifts rotates
/// the first-row vector alongside the matrix.
inline QuadratureRule gauss_laguerre(int n, RealHP a) {
    if (n < 1) throw invalid_instance("quadrature rule needs at least one node");
    if (!(a > -1.0L)) throw side_condition_violated("quadrature weight exponent > -1");

    std::vector<RealHP> d(n), e(n, 0.0L), z(n, 0.0L);
    for (int i = 0; i < n; ++i) d[i] = 2.0L * i + 1.0L + a;
    for (int i = 1; i < n; ++i) e[i - 1] = std::sqrt(i * (i + a));
    z[0] = 1.0L;

    const RealHP eps = std::numeric_limits<RealHP>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0, m;
        do {
            for (m = l; m < n - 1; ++m) {
                const RealHP dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw evaluation_error("quadrature eigensolver did not converge");
                RealHP g = (d[l + 1] - d[l]) / (2.0L * e[l]);
                RealHP r = std::hypot(g, 1.0L);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                RealHP s = 1.0L, c = 1.0L, p = 0.0L;
                int i = m - 1;
                for (; i >= l; --i) {
                    RealHP f = s * e[i];
                    const RealHP b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0L) {  // rotation underflowed; restart this block
                        d[i + 1] -= p;
                        e[m] = 0.0L;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0L * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0L && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0L;
            }
        } while (m != l);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&d](int i, int j) { return d[i] < d[j]; });

    const RealHP mu0 = gamma_real(a + 1.0L);
    QuadratureRule rule;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (int i : order) {
        rule.nodes.push_back(d[i]);
        rule.weights.push_back(mu0 * z[i] * z[i]);
    }
    return rule;
}

} // namespace clausen::detail
