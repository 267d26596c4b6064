// Gaussian quadrature rules via Golub-Welsch, and a panel integrator for
// oscillatory integrands.
//
// Rules are generated from the three-term recurrence of the orthogonal
// polynomial family (Legendre, or Jacobi with weight (1-x)^alpha on the
// right endpoint) by diagonalizing the symmetric tridiagonal Jacobi matrix;
// nodes are its eigenvalues and weights mu0 * (first eigenvector entry)^2.
// Node counts stay small (<= 48), so a plain cyclic Jacobi rotation
// eigensolver is entirely adequate and keeps the dependency surface at zero.
// Generated rules are cached per (n, alpha, beta).

#pragma once

#include <functional>
#include <vector>

namespace lamelat {

struct GaussRule {
    std::vector<double> node;    // on [-1, 1]
    std::vector<double> weight;  // against (1-x)^alpha (1+x)^beta
};

// n-point Gauss-Legendre rule on [-1,1].
const GaussRule& gauss_legendre(int n);

// n-point Gauss-Jacobi rule on [-1,1] with weight (1-x)^alpha (1+x)^beta,
// alpha, beta > -1.
const GaussRule& gauss_jacobi(int n, double alpha, double beta);

// Integrate f over [a,b] with a fixed Gauss-Legendre order.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n);

// Adaptive bisection with embedded GL(n)/GL(2n) error estimate; depth-limited.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int n = 16, int max_depth = 18);

// Integrate f(t) * (b-t)^alpha over [a,b] (algebraic singularity at the right
// endpoint absorbed into a Gauss-Jacobi rule), fixed order n.
double integrate_right_singular(const std::function<double(double)>& f,
                                double a, double b, double alpha, int n);

}  // namespace lamelat
