#include "lamelat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lamelat {

namespace {

// Cyclic Jacobi eigensolver for a symmetric tridiagonal matrix given by
// diagonal d[0..n) and off-diagonal e[0..n-1).  Returns eigenvalues in
// ascending order together with the first component of each normalized
// eigenvector (all Golub-Welsch needs).
void tridiag_eigen_first(std::vector<double> d, std::vector<double> e,
                         std::vector<double>& eval,
                         std::vector<double>& first) {
    const int n = (int)d.size();
    // Dense symmetric storage; n <= 48 so O(n^3) sweeps are negligible.
    std::vector<double> A(n * n, 0.0);
    for (int i = 0; i < n; ++i) A[i * n + i] = d[i];
    for (int i = 0; i + 1 < n; ++i) A[i * n + i + 1] = A[(i + 1) * n + i] = e[i];
    // V starts as identity; we only need its first row.
    std::vector<double> vrow(n, 0.0);
    std::vector<double> V(n * n, 0.0);
    for (int i = 0; i < n; ++i) V[i * n + i] = 1.0;

    for (int sweep = 0; sweep < 80; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A[p * n + q] * A[p * n + q];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A[p * n + q];
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (A[q * n + q] - A[p * n + p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = A[i * n + p], aiq = A[i * n + q];
                    A[i * n + p] = c * aip - s * aiq;
                    A[i * n + q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = A[p * n + i], aqi = A[q * n + i];
                    A[p * n + i] = c * api - s * aqi;
                    A[q * n + i] = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = V[i * n + p], viq = V[i * n + q];
                    V[i * n + p] = c * vip - s * viq;
                    V[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }
    eval.resize(n);
    first.resize(n);
    for (int i = 0; i < n; ++i) {
        eval[i] = A[i * n + i];
        first[i] = V[0 * n + i];
    }
    // ascending node order
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return eval[a] < eval[b]; });
    std::vector<double> ev(n), fv(n);
    for (int i = 0; i < n; ++i) {
        ev[i] = eval[idx[i]];
        fv[i] = first[idx[i]];
    }
    eval = ev;
    first = fv;
}

GaussRule make_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss rule: need n >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("gauss-jacobi: exponents must be > -1");
    // Recurrence for monic Jacobi polynomials: a_k (diagonal), b_k (off).
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        if (k == 0 && std::fabs(ab) < 1e-14 && std::fabs(alpha - beta) < 1e-14)
            d[k] = 0.0;
        else if (k == 0)
            d[k] = (beta - alpha) / (ab + 2.0);
        else
            d[k] = (beta * beta - alpha * alpha) / den;
    }
    for (int k = 1; k < n; ++k) {
        double num;
        if (k == 1)
            num = 4.0 * (1.0 + alpha) * (1.0 + beta) /
                  ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        else
            num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                  ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
                   (2.0 * k + ab - 1.0));
        e[k - 1] = std::sqrt(num);
    }
    // mu0 = integral of (1-x)^alpha (1+x)^beta over [-1,1]
    double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                          std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
    std::vector<double> eval, first;
    tridiag_eigen_first(d, e, eval, first);
    GaussRule r;
    r.node = eval;
    r.weight.resize(n);
    for (int i = 0; i < n; ++i) r.weight[i] = mu0 * first[i] * first[i];
    return r;
}

std::mutex cache_mu;
std::map<std::tuple<int, long long, long long>, GaussRule> cache;

long long quantize(double v) { return (long long)std::llround(v * 1e12); }

}  // namespace

const GaussRule& gauss_jacobi(int n, double alpha, double beta) {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto key = std::make_tuple(n, quantize(alpha), quantize(beta));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, make_jacobi(n, alpha, beta)).first;
    return it->second;
}

const GaussRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n) {
    const GaussRule& r = gauss_legendre(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.node.size(); ++i)
        s += r.weight[i] * f(mid + half * r.node[i]);
    return s * half;
}

namespace {
double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int n, int depth) {
    double coarse = integrate_gl(f, a, b, n);
    double fine = integrate_gl(f, a, b, 2 * n);
    if (std::fabs(fine - coarse) <= tol || depth <= 0) return fine;
    double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * tol, n, depth - 1) +
           adapt(f, mid, b, 0.5 * tol, n, depth - 1);
}
}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int n, int max_depth) {
    if (!(b >= a)) throw std::invalid_argument("integrate_adaptive: b < a");
    if (a == b) return 0.0;
    return adapt(f, a, b, tol, n, max_depth);
}

double integrate_right_singular(const std::function<double(double)>& f,
                                double a, double b, double alpha, int n) {
    if (!(b > a)) throw std::invalid_argument("integrate_right_singular: b <= a");
    // Map [a,b] -> [-1,1]; weight (1-x)^alpha picks up the right endpoint.
    const GaussRule& r = gauss_jacobi(n, alpha, 0.0);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    // (b - t)^alpha = (half (1-x))^alpha: the half^alpha factor scales out.
    double s = 0.0;
    for (std::size_t i = 0; i < r.node.size(); ++i)
        s += r.weight[i] * f(mid + half * r.node[i]);
    return s * half * std::pow(half, alpha);
}

}  // namespace lamelat
