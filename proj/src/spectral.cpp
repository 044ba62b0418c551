#include "irreg/spectral.hpp"

#include "irreg/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace irreg {

namespace {

using boost::multiprecision::cpp_int;

enum class Operator { ShiftedAdjacency, SignlessLaplacian };

struct ComponentRadius {
    double value = 0.0;
    long iterations = 0;
    double residual = 0.0;
};

ComponentRadius power_iteration(const Graph& c, Operator op, double tol, long max_iterations)
{
    const int n = c.order();
    if (n == 1)
        return {};

    const double shift = op == Operator::ShiftedAdjacency ? 1.0 : 0.0;
    std::vector<double> x(static_cast<std::size_t>(n)), y(x.size());
    for (Vertex v = 0; v < n; ++v)
        x[static_cast<std::size_t>(v)] = 1.0 + c.degree(v);

    auto normalize = [](std::vector<double>& z) {
        double norm = 0.0;
        for (double t : z)
            norm += t * t;
        norm = std::sqrt(norm);
        for (double& t : z)
            t /= norm;
    };
    normalize(x);

    double residual = std::numeric_limits<double>::infinity();
    for (long it = 1; it <= max_iterations; ++it) {
        for (Vertex v = 0; v < n; ++v) {
            double acc = 0.0;
            for (Vertex w : c.neighbors(v))
                acc += x[static_cast<std::size_t>(w)];
            double diag = op == Operator::ShiftedAdjacency ? shift : static_cast<double>(c.degree(v));
            y[static_cast<std::size_t>(v)] = acc + diag * x[static_cast<std::size_t>(v)];
        }
        double theta = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            theta += x[i] * y[i];
        double r2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double d = y[i] - theta * x[i];
            r2 += d * d;
        }
        residual = std::sqrt(r2);
        const double eigenvalue = theta - shift;
        if (residual <= tol * std::max(eigenvalue, 1.0))
            return {eigenvalue, it, residual};
        x.swap(y);
        normalize(x);
    }
    throw ConvergenceError("power iteration did not converge within " + std::to_string(max_iterations) +
                               " iterations (residual " + std::to_string(residual) + ")",
                           max_iterations, residual);
}

ComponentRadius radius(const Graph& g, Operator op, double tol, long max_iterations)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    ComponentRadius best;
    for (const auto& vertices : connected_components(g)) {
        if (vertices.size() == 1)
            continue;
        auto r = power_iteration(induced_subgraph(g, vertices), op, tol, max_iterations);
        best.value = std::max(best.value, r.value);
        best.iterations += r.iterations;
        best.residual = std::max(best.residual, r.residual);
    }
    return best;
}

}  // namespace

SpectralResult adjacency_spectral_radius(const Graph& g, double tol, long max_iterations)
{
    auto r = radius(g, Operator::ShiftedAdjacency, tol, max_iterations);
    return {r.value, std::nullopt, r.iterations, r.residual};
}

double signless_laplacian_radius(const Graph& g, double tol, long max_iterations)
{
    return radius(g, Operator::SignlessLaplacian, tol, max_iterations).value;
}

SpectralResult spectral_radii(const Graph& g, double tol, long max_iterations)
{
    auto a = radius(g, Operator::ShiftedAdjacency, tol, max_iterations);
    auto q = radius(g, Operator::SignlessLaplacian, tol, max_iterations);
    return {a.value, q.value, a.iterations + q.iterations, std::max(a.residual, q.residual)};
}

namespace {

std::vector<cpp_int> charpoly_exact(const Graph& g)
{
    const int n = g.order();
    if (n > kOracleCap)
        throw CapExceeded("characteristic polynomial supports n <= " + std::to_string(kOracleCap) + ", got n = " +
                          std::to_string(n));
    const auto N = static_cast<std::size_t>(n);
    using Matrix = std::vector<std::vector<cpp_int>>;

    std::vector<cpp_int> c(N + 1);
    c[N] = 1;
    Matrix M(N, std::vector<cpp_int>(N));  // M_0 = 0
    for (std::size_t k = 1; k <= N; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        Matrix next(N, std::vector<cpp_int>(N));
        for (std::size_t i = 0; i < N; ++i) {
            for (Vertex w : g.neighbors(static_cast<Vertex>(i)))
                for (std::size_t j = 0; j < N; ++j)
                    next[i][j] += M[static_cast<std::size_t>(w)][j];
            next[i][i] += c[N - k + 1];
        }
        M = std::move(next);
        // c_{n-k} = -tr(A M_k) / k
        cpp_int trace = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (Vertex w : g.neighbors(static_cast<Vertex>(i)))
                trace += M[static_cast<std::size_t>(w)][i];
        c[N - k] = -trace / static_cast<long>(k);
    }
    return c;
}

// True iff every Taylor coefficient of p at num/den is positive.
bool above_largest_root(const std::vector<cpp_int>& p, const cpp_int& num, const cpp_int& den)
{
    const std::size_t n = p.size() - 1;
    // R(x) = den^n p(x / den), then shift to R(x + num).
    std::vector<cpp_int> b(n + 1);
    cpp_int scale = 1;
    for (std::size_t i = n + 1; i-- > 0;) {
        b[i] = p[i] * scale;
        scale *= den;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j-- > i;)
            b[j] += num * b[j + 1];
    return std::all_of(b.begin(), b.end(), [](const cpp_int& v) { return v > 0; });
}

}  // namespace

std::vector<long long> characteristic_polynomial(const Graph& g)
{
    auto exact = charpoly_exact(g);
    std::vector<long long> out;
    out.reserve(exact.size());
    for (const auto& v : exact)
        out.push_back(v.convert_to<long long>());
    return out;
}

double spectral_oracle(const Graph& g)
{
    const auto p = charpoly_exact(g);
    const int n = g.order();
    int max_degree = 0;
    for (Vertex v = 0; v < n; ++v)
        max_degree = std::max(max_degree, g.degree(v));

    // Interval [2m/n, maxdeg + 1] with common denominator n * 2^k.
    cpp_int den = n;
    cpp_int lo = 2 * g.size();
    cpp_int hi = cpp_int(n) * (max_degree + 1);
    for (int step = 0; step < 56; ++step) {
        lo *= 2;
        hi *= 2;
        den *= 2;
        cpp_int mid = (lo + hi) / 2;
        if (above_largest_root(p, mid, den))
            hi = mid;
        else
            lo = mid;
    }
    return ((lo + hi).convert_to<double>() / 2.0) / den.convert_to<double>();
}

}  // namespace irreg
