#include "qwalk/kernel.hpp"

#include <cmath>

namespace qwalk {

BiSeries KernelCoeffs::b() const {
    return BiSeries(std::vector<Laurent>{Laurent::x(), -b0}, 0, kExact);
}

BiSeries KernelCoeffs::bt() const {
    return BiSeries(std::vector<Laurent>{Laurent::y(), -bt0}, 0, kExact);
}

BiSeries KernelCoeffs::kernel() const {
    Laurent y = Laurent::y();
    return BiSeries(std::vector<Laurent>{Laurent::x() * y, a * y * y - b0 * y + c}, 0, kExact);
}

KernelCoeffs kernel_coeffs(const StepSet& s) {
    KernelCoeffs k;
    for (auto [i, j] : s.vectors()) {
        Laurent mx = Laurent::x(i + 1), my = Laurent::monomial(1, 0, j + 1);
        if (j == 1) k.a -= mx;
        if (j == 0) k.b0 += mx;
        if (j == -1) k.c -= mx;
        if (i == 1) k.at -= my;
        if (i == 0) k.bt0 += my;
        if (i == -1) k.ct -= my;
    }
    return k;
}

Laurent step_inventory(const StepSet& s) {
    Laurent p;
    for (auto [i, j] : s.vectors()) p += Laurent::monomial(1, i, j);
    return p;
}

YRoots y_roots(const StepSet& s, int N) {
    KernelCoeffs k = kernel_coeffs(s);
    if (k.a.is_zero() || k.c.is_zero())
        throw std::domain_error("degenerate kernel for " + s.str() + ": no root pair in y");
    Laurent xbar = Laurent::x(-1);
    BiSeries tx = BiSeries::monomial(xbar, 1);
    // x Y = t (b0 Y - a Y^2 - c)
    std::function<BiSeries(const BiSeries&)> phi = [&](const BiSeries& y) {
        BiSeries inner = y * k.b0 - (y * y) * k.a;
        BiSeries cc = BiSeries(-k.c, y.order());
        return tx * (inner + cc);
    };
    BiSeries y0 = solve_fixed_point(phi, N);
    BiSeries num = BiSeries::monomial(-Laurent::x(), -1) + BiSeries(k.b0) - y0 * k.a;
    return {y0, {num, k.a}};
}

BiSeries y0_by_radical(const StepSet& s, int N) {
    KernelCoeffs k = kernel_coeffs(s);
    Laurent xbar = Laurent::x(-1);
    BiSeries u = BiSeries(std::vector<Laurent>{Laurent(1), -k.b0 * xbar}, 0, kExact);
    BiSeries disc = u * u - BiSeries::monomial(Laurent(4) * k.a * k.c * xbar * xbar, 2);
    BiSeries root = sqrt_series(disc.trunc(N + 1));
    BiSeries numer = root * Laurent::x() - k.b().trunc(N + 1);
    BiSeries denom = BiSeries::monomial(Laurent(2) * k.a, 1);
    return (numer / denom).trunc(N);
}

BiSeries kernel_residual(const StepSet& s, const BiSeries& y0) {
    KernelCoeffs k = kernel_coeffs(s);
    BiSeries t1 = BiSeries::t(1);
    BiSeries sq = y0 * y0;
    return (t1 * sq) * k.a + y0 * Laurent::x() - t1 * (y0 * k.b0) + BiSeries(k.c * Laurent(1), kExact) * t1;
}

CanonicalFactors canonical_factorization(const BiSeries& delta) {
    if (delta.is_exact()) throw std::domain_error("canonical factorization needs a truncation order");
    if (delta.valuation() < 0 || !delta.coeff(0).is_one())
        throw std::domain_error("canonical factorization: constant term is not 1");
    int N = delta.order();
    int slope = 1;
    for (int n = 1; n <= N; ++n) {
        const Laurent& c = delta.coeff(n);
        if (c.is_zero()) continue;
        if (c.depends_on_y()) throw std::domain_error("canonical factorization: coefficient depends on y");
        int w = std::max(std::abs(c.xmin()), std::abs(c.xmax()));
        slope = std::max(slope, (w + n - 1) / n);
    }
    std::vector<Laurent> P(N + 1), Z(N + 1), M(N + 1), PZ(N + 1);
    P[0] = Z[0] = M[0] = PZ[0] = Laurent(1);
    for (int n = 1; n <= N; ++n) {
        Laurent pz_partial;
        for (int i = 1; i < n; ++i)
            if (!P[i].is_zero() && !Z[n - i].is_zero()) pz_partial += P[i] * Z[n - i];
        Laurent r = delta.coeff(n) - pz_partial;
        for (int m = 1; m < n; ++m)
            if (!PZ[m].is_zero() && !M[n - m].is_zero()) r -= PZ[m] * M[n - m];
        if (!r.is_zero()) {
            int w = std::max(std::abs(r.xmin()), std::abs(r.xmax()));
            if (w > slope * n + 2)
                throw std::runtime_error("canonical factorization: split fails to converge at order " +
                                         std::to_string(n));
        }
        P[n] = r.x_positive();
        Z[n] = r.x_zero();
        M[n] = r.x_negative();
        PZ[n] = pz_partial + P[n] + Z[n];
    }
    return {BiSeries(std::move(P), 0, N), BiSeries(std::move(Z), 0, N), BiSeries(std::move(M), 0, N)};
}

}  // namespace qwalk
