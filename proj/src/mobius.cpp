#include "coset/mobius.hpp"

#include "coset/errors.hpp"

#include <algorithm>
#include <cmath>

namespace coset {

namespace {

constexpr double kTiny = 1e-14;

psl2 det_normalized(const psl2& g) {
    double det = g.a * g.d - g.b * g.c;
    if (det <= 0) throw inconsistency_error("matrix is not in the orientation-preserving group");
    double s = std::sqrt(det);
    return {g.a / s, g.b / s, g.c / s, g.d / s};
}

} // namespace

psl2 translation(double a) { return {1, a, 0, 1}; }

psl2 dilation(double tau) {
    double s = std::exp(tau / 2);
    return {s, 0, 0, 1 / s};
}

psl2 shear(double n) { return {1, 0, n, 1}; }

psl2 rotation(double t) {
    double cs = std::cos(t / 2), sn = std::sin(t / 2);
    return {cs, sn, -sn, cs};
}

double proj_dist(const psl2& gg, const psl2& hh) {
    psl2 g = det_normalized(gg), h = det_normalized(hh);
    double plus = std::max({std::fabs(g.a - h.a), std::fabs(g.b - h.b), std::fabs(g.c - h.c),
                            std::fabs(g.d - h.d)});
    double minus = std::max({std::fabs(g.a + h.a), std::fabs(g.b + h.b), std::fabs(g.c + h.c),
                             std::fabs(g.d + h.d)});
    return std::min(plus, minus);
}

boundary_point finite_point(double x) { return {false, x}; }
boundary_point point_at_infinity() { return {true, 0}; }

boundary_point mobius_apply(const psl2& g, const boundary_point& p) {
    if (p.infinite) {
        if (std::fabs(g.c) < kTiny) return point_at_infinity();
        return finite_point(g.a / g.c);
    }
    double den = g.c * p.x + g.d;
    if (std::fabs(den) < kTiny) return point_at_infinity();
    return finite_point((g.a * p.x + g.b) / den);
}

std::complex<double> cayley(const boundary_point& p) {
    if (p.infinite) return {-1, 0};
    std::complex<double> ix(0, p.x);
    return (ix + 1.0) / (-ix + 1.0);
}

boundary_point cayley_inverse(const std::complex<double>& z) {
    std::complex<double> den = 1.0 + z;
    if (std::abs(den) < kTiny) return point_at_infinity();
    std::complex<double> x = std::complex<double>(0, -1) * (z - 1.0) / den;
    return finite_point(x.real());
}

su11 to_circle(const psl2& gg) {
    psl2 g = det_normalized(gg);
    return {{(g.a + g.d) / 2, (g.b - g.c) / 2}, {(g.d - g.a) / 2, (g.b + g.c) / 2}};
}

psl2 from_circle(const su11& u) {
    double a = u.alpha.real() - u.beta.real();
    double d = u.alpha.real() + u.beta.real();
    double b = u.alpha.imag() + u.beta.imag();
    double c = u.beta.imag() - u.alpha.imag();
    return {a, b, c, d};
}

iwasawa_factors iwasawa_decompose(const psl2& gg) {
    psl2 g = det_normalized(gg);
    // pick the sign with d > 0 (or c < 0 on the d = 0 ray): half-angle in (-pi/2, pi/2]
    if (g.d < 0 || (g.d == 0 && g.c > 0)) g = {-g.a, -g.b, -g.c, -g.d};
    double r = std::hypot(g.c, g.d); // = e^{-tau/2}
    double half = std::atan2(-g.c, g.d);
    iwasawa_factors f;
    f.t = 2 * half;
    f.tau = -2 * std::log(r);
    f.p = (-g.a * std::sin(half) + g.b * std::cos(half)) / r;
    return f;
}

psl2 sqrt_psl(const psl2& gg) {
    psl2 g = det_normalized(gg);
    // pick the representative with tr >= 0; then tr g + 2 >= 2 and
    // Cayley-Hamilton gives ((g + 1) / sqrt(tr g + 2))^2 = g exactly
    if (g.a + g.d < 0) g = {-g.a, -g.b, -g.c, -g.d};
    double s = std::sqrt(g.a + g.d + 2);
    return {(g.a + 1) / s, g.b / s, g.c / s, (g.d + 1) / s};
}

} // namespace coset
