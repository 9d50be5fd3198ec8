#pragma once

#include <complex>

namespace coset {

// Real 2x2 matrix of determinant 1, understood projectively (g ~ -g).
struct psl2 {
    double a = 1, b = 0, c = 0, d = 1;

    psl2 operator*(const psl2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    psl2 inverse() const { return {d, -b, -c, a}; }
};

// One-parameter subgroups.
psl2 translation(double a); // x -> x + a
psl2 dilation(double tau);  // x -> e^tau x
psl2 shear(double n);       // lower unipotent, x -> x / (n x + 1)
psl2 rotation(double t);    // lift of the circle rotation z -> e^{it} z

// min over the sign ambiguity of the max-abs entry difference
double proj_dist(const psl2& g, const psl2& h);

// Boundary of the upper half plane: the real line plus a point at infinity.
struct boundary_point {
    bool infinite = false;
    double x = 0;
};
boundary_point finite_point(double x);
boundary_point point_at_infinity();

boundary_point mobius_apply(const psl2& g, const boundary_point& p);

// z = (ix + 1) / (-ix + 1); infinity -> -1. The inverse accepts |z| = 1.
std::complex<double> cayley(const boundary_point& p);
boundary_point cayley_inverse(const std::complex<double>& z);

// Unit-circle picture of g: z -> (alpha z + beta) / (conj(beta) z + conj(alpha)),
// |alpha|^2 - |beta|^2 = 1, defined up to overall sign.
struct su11 {
    std::complex<double> alpha{1, 0}, beta{0, 0};
};
su11 to_circle(const psl2& g);
psl2 from_circle(const su11& u);

// g = T(p) D(tau) R(t); the rotation angle t is chosen in (-pi, pi] so the
// factors vary continuously near the identity.
struct iwasawa_factors {
    double p = 0, tau = 0, t = 0;
};
iwasawa_factors iwasawa_decompose(const psl2& g);

// The square root of g in the projective group: h with h h ~ g.
psl2 sqrt_psl(const psl2& g);

} // namespace coset
