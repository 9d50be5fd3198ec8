#pragma once

#include "coset/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace coset {

// generator families: Virasoro L_n, affine su(2) currents e/f/h_n, and the
// central derivative-field modes phi_n
enum class gen : unsigned char { L, e, f, h, phi };

struct mode {
    gen kind;
    long m;
    friend auto operator<=>(const mode&, const mode&) = default;
};

// canonical basis word: lowering modes only (m < 0), sorted by (m, kind);
// top indexes a vector of the grade-0 multiplet
struct monomial {
    std::vector<mode> word;
    long top = 0;
    friend auto operator<=>(const monomial&, const monomial&) = default;
};

long monomial_grade(const monomial& m);

// sparse vector over the module basis-free monomial space
using state = std::map<monomial, rat>;

struct module_params {
    enum class family { virasoro, affine_su2, phi } fam = family::virasoro;
    rat c = 0, h = 0; // virasoro
    long k = 0;       // affine level
    long lambda = 0;  // affine top spin label (dimension lambda+1)
    long n = 0;       // phi derivative degree; 0 is the plain u(1) current
    rat q0 = 0;       // phi zero-mode constant
};

// gram matrices are block-diagonal over the h_0 weight; members index into
// the grade's basis list
struct weight_block {
    long weight = 0;
    std::vector<std::size_t> members;
    ratmat gram;
};

struct graded_module {
    module_params params;
    long cap = 0;
    std::vector<std::vector<monomial>> basis;       // per grade 0..cap
    std::vector<std::vector<weight_block>> blocks;  // per grade, gram filled

    long top_dim() const;
    rat top_norm(long j) const; // <v_j, v_j>, diagonal top gram
    rat top_h() const;          // lowest conformal energy of the family

    // exact single-mode application; works on any state, not capped
    state apply(const mode& x, const state& v) const;
    state apply(const mode& x, const monomial& m, const rat& coeff) const;
    // Segal-Sugawara mode built from the currents (affine family only)
    state apply_sugawara(long n, const state& v) const;
    rat pair(const state& x, const state& y) const;

    const weight_block* find_block(long grade, long weight) const;
};

// central-mode pairing of the degree-n derivative field,
// (m-n)(m-n+1)...(m+n); degree 0 gives the u(1) current's m
rat phi_pairing(long n, long m);

graded_module virasoro_module(const rat& c, const rat& h, long cap, bool parallel_gram = true);
graded_module affine_su2_module(long k, long lambda, long cap, bool parallel_gram = true);
graded_module phi_module(long n, long cap, const rat& q0 = 0, bool parallel_gram = true);

// serial reference vs OpenMP kernel for the gram blocks; both fill the same
// exact entries (bit-identical), used by the builders and the benchmark
void fill_gram_serial(graded_module& m);
void fill_gram_parallel(graded_module& m);

std::vector<long> module_graded_dims(const graded_module& m);
std::vector<long> module_graded_ranks(const graded_module& m);
long block_rank(const graded_module& m, long grade, long weight);

// gram ranks per grade of the (c,h) highest-weight module: the graded
// dimensions of the irreducible quotient
std::vector<long> virasoro_irrep_dims(const rat& c, const rat& h, long cap);

// gram determinant of the single weight block at the given grade
rat virasoro_gram_det(const rat& c, const rat& h, long grade);

struct identity_report {
    std::string name;
    long max_grade = 0;
    rat residual = 0; // largest absolute coefficient of the defect, 0 = pass
    bool pass() const { return residual == 0; }
};

// exact operator identities on the level-k vacuum module: the Virasoro
// bracket of the Sugawara modes at c = 3k/(k+2), the current covariance
// [L_m, j^a_n] = -n j^a_{m+n}, and the L_0 grading; modes |m| <= mode_cap,
// applied to every basis vector of grade <= grade_cap
std::vector<identity_report> sugawara_verify(long k, long grade_cap, long mode_cap);

struct energy_bound_report {
    long k = 0, grade_cap = 0;
    long checked = 0;   // (mode, vector) pairs tested
    bool all_hold = false;
    rat worst_ratio = 0; // max of |j phi|^2 / (bound * |phi|^2)
    std::string worst_case;
};

// ||j^a_n phi||^2 <= (3 k N_phi + 4 k |n|) ||phi||^2 on an orthogonalized
// basis (kernel vectors must be annihilated in norm), |n| <= 3
energy_bound_report energy_bound_check(long k, long grade_cap);

struct null_info {
    long grade = 0;
    long dim = 0;  // basis vectors at the grade
    long rank = 0; // gram rank
};
std::vector<null_info> phi_null_report(const graded_module& m);

struct set_certificate {
    long n = 0;
    std::string kind; // "null-level-2" (n >= 2) or "gamma-contradiction" (n = 1)
    std::vector<long> null_grades;
    // n = 1 data: ||phi_{-2} O||^2, the forced value of c|gamma|^2, the norm
    // of the quasi-primary difference, and whether any nonzero gamma makes
    // the modes satisfy the Virasoro bracket
    rat phi2_norm = 0;
    rat required_c_gamma2 = 0;
    rat quasi_primary_norm = 0;
    bool virasoro_fit_feasible = false;
};

// why the degree-n derivative field admits no stress-energy tensor
set_certificate no_set_certificate(long n);

// p(0..cap) by the pentagonal-number recurrence
std::vector<mpz_class> partition_dims(long cap);

struct eta_check_point {
    double beta = 0, lhs = 0, bound = 0;
    bool pass = false;
};

// finite surrogate of the trace-class asymptotics: compares
// log sum_{n<=cap} p(n) e^{-beta n} against beta0/beta on the grid
std::vector<eta_check_point> eta_asymptotic_check(const std::vector<double>& betas, double beta0,
                                                  long cap = 200);
double default_eta_beta0(); // pi^2/6 - 1 + 0.05

} // namespace coset
