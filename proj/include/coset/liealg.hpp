#pragma once

#include "coset/rational.hpp"

#include <string>
#include <vector>

namespace coset {

// Simple Lie algebra with everything precomputed in the fundamental-weight
// basis: a weight is the vector of its Dynkin labels <lambda, alpha_i^vee>.
struct algebra {
    char series = 'A';
    int rank = 0;
    ratmat cartan;      // cartan[i][j] = <alpha_i, alpha_j^vee>
    ratvec half_length; // d_i = <alpha_i, alpha_i>/2, long roots normalized to 1
    ratmat form;        // form[i][j] = <Lambda_i, Lambda_j>
    std::vector<ratvec> positive_roots; // Dynkin labels, simple roots first
    ratvec highest_root;
    long dim = 0;          // rank + number of roots
    long dual_coxeter = 0; // g^vee

    std::string name() const; // "A8", "E8", ...
};

// series in {A,B,C,D,E,F,G}; E needs rank 6..8, F rank 4, G rank 2.
algebra make_algebra(char series, int rank);

// Accepts "A8", "E8", ..., and the aliases "suN" (= A_{N-1}).
algebra parse_algebra(const std::string& name);

rat inner(const algebra& g, const ratvec& x, const ratvec& y);

// <lambda, lambda + 2 rho>
rat casimir(const algebra& g, const ratvec& lambda);

// product formula over the positive roots; exact, returns an integer
mpz_class weyl_dim(const algebra& g, const ratvec& lambda);

// index of the representation: dim(lambda) * casimir(lambda) / dim g,
// normalized so the adjoint gives 2 g^vee
rat rep_dynkin_index(const algebra& g, const ratvec& lambda);

struct weight_mult {
    ratvec weight;
    long mult = 0;
};

// All weights of the irrep with the given dominant highest weight, with
// multiplicities by the Freudenthal recursion. Refuses reps larger than cap.
std::vector<weight_mult> weight_system(const algebra& g, const ratvec& lambda, long dim_cap = 10000);

// adjoint = all roots once + the zero weight rank times
std::vector<weight_mult> adjoint_weights(const algebra& g);

// level-k alcove of su(n): dominant integral labels with sum <= k, lex order
std::vector<std::vector<long>> alcove_sectors(int n, int level);

struct sector {
    std::vector<long> labels;
    rat h;    // conformal weight casimir/(2(k + g^vee))
    double d; // asymptotic dimension
};

sector sector_data(const algebra& g, int level, const std::vector<long>& labels);

ratvec labels_to_ratvec(const std::vector<long>& labels);

} // namespace coset
