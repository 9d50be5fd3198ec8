#pragma once

#include "coset/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace coset {

// Laurent polynomial in the spin variable z: weight -> coefficient
using zpoly = std::map<long, mpz_class>;

rat affine_su2_h(long k, long l);
rat affine_su2_c(long k);

// grade-truncated affine su(2) character; grades[n][w] is the dimension of
// the weight-w space at energy offset+n
struct affine_character {
    long k = 0, l = 0;
    rat offset = 0; // lowest energy h(k,l)
    std::vector<zpoly> grades;
};

// Weyl-Kac quotient for affine su(2), exact integer coefficients
affine_character affine_su2_character(long k, long l, long cap);

std::vector<mpz_class> character_dims(const affine_character& ch); // z-summed per grade
mpz_class character_coeff(const affine_character& ch, long grade, long weight);

struct product_character {
    long k = 0; // diagonal level k1 + k2
    rat offset = 0;
    std::vector<zpoly> grades;
};

product_character character_product(const affine_character& a, const affine_character& b);

// branching function of one diagonal target inside a product: integer-step
// q-series starting at the absolute exponent lead
struct branch_series {
    long target = 0;
    rat lead = 0;
    std::vector<mpz_class> coeffs;
};

// peel the product over the diagonal su(2) characters grade by grade; the
// top z-weight of the running residue identifies each new term uniquely
std::vector<branch_series> branching_functions(const product_character& prod, long cap);

struct branch_row_claim {
    long target = 0;
    std::vector<std::pair<rat, long>> coset; // (lowest energy, multiplicity)
};

struct branching_claim {
    long k1 = 0, l1 = 0;
    long k2 = 0, l2 = 0;
    std::vector<branch_row_claim> rows;
};

struct branch_row_report {
    long target = 0;
    bool pass = false;
    long first_fail_grade = -1; // steps above the series lead, -1 if clean
    std::string note;
};

struct branching_report {
    bool pass = false;
    rat coset_c = 0;
    std::vector<branch_row_report> rows;
};

// checks that the peeled branching functions of (k1,l1) x (k2,l2) match the
// claimed coset content, with each claimed (h, mult) contributing mult copies
// of the Virasoro irreducible character of (c_coset, h) from the gram ranks
branching_report verify_branching(const branching_claim& claim, long cap);

} // namespace coset
