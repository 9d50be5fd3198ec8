#pragma once

#include "coset/rational.hpp"

#include <string>
#include <vector>

namespace coset {

// Kac label of the m-th unitary minimal model; stored as given (tables often
// use s > r), canonicalized on comparison
struct kac_label {
    long r = 1, s = 1;
    friend bool operator==(const kac_label&, const kac_label&) = default;
};

rat minimal_c(long m);
rat kac_h(long m, const kac_label& a);
double kac_d(long m, const kac_label& a);
bool kac_valid(long m, const kac_label& a);      // inside the (r,s) grid
kac_label kac_canonical(long m, const kac_label& a); // 1 <= s <= r <= m+1
bool kac_equal(long m, const kac_label& a, const kac_label& b);

struct minimal_sector {
    kac_label label;
    rat h;
    double d = 0;
};

// canonical sector list, (m+1)(m+2)/2 rows, sorted by (r, s)
std::vector<minimal_sector> minimal_model_table(long m);

// truncated fusion of canonical labels; outputs canonical, sorted, each once
std::vector<kac_label> fuse_minimal(long m, const kac_label& a, const kac_label& b);

// affine su(2) sector data and fusion
rat su2_h(long k, long l);
double su2_d(long k, long l);
std::vector<long> fuse_su2(long k, long a, long b);

double mu_index(const std::vector<double>& dims);
double su2_mu_closed(long k); // (k+2) / (2 sin^2(pi/(k+2)))

// mu_sub = [B:A]^2 mu_ambient and the index sequence rules
double mu_ambient_from_index(double mu_sub, double index);
double index_from_mu(double mu_sub, double mu_ambient);
double tensor_index(double index_a, double index_c);

// one sector inside a branching-table bundle
struct sector_entry {
    std::string label;
    rat h = 0;
    double d = 0;
    long mult = 1;
};

struct table_row {
    std::vector<sector_entry> a_side, c_side;
    bool vacuum = false;
};

struct coupling_pair {
    std::size_t u = 0, v = 0; // row indices of the paired extended sectors
    double da = 0, dc = 0;
};

struct coupling_result {
    double index_a = 0, index_c = 0;  // extension indices d(rho^A), d(rho^C)
    std::vector<double> ext_a, ext_c; // extended dims per row
    bool resolved = false;            // a dimension-matching permutation exists
    std::vector<coupling_pair> pairs; // first admissible pairing, in row order
    std::vector<std::vector<coupling_pair>> alternatives; // every admissible pairing
    bool unique = true;
    bool normal = false;
    std::vector<std::string> notes;
};

// extension indices from the vacuum bundles, extended dims as bundle
// dimension over index, pairing as the dimension-matching permutation;
// ties across content-identical rows pair in order and stay unique
coupling_result coupling_solve(const std::vector<table_row>& rows, double tol = 1e-4);

struct sharp_report {
    bool sharp = false;
    std::vector<rat> offenders;
};

// sharp geometric action needs every energy in (1/2) Z_{>=0}
sharp_report sharp_action_test(const std::vector<rat>& hs);

} // namespace coset
