#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace coset {

using rat = mpq_class;
using ratvec = std::vector<rat>;
using ratmat = std::vector<ratvec>;

// Accepts "p", "-p", "p/q"; canonicalizes the sign into the numerator.
rat parse_rat(const std::string& s);

// Always "p/q", q > 0, even for integers ("3" -> "3/1").
std::string rat_str(const rat& x);

bool is_integer(const rat& x);

// Requires is_integer and the value to fit into long.
long to_long(const rat& x);

// Largest integer <= x, as a rational.
rat rat_floor(const rat& x);

ratmat rat_identity(std::size_t n);
ratvec mat_apply(const ratmat& m, const ratvec& v);
ratmat mat_mul(const ratmat& a, const ratmat& b);

// Exact Gaussian elimination. Matrices are small and dense; the pivot is the
// first nonzero entry in the column (no stability concerns with exact pivots).
std::size_t rat_rank(ratmat a);
rat rat_det(ratmat a);
std::optional<ratvec> rat_solve(ratmat a, ratvec b);
std::optional<ratmat> rat_inverse(const ratmat& a);

// Basis of the kernel of a (columns are coordinates in the original basis).
std::vector<ratvec> rat_kernel(ratmat a);

} // namespace coset
