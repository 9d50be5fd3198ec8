#pragma once

#include "coset/liealg.hpp"
#include "coset/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coset {

// dim-dimensional abelian ideal; contributes c = dim and is otherwise inert
// (index 1, dual Coxeter 0). metric and kappa are carried verbatim.
struct abelian_ideal {
    int dim = 0;
    ratmat metric; // positive definite, dim x dim
    rat kappa = 1;
};

struct leveled_component {
    algebra alg;
    long level = 1;
};

struct leveled_algebra {
    std::vector<leveled_component> components;
    std::optional<abelian_ideal> abelian;
};

// c = sum over simple components of k d_g / (k + g^vee), plus dim of the
// abelian ideal if present
rat sugawara_c(const leveled_algebra& la);

// c(ambient) - c(sub); the sub levels must already be the induced ones
rat coset_c(const leveled_algebra& ambient, const leveled_algebra& sub);

// c(m) = 1 - 6/((m+2)(m+3)); m = 0 gives the degenerate c = 0
rat discrete_series_c(long m);
std::optional<long> is_discrete_c(const rat& c);

// One summand of the ambient adjoint restricted to the embedded subalgebra:
// a tuple of highest weights, one per sub ideal, with multiplicity. inside
// marks the copies spanning the embedded subalgebra itself.
struct branch_component {
    std::vector<std::vector<long>> labels;
    long mult = 1;
    bool inside = false;
};

struct adjoint_branching {
    std::vector<branch_component> components;
};

struct embedding_spec {
    std::string name;
    leveled_algebra ambient;
    std::vector<algebra> sub;
    // maps ambient Dynkin labels to concatenated sub Dynkin labels;
    // shape (sum of sub ranks) x (total ambient rank)
    std::optional<ratmat> projection;
    std::optional<adjoint_branching> declared;
};

long sub_total_rank(const embedding_spec& spec);

// Decompose the ambient adjoint under the embedding by projecting the weight
// multiset and peeling highest components (largest Casimir first, lex on
// ties). Uses the declared branching when no projection is given; when both
// are present they must agree. Components come back sorted (inside first,
// then descending Casimir, then labels) with the inside copies flagged.
adjoint_branching branch_adjoint(const embedding_spec& spec);

// I_alpha = sum over components of mult * prod(dim of the other ideals) *
// T_alpha(lambda_alpha) / (2 g^vee of the ambient factor), summed per
// ambient factor weighted by its level to give the induced level.
rat embedding_index(const embedding_spec& spec, const adjoint_branching& br, std::size_t alpha);

struct spectrum_entry {
    branch_component component;
    rat eigenvalue; // weighted-Casimir eigenvalue, in [0, 1]
};

struct inclusion_report {
    std::vector<rat> indices;         // I_alpha per sub ideal
    std::vector<long> induced_levels; // I_alpha * ambient level, integral
    rat coset_central_charge;
    std::vector<spectrum_entry> spectrum;
    bool conformal = false;
    std::string route; // "casimir-saturation" or "central-charge"
    std::vector<branch_component> covariant_colors; // eigenvalue 1
    std::vector<branch_component> coset_colors;     // eigenvalue 0, outside
    std::vector<branch_component> mixed_colors;     // strictly between
};

// Assemble the verdict from precomputed indices. Raises inconsistency_error
// when an eigenvalue leaves [0,1], when a conformal verdict coexists with an
// ambient level >= 2 and a nonempty complement (level-one necessity), or
// when saturation and a zero coset charge disagree on a simple ambient.
inclusion_report assemble_report(const embedding_spec& spec, const adjoint_branching& br,
                                 const std::vector<rat>& indices);

inclusion_report classify_inclusion(const embedding_spec& spec);

} // namespace coset
