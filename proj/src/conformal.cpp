#include "coset/conformal.hpp"

#include "coset/errors.hpp"

#include <algorithm>
#include <map>

namespace coset {

namespace {

rat simple_c(const algebra& g, long k) {
    if (k < 1) throw parse_error("levels must be >= 1");
    return rat(k * g.dim) / rat(k + g.dual_coxeter);
}

std::vector<std::vector<long>> split_tuple(const std::vector<algebra>& sub, const std::vector<long>& flat) {
    std::vector<std::vector<long>> out;
    std::size_t at = 0;
    for (const algebra& h : sub) {
        out.push_back(std::vector<long>(flat.begin() + at, flat.begin() + at + h.rank));
        at += h.rank;
    }
    return out;
}

rat tuple_casimir(const std::vector<algebra>& sub, const std::vector<std::vector<long>>& labels) {
    rat c = 0;
    for (std::size_t a = 0; a < sub.size(); ++a) c += casimir(sub[a], labels_to_ratvec(labels[a]));
    return c;
}

mpz_class tuple_dim(const std::vector<algebra>& sub, const std::vector<std::vector<long>>& labels) {
    mpz_class d = 1;
    for (std::size_t a = 0; a < sub.size(); ++a) d *= weyl_dim(sub[a], labels_to_ratvec(labels[a]));
    return d;
}

// peel a projected weight multiset (keys are concatenated sub labels) into
// irreducible components, largest Casimir first
std::vector<branch_component> peel_components(const std::vector<algebra>& sub,
                                              std::map<std::vector<long>, long> multiset) {
    std::vector<branch_component> out;
    while (!multiset.empty()) {
        bool found = false;
        std::vector<long> best;
        rat best_cas = 0;
        for (const auto& [w, m] : multiset) {
            if (m == 0) continue;
            if (std::any_of(w.begin(), w.end(), [](long x) { return x < 0; })) continue;
            rat cas = tuple_casimir(sub, split_tuple(sub, w));
            if (!found || cas > best_cas || (cas == best_cas && w > best)) {
                found = true;
                best = w;
                best_cas = cas;
            }
        }
        if (!found) throw inconsistency_error("projected weights admit no dominant leading term");
        long mult = multiset[best];
        auto labels = split_tuple(sub, best);

        // subtract mult copies of the product weight system
        std::vector<std::vector<weight_mult>> systems;
        for (std::size_t a = 0; a < sub.size(); ++a)
            systems.push_back(weight_system(sub[a], labels_to_ratvec(labels[a])));
        std::vector<std::size_t> idx(sub.size(), 0);
        for (;;) {
            std::vector<long> w;
            long m = mult;
            for (std::size_t a = 0; a < sub.size(); ++a) {
                const weight_mult& wm = systems[a][idx[a]];
                for (const rat& c : wm.weight) w.push_back(to_long(c));
                m *= wm.mult;
            }
            auto it = multiset.find(w);
            if (it == multiset.end() || it->second < m)
                throw inconsistency_error("projected weights do not decompose; bad projection data");
            it->second -= m;
            if (it->second == 0) multiset.erase(it);
            std::size_t a = 0;
            for (; a < sub.size(); ++a) {
                if (++idx[a] < systems[a].size()) break;
                idx[a] = 0;
            }
            if (a == sub.size()) break;
        }
        out.push_back({labels, mult, false});
    }
    return out;
}

std::vector<std::vector<long>> adjoint_tuple(const std::vector<algebra>& sub, std::size_t alpha) {
    std::vector<std::vector<long>> t;
    for (std::size_t a = 0; a < sub.size(); ++a) {
        std::vector<long> l(sub[a].rank, 0);
        if (a == alpha)
            for (int i = 0; i < sub[a].rank; ++i) l[i] = to_long(sub[a].highest_root[i]);
        t.push_back(l);
    }
    return t;
}

void sort_components(std::vector<branch_component>& comps, const std::vector<algebra>& sub) {
    std::stable_sort(comps.begin(), comps.end(), [&](const branch_component& x, const branch_component& y) {
        if (x.inside != y.inside) return x.inside;
        rat cx = tuple_casimir(sub, x.labels), cy = tuple_casimir(sub, y.labels);
        if (cx != cy) return cx > cy;
        return x.labels < y.labels;
    });
}

// decompose one ambient factor's adjoint under the projection
std::vector<branch_component> branch_one_factor(const embedding_spec& spec, std::size_t factor) {
    const ratmat& p = *spec.projection;
    long total_rank = 0, offset = 0;
    for (std::size_t i = 0; i < spec.ambient.components.size(); ++i) {
        if (i < factor) offset += spec.ambient.components[i].alg.rank;
        total_rank += spec.ambient.components[i].alg.rank;
    }
    const algebra& g = spec.ambient.components[factor].alg;
    std::map<std::vector<long>, long> multiset;
    for (const weight_mult& wm : adjoint_weights(g)) {
        ratvec full(total_rank, 0);
        for (int i = 0; i < g.rank; ++i) full[offset + i] = wm.weight[i];
        ratvec proj = mat_apply(p, full);
        std::vector<long> key;
        for (const rat& c : proj) {
            if (!is_integer(c)) throw inconsistency_error("projection leaves the sub weight lattice");
            key.push_back(to_long(c));
        }
        multiset[key] += wm.mult;
    }
    return peel_components(spec.sub, std::move(multiset));
}

std::vector<std::vector<branch_component>> branch_per_factor(const embedding_spec& spec) {
    if (!spec.projection) throw inconsistency_error("per-factor branching requires a projection");
    long sub_rank = sub_total_rank(spec), amb_rank = 0;
    for (const auto& comp : spec.ambient.components) amb_rank += comp.alg.rank;
    const ratmat& p = *spec.projection;
    if (static_cast<long>(p.size()) != sub_rank ||
        (sub_rank && static_cast<long>(p[0].size()) != amb_rank))
        throw parse_error("projection shape must be (sub rank) x (ambient rank)");
    std::vector<std::vector<branch_component>> out;
    for (std::size_t i = 0; i < spec.ambient.components.size(); ++i) out.push_back(branch_one_factor(spec, i));
    return out;
}

std::vector<branch_component> merge_components(const std::vector<std::vector<branch_component>>& per_factor) {
    std::map<std::vector<std::vector<long>>, long> acc;
    for (const auto& list : per_factor)
        for (const auto& c : list) acc[c.labels] += c.mult;
    std::vector<branch_component> out;
    for (const auto& [labels, mult] : acc) out.push_back({labels, mult, false});
    return out;
}

void mark_inside(std::vector<branch_component>& comps, const std::vector<algebra>& sub) {
    for (std::size_t a = 0; a < sub.size(); ++a) {
        auto target = adjoint_tuple(sub, a);
        bool done = false;
        for (auto& c : comps)
            if (!c.inside && c.labels == target && c.mult >= 1) {
                c.mult -= 1;
                comps.push_back({target, 1, true});
                done = true;
                break;
            }
        if (!done) throw inconsistency_error("branching does not contain the embedded adjoint");
    }
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const branch_component& c) { return c.mult == 0; }),
                comps.end());
}

void validate_branching(const embedding_spec& spec, const adjoint_branching& br) {
    long ambient_dim = 0;
    for (const auto& comp : spec.ambient.components) ambient_dim += comp.alg.dim;
    mpz_class total = 0;
    for (const auto& c : br.components) {
        if (c.labels.size() != spec.sub.size()) throw parse_error("branching row has wrong ideal count");
        for (std::size_t a = 0; a < spec.sub.size(); ++a) {
            if (static_cast<int>(c.labels[a].size()) != spec.sub[a].rank)
                throw parse_error("branching row has wrong label count");
            for (long l : c.labels[a])
                if (l < 0) throw parse_error("branching labels must be non-negative");
        }
        if (c.mult < 1) throw parse_error("branching multiplicities must be positive");
        total += c.mult * tuple_dim(spec.sub, c.labels);
    }
    if (total != ambient_dim)
        throw inconsistency_error("branching dimensions sum to " + total.get_str() + ", ambient has " +
                                  std::to_string(ambient_dim));
    for (std::size_t a = 0; a < spec.sub.size(); ++a) {
        auto target = adjoint_tuple(spec.sub, a);
        long inside_copies = 0;
        for (const auto& c : br.components)
            if (c.inside && c.labels == target) inside_copies += c.mult;
        if (inside_copies != 1)
            throw inconsistency_error("each embedded ideal's adjoint must be marked inside exactly once");
    }
}

std::vector<std::vector<rat>> per_factor_indices(const embedding_spec& spec, const adjoint_branching& br) {
    std::size_t nsub = spec.sub.size(), nfac = spec.ambient.components.size();
    std::vector<std::vector<branch_component>> lists;
    if (nfac == 1)
        lists.push_back(br.components);
    else
        lists = branch_per_factor(spec);
    std::vector<std::vector<rat>> idx(nsub, std::vector<rat>(nfac, 0));
    for (std::size_t i = 0; i < nfac; ++i) {
        const algebra& g = spec.ambient.components[i].alg;
        for (std::size_t a = 0; a < nsub; ++a) {
            rat sum = 0;
            for (const auto& c : lists[i]) {
                mpz_class others = 1;
                for (std::size_t b = 0; b < nsub; ++b)
                    if (b != a) others *= weyl_dim(spec.sub[b], labels_to_ratvec(c.labels[b]));
                sum += rat(c.mult) * rat(others) * rep_dynkin_index(spec.sub[a], labels_to_ratvec(c.labels[a]));
            }
            idx[a][i] = sum / rat(2 * g.dual_coxeter);
        }
    }
    return idx;
}

} // namespace

rat sugawara_c(const leveled_algebra& la) {
    rat c = 0;
    for (const auto& comp : la.components) c += simple_c(comp.alg, comp.level);
    if (la.abelian) c += la.abelian->dim;
    return c;
}

rat coset_c(const leveled_algebra& ambient, const leveled_algebra& sub) {
    rat c = sugawara_c(ambient) - sugawara_c(sub);
    if (c < 0) throw inconsistency_error("negative coset central charge; induced levels are wrong");
    return c;
}

rat discrete_series_c(long m) {
    if (m < 0) throw parse_error("discrete series needs m >= 0");
    return 1 - rat(6) / rat((m + 2) * (m + 3));
}

std::optional<long> is_discrete_c(const rat& c) {
    if (c >= 1 || c < 0) return std::nullopt;
    rat t = rat(6) / (1 - c); // (m+2)(m+3)
    if (!is_integer(t)) return std::nullopt;
    mpz_class disc = 1 + 4 * t.get_num();
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return std::nullopt;
    mpz_class s = sqrt(disc);
    mpz_class twice_m = s - 5;
    if (twice_m < 0 || twice_m % 2 != 0) return std::nullopt;
    return to_long(rat(twice_m / 2));
}

long sub_total_rank(const embedding_spec& spec) {
    long r = 0;
    for (const algebra& h : spec.sub) r += h.rank;
    return r;
}

adjoint_branching branch_adjoint(const embedding_spec& spec) {
    if (spec.sub.empty() || spec.ambient.components.empty())
        throw parse_error("embedding needs an ambient algebra and at least one sub ideal");
    if (spec.ambient.abelian)
        throw parse_error("abelian ideals are supported for central charges only");
    if (!spec.projection && !spec.declared)
        throw parse_error("embedding needs a projection or a declared branching");

    adjoint_branching computed;
    if (spec.projection) {
        computed.components = merge_components(branch_per_factor(spec));
        mark_inside(computed.components, spec.sub);
        sort_components(computed.components, spec.sub);
        validate_branching(spec, computed);
    }
    if (spec.declared) {
        adjoint_branching declared = *spec.declared;
        validate_branching(spec, declared);
        sort_components(declared.components, spec.sub);
        if (spec.projection) {
            auto key = [](const adjoint_branching& b) {
                std::vector<std::tuple<std::vector<std::vector<long>>, long, bool>> k;
                for (const auto& c : b.components) k.push_back({c.labels, c.mult, c.inside});
                std::sort(k.begin(), k.end());
                return k;
            };
            if (key(computed) != key(declared))
                throw inconsistency_error("declared branching disagrees with the projection");
        }
        return declared;
    }
    return computed;
}

rat embedding_index(const embedding_spec& spec, const adjoint_branching& br, std::size_t alpha) {
    auto idx = per_factor_indices(spec, br);
    rat total = 0;
    for (const rat& i : idx[alpha]) total += i;
    return total;
}

inclusion_report assemble_report(const embedding_spec& spec, const adjoint_branching& br,
                                 const std::vector<rat>& indices) {
    std::size_t nsub = spec.sub.size();
    if (indices.size() != nsub) throw parse_error("one index per sub ideal required");
    if (spec.ambient.abelian) throw parse_error("abelian ideals are supported for central charges only");

    inclusion_report rep;
    rep.indices = indices;

    // induced level = sum over ambient factors of (per-factor index) * level;
    // with a simple ambient the passed index is used as-is
    std::vector<std::vector<rat>> factor_idx;
    if (spec.ambient.components.size() > 1) factor_idx = per_factor_indices(spec, br);
    for (std::size_t a = 0; a < nsub; ++a) {
        rat n = 0;
        if (factor_idx.empty())
            n = indices[a] * spec.ambient.components[0].level;
        else
            for (std::size_t i = 0; i < spec.ambient.components.size(); ++i)
                n += factor_idx[a][i] * spec.ambient.components[i].level;
        if (!is_integer(n) || n < 1) throw inconsistency_error("induced level is not a positive integer");
        rep.induced_levels.push_back(to_long(n));
    }

    for (const auto& c : br.components) {
        rat eig;
        if (c.inside) {
            eig = 1;
        } else {
            eig = 0;
            for (std::size_t a = 0; a < nsub; ++a)
                eig += casimir(spec.sub[a], labels_to_ratvec(c.labels[a])) /
                       rat(2 * (rep.induced_levels[a] + spec.sub[a].dual_coxeter));
        }
        if (eig > 1) throw inconsistency_error("weighted-Casimir eigenvalue exceeds 1; inconsistent input data");
        rep.spectrum.push_back({c, eig});
    }

    bool saturated = true;
    bool has_complement = false;
    for (const auto& e : rep.spectrum)
        if (!e.component.inside) {
            has_complement = true;
            if (e.eigenvalue != 1) saturated = false;
        }

    leveled_algebra sub_leveled;
    for (std::size_t a = 0; a < nsub; ++a) sub_leveled.components.push_back({spec.sub[a], rep.induced_levels[a]});
    rep.coset_central_charge = coset_c(spec.ambient, sub_leveled);

    long max_level = 0;
    for (const auto& comp : spec.ambient.components) max_level = std::max(max_level, comp.level);

    if (spec.ambient.components.size() == 1) {
        rep.route = "casimir-saturation";
        rep.conformal = saturated;
        if (rep.conformal && max_level >= 2 && has_complement)
            throw inconsistency_error("conformal verdict at ambient level >= 2 contradicts level-one necessity");
        if (saturated != (rep.coset_central_charge == 0))
            throw inconsistency_error("Casimir saturation and the coset central charge disagree");
    } else {
        rep.route = "central-charge";
        rep.conformal = (rep.coset_central_charge == 0);
        if (rep.conformal && max_level >= 2 && has_complement)
            throw inconsistency_error("conformal verdict at ambient level >= 2 contradicts level-one necessity");
    }

    for (const auto& e : rep.spectrum) {
        if (e.eigenvalue == 1)
            rep.covariant_colors.push_back(e.component);
        else if (e.eigenvalue == 0)
            rep.coset_colors.push_back(e.component);
        else
            rep.mixed_colors.push_back(e.component);
    }
    return rep;
}

inclusion_report classify_inclusion(const embedding_spec& spec) {
    adjoint_branching br = branch_adjoint(spec);
    auto idx = per_factor_indices(spec, br);
    std::vector<rat> totals;
    for (const auto& row : idx) {
        rat t = 0;
        for (const rat& i : row) t += i;
        totals.push_back(t);
    }
    return assemble_report(spec, br, totals);
}

} // namespace coset
