#include "coset/characters.hpp"

#include "coset/errors.hpp"
#include "coset/modealg.hpp"

#include <algorithm>
#include <sstream>

namespace coset {

namespace {

void add_z(zpoly& p, long w, const mpz_class& c) {
    if (c == 0) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

// numerator/denominator grades of the Weyl-Kac quotient: the translation
// orbit sum_{n in Z} q^{kappa n^2 + ell n} (z^{2 kappa n + ell} - z^{-...})
std::vector<zpoly> theta_grades(long kappa, long ell, long cap) {
    std::vector<zpoly> out(cap + 1);
    for (long n = -(cap + 2);; ++n) {
        long g = kappa * n * n + ell * n;
        if (n > 0 && g > cap) break;
        if (g >= 0 && g <= cap) {
            long w = 2 * kappa * n + ell;
            add_z(out[g], w, 1);
            add_z(out[g], -w, -1);
        }
        if (n > cap + 2) break;
    }
    return out;
}

zpoly z_mul(const zpoly& a, const zpoly& b) {
    zpoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) add_z(out, wa + wb, ca * cb);
    return out;
}

// divide an antisymmetric Laurent polynomial by z - z^{-1}; the quotient is
// symmetric and is rebuilt from the top weight downward
zpoly divide_antisymmetric(const zpoly& a) {
    for (const auto& [w, c] : a)
        if (c != 0) {
            auto it = a.find(-w);
            if (it == a.end() || it->second != -c)
                throw inconsistency_error("character numerator lost antisymmetry");
        }
    zpoly b;
    if (a.empty()) return b;
    long top = a.rbegin()->first;
    if (top <= 0) return b;
    // b[w-1] = a[w] + b[w+1], scanning w downward with a two-step lag
    mpz_class b_next = 0, b_prev = 0; // b[w], b[w+1] for the current w
    for (long w = top; w >= 1; --w) {
        auto it = a.find(w);
        mpz_class bw = b_prev + (it == a.end() ? mpz_class(0) : it->second);
        b_prev = b_next;
        b_next = bw;
        if (bw != 0) {
            add_z(b, w - 1, bw);
            if (w - 1 > 0) add_z(b, -(w - 1), bw);
        }
    }
    return b;
}

zpoly spin_string(long l) {
    zpoly p;
    for (long w = -l; w <= l; w += 2) add_z(p, w, 1);
    return p;
}

} // namespace

rat affine_su2_h(long k, long l) { return rat(l) * rat(l + 2) / rat(4 * (k + 2)); }

rat affine_su2_c(long k) { return rat(3 * k) / rat(k + 2); }

affine_character affine_su2_character(long k, long l, long cap) {
    if (k < 1) throw inconsistency_error("affine level must be a positive integer");
    if (l < 0 || l > k) throw inconsistency_error("affine label outside the level alcove");
    if (cap < 0 || cap > 10) throw inconsistency_error("character grade cap out of range");
    affine_character ch;
    ch.k = k;
    ch.l = l;
    ch.offset = affine_su2_h(k, l);
    ch.grades.resize(cap + 1);
    std::vector<zpoly> num = theta_grades(k + 2, l + 1, cap);
    std::vector<zpoly> den = theta_grades(2, 1, cap);
    for (long g = 0; g <= cap; ++g) {
        zpoly rhs = num[g];
        for (long j = 0; j < g; ++j) {
            zpoly conv = z_mul(ch.grades[j], den[g - j]);
            for (const auto& [w, c] : conv) add_z(rhs, w, -c);
        }
        ch.grades[g] = divide_antisymmetric(rhs);
    }
    if (ch.grades[0] != spin_string(l))
        throw inconsistency_error("character top level disagrees with the spin string");
    return ch;
}

std::vector<mpz_class> character_dims(const affine_character& ch) {
    std::vector<mpz_class> out;
    for (const zpoly& p : ch.grades) {
        mpz_class s = 0;
        for (const auto& [w, c] : p) s += c;
        out.push_back(s);
    }
    return out;
}

mpz_class character_coeff(const affine_character& ch, long grade, long weight) {
    if (grade < 0 || grade >= static_cast<long>(ch.grades.size()))
        throw inconsistency_error("character grade out of range");
    auto it = ch.grades[grade].find(weight);
    return it == ch.grades[grade].end() ? mpz_class(0) : it->second;
}

product_character character_product(const affine_character& a, const affine_character& b) {
    product_character prod;
    prod.k = a.k + b.k;
    prod.offset = a.offset + b.offset;
    long cap = static_cast<long>(std::min(a.grades.size(), b.grades.size())) - 1;
    prod.grades.resize(cap + 1);
    for (long g = 0; g <= cap; ++g)
        for (long j = 0; j <= g; ++j) {
            zpoly conv = z_mul(a.grades[j], b.grades[g - j]);
            for (const auto& [w, c] : conv) add_z(prod.grades[g], w, c);
        }
    return prod;
}

std::vector<branch_series> branching_functions(const product_character& prod, long cap) {
    long k12 = prod.k;
    cap = std::min<long>(cap, static_cast<long>(prod.grades.size()) - 1);
    std::vector<affine_character> targets;
    for (long t = 0; t <= k12; ++t) targets.push_back(affine_su2_character(k12, t, cap));

    // residue indexed by absolute exponent offset + n
    std::vector<zpoly> res(prod.grades.begin(), prod.grades.begin() + cap + 1);
    std::map<long, std::map<rat, mpz_class>> found;
    for (long n = 0; n <= cap; ++n) {
        while (!res[n].empty()) {
            long top = res[n].rbegin()->first;
            if (top < 0) throw inconsistency_error("branching residue lost z-symmetry");
            if (top > k12) throw inconsistency_error("branching residue exceeds the alcove");
            mpz_class beta = res[n].rbegin()->second;
            if (beta < 0) throw inconsistency_error("negative branching coefficient");
            const affine_character& chi = targets[top];
            rat x = prod.offset + rat(n) - chi.offset;
            found[top][x] += beta;
            for (long g = 0; n + g <= cap; ++g)
                for (const auto& [w, c] : chi.grades[g]) add_z(res[n + g], w, -c * beta);
        }
    }
    std::vector<branch_series> out;
    for (const auto& [target, terms] : found) {
        branch_series bs;
        bs.target = target;
        bs.lead = terms.begin()->first;
        rat span = prod.offset + rat(cap) - targets[target].offset - bs.lead;
        if (!is_integer(span)) throw inconsistency_error("branching exponents left the lattice");
        bs.coeffs.assign(to_long(span) + 1, 0);
        for (const auto& [x, c] : terms) {
            rat step = x - bs.lead;
            if (!is_integer(step)) throw inconsistency_error("branching exponents left the lattice");
            bs.coeffs[to_long(step)] = c;
        }
        out.push_back(std::move(bs));
    }
    return out;
}

branching_report verify_branching(const branching_claim& claim, long cap) {
    if (cap < 1 || cap > 6) throw inconsistency_error("branching verification cap out of range");
    branching_report rep;
    rep.coset_c =
        affine_su2_c(claim.k1) + affine_su2_c(claim.k2) - affine_su2_c(claim.k1 + claim.k2);
    affine_character a = affine_su2_character(claim.k1, claim.l1, cap);
    affine_character b = affine_su2_character(claim.k2, claim.l2, cap);
    product_character prod = character_product(a, b);
    std::vector<branch_series> peeled = branching_functions(prod, cap);

    rep.pass = true;
    std::vector<bool> matched(peeled.size(), false);
    for (const branch_row_claim& row : claim.rows) {
        branch_row_report rr;
        rr.target = row.target;
        const branch_series* bs = nullptr;
        for (std::size_t i = 0; i < peeled.size(); ++i)
            if (peeled[i].target == row.target) {
                bs = &peeled[i];
                matched[i] = true;
            }
        if (!bs) {
            rr.pass = false;
            rr.note = "target absent from the product";
            rep.pass = false;
            rep.rows.push_back(rr);
            continue;
        }
        // expected series: sum of Virasoro irreducible characters at coset_c
        std::map<rat, mpz_class> expected;
        rat horizon = bs->lead + rat(static_cast<long>(bs->coeffs.size()) - 1);
        for (const auto& [h, mult] : row.coset) {
            if (mult <= 0) throw inconsistency_error("claim multiplicities must be positive");
            rat reach = horizon - h;
            if (reach < 0) continue;
            std::vector<long> dims = virasoro_irrep_dims(rep.coset_c, h, to_long(rat_floor(reach)));
            for (std::size_t n = 0; n < dims.size(); ++n)
                if (dims[n] != 0) expected[h + rat(static_cast<long>(n))] += mult * dims[n];
        }
        rr.pass = true;
        for (std::size_t n = 0; n < bs->coeffs.size(); ++n) {
            rat x = bs->lead + rat(static_cast<long>(n));
            auto it = expected.find(x);
            mpz_class want = it == expected.end() ? mpz_class(0) : it->second;
            if (bs->coeffs[n] != want) {
                rr.pass = false;
                rr.first_fail_grade = static_cast<long>(n);
                std::ostringstream os;
                os << "coefficient at exponent " << rat_str(x) << " is " << bs->coeffs[n]
                   << ", claim gives " << want;
                rr.note = os.str();
                break;
            }
        }
        for (const auto& [x, c] : expected)
            if (rr.pass && (x < bs->lead || x > horizon) && c != 0) {
                rr.pass = false;
                rr.note = "claimed content starts outside the peeled series";
            }
        if (!rr.pass) rep.pass = false;
        rep.rows.push_back(rr);
    }
    for (std::size_t i = 0; i < peeled.size(); ++i) {
        if (matched[i]) continue;
        branch_row_report rr;
        rr.target = peeled[i].target;
        rr.pass = false;
        rr.note = "peeled target missing from the claim";
        rep.pass = false;
        rep.rows.push_back(rr);
    }
    return rep;
}

} // namespace coset
