#include "coset/liealg.hpp"

#include "coset/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

namespace coset {

namespace {

std::vector<long> to_longs(const ratvec& v) {
    std::vector<long> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_long(v[i]);
    return out;
}

ratmat cartan_matrix(char series, int rank) {
    auto chain = [&](ratmat& a) {
        for (int i = 0; i + 1 < rank; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    ratmat a(rank, ratvec(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    switch (series) {
    case 'A':
        if (rank < 1) throw parse_error("A series needs rank >= 1");
        chain(a);
        break;
    case 'B':
        if (rank < 2) throw parse_error("B series needs rank >= 2");
        chain(a);
        a[rank - 2][rank - 1] = -2;
        break;
    case 'C':
        if (rank < 2) throw parse_error("C series needs rank >= 2");
        chain(a);
        a[rank - 1][rank - 2] = -2;
        break;
    case 'D':
        if (rank < 3) throw parse_error("D series needs rank >= 3");
        for (int i = 0; i + 2 < rank; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
        a[rank - 3][rank - 1] = -1;
        a[rank - 1][rank - 3] = -1;
        break;
    case 'E': {
        if (rank < 6 || rank > 8) throw parse_error("E series needs rank 6..8");
        // node 2 hangs off node 4; the rest form the chain 1-3-4-5-...-rank
        std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
        for (int i = 5; i < rank; ++i) edges.push_back({i, i + 1});
        for (auto [i, j] : edges) {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        }
        break;
    }
    case 'F':
        if (rank != 4) throw parse_error("F series needs rank 4");
        chain(a);
        a[1][2] = -2;
        a[2][1] = -1;
        break;
    case 'G':
        if (rank != 2) throw parse_error("G series needs rank 2");
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    default:
        throw parse_error(std::string("unknown series '") + series + "'");
    }
    return a;
}

long dual_coxeter_number(char series, int rank) {
    switch (series) {
    case 'A': return rank + 1;
    case 'B': return 2 * rank - 1;
    case 'C': return rank + 1;
    case 'D': return 2 * rank - 2;
    case 'E': return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case 'F': return 9;
    case 'G': return 4;
    }
    throw parse_error("unknown series");
}

} // namespace

std::string algebra::name() const { return std::string(1, series) + std::to_string(rank); }

algebra make_algebra(char series, int rank) {
    algebra g;
    g.series = series;
    g.rank = rank;
    g.cartan = cartan_matrix(series, rank);

    // half_length d_i from the symmetry d_i <alpha_i, alpha_j^vee> = d_j <alpha_j, alpha_i^vee>
    g.half_length.assign(rank, 0);
    g.half_length[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (g.cartan[i][j] == 0 || g.half_length[i] == 0 || g.half_length[j] != 0) continue;
                g.half_length[j] = g.half_length[i] * g.cartan[j][i] / g.cartan[i][j];
                changed = true;
            }
    }
    rat dmax = g.half_length[0];
    for (const rat& d : g.half_length) dmax = std::max(dmax, d);
    for (rat& d : g.half_length) d /= dmax;

    // <Lambda_i, Lambda_j> = d_j (A^{-1})_{ij}
    auto inv = rat_inverse(g.cartan);
    if (!inv) throw inconsistency_error("singular Cartan matrix");
    g.form.assign(rank, ratvec(rank, 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) g.form[i][j] = g.half_length[j] * (*inv)[i][j];

    // all roots by reflection closure of the simple roots; labels(alpha_i) = row i
    std::set<std::vector<long>> roots;
    std::vector<std::vector<long>> frontier;
    for (int i = 0; i < rank; ++i) {
        auto r = to_longs(g.cartan[i]);
        roots.insert(r);
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& r : frontier)
            for (int j = 0; j < rank; ++j) {
                std::vector<long> s(r);
                long coef = r[j];
                for (int t = 0; t < rank; ++t) s[t] -= coef * to_long(g.cartan[j][t]);
                if (roots.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }

    // positive = non-negative coordinates in the simple-root basis
    ratmat cartan_t(rank, ratvec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) cartan_t[i][j] = g.cartan[j][i];
    auto inv_t = rat_inverse(cartan_t);
    std::vector<std::pair<long, std::vector<long>>> pos; // (height, labels)
    for (const auto& r : roots) {
        ratvec labels(rank);
        for (int i = 0; i < rank; ++i) labels[i] = r[i];
        ratvec coords = mat_apply(*inv_t, labels);
        bool nonneg = true;
        rat height = 0;
        for (const rat& c : coords) {
            if (c < 0) nonneg = false;
            height += c;
        }
        if (!nonneg) continue;
        pos.push_back({to_long(height), r});
    }
    std::sort(pos.begin(), pos.end());
    for (auto& [h, r] : pos) {
        ratvec labels(rank);
        for (int i = 0; i < rank; ++i) labels[i] = r[i];
        g.positive_roots.push_back(labels);
    }
    g.highest_root = g.positive_roots.back();
    g.dim = rank + 2 * static_cast<long>(g.positive_roots.size());
    g.dual_coxeter = dual_coxeter_number(series, rank);

    // consistency: the adjoint Casimir must equal 2 g^vee
    if (casimir(g, g.highest_root) != rat(2 * g.dual_coxeter))
        throw inconsistency_error("adjoint Casimir disagrees with the dual Coxeter number for " + g.name());
    return g;
}

algebra parse_algebra(const std::string& name) {
    if (name.size() >= 3 && name.substr(0, 2) == "su") {
        int n = std::stoi(name.substr(2));
        if (n < 2) throw parse_error("su(n) needs n >= 2");
        return make_algebra('A', n - 1);
    }
    if (name.size() < 2) throw parse_error("bad algebra name: " + name);
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int rank;
    try {
        rank = std::stoi(name.substr(1));
    } catch (const std::exception&) {
        throw parse_error("bad algebra name: " + name);
    }
    return make_algebra(s, rank);
}

rat inner(const algebra& g, const ratvec& x, const ratvec& y) {
    if (static_cast<int>(x.size()) != g.rank || static_cast<int>(y.size()) != g.rank)
        throw inconsistency_error("weight has wrong rank for " + g.name());
    rat out = 0;
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j) out += x[i] * g.form[i][j] * y[j];
    return out;
}

rat casimir(const algebra& g, const ratvec& lambda) {
    ratvec shifted(lambda);
    for (rat& c : shifted) c += 2; // lambda + 2 rho
    return inner(g, lambda, shifted);
}

mpz_class weyl_dim(const algebra& g, const ratvec& lambda) {
    ratvec rho(g.rank, 1), lr(lambda);
    for (rat& c : lr) c += 1;
    rat prod = 1;
    for (const ratvec& alpha : g.positive_roots) prod *= inner(g, lr, alpha) / inner(g, rho, alpha);
    if (!is_integer(prod)) throw inconsistency_error("non-integral Weyl dimension");
    return prod.get_num();
}

rat rep_dynkin_index(const algebra& g, const ratvec& lambda) {
    return rat(weyl_dim(g, lambda)) * casimir(g, lambda) / g.dim;
}

std::vector<weight_mult> weight_system(const algebra& g, const ratvec& lambda, long dim_cap) {
    for (const rat& c : lambda)
        if (!is_integer(c) || c < 0) throw inconsistency_error("highest weight must be dominant integral");
    mpz_class dim = weyl_dim(g, lambda);
    if (dim > dim_cap)
        throw inconsistency_error("representation of dimension " + dim.get_str() + " exceeds the cap");

    rat top_norm = casimir(g, lambda); // <lambda+rho,lambda+rho> - <rho,rho>
    std::map<std::vector<long>, long> mult;
    std::vector<std::vector<long>> roots;
    for (const auto& a : g.positive_roots) roots.push_back(to_longs(a));
    std::vector<long> top = to_longs(lambda);
    mult[top] = 1;

    std::vector<std::vector<long>> frontier = {top};
    while (!frontier.empty()) {
        std::set<std::vector<long>> candidates;
        for (const auto& mu : frontier)
            for (int i = 0; i < g.rank; ++i) {
                std::vector<long> nu(mu);
                for (int t = 0; t < g.rank; ++t) nu[t] -= to_long(g.cartan[i][t]);
                if (!mult.count(nu)) candidates.insert(std::move(nu));
            }
        frontier.clear();
        for (const auto& mu : candidates) {
            ratvec muv(g.rank);
            for (int i = 0; i < g.rank; ++i) muv[i] = mu[i];
            rat denom = top_norm - casimir(g, muv);
            // denom = <lambda+rho,lambda+rho> - <mu+rho,mu+rho> vanishes only on
            // the shifted Weyl orbit of lambda, whose other points are not weights
            if (denom == 0) continue;
            rat num = 0;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                for (long j = 1;; ++j) {
                    std::vector<long> up(mu);
                    for (int t = 0; t < g.rank; ++t) up[t] += j * roots[r][t];
                    auto it = mult.find(up);
                    if (it == mult.end()) break; // weight strings are unbroken
                    ratvec upv(g.rank);
                    for (int t = 0; t < g.rank; ++t) upv[t] = up[t];
                    num += 2 * it->second * inner(g, upv, g.positive_roots[r]);
                }
            }
            rat m = num / denom;
            if (!is_integer(m) || m < 0) throw inconsistency_error("Freudenthal recursion broke down");
            long mm = to_long(m);
            if (mm > 0) {
                mult[mu] = mm;
                frontier.push_back(mu);
            }
        }
    }

    std::vector<weight_mult> out;
    long total = 0;
    for (const auto& [w, m] : mult) {
        ratvec wv(g.rank);
        for (int i = 0; i < g.rank; ++i) wv[i] = w[i];
        out.push_back({wv, m});
        total += m;
    }
    if (mpz_class(total) != dim) throw inconsistency_error("weight multiplicities do not sum to the dimension");
    return out;
}

std::vector<weight_mult> adjoint_weights(const algebra& g) {
    std::vector<weight_mult> out;
    for (const auto& a : g.positive_roots) {
        out.push_back({a, 1});
        ratvec neg(a);
        for (rat& c : neg) c = -c;
        out.push_back({neg, 1});
    }
    out.push_back({ratvec(g.rank, 0), g.rank});
    return out;
}

std::vector<std::vector<long>> alcove_sectors(int n, int level) {
    if (n < 2) throw parse_error("alcove enumeration needs su(n), n >= 2");
    int rank = n - 1;
    std::vector<std::vector<long>> out;
    std::vector<long> cur(rank, 0);
    // lexicographic enumeration of labels with sum <= level
    auto rec = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == rank) {
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, level);
    return out;
}

ratvec labels_to_ratvec(const std::vector<long>& labels) {
    ratvec v(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) v[i] = labels[i];
    return v;
}

sector sector_data(const algebra& g, int level, const std::vector<long>& labels) {
    if (static_cast<int>(labels.size()) != g.rank) throw parse_error("label count != rank");
    ratvec lv = labels_to_ratvec(labels);
    for (long l : labels)
        if (l < 0) throw inconsistency_error("sector labels must be non-negative");
    rat theta_pairing = 2 * inner(g, lv, g.highest_root) / inner(g, g.highest_root, g.highest_root);
    if (theta_pairing > level)
        throw inconsistency_error("labels outside the level-" + std::to_string(level) + " alcove");

    sector s;
    s.labels = labels;
    long shift = level + g.dual_coxeter;
    s.h = casimir(g, lv) / rat(2 * shift);

    ratvec rho(g.rank, 1), lr(lv);
    for (rat& c : lr) c += 1;
    double d = 1;
    for (const auto& alpha : g.positive_roots) {
        double num = inner(g, lr, alpha).get_d();
        double den = inner(g, rho, alpha).get_d();
        d *= std::sin(M_PI * num / shift) / std::sin(M_PI * den / shift);
    }
    s.d = d;
    return s;
}

} // namespace coset
