#include "coset/fusion.hpp"

#include "coset/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace coset {

namespace {

const double pi = 3.14159265358979323846;

void require_minimal_m(long m) {
    if (m < 1) throw parse_error("minimal-model index m must be >= 1");
}

std::string bundle_key(const std::vector<sector_entry>& side) {
    std::vector<std::string> parts;
    for (const sector_entry& e : side) {
        std::ostringstream os;
        os << e.label << "#" << rat_str(e.h) << "#" << e.mult;
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const std::string& p : parts) out += p + ";";
    return out;
}

double bundle_dim(const std::vector<sector_entry>& side) {
    double s = 0;
    for (const sector_entry& e : side) s += e.mult * e.d;
    return s;
}

} // namespace

rat minimal_c(long m) {
    require_minimal_m(m);
    return rat(1) - rat(6) / (rat(m + 2) * rat(m + 3));
}

rat kac_h(long m, const kac_label& a) {
    require_minimal_m(m);
    rat num = rat((m + 3) * a.r - (m + 2) * a.s);
    return (num * num - 1) / (rat(4) * rat(m + 2) * rat(m + 3));
}

double kac_d(long m, const kac_label& a) {
    require_minimal_m(m);
    double p = m + 2, q = m + 3;
    return std::sin(a.r * pi / p) * std::sin(a.s * pi / q) /
           (std::sin(pi / p) * std::sin(pi / q));
}

bool kac_valid(long m, const kac_label& a) {
    return a.r >= 1 && a.r <= m + 1 && a.s >= 1 && a.s <= m + 2;
}

kac_label kac_canonical(long m, const kac_label& a) {
    require_minimal_m(m);
    if (!kac_valid(m, a)) throw parse_error("Kac label outside the (r,s) grid");
    if (a.s <= a.r) return a;
    return {m + 2 - a.r, m + 3 - a.s};
}

bool kac_equal(long m, const kac_label& a, const kac_label& b) {
    return kac_canonical(m, a) == kac_canonical(m, b);
}

std::vector<minimal_sector> minimal_model_table(long m) {
    require_minimal_m(m);
    std::vector<minimal_sector> out;
    for (long r = 1; r <= m + 1; ++r)
        for (long s = 1; s <= r; ++s)
            out.push_back({{r, s}, kac_h(m, {r, s}), kac_d(m, {r, s})});
    return out;
}

std::vector<kac_label> fuse_minimal(long m, const kac_label& a, const kac_label& b) {
    require_minimal_m(m);
    if (kac_canonical(m, a) != a || kac_canonical(m, b) != b)
        throw parse_error("fusion needs canonical Kac labels");
    long rmax = std::min(a.r + b.r - 1, 2 * (m + 2) - a.r - b.r - 1);
    long smax = std::min(a.s + b.s - 1, 2 * (m + 3) - a.s - b.s - 1);
    std::vector<kac_label> out;
    for (long r = std::labs(a.r - b.r) + 1; r <= rmax; r += 2)
        for (long s = std::labs(a.s - b.s) + 1; s <= smax; s += 2)
            out.push_back(kac_canonical(m, {r, s}));
    std::sort(out.begin(), out.end(),
              [](const kac_label& x, const kac_label& y) { return std::tie(x.r, x.s) < std::tie(y.r, y.s); });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw inconsistency_error("minimal fusion produced a duplicate");
    return out;
}

rat su2_h(long k, long l) {
    if (l < 0 || l > k) throw parse_error("su(2) label outside the level alcove");
    return rat(l) * rat(l + 2) / rat(4 * (k + 2));
}

double su2_d(long k, long l) {
    if (l < 0 || l > k) throw parse_error("su(2) label outside the level alcove");
    return std::sin((l + 1) * pi / (k + 2)) / std::sin(pi / (k + 2));
}

std::vector<long> fuse_su2(long k, long a, long b) {
    if (a < 0 || a > k || b < 0 || b > k) throw parse_error("su(2) label outside the level alcove");
    std::vector<long> out;
    for (long l = std::labs(a - b); l <= std::min(a + b, 2 * k - a - b); l += 2) out.push_back(l);
    return out;
}

double mu_index(const std::vector<double>& dims) {
    double mu = 0;
    for (double d : dims) {
        if (d < 1 - 1e-9) throw inconsistency_error("statistical dimension below 1");
        mu += d * d;
    }
    return mu;
}

double su2_mu_closed(long k) {
    double s = std::sin(pi / (k + 2));
    return (k + 2) / (2 * s * s);
}

double mu_ambient_from_index(double mu_sub, double index) { return mu_sub / (index * index); }

double index_from_mu(double mu_sub, double mu_ambient) { return std::sqrt(mu_sub / mu_ambient); }

double tensor_index(double index_a, double index_c) { return index_a * index_c; }

coupling_result coupling_solve(const std::vector<table_row>& rows, double tol) {
    std::size_t n = rows.size();
    std::size_t vac = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].vacuum) continue;
        if (vac != n) throw parse_error("more than one vacuum row");
        vac = i;
    }
    if (vac == n) throw parse_error("no vacuum row flagged");

    coupling_result res;
    res.index_a = bundle_dim(rows[vac].a_side);
    res.index_c = bundle_dim(rows[vac].c_side);
    if (res.index_a < 1 - 1e-9 || res.index_c < 1 - 1e-9)
        throw inconsistency_error("extension index below 1");

    const double root2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i) {
        double da = bundle_dim(rows[i].a_side) / res.index_a;
        double dc = bundle_dim(rows[i].c_side) / res.index_c;
        // a statistical dimension below sqrt(2) can only be 1
        if (da < root2) {
            if (std::fabs(da - 1) > 10 * tol) {
                std::ostringstream os;
                os << "row " << i << ": A dim " << da << " snapped to 1";
                res.notes.push_back(os.str());
            }
            da = 1;
        }
        if (dc < root2) {
            if (std::fabs(dc - 1) > 10 * tol) {
                std::ostringstream os;
                os << "row " << i << ": C dim " << dc << " snapped to 1";
                res.notes.push_back(os.str());
            }
            dc = 1;
        }
        res.ext_a.push_back(da);
        res.ext_c.push_back(dc);
    }

    auto admissible = [&](std::size_t u, std::size_t v) {
        return std::fabs(res.ext_a[u] - res.ext_c[v]) <= tol;
    };

    // enumerate dimension-matching permutations, collapsing pairings whose
    // row contents are identical
    std::vector<std::size_t> match(n, n);
    std::vector<bool> used(n, false);
    std::set<std::string> contents;
    const std::size_t enum_cap = 2000;
    bool overflow = false;
    std::vector<std::string> akey(n), ckey(n);
    for (std::size_t i = 0; i < n; ++i) {
        akey[i] = bundle_key(rows[i].a_side);
        ckey[i] = bundle_key(rows[i].c_side);
    }
    auto emit = [&]() {
        std::vector<coupling_pair> perm;
        std::vector<std::string> pairkeys;
        for (std::size_t u = 0; u < n; ++u) {
            perm.push_back({u, match[u], res.ext_a[u], res.ext_c[match[u]]});
            pairkeys.push_back(akey[u] + "|" + ckey[match[u]]);
        }
        std::sort(pairkeys.begin(), pairkeys.end());
        std::string key;
        for (const std::string& p : pairkeys) key += p + "\n";
        if (contents.insert(key).second) res.alternatives.push_back(std::move(perm));
    };
    auto dfs = [&](auto&& self, std::size_t u) -> void {
        if (res.alternatives.size() >= enum_cap) {
            overflow = true;
            return;
        }
        if (u == n) {
            emit();
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || !admissible(u, v)) continue;
            used[v] = true;
            match[u] = v;
            self(self, u + 1);
            used[v] = false;
        }
    };
    dfs(dfs, 0);

    res.resolved = !res.alternatives.empty();
    if (!res.resolved) {
        for (std::size_t u = 0; u < n; ++u) {
            bool any = false;
            for (std::size_t v = 0; v < n; ++v) any = any || admissible(u, v);
            if (!any) {
                std::ostringstream os;
                os << "row " << u << ": A dim " << res.ext_a[u] << " matches no C dim";
                res.notes.push_back(os.str());
            }
        }
        return res;
    }
    res.pairs = res.alternatives.front();
    res.unique = res.alternatives.size() == 1 && !overflow;
    if (overflow) res.notes.push_back("pairing enumeration truncated");

    bool vac_ok = std::fabs(res.ext_a[vac] - 1) <= tol && std::fabs(res.ext_c[vac] - 1) <= tol;
    bool vac_unique = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == vac) continue;
        if (admissible(i, vac) || admissible(vac, i)) vac_unique = false;
    }
    res.normal = vac_ok && vac_unique;
    if (!res.normal) res.notes.push_back("vacuum coupling is not the unique delta pattern");
    return res;
}

sharp_report sharp_action_test(const std::vector<rat>& hs) {
    sharp_report rep;
    for (const rat& h : hs)
        if (h < 0 || !is_integer(rat(2) * h)) rep.offenders.push_back(h);
    rep.sharp = rep.offenders.empty();
    return rep;
}

} // namespace coset
