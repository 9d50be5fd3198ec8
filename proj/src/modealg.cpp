#include "coset/modealg.hpp"

#include "coset/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coset {

namespace {

int kind_rank(gen g) { return static_cast<int>(g); }

std::pair<long, int> word_key(const mode& x) { return {x.m, kind_rank(x.kind)}; }

mode adjoint_mode(const mode& x) {
    switch (x.kind) {
    case gen::e: return {gen::f, -x.m};
    case gen::f: return {gen::e, -x.m};
    default: return {x.kind, -x.m};
    }
}

long weight_charge(gen g) { return g == gen::e ? 2 : (g == gen::f ? -2 : 0); }

const char* kind_name(gen g) {
    switch (g) {
    case gen::L: return "L";
    case gen::e: return "e";
    case gen::f: return "f";
    case gen::h: return "h";
    default: return "phi";
    }
}

void add_term(state& s, const monomial& m, const rat& c) {
    if (c == 0) return;
    auto it = s.find(m);
    if (it == s.end()) {
        s.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

void add_state(state& s, const state& t, const rat& c) {
    if (c == 0) return;
    for (const auto& [m, a] : t) add_term(s, m, a * c);
}

state scaled(const state& t, const rat& c) {
    state out;
    add_state(out, t, c);
    return out;
}

struct bracket {
    std::vector<std::pair<mode, rat>> modes;
    rat scalar = 0;
};

bracket commutator(const module_params& p, const mode& x, const mode& y) {
    bracket out;
    long s = x.m + y.m;
    switch (p.fam) {
    case module_params::family::virasoro: {
        rat lin = rat(x.m - y.m);
        if (lin != 0) out.modes.push_back({{gen::L, s}, lin});
        if (s == 0) out.scalar = p.c / 12 * rat(x.m) * rat(x.m * x.m - 1);
        return out;
    }
    case module_params::family::phi: {
        if (s == 0) out.scalar = phi_pairing(p.n, x.m);
        return out;
    }
    case module_params::family::affine_su2:
        break;
    }
    auto a = x.kind, b = y.kind;
    if (a == gen::e && b == gen::f) {
        out.modes.push_back({{gen::h, s}, 1});
        if (s == 0) out.scalar = rat(p.k) * rat(x.m);
    } else if (a == gen::f && b == gen::e) {
        out.modes.push_back({{gen::h, s}, -1});
        if (s == 0) out.scalar = -rat(p.k) * rat(y.m);
    } else if (a == gen::h && b == gen::e) {
        out.modes.push_back({{gen::e, s}, 2});
    } else if (a == gen::e && b == gen::h) {
        out.modes.push_back({{gen::e, s}, -2});
    } else if (a == gen::h && b == gen::f) {
        out.modes.push_back({{gen::f, s}, -2});
    } else if (a == gen::f && b == gen::h) {
        out.modes.push_back({{gen::f, s}, 2});
    } else if (a == gen::h && b == gen::h) {
        if (s == 0) out.scalar = rat(2 * p.k) * rat(x.m);
    }
    return out;
}

bool kind_allowed(const module_params& p, gen g) {
    switch (p.fam) {
    case module_params::family::virasoro: return g == gen::L;
    case module_params::family::affine_su2: return g == gen::e || g == gen::f || g == gen::h;
    case module_params::family::phi: return g == gen::phi;
    }
    return false;
}

std::vector<gen> lowering_kinds(module_params::family f) {
    switch (f) {
    case module_params::family::virasoro: return {gen::L};
    case module_params::family::affine_su2: return {gen::e, gen::f, gen::h};
    case module_params::family::phi: return {gen::phi};
    }
    return {};
}

void gen_words(long remaining, std::pair<long, int> min_key, const std::vector<gen>& kinds,
               std::vector<mode>& cur, std::vector<std::vector<mode>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = remaining; part >= 1; --part) {
        for (gen g : kinds) {
            mode x{g, -part};
            if (word_key(x) < min_key) continue;
            cur.push_back(x);
            gen_words(remaining - part, word_key(x), kinds, cur, out);
            cur.pop_back();
        }
    }
}

long monomial_weight(const module_params& p, const monomial& m) {
    long w = 0;
    if (p.fam == module_params::family::affine_su2) w = p.lambda - 2 * m.top;
    for (const mode& x : m.word) w += weight_charge(x.kind);
    return w;
}

graded_module build_module(const module_params& p, long cap, bool with_gram, bool parallel) {
    long max_cap = p.fam == module_params::family::affine_su2 ? 8 : 12;
    if (cap < 0 || cap > max_cap) throw inconsistency_error("module grade cap out of range");
    graded_module mod;
    mod.params = p;
    mod.cap = cap;
    mod.basis.resize(cap + 1);
    mod.blocks.resize(cap + 1);
    auto kinds = lowering_kinds(p.fam);
    long tops = p.fam == module_params::family::affine_su2 ? p.lambda + 1 : 1;
    for (long g = 0; g <= cap; ++g) {
        std::vector<std::vector<mode>> words;
        std::vector<mode> cur;
        gen_words(g, {std::numeric_limits<long>::min(), 0}, kinds, cur, words);
        for (const auto& w : words)
            for (long t = 0; t < tops; ++t) mod.basis[g].push_back({w, t});
        std::map<long, std::vector<std::size_t>, std::greater<long>> by_weight;
        for (std::size_t i = 0; i < mod.basis[g].size(); ++i)
            by_weight[monomial_weight(p, mod.basis[g][i])].push_back(i);
        for (auto& [w, members] : by_weight) {
            weight_block blk;
            blk.weight = w;
            blk.members = std::move(members);
            std::size_t n = blk.members.size();
            blk.gram.assign(n, ratvec(n, rat(0)));
            mod.blocks[g].push_back(std::move(blk));
        }
    }
    if (with_gram) {
        if (parallel)
            fill_gram_parallel(mod);
        else
            fill_gram_serial(mod);
    }
    return mod;
}

struct gram_job {
    long grade;
    std::size_t block, i, j;
};

std::vector<gram_job> gram_jobs(const graded_module& m) {
    std::vector<gram_job> jobs;
    for (long g = 0; g <= m.cap; ++g)
        for (std::size_t b = 0; b < m.blocks[g].size(); ++b) {
            std::size_t n = m.blocks[g][b].members.size();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) jobs.push_back({g, b, i, j});
        }
    return jobs;
}

void run_gram_job(graded_module& m, const gram_job& jb) {
    weight_block& blk = m.blocks[jb.grade][jb.block];
    state si{{m.basis[jb.grade][blk.members[jb.i]], rat(1)}};
    state sj{{m.basis[jb.grade][blk.members[jb.j]], rat(1)}};
    rat v = m.pair(si, sj);
    blk.gram[jb.i][jb.j] = v;
    blk.gram[jb.j][jb.i] = v;
}

rat rat_abs(const rat& x) { return x < 0 ? rat(-x) : x; }

rat max_abs_coeff(const state& s) {
    rat best = 0;
    for (const auto& [m, a] : s) {
        rat v = rat_abs(a);
        if (v > best) best = v;
    }
    return best;
}

} // namespace

long monomial_grade(const monomial& m) {
    long g = 0;
    for (const mode& x : m.word) g -= x.m;
    return g;
}

rat phi_pairing(long n, long m) {
    rat prod = 1;
    for (long k = 0; k <= 2 * n; ++k) prod *= rat(m - n + k);
    return prod;
}

long graded_module::top_dim() const {
    return params.fam == module_params::family::affine_su2 ? params.lambda + 1 : 1;
}

rat graded_module::top_norm(long j) const {
    if (params.fam != module_params::family::affine_su2) return 1;
    rat t = 1;
    for (long i = 1; i <= j; ++i) t *= rat(i) * rat(params.lambda - i + 1);
    return t;
}

rat graded_module::top_h() const {
    switch (params.fam) {
    case module_params::family::virasoro: return params.h;
    case module_params::family::affine_su2:
        return rat(params.lambda) * rat(params.lambda + 2) / rat(4 * (params.k + 2));
    case module_params::family::phi: return 0;
    }
    return 0;
}

state graded_module::apply(const mode& x, const monomial& mono, const rat& coeff) const {
    if (!kind_allowed(params, x.kind)) throw inconsistency_error("mode family mismatch");
    state out;
    if (coeff == 0) return out;
    if (x.m < 0 && (mono.word.empty() || !(word_key(x) > word_key(mono.word.front())))) {
        monomial r = mono;
        r.word.insert(r.word.begin(), x);
        add_term(out, r, coeff);
        return out;
    }
    if (mono.word.empty()) {
        if (x.m > 0) return out;
        switch (params.fam) {
        case module_params::family::virasoro:
            add_term(out, mono, coeff * params.h);
            break;
        case module_params::family::phi:
            add_term(out, mono, coeff * params.q0);
            break;
        case module_params::family::affine_su2: {
            long j = mono.top, lam = params.lambda;
            if (x.kind == gen::h) {
                add_term(out, mono, coeff * rat(lam - 2 * j));
            } else if (x.kind == gen::e) {
                if (j > 0) add_term(out, {mono.word, j - 1}, coeff * rat(j) * rat(lam - j + 1));
            } else {
                if (j < lam) add_term(out, {mono.word, j + 1}, coeff);
            }
            break;
        }
        }
        return out;
    }
    mode y = mono.word.front();
    monomial rest{{mono.word.begin() + 1, mono.word.end()}, mono.top};
    state moved = apply(x, rest, coeff);
    for (const auto& [m2, a] : moved) add_state(out, apply(y, m2, a), 1);
    bracket br = commutator(params, x, y);
    for (const auto& [z, cz] : br.modes) add_state(out, apply(z, rest, coeff * cz), 1);
    if (br.scalar != 0) add_term(out, rest, coeff * br.scalar);
    return out;
}

state graded_module::apply(const mode& x, const state& v) const {
    state out;
    for (const auto& [m, a] : v) add_state(out, apply(x, m, a), 1);
    return out;
}

state graded_module::apply_sugawara(long n, const state& v) const {
    if (params.fam != module_params::family::affine_su2)
        throw inconsistency_error("sugawara modes need the affine family");
    state out;
    if (v.empty()) return out;
    long G = 0;
    for (const auto& [m, a] : v) G = std::max(G, monomial_grade(m));
    const std::pair<gen, gen> terms[3] = {{gen::e, gen::f}, {gen::f, gen::e}, {gen::h, gen::h}};
    for (long j = n - G; j <= G; ++j) {
        for (int t = 0; t < 3; ++t) {
            mode xj{terms[t].first, j}, yr{terms[t].second, n - j};
            state s = (n - j > 0) ? apply(xj, apply(yr, v)) : apply(yr, apply(xj, v));
            add_state(out, s, t == 2 ? rat(1, 2) : rat(1));
        }
    }
    return scaled(out, rat(1) / rat(2 * (params.k + 2)));
}

rat graded_module::pair(const state& x, const state& y) const {
    rat total = 0;
    for (const auto& [m1, a1] : x) {
        state z = y;
        for (const mode& w : m1.word) z = apply(adjoint_mode(w), z);
        auto it = z.find(monomial{{}, m1.top});
        if (it != z.end()) total += a1 * it->second * top_norm(m1.top);
    }
    return total;
}

const weight_block* graded_module::find_block(long grade, long weight) const {
    if (grade < 0 || grade > cap) return nullptr;
    for (const auto& blk : blocks[grade])
        if (blk.weight == weight) return &blk;
    return nullptr;
}

void fill_gram_serial(graded_module& m) {
    for (const gram_job& jb : gram_jobs(m)) run_gram_job(m, jb);
}

void fill_gram_parallel(graded_module& m) {
    std::vector<gram_job> jobs = gram_jobs(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long idx = 0; idx < static_cast<long>(jobs.size()); ++idx) run_gram_job(m, jobs[idx]);
}

graded_module virasoro_module(const rat& c, const rat& h, long cap, bool parallel_gram) {
    module_params p;
    p.fam = module_params::family::virasoro;
    p.c = c;
    p.h = h;
    return build_module(p, cap, true, parallel_gram);
}

graded_module affine_su2_module(long k, long lambda, long cap, bool parallel_gram) {
    if (k < 1) throw inconsistency_error("affine level must be a positive integer");
    if (lambda < 0 || lambda > k) throw inconsistency_error("affine top label out of the level alcove");
    module_params p;
    p.fam = module_params::family::affine_su2;
    p.k = k;
    p.lambda = lambda;
    return build_module(p, cap, true, parallel_gram);
}

graded_module phi_module(long n, long cap, const rat& q0, bool parallel_gram) {
    if (n < 0) throw inconsistency_error("derivative degree must be nonnegative");
    module_params p;
    p.fam = module_params::family::phi;
    p.n = n;
    p.q0 = q0;
    return build_module(p, cap, true, parallel_gram);
}

std::vector<long> module_graded_dims(const graded_module& m) {
    std::vector<long> out;
    for (const auto& b : m.basis) out.push_back(static_cast<long>(b.size()));
    return out;
}

std::vector<long> module_graded_ranks(const graded_module& m) {
    std::vector<long> out;
    for (long g = 0; g <= m.cap; ++g) {
        long r = 0;
        for (const auto& blk : m.blocks[g]) r += rat_rank(blk.gram);
        out.push_back(r);
    }
    return out;
}

long block_rank(const graded_module& m, long grade, long weight) {
    const weight_block* blk = m.find_block(grade, weight);
    return blk ? rat_rank(blk->gram) : 0;
}

std::vector<long> virasoro_irrep_dims(const rat& c, const rat& h, long cap) {
    return module_graded_ranks(virasoro_module(c, h, cap));
}

rat virasoro_gram_det(const rat& c, const rat& h, long grade) {
    graded_module m = virasoro_module(c, h, grade);
    if (m.blocks[grade].size() != 1) throw inconsistency_error("unexpected block split");
    return rat_det(m.blocks[grade][0].gram);
}

std::vector<identity_report> sugawara_verify(long k, long grade_cap, long mode_cap) {
    if (grade_cap < 1 || grade_cap > 6) throw inconsistency_error("sugawara grade cap out of range");
    if (mode_cap < 1 || mode_cap > 4) throw inconsistency_error("sugawara mode cap out of range");
    module_params p;
    p.fam = module_params::family::affine_su2;
    p.k = k;
    p.lambda = 0;
    if (k < 1) throw inconsistency_error("affine level must be a positive integer");
    graded_module mod = build_module(p, grade_cap, false, false);
    rat c = rat(3 * k) / rat(k + 2);

    identity_report vir{"sugawara-virasoro-bracket", grade_cap, 0};
    identity_report cov{"sugawara-current-covariance", grade_cap, 0};
    identity_report grading{"sugawara-grading", grade_cap, 0};

    for (long g = 0; g <= grade_cap; ++g) {
        for (const monomial& b : mod.basis[g]) {
            state v{{b, rat(1)}};
            for (long m1 = -mode_cap; m1 <= mode_cap; ++m1) {
                state l1v = mod.apply_sugawara(m1, v);
                for (long m2 = -mode_cap; m2 <= mode_cap; ++m2) {
                    state d = mod.apply_sugawara(m1, mod.apply_sugawara(m2, v));
                    add_state(d, mod.apply_sugawara(m2, l1v), -1);
                    add_state(d, mod.apply_sugawara(m1 + m2, v), rat(-(m1 - m2)));
                    if (m1 + m2 == 0)
                        add_state(d, v, -c / 12 * rat(m1) * rat(m1 * m1 - 1));
                    rat r = max_abs_coeff(d);
                    if (r > vir.residual) vir.residual = r;
                }
                for (gen a : {gen::e, gen::f, gen::h}) {
                    for (long n = -mode_cap; n <= mode_cap; ++n) {
                        state d = mod.apply_sugawara(m1, mod.apply({a, n}, v));
                        add_state(d, mod.apply({a, n}, l1v), -1);
                        add_state(d, mod.apply({a, m1 + n}, v), rat(n));
                        rat r = max_abs_coeff(d);
                        if (r > cov.residual) cov.residual = r;
                    }
                }
            }
            state d = mod.apply_sugawara(0, v);
            add_state(d, v, -(mod.top_h() + rat(g)));
            rat r = max_abs_coeff(d);
            if (r > grading.residual) grading.residual = r;
        }
    }
    return {vir, cov, grading};
}

energy_bound_report energy_bound_check(long k, long grade_cap) {
    if (grade_cap < 1 || grade_cap > 6) throw inconsistency_error("energy bound grade cap out of range");
    graded_module mod = affine_su2_module(k, 0, grade_cap, false);
    energy_bound_report rep;
    rep.k = k;
    rep.grade_cap = grade_cap;
    rep.all_hold = true;
    for (long g = 0; g <= grade_cap; ++g) {
        for (const auto& blk : mod.blocks[g]) {
            std::size_t n = blk.members.size();
            // gram-schmidt over the block; null vectors are kept and must be
            // annihilated in norm by every current mode
            std::vector<ratvec> ortho;
            std::vector<rat> norms;
            for (std::size_t i = 0; i < n; ++i) {
                ratvec w(n, rat(0));
                w[i] = 1;
                for (std::size_t j = 0; j < ortho.size(); ++j) {
                    if (norms[j] == 0) continue;
                    rat ip = 0;
                    for (std::size_t l = 0; l < n; ++l)
                        if (ortho[j][l] != 0) ip += ortho[j][l] * blk.gram[i][l];
                    if (ip == 0) continue;
                    rat f = ip / norms[j];
                    for (std::size_t l = 0; l < n; ++l) w[l] -= f * ortho[j][l];
                }
                rat nn = 0;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (w[a] != 0 && w[b] != 0) nn += w[a] * blk.gram[a][b] * w[b];
                ortho.push_back(w);
                norms.push_back(nn);
            }
            for (std::size_t i = 0; i < n; ++i) {
                state phi;
                for (std::size_t l = 0; l < n; ++l)
                    if (ortho[i][l] != 0) add_term(phi, mod.basis[g][blk.members[l]], ortho[i][l]);
                // colour components orthonormalized against twice the dual
                // Coxeter number: sqrt(8) j^1 = e+f, sqrt(8) i j^2 = e-f,
                // sqrt(8) j^3 = h, so each squared norm carries a 1/8
                const char* comb_name[3] = {"j1(e+f)", "j2(e-f)", "j3(h)"};
                for (int comb = 0; comb < 3; ++comb) {
                    for (long md = -3; md <= 3; ++md) {
                        state jp;
                        if (comb == 2) {
                            jp = mod.apply({gen::h, md}, phi);
                        } else {
                            jp = mod.apply({gen::e, md}, phi);
                            add_state(jp, mod.apply({gen::f, md}, phi), comb == 0 ? 1 : -1);
                        }
                        rat lhs = mod.pair(jp, jp) / 8;
                        rat bound = rat(3 * k * g + 4 * k * std::labs(md)) * norms[i];
                        ++rep.checked;
                        bool ok = lhs <= bound && !(norms[i] == 0 && lhs != 0);
                        rat ratio = bound == 0 ? (lhs == 0 ? rat(0) : rat(-1)) : lhs / bound;
                        if (!ok) rep.all_hold = false;
                        if (!ok || ratio > rep.worst_ratio) {
                            rep.worst_ratio = ratio;
                            std::ostringstream os;
                            os << comb_name[comb] << " mode " << md << " on grade " << g
                               << " weight " << blk.weight << " vector " << i;
                            rep.worst_case = os.str();
                        }
                    }
                }
            }
        }
    }
    return rep;
}

std::vector<null_info> phi_null_report(const graded_module& m) {
    std::vector<null_info> out;
    for (long g = 1; g <= m.cap; ++g) {
        long r = 0;
        for (const auto& blk : m.blocks[g]) r += rat_rank(blk.gram);
        out.push_back({g, static_cast<long>(m.basis[g].size()), r});
    }
    return out;
}

set_certificate no_set_certificate(long n) {
    if (n < 1 || n > 12) throw inconsistency_error("derivative degree out of supported range");
    set_certificate cert;
    cert.n = n;
    long cap = std::min<long>(n + 1, 12);
    graded_module mod = phi_module(n, cap);
    for (const null_info& ni : phi_null_report(mod)) {
        if (ni.grade <= n) {
            if (ni.rank != 0) throw inconsistency_error("expected null grade has positive rank");
            cert.null_grades.push_back(ni.grade);
        } else if (ni.rank == 0) {
            throw inconsistency_error("expected nonzero rank above the null range");
        }
    }
    if (n >= 2) {
        // grade two carries only null states, so any stress tensor would
        // have c/2 = |L_{-2} O|^2 = 0 and vanish with the field itself
        cert.kind = "null-level-2";
        return cert;
    }
    cert.kind = "gamma-contradiction";
    monomial vac{{}, 0};
    state omega{{vac, rat(1)}};
    state p2 = mod.apply({gen::phi, -2}, omega);
    cert.phi2_norm = mod.pair(p2, p2);
    // a stress tensor with gamma L_{-2} O = phi_{-2} O forces
    // c |gamma|^2 / 2 = |phi_{-2} O|^2, i.e. c |gamma|^2 = 12
    cert.required_c_gamma2 = 2 * cert.phi2_norm;
    cert.quasi_primary_norm = cert.phi2_norm - cert.required_c_gamma2 / 2;
    // the modes would also satisfy [phi_1, phi_-3] = 4 gamma phi_-2, but the
    // left side vanishes identically while |phi_{-2} O| > 0
    state comm = mod.apply({gen::phi, 1}, mod.apply({gen::phi, -3}, omega));
    add_state(comm, mod.apply({gen::phi, -3}, mod.apply({gen::phi, 1}, omega)), -1);
    if (!comm.empty()) throw inconsistency_error("central mode bracket failed to vanish");
    cert.virasoro_fit_feasible = !(cert.phi2_norm != 0);
    return cert;
}

std::vector<mpz_class> partition_dims(long cap) {
    if (cap < 0 || cap > 100000) throw inconsistency_error("partition cap out of range");
    std::vector<mpz_class> p(cap + 1);
    p[0] = 1;
    for (long n = 1; n <= cap; ++n) {
        mpz_class acc = 0;
        for (long q = 1;; ++q) {
            long g1 = q * (3 * q - 1) / 2, g2 = q * (3 * q + 1) / 2;
            if (g1 > n) break;
            mpz_class term = p[n - g1];
            if (g2 <= n) term += p[n - g2];
            if (q % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[n] = acc;
    }
    return p;
}

std::vector<eta_check_point> eta_asymptotic_check(const std::vector<double>& betas, double beta0,
                                                  long cap) {
    std::vector<mpz_class> p = partition_dims(cap);
    std::vector<eta_check_point> out;
    for (double beta : betas) {
        if (!(beta > 0)) throw inconsistency_error("beta grid must be positive");
        double sum = 0;
        for (long n = 0; n <= cap; ++n) sum += p[n].get_d() * std::exp(-beta * n);
        eta_check_point pt;
        pt.beta = beta;
        pt.lhs = std::log(sum);
        pt.bound = beta0 / beta;
        pt.pass = pt.lhs <= pt.bound;
        out.push_back(pt);
    }
    return out;
}

double default_eta_beta0() {
    const double pi = 3.14159265358979323846;
    return pi * pi / 6 - 1 + 0.05;
}

} // namespace coset
