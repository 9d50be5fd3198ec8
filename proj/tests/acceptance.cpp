// End-to-end acceptance gate. Runs one numbered check per shipped guarantee
// and prints a PASS/FAIL line for each; exits nonzero if any line fails.
// argv[1] is the directory holding the worked-example data files.

#include "coset/characters.hpp"
#include "coset/conformal.hpp"
#include "coset/errors.hpp"
#include "coset/fusion.hpp"
#include "coset/io.hpp"
#include "coset/liealg.hpp"
#include "coset/mobius.hpp"
#include "coset/modealg.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace coset;

namespace {

std::string data_dir = "data";

bool expect(bool ok, const std::string& what, std::string& why) {
    if (!ok && why.empty()) why = what;
    return ok;
}

bool near(double a, double b, double tol = 1e-4) { return std::fabs(a - b) < tol; }

leveled_algebra simple(const std::string& name, long level) {
    leveled_algebra la;
    la.components.push_back({parse_algebra(name), level});
    return la;
}

embedding_spec diagonal_spec(long m) {
    embedding_spec spec;
    spec.ambient.components.push_back({parse_algebra("A1"), 1});
    spec.ambient.components.push_back({parse_algebra("A1"), m});
    spec.sub.push_back(parse_algebra("A1"));
    spec.projection = ratmat{{1, 1}};
    return spec;
}

psl2 random_element(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    return translation(u(rng)) * dilation(u(rng) / 2) * rotation(u(rng));
}

bool crit_central_charges(std::string& why) {
    bool ok = true;
    for (long k = 1; k <= 16; ++k)
        ok &= expect(sugawara_c(simple("A1", k)) == rat(3 * k) / (k + 2), "su(2) charge at k=" + std::to_string(k), why);
    ok &= expect(sugawara_c(simple("E8", 1)) == 8, "E8 level-one charge", why);
    for (long m = 1; m <= 20; ++m) {
        auto rep = classify_inclusion(diagonal_spec(m));
        ok &= expect(rep.coset_central_charge == discrete_series_c(m),
                     "diagonal coset charge at m=" + std::to_string(m), why);
    }
    auto spec = read_embedding_file(data_dir + "/su9_in_e8_level2.emb");
    ok &= expect(classify_inclusion(spec).coset_central_charge == rat(21, 22), "level-two chain coset charge", why);
    return ok;
}

bool crit_conformal_criterion(std::string& why) {
    bool ok = true;
    auto spec1 = read_embedding_file(data_dir + "/su9_in_e8_level1.emb");
    auto rep1 = classify_inclusion(spec1);
    ok &= expect(rep1.conformal && rep1.route == "casimir-saturation", "level-one chain verdict", why);
    ok &= expect(rep1.spectrum.size() == 3, "level-one chain spectrum size", why);
    bool saw84 = false;
    for (const auto& e : rep1.spectrum) {
        ok &= expect(e.eigenvalue == 1, "level-one chain saturation", why);
        if (!e.component.inside && weyl_dim(spec1.sub[0], labels_to_ratvec(e.component.labels[0])) == 84)
            saw84 = true;
    }
    ok &= expect(saw84, "84-dimensional covariant component", why);

    for (long m = 1; m <= 20; ++m) {
        auto rep = classify_inclusion(diagonal_spec(m));
        ok &= expect(!rep.conformal, "diagonal pair must not be conformal", why);
        for (const auto& e : rep.spectrum)
            if (!e.component.inside)
                ok &= expect(e.eigenvalue == rat(2) / (m + 3) && e.eigenvalue < 1,
                             "complement eigenvalue at m=" + std::to_string(m), why);
    }

    auto spec2 = read_embedding_file(data_dir + "/su9_in_e8_level2.emb");
    auto br = branch_adjoint(spec2);
    bool raised = false;
    try {
        assemble_report(spec2, br, {rat(1, 2)});
    } catch (const inconsistency_error&) {
        raised = true;
    }
    ok &= expect(raised, "doctored level-two input must trip the level-one guard", why);
    return ok;
}

bool crit_dimension_tables(std::string& why) {
    bool ok = true;
    std::vector<double> exp1{1, 2.682507, 3.513337, 3.228707, 1.918986};
    std::vector<double> exp7{3.732051, 10.011252, 13.111953, 12.049700, 7.161753};
    for (long a = 1; a <= 5; ++a) {
        ok &= expect(near(kac_d(9, {2 * a - 1, 1}), exp1[a - 1]), "s=1 dimension column, row " + std::to_string(a), why);
        ok &= expect(near(kac_d(9, {2 * a - 1, 7}), exp7[a - 1]), "s=7 dimension column, row " + std::to_string(a), why);
    }
    ok &= expect(near(su2_d(16, 2), 2.879385), "su(2)_16 dim l=2", why);
    ok &= expect(near(su2_d(16, 8), 5.758770), "su(2)_16 dim l=8", why);
    ok &= expect(near(su2_d(16, 6), 5.411474), "su(2)_16 dim l=6", why);
    ok &= expect(near(su2_d(16, 4), 4.411474), "su(2)_16 dim l=4", why);
    return ok;
}

bool crit_mu_index(std::string& why) {
    bool ok = true;
    for (long k = 1; k <= 16; ++k) {
        std::vector<double> dims;
        for (long l = 0; l <= k; ++l) dims.push_back(su2_d(k, l));
        ok &= expect(near(mu_index(dims), su2_mu_closed(k), 1e-6), "global index at k=" + std::to_string(k), why);
    }
    std::vector<double> ones(9, 1.0);
    ok &= expect(mu_index(ones) == 9.0, "nine abelian sectors", why);
    ok &= expect(mu_ambient_from_index(9.0, 3.0) == 1.0, "ambient index from the inclusion", why);
    ok &= expect(index_from_mu(9.0, 1.0) == 3.0, "inclusion index from the two global indices", why);
    return ok;
}

bool crit_coupling_solver(std::string& why) {
    bool ok = true;
    auto res = coupling_solve(read_coupling_table(data_dir + "/su9_in_e8_level2.table"));
    ok &= expect(res.resolved && res.unique && res.normal, "chain table must resolve uniquely and normally", why);
    ok &= expect(res.pairs.size() == 5, "chain table pair count", why);
    ok &= expect(near(res.index_a, 3.0), "chain extension index, sub side", why);
    ok &= expect(near(res.index_c, 3.0 + std::sqrt(3.0)), "chain extension index, coset side", why);
    std::vector<double> ext{1, 2.682507, 3.513337, 3.228707, 1.918986};
    for (std::size_t i = 0; i < ext.size() && i < res.ext_a.size(); ++i)
        ok &= expect(near(res.ext_a[i], ext[i]), "chain extended dimension, row " + std::to_string(i), why);
    ok &= expect(res.ext_a.size() == 5, "chain extended dimension count", why);

    auto res2 = coupling_solve(read_coupling_table(data_dir + "/su2su3_in_e8_level1.table"));
    ok &= expect(res2.resolved && res2.unique && res2.normal, "rank-two table must resolve uniquely and normally", why);
    ok &= expect(res2.pairs.size() == 6, "rank-two table pair count", why);
    ok &= expect(near(res2.index_a, 2.0), "rank-two extension index, sub side", why);
    ok &= expect(near(res2.index_c, 3.0), "rank-two extension index, coset side", why);
    return ok;
}

bool crit_mode_identities(std::string& why) {
    bool ok = true;
    for (long k : {1L, 2L, 16L}) {
        auto reports = sugawara_verify(k, 4, 2);
        std::set<std::string> names;
        for (const auto& r : reports) {
            names.insert(r.name);
            ok &= expect(r.residual == 0 && r.pass(), r.name + " at k=" + std::to_string(k), why);
        }
        ok &= expect(names.count("sugawara-virasoro-bracket") == 1, "bracket identity present", why);
        ok &= expect(names.count("sugawara-current-covariance") == 1, "covariance identity present", why);
    }
    return ok;
}

bool crit_derivative_fields(std::string& why) {
    bool ok = true;
    auto c1 = no_set_certificate(1);
    ok &= expect(c1.kind == "gamma-contradiction", "degree-one certificate kind", why);
    ok &= expect(c1.null_grades == std::vector<long>{1}, "degree-one null grades", why);
    ok &= expect(c1.phi2_norm == 6 && c1.required_c_gamma2 == 12, "degree-one norms", why);
    ok &= expect(c1.quasi_primary_norm == 0 && !c1.virasoro_fit_feasible, "degree-one contradiction", why);
    auto c2 = no_set_certificate(2);
    ok &= expect(c2.kind == "null-level-2" && c2.null_grades == std::vector<long>{1, 2}, "degree-two certificate", why);
    auto c3 = no_set_certificate(3);
    ok &= expect(c3.kind == "null-level-2" && c3.null_grades == std::vector<long>{1, 2, 3}, "degree-three certificate", why);
    return ok;
}

bool crit_branching(std::string& why) {
    bool ok = true;
    auto claim1 = read_branching_claim(data_dir + "/gko_m1.branch");
    auto rep1 = verify_branching(claim1, 5);
    ok &= expect(rep1.pass && rep1.coset_c == rat(1, 2), "first diagonal pair branching", why);
    auto claim2 = read_branching_claim(data_dir + "/gko_m2.branch");
    auto rep2 = verify_branching(claim2, 5);
    ok &= expect(rep2.pass && rep2.coset_c == rat(7, 10), "second diagonal pair branching", why);
    for (const auto& r : rep2.rows) ok &= expect(r.first_fail_grade == -1, "clean rows", why);
    return ok;
}

bool crit_sharp(std::string& why) {
    bool ok = true;
    std::vector<rat> listA{0, rat(9, 11), rat(16, 11), rat(21, 11), rat(24, 11),
                           2, rat(20, 11), rat(10, 11), rat(13, 11)};
    auto repA = sharp_action_test(listA);
    std::set<rat> offenders(repA.offenders.begin(), repA.offenders.end());
    std::set<rat> expectA{rat(9, 11), rat(16, 11), rat(21, 11), rat(24, 11),
                          rat(20, 11), rat(10, 11), rat(13, 11)};
    ok &= expect(!repA.sharp && offenders == expectA, "rank-eight offender list", why);

    std::vector<rat> listB;
    for (long l = 0; l <= 16; l += 2) listB.push_back(su2_h(16, l));
    auto repB = sharp_action_test(listB);
    ok &= expect(!repB.sharp && repB.offenders.size() == 7, "spin chain offender list", why);

    auto good = sharp_action_test({0, rat(1, 2), 1});
    ok &= expect(good.sharp && good.offenders.empty(), "half-integer list is sharp", why);
    return ok;
}

bool crit_mobius(std::string& why) {
    bool ok = true;
    for (double tau = -2.0; tau <= 2.0; tau += 0.25) {
        double s = std::exp(tau / 2);
        psl2 word = shear(-(s - 1) / s) * translation(1) * shear(s - 1) * translation(-1 / s);
        ok &= expect(proj_dist(dilation(tau), word) < 1e-10, "dilation word", why);
    }
    for (double t = 0.1; t < 3.1; t += 0.2) {
        double c = (std::cos(t) - 1) / std::sin(t);
        psl2 word = shear(c) * translation(std::sin(t)) * shear(c);
        ok &= expect(proj_dist(rotation(2 * t), word) < 1e-10, "rotation word", why);
    }
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        psl2 g = random_element(rng);
        auto f = iwasawa_decompose(g);
        psl2 back = translation(f.p) * dilation(f.tau) * rotation(f.t);
        ok &= expect(proj_dist(g, back) < 1e-10, "iwasawa round trip", why);
    }
    for (int i = 0; i < 1000; ++i) {
        psl2 g = random_element(rng);
        psl2 h = sqrt_psl(g);
        ok &= expect(proj_dist(h * h, g) < 1e-9, "projective square root residual", why);
    }
    return ok;
}

bool crit_kac_degeneracy(std::string& why) {
    bool ok = true;
    ok &= expect(virasoro_gram_det(minimal_c(1), kac_h(1, {2, 1}), 2) == 0, "degenerate at (2,1), grade 2", why);
    ok &= expect(virasoro_gram_det(minimal_c(2), kac_h(2, {1, 2}), 2) == 0, "degenerate at (1,2), grade 2", why);
    ok &= expect(virasoro_gram_det(minimal_c(1), kac_h(1, {2, 2}), 4) == 0, "degenerate at (2,2), grade 4", why);
    ok &= expect(virasoro_gram_det(minimal_c(1), kac_h(1, {2, 1}), 1) != 0, "no premature zero at grade 1", why);
    for (long g = 1; g <= 4; ++g)
        ok &= expect(virasoro_gram_det(2, rat(1, 3), g) != 0, "generic point stays nondegenerate", why);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) data_dir = argv[1];

    struct criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
        double budget_s; // 0 = no budget
    };
    std::vector<criterion> list{
        {1, "exact central charges", crit_central_charges, 0},
        {2, "conformal-inclusion criterion", crit_conformal_criterion, 10},
        {3, "statistical-dimension tables", crit_dimension_tables, 0},
        {4, "global index arithmetic", crit_mu_index, 0},
        {5, "coupling-matrix solver", crit_coupling_solver, 0},
        {6, "quadratic-mode identities", crit_mode_identities, 60},
        {7, "derivative-field certificates", crit_derivative_fields, 0},
        {8, "branching-function verification", crit_branching, 120},
        {9, "sharp-action tests", crit_sharp, 0},
        {10, "boundary geometry suite", crit_mobius, 0},
        {11, "gram degeneracy pattern", crit_kac_degeneracy, 0},
    };

    int failures = 0;
    for (const auto& c : list) {
        std::string why;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.budget_s > 0 && secs >= c.budget_s) {
            ok = false;
            why = "runtime budget exceeded";
        }
        std::printf("%s %2d %-34s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    why.empty() ? "" : "  -- ", why.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(list.size()) - failures, list.size());
    return failures == 0 ? 0 : 1;
}
