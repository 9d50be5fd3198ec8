#include "coset/characters.hpp"
#include "coset/conformal.hpp"
#include "coset/errors.hpp"
#include "coset/fusion.hpp"
#include "coset/io.hpp"
#include "coset/liealg.hpp"
#include "coset/mobius.hpp"
#include "coset/modealg.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace coset;

namespace {

struct run_output {
    output_table table;
    std::vector<std::string> machine;
};

void emit(const run_output& out, const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (!out.table.header.empty()) {
        if (format == "csv") os << render_csv(out.table);
        else os << render_table(out.table, color_enabled());
    }
    for (const std::string& line : out.machine) os << line << "\n";
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw parse_error("cannot write " + out_path);
        f << os.str();
    }
}

void check_format(const std::string& format) {
    if (format != "table" && format != "csv") throw parse_error("format must be table or csv");
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw parse_error("bad number '" + tok + "'");
        }
    }
    if (out.empty()) throw parse_error("empty list");
    return out;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw parse_error("bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw parse_error("empty list");
    return out;
}

std::string format_labels(const branch_component& comp) {
    std::string out;
    for (std::size_t g = 0; g < comp.labels.size(); ++g) {
        if (g) out += " | ";
        for (std::size_t i = 0; i < comp.labels[g].size(); ++i) {
            if (i) out += " ";
            out += std::to_string(comp.labels[g][i]);
        }
    }
    return out;
}

int run_mobius(const std::string& matrix, const std::string& apply_at,
               const std::string& format, const std::string& out_path) {
    std::vector<double> e = parse_double_list(matrix);
    if (e.size() != 4) throw parse_error("matrix needs four entries a,b,c,d");
    double det = e[0] * e[3] - e[1] * e[2];
    if (det <= 0) throw parse_error("matrix must have positive determinant");
    double s = 1.0 / std::sqrt(det);
    psl2 g{e[0] * s, e[1] * s, e[2] * s, e[3] * s};

    iwasawa_factors iw = iwasawa_decompose(g);
    psl2 recon = translation(iw.p) * dilation(iw.tau) * rotation(iw.t);
    double iw_res = proj_dist(recon, g);
    psl2 h = sqrt_psl(g);
    double sq_res = proj_dist(h * h, g);

    run_output out;
    out.table.header = {"quantity", "value"};
    out.table.rows = {
        {"a", format_float(g.a)}, {"b", format_float(g.b)},
        {"c", format_float(g.c)}, {"d", format_float(g.d)},
        {"p", format_float(iw.p)}, {"tau", format_float(iw.tau)}, {"t", format_float(iw.t)},
        {"sqrt_a", format_float(h.a)}, {"sqrt_b", format_float(h.b)},
        {"sqrt_c", format_float(h.c)}, {"sqrt_d", format_float(h.d)},
    };
    if (!apply_at.empty()) {
        boundary_point p;
        if (apply_at == "inf") p = point_at_infinity();
        else p = finite_point(parse_double_list(apply_at).at(0));
        boundary_point q = mobius_apply(g, p);
        out.table.rows.push_back({"image", q.infinite ? "inf" : format_float(q.x)});
    }
    bool ok = iw_res < 1e-10 && sq_res < 1e-9;
    std::ostringstream mach;
    mach << "iwasawa_residual=" << format_float(iw_res) << " sqrt_residual=" << format_float(sq_res)
         << " verified=" << (ok ? "true" : "false");
    out.machine.push_back(mach.str());
    emit(out, format, out_path);
    return ok ? 0 : 1;
}

int run_central_charge(const std::string& algebra_list, const std::string& level_list, long minimal,
                       const std::string& format, const std::string& out_path) {
    run_output out;
    if (minimal >= 0) {
        if (!algebra_list.empty()) throw parse_error("--minimal excludes --algebra");
        rat c = discrete_series_c(minimal);
        out.table.header = {"model", "c"};
        out.table.rows = {{"minimal m=" + std::to_string(minimal), rat_str(c)}};
        out.machine.push_back("c=" + rat_str(c));
        emit(out, format, out_path);
        return 0;
    }
    if (algebra_list.empty()) throw parse_error("need --algebra with --level, or --minimal");
    std::istringstream names(algebra_list);
    std::string name;
    std::vector<std::string> algebra_names;
    while (std::getline(names, name, ',')) algebra_names.push_back(name);
    std::vector<long> levels = parse_long_list(level_list);
    if (levels.size() != algebra_names.size())
        throw parse_error("--level list must match --algebra list");
    leveled_algebra la;
    out.table.header = {"component", "level", "c"};
    for (std::size_t i = 0; i < algebra_names.size(); ++i) {
        leveled_component comp;
        comp.alg = parse_algebra(algebra_names[i]);
        comp.level = levels[i];
        if (comp.level < 1) throw parse_error("levels must be positive");
        leveled_algebra solo;
        solo.components.push_back(comp);
        out.table.rows.push_back({comp.alg.name(), std::to_string(comp.level), rat_str(sugawara_c(solo))});
        la.components.push_back(std::move(comp));
    }
    rat c = sugawara_c(la);
    out.machine.push_back("c=" + rat_str(c));
    emit(out, format, out_path);
    return 0;
}

int run_conformal_check(const std::string& path, const std::string& certify,
                        const std::string& format, const std::string& out_path) {
    embedding_spec spec = read_embedding_file(path);
    inclusion_report rep = classify_inclusion(spec);

    run_output out;
    out.table.header = {"component", "mult", "class", "eigenvalue"};
    for (const spectrum_entry& entry : rep.spectrum) {
        std::string cls = entry.component.inside ? "inside"
                          : entry.eigenvalue == 1 ? "covariant"
                          : entry.eigenvalue == 0 ? "coset"
                                                  : "mixed";
        out.table.rows.push_back({format_labels(entry.component), std::to_string(entry.component.mult),
                                  cls, rat_str(entry.eigenvalue)});
    }
    for (std::size_t a = 0; a < rep.indices.size(); ++a) {
        std::ostringstream mach;
        mach << "sub." << a + 1 << " index=" << rat_str(rep.indices[a])
             << " level=" << rep.induced_levels[a];
        out.machine.push_back(mach.str());
    }
    out.machine.push_back("route=" + rep.route);
    out.machine.push_back(std::string("verdict=") + (rep.conformal ? "conformal" : "nonconformal") +
                          " coset_c=" + rat_str(rep.coset_central_charge));
    emit(out, format, out_path);

    if (!certify.empty()) {
        if (certify != "conformal" && certify != "nonconformal")
            throw parse_error("--certify takes conformal or nonconformal");
        bool want = certify == "conformal";
        if (want != rep.conformal) return 1;
    }
    return 0;
}

int run_mode_verify(long level, long grade, long modes, const std::string& format,
                    const std::string& out_path) {
    if (level < 1) throw parse_error("--level must be positive");
    if (grade > 8) throw parse_error("grade " + std::to_string(grade) + " exceeds the affine module cap 8");
    if (grade > 6) throw parse_error("grade " + std::to_string(grade) + " exceeds the identity-sweep cap 6");
    if (grade < 1) throw parse_error("--grade must be positive");
    if (modes < 1 || modes > 4) throw parse_error("--modes must lie in 1..4");

    run_output out;
    out.table.header = {"check", "detail", "status"};
    bool all_ok = true;

    for (const identity_report& rep : sugawara_verify(level, grade, modes)) {
        bool ok = rep.pass();
        all_ok = all_ok && ok;
        out.table.rows.push_back({rep.name, "residual=" + rat_str(rep.residual), ok ? "pass" : "fail"});
    }
    energy_bound_report eb = energy_bound_check(level, grade);
    all_ok = all_ok && eb.all_hold;
    out.table.rows.push_back({"energy-bound",
                              "checked=" + std::to_string(eb.checked) + " worst=" + rat_str(eb.worst_ratio),
                              eb.all_hold ? "pass" : "fail"});
    for (long n = 1; n <= 3; ++n) {
        set_certificate cert = no_set_certificate(n);
        bool ok;
        std::string detail = cert.kind;
        if (n == 1) {
            ok = cert.kind == "gamma-contradiction" && cert.quasi_primary_norm == 0 &&
                 !cert.virasoro_fit_feasible;
            detail += " phi2_norm=" + rat_str(cert.phi2_norm) +
                      " c_gamma2=" + rat_str(cert.required_c_gamma2);
        } else {
            ok = cert.kind == "null-level-2";
            detail += " null_grades=";
            for (std::size_t i = 0; i < cert.null_grades.size(); ++i)
                detail += (i ? "," : "") + std::to_string(cert.null_grades[i]);
        }
        all_ok = all_ok && ok;
        out.table.rows.push_back({"phi-certificate n=" + std::to_string(n), detail, ok ? "pass" : "fail"});
    }
    std::ostringstream mach;
    mach << "mode_verify=" << (all_ok ? "pass" : "fail") << " level=" << level << " grade=" << grade;
    out.machine.push_back(mach.str());
    emit(out, format, out_path);
    return all_ok ? 0 : 1;
}

int run_branch_verify(const std::string& path, long grade, const std::string& format,
                      const std::string& out_path) {
    if (grade > 6) throw parse_error("grade " + std::to_string(grade) + " exceeds the branching-verification cap 6");
    if (grade < 1) throw parse_error("--grade must be positive");
    branching_claim claim = read_branching_claim(path);
    branching_report rep = verify_branching(claim, grade);

    run_output out;
    out.table.header = {"target", "status", "note"};
    for (const branch_row_report& row : rep.rows) {
        std::string note = row.note;
        if (!row.pass && row.first_fail_grade >= 0)
            note += (note.empty() ? "" : "; ") + std::string("first failing step ") +
                    std::to_string(row.first_fail_grade);
        out.table.rows.push_back({std::to_string(row.target), row.pass ? "pass" : "fail", note});
    }
    out.machine.push_back(std::string("verdict=") + (rep.pass ? "pass" : "fail") +
                          " coset_c=" + rat_str(rep.coset_c));
    emit(out, format, out_path);
    return rep.pass ? 0 : 1;
}

int run_sectors(long minimal, long su2_level, const std::string& sun, long sun_level,
                const std::string& fuse, const std::string& format, const std::string& out_path) {
    int selectors = (minimal >= 0) + (su2_level >= 0) + (!sun.empty());
    if (selectors != 1) throw parse_error("pick exactly one of --minimal, --su2, --sun");

    run_output out;
    if (minimal >= 0) {
        if (fuse.empty()) {
            out.table.header = {"r", "s", "h", "d"};
            for (const minimal_sector& sec : minimal_model_table(minimal))
                out.table.rows.push_back({std::to_string(sec.label.r), std::to_string(sec.label.s),
                                          rat_str(sec.h), format_float(sec.d)});
        } else {
            auto parse_label = [](const std::string& s) {
                std::size_t dot = s.find('.');
                if (dot == std::string::npos) throw parse_error("minimal labels look like r.s");
                kac_label a;
                a.r = std::stol(s.substr(0, dot));
                a.s = std::stol(s.substr(dot + 1));
                return a;
            };
            std::istringstream is(fuse);
            std::string first, second;
            if (!std::getline(is, first, ',') || !std::getline(is, second, ','))
                throw parse_error("--fuse needs two labels");
            out.table.header = {"r", "s", "h", "d"};
            for (const kac_label& c : fuse_minimal(minimal, parse_label(first), parse_label(second)))
                out.table.rows.push_back({std::to_string(c.r), std::to_string(c.s),
                                          rat_str(kac_h(minimal, c)), format_float(kac_d(minimal, c))});
        }
    } else if (su2_level >= 0) {
        if (fuse.empty()) {
            out.table.header = {"l", "h", "d"};
            for (long l = 0; l <= su2_level; ++l)
                out.table.rows.push_back({std::to_string(l), rat_str(su2_h(su2_level, l)),
                                          format_float(su2_d(su2_level, l))});
        } else {
            std::vector<long> ab = parse_long_list(fuse);
            if (ab.size() != 2) throw parse_error("--fuse needs two labels");
            out.table.header = {"l", "h", "d"};
            for (long l : fuse_su2(su2_level, ab[0], ab[1]))
                out.table.rows.push_back({std::to_string(l), rat_str(su2_h(su2_level, l)),
                                          format_float(su2_d(su2_level, l))});
        }
    } else {
        if (!fuse.empty()) throw parse_error("--fuse works with --minimal or --su2 only");
        if (sun_level < 1) throw parse_error("--sun needs --level");
        algebra g = parse_algebra(sun);
        if (g.series != 'A') throw parse_error("--sun takes suN or A-series names");
        out.table.header = {"labels", "h", "d"};
        for (const std::vector<long>& labels : alcove_sectors(g.rank + 1, (int)sun_level)) {
            sector sec = sector_data(g, (int)sun_level, labels);
            std::string text;
            for (std::size_t i = 0; i < labels.size(); ++i)
                text += (i ? " " : "") + std::to_string(labels[i]);
            out.table.rows.push_back({text, rat_str(sec.h), format_float(sec.d)});
        }
    }
    emit(out, format, out_path);
    return 0;
}

int run_mu_index(const std::string& dims, long su2_level, double sub_index,
                 const std::string& format, const std::string& out_path) {
    run_output out;
    double mu = 0;
    out.table.header = {"quantity", "value"};
    if (!dims.empty()) {
        if (su2_level >= 0) throw parse_error("--dims excludes --su2");
        std::vector<double> d = parse_double_list(dims);
        mu = mu_index(d);
        out.table.rows.push_back({"sectors", std::to_string(d.size())});
    } else if (su2_level >= 0) {
        std::vector<double> d;
        for (long l = 0; l <= su2_level; ++l) d.push_back(su2_d(su2_level, l));
        mu = mu_index(d);
        out.table.rows.push_back({"sectors", std::to_string(d.size())});
        out.table.rows.push_back({"closed_form", format_float(su2_mu_closed(su2_level))});
    } else {
        throw parse_error("need --dims or --su2");
    }
    out.table.rows.push_back({"mu", format_float(mu)});
    std::string mach = "mu=" + format_float(mu);
    if (sub_index > 0) {
        double amb = mu_ambient_from_index(mu, sub_index);
        out.table.rows.push_back({"mu_ambient", format_float(amb)});
        mach += " mu_ambient=" + format_float(amb);
    }
    out.machine.push_back(mach);
    emit(out, format, out_path);
    return 0;
}

int run_coupling_solve(const std::string& path, double tol, const std::string& format,
                       const std::string& out_path) {
    if (tol <= 0) throw parse_error("--tolerance must be positive");
    std::vector<table_row> rows = read_coupling_table(path);
    coupling_result res = coupling_solve(rows, tol);

    run_output out;
    out.table.header = {"row", "ext_a", "ext_c", "partner"};
    std::vector<std::string> partner(rows.size(), "-");
    for (const coupling_pair& pr : res.pairs) partner[pr.u] = std::to_string(pr.v);
    for (std::size_t i = 0; i < rows.size(); ++i)
        out.table.rows.push_back({std::to_string(i), format_float(res.ext_a[i]),
                                  format_float(res.ext_c[i]), partner[i]});
    out.machine.push_back("index_a=" + format_float(res.index_a) +
                          " index_c=" + format_float(res.index_c));
    for (const coupling_pair& pr : res.pairs) {
        std::ostringstream mach;
        mach << "pair " << pr.u << "->" << pr.v << " dA=" << format_float(pr.da)
             << " dC=" << format_float(pr.dc);
        out.machine.push_back(mach.str());
    }
    std::ostringstream mach;
    mach << "resolved=" << (res.resolved ? "true" : "false")
         << " unique=" << (res.unique ? "true" : "false")
         << " normal=" << (res.normal ? "true" : "false");
    out.machine.push_back(mach.str());
    for (const std::string& note : res.notes) out.machine.push_back("note: " + note);
    emit(out, format, out_path);
    return res.resolved ? 0 : 1;
}

int run_sharp_test(const std::string& hs, const std::string& format, const std::string& out_path) {
    std::vector<rat> values;
    std::istringstream is(hs);
    std::string tok;
    while (std::getline(is, tok, ',')) values.push_back(parse_rat(tok));
    if (values.empty()) throw parse_error("empty --h list");
    sharp_report rep = sharp_action_test(values);

    run_output out;
    out.table.header = {"offender"};
    for (const rat& h : rep.offenders) out.table.rows.push_back({rat_str(h)});
    out.machine.push_back(std::string("sharp=") + (rep.sharp ? "true" : "false"));
    emit(out, format, out_path);
    return rep.sharp ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coset-kit: numeric invariants of coset conformal models"};
    app.require_subcommand(1);

    std::string format = "table", out_path;
    long grade = 6;

    auto* mobius_cmd = app.add_subcommand("mobius", "Iwasawa factors and projective square root");
    std::string matrix, apply_at;
    mobius_cmd->add_option("--matrix", matrix, "entries a,b,c,d, det > 0")->required();
    mobius_cmd->add_option("--apply", apply_at, "boundary point (number or inf)");
    mobius_cmd->add_option("--format", format);
    mobius_cmd->add_option("--out", out_path);

    auto* cc_cmd = app.add_subcommand("central-charge", "Sugawara and discrete-series central charges");
    std::string algebra_list, level_list = "1";
    long minimal = -1;
    cc_cmd->add_option("--algebra", algebra_list, "comma list, e.g. E8 or A1,A1");
    cc_cmd->add_option("--level", level_list, "comma list matching --algebra");
    cc_cmd->add_option("--minimal", minimal, "discrete-series index m");
    cc_cmd->add_option("--format", format);
    cc_cmd->add_option("--out", out_path);

    auto* conf_cmd = app.add_subcommand("conformal-check", "classify an embedding file");
    std::string conf_path, certify;
    conf_cmd->add_option("file", conf_path)->required();
    conf_cmd->add_option("--certify", certify, "conformal or nonconformal");
    conf_cmd->add_option("--format", format);
    conf_cmd->add_option("--out", out_path);

    auto* mode_cmd = app.add_subcommand("mode-verify", "operator identities, energy bounds, certificates");
    long level = 1, modes = 2;
    mode_cmd->add_option("--level", level, "affine su(2) level");
    mode_cmd->add_option("--grade", grade, "sweep grade cap");
    mode_cmd->add_option("--modes", modes, "mode index cap");
    mode_cmd->add_option("--format", format);
    mode_cmd->add_option("--out", out_path);

    auto* branch_cmd = app.add_subcommand("branch-verify", "check a branching claim file");
    std::string branch_path;
    branch_cmd->add_option("file", branch_path)->required();
    branch_cmd->add_option("--grade", grade, "verification depth");
    branch_cmd->add_option("--format", format);
    branch_cmd->add_option("--out", out_path);

    auto* sectors_cmd = app.add_subcommand("sectors", "sector tables and fusion products");
    long sec_minimal = -1, sec_su2 = -1, sun_level = -1;
    std::string sun, fuse;
    sectors_cmd->add_option("--minimal", sec_minimal, "minimal-model index m");
    sectors_cmd->add_option("--su2", sec_su2, "su(2) level");
    sectors_cmd->add_option("--sun", sun, "suN algebra name");
    sectors_cmd->add_option("--level", sun_level, "level for --sun");
    sectors_cmd->add_option("--fuse", fuse, "two labels (minimal: r.s)");
    sectors_cmd->add_option("--format", format);
    sectors_cmd->add_option("--out", out_path);

    auto* mu_cmd = app.add_subcommand("mu-index", "sum of squared statistical dimensions");
    std::string dims;
    long mu_su2 = -1;
    double sub_index = 0;
    mu_cmd->add_option("--dims", dims, "comma list of dimensions");
    mu_cmd->add_option("--su2", mu_su2, "su(2) level alcove");
    mu_cmd->add_option("--sub-index", sub_index, "inclusion index for the ambient mu");
    mu_cmd->add_option("--format", format);
    mu_cmd->add_option("--out", out_path);

    auto* couple_cmd = app.add_subcommand("coupling-solve", "pair subtheory and coset sectors");
    std::string couple_path;
    double tol = 1e-4;
    couple_cmd->add_option("file", couple_path)->required();
    couple_cmd->add_option("--tolerance", tol, "dimension matching tolerance");
    couple_cmd->add_option("--format", format);
    couple_cmd->add_option("--out", out_path);

    auto* sharp_cmd = app.add_subcommand("sharp-test", "half-integer energy test");
    std::string hs;
    // drop the short -h so --h stays available as an option name
    sharp_cmd->set_help_flag("--help", "print this help message and exit");
    sharp_cmd->add_option("--h", hs, "comma list of rational energies")->required();
    sharp_cmd->add_option("--format", format);
    sharp_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        check_format(format);
        if (mobius_cmd->parsed()) return run_mobius(matrix, apply_at, format, out_path);
        if (cc_cmd->parsed()) return run_central_charge(algebra_list, level_list, minimal, format, out_path);
        if (conf_cmd->parsed()) return run_conformal_check(conf_path, certify, format, out_path);
        if (mode_cmd->parsed()) return run_mode_verify(level, grade, modes, format, out_path);
        if (branch_cmd->parsed()) return run_branch_verify(branch_path, grade, format, out_path);
        if (sectors_cmd->parsed())
            return run_sectors(sec_minimal, sec_su2, sun, sun_level, fuse, format, out_path);
        if (mu_cmd->parsed()) return run_mu_index(dims, mu_su2, sub_index, format, out_path);
        if (couple_cmd->parsed()) return run_coupling_solve(couple_path, tol, format, out_path);
        if (sharp_cmd->parsed()) return run_sharp_test(hs, format, out_path);
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const inconsistency_error& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 3;
    }
}
