#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coset/conformal.hpp"
#include "coset/errors.hpp"
#include "coset/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace coset;

namespace {

struct temp_file {
    std::string path;
    explicit temp_file(const std::string& name, const std::string& body) {
        path = (std::filesystem::temp_directory_path() / name).string();
        std::ofstream out(path);
        out << body;
    }
    ~temp_file() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("embedding files") {
    temp_file f("io_diag.emb",
                "# diagonal pair\n"
                "name = diag-test\n"
                "[ambient]\n"
                "algebra = A1, A1\n"
                "levels = 1, 2\n"
                "[sub.1]\n"
                "algebra = A1\n"
                "[projection]\n"
                "row = 1 1\n");
    auto spec = read_embedding_file(f.path);
    CHECK(spec.name == "diag-test");
    REQUIRE(spec.ambient.components.size() == 2);
    CHECK(spec.ambient.components[0].alg.name() == "A1");
    CHECK(spec.ambient.components[1].level == 2);
    REQUIRE(spec.sub.size() == 1);
    REQUIRE(spec.projection.has_value());
    CHECK(spec.projection->size() == 1);
    CHECK((*spec.projection)[0] == ratvec{1, 1});
    CHECK(classify_inclusion(spec).coset_central_charge == rat(7, 10));

    temp_file g("io_decl.emb",
                "[ambient]\n"
                "algebra = A2\n"
                "levels = 1\n"
                "[sub.1]\n"
                "algebra = A1\n"
                "[branching]\n"
                "labels = 2, mult = 1, inside = true\n"
                "labels = 4, mult = 1, inside = false\n");
    auto decl = read_embedding_file(g.path);
    CHECK(decl.name == g.path); // defaults to the file path
    REQUIRE(decl.declared.has_value());
    CHECK(decl.declared->components.size() == 2);
    CHECK(decl.declared->components[0].labels == std::vector<std::vector<long>>{{2}});
    CHECK(decl.declared->components[0].inside);
    CHECK(classify_inclusion(decl).coset_central_charge == rat(0));
}

TEST_CASE("embedding file errors") {
    temp_file bad_key("io_badkey.emb",
                      "[ambient]\n"
                      "algebra = A1\n"
                      "levels = 1\n"
                      "flavour = up\n"
                      "[sub.1]\n"
                      "algebra = A1\n"
                      "[projection]\n"
                      "row = 1\n");
    CHECK_THROWS_AS(read_embedding_file(bad_key.path), parse_error);

    temp_file bad_row("io_badrow.emb",
                      "[ambient]\n"
                      "algebra = A2\n"
                      "levels = 1\n"
                      "[sub.1]\n"
                      "algebra = A1\n"
                      "[projection]\n"
                      "row = 2 2 2\n");
    CHECK_THROWS_AS(read_embedding_file(bad_row.path), parse_error);

    temp_file no_data("io_nodata.emb",
                      "[ambient]\n"
                      "algebra = A1\n"
                      "levels = 1\n"
                      "[sub.1]\n"
                      "algebra = A1\n");
    CHECK_THROWS_AS(read_embedding_file(no_data.path), parse_error);

    temp_file bad_section("io_badsec.emb",
                          "[ambient]\n"
                          "algebra = A1\n"
                          "levels = 1\n"
                          "[extras]\n"
                          "x = 1\n");
    CHECK_THROWS_AS(read_embedding_file(bad_section.path), parse_error);

    temp_file level_gap("io_levels.emb",
                        "[ambient]\n"
                        "algebra = A1, A1\n"
                        "levels = 1\n"
                        "[sub.1]\n"
                        "algebra = A1\n"
                        "[projection]\n"
                        "row = 1 1\n");
    CHECK_THROWS_AS(read_embedding_file(level_gap.path), parse_error);

    CHECK_THROWS_AS(read_embedding_file("/nonexistent/io.emb"), parse_error);
}

TEST_CASE("branching claim files") {
    temp_file f("io_claim.branch",
                "[product]\n"
                "k1 = 1\n"
                "l1 = 0\n"
                "k2 = 2\n"
                "l2 = 0\n"
                "[rows]\n"
                "target = 0 ; coset = (0, 1)\n"
                "target = 2 ; coset = (3/5, 1), (21/5, 2)\n");
    auto claim = read_branching_claim(f.path);
    CHECK(claim.k1 == 1);
    CHECK(claim.k2 == 2);
    REQUIRE(claim.rows.size() == 2);
    CHECK(claim.rows[0].target == 0);
    CHECK(claim.rows[0].coset == std::vector<std::pair<rat, long>>{{0, 1}});
    REQUIRE(claim.rows[1].coset.size() == 2);
    CHECK(claim.rows[1].coset[1].first == rat(21, 5));
    CHECK(claim.rows[1].coset[1].second == 2);

    temp_file missing("io_missing.branch",
                      "[rows]\n"
                      "target = 0 ; coset = (0, 1)\n");
    CHECK_THROWS_AS(read_branching_claim(missing.path), parse_error);

    temp_file badrow("io_badrow.branch",
                     "[product]\n"
                     "k1 = 1\n"
                     "k2 = 1\n"
                     "[rows]\n"
                     "target = 0\n");
    CHECK_THROWS_AS(read_branching_claim(badrow.path), parse_error);
}

TEST_CASE("coupling table files") {
    temp_file f("io_pairs.table",
                "# two bundles\n"
                "vacuum A: (vac, h=0, d=1.0) + (top, h=2, d=1.0)*2 | C: (one, h=0, d=1.0)\n"
                "A: (w, h=9/11, d=2.682507) | C: (x, h=13/11, d=1.5) + (y, h=35/11, d=2.5)\n");
    auto rows = read_coupling_table(f.path);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].vacuum);
    REQUIRE(rows[0].a_side.size() == 2);
    CHECK(rows[0].a_side[1].label == "top");
    CHECK(rows[0].a_side[1].mult == 2);
    CHECK(rows[0].a_side[1].h == 2);
    CHECK(!rows[1].vacuum);
    CHECK(rows[1].a_side[0].h == rat(9, 11));
    CHECK(rows[1].c_side[1].d == doctest::Approx(2.5));

    temp_file stray("io_stray.table", "A: (a, h=0, d=1) junk | C: (c, h=0, d=1)\n");
    CHECK_THROWS_AS(read_coupling_table(stray.path), parse_error);

    temp_file nosplit("io_nosplit.table", "A: (a, h=0, d=1)\n");
    CHECK_THROWS_AS(read_coupling_table(nosplit.path), parse_error);

    temp_file badfield("io_badfield.table", "A: (a, h=0, q=1) | C: (c, h=0, d=1)\n");
    CHECK_THROWS_AS(read_coupling_table(badfield.path), parse_error);
}

TEST_CASE("rendering") {
    CHECK(format_float(1.0) == "1.000000");
    CHECK(format_float(3.7320508075688772) == "3.732051");
    CHECK(format_float(-0.5) == "-0.500000");

    output_table t;
    t.header = {"r", "value"};
    t.rows = {{"1", "alpha"}, {"22", "b,c"}};
    std::string plain = render_table(t, false);
    CHECK(plain.find("\033[") == std::string::npos);
    CHECK(plain.find("r   value") == 0);
    CHECK(plain.find("--") != std::string::npos);
    std::string color = render_table(t, true);
    CHECK(color.find("\033[1m") != std::string::npos);

    std::string csv = render_csv(t);
    CHECK(csv == "r,value\n1,alpha\n22,\"b,c\"\n");

    output_table q;
    q.header = {"a"};
    q.rows = {{"say \"hi\""}};
    CHECK(render_csv(q) == "a\n\"say \"\"hi\"\"\"\n");
}
