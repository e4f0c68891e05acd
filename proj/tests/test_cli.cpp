// End-to-end tests for the `bimat` executable: every subcommand, the JSON
// documents it emits, and the exit-code contract (0 = success, 1 = I/O or
// parse error, 2 = precondition violation, 3 = alarm).
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "bimat/json_io.hpp"

using bimat::json;

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run_shell(const std::string& cmdline) {
    FILE* pipe = popen(cmdline.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

CliResult run_cli(const std::string& args) {
    return run_shell(std::string(BIMAT_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::string fx(const std::string& name) {
    return std::string(BIMAT_FIXTURE_DIR) + "/" + name;
}

size_t count_of(const std::string& hay, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("cli validate") {
    CliResult bad = run_cli("validate " + fx("no_1x1.json"));
    CHECK(bad.code == 0);  // an invalid instance is data, not an error
    json jb = bimat::parse_json_text(bad.out);
    CHECK(jb["valid"] == false);
    CHECK(jb["witness"].get<std::string>() != "");

    CliResult good = run_cli("validate " + fx("matrix_2x2_ones_q.json"));
    CHECK(good.code == 0);
    CHECK(bimat::parse_json_text(good.out)["valid"] == true);
}

TEST_CASE("cli from-matrix and from-relation") {
    CliResult m = run_cli("from-matrix " + fx("matrix_2x2_ones_q.json"));
    CHECK(m.code == 0);
    json jm = bimat::parse_json_text(m.out);
    CHECK(jm["view"] == "minors");
    CHECK(jm["minors"].size() == 5);  // 1 empty + 4 nonzero entries + no 2x2

    CliResult r = run_cli("from-relation " + fx("relation_ef.json"));
    CHECK(r.code == 0);
    CHECK(bimat::parse_json_text(r.out)["minors"].size() == 4);
}

TEST_CASE("cli bond") {
    CliResult b = run_cli("bond " + fx("u23.json") + " --basis 0,1");
    CHECK(b.code == 0);
    CHECK(bimat::parse_json_text(b.out)["minors"].size() == 8);

    CHECK(run_cli("bond " + fx("u23.json") + " --basis 0,zz").code == 2);
}

TEST_CASE("cli convert round trips through every view") {
    std::string src = fx("matrix_2x2_ones_q.json");
    bimat::Bimatroid direct =
        bimat::bimatroid_from_json(bimat::parse_json_text(run_cli("from-matrix " + src).out));

    for (std::string view : {"minors", "extended", "rank-table", "rectangles"}) {
        CliResult c = run_cli("convert " + src + " --view " + view);
        CAPTURE(view);
        CHECK(c.code == 0);
        CHECK(bimat::bimatroid_from_json(bimat::parse_json_text(c.out)) == direct);
    }
    CliResult h = run_cli("convert " + src + " --view rectangles --orientation horizontal");
    CHECK(h.code == 0);
    json jh = bimat::parse_json_text(h.out);
    CHECK(jh["view"] == "rectangles-horizontal");
    CHECK(bimat::bimatroid_from_json(jh) == direct);

    // Piped through a file: convert then validate the converted document.
    std::string tmp = "/tmp/bimat_cli_rank_table.json";
    CliResult piped = run_shell(std::string(BIMAT_CLI_PATH) + " convert " + src +
                                " --view rank-table > " + tmp + " && " + BIMAT_CLI_PATH +
                                " validate " + tmp + " 2>/dev/null");
    CHECK(piped.code == 0);
    CHECK(bimat::parse_json_text(piped.out)["valid"] == true);

    CHECK(run_cli("convert " + src + " --view bogus").code == 1);
}

TEST_CASE("cli product and frenk-check") {
    CliResult p = run_cli("product " + fx("relation_ef.json") + " " + fx("relation_fg.json"));
    CHECK(p.code == 0);
    json jp = bimat::parse_json_text(p.out);
    CHECK(jp["rows"] == json::array({"e0", "e1"}));
    CHECK(jp["cols"] == json::array({"g0"}));
    CHECK(jp["minors"].size() == 2);

    CliResult f =
        run_cli("frenk-check " + fx("relation_ef.json") + " " + fx("relation_fg.json"));
    CHECK(f.code == 0);
    CHECK(bimat::parse_json_text(f.out)["agree"] == true);

    // Mismatched boundary labels are a precondition violation.
    CHECK(run_cli("product " + fx("relation_fg.json") + " " + fx("relation_ef.json")).code == 2);
}

TEST_CASE("cli cauchy-binet") {
    CliResult c =
        run_cli("cauchy-binet " + fx("matrix_cancel_a.json") + " " + fx("matrix_cancel_b.json"));
    CHECK(c.code == 0);
    json jc = bimat::parse_json_text(c.out);
    CHECK(jc["inclusion"] == true);
    CHECK(jc["equality"] == false);  // the product minor cancels to zero

    CHECK(run_cli("cauchy-binet " + fx("matrix_cancel_a.json") + " " +
                  fx("matrix_2x2_id_f2.json"))
              .code == 2);
}

TEST_CASE("cli morphism") {
    CliResult ok = run_cli("morphism check " + fx("morphism_u23_u12.json"));
    CHECK(ok.code == 0);
    json jok = bimat::parse_json_text(ok.out);
    CHECK(jok["is_morphism"] == true);
    CHECK(jok["agree"] == true);

    CliResult bad = run_cli("morphism check " + fx("morphism_bad_u12_u22.json"));
    CHECK(bad.code == 0);  // a non-morphism is data; the predicates still agree
    json jbad = bimat::parse_json_text(bad.out);
    CHECK(jbad["is_morphism"] == false);
    CHECK(jbad["agree"] == true);

    CliResult bases = run_cli("morphism bases " + fx("morphism_u23_u12.json"));
    CHECK(bases.code == 0);
    json jb = bimat::parse_json_text(bases.out);
    CHECK(jb["rank"] == 2);
    CHECK(jb["nullity"] == 1);
    CHECK(jb["counts"] == json::array({0, 3, 3}));
    CHECK(jb["bases"].size() == 6);

    CliResult tilde = run_cli("morphism tilde " + fx("morphism_u23_const.json"));
    CHECK(tilde.code == 0);
    json jt = bimat::parse_json_text(tilde.out);
    CHECK(jt["valid"] == true);
    CHECK(jt["matroid"]["bases"].size() == 10);

    CHECK(run_cli("morphism bases " + fx("morphism_bad_u12_u22.json")).code == 2);
}

TEST_CASE("cli poly") {
    CliResult w = run_cli("poly weak-basis " + fx("morphism_u23_const.json") + " --alpha 2");
    CHECK(w.code == 0);
    json jw = bimat::parse_json_text(w.out);
    CHECK(jw["terms"].size() == 7);

    // Default alpha is the nullity, which is also 2 here.
    CliResult wd = run_cli("poly weak-basis " + fx("morphism_u23_const.json"));
    CHECK(wd.out == w.out);

    CHECK(run_cli("poly weak-basis " + fx("morphism_u23_const.json") + " --alpha 1").code == 2);

    CliResult b = run_cli("poly basis " + fx("u23.json"));
    CHECK(bimat::parse_json_text(b.out)["terms"].size() == 3);

    CliResult rm = run_cli("poly regular-minor " + fx("matrix_2x2_ones_q.json"));
    CHECK(bimat::parse_json_text(rm.out)["terms"].size() == 5);

    CliResult ind = run_cli("poly independent " + fx("u23.json") + " --z w");
    json ji = bimat::parse_json_text(ind.out);
    CHECK(ji["terms"].size() == 7);  // 1 + 3 + 3 independent sets
    bool has_w = false;
    for (const auto& v : ji["vars"]) has_w = has_w || v == "w";
    CHECK(has_w);
}

TEST_CASE("cli check-lorentzian") {
    CliResult strict = run_cli("check-lorentzian " + fx("poly_x2_4xy_y2.json"));
    CHECK(strict.code == 0);
    json js = bimat::parse_json_text(strict.out);
    CHECK(js["strict"] == true);
    CHECK(js["lorentzian"] == true);
    CHECK(js["witnesses"].empty());

    json jn = bimat::parse_json_text(run_cli("check-lorentzian " + fx("poly_x2_y2.json")).out);
    CHECK(jn["strict"] == false);
    CHECK(jn["lorentzian"] == false);
    REQUIRE(jn["witnesses"].size() == 1);
    CHECK(jn["witnesses"][0].get<std::string>().find("support not M-convex")
          != std::string::npos);

    json jxy = bimat::parse_json_text(run_cli("check-lorentzian " + fx("poly_xy.json")).out);
    CHECK(jxy["strict"] == false);
    CHECK(jxy["lorentzian"] == true);
}

TEST_CASE("cli theorem suites are deterministic") {
    std::string args = "theorem A --random 10 --seed 42 --max-rows 4 --max-cols 4 --field Fp";
    CliResult first = run_cli(args);
    CHECK(first.code == 0);
    json j = bimat::parse_json_text(first.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 10);
    for (size_t i = 0; i < j.size(); ++i) {
        CHECK(j[i]["theorem"] == "A");
        CHECK(j[i]["seed"] == 42);
        CHECK(j[i]["verdict"] == true);
        CHECK(j[i]["instance"]["trial"] == i);
    }

    CHECK(run_cli(args).out == first.out);                  // same bytes on rerun
    CHECK(run_cli(args + " --jobs 3").out == first.out);    // and in parallel
}

TEST_CASE("cli theorem on file instances") {
    CliResult bad = run_cli("theorem A " + fx("no_1x1.json"));
    CHECK(bad.code == 3);  // a failed verdict is an alarm
    json jb = bimat::parse_json_text(bad.out);
    REQUIRE(jb.size() == 1);
    CHECK(jb[0]["verdict"] == false);

    CliResult mason = run_cli("theorem mason " + fx("u23.json"));
    CHECK(mason.code == 0);
    json jm = bimat::parse_json_text(mason.out);
    CHECK(jm[0]["theorem"] == "mason");
    CHECK(jm[0]["verdict"] == true);

    CliResult el = run_cli("theorem e-lorentzian " + fx("morphism_u23_const.json"));
    CHECK(el.code == 0);
    json je = bimat::parse_json_text(el.out);
    REQUIRE(je.size() == 1);  // nullity and rank coincide at 2
    CHECK(je[0]["checks"][0]["part"] == "alpha=2");

    CliResult pipe = run_cli("theorem c-pipeline " + fx("morphism_u23_const.json"));
    CHECK(pipe.code == 0);
    CHECK(bimat::parse_json_text(pipe.out)[0]["verdict"] == true);
}

TEST_CASE("cli theorem random morphism trials") {
    CliResult c = run_cli("theorem C --random 3 --seed 7");
    CHECK(c.code == 0);
    json jc = bimat::parse_json_text(c.out);
    REQUIRE(jc.size() == 3);
    for (const auto& rep : jc) {
        CHECK(rep["theorem"] == "C");
        CHECK(rep["verdict"] == true);
    }
}

TEST_CASE("cli report") {
    std::string tmp = "/tmp/bimat_cli_reports.json";
    CliResult gen = run_shell(std::string(BIMAT_CLI_PATH) +
                              " theorem A --random 3 --seed 1 > " + tmp + " 2>/dev/null");
    REQUIRE(gen.code == 0);

    CliResult rj = run_cli("report " + tmp);
    CHECK(rj.code == 0);
    json jr = bimat::parse_json_text(rj.out);
    REQUIRE(jr.is_array());
    REQUIRE(jr.size() == 3);
    size_t total_checks = 0;
    for (const auto& rep : jr) total_checks += rep["checks"].size();

    CliResult rc = run_cli("report " + tmp + " --format csv");
    CHECK(rc.code == 0);
    CHECK(count_of(rc.out, "theorem,seed,part,k,lhs,rhs,holds,verdict\n") == 1);
    CHECK(count_of(rc.out, "\n") == 1 + total_checks);
    CHECK(rc.out.find("A,1,") != std::string::npos);
}

TEST_CASE("cli error exit codes") {
    CHECK(run_cli("validate /nonexistent/nowhere.json").code == 1);
    CHECK(run_cli("bogus-subcommand").code == 1);
    CHECK(run_cli("theorem C").code == 1);  // neither an instance nor --random
    CHECK(run_cli("check-lorentzian " + fx("u23.json")).code == 1);  // not a polynomial
    CHECK(run_cli("--help").code == 0);
}
