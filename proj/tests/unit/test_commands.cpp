#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "twistlab/commands.hpp"
#include "twistlab/io.hpp"

using namespace twistlab;
using nlohmann::json;

namespace {

std::string data_path(const char* name) { return std::string(TWISTLAB_TEST_DATA) + "/" + name; }

RunConfig instance_config(const std::string& name, int n_max = 6) {
    RunConfig c;
    c.instance = name;
    c.n_max = n_max;
    return c;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("run configuration checks and the t grid") {
        RunConfig c = instance_config("zigzag3");
        CHECK_NOTHROW(c.check());
        CHECK(c.grid() == std::vector<double>{-1, -0.5, 0, 0.5, 1});
        c.tstep = 0.1;
        const auto g = c.grid();
        CHECK(g.size() == 21);
        CHECK(g[10] == 0.0);
        CHECK(g.back() == 1.0);
        RunConfig bad = c;
        bad.tstep = 0;
        CHECK_THROWS_AS(bad.check(), ConfigError);
        bad = c;
        bad.tmin = 2;
        CHECK_THROWS_AS(bad.check(), ConfigError);
        bad = c;
        bad.n_max = 3;
        CHECK_THROWS_AS(bad.check(), ConfigError);
        bad = c;
        bad.tail_k = 1;
        CHECK_THROWS_AS(bad.check(), ConfigError);
        bad = c;
        bad.algebra_path = "x.json";
        CHECK_THROWS_AS(bad.check(), ConfigError);
        bad = c;
        bad.field = 'z';
        CHECK_THROWS_AS(bad.check(), ConfigError);
    }

    TEST_CASE("resolve: model, witnesses, errors") {
        const Setup z = resolve(instance_config("zigzag3"));
        REQUIRE(z.model);
        CHECK(z.model->kind() == TwistKind::spherical);
        CHECK(z.model->d() == 2);
        CHECK(z.kernel_witness == std::optional<std::string>("P3"));
        CHECK(z.split_generator);
        CHECK(z.word == "stwist:P1");
        RunConfig shifted = instance_config("zigzag3");
        shifted.functor = "stwist:P1;shift:1";
        CHECK_FALSE(resolve(shifted).model);
        const Setup t = resolve(instance_config("truncated2"));
        REQUIRE(t.model);
        CHECK(t.model->kind() == TwistKind::p_object);
        CHECK_FALSE(t.kernel_witness);
        CHECK_THROWS_AS(resolve(instance_config("nope")), ConfigError);
        RunConfig badword = instance_config("zigzag3");
        badword.functor = "stwist:P7";
        CHECK_THROWS_AS(resolve(badword), ConfigError);

        RunConfig file;
        file.algebra_path = data_path("malformed.json");
        file.functor = "stwist:P1";
        CHECK_THROWS_AS(resolve(file), ConfigError);
        file.algebra_path = data_path("zigzag3_broken.json");
        CHECK_THROWS_AS(resolve(file), ConfigError);
    }

    TEST_CASE("an algebra file behaves like the instance") {
        const auto path = std::filesystem::temp_directory_path() / "twistlab_cli_zz3.json";
        std::ostringstream emitted, err;
        REQUIRE(cmd_zoo_emit("zigzag3", emitted, err) == 0);
        write_text_file(path.string(), emitted.str());
        RunConfig file;
        file.algebra_path = path.string();
        file.n_max = 5;
        CHECK_THROWS_AS(resolve(file), ConfigError);  // no functor
        file.functor = "stwist:P1";
        const EntropyReport a = run_entropy(file);
        const EntropyReport b = run_entropy(instance_config("zigzag3", 5));
        CHECK(entropy_csv(a) == entropy_csv(b));
        std::filesystem::remove(path);
    }

    TEST_CASE("entropy report and CSV layout") {
        RunConfig c = instance_config("lambda2", 6);
        const EntropyReport r = run_entropy(c);
        CHECK_FALSE(r.incomplete);
        REQUIRE(r.summaries.size() == 5);
        for (const auto& s : r.summaries) {
            REQUIRE(s.estimate);
            CHECK(s.estimate->value == doctest::Approx(-s.t).epsilon(1e-9));
            CHECK(s.verdict == Verdict::within_envelope);
            REQUIRE(s.cert_upper);
            CHECK(*s.cert_upper >= s.estimate->value - 1e-12);
        }
        const auto lines = lines_of(entropy_csv(r));
        REQUIRE(lines.size() == 1 + 5 * 7);
        CHECK(lines[0] == "t,n,eps,h_tailfit,h_fekete,cert_upper,lower_bound,upper_bound,verdict");
        CHECK(lines[1].rfind("-1,0,", 0) == 0);
        CHECK(lines[7].find("within-envelope") != std::string::npos);
        CHECK(lines[2].find("within-envelope") == std::string::npos);
        CHECK(entropy_svg(r).find("<svg") != std::string::npos);
    }

    TEST_CASE("cmd_entropy writes CSV to stdout and reports the envelope") {
        RunConfig c = instance_config("lambda2", 6);
        c.csv_path = "-";
        std::ostringstream out, err;
        CHECK(cmd_entropy(c, out, err) == 0);
        CHECK(out.str().rfind("t,n,eps", 0) == 0);
        // short zigzag orbit: h_0 is still 0.087 at n = 5, outside 0 +- 0.05, and the exit code says so
        c = instance_config("zigzag3", 5);
        c.csv_path = "-";
        std::ostringstream zout, zerr;
        CHECK(cmd_entropy(c, zout, zerr) == 1);
        CHECK(zout.str().find("\n0,5,13,") != std::string::npos);
        CHECK(zout.str().find("outside-envelope") != std::string::npos);
        CHECK(zerr.str().find("kernel witness P3") != std::string::npos);
        c.instance = "missing";
        std::ostringstream out2, err2;
        CHECK(cmd_entropy(c, out2, err2) == 2);
    }

    TEST_CASE("cmd_validate exit codes") {
        std::ostringstream out, err;
        CHECK(cmd_validate(data_path("malformed.json"), out, err) == 2);
        CHECK(cmd_validate(data_path("zigzag3_broken.json"), out, err) == 1);
        CHECK(out.str().find("associativity") != std::string::npos);
        const auto path = std::filesystem::temp_directory_path() / "twistlab_cli_valid.json";
        std::ostringstream emitted;
        REQUIRE(cmd_zoo_emit("truncated2", emitted, err) == 0);
        write_text_file(path.string(), emitted.str());
        std::ostringstream ok;
        CHECK(cmd_validate(path.string(), ok, err) == 0);
        CHECK(ok.str().rfind("valid", 0) == 0);
        std::filesystem::remove(path);
    }

    TEST_CASE("zoo list and emit") {
        std::ostringstream list;
        CHECK(cmd_zoo_list(list) == 0);
        for (const auto& inst : catalog()) CHECK(list.str().find(inst.name) != std::string::npos);
        std::ostringstream emitted, err;
        CHECK(cmd_zoo_emit("zigzag4", emitted, err) == 0);
        CHECK(parse_algebra(emitted.str()) == make_zigzag(4));
        std::ostringstream none;
        CHECK(cmd_zoo_emit("zigzag99", none, err) == 2);
    }

    TEST_CASE("verify reports") {
        const VerifyReport l2 = run_verify("lambda2", 8);
        CHECK_FALSE(l2.any_fail());
        const std::string text = format_verify(l2);
        CHECK(text.find("pass  spherical object") != std::string::npos);
        CHECK(text.find("consistency experiment") != std::string::npos);
        CHECK(text.find("summary:") != std::string::npos);
        // Lambda_1: no eigen witness, so the Gromov-type line cannot be claimed
        const VerifyReport l1 = run_verify("lambda1", 8);
        bool seen = false;
        for (const auto& line : l1.lines)
            if (line.name.rfind("Gromov-type", 0) == 0) {
                seen = true;
                CHECK(line.status == CheckStatus::hypothesis_not_met);
            }
        CHECK(seen);
        std::ostringstream out, err;
        CHECK(cmd_verify("nope", 8, out, err) == 2);
    }

    TEST_CASE("ktheory report") {
        const json doc = json::parse(ktheory_report("zigzag3", "", 6));
        CHECK(doc["charpoly"] == "x^3 - x^2 - x + 1");
        CHECK(doc["spectral_radius"].get<double>() == 1.0);
        CHECK(doc["radius_exact"] == true);
        CHECK(doc["functor_matrix"] == json::parse("[[-1, 1, 0], [0, 1, 0], [0, 0, 1]]"));
        CHECK(doc["gy_check"]["label"] == "consistency experiment");
        CHECK(doc["numerical_group"]["rank"] == 3);
        CHECK_FALSE(doc["cotwist_eigen_witness"].is_null());
        const json l1 = json::parse(ktheory_report("lambda1", "", 6));
        CHECK(l1["cotwist_eigen_witness"].is_null());
        CHECK(l1["gy_check"]["numerical_group_trivial"] == true);
        std::ostringstream out, err;
        CHECK(cmd_ktheory("zigzag3", "stwist:P9", out, err) == 2);
    }
}
