#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "quadpoint/json_io.hpp"

// Drives the installed binary through a shell, captures streams and exit code.

using namespace quadpoint;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "quadpoint_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

fs::path write_json(const std::string& name, const json& doc) {
    return write_file(name, doc.dump());
}

CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    const fs::path in = write_file("stdin.txt", stdin_data);
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd = std::string(QUADPOINT_CLI_PATH) + " " + args + " < " +
                            in.string() + " > " + out.string() + " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    return CliResult{WEXITSTATUS(raw), slurp(out), slurp(err)};
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("standard subcommand emits canonical embedding data") {
    const CliResult r = run_cli("standard --genus 1");
    REQUIRE(r.exit_code == 0);
    CHECK(embedding_from_json(json::parse(r.out)) == standard_embedding(1));

    const CliResult again = run_cli("standard --genus 1");
    CHECK(again.out == r.out);
    CHECK(r.err.empty());

    // A genus beyond the configured ambient cap is rejected as bad input.
    CHECK(run_cli("standard --genus 100000").exit_code == 2);
}

TEST_CASE("invariant of embedding pairs") {
    const fs::path std1 = write_json("std1.json", to_json(standard_embedding(1)));
    const fs::path swapped = write_json(
        "swapped.json",
        json{{"genus", 1}, {"A0", {"01"}}, {"A1", {"10"}}, {"orientation", "+"}});
    const fs::path sphere = write_json("sphere.json", to_json(standard_embedding(0)));
    const fs::path sphere_neg = write_json(
        "sphere_neg.json",
        json{{"genus", 0}, {"A0", json::array()}, {"A1", json::array()}, {"orientation", "-"}});

    SECTION("identical pair") {
        const CliResult r = run_cli("q --left " + std1.string() + " --right " + std1.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out == "0\n");
    }
    SECTION("sphere orientation flip") {
        const CliResult r =
            run_cli("q --left " + sphere.string() + " --right " + sphere_neg.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1\n");
    }
    SECTION("torus kernel swap") {
        const CliResult r = run_cli("q --left " + std1.string() + " --right " + swapped.string());
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1\n");
    }
    SECTION("json output wrapper") {
        const CliResult r = run_cli("q --left " + sphere.string() + " --right " +
                                    sphere_neg.string() + " --output json");
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.out) == json{{"value", 1}});
    }
    SECTION("stdin placeholder") {
        const CliResult r = run_cli("q --left - --right " + swapped.string(),
                                    to_json(standard_embedding(1)).dump());
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1\n");
    }
    SECTION("non-homotopic pair is a domain error") {
        const fs::path tilted = write_json(
            "tilted.json",
            json{{"genus", 1}, {"A0", {"10"}}, {"A1", {"11"}}, {"orientation", "+"}});
        const CliResult r = run_cli("q --left " + std1.string() + " --right " + tilted.string());
        CHECK(r.exit_code == 3);
        CHECK(starts_with(r.err, "not-regularly-homotopic"));
        CHECK(r.out.empty());
    }
    SECTION("malformed json is an input error") {
        const fs::path broken = write_file("broken.json", "{\"genus\": 1,");
        const CliResult r = run_cli("q --left " + broken.string() + " --right " + std1.string());
        CHECK(r.exit_code == 2);
        CHECK(starts_with(r.err, "parse-error"));
    }
    SECTION("invalid embedding data is an input error") {
        const fs::path bad = write_json(
            "bad.json",
            json{{"genus", 1}, {"A0", {"10"}}, {"A1", {"10"}}, {"orientation", "+"}});
        const CliResult r = run_cli("q --left " + bad.string() + " --right " + std1.string());
        CHECK(r.exit_code == 2);
        CHECK(starts_with(r.err, "invalid-embedding-data"));
    }
    SECTION("missing file is an input error") {
        const CliResult r =
            run_cli("q --left " + (work_dir() / "absent.json").string() + " --right " +
                    std1.string());
        CHECK(r.exit_code == 2);
        CHECK(starts_with(r.err, "parse-error"));
    }
}

TEST_CASE("system invariant subcommand") {
    const json sphere = to_json(standard_embedding(0));
    json sphere_neg = sphere;
    sphere_neg["orientation"] = "-";
    const json torus = to_json(standard_embedding(1));
    const json swapped{{"genus", 1}, {"A0", {"01"}}, {"A1", {"10"}}, {"orientation", "+"}};

    const fs::path left = write_json("sys_left.json", json{{"components", {sphere, torus}}});
    const fs::path right =
        write_json("sys_right.json", json{{"components", {sphere_neg, swapped}}});
    const CliResult r = run_cli("q-system --left " + left.string() + " --right " + right.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    const fs::path shorter = write_json("sys_short.json", json{{"components", {sphere}}});
    const CliResult mismatch =
        run_cli("q-system --left " + left.string() + " --right " + shorter.string());
    CHECK(mismatch.exit_code == 3);
    CHECK(starts_with(mismatch.err, "component-count-mismatch"));
}

TEST_CASE("rank parity subcommand") {
    const fs::path form = write_json("form1.json", to_json(QuadForm::standard(1)));
    const fs::path identity = write_json("id2.json", json({"10", "01"}));
    const fs::path swap = write_json("swap2.json", json({"01", "10"}));
    const fs::path shear = write_json("shear2.json", json({"10", "11"}));

    CHECK(run_cli("psi --form " + form.string() + " --map " + identity.string()).out == "0\n");
    CHECK(run_cli("psi --form " + form.string() + " --map " + swap.string()).out == "1\n");

    const CliResult r = run_cli("psi --form " + form.string() + " --map " + shear.string());
    CHECK(r.exit_code == 3);
    CHECK(starts_with(r.err, "not-orthogonal"));
}

TEST_CASE("decomposition pair subcommand") {
    const json form = to_json(QuadForm::standard(1));
    const fs::path left = write_json("tsd_std.json", json{{"form", form}, {"A", {"10"}}, {"B", {"01"}}});
    const fs::path right = write_json("tsd_swp.json", json{{"form", form}, {"A", {"01"}}, {"B", {"10"}}});

    CHECK(run_cli("psi-hat --left " + left.string() + " --right " + left.string()).out == "0\n");
    const CliResult plain = run_cli("psi-hat --left " + left.string() + " --right " + right.string());
    CHECK(plain.exit_code == 0);
    CHECK(plain.out == "1\n");

    const CliResult recipe =
        run_cli("psi-hat --left " + left.string() + " --right " + right.string() + " --recipe");
    CHECK(recipe.out == "1\nrecipe 1\n");

    const CliResult as_json = run_cli("psi-hat --left " + left.string() + " --right " +
                                      right.string() + " --recipe --output json");
    CHECK(json::parse(as_json.out) == json{{"value", 1}, {"recipe", 1}});

    const fs::path other_form = write_json(
        "tsd_other.json",
        json{{"form", json{{"dim", 2}, {"gram", {"01", "10"}}, {"diag", "01"}}},
             {"A", {"10"}},
             {"B", {"11"}}});
    const CliResult mismatch =
        run_cli("psi-hat --left " + left.string() + " --right " + other_form.string());
    CHECK(mismatch.exit_code == 3);
    CHECK(starts_with(mismatch.err, "form-mismatch"));
}

TEST_CASE("diffeomorphism subcommands") {
    const fs::path embedding = write_json("emb1.json", to_json(standard_embedding(1)));
    const fs::path twist = write_json(
        "twist.json", json{{"genus", 1}, {"h_star", {"01", "10"}}, {"eps_h", 1}});

    const CliResult q = run_cli("q-diffeo --embedding " + embedding.string() + " --map " +
                                twist.string());
    CHECK(q.exit_code == 0);
    CHECK(q.out == "1\n");

    const CliResult pulled = run_cli("pullback --embedding " + embedding.string() + " --map " +
                                     twist.string());
    REQUIRE(pulled.exit_code == 0);
    const EmbeddingData expected(1, Subspace::span_of(2, {BitVec::from_string("01")}),
                                 Subspace::span_of(2, {BitVec::from_string("10")}),
                                 Orientation::negative);
    CHECK(embedding_from_json(json::parse(pulled.out)) == expected);

    const fs::path non_orth = write_json(
        "non_orth.json", json{{"genus", 1}, {"h_star", {"10", "11"}}, {"eps_h", 0}});
    const CliResult bad = run_cli("q-diffeo --embedding " + embedding.string() + " --map " +
                                  non_orth.string());
    CHECK(bad.exit_code == 3);
    CHECK(starts_with(bad.err, "not-orthogonal"));
    // The same non-orthogonal map is fine for pulling back.
    CHECK(run_cli("pullback --embedding " + embedding.string() + " --map " +
                  non_orth.string()).exit_code == 0);
}

TEST_CASE("completion subcommand") {
    const fs::path form = write_json("form2.json", to_json(QuadForm::standard(2)));
    const fs::path half = write_json("half.json", json({"1001", "0110"}));
    const CliResult r = run_cli("complete --form " + form.string() + " --subspace " + half.string());
    REQUIRE(r.exit_code == 0);
    const Tsd t = tsd_from_json(json::parse(r.out));
    CHECK(t.form() == QuadForm::standard(2));
    CHECK(t.a() == Subspace::span_of(4, {BitVec::from_string("1001"),
                                         BitVec::from_string("0110")}));

    const fs::path uneven = write_json("uneven.json", json({"1000"}));
    const CliResult wrong =
        run_cli("complete --form " + form.string() + " --subspace " + uneven.string());
    CHECK(wrong.exit_code == 3);
    CHECK(starts_with(wrong.err, "wrong-dimension"));

    const fs::path mixed = write_json("mixed.json", json({"1010", "0100"}));
    const CliResult not_singular =
        run_cli("complete --form " + form.string() + " --subspace " + mixed.string());
    CHECK(not_singular.exit_code == 3);
    CHECK(starts_with(not_singular.err, "not-totally-singular"));
}

TEST_CASE("validation subcommand") {
    const fs::path good = write_json("good.json", to_json(standard_embedding(2)));
    const CliResult ok = run_cli("check --embedding " + good.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "valid\n");
    const CliResult ok_json = run_cli("check --embedding " + good.string() + " --output json");
    CHECK(json::parse(ok_json.out) == json{{"valid", true}});

    const fs::path bad = write_json(
        "bad_check.json",
        json{{"genus", 1}, {"A0", {"10"}}, {"A1", {"10"}}, {"orientation", "+"}});
    const CliResult rejected = run_cli("check --embedding " + bad.string());
    CHECK(rejected.exit_code == 2);
    CHECK(starts_with(rejected.err, "invalid-embedding-data"));
}

TEST_CASE("oracle subcommand") {
    const CliResult r = run_cli("oracle --dim 2");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out) == to_json(oracle::verify_section2(QuadForm::standard(1))));

    const CliResult big = run_cli("oracle --dim 4");
    REQUIRE(big.exit_code == 0);
    const json rep = json::parse(big.out);
    CHECK(rep["group_order"] == 72);
    CHECK(rep["violations"] == json::array());

    CHECK(run_cli("oracle --dim 3").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
    const CliResult missing = run_cli("q --left only.json");
    CHECK(missing.exit_code == 2);
    CHECK(starts_with(missing.err, "usage-error"));
}
