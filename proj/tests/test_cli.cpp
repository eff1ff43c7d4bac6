#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "springer/cli.hpp"

using namespace springer;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("presentation reports") {
    Run r = run({"presentation", "--partition", "2,1", "--flavor", "ktheory"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["command"] == "presentation");
    const json& e = j["results"][0];
    CHECK(e["partition"] == json({2, 1}));
    CHECK(e["dual"] == json({2, 1}));
    CHECK(e["p_table"] == json({0, 1, 3}));
    CHECK(e["flavors"][0]["rank"] == 3);
    CHECK(e["flavors"][0]["generators"].size() == 6);
    CHECK(e["flavors"][0]["generators"][0].contains("subset"));

    json one = run({"presentation", "-p", "3"}).report();
    for (const auto& f : one["results"][0]["flavors"]) {
        CHECK(f["rank"] == 1);
        CHECK(f["standard_monomials"] == json({"1"}));
    }

    json flag = run({"presentation", "-p", "1,1,1", "--flavor", "cohomology"}).report();
    CHECK(flag["results"][0]["flavors"][0]["hilbert_series"] == json({1, 2, 2, 1}));
    CHECK(flag["config"]["flavor"] == "cohomology");
}

TEST_CASE("verify") {
    Run r = run({"verify", "--n", "4"});
    CHECK(r.code == 0);
    json j = r.report();
    CHECK(j["pass"] == true);
    CHECK(j["results"].size() == 5);
    for (const auto& e : j["results"]) {
        CHECK(e["suites"].size() == verify_suites().size());
        for (const auto& s : e["suites"]) {
            CHECK(s["pass"] == true);
            CHECK(s["counterexample"].is_null());
        }
    }

    Run big = run({"verify", "-p", "5,4,4,2,2,2,1", "--suite", "rank-lemma"});
    CHECK(big.code == 0);
    json b = big.report();
    CHECK(b["results"][0]["p_table"][15] == 1);
    CHECK(b["results"][0]["suites"][0]["suite"] == "rank-lemma");

    json two = run({"verify", "-p", "2,1", "--suite", "gamma,filtration"}).report();
    CHECK(two["results"][0]["suites"].size() == 2);
    CHECK(two["config"]["suites"] == json({"gamma", "filtration"}));
}

TEST_CASE("sweep") {
    json three = run({"sweep", "--n", "3", "--flavor", "ktheory", "--no-timings"}).report();
    std::vector<std::string> ranks;
    for (const auto& e : three["results"]) ranks.push_back(e["rank"]);
    CHECK(ranks == std::vector<std::string>{"1", "3", "6"});
    json four = run({"sweep", "--n", "4", "--no-timings"}).report();
    ranks.clear();
    for (const auto& e : four["results"]) ranks.push_back(e["rank"]);
    CHECK(ranks == std::vector<std::string>{"1", "4", "6", "12", "24"});
    json one = run({"sweep", "--n", "1"}).report();
    CHECK(one["results"].size() == 1);
    CHECK(one["results"][0]["rank"] == "1");
    CHECK(one["results"][0]["flavors"][0].contains("time_ms"));
}

TEST_CASE("gamma") {
    json j = run({"gamma", "-p", "2,1", "--subset", "1,2", "--d", "2"}).report();
    const json& e = j["results"][0];
    CHECK(e["polynomial"] == "u1*u2 - u1 - u2 + 1");
    CHECK(e["normal_form"] == "0");
    CHECK(e["in_ideal"] == true);

    json zero = run({"gamma", "-p", "2,1", "--subset", "1,2", "--d", "0"}).report();
    CHECK(zero["results"][0]["polynomial"] == "1");
    CHECK(zero["results"][0]["normal_form"] == "1");
    CHECK(zero["pass"] == true);

    json point = run({"gamma", "-p", "3", "--subset", "1", "--d", "1", "--convention", "u"}).report();
    CHECK(point["results"][0]["polynomial"] == "u1 - 1");
    CHECK(point["results"][0]["normal_form"] == "0");

    CHECK(run({"gamma", "-p", "2,1", "--subset", "1,4", "--d", "1"}).code == 2);
    CHECK(run({"gamma", "-p", "2,1", "--subset", "2,1", "--d", "1"}).code == 2);
    CHECK(run({"gamma", "-p", "2,1", "--subset", "1,a", "--d", "1"}).code == 2);
}

TEST_CASE("rank-lemma command") {
    Run r = run({"rank-lemma", "--n", "6", "--jobs", "3"});
    CHECK(r.code == 0);
    CHECK(r.report()["results"].size() == 11);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"presentation"}).code == 2);
    CHECK(run({"presentation", "-p", "2,1", "-p", "3"}).code == 2);
    CHECK(run({"presentation", "-p", "1,2"}).code == 2);
    CHECK(run({"presentation", "-p", "2,1", "--format", "xml"}).code == 2);
    CHECK(run({"presentation", "-p", "2,1", "--order", "lex:1,2"}).code == 2);
    CHECK(run({"presentation", "-p", "2,1", "--order", "lex:1,1,2"}).code == 2);
    CHECK(run({"presentation", "-p", "2,1", "--convention", "y"}).code == 2);
    CHECK(run({"sweep", "--n", "9"}).code == 2);
    CHECK(run({"sweep", "--n", "0"}).code == 2);
    CHECK(run({"verify", "--n", "3", "--jobs", "0"}).code == 2);
    CHECK(run({"verify", "--n", "3", "--suite", "bogus"}).code == 2);
    CHECK(run({"verify", "--n", "3", "--escalation-depth", "0"}).code == 2);
    CHECK(run({"verify", "--n", "6"}).code == 2);
    CHECK(run({"verify", "-p", "3", "--n", "3"}).code == 2);
    CHECK(run({"presentation", "-p", "17"}).code == 2);
    Run bad = run({"presentation", "-p", "3,1,2"});
    CHECK(bad.err.find("position 3") != std::string::npos);
    CHECK(bad.out.empty());
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("determinism and parallel width") {
    Run a = run({"verify", "--n", "3", "--jobs", "1"});
    Run b = run({"verify", "--n", "3", "--jobs", "4"});
    json ja = a.report(), jb = b.report();
    ja["config"].erase("jobs");
    jb["config"].erase("jobs");
    CHECK(ja == jb);
    CHECK(run({"verify", "--n", "3"}).out == a.out);
    CHECK(run({"sweep", "--n", "5", "--no-timings", "--jobs", "3"}).out == run({"sweep", "--n", "5", "--no-timings", "--jobs", "3"}).out);
}

TEST_CASE("cache directory") {
    auto dir = std::filesystem::temp_directory_path() / "springer_cli_cache";
    std::filesystem::remove_all(dir);
    Run first = run({"presentation", "-p", "2,2", "--cache-dir", dir.string()});
    Run second = run({"presentation", "-p", "2,2", "--cache-dir", dir.string()});
    Run plain = run({"presentation", "-p", "2,2"});
    CHECK(first.err.find("miss") != std::string::npos);
    CHECK(second.err.find("hit") != std::string::npos);
    CHECK(first.out == second.out);
    json a = first.report(), c = plain.report();
    a["config"].erase("cache_dir");
    c["config"].erase("cache_dir");
    CHECK(a == c);
    std::filesystem::remove_all(dir);
}

TEST_CASE("text and csv output") {
    Run text = run({"verify", "-p", "2,1", "--format", "text"});
    CHECK(text.out.find("filtration: PASS") != std::string::npos);
    CHECK(text.out.find("overall: PASS") != std::string::npos);
    Run csv = run({"sweep", "--n", "3", "--format", "csv", "--no-timings"});
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "partition,rank,dimension,flavor,gb_size,standard_monomials,rank_ok,time_ms");
    int rows = 0;
    for (std::string l; std::getline(lines, l);) ++rows;
    CHECK(rows == 6);
    Run vcsv = run({"verify", "-p", "2,1", "--suite", "freeness", "--format", "csv"});
    CHECK(vcsv.out == "partition,suite,pass,checks,counterexample\n\"2,1\",freeness,true,3,\n");
}

TEST_CASE("report helpers") {
    json h = partition_header(Partition({5, 4, 4, 2, 2, 2, 1}));
    CHECK(h["dual"] == json({7, 6, 3, 3, 1}));
    CHECK(h["n"] == 20);
    CHECK(h["p_table"][19] == 20);
    std::string csv = filtration_csv(filtration_check(Partition({2, 1})));
    CHECK(csv.rfind("degree,graded_dim,ideal_dim,ambient_dim,match\n", 0) == 0);
    CHECK(csv.find("1,1,1,3,true") != std::string::npos);
}

}
