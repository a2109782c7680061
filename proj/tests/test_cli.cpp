#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adejac/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = adejac::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        root_ = fs::temp_directory_path() / "adejac-cli-test";
        fs::create_directories(root_);
    }

    std::string write(const std::string& name, const std::string& contents)
    {
        fs::path p = root_ / name;
        std::ofstream file(p);
        file << contents;
        return p.string();
    }

private:
    fs::path root_;
};

} // namespace

TEST_CASE("validate and schema rejection")
{
    TempDir dir;
    std::string good = dir.write(
        "a2.json", R"({"graph": {"kind": "A", "n": 2}, "genera": {"v0": 1}})");
    RunResult r = run({"validate", "--curve", good});
    CHECK(r.code == 0);
    CHECK(r.out.find("A~2") != std::string::npos);
    CHECK(r.out.find("status: valid") != std::string::npos);

    std::string bad_field = dir.write(
        "unknown.json", R"({"graph": {"kind": "A", "n": 2}, "not_a_field": 1})");
    RunResult rf = run({"validate", "--curve", bad_field});
    CHECK(rf.code == 1);
    CHECK(rf.err.find("InvalidDocument") != std::string::npos);

    std::string bad_genus = dir.write(
        "d4bad.json", R"({"graph": {"kind": "D", "n": 4}, "genera": {"v2": 1}})");
    RunResult rg = run({"validate", "--curve", bad_genus});
    CHECK(rg.code == 1);
    CHECK(rg.err.find("NonRationalMultipleComponent") != std::string::npos);
    CHECK(rg.out.find("status: invalid") != std::string::npos);

    RunResult missing = run({"validate", "--curve", "/nonexistent/q.json"});
    CHECK(missing.code == 1);
}

TEST_CASE("polarisation-check exit codes and diagnostics")
{
    TempDir dir;
    std::string a1 = dir.write(
        "a1.json",
        R"({"graph": {"kind": "A", "n": 1}, "polarisation": {"v0": 1, "v1": 2}})");

    RunResult fail = run({"polarisation-check", "--curve", a1, "--chi", "3"});
    CHECK(fail.code == 1);
    CHECK(fail.err.find("AssumptionNotSatisfied") != std::string::npos);
    CHECK(fail.err.find("3") != std::string::npos);
    CHECK(fail.err.find("4") != std::string::npos);
    CHECK(fail.out.find("admissible: no") != std::string::npos);

    RunResult pass = run({"polarisation-check", "--curve", a1, "--chi", "2"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("admissible: yes") != std::string::npos);

    RunResult json_run = run({"--json", "polarisation-check", "--curve", a1, "--chi", "2"});
    CHECK(json_run.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(json_run.out);
    CHECK(parsed.at("command") == "polarisation-check");
    CHECK(parsed.at("results").at("admissible") == true);
    CHECK(parsed.at("results").at("b").at("v1") == 2);
}

TEST_CASE("enumerate, stability and rational degrees")
{
    TempDir dir;
    std::string a2 = dir.write(
        "a2.json",
        R"({"graph": {"kind": "A", "n": 2}, "chi": 1,
            "polarisation": {"v0": 1, "v1": "1/2", "v2": 1}})");
    RunResult r = run({"enumerate", "--curve", a2, "--chi", "1", "--window", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("stable markings: 6") != std::string::npos);

    // chi may come from the document
    RunResult from_doc = run({"enumerate", "--curve", a2});
    CHECK(from_doc.code == 0);
    CHECK(from_doc.out == r.out);

    std::string marking = dir.write(
        "marking.json", R"({"oChi": {"v0": 2, "v1": 1, "v2": 1}})");
    RunResult st = run({"stability", "--curve", a2, "--chi", "1", "--marking", marking});
    CHECK(st.code == 0);
    CHECK(st.out.find("verdict: Stable") != std::string::npos);

    RunResult family = run({"stability", "--curve", a2, "--chi", "1"});
    CHECK(family.code == 0);
    CHECK(family.out.find("candidates") != std::string::npos);

    std::string bad_marking = dir.write(
        "badmarking.json", R"({"oChi": {"v0": 2, "v1": 1, "v2": 1}, "tSpecial": ["nope"]})");
    RunResult bm = run({"stability", "--curve", a2, "--chi", "1", "--marking", bad_marking});
    CHECK(bm.code == 1);
    CHECK(bm.err.find("InvalidDocument") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    RunResult nothing = run({});
    CHECK(nothing.code == 2);
    RunResult unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    RunResult missing_opt = run({"validate"});
    CHECK(missing_opt.code == 2);
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("polarisation-search") != std::string::npos);

    setenv("ADE_JACOBIAN_THREADS", "zero", 1);
    RunResult bad_env = run({"validate", "--curve", "x.json"});
    unsetenv("ADE_JACOBIAN_THREADS");
    CHECK(bad_env.code == 2);
    CHECK(bad_env.err.find("ADE_JACOBIAN_THREADS") != std::string::npos);
}

TEST_CASE("moduli reports carry the conjecture token")
{
    TempDir dir;
    std::string d4 = dir.write(
        "d4.json",
        R"({"graph": {"kind": "D", "n": 4}, "chi": 1,
            "polarisation": {"v0": 1, "v1": 1, "v2": 1, "v3": 1, "v4": 1}})");
    RunResult r = run({"moduli", "--curve", d4, "--chi", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("CONJECTURE") != std::string::npos);
    CHECK(r.out.find("Ga") != std::string::npos);

    std::string pol = dir.write("pol.json",
                                R"({"v0": 2, "v1": 2, "v2": 1, "v3": 2, "v4": 2})");
    RunResult with_file = run({"moduli", "--curve", d4, "--chi", "1", "--polarisation", pol});
    CHECK(with_file.code == 0);

    RunResult js = run({"--json", "moduli", "--curve", d4, "--chi", "1"});
    nlohmann::json parsed = nlohmann::json::parse(js.out);
    CHECK(parsed.at("results").at("components").size() == 5);
    bool conjecture_seen = false;
    for (const auto& comp : parsed.at("results").at("components"))
        if (comp.contains("multiplicityProvenance"))
            conjecture_seen = comp.at("multiplicityProvenance") == "CONJECTURE";
    CHECK(conjecture_seen);
}

TEST_CASE("char-cycle command")
{
    TempDir dir;
    std::string a1 = dir.write(
        "a1e.json", R"({"graph": {"kind": "A", "n": 1}, "genera": {"v1": 1}})");
    std::string torsion = dir.write("torsion.json", R"({"orders": {"v0": 1, "v1": 2}})");
    RunResult r = run({"char-cycle", "--curve", a1, "--torsion", torsion});
    CHECK(r.code == 0);
    CHECK(r.out.find("translation order k: 2") != std::string::npos);
    CHECK(r.out.find("4 smooth rational curves") != std::string::npos);

    RunResult missing = run({"char-cycle", "--curve", a1});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("SpecMissing") != std::string::npos);

    RunResult witness = run({"char-cycle", "--curve", a1, "--elliptic", "5,1,1,0,1"});
    CHECK(witness.code == 0);
    CHECK(witness.out.find("translation order k: 9") != std::string::npos);

    RunResult both = run({"char-cycle", "--curve", a1, "--torsion", torsion,
                          "--elliptic", "5,1,1,0,1"});
    CHECK(both.code == 2); // mutually exclusive flags

    std::string inf = dir.write("inf.json", R"({"orders": {"v0": 1, "v1": "inf"}})");
    RunResult infinite = run({"char-cycle", "--curve", a1, "--torsion", inf});
    CHECK(infinite.code == 0);
    CHECK(infinite.out.find("translation order k: inf") != std::string::npos);
}

TEST_CASE("every machine-readable report re-parses as JSON")
{
    TempDir dir;
    std::string a1 = dir.write(
        "rt_a1.json",
        R"({"graph": {"kind": "A", "n": 1}, "genera": {"v1": 1}, "chi": 2,
            "polarisation": {"v0": 1, "v1": 2}})");
    std::string torsion = dir.write("rt_torsion.json", R"({"orders": {"v0": 1, "v1": 3}})");
    std::string marking = dir.write("rt_marking.json",
                                    R"({"oChi": {"v0": 1, "v1": 2}, "tSpecial": ["x_{v0.v1}#0"]})");
    std::vector<std::vector<std::string>> commands = {
        {"validate", "--curve", a1},
        {"polarisation-check", "--curve", a1},
        {"polarisation-search", "--curve", a1, "--bound", "3"},
        {"stability", "--curve", a1, "--marking", marking},
        {"stability", "--curve", a1},
        {"enumerate", "--curve", a1},
        {"moduli", "--curve", a1},
        {"char-cycle", "--curve", a1, "--torsion", torsion},
        {"proof-scan", "--curve", a1},
    };
    for (auto args : commands) {
        args.insert(args.begin(), "--json");
        RunResult r = run(args);
        CHECK(r.code == 0);
        nlohmann::json parsed = nlohmann::json::parse(r.out, nullptr, false);
        REQUIRE_FALSE(parsed.is_discarded());
        CHECK(parsed.contains("command"));
        CHECK(parsed.contains("results"));
        CHECK(parsed.at("status") == "ok");
    }
}

TEST_CASE("reports are byte-identical across thread caps")
{
    TempDir dir;
    std::string e6 = dir.write(
        "e6.json",
        R"({"graph": {"kind": "E", "n": 6}, "chi": 1,
            "polarisation": {"v0": 1, "v1": 1, "v2": 1, "v3": 1, "v4": 1, "v5": 1, "v6": 1}})");
    for (const char* json_flag : {"", "--json"}) {
        std::vector<std::string> args;
        if (*json_flag != '\0')
            args.push_back(json_flag);
        for (const std::string& a :
             {std::string("enumerate"), std::string("--curve"), e6, std::string("--chi"),
              std::string("1")})
            args.push_back(a);
        setenv("ADE_JACOBIAN_THREADS", "1", 1);
        RunResult single = run(args);
        setenv("ADE_JACOBIAN_THREADS", "8", 1);
        RunResult eight = run(args);
        unsetenv("ADE_JACOBIAN_THREADS");
        CHECK(single.code == 0);
        CHECK(single.out == eight.out);
    }
}
