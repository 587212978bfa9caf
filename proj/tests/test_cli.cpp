#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace degcenter;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "degcenter");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const char* name) { return std::string(DEGCENTER_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content = {}) {
    const auto path = std::filesystem::temp_directory_path() / ("degcenter_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("integrals") {
    const auto r = run_cli({"integrals"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "I1 = 3.57240329197"));
    CHECK(contains(r.out, "I2 = 5.98555756278"));
    CHECK(contains(r.out, "I3 = 21.6237322088"));
    CHECK(contains(r.out, "= 17.6532244704"));
    CHECK(contains(r.out, "# manifest"));
    CHECK(contains(r.out, "version: " + cli::tool_version()));
    CHECK(contains(r.err, "finished in"));
}

TEST_CASE("analyze") {
    auto r = run_cli({"analyze", data_file("system14.txt")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "predicted cycles: 0"));
    CHECK(contains(r.out, "v6 = 3.14159265"));

    r = run_cli({"analyze", data_file("system11.txt")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "predicted cycles: 3"));
    CHECK(contains(r.out, "r0 = 0.49999"));
    CHECK(contains(r.out, "r0 = 1.50000"));

    r = run_cli({"analyze", temp_file("empty.txt")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "G10 and G20 identically zero"));

    r = run_cli({"analyze", data_file("system13.txt")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "notice: G10 does not vanish"));
    CHECK(!contains(r.out, "v6 ="));

    r = run_cli({"analyze", data_file("system13.txt"), "--solve-first-order"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "a10 = -176.53224"));
    CHECK(contains(r.out, "r0 = 1.09757583"));
    CHECK(contains(r.out, "predicted cycles: 1"));
}

TEST_CASE("input errors exit with 2") {
    auto r = run_cli({"analyze", temp_file("bad.txt", "a00 = 1\na40 = 2\n")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 2: index out of range"));

    CHECK(run_cli({"analyze", "/nonexistent/file.txt"}).code == 2);
    CHECK(run_cli({"verify", data_file("system12.txt"), "--epsilon", "0"}).code == 2);
    CHECK(run_cli({"verify", data_file("system12.txt"), "--epsilon", "1e-3", "--range", "2", "1"}).code == 2);
    CHECK(run_cli({"reproduce", "15"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"orbits", data_file("system14.txt"), "--start", "0", "0", "--revs", "1", "--out",
                   temp_file("o.csv")})
              .code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify") {
    const std::string csv = temp_file("scan.csv");
    auto r = run_cli({"verify", data_file("system12.txt"), "--epsilon", "0.001", "--range", "0.5", "3", "--out", csv});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "fixed points: 2"));
    CHECK(contains(r.out, "fixed point: r0 = 0.99"));
    CHECK(contains(r.out, "fixed point: r0 = 1.99"));
    CHECK(contains(r.out, "count check: match"));
    CHECK(contains(r.out, "# csv (" + csv + ")\nr0,displacement\n"));
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "r0,displacement");

    r = run_cli({"verify", temp_file("s13.txt", "a00 = 1\nc00 = 10\nc01 = 10\nc11 = 5\nb10 = 1\nb30 = 1\nd01 = 1\n"
                                                "d03 = -1\na10 = -176.53224470442\n"),
                 "--epsilon", "0.001", "--range", "0.5", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "fixed points: 1"));
}

TEST_CASE("verify reports a lost section with exit 3") {
    const auto r = run_cli({"verify", data_file("system11.txt"), "--epsilon", "0.01", "--range", "0.2", "2.5"});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "reduce --epsilon"));
}

TEST_CASE("reproduce") {
    for (const char* id : {"11", "12", "13", "14", "lemma5", "table"}) {
        const auto r = run_cli({"reproduce", id});
        CAPTURE(id);
        CHECK(r.code == 0);
        CHECK(contains(r.out, "failures: 0"));
    }
    const auto r = run_cli({"reproduce", "table"});
    CHECK(contains(r.out, "a01*c01 -> v2"));
    CHECK(contains(r.out, "239.000039"));
}

TEST_CASE("orbits") {
    const std::string csv = temp_file("orbit.csv");
    const auto r = run_cli({"orbits", data_file("system14.txt"), "--start", "1", "0", "--revs", "2", "--out", csv,
                            "--epsilon", "0.001"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "after 2 revolutions"));
    CHECK(contains(r.out, "\nt,x,y\n0,1,0\n"));
}

TEST_CASE("reports are byte-identical across runs") {
    const auto a = run_cli({"analyze", data_file("system12.txt"), "--tol", "1e-9"});
    const auto b = run_cli({"analyze", data_file("system12.txt"), "--tol", "1e-9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "tolerances: quadrature=1e-09 ode=1e-09 root=1e-09"));

    const auto c = run_cli({"verify", data_file("system14.txt"), "--epsilon", "0.001", "--range", "0.5", "3"});
    const auto d = run_cli({"verify", data_file("system14.txt"), "--epsilon", "0.001", "--range", "0.5", "3"});
    CHECK(c.out == d.out);
}

TEST_CASE("manifest digest tracks the input") {
    const auto a = run_cli({"analyze", temp_file("d1.txt", "a00 = 1\nc00 = 1\n")});
    const auto b = run_cli({"analyze", temp_file("d2.txt", "a00 = 1\nc00 = 2\n")});
    CHECK(contains(a.out, "input-sha256: "));
    const auto line = [](const std::string& s) { return s.substr(s.find("input-sha256")); };
    CHECK(line(a.out).substr(0, 78) != line(b.out).substr(0, 78));
    CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
