#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_helpers.hpp"
#include "widthlab/cli.hpp"

using namespace widthlab;
using namespace widthlab::testing;
namespace fs = std::filesystem;

namespace {

int run_cli(std::initializer_list<const char*> args, std::string* captured_out = nullptr) {
    std::vector<const char*> argv{"widthlab"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream sink;
    std::streambuf* old = std::cout.rdbuf(sink.rdbuf());
    const int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    if (captured_out) *captured_out = sink.str();
    return code;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("widthlab_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gnp emits a complete graph at p=1", "[cli]") {
    std::string out;
    const int code = run_cli({"gnp", "--n", "10", "--p", "1", "--seed", "7"}, &out);
    CHECK(code == 0);
    CHECK(out == to_edge_list(complete_graph(10)));
}

TEST_CASE("unknown flags exit with usage code 2", "[cli]") {
    CHECK(run_cli({"gnp", "--n", "10", "--p", "1", "--seed", "7", "--bogus"}) == 2);
    CHECK(run_cli({"nonsense"}) == 2);
}

TEST_CASE("domain errors exit with code 1", "[cli]") {
    TempDir tmp;
    {
        std::ofstream os(tmp.file("bad.edges"));
        os << "1 0\n";
    }
    CHECK(run_cli({"cheeger", "--in", tmp.file("bad.edges").c_str()}) == 1);
}

TEST_CASE("width verb prints both widths and writes witnesses", "[cli]") {
    TempDir tmp;
    save_edge_list(tmp.file("k4.edges"), complete_graph(4));
    std::string out;
    const int code = run_cli({"width", "--in", tmp.file("k4.edges").c_str(), "--exact", "--out",
                              tmp.file("k4").c_str()},
                             &out);
    CHECK(code == 0);
    CHECK(out == "tw=3 rw=1\n");
    CHECK(fs::exists(tmp.file("k4.tw.txt")));
    CHECK(fs::exists(tmp.file("k4.rw.txt")));

    // Without --out the witnesses land next to the input.
    CHECK(run_cli({"width", "--in", tmp.file("k4.edges").c_str(), "--exact"}, &out) == 0);
    CHECK(fs::exists(tmp.file("k4.edges.tw.txt")));

    // A graph over the rank-width cap still reports its tree-width.
    save_edge_list(tmp.file("p15.edges"), path_graph(15));
    CHECK(run_cli({"width", "--in", tmp.file("p15.edges").c_str(), "--exact"}, &out) == 0);
    CHECK(out == "tw=1 rw=?\n");
}

TEST_CASE("cheeger verb reports the exact constant", "[cli]") {
    TempDir tmp;
    save_edge_list(tmp.file("c4.edges"), cycle_graph(4));
    std::string out;
    CHECK(run_cli({"cheeger", "--in", tmp.file("c4.edges").c_str()}, &out) == 0);
    CHECK(out == "phi=1/2 side=2\n");
}

TEST_CASE("file pipelines equal in-process composition byte for byte", "[cli]") {
    TempDir tmp;
    const char* n = "300";
    const char* eps = "0.6";
    CHECK(run_cli({"gnp", "--n", n, "--epsilon", eps, "--seed", "5", "--out",
                   tmp.file("g.edges").c_str()}) == 0);
    CHECK(run_cli({"core", "--in", tmp.file("g.edges").c_str(), "--out",
                   tmp.file("core.edges").c_str()}) == 0);

    const Graph direct = sample_gnp(300, (1.0 + 0.6) / 300.0, 5);
    CHECK(slurp(tmp.file("g.edges")) == to_edge_list(direct));
    CHECK(slurp(tmp.file("core.edges")) == to_edge_list(two_core(direct).core));
}

TEST_CASE("seed determines every output", "[cli]") {
    TempDir tmp;
    for (const char* name : {"a.edges", "b.edges"})
        CHECK(run_cli({"gnp", "--n", "500", "--epsilon", "0.2", "--seed", "99", "--out",
                       tmp.file(name).c_str()}) == 0);
    CHECK(slurp(tmp.file("a.edges")) == slurp(tmp.file("b.edges")));
}

TEST_CASE("kernel and extract verbs compose", "[cli]") {
    TempDir tmp;
    CHECK(run_cli({"gnp", "--n", "4000", "--epsilon", "0.8", "--seed", "3", "--out",
                   tmp.file("g.edges").c_str()}) == 0);
    CHECK(run_cli({"core", "--in", tmp.file("g.edges").c_str(), "--out", tmp.file("c.edges").c_str()}) ==
          0);
    CHECK(run_cli({"kernel", "--in", tmp.file("g.edges").c_str(), "--out", tmp.file("k.edges").c_str(),
                   "--map", tmp.file("k.map").c_str()}) == 0);
    CHECK(run_cli({"extract", "--in", tmp.file("c.edges").c_str(), "--seed", "8", "--out",
                   tmp.file("cubic.edges").c_str(), "--trace", tmp.file("cubic.trace").c_str()}) == 0);
    const MultiGraph cubic = load_multigraph(tmp.file("cubic.edges"));
    for (std::size_t v = 0; v < cubic.vertex_count(); ++v)
        CHECK(cubic.degree(static_cast<Vertex>(v)) == 3);
    CHECK(fs::exists(tmp.file("k.map")));
    CHECK(fs::exists(tmp.file("cubic.trace")));
}

TEST_CASE("tree-grow verb reports the tree", "[cli]") {
    TempDir tmp;
    std::string out;
    const int code = run_cli({"tree-grow", "--n", "20000", "--epsilon", "0.5", "--delta", "0.5",
                              "--initial-order", "9", "--seed", "2", "--out",
                              tmp.file("tree.txt").c_str()},
                             &out);
    CHECK(code == 0);
    CHECK(out.find("tree: size=") == 0);
    CHECK(fs::exists(tmp.file("tree.txt")));
}

TEST_CASE("experiment verb drives the harness from a config file", "[cli]") {
    TempDir tmp;
    {
        std::ofstream os(tmp.file("config.json"));
        os << R"({"experiment": "sparse_scaling", "n": [2000], "epsilon": [0.3],
                  "trials": 2, "seed": 5, "output": ")"
           << tmp.file("out.csv") << R"("})";
    }
    std::string out;
    CHECK(run_cli({"experiment", "--config", tmp.file("config.json").c_str()}, &out) == 0);
    const std::string csv = slurp(tmp.file("out.csv"));
    CHECK(csv.substr(0, csv.find('\n')) == csv_header());
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 trials
}

TEST_CASE("experiment verb runs the other harness modes", "[cli]") {
    TempDir tmp;
    {
        std::ofstream os(tmp.file("survey.json"));
        os << R"({"experiment": "expansion_survey", "survey_m": 8, "trials": 40, "seed": 3,
                  "output": ")"
           << tmp.file("survey.txt") << R"("})";
    }
    std::string out;
    CHECK(run_cli({"experiment", "--config", tmp.file("survey.json").c_str()}, &out) == 0);
    CHECK(out.find("expansion_survey: m=8") == 0);
    CHECK(fs::exists(tmp.file("survey.txt")));

    {
        std::ofstream os(tmp.file("uni.json"));
        os << R"({"experiment": "coupling_uniformity", "uniformity_degrees": [3,3,2],
                  "uniformity_samples": 3000, "seed": 4, "output": ")"
           << tmp.file("uni.txt") << R"("})";
    }
    CHECK(run_cli({"experiment", "--config", tmp.file("uni.json").c_str()}, &out) == 0);
    CHECK(out.find("coupling_uniformity: min_p=") == 0);

    {
        std::ofstream os(tmp.file("bracket.json"));
        os << R"({"experiment": "width_bracket", "n": [10], "epsilon": [0.5], "trials": 3,
                  "seed": 6, "cubic_orders": [4, 6]})";
    }
    CHECK(run_cli({"experiment", "--config", tmp.file("bracket.json").c_str(), "--out",
                   tmp.file("bracket.csv").c_str()}, &out) == 0);
    CHECK(out.find("width_bracket: checks=") == 0);
    CHECK(fs::exists(tmp.file("bracket.csv")));
}
