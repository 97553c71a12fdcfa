#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rmc/cli.hpp"
#include "rmc/codefile.hpp"
#include "rmc/construct.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* kExample = R"(rmc 1
q 2
k 3
m 3
kind linear
count 4
1 0 0
0 0 1
0 0 0

0 1 0
0 0 0
1 0 0

0 0 0
1 0 0
0 1 0

0 0 0
0 1 1
1 0 0
)";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("rmc_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

int parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_code(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("parse the worked example file") {
    std::istringstream in(kExample);
    const RankCode C = parse_code(in);
    CHECK(C == example_code());
    CHECK(min_distance(C) == 2);
}

TEST_CASE("minimal set file is the zero code") {
    std::istringstream in("rmc 1\nq 2\nk 1\nm 1\nkind set\ncount 1\n0\n");
    const RankCode C = parse_code(in);
    CHECK(C.cardinality() == 1);
    CHECK(C.contains(Vec{0}));
}

TEST_CASE("comments and extra blank lines are tolerated") {
    std::istringstream in("# header\nrmc 1\n\nq 3 # field\nk 1\nm 2\nkind set\ncount 2\n\n1 2\n\n\n2 2 # last\n");
    CHECK(parse_code(in).cardinality() == 2);
}

TEST_CASE("malformed files report the offending line") {
    CHECK(parse_error_line("rmc 2\n") == 1);
    CHECK(parse_error_line("rmc 1\nq 6\n") == 2);
    CHECK(parse_error_line("rmc 1\nq 2\nk 3\nm 2\n") == 3);
    CHECK(parse_error_line("rmc 1\nq 2\nk 1\nm 2\nkind both\n") == 5);
    CHECK(parse_error_line("rmc 1\nq 2\nk 1\nm 2\nkind set\ncount 2\n0 1\n\n0 1\n") == 9);
    CHECK(parse_error_line("rmc 1\nq 2\nk 1\nm 2\nkind set\ncount 1\n0 2\n") == 7);
    CHECK(parse_error_line("rmc 1\nq 2\nk 1\nm 2\nkind set\ncount 1\n0 1 1\n") == 7);
    CHECK(parse_error_line("rmc 1\nq 2\nk 1\nm 2\nkind set\ncount 1\n0 x\n") == 7);
    CHECK(parse_error_line("rmc 1\nq 2\nk 1\nm 2\nkind set\ncount 2\n0 1\n") > 0);
    CHECK(parse_error_line("rmc 1\nq 2\nk 1\nm 2\nkind set\ncount 0\n") == 6);
}

TEST_CASE("serialize and parse round trip") {
    Rng rng(71);
    for (auto [q, k, m] : {std::tuple{2u, 3, 3}, {9u, 2, 2}, {5u, 1, 4}}) {
        const CodeParams p(field_of_order(q), k, m);
        for (const RankCode& C : {random_linear_code(p, 3, rng.next()), random_code(p, 4, rng.next()),
                                  RankCode::zero(p), RankCode::full_space(p)}) {
            std::istringstream in(serialize(C));
            const RankCode back = parse_code(in);
            CHECK(back == C);
            CHECK(serialize(back) == serialize(C));
        }
    }
    const std::string text = serialize(example_code());
    CHECK(text.rfind("rmc 1\nq 2\nk 3\nm 3\nkind linear\ncount 4\n1 0 0\n", 0) == 0);
    CHECK(text.find("\n\n\n") == std::string::npos);
    CHECK(text.back() == '\n');
    CHECK(text[text.size() - 2] != '\n');
}

TEST_CASE("cli reports are sorted key-value lines") {
    const auto path = write_temp("example.rmc", kExample);
    const Run b = run({"bounds", path});
    REQUIRE(b.code == 0);
    CHECK(b.out.find("rho_exact 2\n") != std::string::npos);
    CHECK(b.out.find("bound_initial_set 2\n") != std::string::npos);
    CHECK(b.out.find("bound_external 3\n") != std::string::npos);
    CHECK(b.out.find("bound_dual_distance 3\n") != std::string::npos);
    std::istringstream lines(b.out);
    std::vector<std::string> keys;
    for (std::string line; std::getline(lines, line);) keys.push_back(line.substr(0, line.find(' ')));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(run({"bounds", path}).out == b.out);

    const Run i = run({"info", path});
    CHECK(i.out.find("min_distance 2\n") != std::string::npos);
    CHECK(i.out.find("dim 4\n") != std::string::npos);
    CHECK(run({"covering-radius", path, "--threads", "2"}).out.find("rho 2\n") != std::string::npos);
    CHECK(run({"initial-set", path}).out.find("initial_set (1,1) (1,2) (2,1) (2,2)\n") != std::string::npos);
    const Run c = run({"cosets", path});
    CHECK(c.out.find("translates 32\n") != std::string::npos);
}

TEST_CASE("cli code-producing commands emit parseable files") {
    const auto path = write_temp("example2.rmc", kExample);
    const Run d = run({"dual", path});
    REQUIRE(d.code == 0);
    std::istringstream in(d.out);
    CHECK(parse_code(in) == dual(example_code()));

    const Run p1 = run({"puncture", path, "--A", "5", "--u", "1"});
    const Run p2 = run({"puncture", path, "--A", "5", "--u", "1"});
    REQUIRE(p1.code == 0);
    CHECK(p1.out == p2.out);
    const auto a_path = write_temp("A.rmc", "rmc 1\nq 2\nk 3\nm 3\nkind set\ncount 1\n1 0 0\n0 1 0\n0 0 1\n");
    const Run s = run({"shorten", path, "--A", a_path, "--u", "1"});
    REQUIRE(s.code == 0);

    const Run g = run({"gen", "gabidulin", "--q", "2", "--k", "3", "--m", "3", "--d", "2"});
    std::istringstream gin(g.out);
    CHECK(parse_code(gin) == gabidulin(2, 3, 3, 2));
    CHECK(run({"gen", "qmrd", "--q", "2", "--k", "4", "--m", "4", "--t", "3"}).code == 0);
    CHECK(run({"gen", "linmap", "--q", "2", "--s", "2", "--r", "2"}).code == 0);
    const Run r1 = run({"gen", "random", "--q", "3", "--k", "2", "--m", "2", "--size", "4", "--seed", "9"});
    CHECK(r1.out == run({"gen", "random", "--q", "3", "--k", "2", "--m", "2", "--size", "4", "--seed", "9"}).out);
}

TEST_CASE("cli exit codes") {
    const auto bad = write_temp("bad.rmc", "rmc 1\nq 2\nk 1\nm 1\nkind set\ncount 2\n1\n\n1\n");
    const Run p = run({"info", bad});
    CHECK(p.code == exit_parse);
    CHECK(p.err.find(":9:") != std::string::npos);
    CHECK(run({"info", "/nonexistent/file.rmc"}).code == exit_parse);
    CHECK(run({}).code == exit_parse);

    const auto big = write_temp("big.rmc", serialize(gabidulin(2, 5, 5, 2)));
    const Run g = run({"covering-radius", big});
    CHECK(g.code == exit_guard);
    CHECK(g.err.find("33554432") != std::string::npos);
    CHECK(run({"gen", "qmrd", "--q", "2", "--k", "3", "--m", "3", "--t", "3"}).code == exit_failure);
}
