#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

#include "degbern/lambda_poly.hpp"
#include "degbern/sequences.hpp"

using namespace degbern;
using degbern::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "degbern");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Minimal RFC 4180 reader: quoted fields may contain commas and doubled quotes.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(field);
            field.clear();
        } else if (c == '\n') {
            row.push_back(field);
            field.clear();
            rows.push_back(row);
            row.clear();
        } else {
            field += c;
        }
    }
    return rows;
}

std::string cell(const std::vector<std::vector<std::string>>& rows, const std::string& n, const std::string& k) {
    for (const auto& r : rows) {
        if (r[1] == n && r[2] == k) {
            return r[4];
        }
    }
    return "<missing>";
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }
    ScopedEnv(const ScopedEnv&) = delete;
    ScopedEnv& operator=(const ScopedEnv&) = delete;

private:
    const char* name_;
};

} // namespace

TEST_CASE("table examples") {
    auto r = invoke({"table", "--family", "poly-bernoulli", "--k", "2", "--lambda", "1/2", "--n-max", "4"});
    CHECK(r.code == 0);
    auto rows = read_csv(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"family", "n", "k", "lambda", "value", "path"});
    CHECK(rows[1] == std::vector<std::string>{"poly-bernoulli", "0", "2", "1/2", "1", "gf"});
    CHECK(rows[2][4] == "1/8");

    r = invoke({"table", "--family", "deg-stirling1", "--lambda", "symbolic", "--n-max", "3"});
    CHECK(r.code == 0);
    rows = read_csv(r.out);
    CHECK(rows.size() == 1 + 10);
    CHECK(cell(rows, "2", "1") == "-1 + L");

    r = invoke({"table", "--family", "stirling2", "--n-max", "3"});
    CHECK(r.code == 0);
    CHECK(cell(read_csv(r.out), "3", "2") == "3");
}

TEST_CASE("table paths agree") {
    const auto a = read_csv(invoke({"table", "--family", "poly-bernoulli", "--k", "3", "--order", "8"}).out);
    const auto b = read_csv(
        invoke({"table", "--family", "poly-bernoulli", "--k", "3", "--order", "8", "--path", "iterated-integral"}).out);
    const auto c =
        read_csv(invoke({"table", "--family", "poly-bernoulli", "--k", "3", "--order", "8", "--path", "explicit"}).out);
    REQUIRE(a.size() == 10);
    REQUIRE(b.size() == a.size());
    REQUIRE(c.size() == a.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(a[i][4] == b[i][4]);
        CHECK(a[i][4] == c[i][4]);
    }
    CHECK(invoke({"table", "--family", "stirling2", "--path", "explicit"}).code == 2);
    CHECK(invoke({"table", "--family", "poly-bernoulli", "--k", "1", "--path", "iterated-integral"}).code == 2);
}

TEST_CASE("json and csv emissions agree") {
    for (const std::string family : {"carlitz", "poly-bernoulli", "deg-stirling2", "stirling1", "bernoulli",
                                     "deg-polylog-coeffs"}) {
        CAPTURE(family);
        const std::vector<std::string> base{"table", "--family", family, "--k", "-1", "--order", "6", "--x", "1/3"};
        auto json_args = base;
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto csv = read_csv(invoke(base).out);
        const auto j = nlohmann::json::parse(invoke(json_args).out);
        REQUIRE(j.size() + 1 == csv.size());
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto& row = csv[i + 1];
            CHECK(j[i]["family"] == row[0]);
            CHECK(std::to_string(j[i]["n"].get<long>()) == row[1]);
            CHECK((j[i]["k"].is_null() ? std::string() : std::to_string(j[i]["k"].get<long>())) == row[2]);
            CHECK((j[i]["lambda"].is_null() ? std::string() : j[i]["lambda"].get<std::string>()) == row[3]);
            CHECK(j[i]["value"] == row[4]);
            CHECK(j[i]["path"] == row[5]);
            CHECK(j[i]["value"].is_string());
        }
    }
}

TEST_CASE("emitted values round-trip through the parser") {
    const auto symbolic = read_csv(invoke({"table", "--family", "poly-bernoulli", "--k", "2", "--order", "8"}).out);
    const auto expected = poly_bernoulli_gf(2, LambdaPoly::lambda(), 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto parsed = LambdaPoly::parse(symbolic[n + 1][4]);
        CHECK(parsed == expected[n]);
        CHECK(parsed.to_string() == symbolic[n + 1][4]);
    }
    const auto numeric = read_csv(invoke({"table", "--family", "carlitz", "--lambda", "-2/7", "--order", "8"}).out);
    const auto values = carlitz_values(Rational(-2, 7), Rational(0), 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(Rational::parse(numeric[n + 1][4]) == values[n]);
    }
}

TEST_CASE("verify exit codes") {
    auto r = invoke({"verify", "--order", "6"});
    CHECK(r.code == 0);
    CHECK(r.err.find("checks passed") != std::string::npos);

    r = invoke({"verify", "--order", "6", "--lambda", "1/2,-1/3"});
    CHECK(r.code == 0);

    r = invoke({"verify", "--order", "0"});
    CHECK(r.code == 0);

    r = invoke({"verify", "--order", "6", "--lambda", ""});
    CHECK(r.code == 0);
    CHECK(r.err.find("nothing run") != std::string::npos);

    r = invoke({"verify", "--order", "6", "--inject-fault", "deg-stirling2:3,1", "--format", "json"});
    CHECK(r.code == 1);
    CHECK(r.err.find("thm4 order=6 k=2 lambda=symbolic: at n=3:") != std::string::npos);
    const auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& c : j) {
        if (c["verdict"] == "fail") {
            found = true;
            CHECK(c["counterexample"]["lhs"] != c["counterexample"]["rhs"]);
        }
    }
    CHECK(found);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(invoke({"table", "--family", "euler"}).code == 2);
    CHECK(invoke({"table"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"table", "--family", "carlitz", "--order", "5", "--n-max", "6"}).code == 2);
    CHECK(invoke({"table", "--family", "carlitz", "--lambda", "1/0"}).code == 2);
    CHECK(invoke({"table", "--family", "carlitz", "--format", "xml"}).code == 2);
    CHECK(invoke({"verify", "--k-range", "4..-2"}).code == 2);
    CHECK(invoke({"verify", "--order", "4", "--inject-fault", "nonsense"}).code == 2);
    CHECK(invoke({"verify", "--order", "4", "--inject-fault", "carlitz:9,0"}).code == 2);
    CHECK(invoke({"limit", "--family", "stirling2"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("order from the environment, flag overrides") {
    {
        ScopedEnv env(cli::kOrderEnv, "3");
        CHECK(read_csv(invoke({"table", "--family", "carlitz"}).out).size() == 5);
        CHECK(read_csv(invoke({"table", "--family", "carlitz", "--order", "5"}).out).size() == 7);
        CHECK(invoke({"table", "--family", "carlitz", "--n-max", "4"}).code == 2);
    }
    {
        ScopedEnv env(cli::kOrderEnv, "lots");
        CHECK(invoke({"table", "--family", "carlitz"}).code == 2);
    }
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "degbern_cli_test.csv";
    std::filesystem::remove(path);
    const auto r = invoke({"table", "--family", "stirling1", "--n-max", "3", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(cell(read_csv(text.str()), "3", "2") == "-3");
    std::filesystem::remove(path);
    CHECK(invoke({"table", "--family", "stirling1", "--output", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("limit command") {
    auto r = invoke({"limit", "--order", "8"});
    CHECK(r.code == 0);
    const auto rows = read_csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"family", "n", "k", "degenerate_at_0", "classical", "match"});
    bool saw_b2 = false;
    for (const auto& row : rows) {
        if (row[0] == "carlitz" && row[1] == "2") {
            saw_b2 = row[3] == "1/6" && row[4] == "1/6";
        }
        if (row.size() == 6 && row[0] != "family") {
            CHECK(row[5] == "yes");
        }
    }
    CHECK(saw_b2);
    CHECK(invoke({"limit", "--family", "poly-bernoulli", "--k", "1", "--order", "10"}).code == 0);
    CHECK(invoke({"limit", "--family", "poly-bernoulli", "--k", "-3", "--order", "10"}).code == 0);
    CHECK(invoke({"limit", "--family", "deg-stirling2", "--format", "json", "--order", "5"}).code == 0);
}
