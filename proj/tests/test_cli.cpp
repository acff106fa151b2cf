#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brieskorn/cli.hpp"
#include "brieskorn/report_json.hpp"
#include "brieskorn/seifert.hpp"

#include <fstream>
#include <regex>
#include <sstream>

using namespace brieskorn;
using arith::BigInt;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& s)
{
    std::vector<std::string> lines;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        lines.push_back(line);
    return lines;
}

std::vector<std::string> numbers_in(const std::string& s)
{
    static const std::regex num(R"(-?\d+(/\d+)?)");
    std::vector<std::string> out;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
        out.push_back(it->str());
    return out;
}

// numeric tokens of every JSON value in key order, keys skipped
void json_numbers(const Json& j, std::vector<std::string>& out)
{
    if (j.is_object() || j.is_array()) {
        for (const auto& v : j)
            json_numbers(v, out);
    } else if (j.is_string()) {
        for (auto& t : numbers_in(j.get<std::string>()))
            out.push_back(t);
    } else if (j.is_number()) {
        out.push_back(j.dump());
    }
}

// same from the text rendering: drop the title and every "key:" prefix
std::vector<std::string> text_numbers(const std::string& text)
{
    static const std::regex key(R"(^\s*(- )?[A-Za-z_][A-Za-z_0-9]*:( |$))");
    std::vector<std::string> out;
    auto lines = split_lines(text);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string body = std::regex_replace(lines[i], key, "", std::regex_constants::format_first_only);
        for (auto& t : numbers_in(body))
            out.push_back(t);
    }
    return out;
}

template <class T>
void round_trip(const T& value)
{
    Json j = value;
    Json reparsed = Json::parse(j.dump());
    CHECK(reparsed.get<T>() == value);
    CHECK(Json(reparsed.get<T>()) == j);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& out)
{
    auto lines = split_lines(out);
    REQUIRE(!lines.empty());
    REQUIRE(lines[0] == cli::scan_header);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream is(lines[i]);
        while (std::getline(is, cell, ','))
            cells.push_back(cell);
        if (!lines[i].empty() && lines[i].back() == ',')
            cells.emplace_back();
        REQUIRE(cells.size() == 11);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("exit codes")
{
    CHECK(run({"analyze", "2", "3", "5"}).code == 0);
    auto bad = run({"analyze", "2", "4", "5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("pairwise coprime") != std::string::npos);
    CHECK(bad.out.empty());

    auto unknown = run({"frobnicate", "1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"analyze", "2", "3"}).code == 2);
    CHECK(run({"analyze", "2", "x", "5"}).code == 2);
    CHECK(run({"family", "2", "3", "1", "--sign", "sideways"}).code == 2);
    CHECK(run({"rot", "2", "3", "7"}).code == 2); // -1 center
    CHECK(run({"rot", "2", "3", "5", "--limit", "0"}).code == 2);
    CHECK(run({"plumbing", "2", "3", "5", "--dot", "--json"}).code == 2);
    CHECK(run({"scan", "pq-nothing"}).code == 2);
    CHECK(run({"cuspidal", "3", "2;3"}).code == 2);

    auto budget = run({"analyze", "2", "3", "7", "--char-box-margin", "200"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("budget") != std::string::npos);
    CHECK(run({"analyze", "2", "3", "7", "--char-box-margin", "2"}).code == 0);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze 2 3 5 --json")
{
    auto r = run({"analyze", "2", "3", "5", "--json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["schema_version"] == "1");
    CHECK(j["command"] == Json::array({"analyze", "2", "3", "5", "--json"}));
    const auto& p = j["payload"];
    CHECK(p["d"] == 2);
    CHECK(p["weinstein_constraints"]["min_b2"] == 8);
    CHECK(p["small_surface"]["excluded_small_k_max"] == 7);
    CHECK(p["strongly_suitable"] == false);
    CHECK(r.out.find("realized at k=8") != std::string::npos);
    CHECK(run({"analyze", "2", "3", "5", "--json"}).out == r.out);
}

TEST_CASE("golden files")
{
    const std::string dir = BRIESKORN_GOLDEN_DIR;
    auto a = run({"analyze", "2", "3", "5", "--json"});
    CHECK(a.out == slurp(dir + "/analyze_2_3_5.json"));
    auto b = run({"analyze", "2", "3", "7", "--json"});
    CHECK(b.out == slurp(dir + "/analyze_2_3_7.json"));

    auto g = Json::parse(slurp(dir + "/analyze_2_3_7.json"))["payload"];
    CHECK(g["strongly_suitable"] == true);
    CHECK(g["suitability_reason"] == "d-zero");
    CHECK(g["small_surface"]["excluded_all_positive"] == true);
    CHECK(g["d"] == 0);
}

TEST_CASE("JSON and text modes agree numerically")
{
    const std::vector<std::vector<std::string>> commands{
        {"analyze", "2", "3", "5"},        {"analyze", "2", "3", "7"},
        {"analyze", "3", "5", "7"},        {"analyze", "2", "3", "5", "7"},
        {"family", "2", "3", "2", "--sign", "minus"},
        {"plumbing", "2", "3", "7"},       {"dinv", "2", "7", "13"},
        {"semigroup", "4", "9"},           {"rot", "3", "4", "11", "--limit", "5"},
        {"markov", "--markov-bound", "1000"}, {"markov", "433", "--markov-bound", "1000"},
        {"cuspidal", "4", "2,3", "2,3", "2,3"}, {"flmn", "4"}};
    for (auto args : commands) {
        CAPTURE(args.front());
        auto text = run(args);
        args.push_back("--json");
        auto json = run(args);
        REQUIRE(text.code == 0);
        REQUIRE(json.code == 0);
        std::vector<std::string> expected;
        json_numbers(Json::parse(json.out)["payload"], expected);
        CHECK(text_numbers(text.out) == expected);
        CHECK_FALSE(expected.empty());
    }
}

TEST_CASE("plumbing --dot")
{
    auto r = run({"plumbing", "2", "3", "5", "--dot"});
    REQUIRE(r.code == 0);
    std::size_t nodes = 0, edges = 0;
    for (const auto& line : split_lines(r.out)) {
        nodes += line.find("[label=") != std::string::npos;
        edges += line.find(" -- ") != std::string::npos;
    }
    CHECK(nodes == 8);
    CHECK(edges == 7);
    CHECK(r.out.rfind("graph", 0) == 0);
}

TEST_CASE("JSON round trips")
{
    round_trip(arith::Rational(-7, 12));
    round_trip(arith::Rational(BigInt(1) << 90, BigInt(3)));
    CHECK(big_from_json(big_to_json(BigInt(1) << 70)) == (BigInt(1) << 70));
    CHECK(big_to_json(BigInt(-5)).is_number_integer());
    CHECK(big_to_json(BigInt(1) << 70).is_string());

    auto g = plumbing::build_plumbing(seifert::seifert_invariants(seifert::BrieskornData({2, 7, 13})));
    round_trip(g);
    auto props = plumbing::form_properties(plumbing::intersection_matrix(g));
    plumbing::FormProperties back = Json::parse(Json(props).dump()).get<plumbing::FormProperties>();
    CHECK(back.negative_definite == props.negative_definite);
    CHECK(back.determinant == props.determinant);
    CHECK(back.even == props.even);
    CHECK(back.b2 == props.b2);

    round_trip(floer::semigroup_profile(5, 7));
    round_trip(floer::d_invariant(seifert::BrieskornData({2, 3, 5})));
    round_trip(floer::d_invariant(seifert::BrieskornData({3, 4, 13})));
    round_trip(floer::contact_grading(arith::Rational(-1, 3), -1, 2));
    round_trip(stein::rot_profile(g));
    round_trip(stein::torus_legendrian_count(3, 5));
    round_trip(obstruct::cuspidal_check(3, {{2, 3}}));
    for (auto m : std::vector<std::vector<std::int64_t>>{{2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {3, 5, 7}, {2, 3, 5, 7}}) {
        auto rep = obstruct::analyze(seifert::BrieskornData(m));
        round_trip(rep);
        if (rep.family)
            round_trip(*rep.family);
    }
    round_trip(obstruct::flmn_family_report(4));
}

TEST_CASE("scan pq-plus")
{
    auto r = run({"scan", "pq-plus", "--q-max", "7", "--n-max", "2"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    CHECK(rows.size() == 22); // 11 coprime pairs p < q <= 7, two n each
    for (const auto& row : rows) {
        CHECK(row[2] == "0");
        CHECK(row[4] == "true");
        CHECK(row[7] == "d-zero");
    }
    CHECK(run({"scan", "pq-plus", "--q-max", "7", "--n-max", "2"}).out == r.out);
    CHECK(run({"scan", "pq-plus", "--q-max", "7", "--n-max", "2", "--csv"}).out == r.out);

    auto j = run({"scan", "pq-plus", "--q-max", "7", "--n-max", "2", "--json"});
    REQUIRE(j.code == 0);
    CHECK(Json::parse(j.out)["payload"].size() == 22);
}

TEST_CASE("scan prop31-3")
{
    auto r = run({"scan", "prop31-3", "--p-max", "4", "--k-max", "3"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    CHECK(rows.size() == 4);
    for (const auto& row : rows) {
        std::istringstream is(row[0]);
        std::int64_t p, q, c;
        is >> p >> q >> c;
        const std::int64_t k = (q - 1) / p;
        REQUIRE(p * k + 1 == q);
        CHECK(std::stoll(row[10]) * 8 == p * (p * k + 2));
        CHECK(row[4] == "true");
        CHECK(std::stoll(row[1]) == 2 * std::stoll(row[10]));
    }
}

TEST_CASE("scan flmn and empty ranges")
{
    auto r = run({"scan", "flmn"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][0] == "2 3 7");
    CHECK(rows[1][0] == "3 4 13");
    CHECK(rows[2][0] == "4 5 21");

    for (auto args : std::vector<std::vector<std::string>>{{"scan", "pq-plus", "--pq-max", "1"},
                                                           {"scan", "flmn", "--d-min", "6", "--d-max", "5"},
                                                           {"scan", "prop31-3", "--p-max", "1"}}) {
        auto e = run(args);
        CHECK(e.code == 0);
        CHECK(e.out == std::string(cli::scan_header) + "\n");
    }
}
