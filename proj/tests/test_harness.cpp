#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "blockcodes/families.hpp"
#include "blockcodes/harness.hpp"
#include "blockcodes/solver.hpp"
#include "support.hpp"

using namespace blockcodes;
using namespace testing;

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(cell);
        if (!line.empty() && line.back() == ',') row.emplace_back();
        rows.push_back(row);
    }
    return rows;
}

std::string csv_cell(const Json& j, const char* key) {
    if (!j.contains(key)) return "";
    if (j[key].is_boolean()) return j[key].get<bool>() ? "1" : "0";
    if (j[key].is_string()) return j[key].get<std::string>();
    return std::to_string(j[key].get<int>());
}

std::string status_letter(const std::string& status) {
    if (status == "pass") return "P";
    if (status == "fail") return "F";
    return "S";
}

}  // namespace

TEST_CASE("check names are unique and addressable") {
    const CheckReport r = run_checks(path(5));
    for (auto name : kCheckNames) CHECK_NOTHROW(r.check(name));
    CHECK_THROWS(r.check("nope"));
}

TEST_CASE("exception graphs skip old_ub") {
    for (int n : {2, 4}) {
        const CheckReport r = run_checks(path(n));
        CHECK(r.check("old_ub").status == CheckStatus::Skip);
        CHECK(r.check("old_ub").reason == "exception graph");
    }
    const CheckReport p5 = run_checks(path(5));
    CHECK(p5.check("old_ub").status == CheckStatus::Pass);
    const CheckReport p3r = run_checks(p3());
    CHECK(p3r.check("old_ub").reason == "not OLD-admissible");
}

TEST_CASE("non-block graphs skip the block-graph bounds") {
    const CheckReport r = run_checks(path_power(6, 2), "path_power(6,2)");
    CHECK_FALSE(r.block_graph);
    CHECK(r.check("id_ub").status == CheckStatus::Skip);
    CHECK(r.check("id_ub").reason == "not a block graph");
    CHECK(r.gamma_id == 5);
    CHECK(r.nq == 4);
    CHECK(r.check("ld_min").status == CheckStatus::Pass);
    CHECK_FALSE(r.hard_failure());
}

TEST_CASE("gamma fields follow admissibility") {
    const CheckReport p = run_checks(p3());
    CHECK(p.gamma_id == 2);
    CHECK(p.gamma_ld == 2);
    CHECK_FALSE(p.gamma_old.has_value());
    const Json j = to_json(p);
    CHECK(j.contains("gamma_id"));
    CHECK_FALSE(j.contains("gamma_old"));

    const CheckReport k3 = run_checks(clique(3));
    CHECK_FALSE(k3.gamma_id.has_value());
    CHECK(k3.gamma_old == 2);
    CHECK(k3.check("id_ub").reason == "not identifiable");
    CHECK_FALSE(k3.hard_failure());
}

TEST_CASE("spider and extremal reports") {
    const CheckReport s = run_checks(thin_spider(4), "spider(4)");
    CHECK(s.gamma_id == 5);
    CHECK(s.nq == 5);
    CHECK(s.construct_size == 5);
    CHECK(s.check("id_ub").status == CheckStatus::Pass);
    CHECK(s.check("construct_ok").status == CheckStatus::Pass);
    for (int k = 4; k <= 6; ++k) {
        const CheckReport r = run_checks(extremal_id(k));
        CHECK(r.check("lb_n").status == CheckStatus::Pass);
        CHECK(3 * *r.gamma_id == r.n + 3);
    }
}

TEST_CASE("double_ld violations are findings") {
    const CheckReport r = run_checks(path(2));
    CHECK(r.check("double_ld").status == CheckStatus::Fail);
    REQUIRE(r.findings.size() == 1);
    CHECK_FALSE(r.hard_failure());
}

TEST_CASE("failures carry a witness") {
    CheckOptions opts;
    opts.id_ub_offset = -1;
    const CheckReport r = run_checks(thin_spider(3), "spider(3)", opts);
    CHECK(r.check("id_ub").status == CheckStatus::Fail);
    CHECK(r.hard_failure());
    const Json j = to_json(r);
    CHECK(j["witness"] == emit_graph(thin_spider(3), GraphFormat::Graph6));
    CHECK(j["checks"]["id_ub"]["status"] == "fail");
}

TEST_CASE("exit code contract and failure injection") {
    VerifyOptions opts;
    opts.max_n = 3;
    VerifySummary clean = run_verify(opts);
    CHECK(clean.reports.size() == 3);
    CHECK(clean.hard_failures == 0);
    CHECK(clean.exit_code() == 0);

    opts.checks.id_ub_offset = -1;
    VerifySummary injected = run_verify(opts);
    CHECK(injected.hard_failures > 0);
    CHECK(injected.exit_code() == 1);
}

TEST_CASE("reports do not depend on scheduling") {
    VerifyOptions one;
    one.max_n = 7;
    one.threads = 1;
    VerifyOptions many = one;
    many.threads = 4;
    const std::string a = reports_to_json(run_verify(one).reports).dump();
    const std::string b = reports_to_json(run_verify(many).reports).dump();
    CHECK(a == b);
}

TEST_CASE("CSV and JSON carry the same data") {
    VerifyOptions opts;
    opts.max_n = 6;
    opts.families = true;
    const VerifySummary s = run_verify(opts);
    const Json j = reports_to_json(s.reports);
    const auto rows = read_csv(reports_to_csv(s.reports));
    REQUIRE(rows.size() == j.size() + 1);
    const auto& header = rows[0];
    REQUIRE(header.size() == 8 + kCheckNames.size());
    CHECK(header[0] == "canon");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& r = j[i];
        const auto& row = rows[i + 1];
        REQUIRE(row.size() == header.size());
        CHECK(row[0] == r["id"].get<std::string>());
        for (std::size_t c = 1; c < 8; ++c) CHECK(row[c] == csv_cell(r, header[c].c_str()));
        for (std::size_t c = 0; c < kCheckNames.size(); ++c) {
            const std::string name(kCheckNames[c]);
            CHECK(header[8 + c] == name);
            CHECK(row[8 + c] == status_letter(r["checks"][name]["status"].get<std::string>()));
        }
    }
}

TEST_CASE("report ids are canonical") {
    std::mt19937_64 rng(2);
    const Graph g = thin_spider(4);
    const Graph h = relabel(g, random_perm(g.n(), rng));
    CHECK(run_checks(g).id == run_checks(h).id);
    const CheckReport big = run_checks(path(12));
    CHECK(big.id == big.graph6);
}

TEST_CASE("all minimum codes") {
    CHECK(all_minimum_codes(path(4), CodeKind::ID, 3) == std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}});
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(3 + t % 7, 0.4, rng);
        for (CodeKind kind : kAllKinds) {
            if (!is_admissible(g, kind)) continue;
            const int k = gamma(g, kind).gamma;
            std::vector<VertexSet> expected;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
                if (VertexSet(m).size() == k && is_valid(g, Code{kind, VertexSet(m)})) expected.push_back(VertexSet(m));
            }
            auto got = all_minimum_codes(g, kind, k);
            std::sort(got.begin(), got.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
            REQUIRE(got == expected);
        }
    }
    CHECK(all_minimum_codes(path(2), CodeKind::OLD, 2) == std::vector<VertexSet>{{0, 1}});
}
