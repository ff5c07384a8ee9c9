#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockcodes/graph.hpp"
#include "blockcodes/json_io.hpp"

namespace blockcodes {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckOutcome {
    CheckStatus status = CheckStatus::Skip;
    std::string reason;  // skip reason or failure detail

    static CheckOutcome pass() { return {CheckStatus::Pass, {}}; }
    static CheckOutcome fail(std::string why) { return {CheckStatus::Fail, std::move(why)}; }
    static CheckOutcome skip(std::string why) { return {CheckStatus::Skip, std::move(why)}; }
};

/// Named bound checks, in report order.
///   ld_min        γLD <= min(γID, γOLD)
///   double_ld     γID < 2γLD and γOLD < 2γLD (violations are findings, not failures)
///   nq_lt_n       connected block graph, n >= 2: n_Q < n
///   n_le_2nq      connected identifiable block graph: n <= 2 n_Q - 1
///   id_ub         identifiable block graph: γID <= n_Q
///   old_ub        connected OLD-admissible block graph other than P2, P4: γOLD <= n - 1
///   ld_ub         block graph: γLD <= n_Q if identifiable, else n - 1
///   lb_n          block graph: 3γID >= n + 3, 3γOLD >= n + 3, 3γLD >= n + 1
///   lb_nq         block graph: 7γID >= 3(n_Q + 2), 7γOLD >= 3(n_Q + 2), 3γLD >= n_Q + 2, 2γOLD >= n_Q + 3
///   construct_ok  connected identifiable block graph: constructive code valid and <= n_Q
///   claims        block graph: decomposition inequalities for minimum codes of every admissible kind
inline constexpr std::array<std::string_view, 11> kCheckNames = {
    "ld_min", "double_ld", "nq_lt_n", "n_le_2nq", "id_ub", "old_ub",
    "ld_ub",  "lb_n",      "lb_nq",   "construct_ok", "claims"};

/// Checks whose failures do not flip the exit status.
inline constexpr std::string_view kFindingChecks[] = {"double_ld"};

struct CheckOptions {
    /// Minimum codes are enumerated exhaustively for the claims check up to
    /// this order; larger graphs use the solver certificate only.
    int claims_enumeration_limit = 12;
    /// Added to the right-hand side of id_ub. Nonzero only for failure-injection tests.
    int id_ub_offset = 0;
};

struct CheckReport {
    std::string id;      // canonical graph6 for n <= 10, otherwise the input graph6
    std::string source;  // "enumerated" or a family label
    std::string graph6;  // input labelling
    int n = 0;
    int nq = 0;
    bool connected = false;
    bool block_graph = false;
    bool identifiable = false;
    bool old_admissible = false;
    std::optional<int> gamma_id, gamma_ld, gamma_old;
    std::optional<int> construct_size;
    std::array<CheckOutcome, kCheckNames.size()> checks;
    std::vector<std::string> findings;

    const CheckOutcome& check(std::string_view name) const;
    bool hard_failure() const;
};

CheckReport run_checks(const Graph& g, const std::string& source = "enumerated", const CheckOptions& opts = {});

/// Every minimum code of `kind` (exhaustive search over subsets of size γ).
std::vector<VertexSet> all_minimum_codes(const Graph& g, CodeKind kind, int gamma);

Json to_json(const CheckReport& r);
Json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

struct VerifyOptions {
    int max_n = 8;
    bool families = false;
    CheckOptions checks;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifySummary {
    std::vector<CheckReport> reports;
    int hard_failures = 0;  // reports with at least one hard failure
    int findings = 0;
    int exit_code() const { return hard_failures == 0 ? 0 : 1; }
};

/// Connected block graphs with 2 <= n <= max_n, then (optionally) the
/// parameterized families. Report order does not depend on scheduling.
VerifySummary run_verify(const VerifyOptions& opts);

/// Graphs swept by `verify --families`, with their labels.
std::vector<std::pair<std::string, Graph>> verification_families();

}  // namespace blockcodes
