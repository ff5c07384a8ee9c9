#include "blockcodes/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "blockcodes/construct.hpp"
#include "blockcodes/enumerate.hpp"
#include "blockcodes/families.hpp"
#include "blockcodes/graph_io.hpp"
#include "blockcodes/solver.hpp"

namespace blockcodes {

namespace {

std::size_t check_index(std::string_view name) {
    auto it = std::find(kCheckNames.begin(), kCheckNames.end(), name);
    if (it == kCheckNames.end()) throw std::invalid_argument("unknown check: " + std::string(name));
    return static_cast<std::size_t>(it - kCheckNames.begin());
}

bool is_finding_check(std::string_view name) {
    return std::find(std::begin(kFindingChecks), std::end(kFindingChecks), name) != std::end(kFindingChecks);
}

/// P2 or P4 (the connected block graphs with γOLD = n).
bool is_p2_or_p4(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.n() == 2) return g.edge_count() == 1;
    if (g.n() != 4 || g.edge_count() != 3) return false;
    for (Vertex v = 0; v < 4; ++v) {
        if (g.degree(v) > 2) return false;
    }
    return true;
}

const char* status_word(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

char status_letter(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return 'P';
        case CheckStatus::Fail: return 'F';
        case CheckStatus::Skip: return 'S';
    }
    return '?';
}

std::string opt_to_string(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

const CheckOutcome& CheckReport::check(std::string_view name) const { return checks[check_index(name)]; }

bool CheckReport::hard_failure() const {
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
        if (checks[i].status == CheckStatus::Fail && !is_finding_check(kCheckNames[i])) return true;
    }
    return false;
}

std::vector<VertexSet> all_minimum_codes(const Graph& g, CodeKind kind, int gamma) {
    const int n = g.n();
    std::vector<VertexSet> out;
    if (gamma < 0 || gamma > n) return out;
    std::vector<Vertex> idx(static_cast<std::size_t>(gamma));
    for (int i = 0; i < gamma; ++i) idx[i] = i;
    for (;;) {
        VertexSet s = VertexSet::from_vector(idx);
        if (is_valid(g, Code{kind, s})) out.push_back(s);
        int i = gamma - 1;
        while (i >= 0 && idx[i] == n - gamma + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < gamma; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

CheckReport run_checks(const Graph& g, const std::string& source, const CheckOptions& opts) {
    CheckReport r;
    r.source = source;
    r.graph6 = emit_graph(g, GraphFormat::Graph6);
    r.id = g.n() <= kCanonicalLimit ? canonical_id(g) : r.graph6;
    r.n = g.n();
    r.nq = count_maximal_cliques(g);
    r.connected = is_connected(g);
    r.block_graph = is_block_graph(g);
    r.identifiable = is_identifiable(g);
    r.old_admissible = is_old_admissible(g);

    std::optional<SolveResult> sol_id, sol_ld, sol_old;
    if (r.identifiable) sol_id = gamma(g, CodeKind::ID);
    sol_ld = gamma(g, CodeKind::LD);
    if (r.old_admissible) sol_old = gamma(g, CodeKind::OLD);
    if (sol_id) r.gamma_id = sol_id->gamma;
    if (sol_ld) r.gamma_ld = sol_ld->gamma;
    if (sol_old) r.gamma_old = sol_old->gamma;

    const int n = r.n;
    const int nq = r.nq;
    auto set = [&](std::string_view name, CheckOutcome o) { r.checks[check_index(name)] = std::move(o); };
    const std::string not_block = "not a block graph";

    // ld_min, double_ld
    if (!r.gamma_id && !r.gamma_old) {
        set("ld_min", CheckOutcome::skip("no ID- or OLD-code"));
        set("double_ld", CheckOutcome::skip("no ID- or OLD-code"));
    } else {
        const int ld = *r.gamma_ld;
        std::string bad;
        if (r.gamma_id && ld > *r.gamma_id) bad += "gamma_ld > gamma_id; ";
        if (r.gamma_old && ld > *r.gamma_old) bad += "gamma_ld > gamma_old; ";
        set("ld_min", bad.empty() ? CheckOutcome::pass() : CheckOutcome::fail(bad));
        std::string twice;
        if (r.gamma_id && *r.gamma_id >= 2 * ld) twice += "gamma_id >= 2 gamma_ld; ";
        if (r.gamma_old && *r.gamma_old >= 2 * ld) twice += "gamma_old >= 2 gamma_ld; ";
        if (twice.empty()) {
            set("double_ld", CheckOutcome::pass());
        } else {
            set("double_ld", CheckOutcome::fail(twice));
            r.findings.push_back("double_ld: " + twice);
        }
    }

    // nq_lt_n, n_le_2nq
    if (!r.block_graph) {
        set("nq_lt_n", CheckOutcome::skip(not_block));
        set("n_le_2nq", CheckOutcome::skip(not_block));
    } else if (!r.connected) {
        set("nq_lt_n", CheckOutcome::skip("not connected"));
        set("n_le_2nq", CheckOutcome::skip("not connected"));
    } else {
        if (n < 2) {
            set("nq_lt_n", CheckOutcome::skip("n < 2"));
        } else {
            set("nq_lt_n", nq < n ? CheckOutcome::pass() : CheckOutcome::fail("n_Q >= n"));
        }
        if (!r.identifiable) {
            set("n_le_2nq", CheckOutcome::skip("not identifiable"));
        } else {
            set("n_le_2nq", n <= 2 * nq - 1 ? CheckOutcome::pass() : CheckOutcome::fail("n > 2 n_Q - 1"));
        }
    }

    // id_ub
    if (!r.block_graph) {
        set("id_ub", CheckOutcome::skip(not_block));
    } else if (!r.identifiable) {
        set("id_ub", CheckOutcome::skip("not identifiable"));
    } else {
        set("id_ub", *r.gamma_id <= nq + opts.id_ub_offset ? CheckOutcome::pass() : CheckOutcome::fail("gamma_id > n_Q"));
    }

    // old_ub
    if (!r.block_graph) {
        set("old_ub", CheckOutcome::skip(not_block));
    } else if (!r.connected) {
        set("old_ub", CheckOutcome::skip("not connected"));
    } else if (!r.old_admissible) {
        set("old_ub", CheckOutcome::skip("not OLD-admissible"));
    } else if (is_p2_or_p4(g)) {
        set("old_ub", CheckOutcome::skip("exception graph"));
    } else {
        set("old_ub", *r.gamma_old <= n - 1 ? CheckOutcome::pass() : CheckOutcome::fail("gamma_old > n - 1"));
    }

    if (!r.block_graph) {
        for (auto name : {"ld_ub", "lb_n", "lb_nq", "construct_ok", "claims"}) set(name, CheckOutcome::skip(not_block));
        return r;
    }

    // ld_ub
    {
        const int bound = r.identifiable ? nq : n - 1;
        set("ld_ub", *r.gamma_ld <= bound ? CheckOutcome::pass()
                                          : CheckOutcome::fail(r.identifiable ? "gamma_ld > n_Q" : "gamma_ld > n - 1"));
    }

    // lb_n, lb_nq: cross-multiplied integer comparisons.
    {
        std::string bad;
        if (r.gamma_id && 3 * *r.gamma_id < n + 3) bad += "3 gamma_id < n + 3; ";
        if (r.gamma_old && 3 * *r.gamma_old < n + 3) bad += "3 gamma_old < n + 3; ";
        if (3 * *r.gamma_ld < n + 1) bad += "3 gamma_ld < n + 1; ";
        set("lb_n", bad.empty() ? CheckOutcome::pass() : CheckOutcome::fail(bad));
    }
    {
        std::string bad;
        if (r.gamma_id && 7 * *r.gamma_id < 3 * (nq + 2)) bad += "7 gamma_id < 3 (n_Q + 2); ";
        if (r.gamma_old && 7 * *r.gamma_old < 3 * (nq + 2)) bad += "7 gamma_old < 3 (n_Q + 2); ";
        if (3 * *r.gamma_ld < nq + 2) bad += "3 gamma_ld < n_Q + 2; ";
        if (r.gamma_old && 2 * *r.gamma_old < nq + 3) bad += "2 gamma_old < n_Q + 3; ";
        set("lb_nq", bad.empty() ? CheckOutcome::pass() : CheckOutcome::fail(bad));
    }

    // construct_ok
    if (!r.connected) {
        set("construct_ok", CheckOutcome::skip("not connected"));
    } else if (!r.identifiable) {
        set("construct_ok", CheckOutcome::skip("not identifiable"));
    } else {
        try {
            ConstructResult c = id_code_at_most_nq(g);
            r.construct_size = c.code.members.size();
            if (!is_valid(g, c.code)) {
                set("construct_ok", CheckOutcome::fail("constructed code is not an identifying code"));
            } else if (*r.construct_size > nq) {
                set("construct_ok", CheckOutcome::fail("constructed code larger than n_Q"));
            } else {
                set("construct_ok", CheckOutcome::pass());
            }
        } catch (const InternalContradiction& e) {
            set("construct_ok", CheckOutcome::fail(e.what()));
        }
    }

    // claims
    {
        std::string bad;
        for (CodeKind kind : kAllKinds) {
            const std::optional<SolveResult>& sol =
                kind == CodeKind::ID ? sol_id : (kind == CodeKind::LD ? sol_ld : sol_old);
            if (!sol) continue;
            std::vector<VertexSet> codes;
            if (n <= opts.claims_enumeration_limit) {
                codes = all_minimum_codes(g, kind, sol->gamma);
            } else {
                codes.push_back(sol->certificate.members);
            }
            for (VertexSet members : codes) {
                ClaimCheck cc = check_claims(decompose(g, Code{kind, members}), kind);
                if (cc.all()) continue;
                bad += std::string(kind_name(kind)) + " " + members.to_string() + ":";
                for (const auto& f : cc.failures()) bad += " " + f;
                bad += "; ";
                break;  // first failing minimum code per kind
            }
        }
        set("claims", bad.empty() ? CheckOutcome::pass() : CheckOutcome::fail(bad));
    }
    return r;
}

Json to_json(const CheckReport& r) {
    Json j{{"id", r.id}, {"source", r.source}, {"graph6", r.graph6},   {"n", r.n},
           {"nq", r.nq}, {"connected", r.connected}, {"block_graph", r.block_graph},
           {"identifiable", r.identifiable}, {"old_admissible", r.old_admissible}};
    if (r.gamma_id) j["gamma_id"] = *r.gamma_id;
    if (r.gamma_ld) j["gamma_ld"] = *r.gamma_ld;
    if (r.gamma_old) j["gamma_old"] = *r.gamma_old;
    if (r.construct_size) j["construct_size"] = *r.construct_size;
    if (r.construct_size && r.gamma_id) j["construct_gap"] = *r.construct_size - *r.gamma_id;
    Json checks = Json::object();
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
        Json c{{"status", status_word(r.checks[i].status)}};
        if (!r.checks[i].reason.empty()) c["reason"] = r.checks[i].reason;
        checks[std::string(kCheckNames[i])] = std::move(c);
    }
    j["checks"] = std::move(checks);
    j["findings"] = r.findings;
    if (r.hard_failure()) j["witness"] = r.graph6;
    return j;
}

Json reports_to_json(const std::vector<CheckReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    os << "canon,n,nq,identifiable,old_admissible,gamma_id,gamma_ld,gamma_old";
    for (auto name : kCheckNames) os << ',' << name;
    os << '\n';
    for (const auto& r : reports) {
        // graph6 uses no commas or quotes, so ids need no escaping.
        os << r.id << ',' << r.n << ',' << r.nq << ',' << (r.identifiable ? 1 : 0) << ','
           << (r.old_admissible ? 1 : 0) << ',' << opt_to_string(r.gamma_id) << ',' << opt_to_string(r.gamma_ld)
           << ',' << opt_to_string(r.gamma_old);
        for (const auto& c : r.checks) os << ',' << status_letter(c.status);
        os << '\n';
    }
    return os.str();
}

std::vector<std::pair<std::string, Graph>> verification_families() {
    std::vector<std::pair<std::string, Graph>> out;
    auto add = [&](FamilySpec spec) { out.emplace_back(spec.label(), generate(spec)); };
    for (int k = 1; k <= 6; ++k) add({"star", k, {}, {}});
    for (int k = 2; k <= 12; ++k) add({"path", k, {}, {}});
    for (int k = 2; k <= 6; ++k) add({"clique", k, {}, {}});
    for (int k = 3; k <= 6; ++k) add({"spider", k, {}, {}});
    add({"path_power", 6, 2, {}});
    add({"path_power", 8, 3, {}});
    for (int k = 4; k <= 7; ++k) add({"extremal_id", k, {}, {}});
    for (int k = 5; k <= 7; ++k) add({"extremal_old", k, {}, {}});
    for (int k = 2; k <= 7; ++k) add({"extremal_ld", k, {}, {}});
    for (int k = 2; k <= 3; ++k) add({"split_hypercube", k, {}, {}});
    for (std::uint64_t seed = 1; seed <= 5; ++seed) add({"random_block", 8, 4, seed});
    return out;
}

VerifySummary run_verify(const VerifyOptions& opts) {
    std::vector<std::pair<std::string, Graph>> work;
    for (int n = 2; n <= opts.max_n; ++n) {
        for (Graph& g : enumerate_connected_block_graphs(n)) work.emplace_back("enumerated", std::move(g));
    }
    if (opts.families) {
        for (auto& item : verification_families()) work.push_back(std::move(item));
    }

    VerifySummary summary;
    summary.reports.resize(work.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            try {
                summary.reports[i] = run_checks(work[i].second, work[i].first, opts.checks);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, work.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    for (const auto& r : summary.reports) {
        if (r.hard_failure()) ++summary.hard_failures;
        summary.findings += static_cast<int>(r.findings.size());
    }
    return summary;
}

}  // namespace blockcodes
