#include "cvf/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <thread>

#include "json.hpp"

namespace cvf {

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs) {
    if (jobs < 1) jobs = 1;
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            const Check& check = checks[i];
            CheckResult& res = results[i];
            res.name = check.name;
            res.anchor = check.anchor;
            res.params = check.params;
            auto t0 = std::chrono::steady_clock::now();
            try {
                CheckOutcome out = check.run();
                res.status = out.status;
                res.witness = out.witness;
            } catch (const std::exception& e) {
                res.status = CheckStatus::Fail;
                res.witness = std::string("internal error: ") + e.what();
                res.internal_error = true;
            }
            auto t1 = std::chrono::steady_clock::now();
            res.millis =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        }
    };

    std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                  std::max<std::size_t>(checks.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return results;
}

ReportSummary summarize(const std::vector<CheckResult>& results) {
    ReportSummary s;
    for (const auto& r : results) {
        switch (r.status) {
        case CheckStatus::Pass: ++s.passed; break;
        case CheckStatus::Fail: ++s.failed; break;
        case CheckStatus::Reported: ++s.reported; break;
        }
        if (r.internal_error) s.internal_error = true;
    }
    return s;
}

int report_exit_code(const std::vector<CheckResult>& results) {
    auto s = summarize(results);
    if (s.internal_error) return 3;
    return s.failed > 0 ? 1 : 0;
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        os << "[" << std::setw(8) << status_name(r.status) << "] " << r.name << " ("
           << r.millis << " ms)\n";
        if (!r.witness.empty()) {
            // long serialized tables go to the JSON report in full
            if (r.witness.size() > 500)
                os << "           " << r.witness.substr(0, 500) << "... (truncated; see --json)\n";
            else
                os << "           " << r.witness << "\n";
        }
    }
    auto s = summarize(results);
    os << s.passed << " passed, " << s.failed << " failed, " << s.reported
       << " reported\n";
}

std::string report_to_json(const std::vector<CheckResult>& results, std::uint64_t seed) {
    nlohmann::ordered_json doc;
    doc["version"] = "0.1.0";
    doc["seed"] = seed;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json item;
        item["name"] = r.name;
        item["paper_anchor"] = r.anchor;
        item["params"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) item["params"][k] = v;
        item["status"] = status_name(r.status);
        if (!r.witness.empty()) item["witness"] = r.witness;
        item["millis"] = r.millis;
        doc["checks"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

} // namespace cvf
