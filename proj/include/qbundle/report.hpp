/* report.hpp
 * ----------
 * Outcome records shared by every check routine.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qb {

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

struct Params {
    std::optional<int> n, d;
    std::optional<std::string> q0, s0;
};

struct CheckResult {
    std::string check;
    Status status = Status::pass;
    std::string witness;   // counterexample or skip reason
    Params params;
};

class Report {
public:
    void add(std::string check, bool ok, std::string witness = {}, Params p = {}) {
        results_.push_back({std::move(check), ok ? Status::pass : Status::fail, ok ? std::string() : std::move(witness),
                            std::move(p)});
    }
    void skip(std::string check, std::string reason, Params p = {}) {
        results_.push_back({std::move(check), Status::skipped, std::move(reason), std::move(p)});
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (auto r : other.results_) {
            if (!prefix.empty()) r.check = prefix + "." + r.check;
            results_.push_back(std::move(r));
        }
    }
    bool ok() const {
        for (auto& r : results_)
            if (r.status == Status::fail) return false;
        return true;
    }
    const std::vector<CheckResult>& results() const { return results_; }
    std::string failures() const {
        std::string out;
        for (auto& r : results_)
            if (r.status == Status::fail) out += (out.empty() ? "" : "; ") + r.check + (r.witness.empty() ? "" : ": " + r.witness);
        return out;
    }

private:
    std::vector<CheckResult> results_;
};

}  // namespace qb
