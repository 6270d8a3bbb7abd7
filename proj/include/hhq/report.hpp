#pragma once

#include <string>
#include <vector>

namespace hhq {

enum class CheckStatus { Pass, PassWithNote, Fail };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

struct Report {
    std::vector<CheckResult> checks;

    void pass(std::string name, std::string note = "") {
        checks.push_back({std::move(name), CheckStatus::Pass, std::move(note)});
    }
    void pass_with_note(std::string name, std::string note) {
        checks.push_back({std::move(name), CheckStatus::PassWithNote, std::move(note)});
    }
    void fail(std::string name, std::string note) {
        checks.push_back({std::move(name), CheckStatus::Fail, std::move(note)});
    }
    void record(std::string name, bool ok, std::string note = "") {
        if (ok)
            pass(std::move(name), std::move(note));
        else
            fail(std::move(name), std::move(note));
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) ++n;
        return n;
    }
};

}  // namespace hhq
