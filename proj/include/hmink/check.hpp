#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace hmink {

// Result of one verification. A failing check carries a witness expression.
struct CheckReport {
    std::string name;
    bool pass = false;
    std::string witness;
    long long millis = 0;

    static CheckReport ok(std::string name) { return {std::move(name), true, "", 0}; }
    static CheckReport fail(std::string name, std::string witness) {
        return {std::move(name), false, std::move(witness), 0};
    }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckReport> checks;

    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// wall-clock helper used by the suite runners
template <typename F>
CheckReport timed_check(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = f();
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

}  // namespace hmink
