#pragma once

#include <map>
#include <string>
#include <vector>

namespace polyzeta {

/// One checked instance of a verification sweep.
struct Instance {
    std::string input;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

/// Result of a verification sweep; `summary` is the contract line the CLI
/// prints last ("PASS (all N instances)", "FAIL (k of N instances)",
/// "vacuous" for an empty sweep, "EXPERIMENT (k of N instances hold)").
struct Report {
    std::string suite;
    std::map<std::string, std::string> parameters;
    std::vector<Instance> instances;
    bool experiment = false;  // experiment suites never count as failures
    std::string summary;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& i : instances)
            if (!i.pass) ++n;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
    bool ok() const { return experiment || all_pass(); }

    void add(std::string input, std::string lhs, std::string rhs, bool pass) {
        instances.push_back({std::move(input), std::move(lhs), std::move(rhs), pass});
    }

    /// Fills `summary` from the instance list.
    void finalize() {
        const std::size_t n = instances.size();
        const std::size_t bad = failures();
        if (n == 0)
            summary = "vacuous";
        else if (experiment)
            summary = "EXPERIMENT (" + std::to_string(n - bad) + " of " + std::to_string(n) +
                      " instances hold)";
        else if (bad == 0)
            summary = "PASS (all " + std::to_string(n) + " instances)";
        else
            summary = "FAIL (" + std::to_string(bad) + " of " + std::to_string(n) + " instances)";
    }
};

}  // namespace polyzeta
