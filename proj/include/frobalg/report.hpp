#pragma once

#include <string>
#include <vector>

namespace frobalg {

/// Accumulates named violations of a set of axioms. Empty report == valid.
class ValidationReport {
public:
    void fail(std::string what) { violations_.push_back(std::move(what)); }

    bool ok() const { return violations_.empty(); }
    const std::vector<std::string>& violations() const { return violations_; }

    std::string summary() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& v : violations_) {
            if (!s.empty()) s += "; ";
            s += v;
        }
        return s;
    }

private:
    std::vector<std::string> violations_;
};

}  // namespace frobalg
