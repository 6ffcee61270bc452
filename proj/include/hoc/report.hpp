#ifndef HOC_REPORT_HPP
#define HOC_REPORT_HPP

#include <string>
#include <vector>

namespace hoc {

struct CheckItem {
    std::string id;
    bool ok = false;
    std::string detail;
};

struct RunReport {
    std::string suite;
    std::vector<CheckItem> checks;
    double wall_seconds = 0;  // shown in text output only, never serialized

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

}  // namespace hoc

#endif
