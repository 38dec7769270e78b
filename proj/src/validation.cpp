#include "optics/validation.hpp"

#include <algorithm>
#include <iterator>

namespace optics {

bool ValidationReport::passed() const {
    return std::none_of(entries_.begin(), entries_.end(),
                        [](const ReportEntry& e) { return e.gating && !e.ok; });
}

const ReportEntry* ValidationReport::find(const std::string& clause) const {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const ReportEntry& e) { return e.clause == clause; });
    return it == entries_.end() ? nullptr : &*it;
}

std::vector<ReportEntry> ValidationReport::failures() const {
    std::vector<ReportEntry> out;
    std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(out),
                 [](const ReportEntry& e) { return !e.ok; });
    return out;
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& e : entries_) {
        if (e.ok || !e.gating) continue;
        if (!out.empty()) out += '\n';
        if (e.index) out += "component " + std::to_string(*e.index) + ": ";
        out += "violates " + e.clause;
        if (!e.detail.empty()) out += " (" + e.detail + ")";
    }
    return out;
}

}  // namespace optics
