#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace optics {

/// One checked clause. `gating` clauses decide `passed()`; non-gating ones
/// are reported for information (preconditions of derived laws, known discrepancies).
struct ReportEntry {
    std::string clause;
    std::string detail;
    bool ok = true;
    bool gating = true;
    std::optional<std::size_t> index;
};

class ValidationReport {
public:
    void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }

    bool passed() const;
    // Entry for `clause`, or nullptr. If several share the name, the first.
    const ReportEntry* find(const std::string& clause) const;
    std::vector<ReportEntry> failures() const;
    const std::vector<ReportEntry>& entries() const { return entries_; }

    // Multi-line, one failed gating clause per line.
    std::string summary() const;

private:
    std::vector<ReportEntry> entries_;
};

}  // namespace optics
