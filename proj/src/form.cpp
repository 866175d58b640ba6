#include "exactform/form.hpp"

#include <set>

namespace exactform {

DifferentialForm::DifferentialForm(std::vector<FormEntry> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("differential form needs at least one entry");
    std::set<std::string> seen;
    for (const auto& e : entries_)
        if (!seen.insert(e.variable).second) throw DuplicateVariableError(e.variable);
}

std::vector<std::string> DifferentialForm::variables() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.variable);
    return out;
}

} // namespace exactform
