#pragma once

#include "exactform/errors.hpp"
#include "exactform/expr.hpp"

#include <string>
#include <vector>

namespace exactform {

class DuplicateVariableError : public Error {
public:
    explicit DuplicateVariableError(const std::string& name)
        : Error("duplicate differential variable: d" + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct FormEntry {
    std::string variable;
    Expr coefficient;
};

// Σ M_i dx_i = 0. Entry order is the variable order x_1..x_n that both
// solvers process; it is preserved from the input.
class DifferentialForm {
public:
    explicit DifferentialForm(std::vector<FormEntry> entries);

    const std::vector<FormEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    std::vector<std::string> variables() const;

private:
    std::vector<FormEntry> entries_;
};

} // namespace exactform
