#pragma once

#include <stdexcept>
#include <string>

namespace shufmat {

/// Thrown when a computation would exceed a configured size bound
/// (dense materialization limits, group closure limits, ...).
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by exact root-of-unity arithmetic when an operation would need
/// the sum of two distinct powers in a single cell. The cell grammar only
/// admits 0 or a single power, so hitting this is a logic bug in the
/// calling algebra, not a data condition.
struct structural_error : std::logic_error {
    explicit structural_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace shufmat
