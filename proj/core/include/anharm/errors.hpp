#pragma once

#include <stdexcept>
#include <string>

namespace anharm {

/// Numerical routine failed to converge or found no solution.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Post-processing / fitting step could not produce a result.
class AnalysisError : public std::runtime_error {
public:
    explicit AnalysisError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace anharm
