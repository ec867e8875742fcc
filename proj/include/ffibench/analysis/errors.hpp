#pragma once

#include <stdexcept>
#include <string>

namespace ffibench::analysis {

/// Malformed input file (records CSV, analysis CSV, sample file).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but the analysis cannot proceed, e.g. missing
/// baseline data.
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Least-squares design matrix is singular (all x identical).
class DegenerateDesignError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace ffibench::analysis
