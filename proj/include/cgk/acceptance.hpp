#ifndef CGK_ACCEPTANCE_HPP
#define CGK_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace cgk {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

/// The eight end-to-end acceptance checks, in order. Deterministic.
std::vector<CriterionResult> run_acceptance();

/// One line, e.g. `criterion 1 PASS  jacobi audit: 10 specs`.
std::string format_line(const CriterionResult& r);

}  // namespace cgk

#endif  // CGK_ACCEPTANCE_HPP
