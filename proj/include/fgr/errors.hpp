#ifndef FGR_ERRORS_HPP
#define FGR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fgr {

// Precondition violations and evaluation at/near poles.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Iterative scheme ran out of budget before reaching the requested tolerance.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result magnitude is below the representable floor. Distinct from an exact
// zero, which is returned normally.
struct underflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int line_number)
        : std::runtime_error(msg), line(line_number) {}
    int line;
};

} // namespace fgr

#endif
