#ifndef PROCYCLIC_ERRORS_HPP
#define PROCYCLIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace procyclic {

// Violated precondition: mismatched primes or precisions, bad arguments.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inversion of a non-unit power series or of the zero Laurent series.
class not_a_unit_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A size budget (group order, bar complex, census) would be exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bounded search finished without finding a witness.
class search_exhausted_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace procyclic

#endif
