#ifndef TMCAT_ERROR_HPP
#define TMCAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tmcat {

// Precondition violations and malformed inputs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration exceeded a configured cap. CLI maps this to its own exit code.
class GuardError : public Error {
public:
    explicit GuardError(const std::string& what) : Error(what) {}
};

// A document failed to parse or referenced something undeclared.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

} // namespace tmcat

#endif
