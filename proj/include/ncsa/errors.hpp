#pragma once

#include <stdexcept>
#include <string>

namespace ncsa {

enum class ErrorKind {
    invalid_argument,
    schema,
    tolerance,
    unsupported,
    pole,
    assumption,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Raised at a simple pole; carries the residue so callers can still report it.
class PoleError : public Error {
public:
    PoleError(const std::string& what, double residue)
        : Error(ErrorKind::pole, what), residue_(residue) {}
    double residue() const { return residue_; }

private:
    double residue_;
};

// CLI exit status for an error kind: 2 schema, 3 tolerance, 4 unsupported.
int exit_code(ErrorKind kind);

}  // namespace ncsa
