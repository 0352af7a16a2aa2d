#ifndef WLH_ERRORS_HPP
#define WLH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wlh {

// Exit codes used by the CLI; library errors map onto them.
enum class ExitCode : int {
    SUCCESS = 0,
    USAGE = 1,
    INPUT_ERROR = 2,
    RESOURCE_LIMIT = 3,
    INTERNAL_ERROR = 4,
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
    virtual ExitCode exit_code() const {
        return ExitCode::INPUT_ERROR;
    }
};

// Syntax or validation failure in a PDDL or plan file, with source location.
class ParseError : public Error {
    std::string file_;
    int line_;
    int column_;

public:
    ParseError(const std::string &file, int line, int column,
               const std::string &msg)
        : Error(file + ":" + std::to_string(line) + ":" +
                std::to_string(column) + ": " + msg),
          file_(file), line_(line), column_(column) {}

    const std::string &file() const { return file_; }
    int line() const { return line_; }
    int column() const { return column_; }
};

class UnsupportedRequirementError : public ParseError {
public:
    UnsupportedRequirementError(const std::string &file, int line, int column,
                                const std::string &construct)
        : ParseError(file, line, column,
                     "unsupported requirement or construct: " + construct) {}
};

class PlanError : public Error {
    int line_;

public:
    PlanError(int line, const std::string &msg)
        : Error("plan line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    explicit PlanError(const std::string &msg) : Error(msg), line_(-1) {}

    int line() const { return line_; }
};

class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string &msg) : Error(msg) {}
    ExitCode exit_code() const override {
        return ExitCode::RESOURCE_LIMIT;
    }
};

// A state refers to objects or predicates unknown to its task.
class ForeignAtomError : public Error {
public:
    explicit ForeignAtomError(const std::string &msg) : Error(msg) {}
};

class ModelError : public Error {
public:
    explicit ModelError(const std::string &msg) : Error(msg) {}
};

}  // namespace wlh

#endif
