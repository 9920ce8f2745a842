#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquelab {

enum class ErrorKind {
    parse,
    range,
    self_loop,
    domain,
    precondition,
    budget,
    io,
    internal,
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures derive from Error so callers (and the C layer) can map
// them onto status codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::parse, "byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A refused precondition that can point at the offending vertices, e.g. the
// clique that makes a figure-1 core invalid.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, std::vector<int> witness = {})
        : Error(ErrorKind::precondition, what), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

inline Error domain_error(const std::string& what) { return Error(ErrorKind::domain, what); }
inline Error range_error(const std::string& what) { return Error(ErrorKind::range, what); }
inline Error internal_error(const std::string& what) { return Error(ErrorKind::internal, what); }

} // namespace cliquelab
