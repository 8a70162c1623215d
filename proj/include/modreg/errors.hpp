#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modreg {

// Element of a finite ring or module, encoded as a mixed-radix rank of its
// coefficient vector (first coordinate most significant, so increasing index
// equals lexicographic order on coefficients).
using Elem = std::uint32_t;

enum class ErrorKind {
    InvalidStructure,
    InvalidParameter,
    InvalidAction,
    RingMismatch,
    NotCommutative,
    NotSubmoduleClosed,
    ResourceLimit,
    InvalidInput,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

struct InvalidStructureError : Error {
    explicit InvalidStructureError(const std::string& w) : Error(ErrorKind::InvalidStructure, w) {}
};
struct InvalidParameterError : Error {
    explicit InvalidParameterError(const std::string& w) : Error(ErrorKind::InvalidParameter, w) {}
};
struct InvalidActionError : Error {
    explicit InvalidActionError(const std::string& w) : Error(ErrorKind::InvalidAction, w) {}
};
struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& w) : Error(ErrorKind::RingMismatch, w) {}
};
struct NotCommutativeError : Error {
    explicit NotCommutativeError(const std::string& w) : Error(ErrorKind::NotCommutative, w) {}
};
struct NotSubmoduleClosedError : Error {
    explicit NotSubmoduleClosedError(const std::string& w) : Error(ErrorKind::NotSubmoduleClosed, w) {}
};
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& w) : Error(ErrorKind::ResourceLimit, w) {}
};
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& w) : Error(ErrorKind::InvalidInput, w) {}
};

// Size caps.  The tool is a desk-scale verifier; exceeding a cap is a clean
// ResourceLimitError, never a silent truncation.
struct Limits {
    long max_ring_order = 4096;
    long max_module_order = 4096;
    long max_submodules = 100000;
    long max_endomorphisms = 4096;
    long long iso_node_budget = 10'000'000;
    long long hom_candidate_budget = 1 << 24;
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

}  // namespace modreg
