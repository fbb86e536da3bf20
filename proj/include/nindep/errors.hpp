#ifndef NINDEP_ERRORS_HPP
#define NINDEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nindep {

// Malformed external input: bad rational text, duplicate nodes, bad JSON shape.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// A randomized generator exhausted its retry bound.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nindep

#endif  // NINDEP_ERRORS_HPP
