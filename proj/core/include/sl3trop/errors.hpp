#pragma once

#include <stdexcept>
#include <string>

namespace sl3t {

enum class ErrorKind {
  LengthMismatch,
  SelfFolded,
  BoundaryEdge,
  TopologyMismatch,
  NotInCone,
  NegativeCoefficient,
  NonIntegral,
  Singular,
  EdgeMismatch,
  NotInVT,
  DecompositionFailure,
  InvalidInput,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sl3t
