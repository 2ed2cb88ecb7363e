#pragma once

#include <stdexcept>
#include <string>

namespace mig {

enum class ErrorKind {
  MonochromaticEdge,
  InvalidFamily,
  LabelMismatch,
  WrongBundleKind,
  BadDistance,
  EmptyColorClass,
  TooFewVertices,
  BadSpec,
  Parse,
  InvalidArgument,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace mig
