#pragma once

#include <stdexcept>
#include <string>

namespace vir {

enum class ErrorKind {
  Range,        // label outside the Kac table, bad model parameters
  Shape,        // length or level mismatch
  Fusion,       // channel not allowed by the fusion rules
  Domain,       // evaluation point outside the admissible region
  Conditioning, // numerically ill-posed solve
  Reduction,    // operator does not reduce under the chosen ansatz
  Structure,    // irregular singular point or non-rational indicial data
  Logarithmic,  // Frobenius recursion needs a log term
  Parse,        // malformed serialized input
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace vir
