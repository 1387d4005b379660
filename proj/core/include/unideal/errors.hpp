#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unideal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between scalars of different fields (Q vs GF(p), or two moduli).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// An explicit expansion produced more monomials than its budget allows.
///
/// This is a signal, not a crash: it tells the caller the instance does not
/// fit the declared rank/degree budget.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::size_t observed)
      : Error("monomial cap exceeded: " + std::to_string(observed) + " > " + std::to_string(cap)),
        cap_(cap),
        observed_(observed) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t observed() const noexcept { return observed_; }

 private:
  std::size_t cap_;
  std::size_t observed_;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace unideal
