#ifndef MVCRYSTAL_ERROR_HPP
#define MVCRYSTAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (files, keys, coordinate strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that is not a valid object (bad Cartan matrix, datum
/// violating its defining inequalities, non-dominant highest weight, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Root data outside the supported range: G2 and non-finite Cartan matrices,
/// or an operation that needs a simply-laced datum.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two derivations of the same value disagreed during propagation.
class Conflict : public Error {
 public:
  using Error::Error;
};

}  // namespace mv

#endif  // MVCRYSTAL_ERROR_HPP
