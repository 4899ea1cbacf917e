#pragma once

#include <stdexcept>
#include <string>

namespace polyft {

/// Malformed or geometrically invalid input (bad polygon, unclosed surface, bad arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check or numerical tolerance was not met.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request outside the regime where a method is valid (e.g. Porod fit below the asymptotic range).
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyft
