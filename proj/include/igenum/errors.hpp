#pragma once

#include <stdexcept>
#include <string>

namespace igenum {

/// Sampling was requested from a diagram that accepts nothing.
class EmptyLanguageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request exceeds what a brute-force routine is willing to do
/// (oracle vertex limits, string-language length caps).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The maximum biclique of an edgeless graph.
class UndefinedBicliqueError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A formula that must yield an integer did not; signals a string that is
/// not a valid encoding of its class.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace igenum
