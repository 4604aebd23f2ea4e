#ifndef TORLIE_ERRORS_HPP
#define TORLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torlie {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arithmetic between cyclotomic values of different levels, or a requested
/// root of unity whose order does not divide the session level.
struct level_mismatch_error : error {
  explicit level_mismatch_error(const std::string& msg) : error(msg) {}
};

struct dimension_error : error {
  explicit dimension_error(const std::string& msg) : error(msg) {}
};

/// A map that was supposed to preserve a subalgebra (conjugation, transpose
/// involution) produced an element outside of it.
struct stability_error : error {
  explicit stability_error(const std::string& msg) : error(msg) {}
};

/// A pair of automorphisms handed to a joint decomposition does not commute.
struct commutativity_error : error {
  explicit commutativity_error(const std::string& msg) : error(msg) {}
};

/// Generator images cannot be extended to an automorphism (no scalar
/// solution, or the extension fails the homomorphism audit).
struct inconsistency_error : error {
  explicit inconsistency_error(const std::string& msg) : error(msg) {}
};

/// Candidate Cartan subalgebra failed the maximality / diagonalizability
/// verification.
struct not_cartan_error : error {
  explicit not_cartan_error(const std::string& msg) : error(msg) {}
};

/// Weights do not form a finite root system of a known type.
struct classification_error : error {
  explicit classification_error(const std::string& msg) : error(msg) {}
};

}  // namespace torlie

#endif
