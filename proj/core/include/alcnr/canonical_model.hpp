// Reading a finite model off a complete, clash-free constraint system.

#ifndef ALCNR_CANONICAL_MODEL_HPP_
#define ALCNR_CANONICAL_MODEL_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcnr/constraint_system.hpp"
#include "alcnr/semantics.hpp"

namespace alcnr {

/// Explicit pairs come from a link in the system; implicit pairs belong to a
/// blocked variable and are copied from its witness.
struct RolePairKind {
  std::optional<Object> witness;  // set iff implicit

  bool is_explicit() const noexcept { return !witness.has_value(); }
  bool is_implicit() const noexcept { return witness.has_value(); }
};

struct RolePair {
  Object from;
  std::string role_name;
  Object to;
  RolePairKind kind;
};

/// α_S: every object mapped to its own element.
using Assignment = std::map<Object, Element>;

struct CanonicalModel {
  Interpretation interpretation;
  Assignment assignment;
  std::vector<RolePair> pairs;
};

/// Builds I_S and α_S. Elements are the objects of `s`, named as in
/// Object::to_string; individuals of the source KB (if any) are mapped. The
/// root stand-in individual is kept as an element but not mapped. Concept and
/// role names of the source KB are declared even when empty.
/// Throws std::invalid_argument if `s` has an applicable rule or a clash.
CanonicalModel extract_model(const ConstraintSystem& s);

/// True iff (I, α) satisfies every constraint of `s`.
bool satisfies_system(const Interpretation& interp, const Assignment& alpha,
                      const ConstraintSystem& s);

}  // namespace alcnr

#endif  // ALCNR_CANONICAL_MODEL_HPP_
