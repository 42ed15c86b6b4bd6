// Source-to-source knowledge-base transformations.

#ifndef ALCNR_ENCODINGS_HPP_
#define ALCNR_ENCODINGS_HPP_

#include <set>
#include <string>
#include <utility>

#include "alcnr/syntax.hpp"

namespace alcnr {

/// (¬C1 ⊔ D1) ⊓ ... ⊓ (¬Cn ⊔ Dn) over the inclusions in set order, folded to
/// the left. Top for an empty TBox. An interpretation satisfies every
/// inclusion iff this concept denotes the whole domain.
Concept c_of_tbox(const std::set<Inclusion>& tbox);

/// First of `__aux0`, `__aux1`, ... not used as a name anywhere in `kb`.
std::string fresh_concept_name(const KnowledgeBase& kb);

/// Replaces the TBox by the single inclusion A ⊑ C_T ⊓ ∀P1.A ⊓ ... ⊓ ∀Pn.A
/// (P1..Pn all role names of `kb`, lexicographic) with A fresh, and asserts
/// A(b) for every individual b. A KB without individuals gets one fresh
/// individual asserted to A, otherwise the result would be trivially
/// satisfiable. Satisfiability is preserved in both directions. Only
/// meaningful for the full language: it relies on negation and disjunction.
KnowledgeBase inclusions_to_introduction(const KnowledgeBase& kb);

/// ∃R.⊤ ⊑ domain and ⊤ ⊑ ∀R.range.
std::pair<Inclusion, Inclusion> domain_range_inclusions(const Role& r, const Concept& domain,
                                                        const Concept& range);

/// The conjunction super ⊓ sub, whose extension is contained in super's.
/// Throws std::invalid_argument if `sub` already names a conjunct of `super`
/// or is not a valid name.
Role subrole(const std::string& sub, const Role& super);

}  // namespace alcnr

#endif  // ALCNR_ENCODINGS_HPP_
