#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdoho/kb.hpp"

namespace sdoho {

// Reflexive-transitive subclass relation over named classes, plus the
// equivalence partition induced by named-to-named EquivalentClasses.
class SubsumptionIndex {
 public:
  bool is_subclass_of(Iri sub, Iri sup) const;
  // Includes the class itself; sorted.
  const std::set<Iri>& ancestors(Iri cls) const;
  // Equivalence group of a class (includes itself); sorted.
  std::vector<Iri> equivalents(Iri cls) const;
  std::vector<Iri> classes() const;

 private:
  friend SubsumptionIndex classify(const KnowledgeBase& kb);
  std::map<Iri, std::set<Iri>> ancestors_;
};

// Closure of named SubClassOf edges and named-named equivalences.
// Throws KbError on a subclass cycle (already rejected at freeze;
// re-checked here).
SubsumptionIndex classify(const KnowledgeBase& kb);

enum class Provenance { Asserted, R1Taxonomy, R2Domain, R3Range, R4Definition, R5Unfolding };

std::string_view provenance_name(Provenance p);

class RealizationResult {
 public:
  bool has_type(Iri individual, Iri cls) const;
  // Sorted (class, provenance) pairs; closed under the rule set.
  std::vector<std::pair<Iri, Provenance>> types_of(Iri individual) const;
  std::vector<Iri> individuals() const;
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::size_t fact_count() const;

 private:
  friend class Realizer;
  std::map<Iri, std::map<Iri, Provenance>> types_;
  std::vector<std::string> warnings_;
};

// Least fixpoint of:
//   R1  C(a), C subclass-of D          =>  D(a)
//   R2  r(a,b), Domain(r,C)            =>  C(a)
//   R3  r(a,b), Range(r,C)             =>  C(b)
//   R4  a satisfies every conjunct of a defined class E  =>  E(a)
//   R5  E(a), E defined as an intersection  =>  each named conjunct holds of a
// Definitions outside the supported fragment are skipped with a warning.
RealizationResult realize(const KnowledgeBase& kb, const SubsumptionIndex& index);

// Recursive instance query: Named via realization + subsumption,
// intersections need all operands, unions any, existentials a
// successor satisfying the filler. Rejects expressions deeper than 4.
bool instance_of(const KnowledgeBase& kb, const SubsumptionIndex& index,
                 const RealizationResult& realization, Iri individual,
                 const ClassExpr& expr);

struct Clash {
  ObjectTriple triple;  // asserted both positively and negatively
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<Clash> clashes;
};

// An explicit positive assertion matching a negative one is a clash;
// a missing triple never is.
ConsistencyReport check_consistency(const KnowledgeBase& kb);

}  // namespace sdoho
