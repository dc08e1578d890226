#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sdoho/axiom.hpp"

namespace sdoho {

struct Labels {
  std::string preferred;
  std::vector<std::string> alternatives;
};

struct OntologyStats {
  std::size_t class_count = 0;
  std::size_t object_property_count = 0;
  std::size_t data_property_count = 0;
  std::size_t annotation_property_count = 0;
  std::size_t individual_count = 0;
  std::size_t logical_axiom_count = 0;
  std::vector<Iri> top_level_classes;
  std::size_t max_depth = 0;  // classes on the longest named-subclass chain
};

class KnowledgeBase;

// Mutable construction side of the store. Axioms are a set: adding a
// duplicate is a no-op. In strict mode (the default) every Iri used
// in a logical axiom must already be declared; pass strict=false for
// stores that grow fresh individuals.
class KbBuilder {
 public:
  explicit KbBuilder(bool strict = true) : strict_(strict) {}

  void declare_prefix(const std::string& name, const std::string& ns);
  void set_ontology_iri(Iri iri) { ontology_iri_ = iri; }

  // Throws KbError on strict-mode undeclared Iris.
  void add(Axiom axiom);

  bool strict() const { return strict_; }
  std::size_t axiom_count() const { return axioms_.size(); }
  bool is_declared(Iri iri) const { return declared_.count(iri.intern_id()) != 0; }

  // Sorts canonically, builds indexes, rejects named-subclass cycles.
  // The builder is spent afterwards.
  KnowledgeBase freeze();

 private:
  bool strict_;
  std::optional<Iri> ontology_iri_;
  std::map<std::string, std::string> prefixes_;
  std::vector<Axiom> axioms_;
  std::unordered_set<std::string> keys_;
  std::unordered_set<std::uint32_t> declared_;
};

struct ObjectTriple {
  Iri property;
  Iri subject;
  Iri object;

  friend bool operator<(const ObjectTriple& a, const ObjectTriple& b) {
    if (a.property != b.property) return a.property < b.property;
    if (a.subject != b.subject) return a.subject < b.subject;
    return a.object < b.object;
  }
  friend bool operator==(const ObjectTriple& a, const ObjectTriple& b) {
    return a.property == b.property && a.subject == b.subject && a.object == b.object;
  }
};

// Immutable after freeze; safe to share between threads.
class KnowledgeBase {
 public:
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }
  std::optional<Iri> ontology_iri() const { return ontology_iri_; }
  // Canonically sorted.
  const std::vector<Axiom>& axioms() const { return axioms_; }
  bool contains(const Axiom& axiom) const;

  const std::vector<const Axiom*>& by_kind(AxiomKind kind) const;
  std::vector<const Axiom*> by_subject(Iri subject) const;

  bool is_declared(Iri iri) const;
  std::optional<EntityKind> declared_kind(Iri iri) const;
  std::vector<Iri> declarations(EntityKind kind) const;

  // Named-subclass adjacency (explicit SubClassOf edges between
  // named classes only).
  const std::vector<Iri>& named_superclasses(Iri cls) const;
  const std::vector<Iri>& named_subclasses(Iri cls) const;
  // SubClassOf axioms whose right side is an existential restriction:
  // cls -> [(property, filler)].
  const std::vector<std::pair<Iri, ClassExpr>>& restriction_superclasses(Iri cls) const;

  // Asserted types (class expressions) of an individual.
  const std::vector<ClassExpr>& asserted_types(Iri individual) const;
  // Individuals directly asserted into a named class, sorted.
  const std::vector<Iri>& direct_instances(Iri cls) const;

  const std::vector<ObjectTriple>& object_assertions() const { return object_triples_; }
  const std::vector<ObjectTriple>& negative_object_assertions() const {
    return negative_triples_;
  }
  // Positive (property, object) successors of a subject, sorted.
  std::vector<std::pair<Iri, Iri>> successors(Iri subject) const;

  Labels labels_for(Iri iri) const;

  const OntologyStats& stats() const { return stats_; }

 private:
  friend class KbBuilder;

  void build_indexes();
  void check_acyclic() const;
  void compute_stats();

  std::map<std::string, std::string> prefixes_;
  std::optional<Iri> ontology_iri_;
  std::vector<Axiom> axioms_;
  std::unordered_set<std::string> keys_;

  std::map<AxiomKind, std::vector<const Axiom*>> by_kind_;
  std::map<Iri, std::vector<const Axiom*>> by_subject_;
  std::map<Iri, EntityKind> declared_;
  std::map<Iri, std::vector<Iri>> supers_;
  std::map<Iri, std::vector<Iri>> subs_;
  std::map<Iri, std::vector<std::pair<Iri, ClassExpr>>> restrictions_;
  std::map<Iri, std::vector<ClassExpr>> asserted_types_;
  std::map<Iri, std::vector<Iri>> direct_instances_;
  std::vector<ObjectTriple> object_triples_;
  std::vector<ObjectTriple> negative_triples_;
  std::map<Iri, Labels> labels_;
  OntologyStats stats_;
};

}  // namespace sdoho
