#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdoho/iri.hpp"

namespace sdoho {

// Named | IntersectionOf | UnionOf | SomeValuesFrom(property, filler).
// Value-semantic tree; factories enforce arity >= 2 for the n-ary
// forms and overall nesting depth <= 4.
class ClassExpr {
 public:
  enum class Kind { Named, Intersection, Union, SomeValues };

  static ClassExpr named(Iri cls);
  static ClassExpr intersection(std::vector<ClassExpr> operands);
  static ClassExpr union_of(std::vector<ClassExpr> operands);
  static ClassExpr some(Iri property, ClassExpr filler);

  Kind kind() const { return kind_; }
  bool is_named() const { return kind_ == Kind::Named; }
  // Named: the class. SomeValues: the property.
  Iri iri() const { return iri_; }
  // Intersection/Union operands, or the single SomeValues filler.
  const std::vector<ClassExpr>& args() const { return args_; }
  const ClassExpr& filler() const { return args_.front(); }

  int depth() const;

  friend bool operator==(const ClassExpr& a, const ClassExpr& b);
  friend bool operator!=(const ClassExpr& a, const ClassExpr& b) { return !(a == b); }

 private:
  ClassExpr(Kind kind, Iri iri, std::vector<ClassExpr> args)
      : kind_(kind), iri_(iri), args_(std::move(args)) {}

  Kind kind_ = Kind::Named;
  Iri iri_;
  std::vector<ClassExpr> args_;
};

enum class AxiomKind {
  Declaration,
  SubClassOf,
  EquivalentClasses,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  ClassAssertion,
  ObjectPropertyAssertion,
  NegativeObjectPropertyAssertion,
  DataPropertyAssertion,
  AnnotationAssertion,
};

enum class EntityKind { Class, ObjectProperty, DataProperty, AnnotationProperty, NamedIndividual };

std::string_view axiom_kind_name(AxiomKind k);
std::string_view entity_kind_name(EntityKind k);

// One axiom of any supported form. Which fields are meaningful
// depends on `kind`; use the factories, never aggregate-init.
struct Axiom {
  AxiomKind kind = AxiomKind::Declaration;
  EntityKind entity = EntityKind::Class;  // Declaration
  Iri property;                           // domain/range/property assertions
  Iri subject;                            // declared entity, or assertion subject
  Iri object;                             // object of (negative) property assertions
  std::vector<ClassExpr> exprs;           // SubClassOf {sub,sup}; EquivalentClasses list;
                                          // domain/range {expr}; ClassAssertion {expr}
  Literal literal;                        // data/annotation assertions

  static Axiom declaration(EntityKind entity, Iri iri);
  // `sub` must be Named (the taxonomy is over named classes).
  static Axiom sub_class_of(ClassExpr sub, ClassExpr sup);
  static Axiom equivalent_classes(std::vector<ClassExpr> exprs);
  static Axiom object_property_domain(Iri property, ClassExpr domain);
  static Axiom object_property_range(Iri property, ClassExpr range);
  static Axiom class_assertion(ClassExpr type, Iri individual);
  static Axiom object_property_assertion(Iri property, Iri subject, Iri object);
  static Axiom negative_object_property_assertion(Iri property, Iri subject, Iri object);
  static Axiom data_property_assertion(Iri property, Iri subject, Literal value);
  static Axiom annotation_assertion(Iri property, Iri subject, Literal value);

  const ClassExpr& sub() const { return exprs[0]; }
  const ClassExpr& sup() const { return exprs[1]; }

  // Declarations and annotations are bookkeeping; everything else is logic.
  bool is_logical() const {
    return kind != AxiomKind::Declaration && kind != AxiomKind::AnnotationAssertion;
  }

  // Every Iri the axiom mentions in a logical position.
  std::vector<Iri> mentioned_iris() const;

  friend bool operator==(const Axiom& a, const Axiom& b);
  friend bool operator!=(const Axiom& a, const Axiom& b) { return !(a == b); }
};

// Functional-syntax rendering of a single expression or axiom (no
// trailing newline). This doubles as the canonical identity key:
// two axioms are the same element of the axiom set iff they render
// identically.
std::string to_functional(const ClassExpr& expr);
std::string to_functional(const Axiom& axiom);

// Canonical order: axiom kind rank, then rendered text.
bool axiom_less(const Axiom& a, const Axiom& b);

}  // namespace sdoho
