#include "sdoho/axiom.hpp"

#include <algorithm>
#include <sstream>

namespace sdoho {

namespace {

constexpr int kMaxExprDepth = 4;

void check_depth(const ClassExpr& e) {
  if (e.depth() > kMaxExprDepth)
    throw KbError("class expression nesting deeper than 4");
}

}  // namespace

ClassExpr ClassExpr::named(Iri cls) {
  if (!cls.valid()) throw KbError("named class expression requires a valid Iri");
  return ClassExpr(Kind::Named, cls, {});
}

ClassExpr ClassExpr::intersection(std::vector<ClassExpr> operands) {
  if (operands.size() < 2) throw KbError("ObjectIntersectionOf requires at least 2 operands");
  ClassExpr e(Kind::Intersection, Iri(), std::move(operands));
  check_depth(e);
  return e;
}

ClassExpr ClassExpr::union_of(std::vector<ClassExpr> operands) {
  if (operands.size() < 2) throw KbError("ObjectUnionOf requires at least 2 operands");
  ClassExpr e(Kind::Union, Iri(), std::move(operands));
  check_depth(e);
  return e;
}

ClassExpr ClassExpr::some(Iri property, ClassExpr filler) {
  if (!property.valid()) throw KbError("ObjectSomeValuesFrom requires a property Iri");
  std::vector<ClassExpr> args;
  args.push_back(std::move(filler));
  ClassExpr e(Kind::SomeValues, property, std::move(args));
  check_depth(e);
  return e;
}

int ClassExpr::depth() const {
  int d = 0;
  for (const ClassExpr& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

bool operator==(const ClassExpr& a, const ClassExpr& b) {
  return a.kind_ == b.kind_ && a.iri_ == b.iri_ && a.args_ == b.args_;
}

std::string_view axiom_kind_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::Declaration: return "Declaration";
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::EquivalentClasses: return "EquivalentClasses";
    case AxiomKind::ObjectPropertyDomain: return "ObjectPropertyDomain";
    case AxiomKind::ObjectPropertyRange: return "ObjectPropertyRange";
    case AxiomKind::ClassAssertion: return "ClassAssertion";
    case AxiomKind::ObjectPropertyAssertion: return "ObjectPropertyAssertion";
    case AxiomKind::NegativeObjectPropertyAssertion: return "NegativeObjectPropertyAssertion";
    case AxiomKind::DataPropertyAssertion: return "DataPropertyAssertion";
    case AxiomKind::AnnotationAssertion: return "AnnotationAssertion";
  }
  return "";
}

std::string_view entity_kind_name(EntityKind k) {
  switch (k) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::AnnotationProperty: return "AnnotationProperty";
    case EntityKind::NamedIndividual: return "NamedIndividual";
  }
  return "";
}

Axiom Axiom::declaration(EntityKind entity, Iri iri) {
  Axiom a;
  a.kind = AxiomKind::Declaration;
  a.entity = entity;
  a.subject = iri;
  return a;
}

Axiom Axiom::sub_class_of(ClassExpr sub, ClassExpr sup) {
  if (!sub.is_named()) throw KbError("SubClassOf subclass must be a named class");
  Axiom a;
  a.kind = AxiomKind::SubClassOf;
  a.exprs.push_back(std::move(sub));
  a.exprs.push_back(std::move(sup));
  return a;
}

Axiom Axiom::equivalent_classes(std::vector<ClassExpr> exprs) {
  if (exprs.size() < 2) throw KbError("EquivalentClasses requires at least 2 expressions");
  Axiom a;
  a.kind = AxiomKind::EquivalentClasses;
  a.exprs = std::move(exprs);
  return a;
}

Axiom Axiom::object_property_domain(Iri property, ClassExpr domain) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyDomain;
  a.property = property;
  a.exprs.push_back(std::move(domain));
  return a;
}

Axiom Axiom::object_property_range(Iri property, ClassExpr range) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyRange;
  a.property = property;
  a.exprs.push_back(std::move(range));
  return a;
}

Axiom Axiom::class_assertion(ClassExpr type, Iri individual) {
  Axiom a;
  a.kind = AxiomKind::ClassAssertion;
  a.subject = individual;
  a.exprs.push_back(std::move(type));
  return a;
}

Axiom Axiom::object_property_assertion(Iri property, Iri subject, Iri object) {
  Axiom a;
  a.kind = AxiomKind::ObjectPropertyAssertion;
  a.property = property;
  a.subject = subject;
  a.object = object;
  return a;
}

Axiom Axiom::negative_object_property_assertion(Iri property, Iri subject, Iri object) {
  Axiom a;
  a.kind = AxiomKind::NegativeObjectPropertyAssertion;
  a.property = property;
  a.subject = subject;
  a.object = object;
  return a;
}

Axiom Axiom::data_property_assertion(Iri property, Iri subject, Literal value) {
  Axiom a;
  a.kind = AxiomKind::DataPropertyAssertion;
  a.property = property;
  a.subject = subject;
  a.literal = std::move(value);
  return a;
}

Axiom Axiom::annotation_assertion(Iri property, Iri subject, Literal value) {
  Axiom a;
  a.kind = AxiomKind::AnnotationAssertion;
  a.property = property;
  a.subject = subject;
  a.literal = std::move(value);
  return a;
}

namespace {

void collect_iris(const ClassExpr& e, std::vector<Iri>& out) {
  if (e.iri().valid()) out.push_back(e.iri());
  for (const ClassExpr& a : e.args()) collect_iris(a, out);
}

}  // namespace

std::vector<Iri> Axiom::mentioned_iris() const {
  std::vector<Iri> out;
  if (property.valid()) out.push_back(property);
  if (subject.valid()) out.push_back(subject);
  if (object.valid()) out.push_back(object);
  for (const ClassExpr& e : exprs) collect_iris(e, out);
  return out;
}

bool operator==(const Axiom& a, const Axiom& b) {
  return a.kind == b.kind && a.entity == b.entity && a.property == b.property &&
         a.subject == b.subject && a.object == b.object && a.exprs == b.exprs &&
         a.literal == b.literal;
}

namespace {

void render_expr(const ClassExpr& e, std::string& out) {
  switch (e.kind()) {
    case ClassExpr::Kind::Named:
      out += e.iri().curie();
      return;
    case ClassExpr::Kind::Intersection:
    case ClassExpr::Kind::Union:
      out += e.kind() == ClassExpr::Kind::Intersection ? "ObjectIntersectionOf("
                                                       : "ObjectUnionOf(";
      for (size_t i = 0; i < e.args().size(); ++i) {
        if (i) out += ' ';
        render_expr(e.args()[i], out);
      }
      out += ')';
      return;
    case ClassExpr::Kind::SomeValues:
      out += "ObjectSomeValuesFrom(";
      out += e.iri().curie();
      out += ' ';
      render_expr(e.filler(), out);
      out += ')';
      return;
  }
}

void render_literal(const Literal& lit, std::string& out) {
  out += '"';
  for (char c : lit.lexical) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  if (lit.type != LiteralType::String) {
    out += "^^";
    out += literal_type_name(lit.type);
  }
}

}  // namespace

std::string to_functional(const ClassExpr& expr) {
  std::string out;
  render_expr(expr, out);
  return out;
}

std::string to_functional(const Axiom& ax) {
  std::string out(axiom_kind_name(ax.kind));
  out += '(';
  switch (ax.kind) {
    case AxiomKind::Declaration:
      out += entity_kind_name(ax.entity);
      out += ' ';
      out += ax.subject.curie();
      break;
    case AxiomKind::SubClassOf:
      render_expr(ax.sub(), out);
      out += ' ';
      render_expr(ax.sup(), out);
      break;
    case AxiomKind::EquivalentClasses:
      for (size_t i = 0; i < ax.exprs.size(); ++i) {
        if (i) out += ' ';
        render_expr(ax.exprs[i], out);
      }
      break;
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::ObjectPropertyRange:
      out += ax.property.curie();
      out += ' ';
      render_expr(ax.exprs[0], out);
      break;
    case AxiomKind::ClassAssertion:
      render_expr(ax.exprs[0], out);
      out += ' ';
      out += ax.subject.curie();
      break;
    case AxiomKind::ObjectPropertyAssertion:
    case AxiomKind::NegativeObjectPropertyAssertion:
      out += ax.property.curie();
      out += ' ';
      out += ax.subject.curie();
      out += ' ';
      out += ax.object.curie();
      break;
    case AxiomKind::DataPropertyAssertion:
    case AxiomKind::AnnotationAssertion:
      out += ax.property.curie();
      out += ' ';
      out += ax.subject.curie();
      out += ' ';
      render_literal(ax.literal, out);
      break;
  }
  out += ')';
  return out;
}

bool axiom_less(const Axiom& a, const Axiom& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return to_functional(a) < to_functional(b);
}

}  // namespace sdoho
