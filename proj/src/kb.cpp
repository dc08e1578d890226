#include "sdoho/kb.hpp"

#include <algorithm>

#include "sdoho/vocab.hpp"

namespace sdoho {

void KbBuilder::declare_prefix(const std::string& name, const std::string& ns) {
  auto it = prefixes_.find(name);
  if (it != prefixes_.end() && it->second != ns)
    throw KbError("prefix '" + name + "' redeclared with a different namespace");
  prefixes_[name] = ns;
}

void KbBuilder::add(Axiom axiom) {
  if (axiom.kind == AxiomKind::Declaration) {
    declared_.insert(axiom.subject.intern_id());
  } else if (strict_ && axiom.is_logical()) {
    for (Iri iri : axiom.mentioned_iris()) {
      if (!declared_.count(iri.intern_id()))
        throw KbError("strict mode: undeclared Iri " + iri.curie());
    }
    if (axiom.kind == AxiomKind::DataPropertyAssertion &&
        axiom.literal.type == LiteralType::Category) {
      Iri value = Iri::make("", axiom.literal.lexical);
      if (!declared_.count(value.intern_id()))
        throw KbError("category literal '" + axiom.literal.lexical +
                      "' names no declared individual");
    }
  }
  std::string key = to_functional(axiom);
  if (keys_.insert(std::move(key)).second) axioms_.push_back(std::move(axiom));
}

KnowledgeBase KbBuilder::freeze() {
  KnowledgeBase kb;
  kb.prefixes_ = std::move(prefixes_);
  kb.ontology_iri_ = ontology_iri_;
  kb.axioms_ = std::move(axioms_);
  kb.keys_ = std::move(keys_);
  std::stable_sort(kb.axioms_.begin(), kb.axioms_.end(), axiom_less);
  kb.build_indexes();
  kb.check_acyclic();
  kb.compute_stats();
  return kb;
}

void KnowledgeBase::build_indexes() {
  for (const Axiom& ax : axioms_) {
    by_kind_[ax.kind].push_back(&ax);
    if (ax.subject.valid()) by_subject_[ax.subject].push_back(&ax);

    switch (ax.kind) {
      case AxiomKind::Declaration:
        declared_.emplace(ax.subject, ax.entity);
        break;
      case AxiomKind::SubClassOf: {
        Iri sub = ax.sub().iri();
        if (ax.sup().is_named()) {
          supers_[sub].push_back(ax.sup().iri());
          subs_[ax.sup().iri()].push_back(sub);
        } else if (ax.sup().kind() == ClassExpr::Kind::SomeValues) {
          restrictions_[sub].emplace_back(ax.sup().iri(), ax.sup().filler());
        }
        break;
      }
      case AxiomKind::ClassAssertion:
        asserted_types_[ax.subject].push_back(ax.exprs[0]);
        if (ax.exprs[0].is_named()) direct_instances_[ax.exprs[0].iri()].push_back(ax.subject);
        break;
      case AxiomKind::ObjectPropertyAssertion:
        object_triples_.push_back({ax.property, ax.subject, ax.object});
        break;
      case AxiomKind::NegativeObjectPropertyAssertion:
        negative_triples_.push_back({ax.property, ax.subject, ax.object});
        break;
      case AxiomKind::AnnotationAssertion:
        if (ax.property == vocab::skos_pref_label()) {
          Labels& l = labels_[ax.subject];
          if (l.preferred.empty()) l.preferred = ax.literal.lexical;
        } else if (ax.property == vocab::skos_alt_label()) {
          labels_[ax.subject].alternatives.push_back(ax.literal.lexical);
        }
        break;
      default:
        break;
    }
  }
  std::sort(object_triples_.begin(), object_triples_.end());
  std::sort(negative_triples_.begin(), negative_triples_.end());
  for (auto& [cls, v] : supers_) std::sort(v.begin(), v.end());
  for (auto& [cls, v] : subs_) std::sort(v.begin(), v.end());
  for (auto& [cls, v] : direct_instances_) std::sort(v.begin(), v.end());
}

void KnowledgeBase::check_acyclic() const {
  // Colors: 0 unvisited, 1 on stack, 2 done.
  std::map<Iri, int> color;
  std::vector<std::pair<Iri, std::size_t>> stack;
  for (const auto& [start, ignored] : supers_) {
    if (color[start]) continue;
    stack.emplace_back(start, 0);
    color[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      auto it = supers_.find(node);
      const std::vector<Iri>* parents = it == supers_.end() ? nullptr : &it->second;
      if (!parents || next >= parents->size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      Iri parent = (*parents)[next++];
      int c = color[parent];
      if (c == 1)
        throw KbError("cycle in named SubClassOf hierarchy involving " + parent.curie());
      if (c == 0) {
        color[parent] = 1;
        stack.emplace_back(parent, 0);
      }
    }
  }
}

void KnowledgeBase::compute_stats() {
  OntologyStats s;
  for (const auto& [iri, kind] : declared_) {
    switch (kind) {
      case EntityKind::Class: s.class_count++; break;
      case EntityKind::ObjectProperty: s.object_property_count++; break;
      case EntityKind::DataProperty: s.data_property_count++; break;
      case EntityKind::AnnotationProperty: s.annotation_property_count++; break;
      case EntityKind::NamedIndividual: s.individual_count++; break;
    }
  }
  for (const Axiom& ax : axioms_)
    if (ax.is_logical()) s.logical_axiom_count++;

  for (const auto& [iri, kind] : declared_) {
    if (kind != EntityKind::Class) continue;
    auto it = supers_.find(iri);
    if (it == supers_.end() || it->second.empty()) s.top_level_classes.push_back(iri);
  }

  // Longest upward chain to a root, counting the root itself.
  std::map<Iri, std::size_t> height;
  auto chain = [&](Iri cls, auto&& self) -> std::size_t {
    auto memo = height.find(cls);
    if (memo != height.end()) return memo->second;
    std::size_t best = 0;
    auto it = supers_.find(cls);
    if (it != supers_.end())
      for (Iri parent : it->second) best = std::max(best, self(parent, self) + 1);
    height[cls] = best;
    return best;
  };
  for (const auto& [iri, kind] : declared_) {
    if (kind != EntityKind::Class) continue;
    s.max_depth = std::max(s.max_depth, chain(iri, chain) + 1);
  }
  stats_ = std::move(s);
}

bool KnowledgeBase::contains(const Axiom& axiom) const {
  return keys_.count(to_functional(axiom)) != 0;
}

const std::vector<const Axiom*>& KnowledgeBase::by_kind(AxiomKind kind) const {
  static const std::vector<const Axiom*> empty;
  auto it = by_kind_.find(kind);
  return it == by_kind_.end() ? empty : it->second;
}

std::vector<const Axiom*> KnowledgeBase::by_subject(Iri subject) const {
  auto it = by_subject_.find(subject);
  return it == by_subject_.end() ? std::vector<const Axiom*>{} : it->second;
}

bool KnowledgeBase::is_declared(Iri iri) const { return declared_.count(iri) != 0; }

std::optional<EntityKind> KnowledgeBase::declared_kind(Iri iri) const {
  auto it = declared_.find(iri);
  if (it == declared_.end()) return std::nullopt;
  return it->second;
}

std::vector<Iri> KnowledgeBase::declarations(EntityKind kind) const {
  std::vector<Iri> out;
  for (const auto& [iri, k] : declared_)
    if (k == kind) out.push_back(iri);
  return out;
}

namespace {
template <typename Map, typename Key>
const auto& find_or_empty(const Map& map, const Key& key) {
  static const typename Map::mapped_type empty;
  auto it = map.find(key);
  return it == map.end() ? empty : it->second;
}
}  // namespace

const std::vector<Iri>& KnowledgeBase::named_superclasses(Iri cls) const {
  return find_or_empty(supers_, cls);
}

const std::vector<Iri>& KnowledgeBase::named_subclasses(Iri cls) const {
  return find_or_empty(subs_, cls);
}

const std::vector<std::pair<Iri, ClassExpr>>& KnowledgeBase::restriction_superclasses(
    Iri cls) const {
  return find_or_empty(restrictions_, cls);
}

const std::vector<ClassExpr>& KnowledgeBase::asserted_types(Iri individual) const {
  return find_or_empty(asserted_types_, individual);
}

const std::vector<Iri>& KnowledgeBase::direct_instances(Iri cls) const {
  return find_or_empty(direct_instances_, cls);
}

std::vector<std::pair<Iri, Iri>> KnowledgeBase::successors(Iri subject) const {
  std::vector<std::pair<Iri, Iri>> out;
  for (const ObjectTriple& t : object_triples_)
    if (t.subject == subject) out.emplace_back(t.property, t.object);
  std::sort(out.begin(), out.end());
  return out;
}

Labels KnowledgeBase::labels_for(Iri iri) const {
  Labels out;
  auto it = labels_.find(iri);
  if (it != labels_.end()) out = it->second;
  if (out.preferred.empty()) out.preferred = std::string(iri.local());
  return out;
}

}  // namespace sdoho
