#include "sdoho/reasoner.hpp"

#include <algorithm>
#include <deque>

namespace sdoho {

bool SubsumptionIndex::is_subclass_of(Iri sub, Iri sup) const {
  if (sub == sup) return true;
  auto it = ancestors_.find(sub);
  return it != ancestors_.end() && it->second.count(sup) != 0;
}

const std::set<Iri>& SubsumptionIndex::ancestors(Iri cls) const {
  static const std::set<Iri> empty;
  auto it = ancestors_.find(cls);
  return it == ancestors_.end() ? empty : it->second;
}

std::vector<Iri> SubsumptionIndex::equivalents(Iri cls) const {
  std::vector<Iri> out;
  for (Iri other : ancestors(cls))
    if (is_subclass_of(other, cls)) out.push_back(other);
  if (out.empty()) out.push_back(cls);
  return out;
}

std::vector<Iri> SubsumptionIndex::classes() const {
  std::vector<Iri> out;
  out.reserve(ancestors_.size());
  for (const auto& [cls, ignored] : ancestors_) out.push_back(cls);
  return out;
}

SubsumptionIndex classify(const KnowledgeBase& kb) {
  // Freeze already rejects SubClassOf cycles; re-check in case the
  // store was built elsewhere.
  {
    std::map<Iri, int> color;
    auto dfs = [&](Iri node, auto&& self) -> void {
      color[node] = 1;
      for (Iri parent : kb.named_superclasses(node)) {
        int c = color[parent];
        if (c == 1)
          throw KbError("cycle in named SubClassOf hierarchy involving " + parent.curie());
        if (c == 0) self(parent, self);
      }
      color[node] = 2;
    };
    for (Iri cls : kb.declarations(EntityKind::Class))
      if (color[cls] == 0) dfs(cls, dfs);
  }

  std::map<Iri, std::vector<Iri>> edges;
  auto add_node = [&](Iri cls) { edges[cls]; };
  auto add_edge = [&](Iri from, Iri to) { edges[from].push_back(to); };

  for (Iri cls : kb.declarations(EntityKind::Class)) add_node(cls);
  for (const Axiom* ax : kb.by_kind(AxiomKind::SubClassOf)) {
    add_node(ax->sub().iri());
    if (ax->sup().is_named()) add_edge(ax->sub().iri(), ax->sup().iri());
  }
  for (const Axiom* ax : kb.by_kind(AxiomKind::EquivalentClasses)) {
    std::vector<Iri> named;
    for (const ClassExpr& e : ax->exprs)
      if (e.is_named()) named.push_back(e.iri());
    for (Iri a : named)
      for (Iri b : named)
        if (a != b) add_edge(a, b);
    for (Iri a : named) add_node(a);
  }

  SubsumptionIndex index;
  for (const auto& [start, ignored] : edges) {
    std::set<Iri>& reach = index.ancestors_[start];
    std::deque<Iri> queue{start};
    reach.insert(start);
    while (!queue.empty()) {
      Iri node = queue.front();
      queue.pop_front();
      auto it = edges.find(node);
      if (it == edges.end()) continue;
      for (Iri next : it->second)
        if (reach.insert(next).second) queue.push_back(next);
    }
  }
  return index;
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Asserted: return "asserted";
    case Provenance::R1Taxonomy: return "R1";
    case Provenance::R2Domain: return "R2";
    case Provenance::R3Range: return "R3";
    case Provenance::R4Definition: return "R4";
    case Provenance::R5Unfolding: return "R5";
  }
  return "";
}

bool RealizationResult::has_type(Iri individual, Iri cls) const {
  auto it = types_.find(individual);
  return it != types_.end() && it->second.count(cls) != 0;
}

std::vector<std::pair<Iri, Provenance>> RealizationResult::types_of(Iri individual) const {
  std::vector<std::pair<Iri, Provenance>> out;
  auto it = types_.find(individual);
  if (it == types_.end()) return out;
  out.assign(it->second.begin(), it->second.end());
  return out;
}

std::vector<Iri> RealizationResult::individuals() const {
  std::vector<Iri> out;
  for (const auto& [ind, ignored] : types_) out.push_back(ind);
  return out;
}

std::size_t RealizationResult::fact_count() const {
  std::size_t n = 0;
  for (const auto& [ind, types] : types_) n += types.size();
  return n;
}

namespace {

// One conjunct of a supported definition body.
struct Conjunct {
  bool existential = false;
  Iri named;                   // when !existential
  Iri property;                // when existential
  std::vector<Iri> fillers;    // named filler or union disjuncts
};

struct Definition {
  Iri defined;
  std::vector<Conjunct> conjuncts;
};

bool conjunct_from(const ClassExpr& e, Conjunct& out) {
  if (e.is_named()) {
    out.named = e.iri();
    return true;
  }
  if (e.kind() != ClassExpr::Kind::SomeValues) return false;
  out.existential = true;
  out.property = e.iri();
  const ClassExpr& filler = e.filler();
  if (filler.is_named()) {
    out.fillers.push_back(filler.iri());
    return true;
  }
  if (filler.kind() == ClassExpr::Kind::Union) {
    for (const ClassExpr& d : filler.args()) {
      if (!d.is_named()) return false;
      out.fillers.push_back(d.iri());
    }
    return true;
  }
  return false;
}

class Realizer {
 public:
  Realizer(const KnowledgeBase& kb, const SubsumptionIndex& index) : kb_(kb), index_(index) {}

  RealizationResult run() {
    collect_definitions();
    collect_graph();
    seed();
    saturate();
    return std::move(result_);
  }

 private:
  void collect_definitions() {
    for (const Axiom* ax : kb_.by_kind(AxiomKind::EquivalentClasses)) {
      std::vector<Iri> named;
      std::vector<const ClassExpr*> complex;
      for (const ClassExpr& e : ax->exprs)
        (e.is_named() ? (void)named.push_back(e.iri()) : (void)complex.push_back(&e));
      if (complex.empty()) continue;  // named-named: classify's business
      for (const ClassExpr* body : complex) {
        bool supported = body->kind() == ClassExpr::Kind::Intersection;
        Definition def;
        if (supported) {
          for (const ClassExpr& c : body->args()) {
            Conjunct conj;
            if (!conjunct_from(c, conj)) {
              supported = false;
              break;
            }
            def.conjuncts.push_back(std::move(conj));
          }
        }
        if (!supported || named.empty()) {
          result_.warnings_.push_back("skipped definition outside supported fragment: " +
                                      to_functional(*ax));
          continue;
        }
        for (Iri e : named) {
          def.defined = e;
          definitions_.push_back(def);
        }
      }
    }
  }

  void collect_graph() {
    for (Iri ind : kb_.declarations(EntityKind::NamedIndividual)) touch(ind);
    for (const ObjectTriple& t : kb_.object_assertions()) {
      touch(t.subject);
      touch(t.object);
      successors_[t.subject].emplace_back(t.property, t.object);
      predecessors_[t.object].push_back(t.subject);
    }
  }

  void touch(Iri ind) { result_.types_[ind]; }

  void seed() {
    for (const Axiom* ax : kb_.by_kind(AxiomKind::ClassAssertion)) {
      const ClassExpr& type = ax->exprs[0];
      if (type.is_named()) {
        add(ax->subject, type.iri(), Provenance::Asserted);
      } else if (type.kind() == ClassExpr::Kind::Intersection) {
        bool all_named = true;
        for (const ClassExpr& c : type.args()) {
          if (c.is_named())
            add(ax->subject, c.iri(), Provenance::Asserted);
          else
            all_named = false;
        }
        if (!all_named)
          result_.warnings_.push_back("asserted type partially outside supported fragment: " +
                                      to_functional(*ax));
      } else {
        result_.warnings_.push_back("asserted type outside supported fragment: " +
                                    to_functional(*ax));
      }
    }
    auto fire_domain_range = [&](AxiomKind kind, Provenance prov) {
      for (const Axiom* ax : kb_.by_kind(kind)) {
        const ClassExpr& cls = ax->exprs[0];
        if (!cls.is_named()) {
          result_.warnings_.push_back("skipped non-named domain/range: " + to_functional(*ax));
          continue;
        }
        for (const ObjectTriple& t : kb_.object_assertions()) {
          if (t.property != ax->property) continue;
          add(kind == AxiomKind::ObjectPropertyDomain ? t.subject : t.object, cls.iri(), prov);
        }
      }
    };
    fire_domain_range(AxiomKind::ObjectPropertyDomain, Provenance::R2Domain);
    fire_domain_range(AxiomKind::ObjectPropertyRange, Provenance::R3Range);
  }

  // Adds the fact and its R1 taxonomy consequences; wakes the
  // individual and everything pointing at it.
  void add(Iri individual, Iri cls, Provenance prov) {
    auto [it, fresh] = result_.types_[individual].emplace(cls, prov);
    if (!fresh) return;
    for (Iri sup : index_.ancestors(cls))
      if (sup != cls) result_.types_[individual].emplace(sup, Provenance::R1Taxonomy);
    wake(individual);
    auto pred = predecessors_.find(individual);
    if (pred != predecessors_.end())
      for (Iri p : pred->second) wake(p);
    // R5: unfold named conjuncts of any definition of cls.
    for (const Definition& def : definitions_) {
      if (def.defined != cls) continue;
      for (const Conjunct& c : def.conjuncts)
        if (!c.existential) add(individual, c.named, Provenance::R5Unfolding);
    }
  }

  void wake(Iri individual) {
    if (queued_.insert(individual).second) worklist_.push_back(individual);
  }

  void saturate() {
    // Seed the worklist with every individual in sorted order so the
    // first derivation of each fact is stable across runs.
    for (const auto& [ind, ignored] : result_.types_) wake(ind);
    while (!worklist_.empty()) {
      Iri ind = worklist_.front();
      worklist_.pop_front();
      queued_.erase(ind);
      for (const Definition& def : definitions_) {
        if (result_.types_[ind].count(def.defined)) continue;
        if (satisfies(ind, def)) add(ind, def.defined, Provenance::R4Definition);
      }
    }
  }

  bool satisfies(Iri ind, const Definition& def) const {
    for (const Conjunct& c : def.conjuncts) {
      if (!c.existential) {
        if (!has_type(ind, c.named)) return false;
        continue;
      }
      bool found = false;
      auto succ = successors_.find(ind);
      if (succ != successors_.end()) {
        for (const auto& [prop, obj] : succ->second) {
          if (prop != c.property) continue;
          for (Iri filler : c.fillers) {
            if (has_type(obj, filler)) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  bool has_type(Iri ind, Iri cls) const {
    auto it = result_.types_.find(ind);
    return it != result_.types_.end() && it->second.count(cls) != 0;
  }

  const KnowledgeBase& kb_;
  const SubsumptionIndex& index_;
  RealizationResult result_;
  std::vector<Definition> definitions_;
  std::map<Iri, std::vector<std::pair<Iri, Iri>>> successors_;
  std::map<Iri, std::vector<Iri>> predecessors_;
  std::deque<Iri> worklist_;
  std::set<Iri> queued_;
};

}  // namespace

RealizationResult realize(const KnowledgeBase& kb, const SubsumptionIndex& index) {
  return Realizer(kb, index).run();
}

bool instance_of(const KnowledgeBase& kb, const SubsumptionIndex& index,
                 const RealizationResult& realization, Iri individual,
                 const ClassExpr& expr) {
  if (expr.depth() > 4) throw KbError("instance query deeper than 4 levels");
  switch (expr.kind()) {
    case ClassExpr::Kind::Named: {
      if (realization.has_type(individual, expr.iri())) return true;
      // Subsumption fallback; realization is closed under R1, so this
      // only matters for classes missing from the closure input.
      for (const auto& [cls, prov] : realization.types_of(individual))
        if (index.is_subclass_of(cls, expr.iri())) return true;
      return false;
    }
    case ClassExpr::Kind::Intersection:
      for (const ClassExpr& c : expr.args())
        if (!instance_of(kb, index, realization, individual, c)) return false;
      return true;
    case ClassExpr::Kind::Union:
      for (const ClassExpr& c : expr.args())
        if (instance_of(kb, index, realization, individual, c)) return true;
      return false;
    case ClassExpr::Kind::SomeValues:
      for (const auto& [prop, obj] : kb.successors(individual)) {
        if (prop != expr.iri()) continue;
        if (instance_of(kb, index, realization, obj, expr.filler())) return true;
      }
      return false;
  }
  return false;
}

ConsistencyReport check_consistency(const KnowledgeBase& kb) {
  ConsistencyReport report;
  const auto& positive = kb.object_assertions();
  for (const ObjectTriple& neg : kb.negative_object_assertions()) {
    if (std::binary_search(positive.begin(), positive.end(), neg)) {
      report.clashes.push_back(Clash{neg});
    }
  }
  report.consistent = report.clashes.empty();
  return report;
}

}  // namespace sdoho
