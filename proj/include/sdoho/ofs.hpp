#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdoho/kb.hpp"

namespace sdoho::ofs {

struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string expected;
  std::string found;

  std::string message() const;
};

struct Document {
  std::map<std::string, std::string> prefixes;
  std::optional<Iri> ontology_iri;
  std::vector<Axiom> axioms;  // source order
};

using ParseResult = std::variant<Document, ParseError>;

// Total: any byte sequence yields a Document or exactly one ParseError.
ParseResult parse_document(std::string_view text);

// Declares prefixes, then loads declarations before other axioms so
// strict builders accept documents in any axiom order.
void load_document(KbBuilder& builder, const Document& doc);

// Canonical serialization: prefixes sorted, axioms sorted by
// (kind, rendered text), LF line endings. Reparses to an equal set.
std::string serialize(const std::map<std::string, std::string>& prefixes,
                      std::optional<Iri> ontology_iri, std::vector<Axiom> axioms);
std::string serialize(const KnowledgeBase& kb);
std::string serialize(const Document& doc);

}  // namespace sdoho::ofs
