#include "sdoho/ofs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sdoho::ofs {

std::string ParseError::message() const {
  std::ostringstream os;
  os << "parse error at " << line << ":" << column << ": expected " << expected
     << ", found " << found;
  return os.str();
}

namespace {

constexpr int kMaxExprDepth = 4;

struct Token {
  enum Kind { LParen, RParen, Equals, Word, Curie, String, TypeMarker, IriRef, End };
  Kind kind = End;
  std::string text;        // word text, curie text, string value, iri text
  int line = 1;
  int column = 1;
};

const char* token_kind_name(Token::Kind k) {
  switch (k) {
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    case Token::Equals: return "'='";
    case Token::Word: return "name";
    case Token::Curie: return "CURIE";
    case Token::String: return "string literal";
    case Token::TypeMarker: return "'^^'";
    case Token::IriRef: return "namespace Iri";
    case Token::End: return "end of input";
  }
  return "";
}

// Thrown internally; converted to a ParseError at the API boundary.
struct Fail {
  ParseError error;
};

[[noreturn]] void fail(const Token& at, std::string expected) {
  std::string found =
      at.kind == Token::End ? "end of input" : std::string(token_kind_name(at.kind));
  if (!at.text.empty() && at.kind != Token::End) found += " '" + at.text + "'";
  throw Fail{ParseError{at.line, at.column, std::move(expected), std::move(found)}};
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' ||
         c == '#';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::End;
      return tok;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': advance(); tok.kind = Token::LParen; tok.text = "("; return tok;
      case ')': advance(); tok.kind = Token::RParen; tok.text = ")"; return tok;
      case '=': advance(); tok.kind = Token::Equals; tok.text = "="; return tok;
      case '^':
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '^')
          throw Fail{ParseError{tok.line, tok.column, "'^^'", "'^'"}};
        advance();
        tok.kind = Token::TypeMarker;
        tok.text = "^^";
        return tok;
      case '"': return lex_string(tok);
      case '<': return lex_iri_ref(tok);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
      while (pos_ < text_.size() && name_char(text_[pos_])) {
        tok.text += text_[pos_];
        advance();
      }
      tok.kind = tok.text.find(':') == std::string::npos ? Token::Word : Token::Curie;
      return tok;
    }
    std::string found = "character '";
    found += std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "?";
    found += "'";
    throw Fail{ParseError{tok.line, tok.column, "a token", std::move(found)}};
  }

 private:
  Token lex_string(Token tok) {
    advance();  // opening quote
    tok.kind = Token::String;
    while (true) {
      if (pos_ >= text_.size())
        throw Fail{ParseError{tok.line, tok.column, "closing '\"'", "end of input"}};
      char c = text_[pos_];
      if (c == '"') {
        advance();
        return tok;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size())
          throw Fail{ParseError{tok.line, tok.column, "escaped character", "end of input"}};
        char esc = text_[pos_];
        if (esc != '"' && esc != '\\')
          throw Fail{ParseError{line_, column_, "'\\\"' or '\\\\'", std::string(1, esc)}};
        tok.text += esc;
        advance();
        continue;
      }
      if (c == '\n')
        throw Fail{ParseError{tok.line, tok.column, "closing '\"'", "end of line"}};
      tok.text += c;
      advance();
    }
  }

  Token lex_iri_ref(Token tok) {
    advance();  // '<'
    tok.kind = Token::IriRef;
    while (true) {
      if (pos_ >= text_.size())
        throw Fail{ParseError{tok.line, tok.column, "closing '>'", "end of input"}};
      char c = text_[pos_];
      if (c == '>') {
        advance();
        return tok;
      }
      if (c == '\n' || c == ' ')
        throw Fail{ParseError{tok.line, tok.column, "closing '>'", "whitespace"}};
      tok.text += c;
      advance();
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Document parse() {
    Document doc;
    while (cur_.kind == Token::Word && cur_.text == "Prefix") parse_prefix(doc);
    if (cur_.kind == Token::Word && cur_.text == "Ontology") parse_ontology(doc);
    if (cur_.kind != Token::End) fail(cur_, "'Prefix', 'Ontology' or end of input");
    return doc;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  Token expect(Token::Kind kind, const char* what) {
    if (cur_.kind != kind) fail(cur_, what);
    Token t = cur_;
    shift();
    return t;
  }

  Token expect_keyword(const char* word) {
    if (cur_.kind != Token::Word || cur_.text != word)
      fail(cur_, "'" + std::string(word) + "'");
    Token t = cur_;
    shift();
    return t;
  }

  void parse_prefix(Document& doc) {
    expect_keyword("Prefix");
    expect(Token::LParen, "'('");
    Token pname = expect(Token::Curie, "prefix name ending in ':'");
    auto colon = pname.text.find(':');
    if (colon != pname.text.size() - 1)
      fail(pname, "prefix name ending in ':'");
    std::string prefix = pname.text.substr(0, colon);
    expect(Token::Equals, "'='");
    Token ns = expect(Token::IriRef, "namespace in angle brackets");
    expect(Token::RParen, "')'");
    auto it = doc.prefixes.find(prefix);
    if (it != doc.prefixes.end() && it->second != ns.text)
      fail(pname, "a fresh prefix (this one is already declared)");
    doc.prefixes[prefix] = ns.text;
  }

  Iri parse_curie(const Document& doc) {
    Token t = expect(Token::Curie, "CURIE");
    auto colon = t.text.find(':');
    std::string prefix = t.text.substr(0, colon);
    std::string local = t.text.substr(colon + 1);
    if (local.find(':') != std::string::npos) fail(t, "CURIE with a single ':'");
    if (local.empty()) fail(t, "CURIE with a local name");
    if (!doc.prefixes.count(prefix))
      fail(t, "a declared prefix (prefix '" + prefix + "' is undeclared)");
    try {
      return Iri::make(prefix, local);
    } catch (const KbError& e) {
      fail(t, std::string("a well-formed CURIE (") + e.what() + ")");
    }
  }

  void parse_ontology(Document& doc) {
    expect_keyword("Ontology");
    expect(Token::LParen, "'('");
    if (cur_.kind == Token::Curie) doc.ontology_iri = parse_curie(doc);
    while (cur_.kind != Token::RParen) {
      if (cur_.kind == Token::End) fail(cur_, "an axiom or ')'");
      doc.axioms.push_back(parse_axiom(doc));
    }
    shift();  // ')'
  }

  static bool known_axiom_keyword(const std::string& word) {
    static const char* const names[] = {
        "Declaration", "SubClassOf", "EquivalentClasses", "ObjectPropertyDomain",
        "ObjectPropertyRange", "ClassAssertion", "ObjectPropertyAssertion",
        "NegativeObjectPropertyAssertion", "DataPropertyAssertion", "AnnotationAssertion"};
    for (const char* n : names)
      if (word == n) return true;
    return false;
  }

  Axiom parse_axiom(const Document& doc) {
    Token kw = expect(Token::Word, "an axiom name");
    if (!known_axiom_keyword(kw.text))
      fail(kw, "a supported axiom (unknown construct '" + kw.text + "')");
    Token open = cur_;
    expect(Token::LParen, "'('");
    try {
      if (kw.text == "Declaration") return finish(parse_declaration(doc));
      if (kw.text == "SubClassOf") {
        ClassExpr sub = parse_class_expr(doc, 1);
        ClassExpr sup = parse_class_expr(doc, 1);
        return finish(Axiom::sub_class_of(std::move(sub), std::move(sup)));
      }
      if (kw.text == "EquivalentClasses") {
        std::vector<ClassExpr> exprs;
        while (cur_.kind != Token::RParen) exprs.push_back(parse_class_expr(doc, 1));
        if (exprs.size() < 2) fail(cur_, "at least 2 class expressions");
        return finish(Axiom::equivalent_classes(std::move(exprs)));
      }
      if (kw.text == "ObjectPropertyDomain" || kw.text == "ObjectPropertyRange") {
        Iri prop = parse_curie(doc);
        ClassExpr expr = parse_class_expr(doc, 1);
        return finish(kw.text == "ObjectPropertyDomain"
                          ? Axiom::object_property_domain(prop, std::move(expr))
                          : Axiom::object_property_range(prop, std::move(expr)));
      }
      if (kw.text == "ClassAssertion") {
        ClassExpr type = parse_class_expr(doc, 1);
        Iri ind = parse_curie(doc);
        return finish(Axiom::class_assertion(std::move(type), ind));
      }
      if (kw.text == "ObjectPropertyAssertion" ||
          kw.text == "NegativeObjectPropertyAssertion") {
        Iri prop = parse_curie(doc);
        Iri subj = parse_curie(doc);
        Iri obj = parse_curie(doc);
        return finish(kw.text == "ObjectPropertyAssertion"
                          ? Axiom::object_property_assertion(prop, subj, obj)
                          : Axiom::negative_object_property_assertion(prop, subj, obj));
      }
      if (kw.text == "DataPropertyAssertion" || kw.text == "AnnotationAssertion") {
        Iri prop = parse_curie(doc);
        Iri subj = parse_curie(doc);
        Literal lit = parse_literal();
        return finish(kw.text == "DataPropertyAssertion"
                          ? Axiom::data_property_assertion(prop, subj, std::move(lit))
                          : Axiom::annotation_assertion(prop, subj, std::move(lit)));
      }
    } catch (const KbError& e) {
      // Structural invariant violated (arity, named-subclass side, ...).
      throw Fail{ParseError{open.line, open.column, e.what(), "'" + kw.text + "' arguments"}};
    }
    fail(kw, "a supported axiom (unknown construct '" + kw.text + "')");
  }

  Axiom finish(Axiom ax) {
    expect(Token::RParen, "')'");
    return ax;
  }

  Axiom parse_declaration(const Document& doc) {
    Token kind = expect(Token::Word, "an entity kind");
    EntityKind entity;
    if (kind.text == "Class") entity = EntityKind::Class;
    else if (kind.text == "ObjectProperty") entity = EntityKind::ObjectProperty;
    else if (kind.text == "DataProperty") entity = EntityKind::DataProperty;
    else if (kind.text == "AnnotationProperty") entity = EntityKind::AnnotationProperty;
    else if (kind.text == "NamedIndividual") entity = EntityKind::NamedIndividual;
    else fail(kind, "an entity kind (unknown construct '" + kind.text + "')");
    Iri iri = parse_curie(doc);
    return Axiom::declaration(entity, iri);
  }

  ClassExpr parse_class_expr(const Document& doc, int depth) {
    if (depth > kMaxExprDepth)
      fail(cur_, "a class expression nested at most 4 deep");
    if (cur_.kind == Token::Curie) return ClassExpr::named(parse_curie(doc));
    Token kw = expect(Token::Word, "a class expression");
    expect(Token::LParen, "'('");
    if (kw.text == "ObjectIntersectionOf" || kw.text == "ObjectUnionOf") {
      std::vector<ClassExpr> ops;
      while (cur_.kind != Token::RParen) ops.push_back(parse_class_expr(doc, depth + 1));
      Token close = cur_;
      expect(Token::RParen, "')'");
      if (ops.size() < 2) fail(close, "at least 2 operands in '" + kw.text + "'");
      return kw.text == "ObjectIntersectionOf" ? ClassExpr::intersection(std::move(ops))
                                               : ClassExpr::union_of(std::move(ops));
    }
    if (kw.text == "ObjectSomeValuesFrom") {
      Iri prop = parse_curie(doc);
      ClassExpr filler = parse_class_expr(doc, depth + 1);
      expect(Token::RParen, "')'");
      return ClassExpr::some(prop, std::move(filler));
    }
    fail(kw, "a class expression (unknown construct '" + kw.text + "')");
  }

  Literal parse_literal() {
    Token lex = expect(Token::String, "a quoted literal");
    if (cur_.kind != Token::TypeMarker) return Literal::string(lex.text);
    shift();
    Token type = expect(Token::Word, "a literal type");
    try {
      if (type.text == "string") return Literal::string(lex.text);
      if (type.text == "decimal") return Literal::decimal(lex.text);
      if (type.text == "boolean") {
        if (lex.text != "true" && lex.text != "false")
          fail(lex, "'true' or 'false' for a boolean literal");
        return Literal::boolean(lex.text == "true");
      }
      if (type.text == "category") return Literal::category(lex.text);
    } catch (const KbError& e) {
      throw Fail{ParseError{lex.line, lex.column, e.what(), "'" + lex.text + "'"}};
    }
    fail(type, "a literal type in {string, decimal, boolean, category}");
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

ParseResult parse_document(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const Fail& f) {
    return f.error;
  }
}

void load_document(KbBuilder& builder, const Document& doc) {
  for (const auto& [name, ns] : doc.prefixes) builder.declare_prefix(name, ns);
  if (doc.ontology_iri) builder.set_ontology_iri(*doc.ontology_iri);
  for (const Axiom& ax : doc.axioms)
    if (ax.kind == AxiomKind::Declaration) builder.add(ax);
  for (const Axiom& ax : doc.axioms)
    if (ax.kind != AxiomKind::Declaration) builder.add(ax);
}

std::string serialize(const std::map<std::string, std::string>& prefixes,
                      std::optional<Iri> ontology_iri, std::vector<Axiom> axioms) {
  std::sort(axioms.begin(), axioms.end(), axiom_less);
  axioms.erase(std::unique(axioms.begin(), axioms.end()), axioms.end());

  std::string out;
  for (const auto& [name, ns] : prefixes)
    out += "Prefix(" + name + ":=<" + ns + ">)\n";
  if (!ontology_iri && axioms.empty()) return out;
  if (!prefixes.empty()) out += "\n";
  out += "Ontology(";
  if (ontology_iri) out += ontology_iri->curie();
  out += "\n";
  for (const Axiom& ax : axioms) {
    out += "  ";
    out += to_functional(ax);
    out += "\n";
  }
  out += ")\n";
  return out;
}

std::string serialize(const KnowledgeBase& kb) {
  return serialize(kb.prefixes(), kb.ontology_iri(), kb.axioms());
}

std::string serialize(const Document& doc) {
  return serialize(doc.prefixes, doc.ontology_iri, doc.axioms);
}

}  // namespace sdoho::ofs
