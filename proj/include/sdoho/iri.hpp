#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdoho {

// Interned namespace-qualified identifier. Two Iris with equal
// (prefix, local) parts share one intern id, so equality is an
// integer compare. Ordering is lexicographic over the parts, which
// keeps every derived ordering stable across processes.
class Iri {
 public:
  Iri() = default;

  // Throws KbError when `local` is empty or violates
  // [A-Za-z_][A-Za-z0-9_\-#]*  (the '#' permits ids like SDoHO#093).
  static Iri make(std::string_view prefix, std::string_view local);

  std::string_view prefix() const;
  std::string_view local() const;
  // CURIE form "prefix:local".
  std::string curie() const;

  bool valid() const { return id_ != 0; }

  friend bool operator==(Iri a, Iri b) { return a.id_ == b.id_; }
  friend bool operator!=(Iri a, Iri b) { return a.id_ != b.id_; }
  friend bool operator<(Iri a, Iri b);

  std::uint32_t intern_id() const { return id_; }

 private:
  explicit Iri(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;  // 0 = invalid/default
};

enum class LiteralType { String, Decimal, Boolean, Category };

std::string_view literal_type_name(LiteralType t);

// Typed data value. Decimal lexicals are canonicalized at
// construction ("34" -> "34.0") so serialization is deterministic.
struct Literal {
  std::string lexical;
  LiteralType type = LiteralType::String;

  static Literal string(std::string lex);
  // Throws KbError unless `lex` parses as a finite base-10 number.
  static Literal decimal(std::string_view lex);
  static Literal decimal(double value);
  static Literal boolean(bool value);
  static Literal category(std::string name);

  double as_decimal() const;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.type == b.type && a.lexical == b.lexical;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.lexical < b.lexical;
  }
};

// Canonical decimal rendering: integral values get a trailing ".0",
// everything else uses the shortest round-tripping form.
std::string canonical_decimal(double value);

class KbError : public std::runtime_error {
 public:
  explicit KbError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sdoho
