#include "sdoho/iri.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace sdoho {

namespace {

struct Interner {
  std::mutex mu;
  std::deque<std::pair<std::string, std::string>> entries;  // id-1 -> (prefix, local)
  std::unordered_map<std::string, std::uint32_t> by_key;

  static Interner& instance() {
    static Interner interner;
    return interner;
  }

  std::uint32_t intern(std::string_view prefix, std::string_view local) {
    std::string key;
    key.reserve(prefix.size() + local.size() + 1);
    key.append(prefix);
    key.push_back(':');
    key.append(local);
    std::lock_guard<std::mutex> lock(mu);
    auto it = by_key.find(key);
    if (it != by_key.end()) return it->second;
    entries.emplace_back(std::string(prefix), std::string(local));
    std::uint32_t id = static_cast<std::uint32_t>(entries.size());
    by_key.emplace(std::move(key), id);
    return id;
  }

  const std::pair<std::string, std::string>& parts(std::uint32_t id) {
    std::lock_guard<std::mutex> lock(mu);
    return entries[id - 1];
  }
};

bool valid_local(std::string_view local) {
  if (local.empty()) return false;
  char c0 = local[0];
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
  for (char c : local.substr(1)) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '#')
      continue;
    return false;
  }
  return true;
}

bool valid_prefix(std::string_view prefix) {
  if (prefix.empty()) return true;  // default prefix
  char c0 = prefix[0];
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
  for (char c : prefix.substr(1)) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') continue;
    return false;
  }
  return true;
}

}  // namespace

Iri Iri::make(std::string_view prefix, std::string_view local) {
  if (!valid_prefix(prefix))
    throw KbError("invalid prefix label: '" + std::string(prefix) + "'");
  if (!valid_local(local))
    throw KbError("invalid local name: '" + std::string(local) + "'");
  return Iri(Interner::instance().intern(prefix, local));
}

std::string_view Iri::prefix() const {
  return Interner::instance().parts(id_).first;
}

std::string_view Iri::local() const {
  return Interner::instance().parts(id_).second;
}

std::string Iri::curie() const {
  const auto& p = Interner::instance().parts(id_);
  return p.first + ":" + p.second;
}

bool operator<(Iri a, Iri b) {
  if (a.id_ == b.id_) return false;
  const auto& pa = Interner::instance().parts(a.id_);
  const auto& pb = Interner::instance().parts(b.id_);
  if (pa.first != pb.first) return pa.first < pb.first;
  return pa.second < pb.second;
}

std::string_view literal_type_name(LiteralType t) {
  switch (t) {
    case LiteralType::String: return "string";
    case LiteralType::Decimal: return "decimal";
    case LiteralType::Boolean: return "boolean";
    case LiteralType::Category: return "category";
  }
  return "string";
}

std::string canonical_decimal(double value) {
  if (std::floor(value) == value && std::fabs(value) < 1e15) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", value);
    return buf;
  }
  // Shortest representation that round-trips.
  for (int prec = 6; prec <= 17; ++prec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, value);
    if (std::strtod(buf, nullptr) == value) return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Literal Literal::string(std::string lex) {
  return Literal{std::move(lex), LiteralType::String};
}

Literal Literal::decimal(std::string_view lex) {
  std::string s(lex);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
    throw KbError("not a finite decimal literal: '" + s + "'");
  return Literal{canonical_decimal(v), LiteralType::Decimal};
}

Literal Literal::decimal(double value) {
  if (!std::isfinite(value)) throw KbError("decimal literal must be finite");
  return Literal{canonical_decimal(value), LiteralType::Decimal};
}

Literal Literal::boolean(bool value) {
  return Literal{value ? "true" : "false", LiteralType::Boolean};
}

Literal Literal::category(std::string name) {
  return Literal{std::move(name), LiteralType::Category};
}

double Literal::as_decimal() const {
  return std::strtod(lexical.c_str(), nullptr);
}

}  // namespace sdoho
