#pragma once

// Typing contexts: ordered name -> Type associations, duplicates rejected.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f0kit/type.hpp"

namespace f0kit {

class Context {
 public:
  using Entry = std::pair<std::string, TypePtr>;

  Context() = default;
  Context(std::initializer_list<Entry> entries) {
    for (auto& e : entries) insert(e.first, e.second);
  }

  void insert(const std::string& name, TypePtr type) {
    if (contains(name))
      throw std::invalid_argument("duplicate context variable: " + name);
    entries_.emplace_back(name, std::move(type));
  }

  Context extended(const std::string& name, TypePtr type) const {
    Context c = *this;
    c.insert(name, std::move(type));
    return c;
  }

  Context without_last() const {
    Context c = *this;
    if (!c.entries_.empty()) c.entries_.pop_back();
    return c;
  }

  bool contains(const std::string& name) const {
    for (auto& [n, t] : entries_)
      if (n == name) return true;
    return false;
  }

  const TypePtr* lookup(const std::string& name) const {
    for (auto& [n, t] : entries_)
      if (n == name) return &t;
    return nullptr;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  std::set<std::string> free_type_vars() const {
    std::set<std::string> out;
    for (auto& [n, t] : entries_) {
      auto fv = f0kit::free_type_vars(t);
      out.insert(fv.begin(), fv.end());
    }
    return out;
  }

  // Same names in the same order, types alpha-equal.
  friend bool context_eq(const Context& a, const Context& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i].first != b.entries_[i].first) return false;
      if (!alpha_eq_type(a.entries_[i].second, b.entries_[i].second)) return false;
    }
    return true;
  }

 private:
  std::vector<Entry> entries_;
};

inline std::string print_context(const Context& ctx) {
  std::string out;
  for (auto& [n, t] : ctx.entries()) {
    if (!out.empty()) out += ", ";
    out += n + " : " + print_type(t);
  }
  return out;
}

// Parses "x : A, y : B" (empty string allowed).
inline Context parse_context(const std::string& text,
                             const std::set<std::string>& atoms = default_atoms()) {
  Context ctx;
  detail::Cursor c{text};
  if (c.eof()) return ctx;
  for (;;) {
    auto name = c.ident();
    if (!name) throw ParseError("expected variable name in context", c.i);
    c.expect(':', "context binding");
    // A binding's type extends to the next top-level comma.
    size_t depth = 0, start = c.i;
    while (c.i < c.s.size() && (depth > 0 || c.s[c.i] != ',')) {
      if (c.s[c.i] == '(') ++depth;
      if (c.s[c.i] == ')') --depth;
      ++c.i;
    }
    ctx.insert(*name, parse_type(c.s.substr(start, c.i - start), atoms));
    if (!c.eat(',')) break;
  }
  if (!c.eof()) throw ParseError("trailing input after context", c.i);
  return ctx;
}

enum class System { F, F0, S, FF };

inline std::string system_name(System s) {
  switch (s) {
    case System::F: return "F";
    case System::F0: return "F0";
    case System::S: return "S";
    case System::FF: return "FF";
  }
  return {};
}

struct Judgment {
  Context ctx;
  TermPtr subject;
  TypePtr type;
  System system = System::F;
};

inline std::string print_judgment(const Judgment& j) {
  return print_context(j.ctx) + " |- " + print_term(j.subject) + " : " + print_type(j.type);
}

// Parses one corpus line: `Γ |- t : A` with Γ a comma-separated binding list.
inline Judgment parse_judgment(const std::string& line,
                               const std::set<std::string>& atoms = default_atoms()) {
  auto sep = line.find("|-");
  if (sep == std::string::npos) throw ParseError("expected '|-' in judgment", 0);
  Judgment j;
  j.ctx = parse_context(line.substr(0, sep), atoms);
  std::string rest = line.substr(sep + 2);
  // The subject/type separator is the last top-level ':'.
  size_t depth = 0, colon = std::string::npos;
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == '(') ++depth;
    if (rest[i] == ')') --depth;
    if (rest[i] == ':' && depth == 0) colon = i;
  }
  if (colon == std::string::npos) throw ParseError("expected ':' in judgment", sep);
  j.subject = parse_term(rest.substr(0, colon));
  j.type = parse_type(rest.substr(colon + 1), atoms);
  return j;
}

}  // namespace f0kit
