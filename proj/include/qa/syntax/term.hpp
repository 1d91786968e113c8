// Copyright 2026 The qa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QA_SYNTAX_TERM_HPP
#define QA_SYNTAX_TERM_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qa {

/// A first-order term: a variable or a function symbol applied to arguments.
/// Constants are applications with no arguments.
class Term {
 public:
  enum class Kind { kVar, kApp };

  Term() = default;

  static Term var(std::string name) { return Term(Kind::kVar, std::move(name), {}); }
  static Term app(std::string symbol, std::vector<Term> args = {}) {
    return Term(Kind::kApp, std::move(symbol), std::move(args));
  }

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::kVar; }
  bool is_app() const { return kind_ == Kind::kApp; }
  bool is_constant() const { return kind_ == Kind::kApp && args_.empty(); }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  bool ground() const {
    if (is_var()) return false;
    for (const Term& a : args_) {
      if (!a.ground()) return false;
    }
    return true;
  }

  std::size_t size() const {
    std::size_t n = 1;
    for (const Term& a : args_) n += a.size();
    return n;
  }

  bool contains(const Term& t) const {
    if (*this == t) return true;
    for (const Term& a : args_) {
      if (a.contains(t)) return true;
    }
    return false;
  }

  bool operator==(const Term& o) const { return kind_ == o.kind_ && name_ == o.name_ && args_ == o.args_; }
  std::strong_ordering operator<=>(const Term& o) const {
    if (auto c = kind_ <=> o.kind_; c != 0) return c;
    if (auto c = name_.compare(o.name_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const std::size_t n = std::min(args_.size(), o.args_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = args_[i] <=> o.args_[i]; c != 0) return c;
    }
    return args_.size() <=> o.args_.size();
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::string>()(name_) ^ (static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ULL);
    for (const Term& a : args_) h = h * 1099511628211ULL ^ a.hash();
    return h;
  }

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_ = Kind::kVar;
  std::string name_;
  std::vector<Term> args_;
};

inline std::string to_string(const Term& t) {
  if (t.args().empty()) return t.name();
  std::string s = t.name() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i > 0) s += ",";
    s += to_string(t.args()[i]);
  }
  return s + ")";
}

template <typename F>
void for_each_subterm(const Term& t, F&& f) {
  f(t);
  for (const Term& a : t.args()) for_each_subterm(a, f);
}

}  // namespace qa

#endif  // QA_SYNTAX_TERM_HPP
