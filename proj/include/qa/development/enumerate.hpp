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

#ifndef QA_DEVELOPMENT_ENUMERATE_HPP
#define QA_DEVELOPMENT_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qa/development/tree.hpp"
#include "qa/error.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/printer.hpp"
#include "qa/syntax/rigidity.hpp"
#include "qa/syntax/signature.hpp"
#include "qa/syntax/substitution.hpp"

namespace qa {

struct DevelopmentEnumerationOptions {
  /// Nesting depth of the rigid ground terms in the pool; 0 means constants only.
  int term_depth = 1;
  /// Total formulas built across all sizes and scopes before giving up.
  std::uint64_t cap = 5'000'000;
};

/// Rigid ground terms over sig: the rigid constants, closed `depth` times under
/// the rigid function symbols. Sorted by size, then printed form.
inline std::vector<Term> rigid_ground_terms(const Signature& sig, int depth) {
  std::set<Term> all;
  for (const auto& [name, info] : sig.functions()) {
    if (info.rigid && info.arity == 0) all.insert(Term::app(name));
  }
  for (int d = 0; d < depth; ++d) {
    const std::vector<Term> known(all.begin(), all.end());
    std::set<Term> next;
    for (const auto& [name, info] : sig.functions()) {
      if (!info.rigid || info.arity == 0 || known.empty()) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(info.arity), 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t i : idx) args.push_back(known[i]);
        next.insert(Term::app(name, std::move(args)));
        std::size_t k = idx.size();
        for (; k > 0; --k) {
          if (++idx[k - 1] < known.size()) break;
          idx[k - 1] = 0;
        }
        if (k == 0) break;
      }
    }
    all.insert(next.begin(), next.end());
  }
  std::vector<Term> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return a.size() != b.size() ? a.size() < b.size() : to_string(a) < to_string(b);
  });
  return out;
}

/// Generates developments of a pattern set level by level in formula size.
/// Terms are the rigid ground pool, the free variables of the patterns and the
/// variables bound by enclosing quantifiers. Binders are named x, y, z, u, v, w,
/// x1, ... in nesting order, skipping names already free in a pattern.
class DevelopmentEnumerator {
 public:
  DevelopmentEnumerator(std::vector<Formula> phis, const Signature& sig, DevelopmentVariant v = {},
                        DevelopmentEnumerationOptions opts = {})
      : phis_(std::move(phis)), sig_(sig), v_(v), opts_(opts), ground_(rigid_ground_terms(sig, opts.term_depth)) {
    std::set<std::string> fv;
    for (const auto& p : phis_) {
      for (const auto& x : free_variables(p)) {
        if (fv.insert(x).second) base_vars_.push_back(x);
      }
    }
    reserved_ = fv;
    connectives_only_ = ground_.empty() && base_vars_.empty();
  }

  /// Closed and open developments of exactly `size` nodes, alpha-deduplicated,
  /// sorted by printed form.
  std::vector<Formula> level(std::size_t size) {
    std::vector<Formula> out;
    std::set<Formula> seen;
    for (const auto& f : all(size, 0)) {
      if (seen.insert(alpha_normalize(f)).second) out.push_back(f);
    }
    std::stable_sort(out.begin(), out.end(), [](const Formula& a, const Formula& b) { return to_string(a) < to_string(b); });
    return out;
  }

  std::uint64_t built() const { return built_; }

 private:
  using Key = std::pair<std::size_t, std::size_t>;  // size, binder depth

  const std::string& binder(std::size_t depth) {
    static const char* const kBase[] = {"x", "y", "z", "u", "v", "w"};
    while (binders_.size() <= depth) {
      std::string name;
      do {
        name = next_name_ < 6 ? kBase[next_name_] : "x" + std::to_string(next_name_ - 5);
        ++next_name_;
      } while (reserved_.count(name));
      binders_.push_back(name);
    }
    return binders_[depth];
  }

  std::vector<Term> pool(std::size_t depth) {
    std::vector<Term> out = ground_;
    for (const auto& x : base_vars_) out.push_back(Term::var(x));
    for (std::size_t i = 0; i < depth; ++i) out.push_back(Term::var(binder(i)));
    return out;
  }

  void count(std::size_t n) {
    built_ += n;
    if (built_ > opts_.cap) {
      throw EnumerationOverflow("development enumeration exceeds cap of " + std::to_string(opts_.cap) + " formulas");
    }
  }

  const std::vector<Formula>& leaves(std::size_t size, std::size_t depth) {
    const Key key{size, depth};
    if (auto it = leaves_.find(key); it != leaves_.end()) return it->second;
    std::vector<Formula> out;
    const std::vector<Term> terms = pool(depth);
    for (const auto& phi : phis_) {
      if (phi.size() != size) continue;
      const std::vector<std::string> xs = free_variables(phi);
      if (!xs.empty() && terms.empty()) continue;
      std::vector<std::size_t> idx(xs.size(), 0);
      while (true) {
        Substitution s;
        for (std::size_t i = 0; i < xs.size(); ++i) s.emplace(xs[i], terms[idx[i]]);
        out.push_back(substitute(phi, s));
        std::size_t k = idx.size();
        for (; k > 0; --k) {
          if (++idx[k - 1] < terms.size()) break;
          idx[k - 1] = 0;
        }
        if (k == 0) break;
      }
    }
    if (size == 1 && v_.allow_equality && !connectives_only_) {
      for (const auto& a : terms) {
        for (const auto& b : terms) {
          if (!v_.allow_var_var_identity && a.is_var() && b.is_var()) continue;
          out.push_back(Formula::eq(a, b));
        }
      }
    }
    count(out.size());
    return leaves_.emplace(key, dedup(std::move(out))).first->second;
  }

  const std::vector<Formula>& all(std::size_t size, std::size_t depth) {
    const Key key{size, depth};
    if (auto it = all_.find(key); it != all_.end()) return it->second;
    std::vector<Formula> out = leaves(size, depth);
    std::size_t counted = out.size();
    auto tally = [&] {
      count(out.size() - counted);
      counted = out.size();
    };
    if (size >= 2) {
      const std::vector<Formula>& negatable = v_.allow_existential ? all(size - 1, depth) : leaves(size - 1, depth);
      for (const auto& f : negatable) out.push_back(Formula::neg(f));
      for (std::size_t a = 1; a + 1 < size; ++a) {
        const std::size_t b = size - 1 - a;
        const std::vector<Formula>& ls = all(a, depth);
        const std::vector<Formula>& rs = all(b, depth);
        for (const auto& l : ls) {
          for (const auto& r : rs) {
            out.push_back(Formula::conj(l, r));
            out.push_back(Formula::disj(l, r));
          }
        }
        const std::vector<Formula> lleaf = v_.allow_existential ? ls : leaves(a, depth);
        const std::vector<Formula> rleaf = v_.allow_existential ? rs : leaves(b, depth);
        for (const auto& l : lleaf) {
          for (const auto& r : rs) out.push_back(Formula::imp(l, r));
          for (const auto& r : rleaf) out.push_back(Formula::iff(l, r));
        }
        tally();
      }
      if (connectives_only_) {
        tally();
        return all_.emplace(key, dedup(std::move(out))).first->second;
      }
      const std::string x = binder(depth);
      const std::vector<Formula>& bodies = all(size - 1, depth + 1);
      for (const auto& f : bodies) {
        out.push_back(Formula::forall(x, f));
        if (v_.allow_existential) out.push_back(Formula::exists(x, f));
      }
    }
    tally();
    return all_.emplace(key, dedup(std::move(out))).first->second;
  }

  static std::vector<Formula> dedup(std::vector<Formula> fs) {
    std::set<Formula> seen;
    std::vector<Formula> out;
    for (auto& f : fs) {
      if (seen.insert(alpha_normalize(f)).second) out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<Formula> phis_;
  const Signature& sig_;
  DevelopmentVariant v_;
  DevelopmentEnumerationOptions opts_;
  std::vector<Term> ground_;
  std::vector<std::string> base_vars_;
  std::set<std::string> reserved_;
  std::vector<std::string> binders_;
  std::size_t next_name_ = 0;
  /// No rigid ground term and closed patterns: quantifiers and identities
  /// would only range over bound variables, so they are left out.
  bool connectives_only_ = false;
  std::map<Key, std::vector<Formula>> leaves_;
  std::map<Key, std::vector<Formula>> all_;
  std::uint64_t built_ = 0;
};

/// All developments of size at most max_size, in nondecreasing size and
/// lexicographic (printed form) within a size.
inline std::vector<Formula> enumerate_developments(const std::vector<Formula>& phis, const Signature& sig,
                                                   std::size_t max_size, const DevelopmentVariant& v = {},
                                                   const DevelopmentEnumerationOptions& opts = {}) {
  if (max_size == 0) throw InputError("enumerate_developments: size bound must be positive");
  DevelopmentEnumerator e(phis, sig, v, opts);
  std::vector<Formula> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    auto lv = e.level(s);
    out.insert(out.end(), lv.begin(), lv.end());
  }
  return out;
}

}  // namespace qa

#endif  // QA_DEVELOPMENT_ENUMERATE_HPP
