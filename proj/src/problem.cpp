#include "tabcom/problem.hpp"

#include <algorithm>
#include <string>

namespace tabcom {

PosetTableauProblem::PosetTableauProblem(
    FinitePoset x_poset, FinitePoset y_poset,
    std::vector<std::vector<int>> chains,
    std::vector<std::pair<int, int>> strict_pairs,
    std::optional<std::vector<std::vector<int>>> ambient)
    : x_(std::move(x_poset)),
      y_(std::move(y_poset)),
      chains_(std::move(chains)),
      strict_(std::move(strict_pairs)),
      ambient_(std::move(ambient)) {
  if (static_cast<int>(chains_.size()) != x_.size()) {
    throw ValidationError("chain list size does not match X");
  }
  for (int x = 0; x < x_.size(); ++x) {
    const auto& c = chains_[x];
    if (c.empty()) {
      throw ValidationError("empty chain Y_x at " + x_.label(x));
    }
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      if (!y_.less(c[i], c[i + 1])) {
        throw ValidationError("Y_x at " + x_.label(x) +
                              " is not a chain listed in increasing order");
      }
    }
  }
  for (const auto& [a, b] : strict_) {
    if (!x_.less(a, b)) {
      throw ValidationError("strict pair (" + x_.label(a) + "," + x_.label(b) +
                            ") is not an increasing comparable pair");
    }
  }
  if (ambient_) {
    if (static_cast<int>(ambient_->size()) != x_.size()) {
      throw ValidationError("ambient size does not match X");
    }
    for (auto& row : *ambient_) std::sort(row.begin(), row.end());
  }
}

bool PosetTableauProblem::admits(const Tableau& f) const {
  if (static_cast<int>(f.size()) != x_.size()) return false;
  for (int x = 0; x < x_.size(); ++x) {
    if (std::find(chains_[x].begin(), chains_[x].end(), f[x]) ==
        chains_[x].end())
      return false;
  }
  for (int a = 0; a < x_.size(); ++a)
    for (int b = 0; b < x_.size(); ++b)
      if (x_.less(a, b) && !y_.leq(f[a], f[b])) return false;
  for (const auto& [a, b] : strict_)
    if (!y_.less(f[a], f[b])) return false;
  return true;
}

std::vector<Tableau> enumerate_tableaux(const PosetTableauProblem& problem,
                                        const EnumLimits& limits) {
  const FinitePoset& X = problem.x_poset();
  const FinitePoset& Y = problem.y_poset();
  const int n = X.size();
  const std::vector<int> ext = linear_extension(X);

  // Predecessor constraints against already-assigned positions only; in a
  // linear extension everything above x comes later, so checking x against
  // earlier elements covers all comparable pairs exactly once.
  std::vector<std::vector<int>> weak_below(n), strict_below(n);
  {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ext[i]] = i;
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        if (X.less(a, b) && pos[a] < pos[b]) weak_below[b].push_back(a);
    for (const auto& [a, b] : problem.strict_pairs())
      strict_below[b].push_back(a);
  }

  std::vector<Tableau> out;
  Tableau current(n, -1);
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      if (static_cast<long long>(out.size()) >= limits.max_tableaux) {
        throw CapExceeded("tableau enumeration exceeded cap of " +
                          std::to_string(limits.max_tableaux));
      }
      out.push_back(current);
      return;
    }
    const int x = ext[depth];
    for (int y : problem.chains()[x]) {
      bool ok = true;
      for (int a : weak_below[x])
        if (!Y.leq(current[a], y)) { ok = false; break; }
      if (ok)
        for (int a : strict_below[x])
          if (!Y.less(current[a], y)) { ok = false; break; }
      if (!ok) continue;
      current[x] = y;
      self(self, depth + 1);
    }
    current[x] = -1;
  };
  recurse(recurse, 0);

  if (problem.ambient()) {
    const auto& amb = *problem.ambient();
    for (const Tableau& f : out)
      for (int x = 0; x < n; ++x)
        if (!std::binary_search(amb[x].begin(), amb[x].end(), f[x])) {
          throw ValidationError("ambient does not contain facet value " +
                                Y.label(f[x]) + " at " + X.label(x));
        }
  }
  return out;
}

}  // namespace tabcom
