#include "tabcom/poset.hpp"

#include <algorithm>

namespace tabcom {

int FinitePoset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw ValidationError("unknown element label: " + label);
  }
  return it->second;
}

bool FinitePoset::is_chain(const std::vector<int>& subset) const {
  for (size_t i = 0; i < subset.size(); ++i) {
    for (size_t j = i + 1; j < subset.size(); ++j) {
      if (!comparable(subset[i], subset[j])) return false;
    }
  }
  return true;
}

FinitePoset build_poset(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& cover_relations) {
  FinitePoset p;
  p.labels_ = std::move(elements);
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = p.index_.emplace(p.labels_[i], i);
    if (!fresh) throw ValidationError("duplicate element label: " + p.labels_[i]);
  }
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq_[i][i] = true;
  for (const auto& [lo, hi] : cover_relations) {
    p.leq_[p.index_of(lo)][p.index_of(hi)] = true;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!p.leq_[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (p.leq_[k][j]) p.leq_[i][j] = true;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq_[i][j] && p.leq_[j][i]) {
        throw ValidationError("cycle detected: " + p.labels_[i] + " and " +
                              p.labels_[j] + " are mutually comparable");
      }
  return p;
}

std::vector<int> linear_extension(const FinitePoset& poset) {
  const int n = poset.size();
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (poset.less(i, j)) ++indegree[j];
  std::vector<bool> done(n, false);
  std::vector<int> out;
  out.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (!done[i] && indegree[i] == 0) {
        pick = i;  // earliest in input order among minimal elements
        break;
      }
    }
    if (pick < 0) throw InternalError("no minimal element in acyclic poset");
    done[pick] = true;
    out.push_back(pick);
    for (int j = 0; j < n; ++j)
      if (!done[j] && poset.less(pick, j)) --indegree[j];
  }
  return out;
}

}  // namespace tabcom
