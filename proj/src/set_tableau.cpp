#include "tabcom/set_tableau.hpp"

#include <algorithm>

namespace tabcom {

SetValuedTableau::SetValuedTableau(std::vector<std::vector<int>> values)
    : values_(std::move(values)) {
  for (auto& s : values_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) {
      throw ValidationError("set-valued tableau has an empty value set");
    }
  }
}

SetValuedTableau SetValuedTableau::from_tableau(const Tableau& f) {
  std::vector<std::vector<int>> v(f.size());
  for (size_t x = 0; x < f.size(); ++x) v[x] = {f[x]};
  return SetValuedTableau(std::move(v));
}

bool SetValuedTableau::contains_value(int x, int y) const {
  const auto& s = values_[x];
  return std::binary_search(s.begin(), s.end(), y);
}

bool SetValuedTableau::contains(const SetValuedTableau& other) const {
  if (other.num_points() != num_points()) return false;
  for (int x = 0; x < num_points(); ++x) {
    if (!std::includes(values_[x].begin(), values_[x].end(),
                       other.values_[x].begin(), other.values_[x].end()))
      return false;
  }
  return true;
}

bool SetValuedTableau::contains(const Tableau& f) const {
  if (static_cast<int>(f.size()) != num_points()) return false;
  for (int x = 0; x < num_points(); ++x)
    if (!contains_value(x, f[x])) return false;
  return true;
}

int SetValuedTableau::total_size() const {
  int n = 0;
  for (const auto& s : values_) n += static_cast<int>(s.size());
  return n;
}

SetValuedTableau SetValuedTableau::union_with(
    const SetValuedTableau& other) const {
  if (other.num_points() != num_points()) {
    throw ValidationError("union of set-valued tableaux over different X");
  }
  std::vector<std::vector<int>> v(values_.size());
  for (int x = 0; x < num_points(); ++x) {
    std::set_union(values_[x].begin(), values_[x].end(),
                   other.values_[x].begin(), other.values_[x].end(),
                   std::back_inserter(v[x]));
  }
  SetValuedTableau out;
  out.values_ = std::move(v);
  return out;
}

SetValuedTableau SetValuedTableau::with_value_added(int x, int y) const {
  SetValuedTableau out = *this;
  auto& s = out.values_[x];
  auto it = std::lower_bound(s.begin(), s.end(), y);
  if (it == s.end() || *it != y) s.insert(it, y);
  return out;
}

SetValuedTableau SetValuedTableau::with_value_removed(int x, int y) const {
  SetValuedTableau out = *this;
  auto& s = out.values_[x];
  auto it = std::lower_bound(s.begin(), s.end(), y);
  if (it == s.end() || *it != y) return out;
  if (s.size() == 1) {
    throw ValidationError("removal would empty a value set");
  }
  s.erase(it);
  return out;
}

std::strong_ordering SetValuedTableau::operator<=>(
    const SetValuedTableau& other) const {
  return values_ <=> other.values_;
}

}  // namespace tabcom
