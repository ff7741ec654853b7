#pragma once

#include <compare>
#include <vector>

#include "tabcom/common.hpp"
#include "tabcom/problem.hpp"

namespace tabcom {

// A set-valued tableau: a nonempty subset of Y per point of X. Doubles as a
// face of a tableau complex under reverse inclusion (smaller tableau = bigger
// face). Per-point sets are kept sorted.
class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  explicit SetValuedTableau(std::vector<std::vector<int>> values);
  static SetValuedTableau from_tableau(const Tableau& f);

  int num_points() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& at(int x) const { return values_[x]; }
  const std::vector<std::vector<int>>& values() const { return values_; }

  bool contains_value(int x, int y) const;
  // Pointwise superset tests.
  bool contains(const SetValuedTableau& other) const;
  bool contains(const Tableau& f) const;

  // Total number of (point, value) pairs, |F|.
  int total_size() const;

  SetValuedTableau union_with(const SetValuedTableau& other) const;
  SetValuedTableau with_value_added(int x, int y) const;
  // Throws ValidationError if removal would empty the set at x.
  SetValuedTableau with_value_removed(int x, int y) const;

  bool operator==(const SetValuedTableau& other) const = default;
  // Canonical order: pointwise, each set compared as a sorted list.
  std::strong_ordering operator<=>(const SetValuedTableau& other) const;

 private:
  std::vector<std::vector<int>> values_;
};

}  // namespace tabcom
