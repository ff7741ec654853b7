#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tabcom/common.hpp"

namespace tabcom {

// A finite poset over opaque string labels. The relation is stored as a
// reflexive-transitive boolean matrix over element indices; element indexing
// is fixed by construction order.
class FinitePoset {
 public:
  FinitePoset() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label; throws ValidationError for unknown labels.
  int index_of(const std::string& label) const;
  bool has_label(const std::string& label) const {
    return index_.find(label) != index_.end();
  }

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  bool comparable(int a, int b) const { return leq_[a][b] || leq_[b][a]; }

  // True if every two members of the subset are comparable.
  bool is_chain(const std::vector<int>& subset) const;

  friend FinitePoset build_poset(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& cover_relations);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<bool>> leq_;
};

// Builds the reflexive-transitive closure of the given cover relations.
// Throws ValidationError on unknown labels or cycles (antisymmetry failure).
FinitePoset build_poset(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& cover_relations);

// A total order refining the partial order. Deterministic: among currently
// minimal elements the one earliest in input order is emitted first, so
// shapes built row-major list in row-major reading order.
std::vector<int> linear_extension(const FinitePoset& poset);

}  // namespace tabcom
