#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tabcom/common.hpp"
#include "tabcom/poset.hpp"

namespace tabcom {

// A tableau is a single Y-value per X-element: values[x_index] = y_index.
using Tableau = std::vector<int>;

// Generator data for the facet set T: order-preserving tableaux f with
// f(x) in the chain Y_x, strict on the pairs of Psi.
class PosetTableauProblem {
 public:
  // Validates: every Y_x is a chain listed in increasing order, every
  // strict pair satisfies x1 < x2, ambient (when given) covers every chain.
  PosetTableauProblem(FinitePoset x_poset, FinitePoset y_poset,
                      std::vector<std::vector<int>> chains,
                      std::vector<std::pair<int, int>> strict_pairs,
                      std::optional<std::vector<std::vector<int>>> ambient =
                          std::nullopt);

  const FinitePoset& x_poset() const { return x_; }
  const FinitePoset& y_poset() const { return y_; }
  const std::vector<std::vector<int>>& chains() const { return chains_; }
  const std::vector<std::pair<int, int>>& strict_pairs() const {
    return strict_;
  }
  const std::optional<std::vector<std::vector<int>>>& ambient() const {
    return ambient_;
  }

  // True iff f satisfies all three membership conditions.
  bool admits(const Tableau& f) const;

 private:
  FinitePoset x_;
  FinitePoset y_;
  std::vector<std::vector<int>> chains_;
  std::vector<std::pair<int, int>> strict_;
  std::optional<std::vector<std::vector<int>>> ambient_;
};

// All admissible tableaux, sorted lexicographically by chain position along
// the linear extension of X. Backtracks along the extension with constraint
// pruning; deterministic. Throws CapExceeded past limits.max_tableaux, and
// ValidationError if a declared ambient fails to contain the union of the
// result.
std::vector<Tableau> enumerate_tableaux(const PosetTableauProblem& problem,
                                        const EnumLimits& limits = {});

}  // namespace tabcom
