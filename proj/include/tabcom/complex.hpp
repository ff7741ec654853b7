#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tabcom/common.hpp"
#include "tabcom/poset.hpp"
#include "tabcom/problem.hpp"
#include "tabcom/set_tableau.hpp"

namespace tabcom {

// A vertex of a tableau complex: the complement <x !-> y> of a single pair
// of the ambient relation E.
struct PairRef {
  int x = -1;
  int y = -1;
  bool operator==(const PairRef&) const = default;
  auto operator<=>(const PairRef&) const = default;
};

enum class PairClass { normal, cone, phantom };

// Order data carried by complexes built from a PosetTableauProblem. Enables
// the poset-only operations (decomposition, shelling, interior criterion).
struct PosetProvenance {
  FinitePoset x_poset;
  FinitePoset y_poset;
  std::vector<std::pair<int, int>> strict_pairs;
  std::vector<int> epsilon;  // fixed linear extension of X
};

// The tableau complex Delta(X, Y, T, E). Facets are the tableaux of T; the
// ambient set-valued tableau E is the empty face. Faces are set-valued
// tableaux F with f <= F <= E (pointwise) for some facet f; they are derived
// on demand, never stored.
class TableauComplex {
 public:
  static TableauComplex from_facets(
      std::vector<std::string> x_labels, std::vector<std::string> y_labels,
      std::vector<Tableau> facets,
      std::optional<SetValuedTableau> ambient = std::nullopt,
      std::optional<PosetProvenance> provenance = std::nullopt);

  static TableauComplex from_problem(const PosetTableauProblem& problem,
                                     const EnumLimits& limits = {});

  int num_points() const { return static_cast<int>(x_labels_.size()); }
  const std::string& point_label(int x) const { return x_labels_[x]; }
  const std::string& value_label(int y) const { return y_labels_[y]; }
  const std::vector<std::string>& point_labels() const { return x_labels_; }
  const std::vector<std::string>& value_labels() const { return y_labels_; }

  const std::vector<Tableau>& facets() const { return facets_; }
  const SetValuedTableau& ambient() const { return ambient_; }

  int ambient_size() const { return ambient_.total_size(); }  // |E|
  int facet_vertex_count() const { return ambient_size() - num_points(); }
  int dimension() const { return facet_vertex_count() - 1; }

  bool in_ambient(int x, int y) const { return ambient_.contains_value(x, y); }
  // Throws ValidationError when (x,y) is not in E.
  PairClass pair_class(PairRef v) const;
  // All pairs of E in canonical order (by x, then by y).
  const std::vector<PairRef>& pairs() const { return pairs_; }
  int pair_id(PairRef v) const;  // -1 when absent
  // Pairs that are vertices of the complex (phantom pairs excluded).
  std::vector<PairRef> vertex_pairs() const;

  bool is_facet(const Tableau& f) const { return facet_set_.count(f) > 0; }

  bool has_provenance() const { return provenance_.has_value(); }
  const PosetProvenance& provenance() const;

  // Same (X, Y, labels, provenance), new facet set and ambient.
  TableauComplex with_facets(std::vector<Tableau> facets,
                             SetValuedTableau ambient) const;

  // The vertex set of a face, as sorted pair ids (pairs of E absent from F).
  std::vector<int> vertex_ids_of(const SetValuedTableau& face) const;
  // The face whose only vertex is v, i.e. E minus that pair.
  SetValuedTableau vertex_face(PairRef v) const;

 private:
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
  std::vector<Tableau> facets_;
  SetValuedTableau ambient_;
  std::vector<PairRef> pairs_;
  std::vector<std::vector<int>> pair_id_;  // by x: parallel to ambient().at(x)
  std::vector<PairClass> classes_;         // parallel to pairs_
  std::set<Tableau> facet_set_;
  std::optional<PosetProvenance> provenance_;

  void finalize();
};

// ---- operations ----

// |F| - |X|, the number of extra values. Throws unless F is a face.
int codimension(const TableauComplex& cx, const SetValuedTableau& F);

// F is a face iff F <= E and F contains some facet.
bool is_face(const TableauComplex& cx, const SetValuedTableau& F);

// All faces, empty face and facets included, sorted canonically (by |F|,
// then pointwise lexicographic). Throws CapExceeded past max_faces.
std::vector<SetValuedTableau> enumerate_faces(
    const TableauComplex& cx, long long max_faces = EnumLimits{}.max_faces);

// Ridges (codimension-1 faces) with the number of facets containing each;
// every count is 1 or 2, and count 1 marks a boundary ridge.
std::vector<std::pair<SetValuedTableau, int>> ridge_incidence(
    const TableauComplex& cx);

TableauComplex star(const TableauComplex& cx, PairRef v);
TableauComplex deletion(const TableauComplex& cx, PairRef v);
TableauComplex link(const TableauComplex& cx, const SetValuedTableau& F);

// v is safe iff relabeling any facet's value at v.x to v.y stays in T.
bool is_safe(const TableauComplex& cx, PairRef v);

enum class InteriorMethod { bruteforce, poset };

// Interior test for faces of a ball/sphere complex. bruteforce checks that
// every single-valued selection of F is a facet; poset checks the setwise
// order conditions and needs provenance.
bool is_interior(const TableauComplex& cx, const SetValuedTableau& F,
                 InteriorMethod method);

// (f_-1, f_0, ..., f_d); f_-1 = 1 for the empty face.
std::vector<long long> f_vector(const TableauComplex& cx,
                                long long max_faces = EnumLimits{}.max_faces);

}  // namespace tabcom
