#include "tabcom/complex.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tabcom {

namespace {

std::string pair_text(const TableauComplex& cx, PairRef v) {
  return "(" + cx.point_label(v.x) + " !-> " + cx.value_label(v.y) + ")";
}

}  // namespace

TableauComplex TableauComplex::from_facets(
    std::vector<std::string> x_labels, std::vector<std::string> y_labels,
    std::vector<Tableau> facets, std::optional<SetValuedTableau> ambient,
    std::optional<PosetProvenance> provenance) {
  if (facets.empty()) throw ValidationError("empty facet list");
  const int n = static_cast<int>(x_labels.size());
  for (const Tableau& f : facets) {
    if (static_cast<int>(f.size()) != n) {
      throw ValidationError("facet domain does not match X");
    }
    for (int y : f)
      if (y < 0 || y >= static_cast<int>(y_labels.size()))
        throw ValidationError("facet value outside Y");
  }

  TableauComplex cx;
  cx.x_labels_ = std::move(x_labels);
  cx.y_labels_ = std::move(y_labels);
  // Deduplicate, keeping first occurrence; distinct single-valued functions
  // never contain one another, so exact duplicates are the only concern.
  for (Tableau& f : facets) {
    if (cx.facet_set_.insert(f).second) cx.facets_.push_back(std::move(f));
  }

  std::vector<std::vector<int>> uni(n);
  for (const Tableau& f : cx.facets_)
    for (int x = 0; x < n; ++x) uni[x].push_back(f[x]);
  SetValuedTableau union_t{std::move(uni)};
  if (ambient) {
    if (!ambient->contains(union_t)) {
      throw ValidationError("ambient does not contain every facet");
    }
    cx.ambient_ = std::move(*ambient);
  } else {
    cx.ambient_ = std::move(union_t);
  }
  cx.provenance_ = std::move(provenance);
  cx.finalize();
  return cx;
}

TableauComplex TableauComplex::from_problem(const PosetTableauProblem& problem,
                                            const EnumLimits& limits) {
  std::vector<Tableau> facets = enumerate_tableaux(problem, limits);
  std::optional<SetValuedTableau> ambient;
  if (problem.ambient()) ambient = SetValuedTableau(*problem.ambient());
  PosetProvenance prov{problem.x_poset(), problem.y_poset(),
                       problem.strict_pairs(),
                       linear_extension(problem.x_poset())};
  return from_facets(problem.x_poset().labels(), problem.y_poset().labels(),
                     std::move(facets), std::move(ambient), std::move(prov));
}

void TableauComplex::finalize() {
  const int n = num_points();
  pairs_.clear();
  pair_id_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    for (int y : ambient_.at(x)) {
      pair_id_[x].push_back(static_cast<int>(pairs_.size()));
      pairs_.push_back(PairRef{x, y});
    }
  }
  classes_.assign(pairs_.size(), PairClass::normal);
  for (size_t p = 0; p < pairs_.size(); ++p) {
    const auto [x, y] = pairs_[p];
    int uses = 0;
    for (const Tableau& f : facets_)
      if (f[x] == y) ++uses;
    if (uses == 0) classes_[p] = PairClass::cone;
    else if (uses == static_cast<int>(facets_.size()))
      classes_[p] = PairClass::phantom;
  }
}

PairClass TableauComplex::pair_class(PairRef v) const {
  const int id = pair_id(v);
  if (id < 0) throw ValidationError("pair " + pair_text(*this, v) +
                                    " is not in the ambient relation");
  return classes_[id];
}

int TableauComplex::pair_id(PairRef v) const {
  if (v.x < 0 || v.x >= num_points()) return -1;
  const auto& row = ambient_.at(v.x);
  auto it = std::lower_bound(row.begin(), row.end(), v.y);
  if (it == row.end() || *it != v.y) return -1;
  return pair_id_[v.x][it - row.begin()];
}

std::vector<PairRef> TableauComplex::vertex_pairs() const {
  std::vector<PairRef> out;
  for (size_t p = 0; p < pairs_.size(); ++p)
    if (classes_[p] != PairClass::phantom) out.push_back(pairs_[p]);
  return out;
}

const PosetProvenance& TableauComplex::provenance() const {
  if (!provenance_) {
    throw ValidationError("operation requires a poset-generated complex");
  }
  return *provenance_;
}

TableauComplex TableauComplex::with_facets(std::vector<Tableau> facets,
                                           SetValuedTableau ambient) const {
  return from_facets(x_labels_, y_labels_, std::move(facets),
                     std::move(ambient), provenance_);
}

std::vector<int> TableauComplex::vertex_ids_of(
    const SetValuedTableau& face) const {
  std::vector<int> out;
  for (int x = 0; x < num_points(); ++x) {
    const auto& row = ambient_.at(x);
    for (size_t i = 0; i < row.size(); ++i)
      if (!face.contains_value(x, row[i])) out.push_back(pair_id_[x][i]);
  }
  return out;
}

SetValuedTableau TableauComplex::vertex_face(PairRef v) const {
  if (pair_id(v) < 0) throw ValidationError("pair " + pair_text(*this, v) +
                                            " is not in the ambient relation");
  return ambient_.with_value_removed(v.x, v.y);
}

// ---- operations ----

int codimension(const TableauComplex& cx, const SetValuedTableau& F) {
  if (!is_face(cx, F)) throw ValidationError("not a face");
  return F.total_size() - cx.num_points();
}

bool is_face(const TableauComplex& cx, const SetValuedTableau& F) {
  if (F.num_points() != cx.num_points()) return false;
  if (!cx.ambient().contains(F)) return false;
  for (const Tableau& f : cx.facets())
    if (F.contains(f)) return true;
  return false;
}

std::vector<SetValuedTableau> enumerate_faces(const TableauComplex& cx,
                                              long long max_faces) {
  const int n = cx.num_points();
  std::vector<SetValuedTableau> out;
  std::vector<std::vector<int>> current(n);
  // Candidate facets still compatible with the chosen prefix; a branch dies
  // as soon as no facet fits, so every surviving leaf is a face.
  std::vector<int> all(cx.facets().size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  auto recurse = [&](auto&& self, int x, const std::vector<int>& cands) -> void {
    if (x == n) {
      if (static_cast<long long>(out.size()) >= max_faces) {
        throw CapExceeded("face enumeration exceeded cap of " +
                          std::to_string(max_faces));
      }
      out.push_back(SetValuedTableau(current));
      return;
    }
    const auto& row = cx.ambient().at(x);
    const int m = static_cast<int>(row.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      current[x].clear();
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) current[x].push_back(row[i]);
      std::vector<int> next;
      for (int fi : cands) {
        const int fy = cx.facets()[fi][x];
        auto it = std::lower_bound(current[x].begin(), current[x].end(), fy);
        if (it != current[x].end() && *it == fy) next.push_back(fi);
      }
      if (!next.empty()) self(self, x + 1, next);
    }
    current[x].clear();
  };
  if (n == 0) {
    out.push_back(SetValuedTableau(std::vector<std::vector<int>>{}));
  } else {
    recurse(recurse, 0, all);
  }
  std::sort(out.begin(), out.end(),
            [](const SetValuedTableau& a, const SetValuedTableau& b) {
              const int sa = a.total_size(), sb = b.total_size();
              if (sa != sb) return sa < sb;
              return a < b;
            });
  return out;
}

std::vector<std::pair<SetValuedTableau, int>> ridge_incidence(
    const TableauComplex& cx) {
  std::map<SetValuedTableau, int> ridges;
  for (const Tableau& f : cx.facets()) {
    for (int x = 0; x < cx.num_points(); ++x) {
      for (int y : cx.ambient().at(x)) {
        if (y == f[x]) continue;
        Tableau other = f;
        other[x] = y;
        const int count = 1 + (cx.is_facet(other) ? 1 : 0);
        SetValuedTableau ridge = SetValuedTableau::from_tableau(f)
                                     .with_value_added(x, y);
        auto [it, fresh] = ridges.emplace(std::move(ridge), count);
        if (!fresh && it->second != count) {
          throw InternalError("inconsistent ridge incidence count");
        }
      }
    }
  }
  return {ridges.begin(), ridges.end()};
}

TableauComplex star(const TableauComplex& cx, PairRef v) {
  cx.pair_class(v);  // validates membership in E
  std::vector<Tableau> kept;
  for (const Tableau& f : cx.facets())
    if (f[v.x] != v.y) kept.push_back(f);
  if (kept.empty()) {
    throw ValidationError("star of phantom vertex " + pair_text(cx, v) +
                          " is empty");
  }
  return cx.with_facets(std::move(kept), cx.ambient());
}

TableauComplex deletion(const TableauComplex& cx, PairRef v) {
  const PairClass cls = cx.pair_class(v);
  if (cls == PairClass::cone) return cx;
  if (!is_safe(cx, v)) {
    throw ValidationError("deletion not pure: " + pair_text(cx, v) +
                          " is neither safe nor a cone vertex");
  }
  std::vector<Tableau> kept;
  for (const Tableau& f : cx.facets())
    if (f[v.x] == v.y) kept.push_back(f);
  return cx.with_facets(std::move(kept), cx.ambient());
}

TableauComplex link(const TableauComplex& cx, const SetValuedTableau& F) {
  if (!is_face(cx, F)) throw ValidationError("link of a non-face");
  std::vector<Tableau> kept;
  for (const Tableau& f : cx.facets())
    if (F.contains(f)) kept.push_back(f);
  return cx.with_facets(std::move(kept), F);
}

bool is_safe(const TableauComplex& cx, PairRef v) {
  cx.pair_class(v);
  for (const Tableau& f : cx.facets()) {
    if (f[v.x] == v.y) continue;
    Tableau moved = f;
    moved[v.x] = v.y;
    if (!cx.is_facet(moved)) return false;
  }
  return true;
}

namespace {

bool every_selection_is_facet(const TableauComplex& cx,
                              const SetValuedTableau& F) {
  const int n = cx.num_points();
  Tableau g(n, -1);
  auto recurse = [&](auto&& self, int x) -> bool {
    if (x == n) return cx.is_facet(g);
    for (int y : F.at(x)) {
      g[x] = y;
      if (!self(self, x + 1)) return false;
    }
    return true;
  };
  return recurse(recurse, 0);
}

}  // namespace

bool is_interior(const TableauComplex& cx, const SetValuedTableau& F,
                 InteriorMethod method) {
  if (!is_face(cx, F)) throw ValidationError("interior test on a non-face");
  if (method == InteriorMethod::bruteforce) {
    return every_selection_is_facet(cx, F);
  }
  const PosetProvenance& prov = cx.provenance();
  const FinitePoset& Y = prov.y_poset;
  for (int a = 0; a < cx.num_points(); ++a) {
    for (int b = 0; b < cx.num_points(); ++b) {
      if (!prov.x_poset.less(a, b)) continue;
      for (int ya : F.at(a))
        for (int yb : F.at(b))
          if (!Y.leq(ya, yb)) return false;
    }
  }
  for (const auto& [a, b] : prov.strict_pairs) {
    for (int ya : F.at(a))
      for (int yb : F.at(b))
        if (!Y.less(ya, yb)) return false;
  }
  return true;
}

std::vector<long long> f_vector(const TableauComplex& cx, long long max_faces) {
  std::vector<long long> f(static_cast<size_t>(cx.dimension() + 2), 0);
  for (const SetValuedTableau& face : enumerate_faces(cx, max_faces)) {
    const int dim = cx.ambient_size() - face.total_size() - 1;
    f.at(static_cast<size_t>(dim + 1)) += 1;
  }
  return f;
}

}  // namespace tabcom
