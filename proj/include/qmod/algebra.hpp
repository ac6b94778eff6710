#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "qmod/matrix.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

struct NotAdmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InhomogeneousRelationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-dimensional bound quiver algebra kQ/I with a normal-path basis.
//
// Built degree by degree: in each length the span of all paths is quotiented
// by the span of p*r*q over relation generators r. Relations are homogeneous,
// so the layered quotient is exact and the construction stops at the first
// degree contributing no basis element. Within each (source, target, degree)
// layer the lexicographically earliest paths (by arrow-id sequence) survive as
// basis.
template <class K>
class BoundQuiverAlgebra {
 public:
  using Sparse = std::vector<std::pair<int, K>>;  // (global basis id, coeff)

  static BoundQuiverAlgebra build(Quiver quiver, std::vector<LinearRelation> relations,
                                  int max_degree = 64) {
    BoundQuiverAlgebra A;
    A.quiver_ = std::move(quiver);
    A.relations_ = std::move(relations);
    for (const LinearRelation& rel : A.relations_) {
      try {
        validate_relation(A.quiver_, rel);
      } catch (const std::invalid_argument& e) {
        throw InhomogeneousRelationError(e.what());
      }
    }
    A.construct(max_degree);
    return A;
  }

  const Quiver& quiver() const { return quiver_; }
  const std::vector<LinearRelation>& relations() const { return relations_; }
  int num_vertices() const { return quiver_.num_vertices(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  int max_basis_degree() const {
    int d = 0;
    for (const PathWord& p : basis_) d = std::max(d, p.length());
    return d;
  }

  const PathWord& basis_path(int id) const { return basis_[id]; }
  int vertex_unit(int v) const { return unit_[v]; }

  // Global basis ids of paths source -> target, in construction order
  // (ascending degree, lex within degree).
  const std::vector<int>& basis_at(int source, int target) const {
    return by_st_[source][target];
  }
  // Position of a basis element within its (source, target) list.
  int basis_pos(int id) const { return pos_in_st_[id]; }

  // Normal form of an arbitrary valid path word; empty result means zero.
  Sparse normal_form(const PathWord& p) const {
    int d = p.length();
    if (d >= static_cast<int>(degrees_.size())) return {};
    const DegreeTable& tab = degrees_[d];
    auto it = tab.index.find(path_key(p));
    if (it == tab.index.end()) throw std::logic_error("normal_form: unknown path");
    return tab.expand[it->second];
  }

  // Product of basis elements in application order: basis i followed by
  // basis j. Empty if not composable or zero in the algebra.
  Sparse mult(int i, int j) const {
    const PathWord& a = basis_[i];
    const PathWord& b = basis_[j];
    if (a.target != b.source) return {};
    return normal_form(concat(quiver_, a, b));
  }

  // C[v][w] = dim e_w A e_v = number of basis paths v -> w.
  std::vector<std::vector<int>> cartan_matrix() const {
    std::vector<std::vector<int>> C(num_vertices(), std::vector<int>(num_vertices(), 0));
    for (const PathWord& p : basis_) ++C[p.source][p.target];
    return C;
  }

  BoundQuiverAlgebra opposite(int max_degree = 64) const {
    std::vector<LinearRelation> rels;
    for (const LinearRelation& r : relations_) rels.push_back(reverse_relation(r));
    return build(qmod::opposite(quiver_), std::move(rels), max_degree);
  }

 private:
  struct DegreeTable {
    std::vector<PathWord> paths;
    std::map<std::pair<int, std::vector<int>>, int> index;  // (source, arrows) -> idx
    std::vector<Sparse> expand;                             // per path
  };

  static std::pair<int, std::vector<int>> path_key(const PathWord& p) {
    return {p.source, p.arrows};
  }

  void construct(int max_degree) {
    const int V = num_vertices();
    by_st_.assign(V, std::vector<std::vector<int>>(V));
    unit_.assign(V, -1);

    // degree 0: stationary paths, all basic
    {
      DegreeTable t0;
      for (int v = 0; v < V; ++v) {
        PathWord e = stationary_path(v);
        int idx = static_cast<int>(t0.paths.size());
        t0.paths.push_back(e);
        t0.index[path_key(e)] = idx;
        int gid = add_basis(e);
        unit_[v] = gid;
        t0.expand.push_back({{gid, K(1)}});
      }
      degrees_.push_back(std::move(t0));
    }

    // group relations by length (all are >= 2 by validation)
    std::map<int, std::vector<const LinearRelation*>> rels_by_len;
    for (const LinearRelation& r : relations_)
      rels_by_len[r.terms[0].path.length()].push_back(&r);

    for (int d = 1; d <= max_degree; ++d) {
      DegreeTable tab;
      const DegreeTable& prev = degrees_[d - 1];
      for (const PathWord& p : prev.paths) {
        for (int aid : quiver_.out_arrows(p.target)) {
          PathWord np = p;
          np.arrows.push_back(aid);
          np.target = quiver_.arrow(aid).target;
          int idx = static_cast<int>(tab.paths.size());
          tab.paths.push_back(np);
          tab.index[path_key(np)] = idx;
        }
      }
      if (tab.paths.empty()) {
        degrees_.push_back(std::move(tab));
        return;  // no paths at all from here on
      }
      tab.expand.assign(tab.paths.size(), {});

      // relation products p * r * q of total length d, grouped by endpoints
      std::map<std::pair<int, int>, std::vector<std::map<int, K>>> rows_by_st;
      for (auto& [len, rels] : rels_by_len) {
        if (len > d) continue;
        for (int a = 0; a + len <= d; ++a) {
          int b = d - len - a;
          for (const LinearRelation* rel : rels) {
            int rs = rel->terms[0].path.source;
            int rt = rel->terms[0].path.target;
            for (const PathWord& p : degrees_[a].paths) {
              if (p.target != rs) continue;
              for (const PathWord& q : degrees_[b].paths) {
                if (q.source != rt) continue;
                std::map<int, K> row;
                for (const RelationTerm& t : rel->terms) {
                  std::vector<int> ids = p.arrows;
                  ids.insert(ids.end(), t.path.arrows.begin(), t.path.arrows.end());
                  ids.insert(ids.end(), q.arrows.begin(), q.arrows.end());
                  auto it = tab.index.find({p.source, ids});
                  if (it == tab.index.end())
                    throw std::logic_error("relation product not a path");
                  row[it->second] += scalar_of<K>(t.coeff);
                }
                rows_by_st[{p.source, q.target}].push_back(std::move(row));
              }
            }
          }
        }
      }

      // per (source, target) group: quotient by the relation span
      std::map<std::pair<int, int>, std::vector<int>> group;
      for (int i = 0; i < static_cast<int>(tab.paths.size()); ++i)
        group[{tab.paths[i].source, tab.paths[i].target}].push_back(i);

      int new_basis = 0;
      for (auto& [st, members] : group) {
        // columns ordered by descending lex so eliminated pivots are the
        // lex-latest paths and the kept complement the lex-earliest
        std::vector<int> cols = members;
        std::sort(cols.begin(), cols.end(), [&](int x, int y) {
          return tab.paths[x].arrows > tab.paths[y].arrows;
        });
        std::vector<int> col_of(tab.paths.size(), -1);
        for (int c = 0; c < static_cast<int>(cols.size()); ++c) col_of[cols[c]] = c;

        auto rit = rows_by_st.find(st);
        int nrows = rit == rows_by_st.end() ? 0 : static_cast<int>(rit->second.size());
        Matrix<K> m(nrows, static_cast<int>(cols.size()));
        for (int r = 0; r < nrows; ++r)
          for (auto& [pi, c] : rit->second[r]) m(r, col_of[pi]) = c;
        auto rr = m.rref();
        std::vector<int> pivot_row(cols.size(), -1);
        for (int r = 0; r < rr.rank; ++r) pivot_row[rr.pivots[r]] = r;

        // kept columns become basis elements, in ascending lex order
        std::vector<int> kept;
        for (int c = static_cast<int>(cols.size()) - 1; c >= 0; --c)
          if (pivot_row[c] < 0) kept.push_back(c);
        std::vector<int> gid_of_col(cols.size(), -1);
        for (int c : kept) {
          int gid = add_basis(tab.paths[cols[c]]);
          gid_of_col[c] = gid;
          tab.expand[cols[c]] = {{gid, K(1)}};
          ++new_basis;
        }
        for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
          int r = pivot_row[c];
          if (r < 0) continue;
          Sparse e;
          for (int c2 : kept)
            if (!qmod::is_zero(rr.R(r, c2))) e.push_back({gid_of_col[c2], -rr.R(r, c2)});
          std::sort(e.begin(), e.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          tab.expand[cols[c]] = std::move(e);
        }
      }

      bool done = (new_basis == 0);
      degrees_.push_back(std::move(tab));
      if (done) return;
    }
    throw NotAdmissibleError("algebra still growing at max_degree");
  }

  int add_basis(const PathWord& p) {
    int gid = static_cast<int>(basis_.size());
    basis_.push_back(p);
    pos_in_st_.push_back(static_cast<int>(by_st_[p.source][p.target].size()));
    by_st_[p.source][p.target].push_back(gid);
    return gid;
  }

  Quiver quiver_;
  std::vector<LinearRelation> relations_;
  std::vector<PathWord> basis_;
  std::vector<int> pos_in_st_;
  std::vector<int> unit_;
  std::vector<std::vector<std::vector<int>>> by_st_;
  std::vector<DegreeTable> degrees_;
};

// An algebra together with its opposite; the homological layer moves modules
// across the pair for duals, transposes and injective constructions.
template <class K>
struct AlgebraPair {
  BoundQuiverAlgebra<K> alg;
  BoundQuiverAlgebra<K> op;

  static AlgebraPair make(Quiver q, std::vector<LinearRelation> rels, int max_degree = 64) {
    AlgebraPair p{BoundQuiverAlgebra<K>::build(std::move(q), std::move(rels), max_degree),
                  {}};
    p.op = p.alg.opposite(max_degree);
    return p;
  }

  const BoundQuiverAlgebra<K>& other_side(const BoundQuiverAlgebra<K>* side) const {
    return side == &alg ? op : alg;
  }
};

}  // namespace qmod
