#pragma once

#include <map>
#include <string>
#include <vector>

namespace qmod {

struct Arrow {
  int id;
  int source;
  int target;
  std::string label;
};

// Finite quiver with dense vertex ids and unique arrow labels.
class Quiver {
 public:
  int add_vertex(std::string label);
  int add_arrow(int source, int target, std::string label);

  int num_vertices() const { return static_cast<int>(vertex_labels_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_label(int v) const { return vertex_labels_[v]; }
  const Arrow& arrow(int id) const { return arrows_[id]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }
  int vertex_by_label(const std::string& label) const;  // -1 if absent

  std::string to_dot(const std::string& graph_name = "quiver") const;

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

// Path stored in application order: arrows[0] is applied first. The empty word
// is the stationary path e_v with source == target. The right-to-left
// composite "b a" (apply a, then b) is the word {a, b}.
struct PathWord {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const PathWord& o) const {
    return source == o.source && target == o.target && arrows == o.arrows;
  }
};

PathWord stationary_path(int v);
// Validates composability against the quiver; throws on a broken word.
PathWord make_path(const Quiver& q, int source, const std::vector<int>& arrow_ids);
PathWord concat(const Quiver& q, const PathWord& first, const PathWord& then);

struct RelationTerm {
  long long coeff;
  PathWord path;
};

// Homogeneous linear relation: >= 1 term, all terms parallel paths of equal
// length >= 2.
struct LinearRelation {
  std::vector<RelationTerm> terms;
};

void validate_relation(const Quiver& q, const LinearRelation& rel);

// ---------------------------------------------------------------------------
// Iyama quivers Q_m^n: vertices are strictly increasing tuples in [1, m+n-1],
// arrows x -> x+e_i, with commutativity relations where both unit steps stay
// inside the vertex set and zero relations where only the composite survives.

struct IyamaQuiver {
  Quiver quiver;
  std::vector<std::vector<int>> coords;  // vertex id -> tuple
  std::vector<LinearRelation> relations;
  std::map<std::vector<int>, int> vertex_of;
};

Quiver build_linear_am(int m);  // 1 -> 2 -> ... -> m
IyamaQuiver build_iyama_quiver(int m, int n);

struct IyamaSplit {
  Quiver upper;                        // induced on x_n = m+n-1, iso to Q_m^{n-1}
  Quiver lower;                        // induced on x_n < m+n-1, iso to Q_{m-1}^n
  std::vector<int> upper_vertices;     // ids in Q_m^n, in upper's vertex order
  std::vector<int> lower_vertices;
  std::vector<int> connecting_arrows;  // arrow ids of Q_m^n crossing the cut
};

IyamaSplit split_iyama(int m, int n);

// All vertex subsets of the given size whose induced underlying undirected
// graph is a single cycle. Each result is a sorted vertex id list.
std::vector<std::vector<int>> find_induced_cycles(const Quiver& q, int length);

Quiver opposite(const Quiver& q);
LinearRelation reverse_relation(const LinearRelation& rel);

std::string coords_label(const std::vector<int>& coords);

}  // namespace qmod
