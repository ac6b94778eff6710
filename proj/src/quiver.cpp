#include "qmod/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qmod {

int Quiver::add_vertex(std::string label) {
  vertex_labels_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  return num_vertices() - 1;
}

int Quiver::add_arrow(int source, int target, std::string label) {
  if (source < 0 || source >= num_vertices() || target < 0 || target >= num_vertices())
    throw std::invalid_argument("add_arrow: bad endpoint");
  for (const Arrow& a : arrows_)
    if (a.label == label) throw std::invalid_argument("add_arrow: duplicate label " + label);
  int id = num_arrows();
  arrows_.push_back(Arrow{id, source, target, std::move(label)});
  out_[source].push_back(id);
  in_[target].push_back(id);
  return id;
}

int Quiver::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertex_labels_[v] == label) return v;
  return -1;
}

std::string Quiver::to_dot(const std::string& graph_name) const {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (int v = 0; v < num_vertices(); ++v)
    os << "  v" << v << " [label=\"" << vertex_labels_[v] << "\"];\n";
  for (const Arrow& a : arrows_)
    os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.label << "\"];\n";
  os << "}\n";
  return os.str();
}

PathWord stationary_path(int v) { return PathWord{v, v, {}}; }

PathWord make_path(const Quiver& q, int source, const std::vector<int>& arrow_ids) {
  PathWord p;
  p.source = source;
  p.target = source;
  for (int id : arrow_ids) {
    const Arrow& a = q.arrow(id);
    if (a.source != p.target) throw std::invalid_argument("make_path: arrows do not compose");
    p.arrows.push_back(id);
    p.target = a.target;
  }
  return p;
}

PathWord concat(const Quiver& q, const PathWord& first, const PathWord& then) {
  if (first.target != then.source) throw std::invalid_argument("concat: endpoints mismatch");
  std::vector<int> ids = first.arrows;
  ids.insert(ids.end(), then.arrows.begin(), then.arrows.end());
  return make_path(q, first.source, ids);
}

void validate_relation(const Quiver& q, const LinearRelation& rel) {
  if (rel.terms.empty()) throw std::invalid_argument("relation: no terms");
  const PathWord& p0 = rel.terms[0].path;
  if (p0.length() < 2) throw std::invalid_argument("relation: term of length < 2");
  for (const RelationTerm& t : rel.terms) {
    make_path(q, t.path.source, t.path.arrows);  // composability check
    if (t.path.source != p0.source || t.path.target != p0.target ||
        t.path.length() != p0.length())
      throw std::invalid_argument("relation: terms not parallel/homogeneous");
  }
}

Quiver build_linear_am(int m) {
  if (m < 1) throw std::invalid_argument("build_linear_am: m >= 1 required");
  Quiver q;
  for (int i = 1; i <= m; ++i) q.add_vertex(std::to_string(i));
  for (int i = 1; i < m; ++i)
    q.add_arrow(i - 1, i, "a" + std::to_string(i));
  return q;
}

std::string coords_label(const std::vector<int>& coords) {
  int maxc = 0;
  for (int c : coords) maxc = std::max(maxc, c);
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i && maxc > 9) s += "-";
    s += std::to_string(coords[i]);
  }
  return s;
}

namespace {

std::vector<std::vector<int>> increasing_tuples(int n, int hi) {
  // all strictly increasing n-tuples in [1, hi], lexicographic
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  if (n > hi) return out;
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi - (n - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool tuple_ok(const std::vector<int>& t, int hi) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > hi) return false;
    if (i && t[i] <= t[i - 1]) return false;
  }
  return true;
}

}  // namespace

IyamaQuiver build_iyama_quiver(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("build_iyama_quiver: m,n >= 1 required");
  const int hi = m + n - 1;
  IyamaQuiver out;
  auto tuples = increasing_tuples(n, hi);
  for (const auto& t : tuples) {
    int v = out.quiver.add_vertex(coords_label(t));
    out.coords.push_back(t);
    out.vertex_of[t] = v;
  }
  auto step = [&](const std::vector<int>& t, int i) {
    std::vector<int> s = t;
    ++s[i];
    return s;
  };
  // arrow ids keyed by (vertex, direction) for relation assembly
  std::map<std::pair<int, int>, int> arrow_of;
  for (int v = 0; v < out.quiver.num_vertices(); ++v) {
    const auto& t = out.coords[v];
    for (int i = 0; i < n; ++i) {
      auto s = step(t, i);
      if (!tuple_ok(s, hi)) continue;
      int w = out.vertex_of.at(s);
      int id = out.quiver.add_arrow(
          v, w, "a" + std::to_string(i + 1) + "(" + coords_label(t) + ")");
      arrow_of[{v, i}] = id;
    }
  }
  // one generator per (x, unordered {i,j}): commutativity if both unit steps
  // stay in the vertex set, a zero relation if only one does but the composite
  // exists, nothing otherwise.
  for (int v = 0; v < out.quiver.num_vertices(); ++v) {
    const auto& t = out.coords[v];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto ti = step(t, i), tj = step(t, j);
        bool oki = tuple_ok(ti, hi), okj = tuple_ok(tj, hi);
        auto tij = step(ti, j);
        bool okij = tuple_ok(tij, hi);
        if (!okij) continue;  // no length-2 path in either order
        LinearRelation rel;
        if (oki) {
          int a1 = arrow_of.at({v, i});
          int a2 = arrow_of.at({out.vertex_of.at(ti), j});
          rel.terms.push_back({1, make_path(out.quiver, v, {a1, a2})});
        }
        if (okj) {
          int b1 = arrow_of.at({v, j});
          int b2 = arrow_of.at({out.vertex_of.at(tj), i});
          rel.terms.push_back({oki ? -1LL : 1LL, make_path(out.quiver, v, {b1, b2})});
        }
        if (rel.terms.empty()) continue;
        validate_relation(out.quiver, rel);
        out.relations.push_back(std::move(rel));
      }
  }
  return out;
}

namespace {

Quiver induced_subquiver(const Quiver& q, const std::vector<int>& vertices,
                         std::vector<int>* arrow_ids = nullptr) {
  Quiver sub;
  std::map<int, int> idx;
  for (int v : vertices) idx[v] = sub.add_vertex(q.vertex_label(v));
  for (const Arrow& a : q.arrows()) {
    auto s = idx.find(a.source), t = idx.find(a.target);
    if (s != idx.end() && t != idx.end()) {
      sub.add_arrow(s->second, t->second, a.label);
      if (arrow_ids) arrow_ids->push_back(a.id);
    }
  }
  return sub;
}

}  // namespace

IyamaSplit split_iyama(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("split_iyama: m,n >= 2 required");
  IyamaQuiver big = build_iyama_quiver(m, n);
  const int hi = m + n - 1;
  IyamaSplit out;
  for (int v = 0; v < big.quiver.num_vertices(); ++v) {
    if (big.coords[v].back() == hi)
      out.upper_vertices.push_back(v);
    else
      out.lower_vertices.push_back(v);
  }
  out.upper = induced_subquiver(big.quiver, out.upper_vertices);
  out.lower = induced_subquiver(big.quiver, out.lower_vertices);
  std::set<int> up(out.upper_vertices.begin(), out.upper_vertices.end());
  for (const Arrow& a : big.quiver.arrows()) {
    bool su = up.count(a.source), tu = up.count(a.target);
    if (su != tu) out.connecting_arrows.push_back(a.id);
  }
  return out;
}

std::vector<std::vector<int>> find_induced_cycles(const Quiver& q, int length) {
  if (length < 3) throw std::invalid_argument("find_induced_cycles: length >= 3 required");
  const int V = q.num_vertices();
  // undirected adjacency, ignoring multiplicity
  std::vector<std::set<int>> adj(V);
  for (const Arrow& a : q.arrows()) {
    if (a.source == a.target) continue;
    adj[a.source].insert(a.target);
    adj[a.target].insert(a.source);
  }
  std::vector<std::vector<int>> found;
  std::vector<int> pick;
  // enumerate subsets of the given size
  std::vector<int> comb(length);
  auto check = [&](const std::vector<int>& vs) {
    std::set<int> in(vs.begin(), vs.end());
    // degree exactly 2 inside, connected
    for (int v : vs) {
      int d = 0;
      for (int u : adj[v])
        if (in.count(u)) ++d;
      if (d != 2) return false;
    }
    std::vector<int> stack{vs[0]};
    std::set<int> seen{vs[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (in.count(u) && !seen.count(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    return static_cast<int>(seen.size()) == length;
  };
  for (int i = 0; i < length; ++i) comb[i] = i;
  if (V < length) return found;
  while (true) {
    if (check(comb)) found.push_back(comb);
    int i = length - 1;
    while (i >= 0 && comb[i] == V - (length - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < length; ++j) comb[j] = comb[j - 1] + 1;
  }
  return found;
}

Quiver opposite(const Quiver& q) {
  Quiver op;
  for (int v = 0; v < q.num_vertices(); ++v) op.add_vertex(q.vertex_label(v));
  for (const Arrow& a : q.arrows()) op.add_arrow(a.target, a.source, a.label + "op");
  return op;
}

LinearRelation reverse_relation(const LinearRelation& rel) {
  LinearRelation out;
  for (const RelationTerm& t : rel.terms) {
    PathWord p;
    p.source = t.path.target;
    p.target = t.path.source;
    p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
    out.terms.push_back({t.coeff, p});
  }
  return out;
}

}  // namespace qmod
