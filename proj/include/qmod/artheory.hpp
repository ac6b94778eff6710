#pragma once

#include <deque>
#include <set>
#include <sstream>

#include "qmod/homalg.hpp"

namespace qmod {

struct ProjectiveInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InjectiveInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteEnumeration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Transpose via the minimal presentation P1 -> P0 -> X -> 0: apply
// (-)* = Hom(-, A) and take the cokernel of P0* -> P1* on the other side of
// the pair. Generator coordinates of the presentation turn into reversed
// basis paths.
template <class K>
Representation<K> transpose_of(const Representation<K>& X, const AlgebraPair<K>& P) {
  const BoundQuiverAlgebra<K>& A = *X.alg;
  const BoundQuiverAlgebra<K>& B = P.other_side(X.alg);
  if (X.is_zero_module()) return make_zero_module(B);
  ProjResolution<K> res = build_resolution(X, 1);
  const StackedProjective<K>& P0 = res.P[0];
  const StackedProjective<K>& P1 = res.P[1];
  StackedProjective<K> P0s = build_stacked(B, P0.gens);
  StackedProjective<K> P1s = build_stacked(B, P1.gens);
  std::vector<Matrix<K>> images;
  for (std::size_t c0 = 0; c0 < P0.gens.size(); ++c0)
    images.emplace_back(P1s.rep.dims[P0.gens[c0]], 1);
  for (std::size_t c = 0; c < P1.gens.size(); ++c) {
    for (auto& [c0, pathid, coeff] : res.dgen[1][c]) {
      const PathWord& p = A.basis_path(pathid);
      PathWord rev;
      rev.source = p.target;
      rev.target = p.source;
      rev.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
      for (auto& [gid, cf] : B.normal_form(rev)) {
        int row = P1s.offset[P0.gens[c0]][c] + B.basis_pos(gid);
        images[c0](row, 0) += coeff * cf;
      }
    }
  }
  Morphism<K> delta = morphism_from_gens(P0s, P1s.rep, images);
  return cokernel_of(delta).rep;
}

template <class K>
Representation<K> tau(const Representation<K>& X, const AlgebraPair<K>& P) {
  if (is_projective(X)) throw ProjectiveInput("tau: projective input");
  return dual(transpose_of(X, P), P);
}

template <class K>
Representation<K> tau_inverse(const Representation<K>& X, const AlgebraPair<K>& P) {
  if (is_injective(X, P)) throw InjectiveInput("tau_inverse: injective input");
  return transpose_of(dual(X, P), P);
}

template <class K>
struct ShortExactSequence {
  Representation<K> left, mid, right;
  Morphism<K> incl;  // left -> mid
  Morphism<K> proj;  // mid -> right

  bool verify() const {
    if (left.total_dim() + right.total_dim() != mid.total_dim()) return false;
    if (!incl.intertwines() || !proj.intertwines()) return false;
    if (!incl.is_mono() || !proj.is_epi()) return false;
    return compose(proj, incl).is_zero();
  }
};

// Almost split sequence 0 -> tau Z -> E -> Z -> 0 for indecomposable
// non-projective Z. E is the pushout of a nonzero element of the socle of
// Ext^1(Z, tau Z) as an End(Z)-module, the socle being the joint kernel of the
// rad End(Z) action after lifting endomorphisms through the presentation.
template <class K>
ShortExactSequence<K> almost_split_sequence(const Representation<K>& Z,
                                            const AlgebraPair<K>& P) {
  const BoundQuiverAlgebra<K>& A = *Z.alg;
  if (is_projective(Z)) throw ProjectiveInput("almost_split_sequence: projective input");
  Cover<K> c = projective_cover(Z);
  SubQuot<K> om = kernel_of(c.epi);
  Representation<K> tZ = tau(Z, P);

  std::vector<Morphism<K>> H = hom_basis(om.rep, tZ);
  const int h = static_cast<int>(H.size());
  if (h == 0) throw std::logic_error("almost_split_sequence: Ext^1(Z, tau Z) = 0");
  std::vector<Matrix<K>> hv;
  for (const auto& m : H) hv.push_back(vectorize(m));
  Matrix<K> Hv = Matrix<K>::hstack(hv);

  // image of Hom(P0, tau Z) under restriction to the syzygy, in H coordinates
  std::vector<Matrix<K>> iv;
  for (const auto& g : hom_basis(c.P.rep, tZ)) iv.push_back(vectorize(compose(g, om.map)));
  Matrix<K> Cb(h, 0);
  if (!iv.empty()) {
    auto coords = solve_right(Hv, Matrix<K>::hstack(iv));
    if (!coords) throw std::logic_error("almost_split_sequence: restriction outside Hom");
    Cb = coords->column_space_basis();
  }
  auto in_image = [&](const Matrix<K>& x) {
    return Cb.cols() > 0 && solve_right(Cb, x).has_value();
  };

  // action of rad End(Z) on Ext^1 coordinates, via lifting through the cover
  std::vector<Morphism<K>> E = hom_basis(Z, Z);
  std::vector<Matrix<K>> action;
  for (const Morphism<K>& phi : rad_end_basis(Z, E)) {
    std::vector<Matrix<K>> lifted;
    for (std::size_t cc = 0; cc < c.P.gens.size(); ++cc) {
      int v = c.P.gens[cc];
      Matrix<K> y = phi.f[v] * c.epi.f[v].column(c.P.gen_coord(static_cast<int>(cc)));
      auto x = solve_right(c.epi.f[v], y);
      if (!x) throw std::logic_error("almost_split_sequence: cover not epi");
      lifted.push_back(std::move(*x));
    }
    Morphism<K> phi0 = morphism_from_gens(c.P, c.P.rep, lifted);
    Morphism<K> phiOm = zero_morphism(om.rep, om.rep);
    for (int v = 0; v < A.num_vertices(); ++v) {
      auto r = solve_right(om.map.f[v], phi0.f[v] * om.map.f[v]);
      if (!r) throw std::logic_error("almost_split_sequence: syzygy not stable");
      phiOm.f[v] = std::move(*r);
    }
    std::vector<Matrix<K>> cols;
    for (const auto& m : H) {
      auto co = solve_right(Hv, vectorize(compose(m, phiOm)));
      if (!co) throw std::logic_error("almost_split_sequence: action outside Hom");
      cols.push_back(std::move(*co));
    }
    action.push_back(Matrix<K>::hstack(cols));
  }

  // socle element: x with A_phi x in the image for every phi, x itself outside
  Matrix<K> x(h, 1);
  bool found = false;
  if (action.empty()) {
    for (int i = 0; i < h && !found; ++i) {
      Matrix<K> e(h, 1);
      e(i, 0) = K(1);
      if (!in_image(e)) {
        x = e;
        found = true;
      }
    }
  } else {
    const int r = Cb.cols();
    const int nphi = static_cast<int>(action.size());
    Matrix<K> sys(nphi * h, h + nphi * r);
    for (int q = 0; q < nphi; ++q)
      for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) sys(q * h + i, j) = action[q](i, j);
        for (int j = 0; j < r; ++j) sys(q * h + i, h + q * r + j) = -Cb(i, j);
      }
    Matrix<K> ker = sys.kernel_basis();
    for (int b = 0; b < ker.cols() && !found; ++b) {
      Matrix<K> xc(h, 1);
      for (int i = 0; i < h; ++i) xc(i, 0) = ker(i, b);
      if (!in_image(xc)) {
        x = xc;
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("almost_split_sequence: socle not found");
  Morphism<K> ext = zero_morphism(om.rep, tZ);
  for (int i = 0; i < h; ++i)
    if (!is_zero(x(i, 0))) ext = add(ext, scale(H[i], x(i, 0)));

  // pushout along (incl, -ext) : Omega Z -> P0 + tau Z
  std::vector<Representation<K>> parts{c.P.rep, tZ};
  DirectSum<K> ds = direct_sum(parts, A);
  Morphism<K> i0 = summand_inclusion(ds, parts, 0);
  Morphism<K> i1 = summand_inclusion(ds, parts, 1);
  Morphism<K> glue = add(compose(i0, om.map), scale(compose(i1, ext), K(-1)));
  SubQuot<K> mid = cokernel_of(glue);

  ShortExactSequence<K> seq;
  seq.left = tZ;
  seq.mid = mid.rep;
  seq.right = Z;
  seq.incl = compose(mid.map, i1);
  Morphism<K> t = zero_morphism(ds.rep, Z);
  for (int v = 0; v < A.num_vertices(); ++v)
    for (int i = 0; i < Z.dims[v]; ++i)
      for (int j = 0; j < c.P.rep.dims[v]; ++j)
        t.f[v](i, ds.offset[0][v] + j) = c.epi.f[v](i, j);
  seq.proj = zero_morphism(mid.rep, Z);
  for (int v = 0; v < A.num_vertices(); ++v) {
    auto r = solve_right(mid.map.f[v].transpose(), t.f[v].transpose());
    if (!r) throw std::logic_error("almost_split_sequence: projection does not descend");
    seq.proj.f[v] = r->transpose();
  }
  if (!seq.verify()) throw std::logic_error("almost_split_sequence: sequence not exact");
  return seq;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of indecomposables by worklist closure.

struct EnumCaps {
  int max_modules = 2000;
  long long max_total_dim = 100000;
};

template <class K>
struct EnumerationResult {
  enum Status { Complete, ExceededCap };
  Status status = Complete;
  std::string cap_reason;
  std::vector<Representation<K>> modules;
  std::vector<bool> projective, injective;
  std::vector<int> tau_link;  // index of tau(M); -1 when projective or unknown
  struct ARSeq {
    int left, right;
    std::vector<int> middle;  // with multiplicity
  };
  std::vector<ARSeq> sequences;
  EnumCaps caps;
  std::uint64_t seed = 0;

  int count() const { return static_cast<int>(modules.size()); }
};

namespace detail {

template <class K>
struct IsoTable {
  std::map<std::tuple<std::vector<int>, std::vector<int>, int>, std::vector<int>> buckets;

  std::tuple<std::vector<int>, std::vector<int>, int> key(const Representation<K>& X) const {
    std::vector<int> ranks;
    for (const auto& m : X.mats) ranks.push_back(m.rank());
    std::sort(ranks.begin(), ranks.end());
    return {X.dims, std::move(ranks), end_over_rad_dim(X)};
  }

  // index of the iso class, or -1
  int find(const std::vector<Representation<K>>& mods, const Representation<K>& X,
           std::uint64_t seed) const {
    auto it = buckets.find(key(X));
    if (it == buckets.end()) return -1;
    for (int i : it->second)
      if (is_isomorphic(mods[i], X, seed)) return i;
    return -1;
  }

  void insert(const Representation<K>& X, int idx) { buckets[key(X)].push_back(idx); }
};

}  // namespace detail

template <class K>
EnumerationResult<K> enumerate_indecomposables(const AlgebraPair<K>& P,
                                               EnumCaps caps = {},
                                               std::uint64_t seed = 2813) {
  const BoundQuiverAlgebra<K>& A = P.alg;
  EnumerationResult<K> res;
  res.caps = caps;
  res.seed = seed;
  detail::IsoTable<K> table;
  long long dim_sum = 0;
  bool tripped = false;

  // processing order: smallest modules first, so cap-exceeding runs still
  // report a meaningful prefix and completion order is seed-independent
  std::set<std::tuple<int, std::vector<int>, int>> pending;

  auto insert = [&](const Representation<K>& X) -> int {
    if (X.is_zero_module()) return -1;
    int found = table.find(res.modules, X, seed);
    if (found >= 0) return found;
    int idx = res.count();
    res.modules.push_back(X);
    table.insert(X, idx);
    res.projective.push_back(is_projective(X));
    res.injective.push_back(is_injective(X, P));
    res.tau_link.push_back(-1);
    dim_sum += X.total_dim();
    if (res.count() > caps.max_modules) {
      tripped = true;
      res.cap_reason = "module count exceeded " + std::to_string(caps.max_modules);
    } else if (dim_sum > caps.max_total_dim) {
      tripped = true;
      res.cap_reason = "total dimension exceeded " + std::to_string(caps.max_total_dim);
    }
    pending.insert({X.total_dim(), X.dims, idx});
    return idx;
  };

  for (int v = 0; v < A.num_vertices() && !tripped; ++v) insert(projective(A, v));
  for (int v = 0; v < A.num_vertices() && !tripped; ++v) insert(injective(P, A, v));

  while (!pending.empty() && !tripped) {
    auto it = pending.begin();
    int idx = std::get<2>(*it);
    pending.erase(it);
    Representation<K> X = res.modules[idx];
    if (!res.injective[idx]) {
      insert(tau_inverse(X, P));
      if (tripped) break;
    }
    if (!res.projective[idx]) {
      ShortExactSequence<K> seq = almost_split_sequence(X, P);
      int left = insert(seq.left);
      if (tripped) break;
      res.tau_link[idx] = left;
      typename EnumerationResult<K>::ARSeq rec{left, idx, {}};
      for (const Representation<K>& S : decompose(seq.mid, seed)) {
        rec.middle.push_back(insert(S));
        if (tripped) break;
      }
      res.sequences.push_back(std::move(rec));
    }
  }
  res.status = tripped ? EnumerationResult<K>::ExceededCap : EnumerationResult<K>::Complete;
  return res;
}

template <class K>
int find_iso_class(const EnumerationResult<K>& res, const Representation<K>& X) {
  for (int i = 0; i < res.count(); ++i)
    if (is_isomorphic(res.modules[i], X, res.seed)) return i;
  return -1;
}

// ---------------------------------------------------------------------------
// AR quiver of a representation-finite algebra.

template <class K>
struct ARQuiver {
  struct Node {
    int id;
    Representation<K> rep;
    bool projective, injective;
    HomDim pd, idim;
  };
  struct ArrowM {
    int src, dst, mult;
  };
  std::vector<Node> nodes;
  std::vector<ArrowM> arrows;
  std::vector<int> tau;  // node -> node, -1 on projectives

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph ar_quiver {\n";
    for (const Node& n : nodes) {
      os << "  n" << n.id << " [label=\"(";
      for (std::size_t i = 0; i < n.rep.dims.size(); ++i)
        os << (i ? "," : "") << n.rep.dims[i];
      os << ")\"];\n";
    }
    for (const ArrowM& a : arrows) {
      os << "  n" << a.src << " -> n" << a.dst;
      if (a.mult > 1) os << " [label=\"" << a.mult << "\"]";
      os << ";\n";
    }
    for (std::size_t i = 0; i < tau.size(); ++i)
      if (tau[i] >= 0) os << "  n" << i << " -> n" << tau[i] << " [style=dashed];\n";
    os << "}\n";
    return os.str();
  }
};

// Irreducible map multiplicities dim(rad Hom / rad^2 Hom), rad computed inside
// the finite category spanned by the enumerated modules.
template <class K>
ARQuiver<K> ar_quiver(const AlgebraPair<K>& P, const EnumerationResult<K>& res) {
  if (res.status != EnumerationResult<K>::Complete)
    throw IncompleteEnumeration("ar_quiver: enumeration not complete");
  ARQuiver<K> q;
  const int n = res.count();
  for (int i = 0; i < n; ++i)
    q.nodes.push_back({i, res.modules[i], res.projective[i], res.injective[i],
                       proj_dimension(res.modules[i]), inj_dimension(res.modules[i], P)});
  q.tau = res.tau_link;

  std::vector<std::vector<std::vector<Morphism<K>>>> rad(n);
  for (int i = 0; i < n; ++i) {
    rad[i].resize(n);
    for (int j = 0; j < n; ++j) {
      if (i == j)
        rad[i][j] = rad_end_basis(res.modules[i], hom_basis(res.modules[i], res.modules[i]));
      else
        rad[i][j] = hom_basis(res.modules[i], res.modules[j]);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int d = static_cast<int>(rad[i][j].size());
      if (d == 0) continue;
      std::vector<Matrix<K>> sq;
      for (int k = 0; k < n; ++k)
        for (const auto& f : rad[i][k])
          for (const auto& g : rad[k][j]) sq.push_back(vectorize(compose(g, f)));
      int r2 = sq.empty() ? 0 : Matrix<K>::hstack(sq).rank();
      int mult = d - r2;
      if (mult > 0) q.arrows.push_back({i, j, mult});
    }
  return q;
}

}  // namespace qmod
