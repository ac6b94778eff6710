#pragma once

#include <numeric>
#include <vector>

#include "qmod/algebra.hpp"

namespace qmod {

// Module over a bound quiver algebra as a quiver representation: one space per
// vertex, one matrix per arrow (columns = source, rows = target). Values are
// immutable after construction; the algebra pointer must outlive the module.
template <class K>
struct Representation {
  const BoundQuiverAlgebra<K>* alg = nullptr;
  std::vector<int> dims;
  std::vector<Matrix<K>> mats;  // per arrow id

  int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
  bool is_zero_module() const { return total_dim() == 0; }

  Matrix<K> act(const PathWord& p) const {
    Matrix<K> m = Matrix<K>::identity(dims[p.source]);
    for (int aid : p.arrows) m = mats[aid] * m;
    return m;
  }

  bool satisfies_relations() const {
    for (const LinearRelation& rel : alg->relations()) {
      const PathWord& p0 = rel.terms[0].path;
      Matrix<K> sum(dims[p0.target], dims[p0.source]);
      for (const RelationTerm& t : rel.terms)
        sum = sum + act(t.path).scaled(scalar_of<K>(t.coeff));
      if (!sum.is_zero()) return false;
    }
    return true;
  }

  bool same_dims(const Representation& o) const { return dims == o.dims; }
};

template <class K>
Representation<K> make_zero_module(const BoundQuiverAlgebra<K>& A) {
  Representation<K> r;
  r.alg = &A;
  r.dims.assign(A.num_vertices(), 0);
  for (const Arrow& a : A.quiver().arrows()) {
    (void)a;
    r.mats.emplace_back(0, 0);
  }
  return r;
}

template <class K>
Representation<K> simple(const BoundQuiverAlgebra<K>& A, int v) {
  Representation<K> r = make_zero_module(A);
  r.dims[v] = 1;
  for (const Arrow& a : A.quiver().arrows())
    r.mats[a.id] = Matrix<K>(r.dims[a.target], r.dims[a.source]);
  return r;
}

// P(v) = A e_v: basis at w is the set of algebra basis paths v -> w, an arrow
// acts by appending itself and taking normal forms.
template <class K>
Representation<K> projective(const BoundQuiverAlgebra<K>& A, int v) {
  Representation<K> r;
  r.alg = &A;
  r.dims.resize(A.num_vertices());
  for (int w = 0; w < A.num_vertices(); ++w)
    r.dims[w] = static_cast<int>(A.basis_at(v, w).size());
  for (const Arrow& a : A.quiver().arrows()) {
    Matrix<K> m(r.dims[a.target], r.dims[a.source]);
    const auto& src = A.basis_at(v, a.source);
    for (int col = 0; col < static_cast<int>(src.size()); ++col) {
      PathWord p = A.basis_path(src[col]);
      p.arrows.push_back(a.id);
      p.target = a.target;
      for (auto& [gid, c] : A.normal_form(p)) m(A.basis_pos(gid), col) = c;
    }
    r.mats.push_back(std::move(m));
  }
  return r;
}

// Morphism of representations. Source and target are held by value; modules
// are small at desk scale and value semantics keeps lifetimes trivial.
template <class K>
struct Morphism {
  Representation<K> src, dst;
  std::vector<Matrix<K>> f;  // per vertex

  bool intertwines() const {
    for (const Arrow& a : src.alg->quiver().arrows()) {
      if (!(f[a.target] * src.mats[a.id] == dst.mats[a.id] * f[a.source])) return false;
    }
    return true;
  }
  bool is_mono() const {
    for (std::size_t v = 0; v < f.size(); ++v)
      if (f[v].rank() != src.dims[v]) return false;
    return true;
  }
  bool is_epi() const {
    for (std::size_t v = 0; v < f.size(); ++v)
      if (f[v].rank() != dst.dims[v]) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& m : f)
      if (!m.is_zero()) return false;
    return true;
  }
  bool is_iso() const {
    for (std::size_t v = 0; v < f.size(); ++v)
      if (!is_invertible(f[v])) return false;
    return true;
  }
};

template <class K>
Morphism<K> zero_morphism(const Representation<K>& x, const Representation<K>& y) {
  Morphism<K> m{x, y, {}};
  for (int v = 0; v < static_cast<int>(x.dims.size()); ++v)
    m.f.emplace_back(y.dims[v], x.dims[v]);
  return m;
}

template <class K>
Morphism<K> identity_morphism(const Representation<K>& x) {
  Morphism<K> m{x, x, {}};
  for (int d : x.dims) m.f.push_back(Matrix<K>::identity(d));
  return m;
}

template <class K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {
  // g after f
  Morphism<K> m{f.src, g.dst, {}};
  for (std::size_t v = 0; v < f.f.size(); ++v) m.f.push_back(g.f[v] * f.f[v]);
  return m;
}

template <class K>
Morphism<K> add(const Morphism<K>& a, const Morphism<K>& b) {
  Morphism<K> m{a.src, a.dst, {}};
  for (std::size_t v = 0; v < a.f.size(); ++v) m.f.push_back(a.f[v] + b.f[v]);
  return m;
}

template <class K>
Morphism<K> scale(const Morphism<K>& a, const K& c) {
  Morphism<K> m{a.src, a.dst, {}};
  for (const auto& mat : a.f) m.f.push_back(mat.scaled(c));
  return m;
}

// vec of all vertex matrices stacked (column-major per vertex, vertices in
// order); the coordinate system used whenever morphisms are treated as vectors
template <class K>
Matrix<K> vectorize(const Morphism<K>& m) {
  int n = 0;
  for (const auto& mat : m.f) n += mat.rows() * mat.cols();
  Matrix<K> v(n, 1);
  int k = 0;
  for (const auto& mat : m.f)
    for (int j = 0; j < mat.cols(); ++j)
      for (int i = 0; i < mat.rows(); ++i) v(k++, 0) = mat(i, j);
  return v;
}

// Basis of Hom(X, Y): kernel of the stacked intertwining system.
template <class K>
std::vector<Morphism<K>> hom_basis(const Representation<K>& X, const Representation<K>& Y) {
  const int V = static_cast<int>(X.dims.size());
  std::vector<int> offset(V + 1, 0);
  for (int v = 0; v < V; ++v) offset[v + 1] = offset[v] + Y.dims[v] * X.dims[v];
  const int nvar = offset[V];
  auto var = [&](int v, int i, int j) { return offset[v] + j * Y.dims[v] + i; };

  std::vector<std::map<int, K>> rows;
  for (const Arrow& a : X.alg->quiver().arrows()) {
    const Matrix<K>& MX = X.mats[a.id];
    const Matrix<K>& MY = Y.mats[a.id];
    // f_t * MX - MY * f_s = 0, entry (i, j): i < Y.dims[t], j < X.dims[s]
    for (int i = 0; i < Y.dims[a.target]; ++i)
      for (int j = 0; j < X.dims[a.source]; ++j) {
        std::map<int, K> row;
        for (int k = 0; k < X.dims[a.target]; ++k)
          if (!is_zero(MX(k, j))) row[var(a.target, i, k)] += MX(k, j);
        for (int k = 0; k < Y.dims[a.source]; ++k)
          if (!is_zero(MY(i, k))) row[var(a.source, k, j)] -= MY(i, k);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  Matrix<K> sys(static_cast<int>(rows.size()), nvar);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (auto& [c, val] : rows[r]) sys(r, c) = val;
  Matrix<K> ker = nvar == 0 ? Matrix<K>(0, 0) : sys.kernel_basis();

  std::vector<Morphism<K>> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    Morphism<K> m = zero_morphism(X, Y);
    for (int v = 0; v < V; ++v)
      for (int j = 0; j < X.dims[v]; ++j)
        for (int i = 0; i < Y.dims[v]; ++i) m.f[v](i, j) = ker(var(v, i, j), b);
    basis.push_back(std::move(m));
  }
  return basis;
}

template <class K>
int hom_dim(const Representation<K>& X, const Representation<K>& Y) {
  return static_cast<int>(hom_basis(X, Y).size());
}

template <class K>
struct SubQuot {
  Representation<K> rep;
  Morphism<K> map;  // inclusion (sub) or projection (quotient)
};

// Vertexwise kernel with induced arrow maps; map is the canonical inclusion.
template <class K>
SubQuot<K> kernel_of(const Morphism<K>& f) {
  const auto& X = f.src;
  SubQuot<K> out;
  out.rep.alg = X.alg;
  std::vector<Matrix<K>> incl;
  for (std::size_t v = 0; v < f.f.size(); ++v) {
    Matrix<K> k = f.f[v].kernel_basis();
    out.rep.dims.push_back(k.cols());
    incl.push_back(std::move(k));
  }
  for (const Arrow& a : X.alg->quiver().arrows()) {
    auto sol = solve_right(incl[a.target], X.mats[a.id] * incl[a.source]);
    if (!sol) throw std::logic_error("kernel_of: kernel not arrow-stable");
    out.rep.mats.push_back(std::move(*sol));
  }
  out.map = Morphism<K>{out.rep, X, std::move(incl)};
  return out;
}

// Vertexwise cokernel; map is the canonical projection from f's target.
template <class K>
SubQuot<K> cokernel_of(const Morphism<K>& f) {
  const auto& Y = f.dst;
  SubQuot<K> out;
  out.rep.alg = Y.alg;
  std::vector<Matrix<K>> proj;
  for (std::size_t v = 0; v < f.f.size(); ++v) {
    // rows spanning the annihilator of im f_v
    Matrix<K> p = f.f[v].transpose().kernel_basis().transpose();
    out.rep.dims.push_back(p.rows());
    proj.push_back(std::move(p));
  }
  for (const Arrow& a : Y.alg->quiver().arrows()) {
    auto sol = solve_right(proj[a.source].transpose(),
                           (proj[a.target] * Y.mats[a.id]).transpose());
    if (!sol) throw std::logic_error("cokernel_of: projection not surjective");
    out.rep.mats.push_back(sol->transpose());
  }
  out.map = Morphism<K>{Y, out.rep, std::move(proj)};
  return out;
}

// Image as a subrepresentation of f's target.
template <class K>
SubQuot<K> image_of(const Morphism<K>& f) {
  const auto& Y = f.dst;
  SubQuot<K> out;
  out.rep.alg = Y.alg;
  std::vector<Matrix<K>> incl;
  for (std::size_t v = 0; v < f.f.size(); ++v) {
    Matrix<K> b = f.f[v].column_space_basis();
    out.rep.dims.push_back(b.cols());
    incl.push_back(std::move(b));
  }
  for (const Arrow& a : Y.alg->quiver().arrows()) {
    auto sol = solve_right(incl[a.target], Y.mats[a.id] * incl[a.source]);
    if (!sol) throw std::logic_error("image_of: image not arrow-stable");
    out.rep.mats.push_back(std::move(*sol));
  }
  out.map = Morphism<K>{out.rep, Y, std::move(incl)};
  return out;
}

template <class K>
struct DirectSum {
  Representation<K> rep;
  std::vector<int> offsets;  // per summand, per vertex? flattened below
  std::vector<std::vector<int>> offset;  // [summand][vertex]
};

template <class K>
DirectSum<K> direct_sum(const std::vector<Representation<K>>& parts,
                        const BoundQuiverAlgebra<K>& A) {
  DirectSum<K> out;
  out.rep = make_zero_module(A);
  const int V = A.num_vertices();
  out.offset.assign(parts.size(), std::vector<int>(V, 0));
  for (int v = 0; v < V; ++v) {
    int off = 0;
    for (std::size_t s = 0; s < parts.size(); ++s) {
      out.offset[s][v] = off;
      off += parts[s].dims[v];
    }
    out.rep.dims[v] = off;
  }
  for (const Arrow& a : A.quiver().arrows()) {
    Matrix<K> m(out.rep.dims[a.target], out.rep.dims[a.source]);
    for (std::size_t s = 0; s < parts.size(); ++s) {
      const Matrix<K>& b = parts[s].mats[a.id];
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
          m(out.offset[s][a.target] + i, out.offset[s][a.source] + j) = b(i, j);
    }
    out.rep.mats[a.id] = std::move(m);
  }
  return out;
}

template <class K>
Morphism<K> summand_inclusion(const DirectSum<K>& ds, const std::vector<Representation<K>>& parts,
                              std::size_t s) {
  Morphism<K> m = zero_morphism(parts[s], ds.rep);
  for (std::size_t v = 0; v < m.f.size(); ++v)
    for (int i = 0; i < parts[s].dims[v]; ++i) m.f[v](ds.offset[s][v] + i, i) = K(1);
  return m;
}

// rad X at v = sum of images of incoming arrows.
template <class K>
SubQuot<K> radical_of(const Representation<K>& X) {
  const auto& A = *X.alg;
  SubQuot<K> out;
  out.rep.alg = &A;
  std::vector<Matrix<K>> incl;
  for (int v = 0; v < A.num_vertices(); ++v) {
    std::vector<Matrix<K>> imgs;
    for (int aid : A.quiver().in_arrows(v)) imgs.push_back(X.mats[aid]);
    Matrix<K> stacked = imgs.empty() ? Matrix<K>(X.dims[v], 0) : Matrix<K>::hstack(imgs);
    Matrix<K> b = stacked.column_space_basis();
    out.rep.dims.push_back(b.cols());
    incl.push_back(std::move(b));
  }
  for (const Arrow& a : A.quiver().arrows()) {
    auto sol = solve_right(incl[a.target], X.mats[a.id] * incl[a.source]);
    if (!sol) throw std::logic_error("radical_of: not arrow-stable");
    out.rep.mats.push_back(std::move(*sol));
  }
  out.map = Morphism<K>{out.rep, X, std::move(incl)};
  return out;
}

// soc X at v = joint kernel of outgoing arrows; a semisimple subrepresentation.
template <class K>
SubQuot<K> socle_of(const Representation<K>& X) {
  const auto& A = *X.alg;
  SubQuot<K> out;
  out.rep.alg = &A;
  std::vector<Matrix<K>> incl;
  for (int v = 0; v < A.num_vertices(); ++v) {
    std::vector<Matrix<K>> outs;
    for (int aid : A.quiver().out_arrows(v)) outs.push_back(X.mats[aid]);
    Matrix<K> stacked = outs.empty() ? Matrix<K>(0, X.dims[v]) : Matrix<K>::vstack(outs);
    Matrix<K> k = stacked.kernel_basis();
    out.rep.dims.push_back(k.cols());
    incl.push_back(std::move(k));
  }
  for (const Arrow& a : A.quiver().arrows())
    out.rep.mats.emplace_back(out.rep.dims[a.target], out.rep.dims[a.source]);
  out.map = Morphism<K>{out.rep, X, std::move(incl)};
  return out;
}

// top X = X / rad X, with the canonical projection.
template <class K>
SubQuot<K> top_of(const Representation<K>& X) {
  return cokernel_of(radical_of(X).map);
}

}  // namespace qmod
