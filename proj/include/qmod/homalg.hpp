#pragma once

#include <random>
#include <tuple>

#include "qmod/rep.hpp"

namespace qmod {

// ---------------------------------------------------------------------------
// Duality D = Hom_k(-, k): swaps a module across an AlgebraPair.

template <class K>
Representation<K> dual(const Representation<K>& X, const AlgebraPair<K>& P) {
  const BoundQuiverAlgebra<K>& B = P.other_side(X.alg);
  Representation<K> r;
  r.alg = &B;
  r.dims = X.dims;
  for (const Arrow& a : B.quiver().arrows()) r.mats.push_back(X.mats[a.id].transpose());
  return r;
}

template <class K>
Morphism<K> dual(const Morphism<K>& f, const AlgebraPair<K>& P) {
  Morphism<K> m{dual(f.dst, P), dual(f.src, P), {}};
  for (const auto& mat : f.f) m.f.push_back(mat.transpose());
  return m;
}

template <class K>
Representation<K> injective(const AlgebraPair<K>& P, const BoundQuiverAlgebra<K>& side,
                            int v) {
  return dual(projective(P.other_side(&side), v), P);
}

// ---------------------------------------------------------------------------
// Explicit finite direct sums of indecomposable projectives, with the basis
// layout (copy, path) recorded so generator calculus stays coordinate-exact.

template <class K>
struct StackedProjective {
  std::vector<int> gens;  // copy -> vertex
  Representation<K> rep;
  std::vector<std::vector<int>> offset;  // [vertex][copy] -> start index

  bool is_zero() const { return gens.empty(); }
  // coordinate of the generator (stationary path) of copy c at its vertex
  int gen_coord(int c) const {
    const auto& A = *rep.alg;
    int v = gens[c];
    return offset[v][c] + A.basis_pos(A.vertex_unit(v));
  }
};

template <class K>
StackedProjective<K> build_stacked(const BoundQuiverAlgebra<K>& A,
                                   const std::vector<int>& gens) {
  StackedProjective<K> out;
  out.gens = gens;
  out.rep.alg = &A;
  const int V = A.num_vertices();
  out.offset.assign(V, std::vector<int>(gens.size(), 0));
  out.rep.dims.assign(V, 0);
  for (int w = 0; w < V; ++w) {
    int off = 0;
    for (std::size_t c = 0; c < gens.size(); ++c) {
      out.offset[w][c] = off;
      off += static_cast<int>(A.basis_at(gens[c], w).size());
    }
    out.rep.dims[w] = off;
  }
  for (const Arrow& a : A.quiver().arrows()) {
    Matrix<K> m(out.rep.dims[a.target], out.rep.dims[a.source]);
    for (std::size_t c = 0; c < gens.size(); ++c) {
      const auto& src = A.basis_at(gens[c], a.source);
      for (int l = 0; l < static_cast<int>(src.size()); ++l) {
        PathWord p = A.basis_path(src[l]);
        p.arrows.push_back(a.id);
        p.target = a.target;
        for (auto& [gid, coeff] : A.normal_form(p))
          m(out.offset[a.target][c] + A.basis_pos(gid), out.offset[a.source][c] + l) = coeff;
      }
    }
    out.rep.mats.push_back(std::move(m));
  }
  return out;
}

// The A-linear morphism P -> X determined by images of the copy generators
// (each a column vector in X at the copy's vertex).
template <class K>
Morphism<K> morphism_from_gens(const StackedProjective<K>& P, const Representation<K>& X,
                               const std::vector<Matrix<K>>& images) {
  const auto& A = *P.rep.alg;
  Morphism<K> m = zero_morphism(P.rep, X);
  for (int w = 0; w < A.num_vertices(); ++w) {
    for (std::size_t c = 0; c < P.gens.size(); ++c) {
      const auto& paths = A.basis_at(P.gens[c], w);
      for (int l = 0; l < static_cast<int>(paths.size()); ++l) {
        Matrix<K> col = X.act(A.basis_path(paths[l])) * images[c];
        for (int i = 0; i < X.dims[w]; ++i) m.f[w](i, P.offset[w][c] + l) = col(i, 0);
      }
    }
  }
  return m;
}

template <class K>
struct Cover {
  StackedProjective<K> P;
  Morphism<K> epi;
};

// Minimal projective cover: one copy of P(v) per top multiplicity, generators
// lifted as the standard vectors complementary to the radical.
template <class K>
Cover<K> projective_cover(const Representation<K>& X) {
  const auto& A = *X.alg;
  SubQuot<K> rad = radical_of(X);
  std::vector<int> gens;
  std::vector<Matrix<K>> images;
  for (int v = 0; v < A.num_vertices(); ++v) {
    auto rr = rad.map.f[v].transpose().rref();
    std::vector<bool> is_pivot(X.dims[v], false);
    for (int p : rr.pivots) is_pivot[p] = true;
    for (int j = 0; j < X.dims[v]; ++j) {
      if (is_pivot[j]) continue;
      gens.push_back(v);
      Matrix<K> e(X.dims[v], 1);
      e(j, 0) = K(1);
      images.push_back(std::move(e));
    }
  }
  Cover<K> out;
  out.P = build_stacked(A, gens);
  out.epi = morphism_from_gens(out.P, X, images);
  return out;
}

template <class K>
bool is_projective(const Representation<K>& X) {
  if (X.is_zero_module()) return true;
  Cover<K> c = projective_cover(X);
  return c.P.rep.total_dim() == X.total_dim();
}

template <class K>
bool is_injective(const Representation<K>& X, const AlgebraPair<K>& P) {
  return is_projective(dual(X, P));
}

template <class K>
Representation<K> syzygy(const Representation<K>& X) {
  if (X.is_zero_module()) return X;
  return kernel_of(projective_cover(X).epi).rep;
}

template <class K>
Representation<K> syzygy(const Representation<K>& X, int j) {
  Representation<K> r = X;
  for (int i = 0; i < j; ++i) r = syzygy(r);
  return r;
}

template <class K>
struct Envelope {
  Representation<K> I;
  Morphism<K> mono;
  std::vector<int> socle_vertices;  // one I(v) summand per entry
};

template <class K>
Envelope<K> injective_envelope(const Representation<K>& X, const AlgebraPair<K>& P) {
  Cover<K> c = projective_cover(dual(X, P));
  Envelope<K> out;
  out.I = dual(c.P.rep, P);
  out.mono = dual(c.epi, P);
  out.socle_vertices = c.P.gens;
  return out;
}

template <class K>
Representation<K> cosyzygy(const Representation<K>& X, const AlgebraPair<K>& P) {
  if (X.is_zero_module()) return X;
  return dual(syzygy(dual(X, P)), P);
}

// Homological dimension: distinguishes the zero module, a finite value and
// "beyond cap" (reported as Infinite; finite global dimension algebras never
// hit the cap).
struct HomDim {
  enum Tag { ZeroModule, Finite, Infinite } tag;
  int value = -1;

  bool finite() const { return tag == Finite; }
  bool le(int n) const { return tag == ZeroModule || (tag == Finite && value <= n); }
  bool eq(int n) const { return tag == Finite && value == n; }
};

template <class K>
HomDim proj_dimension(const Representation<K>& X) {
  if (X.is_zero_module()) return {HomDim::ZeroModule, -1};
  int cap = X.alg->dim();
  Representation<K> cur = X;
  for (int j = 0; j <= cap; ++j) {
    if (cur.is_zero_module()) return {HomDim::Finite, j - 1};
    Cover<K> c = projective_cover(cur);
    if (c.P.rep.total_dim() == cur.total_dim()) return {HomDim::Finite, j};
    cur = kernel_of(c.epi).rep;
  }
  return {HomDim::Infinite, -1};
}

template <class K>
HomDim inj_dimension(const Representation<K>& X, const AlgebraPair<K>& P) {
  return proj_dimension(dual(X, P));
}

// ---------------------------------------------------------------------------
// Minimal projective resolutions with generator-coordinate differentials.

template <class K>
struct ProjResolution {
  // P[0] covers X; d[i] : P[i] -> P[i-1] for i >= 1, stored per generator of
  // P[i] as a combination of (copy of P[i-1], algebra basis path id).
  std::vector<StackedProjective<K>> P;
  std::vector<std::vector<std::vector<std::tuple<int, int, K>>>> dgen;
  std::vector<Morphism<K>> d;  // same maps as representation morphisms
  Morphism<K> aug;             // P[0] -> X
  Representation<K> omega1;    // kernel of aug
  Morphism<K> omega1_incl;
};

template <class K>
std::vector<std::vector<std::tuple<int, int, K>>> extract_gen_coords(
    const StackedProjective<K>& from, const StackedProjective<K>& to, const Morphism<K>& d) {
  const auto& A = *to.rep.alg;
  std::vector<std::vector<std::tuple<int, int, K>>> out(from.gens.size());
  for (std::size_t c = 0; c < from.gens.size(); ++c) {
    int v = from.gens[c];
    int col = from.gen_coord(static_cast<int>(c));
    for (std::size_t c0 = 0; c0 < to.gens.size(); ++c0) {
      const auto& paths = A.basis_at(to.gens[c0], v);
      for (int l = 0; l < static_cast<int>(paths.size()); ++l) {
        const K& coeff = d.f[v](to.offset[v][c0] + l, col);
        if (!is_zero(coeff)) out[c].push_back({static_cast<int>(c0), paths[l], coeff});
      }
    }
  }
  return out;
}

template <class K>
ProjResolution<K> build_resolution(const Representation<K>& X, int depth) {
  ProjResolution<K> res;
  Cover<K> c0 = projective_cover(X);
  res.aug = c0.epi;
  res.P.push_back(c0.P);
  res.dgen.emplace_back();  // unused slot for index alignment
  res.d.push_back(zero_morphism(c0.P.rep, c0.P.rep));
  SubQuot<K> om = kernel_of(c0.epi);
  res.omega1 = om.rep;
  res.omega1_incl = om.map;
  Representation<K> cur = om.rep;
  Morphism<K> incl = om.map;
  for (int i = 1; i <= depth; ++i) {
    if (cur.is_zero_module()) {
      res.P.push_back(build_stacked(*X.alg, {}));
      res.dgen.emplace_back();
      res.d.push_back(zero_morphism(res.P[i].rep, res.P[i - 1].rep));
      continue;
    }
    Cover<K> ci = projective_cover(cur);
    Morphism<K> di = compose(incl, ci.epi);
    res.dgen.push_back(extract_gen_coords(ci.P, res.P[i - 1], di));
    res.P.push_back(ci.P);
    res.d.push_back(di);
    SubQuot<K> omi = kernel_of(ci.epi);
    cur = omi.rep;
    incl = omi.map;
  }
  return res;
}

// dim Ext^i(X, Y) via the complex Hom(P_*, Y) in the evaluation coordinates
// Hom(P, Y) = direct sum of Y at the generator vertices.
template <class K>
class ExtComputer {
 public:
  explicit ExtComputer(const Representation<K>& X, int max_i)
      : res_(build_resolution(X, max_i + 1)) {}

  int ext_dim(const Representation<K>& Y, int i) const {
    if (i < 0) throw std::invalid_argument("ext_dim: i >= 0");
    if (i + 1 >= static_cast<int>(res_.P.size()))
      throw std::logic_error("ext_dim: resolution too short");
    int hi = hom_space_dim(Y, i);
    if (hi == 0) return 0;
    Matrix<K> up = hom_matrix(Y, i + 1);    // H_i -> H_{i+1}
    int kd = up.cols() == 0 ? hi : up.kernel_basis().cols();
    int rk = i == 0 ? 0 : hom_matrix(Y, i).rank();
    return kd - rk;
  }

  const ProjResolution<K>& resolution() const { return res_; }

 private:
  int hom_space_dim(const Representation<K>& Y, int i) const {
    int n = 0;
    for (int v : res_.P[i].gens) n += Y.dims[v];
    return n;
  }

  // matrix of precomposition with d_i : Hom(P_{i-1}, Y) -> Hom(P_i, Y)
  Matrix<K> hom_matrix(const Representation<K>& Y, int i) const {
    const auto& Pi = res_.P[i];
    const auto& Pprev = res_.P[i - 1];
    std::vector<int> roff(Pi.gens.size() + 1, 0), coff(Pprev.gens.size() + 1, 0);
    for (std::size_t c = 0; c < Pi.gens.size(); ++c)
      roff[c + 1] = roff[c] + Y.dims[Pi.gens[c]];
    for (std::size_t c = 0; c < Pprev.gens.size(); ++c)
      coff[c + 1] = coff[c] + Y.dims[Pprev.gens[c]];
    Matrix<K> m(roff.back(), coff.back());
    const auto& A = *Y.alg;
    for (std::size_t c = 0; c < Pi.gens.size(); ++c) {
      for (auto& [c0, pathid, coeff] : res_.dgen[i][c]) {
        Matrix<K> blk = Y.act(A.basis_path(pathid)).scaled(coeff);
        for (int i2 = 0; i2 < blk.rows(); ++i2)
          for (int j2 = 0; j2 < blk.cols(); ++j2)
            m(roff[c] + i2, coff[c0] + j2) += blk(i2, j2);
      }
    }
    return m;
  }

  ProjResolution<K> res_;
};

template <class K>
int ext_dim(const Representation<K>& X, const Representation<K>& Y, int i) {
  if (X.is_zero_module() || Y.is_zero_module()) return 0;
  return ExtComputer<K>(X, i).ext_dim(Y, i);
}

// ---------------------------------------------------------------------------
// Endomorphism rings, indecomposability, Fitting decomposition, isomorphism.

template <class K>
K morphism_trace(const Morphism<K>& f) {
  K t(0);
  for (const auto& m : f.f)
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// dim End(X)/rad End(X) via the trace form of the regular representation.
// Valid over Q and over F_p with p > dim End(X) (enforced).
template <class K>
int end_over_rad_dim(const Representation<K>& X) {
  std::vector<Morphism<K>> E = hom_basis(X, X);
  const int e = static_cast<int>(E.size());
  if (e == 0) throw std::logic_error("end_over_rad_dim: zero module");
  if constexpr (std::is_same_v<K, Fp>) {
    if (static_cast<std::uint64_t>(e) >= Fp::modulus())
      throw std::runtime_error("end_over_rad_dim: modulus too small for dim End");
  }
  std::vector<Matrix<K>> cols;
  for (const auto& b : E) cols.push_back(vectorize(b));
  Matrix<K> B = Matrix<K>::hstack(cols);
  std::vector<Matrix<K>> prods;
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prods.push_back(vectorize(compose(E[i], E[j])));
  auto coeffs = solve_right(B, Matrix<K>::hstack(prods));
  if (!coeffs) throw std::logic_error("end_over_rad_dim: product outside span");
  // L[i](k, j) = coefficient of b_k in b_i * b_j
  std::vector<Matrix<K>> L(e, Matrix<K>(e, e));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      for (int k = 0; k < e; ++k) L[i](k, j) = (*coeffs)(k, i * e + j);
  Matrix<K> gram(e, e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      Matrix<K> p = L[i] * L[j];
      K t(0);
      for (int k = 0; k < e; ++k) t += p(k, k);
      gram(i, j) = t;
    }
  return e - gram.kernel_basis().cols();
}

template <class K>
bool is_indecomposable(const Representation<K>& X) {
  if (X.is_zero_module()) return false;
  return end_over_rad_dim(X) == 1;
}

// Basis of rad End(X) for indecomposable X: the trace-zero endomorphisms.
template <class K>
std::vector<Morphism<K>> rad_end_basis(const Representation<K>& X,
                                       const std::vector<Morphism<K>>& E) {
  const int e = static_cast<int>(E.size());
  Matrix<K> tr(1, e);
  for (int i = 0; i < e; ++i) tr(0, i) = morphism_trace(E[i]);
  Matrix<K> ker = tr.kernel_basis();
  std::vector<Morphism<K>> out;
  for (int b = 0; b < ker.cols(); ++b) {
    Morphism<K> m = zero_morphism(X, X);
    for (int i = 0; i < e; ++i)
      if (!is_zero(ker(i, b))) m = add(m, scale(E[i], ker(i, b)));
    out.push_back(std::move(m));
  }
  return out;
}

template <class K>
K random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(-9973, 9973);
  return scalar_of<K>(dist(rng));
}

// Krull-Schmidt decomposition by Fitting splits along random endomorphisms.
template <class K>
void decompose_into(const Representation<K>& X, std::mt19937_64& rng,
                    std::vector<Representation<K>>& out) {
  if (X.is_zero_module()) return;
  std::vector<Morphism<K>> E = hom_basis(X, X);
  const int e = static_cast<int>(E.size());
  if (e == 1 || end_over_rad_dim(X) == 1) {
    out.push_back(X);
    return;
  }
  const int N = X.total_dim();
  auto try_split = [&](const Morphism<K>& f) -> bool {
    Morphism<K> g{X, X, {}};
    for (const auto& m : f.f) g.f.push_back(m.pow(N));
    SubQuot<K> ker = kernel_of(g);
    if (ker.rep.total_dim() == 0 || ker.rep.total_dim() == N) return false;
    SubQuot<K> img = image_of(g);
    if (ker.rep.total_dim() + img.rep.total_dim() != N) return false;
    decompose_into(ker.rep, rng, out);
    decompose_into(img.rep, rng, out);
    return true;
  };
  for (int attempt = 0; attempt < 32; ++attempt) {
    Morphism<K> f = zero_morphism(X, X);
    for (int i = 0; i < e; ++i) f = add(f, scale(E[i], random_scalar<K>(rng)));
    if (try_split(f)) return;
  }
  // deterministic sweep over basis elements and pair sums
  for (int i = 0; i < e; ++i)
    if (try_split(E[i])) return;
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j)
      if (try_split(add(E[i], E[j]))) return;
  throw std::logic_error("decompose: no Fitting split found for decomposable module");
}

template <class K>
std::vector<Representation<K>> decompose(const Representation<K>& X, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Representation<K>> out;
  decompose_into(X, rng, out);
  return out;
}

// Isomorphism test: equal dimension vectors plus a vertexwise invertible
// element of Hom(X, Y). Random combinations (seeded) find an iso generically
// when one exists; a small deterministic sweep backs them up.
template <class K>
bool is_isomorphic(const Representation<K>& X, const Representation<K>& Y,
                   std::uint64_t seed) {
  if (X.dims != Y.dims) return false;
  if (X.is_zero_module()) return true;
  std::vector<Morphism<K>> H = hom_basis(X, Y);
  const int h = static_cast<int>(H.size());
  if (h == 0) return false;
  auto invertible = [](const Morphism<K>& f) {
    for (const auto& m : f.f)
      if (!is_invertible(m)) return false;
    return true;
  };
  for (int i = 0; i < h; ++i)
    if (invertible(H[i])) return true;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Morphism<K> f = zero_morphism(X, Y);
    for (int i = 0; i < h; ++i) f = add(f, scale(H[i], random_scalar<K>(rng)));
    if (invertible(f)) return true;
  }
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      if (invertible(add(H[i], H[j]))) return true;
  return false;
}

}  // namespace qmod
