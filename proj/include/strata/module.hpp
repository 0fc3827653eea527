#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/algebra.hpp"
#include "strata/parser.hpp"

namespace strata {

// Right module as a representation: one space per vertex, one matrix per
// arrow. Row convention: the action of arrow a: u -> v is a
// dims[u] x dims[v] matrix applied on the right of row vectors.
template <class K>
struct Module {
  typename Algebra<K>::Ptr A;
  std::vector<int> dims;
  std::vector<Mat<K>> arrow_act;

  int n() const { return A->n(); }
  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero_module() const { return total_dim() == 0; }

  static Module zero(typename Algebra<K>::Ptr a) {
    Module m;
    m.A = a;
    m.dims.assign(size_t(a->n()), 0);
    for (const auto& ar : a->quiver().arrows)
      m.arrow_act.push_back(Mat<K>(0, 0)), (void)ar;
    return m;
  }

  Mat<K> path_action(const Path& p) const {
    Mat<K> m = Mat<K>::identity(dims[size_t(p.source)]);
    int at = p.source;
    for (int a : p.arrows) {
      m = m * arrow_act[size_t(a)];
      at = A->quiver().arrows[size_t(a)].target;
    }
    (void)at;
    return m;
  }

  // action of an algebra element restricted to component u -> v
  Mat<K> elem_action(const AlgElem<K>& x, int u, int v) const {
    Mat<K> m(dims[size_t(u)], dims[size_t(v)]);
    for (int b = 0; b < A->dim(); ++b) {
      if (is_zero(x[size_t(b)])) continue;
      if (A->basis_source(b) != u || A->basis_target(b) != v) continue;
      m = m + path_action(A->basis()[size_t(b)]).scaled(x[size_t(b)]);
    }
    return m;
  }

  bool relations_hold() const {
    for (const auto& rel : A->relations()) {
      const Path& p0 = rel.terms[0].first;
      Mat<K> acc(dims[size_t(p0.source)], dims[size_t(p0.target)]);
      for (const auto& [p, c] : rel.terms) acc = acc + path_action(p).scaled(c);
      if (!acc.is_zero()) return false;
    }
    return true;
  }

  bool same_shape(const Module& o) const { return dims == o.dims; }
};

template <class K>
Module<K> direct_sum(const Module<K>& a, const Module<K>& b) {
  Module<K> s;
  s.A = a.A;
  s.dims.resize(a.dims.size());
  for (size_t v = 0; v < a.dims.size(); ++v) s.dims[v] = a.dims[v] + b.dims[v];
  for (size_t ar = 0; ar < a.arrow_act.size(); ++ar)
    s.arrow_act.push_back(a.arrow_act[ar].dsum(b.arrow_act[ar]));
  return s;
}

// Intertwiner between modules over the same algebra.
template <class K>
struct ModuleMap {
  Module<K> source, target;
  std::vector<Mat<K>> blocks;  // per vertex: dims_src[v] x dims_tgt[v]

  static ModuleMap zero(const Module<K>& s, const Module<K>& t) {
    ModuleMap f;
    f.source = s;
    f.target = t;
    for (size_t v = 0; v < s.dims.size(); ++v)
      f.blocks.push_back(Mat<K>(s.dims[v], t.dims[v]));
    return f;
  }
  static ModuleMap identity(const Module<K>& m) {
    ModuleMap f;
    f.source = m;
    f.target = m;
    for (int d : m.dims) f.blocks.push_back(Mat<K>::identity(d));
    return f;
  }

  bool is_intertwiner() const {
    const auto& arrows = source.A->quiver().arrows;
    for (size_t a = 0; a < arrows.size(); ++a) {
      int u = arrows[a].source, v = arrows[a].target;
      Mat<K> lhs = source.arrow_act[a] * blocks[size_t(v)];
      Mat<K> rhs = blocks[size_t(u)] * target.arrow_act[a];
      if (!(lhs == rhs)) return false;
    }
    return true;
  }

  bool is_zero_map() const {
    for (const auto& b : blocks)
      if (!b.is_zero()) return false;
    return true;
  }
  bool is_injective() const {
    for (size_t v = 0; v < blocks.size(); ++v)
      if (rank(blocks[v]) != source.dims[v]) return false;
    return true;
  }
  bool is_surjective() const {
    for (size_t v = 0; v < blocks.size(); ++v)
      if (rank(blocks[v]) != target.dims[v]) return false;
    return true;
  }
  bool is_iso() const { return is_injective() && is_surjective(); }

  ModuleMap then(const ModuleMap& g) const {
    ModuleMap r;
    r.source = source;
    r.target = g.target;
    for (size_t v = 0; v < blocks.size(); ++v)
      r.blocks.push_back(blocks[v] * g.blocks[v]);
    return r;
  }
  ModuleMap operator+(const ModuleMap& o) const {
    ModuleMap r = *this;
    for (size_t v = 0; v < blocks.size(); ++v) r.blocks[v] = blocks[v] + o.blocks[v];
    return r;
  }
  ModuleMap operator-(const ModuleMap& o) const {
    ModuleMap r = *this;
    for (size_t v = 0; v < blocks.size(); ++v) r.blocks[v] = blocks[v] - o.blocks[v];
    return r;
  }
  ModuleMap scaled(const K& c) const {
    ModuleMap r = *this;
    for (auto& b : r.blocks) b = b.scaled(c);
    return r;
  }
  ModuleMap inverse_iso() const {
    ModuleMap r;
    r.source = target;
    r.target = source;
    for (const auto& b : blocks) r.blocks.push_back(strata::inverse(b));
    return r;
  }
};

// Vertex-indexed row spaces describing a subspace of a module (not checked
// for closure here; see sub_module).
template <class K>
using SubRows = std::vector<Mat<K>>;

template <class K>
SubRows<K> full_rows(const Module<K>& m) {
  SubRows<K> r;
  for (int d : m.dims) r.push_back(Mat<K>::identity(d));
  return r;
}

template <class K>
SubRows<K> zero_rows(const Module<K>& m) {
  SubRows<K> r;
  for (int d : m.dims) r.push_back(Mat<K>(0, d));
  return r;
}

template <class K>
bool rows_closed_under_action(const Module<K>& m, const SubRows<K>& rows) {
  const auto& arrows = m.A->quiver().arrows;
  for (size_t a = 0; a < arrows.size(); ++a) {
    int u = arrows[a].source, v = arrows[a].target;
    Mat<K> moved = rows[size_t(u)] * m.arrow_act[a];
    for (int i = 0; i < moved.rows(); ++i)
      if (!coords_in_rowspace(rows[size_t(v)], moved.row(i))) return false;
  }
  return true;
}

// Close a family of vectors under the arrow action, producing canonical
// row bases.
template <class K>
SubRows<K> generated_submodule_rows(const Module<K>& m, const SubRows<K>& gens) {
  SubRows<K> rows;
  for (size_t v = 0; v < gens.size(); ++v) rows.push_back(image_basis(gens[v]));
  const auto& arrows = m.A->quiver().arrows;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < arrows.size(); ++a) {
      int u = arrows[a].source, v = arrows[a].target;
      if (rows[size_t(u)].rows() == 0) continue;
      Mat<K> moved = rows[size_t(u)] * m.arrow_act[a];
      Mat<K> joined = rowspace_sum(rows[size_t(v)], moved);
      if (joined.rows() != rows[size_t(v)].rows()) {
        rows[size_t(v)] = joined;
        changed = true;
      }
    }
  }
  return rows;
}

// Submodule spanned by closed rows, with its inclusion.
template <class K>
std::pair<Module<K>, ModuleMap<K>> sub_module(const Module<K>& m,
                                              const SubRows<K>& rows_in) {
  SubRows<K> rows;
  for (const auto& r : rows_in) rows.push_back(image_basis(r));
  Module<K> s;
  s.A = m.A;
  for (const auto& r : rows) s.dims.push_back(r.rows());
  const auto& arrows = m.A->quiver().arrows;
  for (size_t a = 0; a < arrows.size(); ++a) {
    int u = arrows[a].source, v = arrows[a].target;
    Mat<K> moved = rows[size_t(u)] * m.arrow_act[a];
    auto sol = solve_right(rows[size_t(v)], moved);
    if (!sol.solvable)
      throw std::logic_error("sub_module rows not closed under action");
    s.arrow_act.push_back(sol.solution);
  }
  ModuleMap<K> incl;
  incl.source = s;
  incl.target = m;
  incl.blocks = rows;
  return {s, incl};
}

// Quotient by closed rows, with its projection. The quotient basis is the
// canonical complement given by the non-pivot coordinates of the RREF.
template <class K>
std::pair<Module<K>, ModuleMap<K>> quotient_module(const Module<K>& m,
                                                   const SubRows<K>& rows_in) {
  SubRows<K> rows;
  std::vector<std::vector<int>> pivots;
  for (const auto& r : rows_in) {
    Mat<K> rr = r;
    pivots.push_back(rref(rr));
    rows.push_back(rr.block(0, 0, int(pivots.back().size()), rr.cols()));
  }
  Module<K> q;
  q.A = m.A;
  std::vector<std::vector<int>> free_cols(rows.size());
  std::vector<Mat<K>> proj(rows.size()), sect(rows.size());
  for (size_t v = 0; v < rows.size(); ++v) {
    int d = m.dims[v];
    std::vector<bool> is_piv(size_t(d), false);
    for (int c : pivots[v]) is_piv[size_t(c)] = true;
    for (int c = 0; c < d; ++c)
      if (!is_piv[size_t(c)]) free_cols[v].push_back(c);
    int qd = int(free_cols[v].size());
    q.dims.push_back(qd);
    // projection: reduce e_i modulo the RREF rows, read off free coords
    Mat<K> p(d, qd);
    for (int i = 0; i < d; ++i) {
      std::vector<K> vec(size_t(d), K(0));
      vec[size_t(i)] = K(1);
      for (size_t k = 0; k < pivots[v].size(); ++k) {
        K c = vec[size_t(pivots[v][k])];
        if (is_zero(c)) continue;
        for (int j = 0; j < d; ++j)
          vec[size_t(j)] = K(vec[size_t(j)] - c * rows[v](int(k), j));
      }
      for (int j = 0; j < qd; ++j) p(i, j) = vec[size_t(free_cols[v][size_t(j)])];
    }
    proj[v] = std::move(p);
    Mat<K> s(qd, d);
    for (int j = 0; j < qd; ++j) s(j, free_cols[v][size_t(j)]) = K(1);
    sect[v] = std::move(s);
  }
  const auto& arrows = m.A->quiver().arrows;
  for (size_t a = 0; a < arrows.size(); ++a) {
    int u = arrows[a].source, v = arrows[a].target;
    q.arrow_act.push_back(sect[size_t(u)] * m.arrow_act[a] * proj[size_t(v)]);
  }
  ModuleMap<K> pr;
  pr.source = m;
  pr.target = q;
  pr.blocks = proj;
  return {q, pr};
}

template <class K>
SubRows<K> kernel_rows(const ModuleMap<K>& f) {
  SubRows<K> rows;
  for (const auto& b : f.blocks) rows.push_back(kernel_basis(b));
  return rows;
}

template <class K>
SubRows<K> image_rows(const ModuleMap<K>& f) {
  SubRows<K> rows;
  for (const auto& b : f.blocks) rows.push_back(image_basis(b));
  return rows;
}

template <class K>
std::pair<Module<K>, ModuleMap<K>> kernel(const ModuleMap<K>& f) {
  return sub_module(f.source, kernel_rows(f));
}

template <class K>
std::pair<Module<K>, ModuleMap<K>> image(const ModuleMap<K>& f) {
  return sub_module(f.target, image_rows(f));
}

template <class K>
std::pair<Module<K>, ModuleMap<K>> cokernel(const ModuleMap<K>& f) {
  return quotient_module(f.target, image_rows(f));
}

// rad M = sum of images of all arrow actions
template <class K>
SubRows<K> radical_rows(const Module<K>& m) {
  SubRows<K> rows = zero_rows(m);
  const auto& arrows = m.A->quiver().arrows;
  for (size_t a = 0; a < arrows.size(); ++a) {
    int v = arrows[a].target;
    rows[size_t(v)] = rowspace_sum(rows[size_t(v)], image_basis(m.arrow_act[a]));
  }
  return rows;
}

template <class K>
std::pair<Module<K>, ModuleMap<K>> radical(const Module<K>& m) {
  return sub_module(m, radical_rows(m));
}

template <class K>
std::pair<Module<K>, ModuleMap<K>> top(const Module<K>& m) {
  return quotient_module(m, radical_rows(m));
}

// soc M = joint kernel of all arrow actions out of each vertex
template <class K>
std::pair<Module<K>, ModuleMap<K>> socle(const Module<K>& m) {
  SubRows<K> rows;
  const auto& arrows = m.A->quiver().arrows;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Mat<K> stacked(m.dims[v], 0);
    for (size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].source == int(v)) stacked = stacked.hstack(m.arrow_act[a]);
    rows.push_back(stacked.cols() == 0 ? Mat<K>::identity(m.dims[v])
                                       : kernel_basis(stacked));
  }
  return sub_module(m, rows);
}

// ---------------------------------------------------------------------------
// standard constructors

template <class K>
Module<K> simple(typename Algebra<K>::Ptr A, int i) {
  if (i < 0 || i >= A->n()) throw std::out_of_range("simple: vertex index");
  Module<K> m;
  m.A = A;
  m.dims.assign(size_t(A->n()), 0);
  m.dims[size_t(i)] = 1;
  for (const auto& a : A->quiver().arrows)
    m.arrow_act.push_back(Mat<K>(m.dims[size_t(a.source)], m.dims[size_t(a.target)]));
  return m;
}

// e_i A with basis the reduced paths out of i, graded by path target.
template <class K>
Module<K> projective(typename Algebra<K>::Ptr A, int i) {
  if (i < 0 || i >= A->n()) throw std::out_of_range("projective: vertex index");
  Module<K> m;
  m.A = A;
  std::vector<int> local;  // algebra basis indices with source i
  std::vector<int> pos(size_t(A->dim()), -1);
  for (int b = 0; b < A->dim(); ++b)
    if (A->basis_source(b) == i) {
      pos[size_t(b)] = int(local.size());
      local.push_back(b);
    }
  // order basis vectors per vertex
  std::vector<std::vector<int>> by_vertex(size_t(A->n()));
  for (int lb : local) by_vertex[size_t(A->basis_target(lb))].push_back(lb);
  std::vector<int> offset(size_t(A->n()), 0);
  m.dims.assign(size_t(A->n()), 0);
  for (int v = 0; v < A->n(); ++v) m.dims[size_t(v)] = int(by_vertex[size_t(v)].size());
  std::vector<int> index_in_vertex(size_t(A->dim()), -1);
  for (int v = 0; v < A->n(); ++v)
    for (size_t k = 0; k < by_vertex[size_t(v)].size(); ++k)
      index_in_vertex[size_t(by_vertex[size_t(v)][k])] = int(k);
  const auto& arrows = A->quiver().arrows;
  for (size_t a = 0; a < arrows.size(); ++a) {
    int u = arrows[a].source, v = arrows[a].target;
    Mat<K> act(m.dims[size_t(u)], m.dims[size_t(v)]);
    for (size_t k = 0; k < by_vertex[size_t(u)].size(); ++k) {
      int b = by_vertex[size_t(u)][k];
      AlgElem<K> x = A->zero_elem();
      x[size_t(b)] = K(1);
      AlgElem<K> y = A->elem_times_arrow(x, int(a));
      for (int c = 0; c < A->dim(); ++c) {
        if (is_zero(y[size_t(c)])) continue;
        act(int(k), index_in_vertex[size_t(c)]) =
            K(act(int(k), index_in_vertex[size_t(c)]) + y[size_t(c)]);
      }
    }
    m.arrow_act.push_back(std::move(act));
  }
  return m;
}

// A as a right module over itself: direct sum of the e_i A in vertex order.
template <class K>
Module<K> regular_module(typename Algebra<K>::Ptr A) {
  Module<K> m = projective<K>(A, 0);
  for (int i = 1; i < A->n(); ++i) m = direct_sum(m, projective<K>(A, i));
  return m;
}

// Vector-space dual: a module over the opposite algebra (vertex order
// reversed), with transposed arrow actions.
template <class K>
Module<K> dualize(const Module<K>& m, typename Algebra<K>::Ptr Aop) {
  int nv = m.n();
  auto rv = [nv](int v) { return nv - 1 - v; };
  Module<K> d;
  d.A = Aop;
  d.dims.assign(size_t(nv), 0);
  for (int v = 0; v < nv; ++v) d.dims[size_t(rv(v))] = m.dims[size_t(v)];
  const auto& arrows = m.A->quiver().arrows;
  d.arrow_act.resize(arrows.size());
  // opposite arrow k corresponds to original arrow k by construction
  for (size_t a = 0; a < arrows.size(); ++a)
    d.arrow_act[a] = m.arrow_act[a].transposed();
  return d;
}

// D(A e_i): dual of the left projective at vertex i, i.e. the injective
// envelope of S(i). Built as the dual of a projective over the opposite.
template <class K>
Module<K> injective(typename Algebra<K>::Ptr A, int i) {
  auto Aop = A->opposite();
  int r = A->n() - 1 - i;
  Module<K> p = projective<K>(Aop, r);
  return dualize(p, Aop->opposite() /* rebuild of A */);
}

// ---------------------------------------------------------------------------
// hom spaces

// Basis of Hom(M, N) as a canonical list of intertwiners (kernel of the
// intertwiner constraints in RREF order).
template <class K>
std::vector<ModuleMap<K>> hom(const Module<K>& m, const Module<K>& n) {
  if (m.A != n.A) throw std::invalid_argument("hom: algebra mismatch");
  int nv = m.n();
  std::vector<int> offset(size_t(nv) + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[size_t(v) + 1] = offset[size_t(v)] + m.dims[size_t(v)] * n.dims[size_t(v)];
  int unknowns = offset[size_t(nv)];
  const auto& arrows = m.A->quiver().arrows;
  int constraints = 0;
  for (size_t a = 0; a < arrows.size(); ++a)
    constraints += m.dims[size_t(arrows[a].source)] * n.dims[size_t(arrows[a].target)];
  Mat<K> c(unknowns, constraints);
  int ccol = 0;
  auto var = [&](int v, int i, int j) {
    return offset[size_t(v)] + i * n.dims[size_t(v)] + j;
  };
  for (size_t a = 0; a < arrows.size(); ++a) {
    int u = arrows[a].source, v = arrows[a].target;
    const Mat<K>& Ma = m.arrow_act[a];
    const Mat<K>& Na = n.arrow_act[a];
    // constraint (i, j): sum_k Ma(i,k) H_v(k,j) - sum_l H_u(i,l) Na(l,j) = 0
    for (int i = 0; i < m.dims[size_t(u)]; ++i)
      for (int j = 0; j < n.dims[size_t(v)]; ++j) {
        for (int k = 0; k < m.dims[size_t(v)]; ++k)
          if (!is_zero(Ma(i, k))) c(var(v, k, j), ccol) = K(c(var(v, k, j), ccol) + Ma(i, k));
        for (int l = 0; l < n.dims[size_t(u)]; ++l)
          if (!is_zero(Na(l, j))) c(var(u, i, l), ccol) = K(c(var(u, i, l), ccol) - Na(l, j));
        ++ccol;
      }
  }
  Mat<K> ker = kernel_basis(c);
  std::vector<ModuleMap<K>> basis;
  basis.reserve(size_t(ker.rows()));
  for (int r = 0; r < ker.rows(); ++r) {
    ModuleMap<K> f = ModuleMap<K>::zero(m, n);
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < m.dims[size_t(v)]; ++i)
        for (int j = 0; j < n.dims[size_t(v)]; ++j)
          f.blocks[size_t(v)](i, j) = ker(r, var(v, i, j));
    basis.push_back(std::move(f));
  }
  return basis;
}

template <class K>
int hom_dim(const Module<K>& m, const Module<K>& n) {
  return int(hom(m, n).size());
}

// flatten a map into a row vector (for linear algebra over hom spaces)
template <class K>
Mat<K> flatten_map(const ModuleMap<K>& f) {
  int total = 0;
  for (size_t v = 0; v < f.blocks.size(); ++v)
    total += f.blocks[v].rows() * f.blocks[v].cols();
  Mat<K> row(1, total);
  int at = 0;
  for (const auto& b : f.blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) row(0, at++) = b(i, j);
  return row;
}

template <class K>
Mat<K> flatten_maps(const std::vector<ModuleMap<K>>& fs) {
  if (fs.empty()) return Mat<K>(0, 0);
  Mat<K> m(0, flatten_map(fs[0]).cols());
  for (const auto& f : fs) m = m.vstack(flatten_map(f));
  return m;
}

// Projective cover P(M) -> M: one summand e_v A per top basis vector.
template <class K>
ModuleMap<K> proj_cover(const Module<K>& m) {
  auto [tp, pr] = top(m);
  // section of the projection: lift each top basis vector into M
  std::vector<Mat<K>> sect(size_t(m.n()));
  for (int v = 0; v < m.n(); ++v) {
    auto sol = solve_right(pr.blocks[size_t(v)].transposed(),
                           Mat<K>::identity(tp.dims[size_t(v)]));
    // solve section * proj = id, i.e. proj^T x^T = id columns
    if (!sol.solvable) throw std::logic_error("projection has no section");
    sect[size_t(v)] = sol.solution;
  }
  Module<K> p;
  ModuleMap<K> f;
  bool first = true;
  for (int v = 0; v < m.n(); ++v) {
    for (int k = 0; k < tp.dims[size_t(v)]; ++k) {
      Module<K> pv = projective<K>(m.A, v);
      // generator image: the lift of the k-th top basis vector at v
      Mat<K> gen = sect[size_t(v)].row(k);  // row in M_v
      // map e_v A -> M: basis path b (source v) |-> gen * action(path)
      ModuleMap<K> g = ModuleMap<K>::zero(pv, m);
      std::vector<std::vector<int>> by_vertex(size_t(m.n()));
      for (int b = 0; b < m.A->dim(); ++b)
        if (m.A->basis_source(b) == v)
          by_vertex[size_t(m.A->basis_target(b))].push_back(b);
      for (int w = 0; w < m.n(); ++w)
        for (size_t t = 0; t < by_vertex[size_t(w)].size(); ++t) {
          const Path& path = m.A->basis()[size_t(by_vertex[size_t(w)][t])];
          Mat<K> img = gen * m.path_action(path);
          g.blocks[size_t(w)].set_row(int(t), img);
        }
      if (first) {
        p = pv;
        f = g;
        first = false;
      } else {
        Module<K> np = direct_sum(p, pv);
        ModuleMap<K> nf = ModuleMap<K>::zero(np, m);
        for (int w = 0; w < m.n(); ++w)
          nf.blocks[size_t(w)] = f.blocks[size_t(w)].vstack(g.blocks[size_t(w)]);
        p = std::move(np);
        f = std::move(nf);
      }
    }
  }
  if (first) {  // M = 0
    f = ModuleMap<K>::zero(Module<K>::zero(m.A), m);
  }
  return f;
}

// Module from a parsed fixture block.
template <class K>
Module<K> module_from_literal(typename Algebra<K>::Ptr A, const ModuleLiteral& lit) {
  Module<K> m;
  m.A = A;
  if (int(lit.dims.size()) != A->n())
    throw std::invalid_argument("module literal dims mismatch");
  m.dims = lit.dims;
  const auto& arrows = A->quiver().arrows;
  for (size_t a = 0; a < arrows.size(); ++a) {
    int ru = m.dims[size_t(arrows[a].source)], cv = m.dims[size_t(arrows[a].target)];
    Mat<K> act(ru, cv);
    auto it = lit.arrow_entries.find(arrows[a].name);
    if (it != lit.arrow_entries.end()) {
      const auto& rows = it->second;
      if (int(rows.size()) != ru)
        throw std::invalid_argument("module literal: bad row count for " + arrows[a].name);
      for (int i = 0; i < ru; ++i) {
        if (int(rows[size_t(i)].size()) != cv)
          throw std::invalid_argument("module literal: bad col count for " + arrows[a].name);
        for (int j = 0; j < cv; ++j)
          act(i, j) = scalar_from_rat<K>(rows[size_t(i)][size_t(j)]);
      }
    }
    m.arrow_act.push_back(std::move(act));
  }
  if (!m.relations_hold())
    throw std::invalid_argument("module literal violates the relations");
  return m;
}

}  // namespace strata
