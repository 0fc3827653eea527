#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "strata/matrix.hpp"

namespace strata {

struct Arrow {
  std::string name;
  int source = 0, target = 0;  // vertex indices
};

// Vertex order is the stratification order: position in `vertices` decides
// which projective/standard module is "higher".
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int n() const { return int(vertices.size()); }

  void validate() const {
    std::map<std::string, int> seen;
    for (const auto& v : vertices)
      if (++seen[v] > 1) throw std::invalid_argument("duplicate vertex label " + v);
    std::map<std::string, int> aseen;
    for (const auto& a : arrows) {
      if (++aseen[a.name] > 1) throw std::invalid_argument("duplicate arrow name " + a.name);
      if (a.source < 0 || a.source >= n() || a.target < 0 || a.target >= n())
        throw std::invalid_argument("arrow endpoint out of range: " + a.name);
    }
  }
};

// A path is a composable arrow sequence read left to right: {a, b} means
// "a then b". The empty sequence is the trivial path at a vertex.
struct Path {
  int source = 0, target = 0;
  std::vector<int> arrows;

  int length() const { return int(arrows.size()); }

  bool operator==(const Path& o) const {
    return source == o.source && arrows == o.arrows;
  }
  // (length, lexicographic, source): a deterministic total order
  bool operator<(const Path& o) const {
    if (length() != o.length()) return length() < o.length();
    if (arrows != o.arrows) return arrows < o.arrows;
    return source < o.source;
  }
};

template <class K>
struct Relation {
  std::vector<std::pair<Path, K>> terms;  // parallel paths, length >= 2

  void validate(const Quiver& q) const {
    if (terms.empty()) throw std::invalid_argument("empty relation");
    for (const auto& [p, c] : terms) {
      (void)c;
      if (p.length() < 2)
        throw std::invalid_argument("relation path of length < 2");
      if (p.source != terms[0].first.source || p.target != terms[0].first.target)
        throw std::invalid_argument("relation paths are not parallel");
      int at = p.source;
      for (int a : p.arrows) {
        if (a < 0 || a >= int(q.arrows.size()) || q.arrows[size_t(a)].source != at)
          throw std::invalid_argument("non-composable path in relation");
        at = q.arrows[size_t(a)].target;
      }
      if (at != p.target) throw std::invalid_argument("path target mismatch");
    }
  }
};

// Element of the algebra: dense coordinates in the reduced path basis.
template <class K>
using AlgElem = std::vector<K>;

// Finite dimensional path algebra with admissible relations. The basis is
// found by enumerating paths level by level and reducing each level modulo
// the span of relation multiples. The reduction RREF runs over columns in
// (length desc, lex) order, so a pivot path always rewrites into shorter
// paths and products can be folded one arrow at a time.
template <class K>
class Algebra {
 public:
  using Ptr = std::shared_ptr<const Algebra<K>>;

  static Ptr build(Quiver quiver, std::vector<Relation<K>> relations,
                   FieldSpec field, int length_cap = 64) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->quiver_ = std::move(quiver);
    a->relations_ = std::move(relations);
    a->field_ = field;
    a->quiver_.validate();
    for (const auto& r : a->relations_) r.validate(a->quiver_);
    a->construct(length_cap);
    return a;
  }

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation<K>>& relations() const { return relations_; }
  FieldSpec field() const { return field_; }
  int n() const { return quiver_.n(); }
  int dim() const { return int(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  int basis_source(int b) const { return basis_[size_t(b)].source; }
  int basis_target(int b) const { return basis_[size_t(b)].target; }
  int idempotent(int v) const { return idem_[size_t(v)]; }

  // smallest L with (arrow ideal)^L = 0
  int loewy_length() const { return loewy_; }

  AlgElem<K> zero_elem() const { return AlgElem<K>(size_t(dim()), K(0)); }

  // x * arrow (right multiplication); empty fold entries mean zero
  AlgElem<K> elem_times_arrow(const AlgElem<K>& x, int arrow) const {
    AlgElem<K> r = zero_elem();
    for (int b = 0; b < dim(); ++b) {
      if (is_zero(x[size_t(b)])) continue;
      const AlgElem<K>& t = fold_[size_t(b)][size_t(arrow)];
      if (t.empty()) continue;
      for (int c = 0; c < dim(); ++c)
        if (!is_zero(t[size_t(c)]))
          r[size_t(c)] = K(r[size_t(c)] + x[size_t(b)] * t[size_t(c)]);
    }
    return r;
  }

  // x * e_v
  AlgElem<K> elem_times_idem(const AlgElem<K>& x, int v) const {
    AlgElem<K> r = zero_elem();
    for (int b = 0; b < dim(); ++b)
      if (!is_zero(x[size_t(b)]) && basis_target(b) == v) r[size_t(b)] = x[size_t(b)];
    return r;
  }

  // class of an arbitrary composable path
  AlgElem<K> path_class(const Path& p) const {
    AlgElem<K> x = zero_elem();
    x[size_t(idem_[size_t(p.source)])] = K(1);
    for (int a : p.arrows) x = elem_times_arrow(x, a);
    return x;
  }

  AlgElem<K> mul(const AlgElem<K>& x, const AlgElem<K>& y) const {
    AlgElem<K> r = zero_elem();
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y[size_t(j)])) continue;
      AlgElem<K> t = elem_times_idem(x, basis_source(j));
      for (int a : basis_[size_t(j)].arrows) t = elem_times_arrow(t, a);
      for (int b = 0; b < dim(); ++b)
        if (!is_zero(t[size_t(b)]))
          r[size_t(b)] = K(r[size_t(b)] + t[size_t(b)] * y[size_t(j)]);
    }
    return r;
  }

  Ptr opposite() const {
    Quiver q;
    int nv = n();
    q.vertices.resize(size_t(nv));
    for (int v = 0; v < nv; ++v)
      q.vertices[size_t(nv - 1 - v)] = quiver_.vertices[size_t(v)];
    auto rv = [nv](int v) { return nv - 1 - v; };
    q.arrows.reserve(quiver_.arrows.size());
    for (const auto& a : quiver_.arrows)
      q.arrows.push_back({a.name, rv(a.target), rv(a.source)});
    std::vector<Relation<K>> rels;
    rels.reserve(relations_.size());
    for (const auto& r : relations_) {
      Relation<K> nr;
      for (const auto& [p, c] : r.terms) {
        Path np;
        np.source = rv(p.target);
        np.target = rv(p.source);
        np.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
        nr.terms.push_back({np, c});
      }
      rels.push_back(std::move(nr));
    }
    return build(std::move(q), std::move(rels), field_);
  }

  bool associative_on_basis() const {
    for (int i = 0; i < dim(); ++i) {
      AlgElem<K> ei = zero_elem();
      ei[size_t(i)] = K(1);
      for (int j = 0; j < dim(); ++j) {
        AlgElem<K> ej = zero_elem();
        ej[size_t(j)] = K(1);
        AlgElem<K> ij = mul(ei, ej);
        for (int k = 0; k < dim(); ++k) {
          AlgElem<K> ek = zero_elem();
          ek[size_t(k)] = K(1);
          if (mul(ij, ek) != mul(ei, mul(ej, ek))) return false;
        }
      }
    }
    return true;
  }

 private:
  Algebra() = default;
  void construct(int length_cap);

  Quiver quiver_;
  std::vector<Relation<K>> relations_;
  FieldSpec field_;
  std::vector<Path> basis_;                    // sorted by (length, lex)
  std::vector<int> idem_;                      // basis index of e_v
  std::vector<std::vector<AlgElem<K>>> fold_;  // basis x arrow -> coords
  int loewy_ = 1;
};

// ---------------------------------------------------------------------------

template <class K>
void Algebra<K>::construct(int length_cap) {
  const int max_paths = 20000;
  std::vector<Path> paths;
  std::map<std::vector<int>, int> index_by_arrows;  // length >= 1 only
  for (int v = 0; v < n(); ++v) paths.push_back(Path{v, v, {}});

  auto add_level = [&](int len) {
    std::vector<Path> fresh;
    for (const Path& p : paths) {
      if (p.length() != len - 1) continue;
      for (int a = 0; a < int(quiver_.arrows.size()); ++a) {
        if (quiver_.arrows[size_t(a)].source != p.target) continue;
        Path np = p;
        np.arrows.push_back(a);
        np.target = quiver_.arrows[size_t(a)].target;
        fresh.push_back(std::move(np));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (Path& p : fresh) {
      if (int(paths.size()) >= max_paths)
        throw std::runtime_error("path explosion: relations not admissible within cap");
      index_by_arrows[p.arrows] = int(paths.size());
      paths.push_back(std::move(p));
    }
    return !fresh.empty();
  };

  std::vector<int> basis_ids;
  std::vector<AlgElem<K>> path_classes;  // per path id: coords over basis_ids

  auto reduce_all = [&]() {
    int np = int(paths.size());
    std::vector<std::vector<std::pair<int, K>>> rows;
    for (const auto& rel : relations_) {
      for (int pi = 0; pi < np; ++pi) {
        if (paths[size_t(pi)].target != rel.terms[0].first.source) continue;
        for (int qi = 0; qi < np; ++qi) {
          if (paths[size_t(qi)].source != rel.terms[0].first.target) continue;
          std::vector<std::pair<int, K>> row;
          bool all_present = true;
          for (const auto& [t, c] : rel.terms) {
            std::vector<int> word = paths[size_t(pi)].arrows;
            word.insert(word.end(), t.arrows.begin(), t.arrows.end());
            word.insert(word.end(), paths[size_t(qi)].arrows.begin(),
                        paths[size_t(qi)].arrows.end());
            auto it = index_by_arrows.find(word);
            if (it == index_by_arrows.end()) { all_present = false; break; }
            row.push_back({it->second, c});
          }
          if (all_present) rows.push_back(std::move(row));
        }
      }
    }
    Mat<K> m(int(rows.size()), np);
    for (size_t r = 0; r < rows.size(); ++r)
      for (const auto& [pid, c] : rows[r])
        m(int(r), np - 1 - pid) = K(m(int(r), np - 1 - pid) + c);
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(size_t(np), false);
    std::vector<int> pivot_row_of(size_t(np), -1);
    for (size_t k = 0; k < pivots.size(); ++k) {
      int pid = np - 1 - pivots[k];
      is_pivot[size_t(pid)] = true;
      pivot_row_of[size_t(pid)] = int(k);
    }
    basis_ids.clear();
    for (int pid = 0; pid < np; ++pid)
      if (!is_pivot[size_t(pid)]) basis_ids.push_back(pid);
    std::vector<int> basis_pos(size_t(np), -1);
    for (size_t b = 0; b < basis_ids.size(); ++b)
      basis_pos[size_t(basis_ids[b])] = int(b);
    path_classes.assign(size_t(np), {});
    for (int pid = 0; pid < np; ++pid) {
      AlgElem<K> cls(basis_ids.size(), K(0));
      if (!is_pivot[size_t(pid)]) {
        cls[size_t(basis_pos[size_t(pid)])] = K(1);
      } else {
        // pivot path rewrites into strictly later columns = shorter or
        // lex-later paths, whose classes are already final
        int row = pivot_row_of[size_t(pid)];
        for (int col = np - 1 - pid + 1; col < np; ++col) {
          const K& c = m(row, col);
          if (is_zero(c)) continue;
          const AlgElem<K>& tc = path_classes[size_t(np - 1 - col)];
          for (size_t b = 0; b < tc.size(); ++b) cls[b] = K(cls[b] - c * tc[b]);
        }
      }
      path_classes[size_t(pid)] = std::move(cls);
    }
  };

  reduce_all();
  std::vector<int> prev_basis = basis_ids;
  int level = 0;
  while (true) {
    ++level;
    if (level > length_cap)
      throw std::runtime_error("relations not admissible: no vanishing level within cap");
    if (!add_level(level)) break;
    reduce_all();
    if (basis_ids == prev_basis) break;
    prev_basis = basis_ids;
  }

  basis_.clear();
  for (int pid : basis_ids) basis_.push_back(paths[size_t(pid)]);
  idem_.assign(size_t(n()), -1);
  for (size_t b = 0; b < basis_.size(); ++b)
    if (basis_[b].length() == 0) idem_[size_t(basis_[b].source)] = int(b);
  for (int v = 0; v < n(); ++v)
    if (idem_[size_t(v)] < 0)
      throw std::runtime_error("trivial path reduced away: relations not admissible");

  fold_.assign(basis_.size(), std::vector<AlgElem<K>>(quiver_.arrows.size()));
  for (size_t b = 0; b < basis_.size(); ++b) {
    for (int a = 0; a < int(quiver_.arrows.size()); ++a) {
      if (quiver_.arrows[size_t(a)].source != basis_[b].target) continue;
      std::vector<int> word = basis_[b].arrows;
      word.push_back(a);
      auto it = index_by_arrows.find(word);
      AlgElem<K> cls(basis_.size(), K(0));
      if (it != index_by_arrows.end()) cls = path_classes[size_t(it->second)];
      // a word beyond the stabilized level reduces into the ideal: zero
      fold_[b][size_t(a)] = std::move(cls);
    }
  }

  // Admissibility: the arrow ideal must be nilpotent in the constructed
  // algebra. Iterate J^k as a row space over basis coordinates.
  {
    int d = dim();
    std::vector<Mat<K>> arrow_mult;
    for (int a = 0; a < int(quiver_.arrows.size()); ++a) {
      Mat<K> m(d, d);
      for (int b = 0; b < d; ++b) {
        const AlgElem<K>& t = fold_[size_t(b)][size_t(a)];
        if (t.empty()) continue;
        for (int c = 0; c < d; ++c) m(b, c) = t[size_t(c)];
      }
      arrow_mult.push_back(std::move(m));
    }
    Mat<K> jspan(0, d);
    for (int a = 0; a < int(quiver_.arrows.size()); ++a) {
      auto it = index_by_arrows.find(std::vector<int>{a});
      Mat<K> r(1, d);
      if (it != index_by_arrows.end())
        for (int c = 0; c < d; ++c) r(0, c) = path_classes[size_t(it->second)][size_t(c)];
      jspan = jspan.vstack(r);
    }
    Mat<K> power = image_basis(jspan);
    int loewy = 1;
    while (power.rows() > 0) {
      ++loewy;
      if (loewy > length_cap + 2)
        throw std::runtime_error("arrow ideal not nilpotent: relations not admissible");
      Mat<K> next(0, d);
      for (const Mat<K>& am : arrow_mult) next = next.vstack(Mat<K>(power * am));
      next = image_basis(next);
      if (next.rows() >= power.rows() && next.rows() > 0)
        throw std::runtime_error("arrow ideal not nilpotent: relations not admissible");
      power = std::move(next);
    }
    loewy_ = loewy;
  }
}

}  // namespace strata
