#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/algebra.hpp"

namespace strata {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(l) + ":" +
                           std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

// Named module fixture from a `module NAME { ... }` block.
struct ModuleLiteral {
  std::string name;
  std::vector<int> dims;  // per vertex, in vertex order
  std::map<std::string, std::vector<std::vector<Rat>>> arrow_entries;
};

// Field-agnostic parse result; coefficients stay rational until an algebra
// over a concrete field is instantiated.
struct ParsedInput {
  FieldSpec field;
  Quiver quiver;
  std::vector<Relation<Rat>> relations;
  std::vector<ModuleLiteral> modules;
};

ParsedInput parse_input(const std::string& text);
ParsedInput parse_file(const std::string& path);

// Deterministic canonical form; parse(print(x)) == x and printing is
// idempotent on its own output.
std::string print_canonical(const ParsedInput& in);

// Instantiate the parsed relations over a concrete field. For Fp the caller
// must hold an FpScope.
template <class K>
typename Algebra<K>::Ptr algebra_from_input(const ParsedInput& in,
                                            int length_cap = 64) {
  std::vector<Relation<K>> rels;
  rels.reserve(in.relations.size());
  for (const auto& r : in.relations) {
    Relation<K> nr;
    nr.terms.reserve(r.terms.size());
    for (const auto& [p, c] : r.terms) nr.terms.push_back({p, scalar_from_rat<K>(c)});
    rels.push_back(std::move(nr));
  }
  return Algebra<K>::build(in.quiver, std::move(rels), in.field, length_cap);
}

}  // namespace strata
