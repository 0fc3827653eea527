#include "strata/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace strata {

namespace {

struct Cursor {
  const std::string& s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size() || s[pos] == '#';
  }
  int col() const { return int(pos) + 1; }

  std::string token() {
    skip_ws();
    if (done()) throw ParseError(line, col(), "unexpected end of line");
    size_t start = pos;
    if (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    } else {
      ++pos;
    }
    return s.substr(start, pos - start);
  }

  std::string peek() {
    size_t save = pos;
    if (done()) return {};
    std::string t = token();
    pos = save;
    return t;
  }

  void expect(const std::string& t) {
    int c = col();
    std::string got = token();
    if (got != t) throw ParseError(line, c, "expected '" + t + "', got '" + got + "'");
  }
};

bool is_integer(const std::string& t) {
  if (t.empty()) return false;
  for (char ch : t)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Rat parse_number(Cursor& cur) {
  int c = cur.col();
  std::string num = cur.token();
  if (!is_integer(num)) throw ParseError(cur.line, c, "expected a number, got '" + num + "'");
  Rat r(num);
  if (cur.peek() == "/") {
    cur.token();
    std::string den = cur.token();
    if (!is_integer(den) || den == "0")
      throw ParseError(cur.line, cur.col(), "bad denominator");
    r /= Rat(den);
  }
  return r;
}

std::vector<std::vector<Rat>> parse_matrix(Cursor& cur) {
  std::vector<std::vector<Rat>> rows;
  cur.expect("[");
  if (cur.peek() == "]") { cur.token(); return rows; }
  while (true) {
    cur.expect("[");
    std::vector<Rat> row;
    if (cur.peek() == "]") {
      cur.token();
    } else {
      while (true) {
        bool neg = false;
        if (cur.peek() == "-") { cur.token(); neg = true; }
        Rat v = parse_number(cur);
        row.push_back(neg ? Rat(-v) : v);
        std::string t = cur.token();
        if (t == "]") break;
        if (t != ",") throw ParseError(cur.line, cur.col(), "expected ',' or ']'");
      }
    }
    rows.push_back(std::move(row));
    std::string t = cur.token();
    if (t == "]") break;
    if (t != ",") throw ParseError(cur.line, cur.col(), "expected ',' or ']'");
  }
  return rows;
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  ParsedInput out;
  std::map<std::string, int> vertex_index;
  std::map<std::string, int> arrow_index;
  bool have_field = false, have_vertices = false;

  std::vector<std::string> lines;
  {
    std::istringstream ss(text);
    std::string l;
    while (std::getline(ss, l)) lines.push_back(l);
  }

  ModuleLiteral* open_module = nullptr;

  auto parse_path = [&](Cursor& cur) {
    Path p;
    std::vector<std::string> names;
    names.push_back(cur.token());
    while (cur.peek() == "*") {
      cur.token();
      names.push_back(cur.token());
    }
    int at = -1;
    for (size_t i = 0; i < names.size(); ++i) {
      auto it = arrow_index.find(names[i]);
      if (it == arrow_index.end())
        throw ParseError(cur.line, cur.col(), "unknown arrow '" + names[i] + "'");
      const Arrow& a = out.quiver.arrows[size_t(it->second)];
      if (i == 0) {
        p.source = a.source;
        at = a.source;
      }
      if (a.source != at)
        throw ParseError(cur.line, cur.col(), "path not composable at '" + names[i] + "'");
      p.arrows.push_back(it->second);
      at = a.target;
    }
    p.target = at;
    return p;
  };

  for (int li = 0; li < int(lines.size()); ++li) {
    Cursor cur{lines[size_t(li)], li + 1};
    if (cur.done()) continue;

    if (open_module) {
      std::string head = cur.token();
      if (head == "}") {
        open_module = nullptr;
        continue;
      }
      if (head == "dims") {
        while (!cur.done()) {
          std::string t = cur.token();
          if (!is_integer(t)) throw ParseError(cur.line, cur.col(), "bad dimension");
          open_module->dims.push_back(std::stoi(t));
        }
        if (int(open_module->dims.size()) != out.quiver.n())
          throw ParseError(cur.line, cur.col(), "dims count != vertex count");
        continue;
      }
      if (head == "arrow") {
        std::string name = cur.token();
        if (!arrow_index.count(name))
          throw ParseError(cur.line, cur.col(), "unknown arrow '" + name + "'");
        cur.expect("=");
        open_module->arrow_entries[name] = parse_matrix(cur);
        continue;
      }
      throw ParseError(cur.line, cur.col(), "unexpected '" + head + "' in module block");
    }

    std::string head = cur.token();
    if (head == "field") {
      std::string f = cur.token();
      if (f == "Q") {
        out.field = FieldSpec::rationals();
      } else if (f == "F") {
        std::string p = cur.token();
        if (!is_integer(p)) throw ParseError(cur.line, cur.col(), "bad prime");
        out.field = FieldSpec::prime(std::stoll(p));
      } else {
        throw ParseError(cur.line, cur.col(), "field must be Q or F <p>");
      }
      have_field = true;
    } else if (head == "vertices") {
      if (have_vertices) throw ParseError(cur.line, cur.col(), "duplicate vertices line");
      while (!cur.done()) {
        std::string v = cur.token();
        if (vertex_index.count(v))
          throw ParseError(cur.line, cur.col(), "duplicate vertex '" + v + "'");
        vertex_index[v] = out.quiver.n();
        out.quiver.vertices.push_back(v);
      }
      if (out.quiver.n() == 0) throw ParseError(cur.line, cur.col(), "no vertices");
      have_vertices = true;
    } else if (head == "arrow") {
      if (!have_vertices) throw ParseError(cur.line, cur.col(), "arrow before vertices");
      std::string name = cur.token();
      if (arrow_index.count(name))
        throw ParseError(cur.line, cur.col(), "duplicate arrow '" + name + "'");
      cur.expect(":");
      std::string src = cur.token();
      cur.expect("-");
      cur.expect(">");
      std::string tgt = cur.token();
      if (!vertex_index.count(src) || !vertex_index.count(tgt))
        throw ParseError(cur.line, cur.col(), "unknown vertex in arrow " + name);
      arrow_index[name] = int(out.quiver.arrows.size());
      out.quiver.arrows.push_back({name, vertex_index[src], vertex_index[tgt]});
    } else if (head == "relation") {
      Relation<Rat> rel;
      bool neg = false;
      if (cur.peek() == "-") { cur.token(); neg = true; }
      while (true) {
        Rat coeff(1);
        if (is_integer(cur.peek())) {
          coeff = parse_number(cur);
          cur.expect("*");
        }
        if (neg) coeff = -coeff;
        Path p = parse_path(cur);
        rel.terms.push_back({p, coeff});
        if (cur.done()) break;
        std::string op = cur.token();
        if (op == "+") neg = false;
        else if (op == "-") neg = true;
        else throw ParseError(cur.line, cur.col(), "expected '+' or '-'");
      }
      out.relations.push_back(std::move(rel));
    } else if (head == "module") {
      std::string name = cur.token();
      for (const auto& m : out.modules)
        if (m.name == name)
          throw ParseError(cur.line, cur.col(), "duplicate module '" + name + "'");
      cur.expect("{");
      out.modules.push_back(ModuleLiteral{name, {}, {}});
      open_module = &out.modules.back();
    } else {
      throw ParseError(cur.line, cur.col(), "unknown directive '" + head + "'");
    }
  }
  if (open_module) throw ParseError(int(lines.size()), 1, "unclosed module block");
  if (!have_field) out.field = FieldSpec::rationals();
  if (!have_vertices) throw ParseError(int(lines.size()), 1, "missing vertices line");

  // Validate relation shape early so errors carry a file position context.
  for (const auto& r : out.relations) r.validate(out.quiver);
  return out;
}

ParsedInput parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

std::string print_canonical(const ParsedInput& in) {
  std::ostringstream o;
  o << "field " << (in.field.kind == FieldSpec::Kind::rationals
                        ? std::string("Q")
                        : "F " + std::to_string(in.field.p))
    << "\n";
  o << "vertices";
  for (const auto& v : in.quiver.vertices) o << " " << v;
  o << "\n";
  for (const auto& a : in.quiver.arrows)
    o << "arrow " << a.name << " : " << in.quiver.vertices[size_t(a.source)]
      << " -> " << in.quiver.vertices[size_t(a.target)] << "\n";
  for (const auto& r : in.relations) {
    auto terms = r.terms;
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    o << "relation ";
    bool first = true;
    for (const auto& [p, c] : terms) {
      Rat a = c;
      if (sgn(a) < 0) {
        o << (first ? "-" : " - ");
        a = -a;
      } else if (!first) {
        o << " + ";
      }
      if (a != 1) o << a.get_str() << "*";
      for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) o << "*";
        o << in.quiver.arrows[size_t(p.arrows[i])].name;
      }
      first = false;
    }
    o << "\n";
  }
  for (const auto& m : in.modules) {
    o << "module " << m.name << " {\n";
    o << "  dims";
    for (int d : m.dims) o << " " << d;
    o << "\n";
    for (const auto& [arrow, rows] : m.arrow_entries) {
      o << "  arrow " << arrow << " = [";
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i) o << ",";
        o << "[";
        for (size_t j = 0; j < rows[i].size(); ++j) {
          if (j) o << ",";
          o << rows[i][j].get_str();
        }
        o << "]";
      }
      o << "]\n";
    }
    o << "}\n";
  }
  return o.str();
}

}  // namespace strata
