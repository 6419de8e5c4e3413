#include "slopecert/triangulation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "internal_util.hpp"
#include "slopecert/boundary.hpp"
#include "slopecert/digest.hpp"
#include "slopecert/errors.hpp"

namespace slopecert {

Perm4::Perm4(const std::array<int, 4>& image) : img_(image) {
  std::array<bool, 4> seen{};
  for (int v : img_) {
    if (v < 0 || v > 3)
      throw std::invalid_argument("permutation image out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation image repeats a value");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  return Perm4(inv);
}

int Perm4::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

Perm4 operator*(const Perm4& a, const Perm4& b) {
  std::array<int, 4> img{};
  for (int i = 0; i < 4; ++i) img[static_cast<std::size_t>(i)] = a(b(i));
  return Perm4(img);
}

Perm4 Perm4::parse(std::string_view digits) {
  if (digits.size() != 4)
    throw std::invalid_argument("permutation must be four digits");
  std::array<int, 4> img{};
  for (int i = 0; i < 4; ++i) {
    char c = digits[static_cast<std::size_t>(i)];
    if (c < '0' || c > '3')
      throw std::invalid_argument("permutation digits must be 0..3");
    img[static_cast<std::size_t>(i)] = c - '0';
  }
  return Perm4(img);
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i)
    s[static_cast<std::size_t>(i)] = static_cast<char>('0' + img_[static_cast<std::size_t>(i)]);
  return s;
}

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;  // comment to end of line
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

long long parse_small_int(const Token& tok, int line, const char* what,
                          long long lo, long long hi) {
  const std::string& s = tok.text;
  std::size_t k = (s.size() > 1 && s[0] == '-') ? 1 : 0;
  if (k == s.size())
    throw ParseError(std::string("expected ") + what + ", got '" + s + "'",
                     line, tok.column);
  for (; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw ParseError(std::string("expected ") + what + ", got '" + s + "'",
                       line, tok.column);
  long long v = 0;
  try {
    v = std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " out of range: '" + s + "'", line,
                     tok.column);
  }
  if (v < lo || v > hi)
    throw ParseError(std::string(what) + " out of range: '" + s + "'", line,
                     tok.column);
  return v;
}

}  // namespace

Triangulation parse_triangulation(const std::string& text) {
  Triangulation tri;
  bool header_seen = false;
  std::set<FaceRef> used;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;

    if (!header_seen) {
      if (toks[0].text != "tets")
        throw ParseError("expected 'tets N' header, got '" + toks[0].text + "'",
                         lineno, toks[0].column);
      if (toks.size() != 2)
        throw ParseError("'tets' takes exactly one count", lineno,
                         toks[0].column);
      tri.tet_count = static_cast<int>(
          parse_small_int(toks[1], lineno, "tetrahedron count", 1, 1000000));
      header_seen = true;
      continue;
    }

    if (toks[0].text != "glue")
      throw ParseError("expected 'glue' line, got '" + toks[0].text + "'",
                       lineno, toks[0].column);
    if (toks.size() != 6)
      throw ParseError(
          "'glue' takes five fields: tetA faceA tetB faceB perm", lineno,
          toks[0].column);

    FaceGluing g;
    g.a.tet = static_cast<int>(parse_small_int(
        toks[1], lineno, "tetrahedron index", 0, tri.tet_count - 1));
    g.a.face = static_cast<int>(
        parse_small_int(toks[2], lineno, "face index", 0, 3));
    g.b.tet = static_cast<int>(parse_small_int(
        toks[3], lineno, "tetrahedron index", 0, tri.tet_count - 1));
    g.b.face = static_cast<int>(
        parse_small_int(toks[4], lineno, "face index", 0, 3));
    try {
      g.perm = Perm4::parse(toks[5].text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad permutation '") + toks[5].text +
                           "': " + e.what(),
                       lineno, toks[5].column);
    }

    if (g.a == g.b)
      throw ParseError("a face cannot be glued to itself", lineno,
                       toks[1].column);
    if (g.perm(g.a.face) != g.b.face)
      throw ParseError(
          "permutation must carry the vertex opposite face A to the vertex "
          "opposite face B",
          lineno, toks[5].column);
    for (const FaceRef& fr : {g.a, g.b}) {
      if (used.count(fr))
        throw ParseError("face used in more than one gluing", lineno,
                         toks[1].column);
      used.insert(fr);
    }
    tri.gluings.push_back(std::move(g));
  }

  if (!header_seen) throw ParseError("missing 'tets N' header", 1, 1);
  return tri;
}

Triangulation load_triangulation(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read file: " + path.string());
  return parse_triangulation(buf.str());
}

Triangulation canonical_form(const Triangulation& tri) {
  Triangulation out;
  out.tet_count = tri.tet_count;
  out.gluings = tri.gluings;
  for (FaceGluing& g : out.gluings) {
    if (g.b < g.a) {
      std::swap(g.a, g.b);
      g.perm = g.perm.inverse();
    }
  }
  std::sort(out.gluings.begin(), out.gluings.end(),
            [](const FaceGluing& x, const FaceGluing& y) { return x.a < y.a; });
  return out;
}

std::string serialize(const Triangulation& tri) {
  Triangulation c = canonical_form(tri);
  std::ostringstream out;
  out << "tets " << c.tet_count << "\n";
  for (const FaceGluing& g : c.gluings)
    out << "glue " << g.a.tet << " " << g.a.face << " " << g.b.tet << " "
        << g.b.face << " " << g.perm.str() << "\n";
  return out.str();
}

std::string content_digest(const Triangulation& tri) {
  return sha256_hex(serialize(tri));
}

std::vector<FaceRef> boundary_faces(const Triangulation& tri) {
  std::set<FaceRef> glued;
  for (const FaceGluing& g : tri.gluings) {
    glued.insert(g.a);
    glued.insert(g.b);
  }
  std::vector<FaceRef> out;
  for (int t = 0; t < tri.tet_count; ++t)
    for (int f = 0; f < 4; ++f)
      if (!glued.count({t, f})) out.push_back({t, f});
  return out;
}

namespace {

std::array<int, 3> face_vertices(int face) {
  std::array<int, 3> vs{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) vs[static_cast<std::size_t>(k++)] = v;
  return vs;
}

/** Index of the ordered pair (u, v), u != v, in 0..11. */
int directed_edge_index(int u, int v) { return u * 3 + (v > u ? v - 1 : v); }

}  // namespace

ValidationReport validate(const Triangulation& tri) {
  ValidationReport rep;
  const int n = tri.tet_count;

  // Orientability of the 3-complex: each tetrahedron gets +1 or -1; a
  // gluing with an even permutation forces opposite values, odd forces
  // equal values.
  {
    detail::ParityUnionFind uf(static_cast<std::size_t>(n));
    bool ok = true;
    for (const FaceGluing& g : tri.gluings) {
      int rel = (g.perm.sign() > 0) ? 1 : 0;  // even -> opposite parity
      if (!uf.unite(static_cast<std::size_t>(g.a.tet),
                    static_cast<std::size_t>(g.b.tet), rel))
        ok = false;
    }
    rep.orientable = ok;
  }

  // Vertex classes: union tetrahedron corners along gluings.
  std::vector<int> corner_class;
  {
    detail::UnionFind uf(static_cast<std::size_t>(4 * n));
    for (const FaceGluing& g : tri.gluings)
      for (int v : face_vertices(g.a.face))
        uf.unite(static_cast<std::size_t>(4 * g.a.tet + v),
                 static_cast<std::size_t>(4 * g.b.tet + g.perm(v)));
    int count = 0;
    corner_class = uf.labels(&count);
    rep.vertex_count = count;
  }

  // Edge-reversal check: union directed tetrahedron edges along gluings;
  // an edge class identified with its own reverse is flagged.
  bool edge_reversed = false;
  {
    detail::UnionFind uf(static_cast<std::size_t>(12 * n));
    for (const FaceGluing& g : tri.gluings) {
      std::array<int, 3> vs = face_vertices(g.a.face);
      for (int u : vs)
        for (int v : vs) {
          if (u == v) continue;
          uf.unite(static_cast<std::size_t>(12 * g.a.tet +
                                            directed_edge_index(u, v)),
                   static_cast<std::size_t>(
                       12 * g.b.tet +
                       directed_edge_index(g.perm(u), g.perm(v))));
        }
    }
    for (int t = 0; t < n && !edge_reversed; ++t)
      for (int u = 0; u < 4 && !edge_reversed; ++u)
        for (int v = u + 1; v < 4; ++v)
          if (uf.same(static_cast<std::size_t>(12 * t +
                                               directed_edge_index(u, v)),
                      static_cast<std::size_t>(12 * t +
                                               directed_edge_index(v, u)))) {
            edge_reversed = true;
            break;
          }
  }

  // Boundary surface.
  BoundarySurface surf = boundary_surface(tri);
  rep.boundary_components = surf.components;

  bool torus_boundary = surf.closed_surface_ok &&
                        surf.component_count == 1 &&
                        surf.components.size() == 1 &&
                        surf.components[0].orientable &&
                        surf.components[0].genus.has_value() &&
                        *surf.components[0].genus == 1;
  rep.is_knot_manifold_shaped =
      rep.orientable && rep.vertex_count == 1 && torus_boundary;

  // Diagnostics: index-free so they are stable under tetrahedron
  // relabeling.
  auto& d = rep.diagnostics;
  d.push_back(
      "combinatorial validation only: irreducibility and boundary "
      "incompressibility are not checked");
  d.push_back(rep.orientable ? "orientable" : "not orientable");
  if (edge_reversed)
    d.push_back("an edge class is identified with itself reversing "
                "orientation");
  d.push_back(rep.vertex_count == 1
                  ? "one vertex class"
                  : "vertex classes: " + std::to_string(rep.vertex_count));

  if (surf.triangles.empty()) {
    d.push_back("closed: no boundary faces");
  } else {
    if (!surf.closed_surface_ok)
      d.push_back(
          "degenerate boundary identification: a boundary edge pairs with "
          "itself");
    auto component_text = [](const BoundaryComponentSummary& c) -> std::string {
      if (!c.genus.has_value()) return "not a closed surface";
      if (!c.orientable)
        return "a non-orientable surface (crosscap genus " +
               std::to_string(*c.genus) + ")";
      if (*c.genus == 0) return "a sphere";
      if (*c.genus == 1) return "a torus";
      return "a genus-" + std::to_string(*c.genus) + " surface";
    };
    if (surf.components.size() == 1) {
      d.push_back("boundary is " + component_text(surf.components[0]));
    } else {
      d.push_back("boundary components: " +
                  std::to_string(surf.components.size()));
      std::vector<std::string> lines;
      for (const auto& c : surf.components)
        lines.push_back("boundary component is " + component_text(c));
      std::sort(lines.begin(), lines.end());
      for (auto& s : lines) d.push_back(std::move(s));
    }

    // Locate the vertex relative to the boundary when there is exactly
    // one vertex class.
    if (rep.vertex_count == 1)
      d.push_back("the vertex lies on the boundary");
  }

  d.push_back(rep.is_knot_manifold_shaped
                  ? "knot-manifold-shaped: orientable, one vertex class, "
                    "torus boundary"
                  : "not knot-manifold-shaped");
  return rep;
}

}  // namespace slopecert
