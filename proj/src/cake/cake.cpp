#include "chyp/cake/cake.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace chyp {

std::string SliceLabel::to_string() const {
  return (word.size() ? word.to_string() : std::string()) + "C" + std::to_string(k);
}

ProjVector<double> SliceLabel::polar(const Realization& rz) const {
  return realize_word(word, rz)(rz.cfg.p.at(static_cast<std::size_t>(k - 1)));
}

namespace {

bool in(int i, std::initializer_list<int> set) { return std::find(set.begin(), set.end(), i) != set.end(); }

// Index k with W_i C_k = C_1.
int slice_sent_to_c1(int i) {
  if (in(i, {1, 6, 7, 12})) return 1;
  if (in(i, {2, 5, 8, 11})) return 2;
  return 3;
}

SliceLabel label(int prefix, std::string_view tail, int k) { return {cake_prefix(prefix) * Word::parse(tail), k}; }

}  // namespace

std::vector<MappingCheck> verify_mapping_tables(const Realization& rz) {
  const auto& cfg = rz.cfg;
  const std::array<ProjVector<double>, 3> c{cfg.c1, cfg.c2, cfg.c3};
  std::vector<MappingCheck> out;

  struct Gen {
    int letter, from, to;
  };
  const std::array<Gen, 6> gens{{{1, 1, 2}, {1, 2, 1}, {2, 2, 3}, {2, 3, 2}, {3, 1, 1}, {3, 3, 3}}};
  for (const auto& g : gens) {
    const Isometry<double>& r = rz.generator(g.letter);
    const auto f = static_cast<std::size_t>(g.from - 1), to = static_cast<std::size_t>(g.to - 1);
    const std::string lhs = "R" + std::to_string(g.letter);
    out.push_back({lhs + "C" + std::to_string(g.from) + " = C" + std::to_string(g.to), true,
                   projectively_equal(r(cfg.p[f]), cfg.p[to])});
    out.push_back({lhs + "c" + std::to_string(g.from) + " = c" + std::to_string(g.to), true,
                   projectively_equal(r(c[f]), c[to])});
  }
  for (int i = 1; i <= 12; ++i) {
    const int k = slice_sent_to_c1(i);
    const Isometry<double> w = realize_word(cake_prefix(static_cast<std::size_t>(i)), rz);
    const auto ki = static_cast<std::size_t>(k - 1);
    const std::string wi = "W" + std::to_string(i);
    out.push_back({wi + "C" + std::to_string(k) + " = C1", true, projectively_equal(w(cfg.p[ki]), cfg.p[0])});
    out.push_back({wi + "c" + std::to_string(k) + " = c1", true, projectively_equal(w(c[ki]), c[0])});
  }
  const Isometry<double> w1 = realize_word(cake_prefix(1), rz);
  out.push_back({"W1C2 = C1", false, projectively_equal(w1(cfg.p[1]), cfg.p[0])});
  return out;
}

const std::vector<IdentificationSpec>& identification_specs() {
  static const std::vector<IdentificationSpec> specs = [] {
    struct Row {
      int a;
      const char* middle;
      int b;
      int src_prefix;
      const char* src_tail;
      std::array<int, 2> src_k;
      int dst_prefix;
      const char* dst_tail;
      std::array<int, 2> dst_k;
      int src_tri, dst_tri;
    };
    const std::array<Row, 8> rows{{
        {2, "32", 0, 0, "", {2, 3}, 2, "3", {3, 2}, 12, 13},
        {4, "13", 2, 2, "3", {1, 2}, 4, "", {2, 1}, 13, 4},
        {5, "31", 3, 3, "", {2, 1}, 5, "3", {1, 2}, 3, 14},
        {7, "23", 5, 5, "3", {3, 2}, 7, "", {2, 3}, 14, 7},
        {8, "32", 6, 6, "", {2, 3}, 8, "3", {3, 2}, 6, 15},
        {10, "13", 8, 8, "3", {1, 2}, 10, "", {2, 1}, 15, 10},
        {11, "31", 9, 9, "", {2, 1}, 11, "3", {1, 2}, 9, 16},
        {1, "23", 11, 11, "3", {3, 2}, 1, "", {2, 3}, 16, 1},
    }};
    std::vector<IdentificationSpec> out;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const Row& r = rows[j];
      const Word mid = Word::parse(r.middle);
      IdentificationSpec s;
      s.name = "I" + std::to_string(j + 1);
      s.map = cake_prefix(static_cast<std::size_t>(r.a)) * mid * cake_prefix(static_cast<std::size_t>(r.b)).inverse();
      s.map_text = "W" + std::to_string(r.a) + " " + mid.to_string() + " W" + std::to_string(r.b) + "^-1";
      s.source = {label(r.src_prefix, r.src_tail, r.src_k[0]), label(r.src_prefix, r.src_tail, r.src_k[1])};
      s.target = {label(r.dst_prefix, r.dst_tail, r.dst_k[0]), label(r.dst_prefix, r.dst_tail, r.dst_k[1])};
      s.source_triangle = r.src_tri;
      s.target_triangle = r.dst_tri;
      out.push_back(std::move(s));
    }
    return out;
  }();
  return specs;
}

std::vector<IdentificationCheck> verify_identifications(const Realization& rz) {
  std::vector<IdentificationCheck> out;
  for (const auto& s : identification_specs()) {
    const Isometry<double> iso = realize_word(s.map, rz);
    IdentificationCheck c;
    c.name = s.name;
    c.form_residual = form_residual(iso, *rz.gram()) / std::max(1.0, max_abs(rz.gram()->matrix()));
    for (std::size_t e = 0; e < 2; ++e)
      c.endpoints[e] = projectively_equal(iso(s.source[e].polar(rz)), s.target[e].polar(rz));
    out.push_back(c);
  }
  return out;
}

std::array<SliceLabel, 3> CakeTriangle::vertices() const { return {{{word, 1}, {word, 2}, {word, 3}}}; }

namespace {

std::vector<CakeTriangle> cake_triangles() {
  std::vector<CakeTriangle> out;
  for (int i = 1; i <= 12; ++i) out.push_back({i, cake_prefix(static_cast<std::size_t>(i)), in(i, {1, 2, 3, 7, 8, 9})});
  const Word r3 = Word::parse("3");
  out.push_back({13, cake_prefix(2) * r3, false});
  out.push_back({14, cake_prefix(5) * r3, true});
  out.push_back({15, cake_prefix(8) * r3, false});
  out.push_back({16, cake_prefix(11) * r3, true});
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

CakeStructure build_cake(const Realization& rz) {
  CakeStructure cake;
  cake.triangles = cake_triangles();
  cake.all_counterclockwise = std::all_of(cake.triangles.begin(), cake.triangles.end(),
                                          [](const CakeTriangle& t) { return t.counterclockwise(); });

  const ProjVector<double> c1_polar = rz.cfg.p[0];
  const auto same = [&](const SliceLabel& a, const SliceLabel& b) {
    return projectively_equal(a.polar(rz), b.polar(rz));
  };
  const auto tri = [&](int index) -> const CakeTriangle& { return cake.triangles.at(static_cast<std::size_t>(index - 1)); };

  // u_i: the vertex other than C1 shared by Delta_{i-1} and Delta_i.
  std::vector<SliceLabel> u;
  for (int i = 1; i <= 12; ++i) {
    const auto prev = tri(i == 1 ? 12 : i - 1).vertices();
    std::vector<SliceLabel> common;
    for (const auto& v : tri(i).vertices()) {
      if (projectively_equal(v.polar(rz), c1_polar)) continue;
      if (std::any_of(prev.begin(), prev.end(), [&](const SliceLabel& w) { return same(v, w); })) common.push_back(v);
    }
    if (common.size() != 1) throw std::logic_error("triangles around C1 do not share a unique outer vertex");
    u.push_back(common.front());
  }

  const std::array<std::pair<int, int>, 4> attachments{{{2, 13}, {5, 14}, {8, 15}, {11, 16}}};
  for (int i = 1; i <= 12; ++i) {
    const SliceLabel& here = u[static_cast<std::size_t>(i - 1)];
    const SliceLabel& next = u[static_cast<std::size_t>(i % 12)];
    cake.boundary.push_back(here);
    const auto att = std::find_if(attachments.begin(), attachments.end(), [i](const auto& a) { return a.first == i; });
    if (att == attachments.end()) {
      cake.boundary_owner.push_back(i);
      continue;
    }
    std::vector<SliceLabel> apex;
    int shared = 0;
    for (const auto& v : tri(att->second).vertices()) {
      if (same(v, here) || same(v, next))
        ++shared;
      else
        apex.push_back(v);
    }
    if (shared != 2 || apex.size() != 1) throw std::logic_error("attached triangle does not share the outer side");
    cake.boundary_owner.push_back(att->second);
    cake.boundary.push_back(apex.front());
    cake.boundary_owner.push_back(att->second);
  }

  const int n = static_cast<int>(cake.boundary.size());
  const auto position = [&](const SliceLabel& v) {
    int found = -1;
    for (int i = 0; i < n; ++i)
      if (same(v, cake.boundary[static_cast<std::size_t>(i)])) {
        if (found >= 0) throw std::logic_error("slice appears twice on the boundary");
        found = i;
      }
    if (found < 0) throw std::logic_error("slice " + v.to_string() + " is not a boundary vertex");
    return found;
  };
  const auto side_of = [&](const std::array<SliceLabel, 2>& s, int triangle) {
    const int a = position(s[0]), b = position(s[1]);
    int side = -1;
    if ((a + 1) % n == b) side = a;
    if ((b + 1) % n == a) side = b;
    if (side < 0) throw std::logic_error("declared side is not a boundary side");
    if (cake.boundary_owner[static_cast<std::size_t>(side)] != triangle)
      throw std::logic_error("declared side belongs to another triangle");
    return side;
  };

  std::vector<int> uses(static_cast<std::size_t>(n), 0);
  UnionFind uf(static_cast<std::size_t>(n));
  for (const auto& s : identification_specs()) {
    const int src = side_of(s.source, s.source_triangle);
    const int dst = side_of(s.target, s.target_triangle);
    ++uses[static_cast<std::size_t>(src)];
    ++uses[static_cast<std::size_t>(dst)];
    cake.pairings.push_back({s.name, src, dst});
    for (std::size_t e = 0; e < 2; ++e) uf.unite(position(s.source[e]), position(s.target[e]));
  }
  if (std::any_of(uses.begin(), uses.end(), [](int c) { return c != 1; }))
    throw std::logic_error("pairing inconsistency: a boundary side is not paired exactly once");

  std::vector<int> root_to_orbit(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int& o = root_to_orbit[static_cast<std::size_t>(uf.find(i))];
    if (o < 0) o = cake.orbit_count++;
    cake.vertex_orbit.push_back(o);
  }
  cake.edge_pairs = static_cast<int>(cake.pairings.size());
  cake.euler_characteristic = cake.orbit_count - cake.edge_pairs + 1;
  cake.genus = (2 - cake.euler_characteristic) / 2;
  return cake;
}

void dump_cake(std::ostream& os, const CakeStructure& cake) {
  os << "# triangles: index word orientation vertices\n";
  for (const auto& t : cake.triangles) {
    os << "triangle " << t.index << ' ' << (t.word.size() ? t.word.to_string() : "1") << (t.primed ? " base' " : " base ")
       << (t.counterclockwise() ? "ccw" : "cw");
    for (const auto& v : t.vertices()) os << ' ' << v.to_string();
    os << '\n';
  }
  os << "# boundary: position vertex owner-of-next-side orbit\n";
  for (std::size_t i = 0; i < cake.boundary.size(); ++i)
    os << "vertex " << i << ' ' << cake.boundary[i].to_string() << ' ' << cake.boundary_owner[i] << ' '
       << cake.vertex_orbit[i] << '\n';
  os << "# pairings: name source-side target-side (side i joins positions i and i+1)\n";
  const auto& specs = identification_specs();
  for (std::size_t j = 0; j < cake.pairings.size(); ++j) {
    const auto& p = cake.pairings[j];
    os << "pairing " << p.name << ' ' << p.source_side << ' ' << p.target_side << "  " << specs[j].map_text << '\n';
  }
  os << "# summary\n"
     << "vertex_cycles " << cake.orbit_count << '\n'
     << "edge_pairs " << cake.edge_pairs << '\n'
     << "euler_characteristic " << cake.euler_characteristic << '\n'
     << "genus " << cake.genus << '\n'
     << "triangles " << cake.triangles.size() << '\n'
     << "all_counterclockwise " << (cake.all_counterclockwise ? "true" : "false") << '\n';
}

bool H5Check::ok(double tol) const {
  return std::all_of(square_residuals.begin(), square_residuals.end(), [tol](double r) { return r < tol; }) &&
         std::all_of(linear.begin(), linear.end(), [](bool b) { return b; }) && product_residual < 1e-9;
}

H5Check h5_presentation_check(const Realization& rz) {
  const std::array<const char*, 5> words{"1", "2", "323", "313", "0"};
  H5Check out;
  const Mat3<double> id = Mat3<double>::identity();
  for (std::size_t i = 0; i < 5; ++i) {
    const Isometry<double> x = realize_word(Word::parse(words[i]), rz);
    out.linear[i] = !x.antilinear;
    const Isometry<double> sq = x * x;
    out.square_residuals[i] = sq.antilinear ? INFINITY : max_abs_diff(sq.m, id);
  }
  const Isometry<double> prod = realize_word(Word::parse("0313323" "21"), rz);
  const Complex<double> th = theta<double>();
  out.product_scalar = trace(prod.m) / 3.0;
  out.product_residual = prod.antilinear ? INFINITY : max_abs_diff(prod.m, (Complex<double>(1.0) / (th * th)) * id);
  return out;
}

SectorAngleCycle c1_sector_cycle(const Realization& rz) {
  const Angles a = angles(rz.cfg);
  SectorAngleCycle out;
  for (int i = 1; i <= 12; ++i) {
    out.angles[static_cast<std::size_t>(i - 1)] = a.beta[static_cast<std::size_t>(slice_sent_to_c1(i) - 1)];
    out.total += out.angles[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

}  // namespace chyp
