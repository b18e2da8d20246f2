#include "sqmodel/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sqm {

int AbstractDiagram::letter_position(const Face& f, int pos) const {
  const int l = relator_len;
  const int j = f.orientation > 0 ? ((pos - f.start) % l + l) % l : ((f.start - pos) % l + l) % l;
  return j + 1;
}

int AbstractDiagram::letter_sign(const Face& f, int pos) const {
  const int dir = f.sides[static_cast<std::size_t>(pos)] > 0 ? 1 : -1;
  return dir * f.orientation;
}

DiagramEdges collect_edges(const AbstractDiagram& d) {
  DiagramEdges out;
  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    const auto& f = d.faces[fi];
    for (std::size_t pos = 0; pos < f.sides.size(); ++pos) {
      const int ref = f.sides[pos];
      const int id = ref < 0 ? -ref : ref;
      auto it = out.index_of.find(id);
      if (it == out.index_of.end()) {
        it = out.index_of.emplace(id, static_cast<int>(out.edges.size())).first;
        out.edges.push_back({id, {}, std::nullopt});
      }
      out.edges[static_cast<std::size_t>(it->second)].slots.push_back(
          {static_cast<int>(fi), static_cast<int>(pos), ref < 0 ? -1 : 1});
    }
  }
  for (const auto& [id, letter] : d.fixed_edges) {
    const auto it = out.index_of.find(id);
    if (it != out.index_of.end()) out.edges[static_cast<std::size_t>(it->second)].fixed = letter;
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

DiagramVertices derive_vertices(const AbstractDiagram& d, const DiagramEdges& e) {
  const int ne = static_cast<int>(e.edges.size());
  UnionFind uf(2 * ne);  // token 2i = tail of edge i, 2i+1 = head

  const auto start_token = [&](const DiagramEdges::Slot& s, const AbstractDiagram::Face& f) {
    const int ei = e.index_of.at(std::abs(f.sides[static_cast<std::size_t>(s.pos)]));
    return s.dir > 0 ? 2 * ei : 2 * ei + 1;
  };
  const auto end_token = [&](const DiagramEdges::Slot& s, const AbstractDiagram::Face& f) {
    const int ei = e.index_of.at(std::abs(f.sides[static_cast<std::size_t>(s.pos)]));
    return s.dir > 0 ? 2 * ei + 1 : 2 * ei;
  };

  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    const auto& f = d.faces[fi];
    const int l = static_cast<int>(f.sides.size());
    for (int pos = 0; pos < l; ++pos) {
      const int next = (pos + 1) % l;
      DiagramEdges::Slot cur{static_cast<int>(fi), pos, f.sides[static_cast<std::size_t>(pos)] < 0 ? -1 : 1};
      DiagramEdges::Slot nxt{static_cast<int>(fi), next, f.sides[static_cast<std::size_t>(next)] < 0 ? -1 : 1};
      uf.unite(end_token(cur, f), start_token(nxt, f));
    }
  }

  DiagramVertices v;
  std::vector<int> label(2 * ne, -1);
  v.tail_class.resize(ne);
  v.head_class.resize(ne);
  for (int i = 0; i < 2 * ne; ++i) {
    const int root = uf.find(i);
    if (label[root] < 0) label[root] = v.count++;
    (i % 2 == 0 ? v.tail_class[i / 2] : v.head_class[i / 2]) = label[root];
  }
  v.valence.assign(v.count, 0);
  v.on_boundary.assign(v.count, false);
  for (int i = 0; i < ne; ++i) {
    ++v.valence[v.tail_class[i]];
    ++v.valence[v.head_class[i]];
    if (e.boundary(i)) {
      v.on_boundary[v.tail_class[i]] = true;
      v.on_boundary[v.head_class[i]] = true;
    }
  }
  return v;
}

std::vector<std::string> validate(const AbstractDiagram& d) {
  std::vector<std::string> defects;
  const auto flag = [&](std::string msg) { defects.push_back(std::move(msg)); };

  if (d.relator_len < 2) flag("relator length must be at least 2");
  if (d.faces.empty()) flag("diagram has no faces");

  std::vector<int> ids;
  for (const auto& f : d.faces) {
    ids.push_back(f.id);
    if (static_cast<int>(f.sides.size()) != d.relator_len)
      flag("face " + std::to_string(f.id) + " does not have " + std::to_string(d.relator_len) + " sides");
    for (const int ref : f.sides)
      if (ref == 0) flag("face " + std::to_string(f.id) + " references edge 0");
    if (f.orientation != 1 && f.orientation != -1)
      flag("face " + std::to_string(f.id) + " has orientation outside {+1,-1}");
    if (f.start < 0 || f.start >= d.relator_len)
      flag("face " + std::to_string(f.id) + " has start offset outside [0," +
           std::to_string(d.relator_len) + ")");
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) flag("duplicate face id");
  if (!defects.empty()) return defects;

  const DiagramEdges e = collect_edges(d);
  for (const auto& edge : e.edges) {
    if (edge.slots.size() > 2)
      flag("edge " + std::to_string(edge.id) + " has " + std::to_string(edge.slots.size()) + " slots");
    else if (edge.slots.size() == 2 && edge.slots[0].dir * edge.slots[1].dir != -1)
      flag("edge " + std::to_string(edge.id) + " is traversed twice in the same direction");
  }
  {
    std::vector<int> fixed_ids;
    for (const auto& [id, letter] : d.fixed_edges) {
      fixed_ids.push_back(id);
      if (!e.index_of.count(id)) flag("fixed edge " + std::to_string(id) + " does not exist");
    }
    std::sort(fixed_ids.begin(), fixed_ids.end());
    if (std::adjacent_find(fixed_ids.begin(), fixed_ids.end()) != fixed_ids.end())
      flag("duplicate fixed edge");
  }
  if (!defects.empty()) return defects;

  // Connectivity over faces through shared edges.
  {
    UnionFind uf(static_cast<int>(d.faces.size()));
    for (const auto& edge : e.edges)
      if (edge.slots.size() == 2) uf.unite(edge.slots[0].face, edge.slots[1].face);
    const int root = uf.find(0);
    for (int f = 1; f < static_cast<int>(d.faces.size()); ++f)
      if (uf.find(f) != root) {
        flag("diagram is not connected");
        break;
      }
  }

  const DiagramVertices v = derive_vertices(d, e);
  const int chi = v.count - static_cast<int>(e.edges.size()) + static_cast<int>(d.faces.size());
  if (chi != 1)
    flag("Euler characteristic is " + std::to_string(chi) + ", expected 1");
  return defects;
}

DiagramStats diagram_stats(const AbstractDiagram& d) {
  const DiagramEdges e = collect_edges(d);
  DiagramStats s;
  s.faces = static_cast<int>(d.faces.size());
  s.relator_len = d.relator_len;
  s.fixed_edges = static_cast<int>(d.fixed_edges.size());
  s.total_boundary_sum = s.relator_len * s.faces;
  for (std::size_t i = 0; i < e.edges.size(); ++i)
    if (e.boundary(static_cast<int>(i))) ++s.boundary_length;
  return s;
}

bool is_reduced(const AbstractDiagram& d) {
  const DiagramEdges e = collect_edges(d);
  for (const auto& edge : e.edges) {
    if (edge.slots.size() != 2) continue;
    const auto& f1 = d.faces[static_cast<std::size_t>(edge.slots[0].face)];
    const auto& f2 = d.faces[static_cast<std::size_t>(edge.slots[1].face)];
    if (f1.cls != f2.cls || f1.orientation == f2.orientation) continue;
    if (d.letter_position(f1, edge.slots[0].pos) == d.letter_position(f2, edge.slots[1].pos))
      return false;
  }
  return true;
}

OwnershipReport ownership(const AbstractDiagram& d) {
  const DiagramEdges e = collect_edges(d);
  OwnershipReport rep;

  // Rank classes by decreasing multiplicity, ties by class id.
  std::map<int, int> mult;
  for (const auto& f : d.faces) ++mult[f.cls];
  std::vector<std::pair<int, int>> order;  // (class id, multiplicity)
  for (const auto& [cls, m] : mult) order.emplace_back(cls, m);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::map<int, int> rank;  // class id -> 1-based ownership rank
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i].first] = static_cast<int>(i) + 1;
    rep.class_order.push_back(order[i].first);
    rep.multiplicity.push_back(order[i].second);
  }

  rep.delta.assign(d.faces.size(), 0);
  rep.owners.assign(e.edges.size(), {});
  for (std::size_t ei = 0; ei < e.edges.size(); ++ei) {
    const auto& edge = e.edges[ei];
    const bool fixed = edge.fixed.has_value();
    if (edge.slots.size() == 1) {
      if (fixed) rep.owners[ei].push_back(edge.slots[0].face);
    } else {
      if (fixed) {
        rep.owners[ei].push_back(edge.slots[0].face);
        if (edge.slots[1].face != edge.slots[0].face)
          rep.owners[ei].push_back(edge.slots[1].face);
        else
          rep.owners[ei].push_back(edge.slots[0].face);  // both slots on one face
      } else {
        const auto& f1 = d.faces[static_cast<std::size_t>(edge.slots[0].face)];
        const auto& f2 = d.faces[static_cast<std::size_t>(edge.slots[1].face)];
        const std::pair<int, int> key1{rank.at(f1.cls), d.letter_position(f1, edge.slots[0].pos)};
        const std::pair<int, int> key2{rank.at(f2.cls), d.letter_position(f2, edge.slots[1].pos)};
        if (key1 == key2) {
          if (f1.orientation != f2.orientation)
            throw std::invalid_argument("ownership requires a reduced diagram");
          rep.never_fulfillable.push_back(edge.id);
          continue;
        }
        rep.owners[ei].push_back(key1 > key2 ? edge.slots[0].face : edge.slots[1].face);
      }
    }
    for (const int f : rep.owners[ei]) ++rep.delta[static_cast<std::size_t>(f)];
  }

  rep.kappa.assign(order.size(), 0);
  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    const int r = rank.at(d.faces[fi].cls) - 1;
    rep.kappa[static_cast<std::size_t>(r)] =
        std::max(rep.kappa[static_cast<std::size_t>(r)], rep.delta[fi]);
  }
  return rep;
}

bool iso_check(const DiagramStats& stats, const Density& d, double eps) {
  if (stats.relator_len != 4) throw std::invalid_argument("iso_check requires relator length 4");
  return static_cast<double>(stats.boundary_length) >=
         4.0 * (1.0 - 2.0 * d.value() - eps) * static_cast<double>(stats.faces);
}

double bound_exponent(const DiagramStats& stats, const Density& d, int relator_len) {
  if (stats.faces < 1) throw std::invalid_argument("bound_exponent requires at least one face");
  const double per_face =
      static_cast<double>(stats.boundary_length - 2 * stats.fixed_edges) /
      static_cast<double>(stats.faces);
  return 0.5 * (per_face - relator_len * (1.0 - 2.0 * d.value()));
}

FulfillmentBound fulfillment_bound(const DiagramStats& stats, std::uint64_t n, const Density& d,
                                   ModelKind model) {
  FulfillmentBound b;
  b.exponent = bound_exponent(stats, d, stats.relator_len);
  b.vacuous = b.exponent >= 0.0;
  const double base = model == ModelKind::PositiveSquare ? static_cast<double>(n)
                                                         : static_cast<double>(2 * n - 1);
  b.probability = std::min(1.0, std::pow(base, b.exponent));
  return b;
}

std::vector<int> parity_defects(const AbstractDiagram& d) {
  const DiagramEdges e = collect_edges(d);
  const DiagramVertices v = derive_vertices(d, e);
  std::vector<int> defects;
  for (int c = 0; c < v.count; ++c)
    if (!v.on_boundary[c] && v.valence[c] % 2 == 1) defects.push_back(c);
  return defects;
}

std::vector<Fulfillment> find_fulfillments(const AbstractDiagram& d,
                                           std::span<const Relator> relators,
                                           std::size_t max_results) {
  if (d.relator_len != 4)
    throw std::invalid_argument("fulfillment search requires relator length 4");
  const DiagramEdges e = collect_edges(d);

  // An internal edge whose slots demand both w_k^s and w_k^{-s} can never be
  // labeled: the letter would be its own inverse.
  for (const auto& edge : e.edges) {
    if (edge.slots.size() != 2) continue;
    const auto& f1 = d.faces[static_cast<std::size_t>(edge.slots[0].face)];
    const auto& f2 = d.faces[static_cast<std::size_t>(edge.slots[1].face)];
    if (f1.cls != f2.cls) continue;
    if (d.letter_position(f1, edge.slots[0].pos) != d.letter_position(f2, edge.slots[1].pos))
      continue;
    if (d.letter_sign(f1, edge.slots[0].pos) != d.letter_sign(f2, edge.slots[1].pos))
      return {};
  }

  // Classes in ownership order, with their letter constraints.
  struct Constraint {
    int edge_index;
    int k;     // 1-based relator position
    int sign;  // intrinsic letter = w_k^sign
  };
  std::map<int, std::vector<Constraint>> constraints;
  std::map<int, int> mult;
  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    const auto& f = d.faces[fi];
    ++mult[f.cls];
    for (std::size_t pos = 0; pos < f.sides.size(); ++pos) {
      const int ei = e.index_of.at(std::abs(f.sides[pos]));
      constraints[f.cls].push_back(
          {ei, d.letter_position(f, static_cast<int>(pos)), d.letter_sign(f, static_cast<int>(pos))});
    }
  }
  std::vector<int> class_order;
  for (const auto& [cls, m] : mult) class_order.push_back(cls);
  std::sort(class_order.begin(), class_order.end(),
            [&](int a, int b) { return mult[a] != mult[b] ? mult[a] > mult[b] : a < b; });

  std::vector<std::optional<Letter>> letters(e.edges.size());
  for (std::size_t i = 0; i < e.edges.size(); ++i) letters[i] = e.edges[i].fixed;

  std::vector<Fulfillment> results;
  std::vector<bool> used(relators.size(), false);
  std::vector<std::pair<int, Relator>> chosen;

  const auto apply_class = [&](int cls, const Relator& w, std::vector<int>& touched) {
    for (const Constraint& c : constraints[cls]) {
      const Letter want =
          c.sign > 0 ? w.letters[static_cast<std::size_t>(c.k - 1)]
                     : w.letters[static_cast<std::size_t>(c.k - 1)].inverse();
      if (letters[static_cast<std::size_t>(c.edge_index)].has_value()) {
        if (*letters[static_cast<std::size_t>(c.edge_index)] != want) return false;
      } else {
        letters[static_cast<std::size_t>(c.edge_index)] = want;
        touched.push_back(c.edge_index);
      }
    }
    return true;
  };

  const std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (results.size() >= max_results) return;
    if (depth == class_order.size()) {
      Fulfillment f;
      f.by_class = chosen;
      std::sort(f.by_class.begin(), f.by_class.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      results.push_back(std::move(f));
      return;
    }
    const int cls = class_order[depth];
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      if (used[ri]) continue;
      std::vector<int> touched;
      if (apply_class(cls, relators[ri], touched)) {
        used[ri] = true;
        chosen.emplace_back(cls, relators[ri]);
        recurse(depth + 1);
        chosen.pop_back();
        used[ri] = false;
      }
      for (const int ei : touched) letters[static_cast<std::size_t>(ei)].reset();
      if (results.size() >= max_results) return;
    }
  };
  recurse(0);
  return results;
}

namespace {

AbstractDiagram::Face& face_by_id(AbstractDiagram& d, int id, std::size_t lineno) {
  for (auto& f : d.faces)
    if (f.id == id) return f;
  throw std::runtime_error("diagram file: unknown face " + std::to_string(id) + " at line " +
                           std::to_string(lineno));
}

}  // namespace

AbstractDiagram read_diagram(std::istream& is) {
  AbstractDiagram d;
  d.relator_len = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    if (d.relator_len == 0) {
      if (line.rfind("l=", 0) != 0)
        throw std::runtime_error("diagram file: first line must be l=<int>");
      d.relator_len = std::stoi(line.substr(2));
      continue;
    }
    std::string kind;
    row >> kind;
    if (kind == "face") {
      AbstractDiagram::Face f;
      row >> f.id;
      int ref;
      while (row >> ref) f.sides.push_back(ref);
      if (static_cast<int>(f.sides.size()) != d.relator_len)
        throw std::runtime_error("diagram file: face needs " + std::to_string(d.relator_len) +
                                 " sides at line " + std::to_string(lineno));
      d.faces.push_back(std::move(f));
    } else if (kind == "class") {
      int id, cls;
      if (!(row >> id >> cls))
        throw std::runtime_error("diagram file: malformed class line " + std::to_string(lineno));
      face_by_id(d, id, lineno).cls = cls;
    } else if (kind == "orient") {
      int id;
      std::string o;
      if (!(row >> id >> o) || (o != "+" && o != "-"))
        throw std::runtime_error("diagram file: malformed orient line " + std::to_string(lineno));
      face_by_id(d, id, lineno).orientation = o == "+" ? 1 : -1;
    } else if (kind == "start") {
      int id, s;
      if (!(row >> id >> s))
        throw std::runtime_error("diagram file: malformed start line " + std::to_string(lineno));
      face_by_id(d, id, lineno).start = s;
    } else if (kind == "fixed") {
      int id, code;
      if (!(row >> id >> code) || code == 0)
        throw std::runtime_error("diagram file: malformed fixed line " + std::to_string(lineno));
      d.fixed_edges.emplace_back(id, Letter(code));
    } else {
      throw std::runtime_error("diagram file: unknown directive '" + kind + "' at line " +
                               std::to_string(lineno));
    }
  }
  if (d.relator_len == 0) throw std::runtime_error("diagram file: empty input");
  return d;
}

void write_diagram(std::ostream& os, const AbstractDiagram& d) {
  os << "l=" << d.relator_len << "\n";
  for (const auto& f : d.faces) {
    os << "face " << f.id;
    for (const int ref : f.sides) os << ' ' << ref;
    os << "\n";
  }
  for (const auto& f : d.faces) os << "class " << f.id << ' ' << f.cls << "\n";
  for (const auto& f : d.faces) os << "orient " << f.id << ' ' << (f.orientation > 0 ? '+' : '-') << "\n";
  for (const auto& f : d.faces) os << "start " << f.id << ' ' << f.start << "\n";
  for (const auto& [id, letter] : d.fixed_edges) os << "fixed " << id << ' ' << letter.code() << "\n";
}

AbstractDiagram load_diagram(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return read_diagram(is);
}

void save_diagram(const std::string& path, const AbstractDiagram& d) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_diagram(os, d);
}

}  // namespace sqm
