#include "artin/deligne.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "artin/coxeter.hpp"

namespace artin {

namespace {

std::string vertex_text(const Presentation& p, const GroupElement& rep, GenSet x) {
  return rep.str() + "@" + format_genset(p, x);
}

// Minimal (R1, R2) double coset representative of the Coxeter image of g is
// trivial whenever g ∈ A_R1·A_R2; used to skip hopeless membership questions.
bool coxeter_double_coset_trivial(const GroupElement& g, GenSet r1, GenSet r2) {
  const PresentationPtr& p = g.presentation();
  WElement w = w_canonical(p, coxeter_image(g));
  for (bool shrank = true; shrank && !w.is_identity();) {
    shrank = false;
    for (Gen s : r1.members()) {
      WElement v = w_multiply(WElement::trusted(p, {s}), w);
      if (v.length() < w.length()) w = std::move(v), shrank = true;
    }
    for (Gen s : r2.members()) {
      WElement v = w_multiply(w, WElement::trusted(p, {s}));
      if (v.length() < w.length()) w = std::move(v), shrank = true;
    }
  }
  return w.is_identity();
}

// Exponent sums over classes of generators joined by odd bonds: the abelianization.
std::vector<int> abelian_image(const GroupElement& g) {
  const Presentation& p = g.pres();
  std::vector<std::size_t> parent(p.rank());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
  for (Gen s = 0; s < p.rank(); ++s)
    for (Gen t = s + 1; t < p.rank(); ++t) {
      const int m = p.bond(s, t);
      if (m != kInfinity && m % 2 == 1) parent[root(s)] = root(t);
    }
  std::vector<int> out(p.rank(), 0);
  for (Code c : g.codes()) out[root(gen_of(c))] += is_inverse(c) ? -1 : 1;
  return out;
}

std::string element_key(const GroupElement& g) {
  std::string key;
  for (Gen s : coxeter_image(g)) key += static_cast<char>('A' + s);
  key += '|';
  for (int e : abelian_image(g)) key += std::to_string(e) + ",";
  return key;
}

}  // namespace

void require_fc(const Presentation& p) {
  if (auto bad = fc_obstruction(p))
    throw InputError("presentation " + p.name() + " is not of FC type: " + format_genset(p, *bad) +
                     " has only finite bonds but is not spherical; Deligne complex operations need FC type");
}

std::string Vertex::str() const { return vertex_text(rep.pres(), rep, x); }

Vertex parse_vertex(const PresentationPtr& p, std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw InputError("vertex must be written word@{X}: '" + std::string(text) + "'");
  Vertex v{parse_group_word(p, text.substr(0, at)), parse_genset(*p, text.substr(at + 1))};
  if (!is_spherical(*p, v.x)) throw InputError("vertex subset " + format_genset(*p, v.x) + " is not spherical");
  return v;
}

Vertex origin(const PresentationPtr& p) { return {GroupElement::identity(p), GenSet{}}; }

bool vertex_equal(const Vertex& a, const Vertex& b) {
  if (!(a.x == b.x)) return false;
  return in_parabolic(a.rep.inverse() * b.rep, a.x);
}

bool vertex_leq(const Vertex& a, const Vertex& b) {
  if (!a.x.subset_of(b.x)) return false;
  return in_parabolic(b.rep.inverse() * a.rep, b.x);
}

std::vector<Vertex> Cube::vertices() const {
  std::vector<Vertex> out;
  const std::uint32_t free = (t - r).bits();
  // enumerate subsets of T∖R in increasing bit order
  for (std::uint32_t sub = 0;; sub = (sub - free) & free) {
    out.push_back({rep, r | GenSet(sub)});
    if (sub == free) break;
  }
  std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) { return a.x < b.x; });
  return out;
}

std::string Cube::str() const {
  const Presentation& p = rep.pres();
  return "K(" + vertex_text(p, rep, r) + ", " + vertex_text(p, rep, t) + ")";
}

Cube point_cube(const Vertex& v) { return {v.rep, v.x, v.x}; }

bool cube_contains(const Cube& c, const Vertex& v) {
  if (!c.r.subset_of(v.x) || !v.x.subset_of(c.t)) return false;
  return in_parabolic(c.rep.inverse() * v.rep, v.x);
}

std::optional<Cube> cube_span(const Cube& a, const Cube& b) {
  const Presentation& p = a.rep.pres();
  const GenSet top = a.t | b.t;
  if (!is_spherical(p, top)) return std::nullopt;
  const GroupElement g = a.rep.inverse() * b.rep;
  if (!coxeter_double_coset_trivial(g, a.r, b.r)) return std::nullopt;
  auto h = double_coset_witness(g, a.r, b.r);
  if (!h) return std::nullopt;
  return Cube{a.rep * *h, a.r & b.r, top};
}

std::optional<Cube> cube_span(const Vertex& a, const Vertex& b) { return cube_span(point_cube(a), point_cube(b)); }

bool in_star(const Cube& c, const Vertex& v) { return cube_span(c, point_cube(v)).has_value(); }

std::vector<Vertex> star_meets(const Cube& c, const Cube& d) {
  std::vector<Vertex> out;
  for (const Vertex& v : d.vertices())
    if (in_star(c, v)) out.push_back(v);
  return out;
}

std::string format_path(const CubePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += " -> ";
    out += path[i].str();
  }
  return out;
}

PathCheck check_normal_cube_path(const CubePath& path) {
  std::optional<Cube> prev;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (vertex_equal(path[i - 1], path[i])) return {false, "x" + std::to_string(i - 1) + " = x" + std::to_string(i)};
    auto cube = cube_span(path[i - 1], path[i]);
    if (!cube) return {false, "no cube contains x" + std::to_string(i - 1) + " and x" + std::to_string(i)};
    if (prev) {
      for (const Vertex& v : cube->vertices()) {
        if (vertex_equal(v, path[i - 1])) continue;
        if (in_star(*prev, v))
          return {false, "Et(C" + std::to_string(i - 1) + ") meets C" + std::to_string(i) + " at " + v.str()};
      }
    }
    prev = cube;
  }
  return {};
}

Ball::Ball(PresentationPtr p, int radius) : Ball(p, {origin(p)}, radius) {}

Ball::Ball(PresentationPtr p, const std::vector<Vertex>& centers, int radius) : pres_(std::move(p)), radius_(radius) {
  require_fc(*pres_);
  if (radius < 0) throw InputError("ball radius must be non-negative");
  std::vector<std::size_t> frontier;
  for (const Vertex& c : centers) {
    bool fresh = false;
    std::size_t i = insert(c, 0, fresh);
    if (fresh) frontier.push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  std::map<std::uint32_t, std::vector<Word>> square_free;
  for (int d = 1; d <= radius; ++d) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      const Vertex v = vertices_[i];
      std::vector<Vertex> moves;
      for (Gen s = 0; s < pres_->rank(); ++s)
        if (!v.x.contains(s) && is_spherical(*pres_, v.x.with(s))) moves.push_back({v.rep, v.x.with(s)});
      if (!v.x.empty()) {
        auto it = square_free.find(v.x.bits());
        if (it == square_free.end()) {
          std::vector<Word> words;
          for (const WElement& w : enumerate_parabolic(pres_, v.x)) words.push_back(w.word());
          it = square_free.emplace(v.x.bits(), std::move(words)).first;
        }
        for (Gen s : v.x.members())
          for (const Word& h : it->second) {
            const GroupElement hp = GroupElement::positive(pres_, h);
            moves.push_back({v.rep * hp, v.x.without(s)});
            if (!h.empty()) moves.push_back({v.rep * hp.inverse(), v.x.without(s)});
          }
      }
      for (Vertex& m : moves) {
        bool fresh = false;
        std::size_t j = insert(std::move(m), d, fresh);
        if (j != i) edge_set.emplace(std::min(i, j), std::max(i, j));
        if (fresh) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  neighbours_.resize(vertices_.size());
}

std::string Ball::key(const Vertex& v) const {
  const WElement img = w_canonical(pres_, coxeter_image(v.rep));
  std::string k = std::to_string(v.x.bits()) + ":";
  const WElement rep = min_coset_rep(img, v.x);
  for (Gen s : rep.word()) k += static_cast<char>('A' + s);
  return k;
}

std::size_t Ball::insert(Vertex v, int depth, bool& fresh) {
  auto& bucket = buckets_[key(v)];
  for (std::size_t i : bucket)
    if (vertex_equal(vertices_[i], v)) {
      fresh = false;
      // keep the shortest representative so printed paths do not depend on discovery order
      const GroupElement& old = vertices_[i].rep;
      if (std::pair(v.rep.length(), v.rep.codes()) < std::pair(old.length(), old.codes())) vertices_[i].rep = v.rep;
      return i;
    }
  fresh = true;
  vertices_.push_back(std::move(v));
  depth_.push_back(depth);
  bucket.push_back(vertices_.size() - 1);
  return vertices_.size() - 1;
}

std::optional<std::size_t> Ball::find(const Vertex& v) const {
  auto it = buckets_.find(key(v));
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t i : it->second)
    if (vertex_equal(vertices_[i], v)) return i;
  return std::nullopt;
}

std::size_t Ball::require(const Vertex& v, const char* role) const {
  auto i = find(v);
  if (!i)
    throw RadiusError(std::string(role) + " vertex " + v.str() + " is outside the explored ball of radius " +
                      std::to_string(radius_));
  return *i;
}

const std::vector<std::pair<std::size_t, Cube>>& Ball::cube_neighbours(std::size_t i) const {
  if (!neighbours_[i]) {
    std::vector<std::pair<std::size_t, Cube>> out;
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (j == i) continue;
      if (auto c = cube_span(vertices_[i], vertices_[j])) out.emplace_back(j, *c);
    }
    neighbours_[i] = std::move(out);
  }
  return *neighbours_[i];
}

PathTree normal_paths_from(const Ball& ball, std::size_t root) {
  PathTree tree;
  tree.root = root;
  tree.paths[root] = {root};
  std::vector<std::size_t> path{root};
  std::vector<char> on_path(ball.size(), 0);
  on_path[root] = 1;
  std::function<void(const std::optional<Cube>&)> grow = [&](const std::optional<Cube>& prev) {
    const std::size_t cur = path.back();
    for (const auto& [next, cube] : ball.cube_neighbours(cur)) {
      if (on_path[next]) continue;
      if (prev) {
        bool normal = true;
        for (const Vertex& v : cube.vertices()) {
          if (vertex_equal(v, ball.vertices()[cur])) continue;
          if (in_star(*prev, v)) {
            normal = false;
            break;
          }
        }
        if (!normal) continue;
      }
      path.push_back(next);
      on_path[next] = 1;
      auto [it, fresh] = tree.paths.emplace(next, path);
      if (!fresh) {
        std::string a, b;
        for (std::size_t k : it->second) a += ball.vertices()[k].str() + " ";
        for (std::size_t k : path) b += ball.vertices()[k].str() + " ";
        tree.conflicts.push_back("two normal paths to " + ball.vertices()[next].str() + ": " + a + "| " + b);
      } else {
        grow(cube);
      }
      on_path[next] = 0;
      path.pop_back();
    }
  };
  grow(std::nullopt);
  return tree;
}

CubePath normal_cube_path(const Ball& ball, const Vertex& x, const Vertex& y) {
  const std::size_t i = ball.require(x, "start");
  const std::size_t j = ball.require(y, "end");
  PathTree tree = normal_paths_from(ball, i);
  if (!tree.conflicts.empty()) throw std::logic_error(tree.conflicts.front());
  auto it = tree.paths.find(j);
  if (it == tree.paths.end())
    throw RadiusError("no normal cube path from " + x.str() + " to " + y.str() + " stays inside the ball of radius " +
                      std::to_string(ball.radius()));
  CubePath out;
  for (std::size_t k : it->second) out.push_back(ball.vertices()[k]);
  return out;
}

Vertex phi_vertex(const LcmHom& h, const Vertex& v) {
  h.require_usable();
  return {map_group(h.map(), v.rep), h.map().image_of(v.x)};
}

ProccnResult verify_proccn(const LcmHom& h, const Ball& source_ball, const Vertex& x, const Vertex& y,
                           int target_radius) {
  h.require_usable();
  require_fc(*h.map().target);
  ProccnResult out;
  out.source = normal_cube_path(source_ball, x, y);
  for (const Vertex& v : out.source) out.image.push_back(phi_vertex(h, v));
  PathCheck direct = check_normal_cube_path(out.image);
  if (!direct.ok) {
    out.ok = false;
    out.detail = "image path is not normal: " + direct.reason;
    return out;
  }
  Ball target(h.map().target, out.image, target_radius);
  CubePath found = normal_cube_path(target, out.image.front(), out.image.back());
  bool same = found.size() == out.image.size();
  for (std::size_t i = 0; same && i < found.size(); ++i) same = vertex_equal(found[i], out.image[i]);
  if (!same) {
    out.ok = false;
    out.detail = "image " + format_path(out.image) + " differs from target search " + format_path(found);
  }
  return out;
}

std::vector<GroupElement> distinct_elements(const PresentationPtr& p, int length_bound, std::size_t* words) {
  std::vector<Codes> all{Codes{}};
  std::vector<Codes> layer{Codes{}};
  for (int len = 1; len <= length_bound; ++len) {
    std::vector<Codes> next;
    for (const Codes& w : layer)
      for (Code c = 0; c < 2 * p->rank(); ++c) {
        if (!w.empty() && (w.back() ^ 1) == c) continue;
        Codes e = w;
        e.push_back(c);
        next.push_back(std::move(e));
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  if (words) *words = all.size();
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  std::vector<GroupElement> out;
  for (const Codes& w : all) {
    GroupElement g(p, w);
    auto& bucket = buckets[element_key(g)];
    bool seen = false;
    for (std::size_t i : bucket)
      if (g_equal(out[i], g)) {
        seen = true;
        break;
      }
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(g));
  }
  return out;
}

InjectivityResult verify_injectivity_ball(const LcmHom& h, int length_bound) {
  h.require_usable();
  const GeneratorMap& m = h.map();
  require_fc(*m.source);
  require_fc(*m.target);
  InjectivityResult out;
  const auto elems = distinct_elements(m.source, length_bound, &out.words);
  out.elements = elems.size();

  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  std::vector<GroupElement> images;
  for (const GroupElement& g : elems) {
    GroupElement img = map_group(m, g);
    auto& bucket = buckets[element_key(img)];
    for (std::size_t i : bucket) {
      ++out.compared;
      if (g_equal(images[i], img)) {
        out.ok = false;
        out.detail = "φ(" + elems[i].str() + ") = φ(" + g.str() + ")";
        return out;
      }
    }
    bucket.push_back(images.size());
    images.push_back(std::move(img));
  }

  // identity-rep vertices: X ↦ p(X) must be injective with spherical values
  std::set<std::uint32_t> seen;
  for (GenSet x : spherical_subsets(*m.source)) {
    const GenSet px = m.image_of(x);
    if (!is_spherical(*m.target, px) || !seen.insert(px.bits()).second) {
      out.ok = false;
      out.detail = "Φ is not injective on the fundamental domain at " + format_genset(*m.source, x);
      return out;
    }
  }

  // equivariance on a small sample: Φ(g·v) = φ(g)·Φ(v)
  Ball ball(m.source, 1);
  for (const GroupElement& g : distinct_elements(m.source, std::min(length_bound, 2)))
    for (const Vertex& v : ball.vertices()) {
      const Vertex moved{g * v.rep, v.x};
      const Vertex lhs = phi_vertex(h, moved);
      const Vertex pv = phi_vertex(h, v);
      const Vertex rhs{map_group(m, g) * pv.rep, pv.x};
      if (!vertex_equal(lhs, rhs)) {
        out.ok = false;
        out.detail = "Φ(g·v) ≠ φ(g)·Φ(v) for g = " + g.str() + ", v = " + v.str();
        return out;
      }
    }
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string cube_path_dot(const CubePath& path) {
  std::ostringstream out;
  out << "graph cube_path {\n  node [shape=box, fontname=\"monospace\"];\n";
  // every vertex of every cube, deduplicated by coset
  std::vector<Vertex> nodes;
  auto index = [&](const Vertex& v) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (vertex_equal(nodes[i], v)) return i;
    nodes.push_back(v);
    return nodes.size() - 1;
  };
  std::vector<std::size_t> on_path;
  for (const Vertex& v : path) on_path.push_back(index(v));
  std::vector<std::pair<Cube, std::vector<std::size_t>>> cubes;
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto c = cube_span(path[i - 1], path[i]);
    if (!c) throw InputError("consecutive path vertices share no cube");
    std::vector<std::size_t> members;
    for (const Vertex& v : c->vertices()) members.push_back(index(v));
    cubes.emplace_back(*c, std::move(members));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const bool highlighted = std::find(on_path.begin(), on_path.end(), i) != on_path.end();
    out << "  v" << i << " [label=\"" << dot_escape(nodes[i].str()) << "\"" << (highlighted ? ", penwidth=2" : "")
        << "];\n";
  }
  for (std::size_t k = 0; k < cubes.size(); ++k) {
    out << "  subgraph cluster_" << k << " {\n    label=\"C" << (k + 1) << " = " << dot_escape(cubes[k].first.str())
        << "\";\n   ";
    for (std::size_t i : cubes[k].second) out << " v" << i << ";";
    out << "\n  }\n";
  }
  for (std::size_t i = 1; i < on_path.size(); ++i)
    out << "  v" << on_path[i - 1] << " -- v" << on_path[i] << " [penwidth=3, color=red];\n";
  out << "}\n";
  return out.str();
}

std::string ball_dot(const Ball& ball) {
  std::ostringstream out;
  out << "graph ball {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < ball.size(); ++i)
    out << "  v" << i << " [label=\"" << dot_escape(ball.vertices()[i].str()) << "\"];\n";
  for (const auto& [a, b] : ball.edges()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace artin
