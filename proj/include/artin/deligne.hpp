#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/group.hpp"
#include "artin/lcm_hom.hpp"

namespace artin {

/// Raised when an explored ball is too small for the question asked.
class RadiusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InputError naming the obstruction when p is not of FC type.
void require_fc(const Presentation& p);

/// The coset x·A_X, X spherical. Written `word@{X}`.
struct Vertex {
  GroupElement rep;
  GenSet x;
  std::string str() const;
};

Vertex parse_vertex(const PresentationPtr& p, std::string_view text);
Vertex origin(const PresentationPtr& p);

/// Same subset and rep(a)^-1·rep(b) ∈ A_X.
bool vertex_equal(const Vertex& a, const Vertex& b);
/// a ⊆ b as cosets: X_a ⊆ X_b and rep(b)^-1·rep(a) ∈ A_{X_b}.
bool vertex_leq(const Vertex& a, const Vertex& b);

/// K(c·A_R, c·A_T): the vertices c·A_X with R ⊆ X ⊆ T.
struct Cube {
  GroupElement rep;
  GenSet r;
  GenSet t;
  std::size_t dimension() const { return (t - r).size(); }
  std::vector<Vertex> vertices() const;
  std::string str() const;
};

Cube point_cube(const Vertex& v);
bool cube_contains(const Cube& c, const Vertex& v);

/// Smallest cube containing both, if any cube does.
std::optional<Cube> cube_span(const Cube& a, const Cube& b);
std::optional<Cube> cube_span(const Vertex& a, const Vertex& b);

/// v lies in Et(C), the union of the cubes containing C.
bool in_star(const Cube& c, const Vertex& v);
/// Vertices of D lying in Et(C).
std::vector<Vertex> star_meets(const Cube& c, const Cube& d);

using CubePath = std::vector<Vertex>;
std::string format_path(const CubePath& path);

struct PathCheck {
  bool ok = true;
  std::string reason;
};

/// Consecutive vertices distinct, consecutive spans exist, and
/// Et(C_i) ∩ C_{i+1} = {x_i} for every interior vertex x_i.
PathCheck check_normal_cube_path(const CubePath& path);
inline bool is_normal_cube_path(const CubePath& path) { return check_normal_cube_path(path).ok; }

/// Vertices reachable from the centers in at most `radius` moves. A move goes up
/// x·A_X → x·A_{X∪s}, or down x·A_X → x·h·A_{X∖s} with h or h^-1 a square-free
/// element of A_X^+. Equal cosets are merged.
class Ball {
 public:
  Ball(PresentationPtr p, int radius);
  Ball(PresentationPtr p, const std::vector<Vertex>& centers, int radius);

  const PresentationPtr& presentation() const { return pres_; }
  int radius() const { return radius_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int depth(std::size_t i) const { return depth_[i]; }
  /// Move-graph edges (i < j).
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::optional<std::size_t> find(const Vertex& v) const;
  std::size_t require(const Vertex& v, const char* role) const;

  /// Ball vertices sharing a cube with vertex i, with the spanning cube.
  const std::vector<std::pair<std::size_t, Cube>>& cube_neighbours(std::size_t i) const;

 private:
  std::string key(const Vertex& v) const;
  std::size_t insert(Vertex v, int depth, bool& fresh);

  PresentationPtr pres_;
  int radius_;
  std::vector<Vertex> vertices_;
  std::vector<int> depth_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets_;
  mutable std::vector<std::optional<std::vector<std::pair<std::size_t, Cube>>>> neighbours_;
};

/// Every normal cube path from `root` that stays inside the ball, keyed by end
/// vertex. Normal paths are unique, so a second path to the same end is recorded
/// in `conflicts`.
struct PathTree {
  std::size_t root = 0;
  std::map<std::size_t, std::vector<std::size_t>> paths;
  std::vector<std::string> conflicts;
};
PathTree normal_paths_from(const Ball& ball, std::size_t root);

/// The normal cube path from x to y found inside the ball. Throws RadiusError
/// when none stays inside, std::logic_error when two are found.
CubePath normal_cube_path(const Ball& ball, const Vertex& x, const Vertex& y);

/// Φ_p(x·A_X) = φ_p(x)·A_{p(X)}.
Vertex phi_vertex(const LcmHom& h, const Vertex& v);

struct ProccnResult {
  bool ok = true;
  std::string detail;
  CubePath source;
  CubePath image;
};

/// Maps the normal path x → y through Φ_p and checks that the image is the
/// normal path Φ(x) → Φ(y): directly against the definition, and against a
/// path search in the radius-`target_radius` neighbourhood of the image path.
ProccnResult verify_proccn(const LcmHom& h, const Ball& source_ball, const Vertex& x, const Vertex& y,
                           int target_radius);

struct InjectivityResult {
  bool ok = true;
  std::size_t words = 0;
  std::size_t elements = 0;
  std::size_t compared = 0;
  std::string detail;
};

/// Group elements of word length <= L have pairwise distinct images; Φ is
/// injective on the identity-rep vertices; and Φ(g·v) = φ(g)·Φ(v) on a sample.
InjectivityResult verify_injectivity_ball(const LcmHom& h, int length_bound);

/// All freely reduced words of length <= L, grouped into distinct group elements.
std::vector<GroupElement> distinct_elements(const PresentationPtr& p, int length_bound, std::size_t* words = nullptr);

/// DOT rendering of a cube path: one cluster per cube, the path edges in bold.
std::string cube_path_dot(const CubePath& path);
/// DOT rendering of a ball's move graph.
std::string ball_dot(const Ball& ball);

}  // namespace artin
