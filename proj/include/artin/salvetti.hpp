#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/lcm_hom.hpp"

namespace artin {

/// A pair (w, T) with T spherical.
struct SalvettiNode {
  WElement w;
  GenSet t;

  std::string str() const;
  friend bool operator==(const SalvettiNode& a, const SalvettiNode& b) { return a.w == b.w && a.t == b.t; }
};

/// (w1,T1) ≤ (w2,T2) iff w1·W_T1 ⊆ w2·W_T2 and ℓ(w_T1) + ℓ(w1^-1 w2) = ℓ(w_T1·w1^-1 w2),
/// where w_T1 is the longest element of W_T1.
bool salvetti_leq(const SalvettiNode& a, const SalvettiNode& b);

/// All nodes W_S × S_f for a spherical presentation.
std::vector<SalvettiNode> salvetti_nodes(const PresentationPtr& p);

/// p̃(w, T) = (φ_W(w), p(T)).
SalvettiNode map_node(const LcmHom& h, const SalvettiNode& n);
/// Same formula without the axiom gate, for negative controls.
SalvettiNode map_node(const GeneratorMap& m, const SalvettiNode& n);

struct PosetCheck {
  bool ok = true;
  std::size_t pairs = 0;
  std::string witness;
};

/// Reflexivity, antisymmetry and transitivity over the given nodes.
PosetCheck check_partial_order(const std::vector<SalvettiNode>& nodes);

/// For every pair: a < b iff p̃(a) < p̃(b), and distinct nodes have distinct images.
PosetCheck verify_lemphi(const LcmHom& h, const std::vector<std::pair<SalvettiNode, SalvettiNode>>& sample);
/// Ungated variant: runs the same comparison for any subset map.
PosetCheck verify_lemphi(const GeneratorMap& m, const std::vector<std::pair<SalvettiNode, SalvettiNode>>& sample);

/// The ordered pairs of a node list, for verify_lemphi.
std::vector<std::pair<SalvettiNode, SalvettiNode>> all_pairs(const std::vector<SalvettiNode>& nodes);

}  // namespace artin
