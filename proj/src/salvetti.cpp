#include "artin/salvetti.hpp"

namespace artin {

std::string SalvettiNode::str() const { return "(" + w.str() + ", " + format_genset(w.pres(), t) + ")"; }

bool salvetti_leq(const SalvettiNode& a, const SalvettiNode& b) {
  if (a.w.presentation()->id() != b.w.presentation()->id()) throw InputError("nodes belong to different presentations");
  if (!a.t.subset_of(b.t)) return false;
  const WElement between = w_multiply(w_inverse(a.w), b.w);
  if (!w_in_parabolic(w_inverse(between), b.t)) return false;
  const WElement top = longest_element(a.w.presentation(), a.t);
  return top.length() + between.length() == w_multiply(top, between).length();
}

std::vector<SalvettiNode> salvetti_nodes(const PresentationPtr& p) {
  std::vector<SalvettiNode> out;
  const auto subsets = spherical_subsets(*p);
  for (const WElement& w : enumerate_parabolic(p, p->all()))
    for (GenSet t : subsets) out.push_back({w, t});
  return out;
}

SalvettiNode map_node(const LcmHom& h, const SalvettiNode& n) { return {map_coxeter(h, n.w), h.map().image_of(n.t)}; }

SalvettiNode map_node(const GeneratorMap& m, const SalvettiNode& n) {
  return {project(map_positive(m, sec_lift(n.w))), m.image_of(n.t)};
}

PosetCheck check_partial_order(const std::vector<SalvettiNode>& nodes) {
  PosetCheck out;
  const std::size_t n = nodes.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = salvetti_leq(nodes[i], nodes[j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) return {false, out.pairs, "not reflexive at " + nodes[i].str()};
    for (std::size_t j = 0; j < n; ++j) {
      ++out.pairs;
      if (i != j && leq[i][j] && leq[j][i])
        return {false, out.pairs, "not antisymmetric: " + nodes[i].str() + ", " + nodes[j].str()};
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k])
          return {false, out.pairs, "not transitive: " + nodes[i].str() + " ≤ " + nodes[j].str() + " ≤ " + nodes[k].str()};
    }
  }
  return out;
}

PosetCheck verify_lemphi(const LcmHom& h, const std::vector<std::pair<SalvettiNode, SalvettiNode>>& sample) {
  h.require_usable();
  return verify_lemphi(h.map(), sample);
}

PosetCheck verify_lemphi(const GeneratorMap& h, const std::vector<std::pair<SalvettiNode, SalvettiNode>>& sample) {
  PosetCheck out;
  for (const auto& [a, b] : sample) {
    ++out.pairs;
    const SalvettiNode fa = map_node(h, a), fb = map_node(h, b);
    const bool src_lt = !(a == b) && salvetti_leq(a, b);
    const bool img_lt = !(fa == fb) && salvetti_leq(fa, fb);
    if (!(a == b) && fa == fb)
      return {false, out.pairs, a.str() + " and " + b.str() + " both map to " + fa.str()};
    if (src_lt != img_lt)
      return {false, out.pairs,
              a.str() + (src_lt ? " < " : " !< ") + b.str() + " but images " + fa.str() + (img_lt ? " < " : " !< ") +
                  fb.str()};
  }
  return out;
}

std::vector<std::pair<SalvettiNode, SalvettiNode>> all_pairs(const std::vector<SalvettiNode>& nodes) {
  std::vector<std::pair<SalvettiNode, SalvettiNode>> out;
  out.reserve(nodes.size() * nodes.size());
  for (const auto& a : nodes)
    for (const auto& b : nodes) out.emplace_back(a, b);
  return out;
}

}  // namespace artin
