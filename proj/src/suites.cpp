#include "artin/suites.hpp"

#include <set>

#include "artin/deligne.hpp"
#include "artin/salvetti.hpp"

namespace artin {

namespace {

Check start(const std::string& subject, const std::string& property) { return {subject, property, Status::Pass, 0, ""}; }

bool gated_out(const LcmHom& h, Check& c) {
  if (h.map().substitution) {
    c.status = Status::Skipped;
    c.detail = "substitution map";
    return true;
  }
  if (!h.usable()) {
    c.status = Status::Rejected;
    for (const AxiomCheck& a : h.report().entries)
      if (a.verdict == Verdict::Fail) {
        c.detail = a.axiom + " fails";
        break;
      }
    return true;
  }
  return false;
}

// A failure on a map that lacks the hypotheses of the property is reported, not counted.
void expect(Check& c, bool hypotheses, const char* missing) {
  if (c.status != Status::Fail || hypotheses) return;
  c.status = Status::ExpectedFail;
  c.detail += std::string(" (") + missing + ")";
}

bool spherical(const PresentationPtr& p) { return is_spherical(*p, p->all()); }

void fail(Check& c, std::string detail) {
  c.status = Status::Fail;
  c.detail = std::move(detail);
}

void from_outcome(Check& c, const Outcome& o) {
  if (o.value == Tri::False) fail(c, o.witness);
  if (o.value == Tri::Undetermined) {
    c.status = Status::Unknown;
    c.detail = o.witness;
  }
}

// Reduced elements of W_S up to the given length.
std::vector<WElement> w_ball(const PresentationPtr& p, std::size_t bound) {
  std::vector<WElement> out{w_canonical(p, {})};
  std::set<Word> seen{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].length() == bound) continue;
    for (Gen s = 0; s < p->rank(); ++s) {
      WElement next = w_multiply(out[i], WElement::trusted(p, {s}));
      if (next.length() > out[i].length() && seen.insert(next.word()).second) out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

Check check_axioms(const LcmHom& h) {
  Check c = start(h.map().name, "LCM-homomorphism axioms");
  c.cases = h.report().entries.size();
  if (h.map().substitution) {
    c.status = Status::Skipped;
    c.detail = "substitution map";
    return c;
  }
  if (!h.usable()) {
    c.status = Status::Rejected;
    for (const AxiomCheck& a : h.report().entries)
      if (a.verdict == Verdict::Fail) {
        c.detail = a.axiom + ": " + a.witness;
        break;
      }
    return c;
  }
  for (const AxiomCheck& a : h.report().entries) {
    if (!c.detail.empty()) c.detail += ", ";
    c.detail += a.axiom + " " + verdict_name(a.verdict);
  }
  return c;
}

Check check_generator_lcms(const GeneratorMap& m, std::size_t cutoff) {
  Check c = start(m.name, "generator lcms preserved");
  const std::size_t n = m.source->rank();
  c.cases = n * (n + 1) / 2;
  from_outcome(c, is_lcm_homomorphism(m, cutoff));
  expect(c, m.substitution || check_generator_map(m).lcm_hom(), "map fails the axioms");
  return c;
}

Check check_normal_forms(const GeneratorMap& m, std::size_t bound) {
  Check c = start(m.name, "normal forms preserved");
  const bool hypotheses = is_lcm_homomorphism(m).ok() && is_symmetric(m);
  for (const MonoidElement& u : elements_up_to(m.source, bound)) {
    ++c.cases;
    const Outcome o = verify_normal_form_preservation(m, u);
    if (o.ok()) continue;
    fail(c, o.witness);
    expect(c, hypotheses, "map is not a symmetric lcm-homomorphism");
    break;
  }
  return c;
}

Check check_qf_injective(const GeneratorMap& m, std::size_t bound) {
  Check c = start(m.name, "square-free elements mapped injectively to square-free");
  c.cases = elements_up_to(m.source, bound).size();
  from_outcome(c, is_qf_injective(m, bound));
  expect(c, is_lcm_homomorphism(m).ok(), "map is not an lcm-homomorphism");
  return c;
}

Check check_lattice(const LcmHom& h, std::size_t bound, std::size_t cutoff) {
  Check c = start(h.map().name, "gcds and lcms preserved");
  if (gated_out(h, c)) return c;
  const auto elems = elements_up_to(h.map().source, bound);
  for (const auto& u : elems)
    for (const auto& v : elems) {
      ++c.cases;
      const Outcome o = verify_lattice_preservation(h.map(), u, v, cutoff);
      if (o.ok()) continue;
      from_outcome(c, o);
      c.detail = "(" + u.str() + ", " + v.str() + "): " + o.witness;
      return c;
    }
  return c;
}

Check check_divisibility(const LcmHom& h, std::size_t bound) {
  Check c = start(h.map().name, "divisibility reflected");
  if (gated_out(h, c)) return c;
  const auto elems = elements_up_to(h.map().source, bound);
  for (const auto& u : elems)
    for (const auto& v : elems) {
      ++c.cases;
      if (!verify_divisibility_reflection(h.map(), u, v)) {
        fail(c, "(" + u.str() + ", " + v.str() + ")");
        return c;
      }
    }
  return c;
}

Check check_fractions(const LcmHom& h, std::size_t count) {
  Check c = start(h.map().name, "coprime fractions preserved");
  if (gated_out(h, c)) return c;
  if (!spherical(h.map().source) || !spherical(h.map().target)) {
    c.status = Status::Skipped;
    c.detail = "source or target not spherical";
    return c;
  }
  std::vector<GroupElement> elems;
  for (int len = 1; elems.size() < count && len <= 8; ++len) elems = distinct_elements(h.map().source, len);
  if (elems.size() > count) elems.resize(count);
  for (const GroupElement& g : elems) {
    ++c.cases;
    try {
      map_fraction(h, coprime_fraction(g));
    } catch (const std::logic_error& e) {
      fail(c, e.what());
      return c;
    }
  }
  return c;
}

Check check_coxeter_injective(const LcmHom& h, std::size_t bound) {
  Check c = start(h.map().name, "Coxeter images injective");
  if (gated_out(h, c)) return c;
  const PresentationPtr& src = h.map().source;
  const auto elems = spherical(src) ? enumerate_parabolic(src, src->all()) : w_ball(src, bound);
  std::map<Word, WElement> seen;
  for (const WElement& w : elems) {
    ++c.cases;
    const WElement img = map_coxeter(h, w);
    auto [it, fresh] = seen.emplace(img.word(), w);
    if (!fresh) {
      fail(c, it->second.str() + " and " + w.str() + " both map to " + img.str());
      return c;
    }
  }
  c.detail = std::to_string(elems.size()) + " elements to " + std::to_string(seen.size()) + " images";
  return c;
}

Check check_lemred(const LcmHom& h, int max_k) {
  Check c = start(h.map().name, "non-square-free brackets need a finite bond");
  if (gated_out(h, c)) return c;
  const std::size_t n = h.map().source->rank();
  for (Gen s = 0; s < n; ++s)
    for (Gen t = 0; t < n; ++t) {
      if (s == t) continue;
      for (int k = 1; k <= max_k; ++k) {
        ++c.cases;
        if (!verify_lemred(h, s, t, k)) {
          fail(c, "[" + h.map().source->generator(s) + ", " + h.map().source->generator(t) + "⟩^" + std::to_string(k));
          return c;
        }
      }
    }
  return c;
}

Check check_salvetti_map(const LcmHom& h) {
  Check c = start(h.map().name, "Salvetti order strictly preserved");
  if (gated_out(h, c)) return c;
  if (!spherical(h.map().source) || !spherical(h.map().target)) {
    c.status = Status::Skipped;
    c.detail = "source or target not spherical";
    return c;
  }
  const PosetCheck r = verify_lemphi(h, all_pairs(salvetti_nodes(h.map().source)));
  c.cases = r.pairs;
  if (!r.ok) fail(c, r.witness);
  return c;
}

Check check_proccn(const LcmHom& h, int radius) {
  Check c = start(h.map().name, "normal cube paths mapped to normal cube paths");
  if (gated_out(h, c)) return c;
  const GeneratorMap& m = h.map();
  if (!is_fc(*m.source) || !is_fc(*m.target)) {
    c.status = Status::Skipped;
    c.detail = "source or target not of FC type";
    return c;
  }
  const Ball ball(m.source, radius + 2);
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (ball.depth(i) <= radius) inner.push_back(i);
  for (std::size_t i : inner)
    for (std::size_t j : inner) {
      if (i == j) continue;
      ++c.cases;
      try {
        const ProccnResult r = verify_proccn(h, ball, ball.vertices()[i], ball.vertices()[j], 1);
        if (!r.ok) {
          fail(c, r.detail);
          return c;
        }
      } catch (const RadiusError& e) {
        c.status = Status::Unknown;
        c.detail = e.what();
        return c;
      }
    }
  return c;
}

Check check_vertex_injective(const LcmHom& h, int radius) {
  Check c = start(h.map().name, "Φ injective on ball vertices");
  if (gated_out(h, c)) return c;
  const GeneratorMap& m = h.map();
  if (!is_fc(*m.source) || !is_fc(*m.target)) {
    c.status = Status::Skipped;
    c.detail = "source or target not of FC type";
    return c;
  }
  const Ball ball(m.source, radius);
  std::vector<Vertex> images;
  for (const Vertex& v : ball.vertices()) images.push_back(phi_vertex(h, v));
  c.cases = images.size();
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (vertex_equal(images[i], images[j])) {
        fail(c, ball.vertices()[i].str() + " and " + ball.vertices()[j].str() + " both map to " + images[i].str());
        return c;
      }
  return c;
}

Check check_group_injective(const LcmHom& h, int length_bound) {
  Check c = start(h.map().name, "φ injective on short words");
  if (gated_out(h, c)) return c;
  const GeneratorMap& m = h.map();
  if (!is_fc(*m.source) || !is_fc(*m.target)) {
    c.status = Status::Skipped;
    c.detail = "source or target not of FC type";
    return c;
  }
  const InjectivityResult r = verify_injectivity_ball(h, length_bound);
  c.cases = r.elements;
  if (!r.ok) fail(c, r.detail);
  else
    c.detail = std::to_string(r.words) + " words, " + std::to_string(r.elements) + " elements";
  return c;
}

Check check_delta(const PresentationPtr& p) {
  Check c = start(p->name(), "Δ_T = lcm of T = lift of longest element");
  for (GenSet t : spherical_subsets(*p)) {
    if (t.empty()) continue;
    ++c.cases;
    const MonoidElement d = delta(p, t);
    MonoidElement left = MonoidElement::identity(p), right = left;
    for (Gen s : t.members()) {
      const MonoidElement g = MonoidElement::generator(p, s);
      const LcmResult l = left_lcm(left, g), r = right_lcm(right, g);
      if (!l.finite() || !r.finite()) {
        fail(c, "lcm of " + format_genset(*p, t) + " not found");
        return c;
      }
      left = l.value;
      right = r.value;
    }
    const MonoidElement lifted = sec_lift(longest_element(p, t));
    if (!(d == left) || !(d == right) || !(d == lifted)) {
      fail(c, format_genset(*p, t) + ": Δ = " + d.str() + ", left lcm " + left.str() + ", right lcm " + right.str() +
                  ", lift " + lifted.str());
      return c;
    }
  }
  if (c.cases == 0) c.status = Status::Skipped;
  return c;
}

Check check_normal_paths(const PresentationPtr& p, int radius) {
  Check c = start(p->name(), "normal cube paths exist and are unique");
  if (!is_fc(*p)) {
    c.status = Status::Skipped;
    c.detail = "not of FC type";
    return c;
  }
  const Ball ball(p, radius + 2);
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (ball.depth(i) <= radius) inner.push_back(i);
  for (std::size_t i : inner) {
    const PathTree tree = normal_paths_from(ball, i);
    if (!tree.conflicts.empty()) {
      fail(c, tree.conflicts.front());
      return c;
    }
    for (std::size_t j : inner) {
      ++c.cases;
      auto it = tree.paths.find(j);
      if (it == tree.paths.end()) {
        c.status = Status::Unknown;
        c.detail = "no normal path from " + ball.vertices()[i].str() + " to " + ball.vertices()[j].str() +
                   " inside radius " + std::to_string(ball.radius());
        return c;
      }
      CubePath path;
      for (std::size_t k : it->second) path.push_back(ball.vertices()[k]);
      const PathCheck pc = check_normal_cube_path(path);
      if (!pc.ok) {
        fail(c, format_path(path) + ": " + pc.reason);
        return c;
      }
    }
  }
  c.detail = std::to_string(inner.size()) + " vertices";
  return c;
}

Check check_salvetti_order(const PresentationPtr& p) {
  Check c = start(p->name(), "Salvetti order is a partial order");
  if (!spherical(p)) {
    c.status = Status::Skipped;
    c.detail = "not spherical";
    return c;
  }
  const PosetCheck r = check_partial_order(salvetti_nodes(p));
  c.cases = r.pairs;
  if (!r.ok) fail(c, r.witness);
  return c;
}

Check check_fc_refusal(const PresentationPtr& p) {
  Check c = start(p->name(), "Deligne operations refuse non-FC input");
  if (is_fc(*p)) {
    c.status = Status::Skipped;
    c.detail = "of FC type";
    return c;
  }
  c.cases = 1;
  try {
    Ball ball(p, 1);
    fail(c, "ball built on a presentation that is not of FC type");
  } catch (const InputError& e) {
    c.detail = e.what();
  }
  return c;
}

Check check_lcm_cutoff(const PresentationPtr& p, std::size_t cutoff) {
  Check c = start(p->name(), "lcm beyond the cutoff is reported unknown");
  const auto bad = fc_obstruction(*p);
  if (!bad) {
    c.status = Status::Skipped;
    c.detail = "of FC type";
    return c;
  }
  const auto gens = bad->members();
  Word rest(gens.begin() + 1, gens.end());
  const MonoidElement u = MonoidElement::generator(p, gens.front()), v(p, rest);
  const LcmResult r = left_lcm(u, v, cutoff);
  c.cases = 1;
  c.detail = u.str() + " ∨ " + v.str() + " = " + r.str();
  if (r.kind == LcmResult::Kind::Finite) {
    if (!left_divides(u, r.value) || !left_divides(v, r.value)) fail(c, c.detail + " is not a common multiple");
  } else if (r.kind == LcmResult::Kind::Unknown && r.bound != cutoff) {
    fail(c, c.detail + " does not name the cutoff " + std::to_string(cutoff));
  }
  return c;
}

Report map_suite(const GeneratorMap& m, const Options& o) {
  const LcmHom h(m);
  const std::size_t bound = static_cast<std::size_t>(o.bound);
  Report r;
  r.add(check_axioms(h));
  r.add(check_generator_lcms(m, o.cutoff));
  r.add(check_normal_forms(m, bound + 1));
  r.add(check_qf_injective(m, bound));
  r.add(check_lattice(h, bound > 1 ? bound - 1 : bound, o.cutoff));
  r.add(check_divisibility(h, bound));
  r.add(check_fractions(h, 50));
  r.add(check_coxeter_injective(h, bound));
  r.add(check_lemred(h, 6));
  r.add(check_salvetti_map(h));
  r.add(check_proccn(h, o.radius));
  r.add(check_vertex_injective(h, o.radius));
  r.add(check_group_injective(h, o.bound));
  return r;
}

Report presentation_suite(const PresentationPtr& p, const Options& o) {
  Report r;
  r.add(check_delta(p));
  r.add(check_salvetti_order(p));
  if (is_fc(*p)) {
    r.add(check_normal_paths(p, o.radius));
  } else {
    r.add(check_fc_refusal(p));
    r.add(check_lcm_cutoff(p, o.cutoff));
  }
  return r;
}

Report verify_all(const Workspace& ws, const Options& o) {
  Report r;
  for (const auto& p : ws.presentations()) r.append(presentation_suite(p, o));
  for (const auto& m : ws.maps()) r.append(map_suite(m, o));
  return r;
}

}  // namespace artin
