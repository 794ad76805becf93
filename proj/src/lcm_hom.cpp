#include "artin/lcm_hom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace artin {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string gen_name(const Presentation& p, Gen s) { return p.generator(s); }

}  // namespace

GenSet GeneratorMap::image_of(GenSet x) const {
  GenSet out;
  for (Gen s : x.members()) out = out | images.at(s);
  return out;
}

GeneratorMap make_subset_map(std::string name, PresentationPtr source, PresentationPtr target,
                             std::vector<GenSet> images) {
  if (images.size() != source->rank()) throw InputError("map " + name + ": one image per source generator is required");
  GeneratorMap m{std::move(name), std::move(source), std::move(target), false, std::move(images), {}};
  for (std::size_t s = 0; s < m.images.size(); ++s) {
    const GenSet img = m.images[s];
    if (img.empty()) throw InputError("map " + m.name + ": p(" + m.source->generator(static_cast<Gen>(s)) + ") is empty");
    if (!img.subset_of(m.target->all())) throw InputError("map " + m.name + ": image outside the target generators");
    m.words.push_back(is_spherical(*m.target, img) ? delta(m.target, img).word() : Word{});
  }
  return m;
}

GeneratorMap make_substitution_map(std::string name, PresentationPtr source, PresentationPtr target,
                                   std::vector<Word> words) {
  if (words.size() != source->rank()) throw InputError("map " + name + ": one image per source generator is required");
  GeneratorMap m{std::move(name), std::move(source), std::move(target), true, {}, {}};
  for (const Word& w : words) {
    m.images.push_back(GenSet::of(w));
    m.words.push_back(shortlex(*m.target, w));
  }
  return m;
}

GeneratorMap parse_map(std::string_view text, const PresentationLookup& lookup) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string name;
  PresentationPtr src, tgt;
  std::map<Gen, GenSet> subsets;
  std::map<Gen, Word> words;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (toks[0] == "map") {
      if (toks.size() != 6 || toks[2] != "from" || toks[4] != "to" || src)
        throw InputError("expected 'map <name> from <P> to <P'>'" + where);
      name = toks[1];
      src = lookup(toks[3]);
      tgt = lookup(toks[5]);
      if (!src || !tgt)
        throw InputError("map " + name + " references unknown presentation '" + (src ? toks[5] : toks[3]) + "'" + where);
      continue;
    }
    if (!src) throw InputError("map body before the 'map' header" + where);
    if (toks.size() < 3 || (toks[1] != "->" && toks[1] != "=>")) throw InputError("expected 's -> t1 t2 ...' or 's => w'" + where);
    auto s = src->find(toks[0]);
    if (!s) throw InputError("unknown source generator '" + toks[0] + "'" + where);
    if (subsets.count(*s) || words.count(*s)) throw InputError("generator '" + toks[0] + "' mapped twice" + where);
    std::string rest;
    for (std::size_t i = 2; i < toks.size(); ++i) rest += toks[i] + " ";
    if (toks[1] == "->") {
      subsets[*s] = parse_genset(*tgt, rest);
    } else {
      words[*s] = parse_word(*tgt, rest);
    }
  }
  if (!src) throw InputError("map file has no 'map' header");
  if (!subsets.empty() && !words.empty()) throw InputError("map " + name + " mixes '->' and '=>' images");
  if (subsets.size() + words.size() != src->rank()) throw InputError("map " + name + " leaves a source generator unmapped");
  if (!words.empty()) {
    std::vector<Word> ws;
    for (auto& [g, w] : words) ws.push_back(w);
    return make_substitution_map(name, src, tgt, std::move(ws));
  }
  std::vector<GenSet> imgs;
  for (auto& [g, x] : subsets) imgs.push_back(x);
  return make_subset_map(name, src, tgt, std::move(imgs));
}

std::string format_map(const GeneratorMap& m) {
  std::ostringstream out;
  out << "map " << m.name << " from " << m.source->name() << " to " << m.target->name() << '\n';
  for (Gen s = 0; s < m.source->rank(); ++s) {
    out << m.source->generator(s);
    if (m.substitution) {
      out << " => " << format_word(*m.target, m.words[s]);
    } else {
      out << " ->";
      for (Gen t : m.images[s].members()) out << ' ' << m.target->generator(t);
    }
    out << '\n';
  }
  return out.str();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "ok";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Vacuous:
      return "vacuous";
    case Verdict::Skipped:
      return "skipped";
  }
  return {};
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (const auto& e : entries)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

bool AxiomReport::ok(const std::string& axiom) const {
  const AxiomCheck* e = find(axiom);
  return e && (e->verdict == Verdict::Pass || e->verdict == Verdict::Vacuous);
}

bool AxiomReport::lcm_hom() const { return ok("L0") && ok("L1") && ok("L2") && ok("L3"); }

AxiomReport check_generator_map(const GeneratorMap& m) {
  AxiomReport rep;
  const Presentation& src = *m.source;
  const Presentation& tgt = *m.target;
  if (m.substitution) {
    for (const char* ax : {"L0", "L1", "L2", "L3", "L3'"})
      rep.entries.push_back({ax, Verdict::Skipped, "substitution map; the axioms concern subset maps"});
    return rep;
  }
  const std::size_t n = src.rank();

  AxiomCheck l0{"L0", Verdict::Pass, ""};
  for (Gen s = 0; s < n && l0.verdict == Verdict::Pass; ++s)
    for (Gen t = s + 1; t < n; ++t) {
      const GenSet common = m.images[s] & m.images[t];
      if (!common.empty()) {
        l0 = {"L0", Verdict::Fail,
              "p(" + gen_name(src, s) + ") and p(" + gen_name(src, t) + ") share " + format_genset(tgt, common)};
        break;
      }
    }
  rep.entries.push_back(l0);

  AxiomCheck l1{"L1", Verdict::Pass, ""};
  for (Gen s = 0; s < n; ++s)
    if (!is_spherical(tgt, m.images[s])) {
      l1 = {"L1", Verdict::Fail, "p(" + gen_name(src, s) + ") = " + format_genset(tgt, m.images[s]) + " is not spherical"};
      break;
    }
  rep.entries.push_back(l1);

  AxiomCheck l2{"L2", Verdict::Vacuous, ""};
  for (Gen s = 0; s < n && l2.verdict != Verdict::Fail; ++s)
    for (Gen t = s + 1; t < n; ++t) {
      const int bond = src.bond(s, t);
      if (bond == kInfinity) continue;
      if (m.words[s].empty() || m.words[t].empty()) {
        if (l2.verdict != Verdict::Fail) l2 = {"L2", Verdict::Skipped, "needs L1"};
        continue;
      }
      const MonoidElement a = MonoidElement::trusted(m.target, m.words[s]);
      const MonoidElement b = MonoidElement::trusted(m.target, m.words[t]);
      const MonoidElement lhs = bracket(a, b, bond), rhs = bracket(b, a, bond);
      const LcmResult j = left_lcm(a, b);
      const std::string pair = "(" + gen_name(src, s) + "," + gen_name(src, t) + ")";
      if (!(lhs == rhs) || !j.finite() || !(j.value == lhs)) {
        l2 = {"L2", Verdict::Fail,
              pair + ": [D,D'>^" + std::to_string(bond) + " = " + lhs.str() + ", [D',D>^" + std::to_string(bond) +
                  " = " + rhs.str() + ", lcm = " + j.str()};
        break;
      }
      if (l2.verdict == Verdict::Vacuous) l2 = {"L2", Verdict::Pass, ""};
      if (!l2.witness.empty()) l2.witness += "; ";
      l2.witness += pair + ": " + lhs.str();
    }
  rep.entries.push_back(l2);

  AxiomCheck l3{"L3", Verdict::Vacuous, ""};
  AxiomCheck l3w{"L3'", Verdict::Vacuous, ""};
  for (Gen s = 0; s < n; ++s)
    for (Gen t = 0; t < n; ++t) {
      if (s == t || src.bond(s, t) != kInfinity) continue;
      if (l3.verdict == Verdict::Vacuous) l3.verdict = Verdict::Pass;
      if (l3w.verdict == Verdict::Vacuous) l3w.verdict = Verdict::Pass;
      for (Gen u : m.images[s].members()) {
        const GenSet x = m.images[t].with(u);
        if (is_spherical(tgt, x) && l3.verdict == Verdict::Pass)
          l3 = {"L3", Verdict::Fail,
                "(" + gen_name(src, s) + "," + gen_name(src, t) + "): " + format_genset(tgt, x) + " is spherical"};
      }
      const GenSet both = m.images[s] | m.images[t];
      if (is_spherical(tgt, both) && l3w.verdict == Verdict::Pass)
        l3w = {"L3'", Verdict::Fail,
               "(" + gen_name(src, s) + "," + gen_name(src, t) + "): " + format_genset(tgt, both) + " is spherical"};
    }
  rep.entries.push_back(l3);
  rep.entries.push_back(l3w);
  return rep;
}

LcmHom::LcmHom(GeneratorMap m) : map_(std::move(m)), report_(check_generator_map(map_)) {}

void LcmHom::require_usable() const {
  if (usable()) return;
  std::string why;
  for (const auto& e : report_.entries)
    if (e.axiom != "L3'" && e.verdict != Verdict::Pass && e.verdict != Verdict::Vacuous)
      why += " " + e.axiom + " " + verdict_name(e.verdict) + (e.witness.empty() ? "" : " (" + e.witness + ")");
  throw InputError("map " + map_.name + " is not an LCM-homomorphism:" + why);
}

MonoidElement map_positive(const GeneratorMap& m, const MonoidElement& u) {
  if (u.presentation()->id() != m.source->id()) throw InputError("element is not over the source of map " + m.name);
  Word out;
  for (Gen s : u.word()) {
    if (m.words[s].empty()) throw InputError("map " + m.name + ": φ(" + m.source->generator(s) + ") is undefined");
    out.insert(out.end(), m.words[s].begin(), m.words[s].end());
  }
  return MonoidElement(m.target, out);
}

MonoidElement map_positive(const LcmHom& h, const MonoidElement& u) {
  h.require_usable();
  return map_positive(h.map(), u);
}

GroupElement map_group(const GeneratorMap& m, const GroupElement& g) {
  if (g.presentation()->id() != m.source->id()) throw InputError("element is not over the source of map " + m.name);
  Codes out;
  for (Code c : g.codes()) {
    const Word& w = m.words[gen_of(c)];
    if (w.empty()) throw InputError("map " + m.name + ": image of a generator is undefined");
    if (is_inverse(c)) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(code_of(*it, true));
    } else {
      for (Gen x : w) out.push_back(code_of(x, false));
    }
  }
  return GroupElement(m.target, std::move(out));
}

std::pair<GenSet, GenSet> divisor_sets(const GeneratorMap& m, Gen s) {
  GenSet left, right;
  const Word& w = m.words.at(s);
  for (Gen t = 0; t < m.target->rank(); ++t) {
    if (left_quotient(*m.target, {t}, w)) left = left.with(t);
    if (right_quotient(*m.target, {t}, w)) right = right.with(t);
  }
  return {left, right};
}

bool is_symmetric(const GeneratorMap& m) {
  for (Gen s = 0; s < m.source->rank(); ++s) {
    auto [l, r] = divisor_sets(m, s);
    if (!(l == r)) return false;
  }
  return true;
}

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Undetermined:
      return "undetermined";
  }
  return {};
}

Outcome is_lcm_homomorphism(const GeneratorMap& m, std::size_t cutoff) {
  const Presentation& src = *m.source;
  for (Gen s = 0; s < src.rank(); ++s)
    if (m.words[s].empty()) return {Tri::False, "φ(" + src.generator(s) + ") = 1"};
  Outcome out;
  for (Gen s = 0; s < src.rank(); ++s)
    for (Gen t = s + 1; t < src.rank(); ++t) {
      const MonoidElement a = MonoidElement::trusted(m.target, m.words[s]);
      const MonoidElement b = MonoidElement::trusted(m.target, m.words[t]);
      const LcmResult image_join = left_lcm(a, b, cutoff);
      const std::string pair = "(" + src.generator(s) + "," + src.generator(t) + ")";
      if (image_join.kind == LcmResult::Kind::Unknown) {
        out = {Tri::Undetermined, pair + ": " + image_join.str()};
        continue;
      }
      const int bond = src.bond(s, t);
      if (bond == kInfinity) {
        if (image_join.finite()) return {Tri::False, pair + ": source lcm is Infinite, image lcm " + image_join.str()};
        continue;
      }
      const MonoidElement join = bracket(MonoidElement::generator(m.source, s), MonoidElement::generator(m.source, t), bond);
      const MonoidElement mapped = map_positive(m, join);
      if (!image_join.finite() || !(image_join.value == mapped))
        return {Tri::False, pair + ": φ(s∨t) = " + mapped.str() + " but φ(s)∨φ(t) = " + image_join.str()};
    }
  return out;
}

Outcome is_qf_injective(const GeneratorMap& m, std::size_t bound) {
  std::map<Word, Word> seen;  // image -> source
  for (const MonoidElement& x : elements_up_to(m.source, bound)) {
    if (!is_square_free(x)) continue;
    const MonoidElement y = map_positive(m, x);
    if (!is_square_free(y)) return {Tri::False, "φ(" + x.str() + ") = " + y.str() + " is not square-free"};
    auto [it, fresh] = seen.emplace(y.word(), x.word());
    if (!fresh)
      return {Tri::False, "φ(" + x.str() + ") = φ(" + format_word(*m.source, it->second) + ") = " + y.str()};
  }
  return {};
}

WElement map_coxeter(const LcmHom& h, const WElement& w) { return project(map_positive(h, sec_lift(w))); }

Outcome verify_normal_form_preservation(const GeneratorMap& m, const MonoidElement& u) {
  const auto source_nf = normal_form(u);
  std::vector<MonoidElement> mapped;
  for (const auto& g : source_nf) mapped.push_back(map_positive(m, g));
  const auto target_nf = normal_form(map_positive(m, u));
  if (mapped == target_nf) return {};
  return {Tri::False, "u = " + u.str() + ": φ(nf(u)) = " + format_normal_form(mapped) +
                          ", nf(φ(u)) = " + format_normal_form(target_nf)};
}

Outcome verify_lattice_preservation(const GeneratorMap& m, const MonoidElement& u, const MonoidElement& v,
                                    std::size_t cutoff) {
  const MonoidElement fu = map_positive(m, u), fv = map_positive(m, v);
  const std::string pair = "(" + u.str() + ", " + v.str() + ")";
  if (!(map_positive(m, left_gcd(u, v)) == left_gcd(fu, fv))) return {Tri::False, pair + ": left gcd not preserved"};
  if (!(map_positive(m, right_gcd(u, v)) == right_gcd(fu, fv))) return {Tri::False, pair + ": right gcd not preserved"};
  Outcome out;
  for (int side = 0; side < 2; ++side) {
    const LcmResult src = side == 0 ? left_lcm(u, v, cutoff) : right_lcm(u, v, cutoff);
    const LcmResult img = side == 0 ? left_lcm(fu, fv, cutoff) : right_lcm(fu, fv, cutoff);
    const std::string name = side == 0 ? "left lcm" : "right lcm";
    if (src.kind == LcmResult::Kind::Unknown || img.kind == LcmResult::Kind::Unknown) {
      out = {Tri::Undetermined, pair + ": " + name + " " + src.str() + " vs " + img.str()};
      continue;
    }
    if (src.finite() != img.finite()) return {Tri::False, pair + ": " + name + " " + src.str() + " vs " + img.str()};
    if (src.finite() && !(map_positive(m, src.value) == img.value))
      return {Tri::False, pair + ": " + name + " image " + map_positive(m, src.value).str() + " vs " + img.str()};
  }
  return out;
}

bool verify_divisibility_reflection(const GeneratorMap& m, const MonoidElement& u, const MonoidElement& v) {
  const MonoidElement fu = map_positive(m, u), fv = map_positive(m, v);
  return left_divides(u, v) == left_divides(fu, fv) && right_divides(u, v) == right_divides(fu, fv);
}

Fraction map_fraction(const LcmHom& h, const Fraction& f) {
  h.require_usable();
  const GeneratorMap& m = h.map();
  if (!is_spherical(*m.source, m.source->all()) || !is_spherical(*m.target, m.target->all()))
    throw InputError("map_fraction needs spherical source and target");
  Fraction out{map_positive(m, f.neg), map_positive(m, f.pos)};
  const GroupElement g = GroupElement::positive(f.neg).inverse() * GroupElement::positive(f.pos);
  const Fraction direct = coprime_fraction(map_group(m, g));
  if (!left_gcd(out.neg, out.pos).is_identity() || !(direct.neg == out.neg) || !(direct.pos == out.pos))
    throw std::logic_error("fraction " + f.str() + " maps to " + out.str() + ", coprime form is " + direct.str());
  return out;
}

std::optional<std::pair<MonoidElement, MonoidElement>> pullback_factor(const LcmHom& h, const MonoidElement& w,
                                                                        GenSet r, GenSet y) {
  h.require_usable();
  const GeneratorMap& m = h.map();
  const MonoidElement fw = map_positive(m, w);
  const GenSet pr = m.image_of(r);
  GenSet z;
  for (Gen s = 0; s < m.source->rank(); ++s)
    if (m.images[s].subset_of(y)) z = z.with(s);

  // Left divisors of φ(w) inside A_{p(R)}^+, by increasing length.
  auto splits = [](const MonoidElement& x, GenSet left_set, GenSet right_set) -> std::optional<MonoidElement> {
    std::set<Word> seen{Word{}};
    std::vector<Word> layer{Word{}};
    while (!layer.empty()) {
      for (const Word& a : layer) {
        auto rest = left_quotient(x.pres(), a, x.word());
        if (rest && GenSet::of(*rest).subset_of(right_set)) return MonoidElement(x.presentation(), a);
      }
      std::vector<Word> next;
      for (const Word& a : layer)
        for (Gen s : left_set.members()) {
          Word c = shortlex(x.pres(), concat(a, Word{s}));
          if (seen.count(c) || !left_quotient(x.pres(), c, x.word())) continue;
          seen.insert(c);
          next.push_back(std::move(c));
        }
      layer = std::move(next);
    }
    return std::nullopt;
  };

  if (!splits(fw, pr, y)) return std::nullopt;
  auto u = splits(w, r, z);
  if (!u) throw std::logic_error("φ(" + w.str() + ") splits over p(R)·Y but " + w.str() + " has no R·Z split");
  return std::pair{*u, left_complement(*u, w)};
}

bool verify_lemred(const LcmHom& h, Gen s, Gen t, int k) {
  h.require_usable();
  const GeneratorMap& m = h.map();
  const MonoidElement a = MonoidElement::trusted(m.target, m.words[s]);
  const MonoidElement b = MonoidElement::trusted(m.target, m.words[t]);
  if (is_square_free(bracket(a, b, k))) return true;
  const int bond = m.source->bond(s, t);
  return bond != kInfinity && k > bond;
}

}  // namespace artin
