#include "artin/group.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>
#include <unordered_map>

#include "artin/coxeter.hpp"

namespace artin {

namespace {

using MaybeCodes = std::optional<Codes>;

GenSet support_of(const Codes& w) {
  GenSet out;
  for (Code c : w) out = out.with(gen_of(c));
  return out;
}

Codes positive_codes(const Word& w) {
  Codes out;
  out.reserve(w.size());
  for (Gen g : w) out.push_back(code_of(g, false));
  return out;
}

Codes join(Codes a, const Codes& b) {
  a.insert(a.end(), b.begin(), b.end());
  return free_reduce(std::move(a));
}

Codes power(const Codes& w, std::size_t k) {
  Codes out;
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::string cache_key(char tag, const Presentation& p, GenSet a, GenSet b, GenSet c, const Codes& w) {
  std::string key(1 + 8 + 12, '\0');
  key[0] = tag;
  const std::uint64_t id = p.id();
  const std::uint32_t bits[3] = {a.bits(), b.bits(), c.bits()};
  std::memcpy(key.data() + 1, &id, 8);
  std::memcpy(key.data() + 9, bits, 12);
  key.append(w.begin(), w.end());
  return key;
}

struct Caches {
  std::unordered_map<std::string, MaybeCodes> member;
  std::unordered_map<std::string, MaybeCodes> dcoset;
  std::map<std::pair<std::uint64_t, std::uint32_t>, std::vector<Gen>> tau;
};

thread_local Caches caches;

// τ(s) = t where Δ_U·s = t·Δ_U.
const std::vector<Gen>& garside_automorphism(const PresentationPtr& p, GenSet u) {
  auto key = std::pair{p->id(), u.bits()};
  if (auto it = caches.tau.find(key); it != caches.tau.end()) return it->second;
  const Word d = delta(p, u).word();
  std::vector<Gen> tau(p->rank());
  for (Gen s = 0; s < p->rank(); ++s) tau[s] = s;
  for (Gen s : u.members()) {
    auto q = right_quotient(*p, d, shortlex(*p, concat(d, Word{s})));
    if (!q || q->size() != 1) throw std::logic_error("garside automorphism: Δ·s is not t·Δ");
    tau[s] = (*q)[0];
  }
  return caches.tau.emplace(key, std::move(tau)).first->second;
}

struct WordFraction {
  Word neg;
  Word pos;
};

// g = Δ^-k · pos, maintained letter by letter, using s^-1 = ∂s·Δ^-1 with
// s·∂s = Δ, and Q·Δ^-1 = Δ^-1·τ(Q).
WordFraction fraction_words(const PresentationPtr& pp, const Codes& w, GenSet u) {
  const Presentation& p = *pp;
  const Word d = delta(pp, u).word();
  const auto& tau = garside_automorphism(pp, u);
  std::size_t k = 0;
  Word pos;
  for (Code c : w) {
    const Gen s = gen_of(c);
    if (!is_inverse(c)) {
      pos.push_back(s);
      continue;
    }
    auto complement = left_quotient(p, {s}, d);
    pos = concat(std::move(pos), *complement);
    for (Gen& g : pos) g = tau[g];
    ++k;
    pos = shortlex(p, pos);
    while (k > 0) {
      auto q = left_quotient(p, d, pos);
      if (!q) break;
      pos = std::move(*q);
      --k;
    }
  }
  pos = shortlex(p, pos);
  while (k > 0) {
    auto q = left_quotient(p, d, pos);
    if (!q) break;
    pos = shortlex(p, *q);
    --k;
  }
  Word neg;
  for (std::size_t i = 0; i < k; ++i) neg.insert(neg.end(), d.begin(), d.end());
  MonoidElement a(pp, neg), b(pp, pos);
  MonoidElement g = left_gcd(a, b);
  if (!g.is_identity()) {
    a = left_complement(g, a);
    b = left_complement(g, b);
  }
  return {a.word(), b.word()};
}

Codes fraction_codes(const WordFraction& f) {
  Codes out;
  for (auto it = f.neg.rbegin(); it != f.neg.rend(); ++it) out.push_back(code_of(*it, true));
  for (Gen g : f.pos) out.push_back(code_of(g, false));
  return out;
}

MaybeCodes member(const PresentationPtr& pp, const Codes& w, GenSet t, GenSet u);

struct Syllable {
  Codes codes;
  int tag = 0;  // 1: contains the U1-only generator, 2: the U2-only generator, 0: inside U0
};

int tag_of(const Codes& w, Gen x, Gen y) {
  for (Code c : w) {
    if (gen_of(c) == x) return 1;
    if (gen_of(c) == y) return 2;
  }
  return 0;
}

// Amalgam A_U = A_{U1} *_{A_{U0}} A_{U2} with U1 = U∖y, U2 = U∖x and m_{x,y} = ∞.
// Returns alternating syllables with none lying in A_{U0}, except that a lone
// syllable inside A_{U0} comes back with tag 0.
std::vector<Syllable> amalgam_reduce(const PresentationPtr& pp, const Codes& w, GenSet u, Gen x, Gen y) {
  const GenSet u1 = u.without(y), u2 = u.without(x), u0 = u1 & u2;
  std::vector<Syllable> syl;
  for (Code c : w) {
    const Gen g = gen_of(c);
    const int tag = g == x ? 1 : g == y ? 2 : 0;
    if (syl.empty() || (tag != 0 && syl.back().tag != 0 && syl.back().tag != tag)) {
      syl.push_back({{c}, tag});
    } else {
      syl.back().codes.push_back(c);
      if (tag != 0) syl.back().tag = tag;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < syl.size(); ++i) {
      Codes replacement;
      if (syl[i].codes.empty()) {
        replacement = {};
      } else if (syl[i].tag == 0) {
        if (syl.size() == 1) break;
        replacement = syl[i].codes;
      } else {
        auto wit = member(pp, syl[i].codes, u0, syl[i].tag == 1 ? u1 : u2);
        if (!wit) continue;
        replacement = *wit;
      }
      if (syl.size() == 1) {
        syl[0] = {replacement, 0};
        if (replacement.empty()) syl.clear();
        changed = true;
        break;
      }
      if (i == 0) {
        syl[1].codes = join(replacement, syl[1].codes);
        syl.erase(syl.begin());
      } else if (i + 1 == syl.size()) {
        syl[i - 1].codes = join(syl[i - 1].codes, replacement);
        syl.pop_back();
      } else {
        Codes merged = join(join(syl[i - 1].codes, replacement), syl[i + 1].codes);
        syl[i - 1].codes = std::move(merged);
        syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(i), syl.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      }
      for (auto& s : syl) {
        const int tag = tag_of(s.codes, x, y);
        s.tag = tag;
      }
      changed = true;
      break;
    }
  }
  return syl;
}

MaybeCodes dcoset(const PresentationPtr& pp, const Codes& x, GenSet z, GenSet y, GenSet u);

// Δ_Z^{2N}·x·Δ_Y^{2N} is positive and splits as A_Z^+·A_Y^+ for large N exactly
// when x ∈ A_Z·A_Y. The search stops at N = ⌈n/2⌉ + 1 for n negative letters.
MaybeCodes dcoset_spherical(const PresentationPtr& pp, const Codes& x, GenSet z, GenSet y, GenSet u) {
  const Presentation& p = *pp;
  std::size_t neg = 0;
  for (Code c : x) neg += is_inverse(c);
  const Codes dz = positive_codes(delta(pp, z).word());
  const Codes dy = positive_codes(delta(pp, y).word());
  const std::size_t last = (neg + 1) / 2 + 1;
  for (std::size_t n = 0; n <= last; ++n) {
    Codes q = join(join(power(dz, 2 * n), x), power(dy, 2 * n));
    WordFraction f = fraction_words(pp, q, u);
    if (!f.neg.empty()) continue;
    Word head, rest = f.pos;
    for (bool grew = true; grew;) {
      grew = false;
      for (Gen s : z.members())
        if (auto r = left_quotient(p, {s}, rest)) {
          head.push_back(s);
          rest = std::move(*r);
          grew = true;
          break;
        }
    }
    if (!GenSet::of(rest).subset_of(y)) continue;
    return join(invert(power(dz, 2 * n)), positive_codes(head));
  }
  return std::nullopt;
}

MaybeCodes dcoset(const PresentationPtr& pp, const Codes& x, GenSet z, GenSet y, GenSet u) {
  if (y.subset_of(z)) return member(pp, x, z, u);
  if (z.subset_of(y)) {
    if (member(pp, x, y, u)) return Codes{};
    return std::nullopt;
  }
  const std::string key = cache_key('d', *pp, z, y, u, x);
  if (auto it = caches.dcoset.find(key); it != caches.dcoset.end()) return it->second;
  MaybeCodes out;
  if (is_spherical(*pp, u)) {
    // x ∈ A_Z·A_Y lies in A_{Z∪Y}, where the double coset question is spherical.
    const GenSet zy = z | y;
    auto in_zy = member(pp, x, zy, u);
    if (in_zy) out = dcoset_spherical(pp, *in_zy, z, y, zy);
  } else {
    throw Unsupported("double coset A_" + format_genset(*pp, z) + "·A_" + format_genset(*pp, y) +
                      " inside the non-spherical parabolic A_" + format_genset(*pp, u));
  }
  caches.dcoset.emplace(key, out);
  return out;
}

MaybeCodes member_uncached(const PresentationPtr& pp, const Codes& w, GenSet t, GenSet u) {
  const Presentation& p = *pp;
  if (support_of(w).subset_of(t)) return w;
  if (is_spherical(p, u)) {
    WordFraction f = fraction_words(pp, w, u);
    if (!(GenSet::of(f.neg) | GenSet::of(f.pos)).subset_of(t)) return std::nullopt;
    return fraction_codes(f);
  }
  std::vector<std::pair<Gen, Gen>> pairs;
  for (Gen a : u.members())
    for (Gen b : u.members())
      if (a < b && p.infinite(a, b)) pairs.emplace_back(a, b);
  if (pairs.empty())
    throw InputError("presentation " + p.name() + " is not of FC type: " + format_genset(p, u) +
                     " has only finite bonds but is not spherical");

  for (auto [a, b] : pairs) {
    if (t.contains(a) && t.contains(b)) continue;
    // keep the endpoint outside T out of the factor that must contain g
    const Gen out_gen = t.contains(b) ? a : b;
    const Gen in_gen = out_gen == a ? b : a;
    auto syl = amalgam_reduce(pp, w, u, in_gen, out_gen);
    if (syl.empty()) return Codes{};
    if (syl.size() > 1 || syl[0].tag == 2) return std::nullopt;
    return member(pp, syl[0].codes, t, u.without(out_gen));
  }

  // Every infinite bond of U lies inside T: A_T is itself an amalgam of
  // A_{T∖b} and A_{T∖a} over A_{T∖{a,b}}, and g is read syllable by syllable
  // carrying an element of A_{U0}.
  const auto [a, b] = pairs.front();
  const GenSet u1 = u.without(b), u2 = u.without(a), u0 = u1 & u2;
  auto syl = amalgam_reduce(pp, w, u, a, b);
  if (syl.empty()) return Codes{};
  if (syl.size() == 1) {
    const GenSet uf = syl[0].tag == 2 ? u2 : u1;
    return member(pp, syl[0].codes, t & uf, uf);
  }
  Codes carry, witness;
  for (std::size_t i = 0; i < syl.size(); ++i) {
    const GenSet uf = syl[i].tag == 2 ? u2 : u1;
    const Codes y = join(carry, syl[i].codes);
    if (i + 1 == syl.size()) {
      auto h = member(pp, y, t & uf, uf);
      if (!h) return std::nullopt;
      return join(witness, *h);
    }
    auto h = dcoset(pp, y, t & uf, u0, uf);
    if (!h) return std::nullopt;
    auto c = member(pp, join(invert(*h), y), u0, uf);
    if (!c) throw std::logic_error("double coset witness does not land in the amalgamated subgroup");
    carry = *c;
    witness = join(witness, *h);
  }
  return std::nullopt;
}

MaybeCodes member(const PresentationPtr& pp, const Codes& w, GenSet t, GenSet u) {
  if (w.empty()) return Codes{};
  const std::string key = cache_key('m', *pp, t, u, GenSet{}, w);
  if (auto it = caches.member.find(key); it != caches.member.end()) return it->second;
  MaybeCodes out = member_uncached(pp, w, t, u);
  if (caches.member.size() > 2000000) caches.member.clear();
  caches.member.emplace(key, out);
  return out;
}

}  // namespace

Codes free_reduce(Codes w) {
  Codes out;
  out.reserve(w.size());
  for (Code c : w) {
    if (!out.empty() && (out.back() ^ 1) == c) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Codes invert(const Codes& w) {
  Codes out(w.rbegin(), w.rend());
  for (Code& c : out) c ^= 1;
  return out;
}

GroupElement::GroupElement(PresentationPtr p, Codes codes) : pres_(std::move(p)), codes_(free_reduce(std::move(codes))) {
  for (Code c : codes_)
    if (gen_of(c) >= pres_->rank()) throw InputError("group word uses a generator outside the presentation");
}

GroupElement GroupElement::positive(const MonoidElement& u) { return positive(u.presentation(), u.word()); }

GroupElement GroupElement::positive(PresentationPtr p, const Word& w) {
  return GroupElement(std::move(p), positive_codes(w));
}

GenSet GroupElement::support() const { return support_of(codes_); }

std::size_t GroupElement::negative_letters() const {
  return static_cast<std::size_t>(std::count_if(codes_.begin(), codes_.end(), is_inverse));
}

std::optional<Word> GroupElement::as_positive() const {
  Word out;
  for (Code c : codes_) {
    if (is_inverse(c)) return std::nullopt;
    out.push_back(gen_of(c));
  }
  return out;
}

GroupElement GroupElement::inverse() const { return GroupElement(pres_, invert(codes_)); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.pres_->id() != b.pres_->id()) throw InputError("elements belong to different presentations");
  return GroupElement(a.pres_, join(a.codes_, b.codes_));
}

std::string GroupElement::str() const {
  if (codes_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += '.';
    out += pres_->generator(gen_of(codes_[i]));
    if (is_inverse(codes_[i])) out += "^-1";
  }
  return out;
}

GroupElement parse_group_word(const PresentationPtr& p, std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), '.', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  Codes codes;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    if (tok == "1" && !inv) continue;
    Word w = parse_word(*p, tok);
    if (inv) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) codes.push_back(code_of(*it, true));
    } else {
      for (Gen g : w) codes.push_back(code_of(g, false));
    }
  }
  return GroupElement(p, std::move(codes));
}

std::string Fraction::str() const { return "(" + neg.str() + ")^-1 (" + pos.str() + ")"; }

Fraction coprime_fraction(const GroupElement& g, GenSet u) {
  const auto& p = g.presentation();
  if (!is_spherical(*p, u)) throw InputError("coprime_fraction: " + format_genset(*p, u) + " is not spherical");
  if (!g.support().subset_of(u)) throw InputError("coprime_fraction: element leaves the parabolic subgroup");
  WordFraction f = fraction_words(p, g.codes(), u);
  return {MonoidElement::trusted(p, f.neg), MonoidElement::trusted(p, f.pos)};
}

Fraction coprime_fraction(const GroupElement& g) {
  const auto& p = g.presentation();
  if (!is_spherical(*p, p->all())) throw InputError("coprime_fraction: presentation " + p->name() + " is not spherical");
  return coprime_fraction(g, p->all());
}

std::optional<GroupElement> parabolic_witness(const GroupElement& g, GenSet t) {
  const auto& p = g.presentation();
  auto w = member(p, g.codes(), t, p->all());
  if (!w) return std::nullopt;
  return GroupElement(p, *w);
}

bool in_parabolic(const GroupElement& g, GenSet t) { return parabolic_witness(g, t).has_value(); }

Word coxeter_image(const GroupElement& g) {
  Word w;
  for (Code c : g.codes()) w.push_back(gen_of(c));
  return w_canonical(g.presentation(), w).word();
}

bool is_trivial(const GroupElement& g) {
  if (g.is_empty_word()) return true;
  if (!coxeter_image(g).empty()) return false;
  return in_parabolic(g, GenSet{});
}

bool g_equal(const GroupElement& g, const GroupElement& h) { return is_trivial(g * h.inverse()); }

std::optional<GroupElement> double_coset_witness(const GroupElement& x, GenSet z, GenSet y) {
  const auto& p = x.presentation();
  MaybeCodes h;
  if (y.subset_of(z) || z.subset_of(y)) {
    h = dcoset(p, x.codes(), z, y, p->all());
  } else {
    const GenSet zy = z | y;
    auto in_zy = member(p, x.codes(), zy, p->all());
    if (!in_zy) return std::nullopt;
    if (is_spherical(*p, zy)) {
      h = dcoset_spherical(p, *in_zy, z, y, zy);
    } else {
      h = dcoset(p, *in_zy, z, y, zy);
    }
  }
  if (!h) return std::nullopt;
  return GroupElement(p, *h);
}

void clear_group_caches() {
  caches.member.clear();
  caches.dcoset.clear();
}

}  // namespace artin
