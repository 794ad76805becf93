#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/group.hpp"

namespace artin {

/// A map on generators. Subset maps send s to Δ_{p(s)}; substitution maps
/// send s to an arbitrary positive target word and exist so that morphisms
/// outside the LCM-homomorphism class (such as t ↦ xy) can be examined.
struct GeneratorMap {
  std::string name;
  PresentationPtr source;
  PresentationPtr target;
  bool substitution = false;
  std::vector<GenSet> images;  // p(s), subset maps only
  std::vector<Word> words;     // φ(s); empty entry when p(s) has no Δ

  GenSet image_of(GenSet x) const;
};

GeneratorMap make_subset_map(std::string name, PresentationPtr source, PresentationPtr target,
                             std::vector<GenSet> images);
GeneratorMap make_substitution_map(std::string name, PresentationPtr source, PresentationPtr target,
                                   std::vector<Word> words);

using PresentationLookup = std::function<PresentationPtr(const std::string&)>;

/// Map file format:
///   map <name> from <P> to <P'>
///   s -> t1 t2 ...      p(s) = {t1, t2, ...}
///   s => w              φ(s) = w (substitution)
GeneratorMap parse_map(std::string_view text, const PresentationLookup& lookup);
std::string format_map(const GeneratorMap& m);

enum class Verdict { Pass, Fail, Vacuous, Skipped };
std::string verdict_name(Verdict v);

struct AxiomCheck {
  std::string axiom;
  Verdict verdict = Verdict::Pass;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> entries;
  const AxiomCheck* find(const std::string& axiom) const;
  bool ok(const std::string& axiom) const;
  /// L0, L1, L2 and L3 all pass or are vacuous.
  bool lcm_hom() const;
};

AxiomReport check_generator_map(const GeneratorMap& m);

/// A generator map together with its axiom report. Operations that rely on
/// the LCM-homomorphism hypotheses refuse maps whose report is not clean.
class LcmHom {
 public:
  explicit LcmHom(GeneratorMap m);
  const GeneratorMap& map() const { return map_; }
  const AxiomReport& report() const { return report_; }
  bool usable() const { return report_.lcm_hom(); }
  /// Throws InputError unless usable().
  void require_usable() const;

 private:
  GeneratorMap map_;
  AxiomReport report_;
};

MonoidElement map_positive(const GeneratorMap& m, const MonoidElement& u);
GroupElement map_group(const GeneratorMap& m, const GroupElement& g);
/// Checked variant: requires the axioms.
MonoidElement map_positive(const LcmHom& h, const MonoidElement& u);

/// (p_≺(s), p_≻(s)): target generators dividing φ(s) on the left and on the right.
std::pair<GenSet, GenSet> divisor_sets(const GeneratorMap& m, Gen s);
bool is_symmetric(const GeneratorMap& m);

enum class Tri { True, False, Undetermined };
std::string tri_name(Tri t);

struct Outcome {
  Tri value = Tri::True;
  std::string witness;
  bool ok() const { return value == Tri::True; }
};

/// φ(s) ≠ 1 and φ(s)∨φ(t) = φ(s∨t) for all pairs, with Infinite matching Infinite.
Outcome is_lcm_homomorphism(const GeneratorMap& m, std::size_t cutoff = kDefaultLcmCutoff);

/// φ sends every square-free source element of length <= bound to a square-free
/// element, injectively.
Outcome is_qf_injective(const GeneratorMap& m, std::size_t bound);

WElement map_coxeter(const LcmHom& h, const WElement& w);

/// normal_form(φ(u)) is the image of normal_form(u) factor by factor.
Outcome verify_normal_form_preservation(const GeneratorMap& m, const MonoidElement& u);

/// φ(u∨v) = φ(u)∨φ(v) and φ(u∧v) = φ(u)∧φ(v), on both sides.
Outcome verify_lattice_preservation(const GeneratorMap& m, const MonoidElement& u, const MonoidElement& v,
                                    std::size_t cutoff = kDefaultLcmCutoff);

/// u ≺ v iff φ(u) ≺ φ(v), on both sides.
bool verify_divisibility_reflection(const GeneratorMap& m, const MonoidElement& u, const MonoidElement& v);

/// (φ(a), φ(b)) for g = a^-1 b; throws std::logic_error if the image pair is not
/// the coprime fraction of φ(g).
Fraction map_fraction(const LcmHom& h, const Fraction& f);

/// (u, v) with w = u·v, u ∈ A_R^+, v ∈ A_Z^+ where Z = {s : p(s) ⊆ Y}, provided
/// φ(w) splits as A_{p(R)}^+ · A_Y^+; nullopt otherwise.
std::optional<std::pair<MonoidElement, MonoidElement>> pullback_factor(const LcmHom& h, const MonoidElement& w,
                                                                        GenSet r, GenSet y);

/// If [φ(s), φ(t)⟩^k is not square-free then m_{s,t} is finite and k > m_{s,t}.
bool verify_lemred(const LcmHom& h, Gen s, Gen t, int k);

}  // namespace artin
