#pragma once

#include <string>
#include <vector>

#include "artin/positive.hpp"

namespace artin {

/// An element of the positive monoid, held as the ShortLex-minimal word of its
/// braid-relation class. Equality of elements is equality of these words.
class MonoidElement {
 public:
  MonoidElement() = default;
  /// Canonicalizes `w`.
  MonoidElement(PresentationPtr p, const Word& w);
  static MonoidElement identity(PresentationPtr p) { return MonoidElement(std::move(p), Word{}, true); }
  static MonoidElement generator(PresentationPtr p, Gen s) { return MonoidElement(std::move(p), Word{s}, true); }
  /// Wraps a word already known to be canonical.
  static MonoidElement trusted(PresentationPtr p, Word w) { return MonoidElement(std::move(p), std::move(w), true); }

  const PresentationPtr& presentation() const { return pres_; }
  const Presentation& pres() const { return *pres_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  GenSet support() const { return GenSet::of(word_); }
  std::string str() const { return format_word(*pres_, word_); }

  friend bool operator==(const MonoidElement& a, const MonoidElement& b) { return a.word_ == b.word_; }
  friend bool operator<(const MonoidElement& a, const MonoidElement& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }
  friend MonoidElement operator*(const MonoidElement& a, const MonoidElement& b);

 private:
  MonoidElement(PresentationPtr p, Word w, bool) : pres_(std::move(p)), word_(std::move(w)) {}
  PresentationPtr pres_;
  Word word_;
};

MonoidElement m_canonical(const PresentationPtr& p, const Word& w);

bool left_divides(const MonoidElement& u, const MonoidElement& v);
bool right_divides(const MonoidElement& u, const MonoidElement& v);
/// x with u·x = v; throws if u does not left-divide v.
MonoidElement left_complement(const MonoidElement& u, const MonoidElement& v);
/// x with x·u = v; throws if u does not right-divide v.
MonoidElement right_complement(const MonoidElement& u, const MonoidElement& v);

MonoidElement left_gcd(const MonoidElement& u, const MonoidElement& v);
MonoidElement right_gcd(const MonoidElement& u, const MonoidElement& v);

/// Default word-length cutoff for lcm searches on presentations that are not FC.
inline constexpr std::size_t kDefaultLcmCutoff = 24;

struct LcmResult {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Finite;
  MonoidElement value;  // set when Finite
  std::size_t bound = 0;  // cutoff in force when Unknown

  bool finite() const { return kind == Kind::Finite; }
  std::string str() const;
};

/// Least common right multiple (join for ≺). Exact whenever the search
/// terminates; Unknown carries the cutoff that stopped it.
LcmResult left_lcm(const MonoidElement& u, const MonoidElement& v, std::size_t cutoff = kDefaultLcmCutoff);
/// Least common left multiple (join for ≻).
LcmResult right_lcm(const MonoidElement& u, const MonoidElement& v, std::size_t cutoff = kDefaultLcmCutoff);

MonoidElement bracket(const MonoidElement& u, const MonoidElement& v, int m);

/// Δ_T, the lcm of the generators of a spherical T. Throws InputError otherwise.
MonoidElement delta(const PresentationPtr& p, GenSet t);

bool is_square_free(const MonoidElement& u);

/// Greatest square-free left divisor.
MonoidElement alpha(const MonoidElement& u);

/// Greedy normal form: square-free factors g_i with g_i = alpha(g_i···g_n).
std::vector<MonoidElement> normal_form(const MonoidElement& u);
std::string format_normal_form(const std::vector<MonoidElement>& nf);

enum class Side { Left, Right };
/// True iff no generator of x divides u on the given side.
bool is_x_reduced(const MonoidElement& u, GenSet x, Side side);

/// Whether u·e1·v = u·e2·v implies e1 = e2 on this instance.
bool cancel(const MonoidElement& u, const MonoidElement& e1, const MonoidElement& e2, const MonoidElement& v);

/// All positive elements of length exactly n (canonical words, sorted).
std::vector<MonoidElement> elements_of_length(const PresentationPtr& p, std::size_t n);
/// All positive elements of length <= n.
std::vector<MonoidElement> elements_up_to(const PresentationPtr& p, std::size_t n);
/// All left divisors of u, sorted by (length, word).
std::vector<MonoidElement> left_divisors(const MonoidElement& u);

}  // namespace artin
