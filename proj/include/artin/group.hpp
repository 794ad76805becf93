#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/monoid.hpp"

namespace artin {

/// Raised when a membership question falls outside the cases the amalgam
/// recursion can decide. Never conflated with a negative answer.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A signed letter, encoded as 2*g + (inverse ? 1 : 0).
using Code = std::uint8_t;
inline constexpr Code code_of(Gen g, bool inverse) { return static_cast<Code>(2 * g + (inverse ? 1 : 0)); }
inline constexpr Gen gen_of(Code c) { return static_cast<Gen>(c >> 1); }
inline constexpr bool is_inverse(Code c) { return (c & 1) != 0; }

/// Sequence of signed letters; uses the Word container and hash.
using Codes = Word;

/// An element of the Artin group A_S as a freely reduced signed word.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(PresentationPtr p, Codes codes);
  static GroupElement identity(PresentationPtr p) { return GroupElement(std::move(p), {}); }
  static GroupElement positive(const MonoidElement& u);
  static GroupElement positive(PresentationPtr p, const Word& w);

  const PresentationPtr& presentation() const { return pres_; }
  const Presentation& pres() const { return *pres_; }
  const Codes& codes() const { return codes_; }
  std::size_t length() const { return codes_.size(); }
  bool is_empty_word() const { return codes_.empty(); }
  GenSet support() const;
  std::size_t negative_letters() const;
  /// The word read as a positive word, if it has no inverse letters.
  std::optional<Word> as_positive() const;

  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  /// Tokens joined by '.', inverse letters as x^-1, "1" for the empty word.
  std::string str() const;

  /// Syntactic equality of reduced words (not group equality; see g_equal).
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.codes_ == b.codes_; }

 private:
  PresentationPtr pres_;
  Codes codes_;
};

GroupElement parse_group_word(const PresentationPtr& p, std::string_view text);

/// Free reduction of a signed word.
Codes free_reduce(Codes w);
Codes invert(const Codes& w);

/// g = neg^-1 · pos with left_gcd(neg, pos) = 1.
struct Fraction {
  MonoidElement neg;
  MonoidElement pos;
  std::string str() const;
};

/// Coprime fraction of g computed inside the spherical parabolic A_U.
/// U must be spherical and contain the support of g.
Fraction coprime_fraction(const GroupElement& g, GenSet u);
/// Coprime fraction in a spherical presentation.
Fraction coprime_fraction(const GroupElement& g);

/// Some word over T representing g, if g ∈ A_T. Throws Unsupported when the
/// recursion cannot decide, and InputError on presentations that are not FC.
std::optional<GroupElement> parabolic_witness(const GroupElement& g, GenSet t);
bool in_parabolic(const GroupElement& g, GenSet t);

/// Group equality.
bool g_equal(const GroupElement& g, const GroupElement& h);
bool is_trivial(const GroupElement& g);

/// h ∈ A_Z with h^-1·x ∈ A_Y, if x ∈ A_Z·A_Y.
std::optional<GroupElement> double_coset_witness(const GroupElement& x, GenSet z, GenSet y);

/// Image in W_S, as a reduced word (used as a fast inequality filter).
Word coxeter_image(const GroupElement& g);

/// Drops cached membership results (tests use this to compare with a cold run).
void clear_group_caches();

}  // namespace artin
