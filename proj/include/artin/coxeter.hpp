#pragma once

#include <string>
#include <vector>

#include "artin/monoid.hpp"

namespace artin {

/// An element of the Coxeter group W_S, held as its ShortLex-minimal reduced word.
class WElement {
 public:
  WElement() = default;
  static WElement trusted(PresentationPtr p, Word w) { return WElement(std::move(p), std::move(w)); }

  const PresentationPtr& presentation() const { return pres_; }
  const Presentation& pres() const { return *pres_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  std::string str() const { return format_word(*pres_, word_); }

  friend bool operator==(const WElement& a, const WElement& b) { return a.word_ == b.word_; }
  friend bool operator<(const WElement& a, const WElement& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

 private:
  WElement(PresentationPtr p, Word w) : pres_(std::move(p)), word_(std::move(w)) {}
  PresentationPtr pres_;
  Word word_;
};

/// Reduces an arbitrary word. Reduced words of one element are exactly the
/// positive words of one square-free monoid element, so the running product is
/// kept as a square-free element and each letter either extends it or cancels
/// a right descent.
WElement w_canonical(const PresentationPtr& p, const Word& w);
WElement w_multiply(const WElement& x, const WElement& y);
WElement w_inverse(const WElement& x);
inline std::size_t w_length(const WElement& x) { return x.length(); }
bool w_in_parabolic(const WElement& x, GenSet t);

/// Longest element of W_T. Throws InputError when T is not spherical.
WElement longest_element(const PresentationPtr& p, GenSet t);

/// Positive lift of a reduced word; square-free of the same length.
MonoidElement sec_lift(const WElement& w);
/// Image of a positive element in W_S.
WElement project(const MonoidElement& u);

/// All elements of a finite W_T, sorted by (length, word). Throws if T is not spherical.
std::vector<WElement> enumerate_parabolic(const PresentationPtr& p, GenSet t);

/// Minimal-length representative of the coset x·W_T.
WElement min_coset_rep(const WElement& x, GenSet t);

}  // namespace artin
