#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// Index of a generator inside its presentation (declaration order).
using Gen = std::uint8_t;

/// A positive word: a sequence of generator indices.
using Word = std::vector<Gen>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Gen g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ w.size());
  }
};

/// Bond value for m_{s,t} = infinity.
inline constexpr int kInfinity = 0;

/// Thrown on malformed input (files, words, command arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite set of generators, stored as a bit mask (rank <= 32).
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr GenSet single(Gen g) { return GenSet(std::uint32_t{1} << g); }
  static constexpr GenSet first(std::size_t n) {
    return GenSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }
  template <typename Range>
  static GenSet of(const Range& letters) {
    GenSet out;
    for (Gen g : letters) out = out.with(g);
    return out;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Gen g) const { return (bits_ >> g) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr GenSet with(Gen g) const { return GenSet(bits_ | (std::uint32_t{1} << g)); }
  constexpr GenSet without(Gen g) const { return GenSet(bits_ & ~(std::uint32_t{1} << g)); }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSet, GenSet) = default;

  /// Members in increasing index order.
  std::vector<Gen> members() const {
    std::vector<Gen> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Gen>(std::countr_zero(b)));
    return out;
  }

  /// Ordering by (size, lexicographic member list).
  friend bool operator<(GenSet a, GenSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  }

 private:
  std::uint32_t bits_ = 0;
};

/// An Artin-Tits presentation: ordered generators plus a symmetric Coxeter matrix.
/// The declaration order of generators fixes the ShortLex order used by every
/// canonical form in the library.
class Presentation {
 public:
  Presentation(std::string name, std::vector<std::string> generators);

  /// Sets m_{s,t} = m_{t,s}. `m` is >= 2 or kInfinity.
  void set_bond(Gen s, Gen t, int m);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& generator(Gen g) const { return generators_.at(g); }
  std::optional<Gen> find(std::string_view token) const;
  GenSet all() const { return GenSet::first(rank()); }

  /// m_{s,t}; 1 on the diagonal, kInfinity for infinite bonds.
  int bond(Gen s, Gen t) const {
    return s == t ? 1 : matrix_[static_cast<std::size_t>(s) * rank() + t];
  }
  bool infinite(Gen s, Gen t) const { return s != t && bond(s, t) == kInfinity; }

  /// True when every generator token is a single character, so words print unseparated.
  bool compact_tokens() const { return compact_; }

  /// Process-unique identity, used to key caches.
  std::uint64_t id() const { return id_; }

 private:
  std::string name_;
  std::vector<std::string> generators_;
  std::vector<int> matrix_;
  bool compact_ = true;
  std::uint64_t id_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Parses the line-oriented presentation format:
///   presentation <name>
///   generators <tok> <tok> ...
///   bond <tok> <tok> <int>=2 | inf>
/// Undeclared bonds default to 2.
PresentationPtr parse_presentation(std::string_view text);

/// Writes `p` back in the file format (bonds != 2 only).
std::string format_presentation(const Presentation& p);

/// True iff W_T is finite, decided by matching every component of the Coxeter
/// graph of T against the finite types A, B, D, E6-8, F4, H3, H4, I2(m).
bool is_spherical(const Presentation& p, GenSet t);

/// True iff every subset with no infinite internal bond is spherical.
bool is_fc(const Presentation& p);

/// A finite-bond subset that is not spherical, if any (the FC obstruction).
std::optional<GenSet> fc_obstruction(const Presentation& p);

/// All spherical subsets, including the empty set, sorted by (size, members).
std::vector<GenSet> spherical_subsets(const Presentation& p);

/// Parses a whitespace- or '.'-separated list of generator tokens; "1" or "" is the empty word.
Word parse_word(const Presentation& p, std::string_view text);

/// Prints a word; "1" for the empty word.
std::string format_word(const Presentation& p, const Word& w);

/// Parses "{a,c}", "a c", "{}" into a generator set.
GenSet parse_genset(const Presentation& p, std::string_view text);
std::string format_genset(const Presentation& p, GenSet s);

}  // namespace artin
