#pragma once
// Brute-force references used to cross-check the library. None of these call
// the rewriting, reversing or membership code they are compared against.

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "artin/presentation.hpp"

namespace oracle {

using artin::Gen;
using artin::Presentation;
using artin::Word;

inline Word alternating(Gen a, Gen b, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

/// Every word reachable from w by braid relations.
inline std::set<Word> braid_class(const Presentation& p, const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.back();
    todo.pop_back();
    for (Gen s = 0; s < p.rank(); ++s)
      for (Gen t = 0; t < p.rank(); ++t) {
        if (s == t || p.bond(s, t) == artin::kInfinity) continue;
        const int m = p.bond(s, t);
        if (static_cast<int>(cur.size()) < m) continue;
        const Word from = alternating(s, t, m), to = alternating(t, s, m);
        for (std::size_t i = 0; i + m <= cur.size(); ++i) {
          if (!std::equal(from.begin(), from.end(), cur.begin() + static_cast<long>(i))) continue;
          Word next = cur;
          std::copy(to.begin(), to.end(), next.begin() + static_cast<long>(i));
          if (seen.insert(next).second) todo.push_back(next);
        }
      }
  }
  return seen;
}

/// Class label: the smallest word of the braid class.
inline Word class_min(const Presentation& p, const Word& w) { return *braid_class(p, w).begin(); }

inline std::vector<Word> words_of_length(std::size_t rank, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (Gen s = 0; s < rank; ++s) {
        Word e = w;
        e.push_back(s);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// Left divisors of w as class labels: prefixes of every word in its class.
inline std::set<Word> left_divisor_classes(const Presentation& p, const Word& w) {
  std::set<Word> out;
  for (const Word& v : braid_class(p, w))
    for (std::size_t k = 0; k <= v.size(); ++k) out.insert(class_min(p, Word(v.begin(), v.begin() + static_cast<long>(k))));
  return out;
}

inline bool square_free(const Presentation& p, const Word& w) {
  for (const Word& v : braid_class(p, w))
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] == v[i - 1]) return false;
  return true;
}

/// The longest square-free left divisor, as a class label.
inline Word max_square_free_divisor(const Presentation& p, const Word& w) {
  Word best;
  for (const Word& d : left_divisor_classes(p, w))
    if (d.size() > best.size() && square_free(p, d)) best = d;
  return best;
}

/// Coxeter group in its geometric representation, elements as real matrices.
class GeometricW {
 public:
  using Matrix = std::vector<double>;

  explicit GeometricW(const Presentation& p) : n_(p.rank()) {
    for (Gen s = 0; s < n_; ++s) {
      Matrix m(n_ * n_, 0.0);
      for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1.0;
      // σ_s(e_t) = e_t - 2 B(e_s, e_t) e_s
      for (Gen t = 0; t < n_; ++t) {
        const int b = s == t ? 1 : p.bond(s, t);
        const double form = s == t ? 1.0 : (b == artin::kInfinity ? -1.0 : -std::cos(M_PI / b));
        m[s * n_ + t] -= 2.0 * form;
      }
      gens_.push_back(std::move(m));
    }
  }

  Matrix identity() const {
    Matrix m(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1.0;
    return m;
  }

  Matrix times_gen(const Matrix& a, Gen s) const {
    Matrix out(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] += a[i * n_ + k] * gens_[s][k * n_ + j];
    return out;
  }

  Matrix of(const Word& w) const {
    Matrix m = identity();
    for (Gen s : w) m = times_gen(m, s);
    return m;
  }

  /// Rounded key for set membership.
  static std::vector<long> key(const Matrix& m) {
    std::vector<long> k;
    for (double x : m) k.push_back(std::lround(x * 1e6));
    return k;
  }

  /// Elements by length, up to `max_len` (or exhaustively for finite groups).
  std::map<std::vector<long>, std::size_t> enumerate(std::size_t max_len) const {
    std::map<std::vector<long>, std::size_t> seen{{key(identity()), 0}};
    std::vector<Matrix> layer{identity()};
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
      std::vector<Matrix> next;
      for (const Matrix& m : layer)
        for (Gen s = 0; s < n_; ++s) {
          Matrix e = times_gen(m, s);
          if (seen.emplace(key(e), len).second) next.push_back(std::move(e));
        }
      layer = std::move(next);
    }
    return seen;
  }

 private:
  std::size_t n_;
  std::vector<Matrix> gens_;
};

/// Laurent polynomials in t with integer coefficients.
using Laurent = std::map<int, long>;

inline Laurent add(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (auto [e, c] : b)
    if ((out[e] += c) == 0) out.erase(e);
  return out;
}

inline Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (auto [e1, c1] : a)
    for (auto [e2, c2] : b)
      if ((out[e1 + e2] += c1 * c2) == 0) out.erase(e1 + e2);
  return out;
}

/// The reduced Burau representation of the 3-strand braid group, which is faithful.
using Burau = std::array<Laurent, 4>;

inline Burau burau_mul(const Burau& a, const Burau& b) {
  Burau out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[2 * i + j] = add(mul(a[2 * i], b[j]), mul(a[2 * i + 1], b[2 + j]));
  return out;
}

/// Signed letters coded 2g + inverse, generators s = 0, t = 1.
inline Burau burau(const Word& codes) {
  Burau m{Laurent{{0, 1}}, Laurent{}, Laurent{}, Laurent{{0, 1}}};
  for (auto c : codes) {
    Burau g;
    const bool inv = c & 1;
    if ((c >> 1) == 0)
      g = inv ? Burau{Laurent{{-1, -1}}, Laurent{{-1, 1}}, Laurent{}, Laurent{{0, 1}}}
              : Burau{Laurent{{1, -1}}, Laurent{{0, 1}}, Laurent{}, Laurent{{0, 1}}};
    else
      g = inv ? Burau{Laurent{{0, 1}}, Laurent{}, Laurent{{0, 1}}, Laurent{{-1, -1}}}
              : Burau{Laurent{{0, 1}}, Laurent{}, Laurent{{1, 1}}, Laurent{{1, -1}}};
    m = burau_mul(m, g);
  }
  return m;
}

}  // namespace oracle
