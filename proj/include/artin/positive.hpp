#pragma once

// Word-level arithmetic in the positive monoid. Everything here works on raw
// generator sequences; MonoidElement (monoid.hpp) wraps the results.

#include <optional>

#include "artin/presentation.hpp"

namespace artin {

/// x with u·x = v in the positive monoid, if u left-divides v.
std::optional<Word> left_quotient(const Presentation& p, const Word& u, const Word& v);

/// x with x·u = v, if u right-divides v.
std::optional<Word> right_quotient(const Presentation& p, const Word& u, const Word& v);

/// ShortLex-minimal word of the braid-relation class of v.
Word shortlex(const Presentation& p, const Word& v);

/// The alternating product u v u ... with m factors.
Word bracket_word(const Word& u, const Word& v, int m);

Word reversed(Word w);
Word concat(Word a, const Word& b);

/// Result of right reversing u^-1 v into v' u'^-1, so that u·v' = v·u'.
struct Reversal {
  enum class Status { Done, Blocked, Exhausted };
  Status status = Status::Done;
  Word v_tail;  // v'
  Word u_tail;  // u'
};

/// Right reversing with a length cap: any intermediate tail longer than
/// `max_len` stops the computation with Status::Exhausted. Blocked means a pair
/// of generators with an infinite bond met, so u and v have no common right
/// multiple.
Reversal reverse_right(const Presentation& p, const Word& u, const Word& v, std::size_t max_len);

}  // namespace artin
