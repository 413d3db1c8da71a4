#pragma once

#include <random>
#include <string>
#include <vector>

#include "ftsp/plmap.hpp"

namespace ftsp {

/// One letter of a word: generator index into an Alphabet, sign +1/-1.
struct Letter {
  int gen;
  int sign;
  bool operator==(const Letter&) const = default;
};

using LetterSeq = std::vector<Letter>;

/// A named generator. `symbol` is the lowercase letter used in compact word
/// syntax (uppercase denotes the inverse). `definition` spells the generator
/// as a word over {x0, x1}; for x0 and x1 themselves it is the single letter.
struct Generator {
  char symbol;
  std::string name;
  std::string definition;
  PLMap map;
};

/// An ordered, immutable generating set.
struct Alphabet {
  std::string name;  // "std2", "x012", "mirror3", or a file path
  std::vector<Generator> gens;

  int index_of(char symbol) const;  // -1 if absent
  std::size_t size() const { return gens.size(); }
};

/// The standard generator x0: slope 1/2 on [0,1/2], 1 on [1/2,3/4], 2 on [3/4,1].
const PLMap& x0_map();
/// The standard generator x1: identity on [0,1/2], half-scale copy of x0 above.
const PLMap& x1_map();

/// x_k of the infinite family: x_0, x_1, and x_k = x0^-(k-1) x1 x0^(k-1) for k >= 2.
PLMap generator_map(unsigned k);

Alphabet std2_alphabet();     // a=x0, b=x1
Alphabet x012_alphabet();     // a=x0, b=x1, c=x2
Alphabet mirror3_alphabet();  // a=x0, b=x1, d=x1*x0^-1

/// Compact syntax: lowercase = generator, uppercase = inverse, whitespace
/// ignored. Throws std::invalid_argument on a symbol outside the alphabet.
LetterSeq parse_word(const Alphabet& alpha, const std::string& text);
std::string format_word(const Alphabet& alpha, const LetterSeq& word);

LetterSeq inverse_word(const LetterSeq& word);
LetterSeq concat(const LetterSeq& a, const LetterSeq& b);

const PLMap& letter_map_base(const Alphabet& alpha, int gen);
PLMap letter_map(const Alphabet& alpha, const Letter& l);

/// Evaluation homomorphism: the product of the letters' maps, leftmost
/// letter outermost (matching compose()).
PLMap word_map(const Alphabet& alpha, const LetterSeq& word);

/// Uniformly random word of length drawn uniformly from [0, max_len].
LetterSeq random_word(const Alphabet& alpha, std::mt19937_64& rng, int max_len);

/// Bundled word with its alphabet, the exchange format between modules.
struct GroupWord {
  Alphabet alphabet;
  LetterSeq letters;
};

}  // namespace ftsp
