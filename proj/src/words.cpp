#include "ftsp/words.hpp"

#include <cctype>
#include <stdexcept>

namespace ftsp {

int Alphabet::index_of(char symbol) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].symbol == symbol) return static_cast<int>(i);
  return -1;
}

namespace {

Dyadic dy(long num, unsigned exp) { return Dyadic(mpz_class(num), exp); }

PLMap make_x0() {
  return PLMap::from_breakpoints({{dy(0, 0), dy(0, 0)},
                                  {dy(1, 1), dy(1, 2)},
                                  {dy(3, 2), dy(1, 1)},
                                  {dy(1, 0), dy(1, 0)}});
}

PLMap make_x1() {
  return PLMap::from_breakpoints({{dy(0, 0), dy(0, 0)},
                                  {dy(1, 1), dy(1, 1)},
                                  {dy(3, 2), dy(5, 3)},
                                  {dy(7, 3), dy(3, 2)},
                                  {dy(1, 0), dy(1, 0)}});
}

}  // namespace

const PLMap& x0_map() {
  static const PLMap m = make_x0();
  return m;
}

const PLMap& x1_map() {
  static const PLMap m = make_x1();
  return m;
}

PLMap generator_map(unsigned k) {
  if (k == 0) return x0_map();
  if (k == 1) return x1_map();
  const PLMap shift = power(x0_map(), static_cast<long>(k) - 1);
  return compose(compose(inverse(shift), x1_map()), shift);
}

Alphabet std2_alphabet() {
  Alphabet a;
  a.name = "std2";
  a.gens = {{'a', "x0", "a", x0_map()}, {'b', "x1", "b", x1_map()}};
  return a;
}

Alphabet x012_alphabet() {
  Alphabet a;
  a.name = "x012";
  a.gens = {{'a', "x0", "a", x0_map()},
            {'b', "x1", "b", x1_map()},
            {'c', "x2", "Aba", generator_map(2)}};
  return a;
}

Alphabet mirror3_alphabet() {
  Alphabet a;
  a.name = "mirror3";
  a.gens = {{'a', "x0", "a", x0_map()},
            {'b', "x1", "b", x1_map()},
            {'d', "x1x0^-1", "bA", compose(x1_map(), inverse(x0_map()))}};
  return a;
}

LetterSeq parse_word(const Alphabet& alpha, const std::string& text) {
  LetterSeq out;
  out.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char sym = upper ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
    const int idx = alpha.index_of(sym);
    if (idx < 0)
      throw std::invalid_argument(std::string("unknown generator symbol '") + c +
                                  "' for alphabet " + alpha.name);
    out.push_back({idx, upper ? -1 : +1});
  }
  return out;
}

std::string format_word(const Alphabet& alpha, const LetterSeq& word) {
  std::string s;
  s.reserve(word.size());
  for (const Letter& l : word) {
    const char sym = alpha.gens.at(l.gen).symbol;
    s += l.sign > 0 ? sym : static_cast<char>(std::toupper(static_cast<unsigned char>(sym)));
  }
  return s;
}

LetterSeq inverse_word(const LetterSeq& word) {
  LetterSeq out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

LetterSeq concat(const LetterSeq& a, const LetterSeq& b) {
  LetterSeq out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

const PLMap& letter_map_base(const Alphabet& alpha, int gen) {
  return alpha.gens.at(gen).map;
}

PLMap letter_map(const Alphabet& alpha, const Letter& l) {
  const PLMap& base = letter_map_base(alpha, l.gen);
  return l.sign > 0 ? base : inverse(base);
}

PLMap word_map(const Alphabet& alpha, const LetterSeq& word) {
  PLMap acc;
  for (const Letter& l : word) acc = compose(acc, letter_map(alpha, l));
  return acc;
}

LetterSeq random_word(const Alphabet& alpha, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, static_cast<int>(alpha.size()) - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = len_dist(rng);
  LetterSeq out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) out.push_back({gen_dist(rng), sign_dist(rng) ? +1 : -1});
  return out;
}

}  // namespace ftsp
