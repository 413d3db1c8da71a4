#include "ftsp/json_io.hpp"

#include <cctype>
#include <fstream>

namespace ftsp {

namespace {

nlohmann::ordered_json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

Dyadic dyadic_from_rational(const mpq_class& q) {
  const mpz_class& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1)
    throw std::invalid_argument("denominator is not a power of two: " + rational_str(q));
  const unsigned e = static_cast<unsigned>(mpz_scan1(den.get_mpz_t(), 0));
  return Dyadic(q.get_num(), e);
}

}  // namespace

nlohmann::ordered_json plmap_to_json(const PLMap& m) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Breakpoint& p : m.breakpoints()) {
    nlohmann::ordered_json quad = nlohmann::ordered_json::array();
    quad.push_back(mpz_to_json(p.in.numerator()));
    quad.push_back(p.in.exponent());
    quad.push_back(mpz_to_json(p.out.numerator()));
    quad.push_back(p.out.exponent());
    arr.push_back(std::move(quad));
  }
  return arr;
}

PLMap plmap_from_json(const nlohmann::json& j) {
  std::vector<Breakpoint> pts;
  for (const auto& quad : j) {
    if (!quad.is_array() || quad.size() != 4)
      throw std::invalid_argument("breakpoint must be a [num, exp, num, exp] quadruple");
    pts.push_back({Dyadic(mpz_from_json(quad[0]), quad[1].get<unsigned>()),
                   Dyadic(mpz_from_json(quad[2]), quad[3].get<unsigned>())});
  }
  return PLMap::from_breakpoints(std::move(pts));
}

nlohmann::ordered_json witness_report_to_json(const WitnessReport& r) {
  nlohmann::ordered_json j;
  j["xi"] = format_word(r.alphabet, r.xi_word);
  j["epsilon"] = r.epsilon;
  j["branch"] = r.branch;
  j["n"] = r.n;
  j["N"] = r.N;
  j["card"] = r.card;
  j["path_word"] = format_word(r.alphabet, r.path.letters);
  j["path_length"] = r.path_length;
  j["ratio"] = rational_str(r.ratio);
  j["ratio_bound"] = rational_str(r.ratio_bound);
  j["verdicts"] = {{"closure", r.verdicts.closure},
                   {"coverage", r.verdicts.coverage},
                   {"xi_related", r.verdicts.xi_related},
                   {"length_formula", r.verdicts.length_formula}};
  j["alphabet"] = r.alphabet.name;
  return j;
}

nlohmann::ordered_json grid_set_to_json(const GridSet& g, const Alphabet& alphabet) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["N"] = g.N;
  j["card"] = g.card();
  j["degenerate"] = g.degenerate;
  j["alphabet"] = alphabet.name;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    nlohmann::ordered_json e;
    e["word"] = format_word(alphabet, g.words[k]);
    e["map"] = plmap_to_json(g.elements[k]);
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  return j;
}

nlohmann::ordered_json tour_instance_to_json(const TourInstance& inst) {
  nlohmann::ordered_json j;
  j["alphabet"] = inst.alphabet.name;
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (const LetterSeq& w : inst.words) words.push_back(format_word(inst.alphabet, w));
  j["elements"] = std::move(words);
  nlohmann::ordered_json metric = nlohmann::ordered_json::array();
  for (const auto& row : inst.metric) metric.push_back(row);
  j["metric"] = std::move(metric);
  return j;
}

TourInstance tour_instance_from_json(const nlohmann::json& j, int max_radius) {
  const std::string name = j.value("alphabet", std::string("std2"));
  Alphabet alphabet;
  if (name == "std2")
    alphabet = std2_alphabet();
  else if (name == "x012")
    alphabet = x012_alphabet();
  else if (name == "mirror3")
    alphabet = mirror3_alphabet();
  else
    throw std::invalid_argument("unknown alphabet in instance file: " + name);

  std::vector<LetterSeq> words;
  std::vector<PLMap> points;
  for (const auto& w : j.at("elements")) {
    words.push_back(parse_word(alphabet, w.get<std::string>()));
    points.push_back(word_map(alphabet, words.back()));
  }
  if (j.contains("metric")) {
    TourInstance inst;
    inst.alphabet = alphabet;
    inst.words = std::move(words);
    inst.points = std::move(points);
    inst.metric = j.at("metric").get<std::vector<std::vector<long>>>();
    if (inst.metric.size() != inst.points.size())
      throw std::invalid_argument("metric size does not match element count");
    for (const auto& row : inst.metric)
      if (row.size() != inst.points.size())
        throw std::invalid_argument("metric is not square");
    return inst;
  }
  return make_tour_instance(alphabet, std::move(points), std::move(words), max_radius);
}

SupportPair pair_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open alphabet file: " + path);
  nlohmann::json j;
  in >> j;

  const Alphabet base = std2_alphabet();
  Alphabet alphabet;
  alphabet.name = path;
  for (const auto& g : j.at("generators")) {
    const std::string sym = g.at("symbol").get<std::string>();
    if (sym.size() != 1 || !std::islower(static_cast<unsigned char>(sym[0])))
      throw std::invalid_argument("generator symbol must be one lowercase letter: " + sym);
    if (alphabet.index_of(sym[0]) >= 0)
      throw std::invalid_argument("duplicate generator symbol: " + sym);
    const std::string def = g.at("word").get<std::string>();
    alphabet.gens.push_back({sym[0], g.value("name", sym), def,
                             word_map(base, parse_word(base, def))});
  }
  const auto& p = j.at("pair");
  return make_support_pair(std::move(alphabet), p.at("u").get<std::string>(),
                           p.at("v").get<std::string>(),
                           dyadic_from_rational(parse_rational(p.at("split").get<std::string>())));
}

SupportPair pair_by_selector(const std::string& selector) {
  if (selector == "std2") return standard_pair();
  if (selector == "x012") return x012_pair();
  if (selector == "mirror3") return mirror3_pair();
  if (!selector.empty() && selector[0] == '@') return pair_from_json_file(selector.substr(1));
  throw std::invalid_argument("unknown alphabet selector: " + selector +
                              " (expected std2, x012, mirror3 or @file.json)");
}

}  // namespace ftsp
