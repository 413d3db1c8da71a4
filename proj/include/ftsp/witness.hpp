#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "ftsp/errors.hpp"
#include "ftsp/words.hpp"

namespace ftsp {

/// A commuting pair of elements with complementary one-sided supports:
/// one of u, v is the identity on [0, split], the other on [split, 1].
/// u is the element that gets conjugated in the witness construction.
struct SupportPair {
  Alphabet alphabet;
  LetterSeq u_word;
  LetterSeq v_word;
  PLMap u;
  PLMap v;
  Dyadic split;
  /// True in the standard orientation: u identity on [0, split] (so its
  /// support lies above the split) and v identity on [split, 1].
  bool u_trivial_below;
};

/// Validates supports, commutation and orientation; throws
/// std::invalid_argument with the offending support intervals otherwise.
SupportPair make_support_pair(Alphabet alphabet, const std::string& u_text,
                              const std::string& v_text, const Dyadic& split);

/// u = x1, v = x0 x1 x0^-2 over {x0, x1}, split 1/2.
SupportPair standard_pair();
/// u = x1 x0^-1, v = x2 over {x0, x1, x2}, split 3/4.
SupportPair x012_pair();
/// u = x1 x0^-1, v = x0^-1 x1 x0 over {x0, x1, x1 x0^-1}, split 3/4.
SupportPair mirror3_pair();

struct RemarkPair {
  SupportPair pair;
  mpq_class ratio_constant;  // (|u|+|v|)/2
};

/// The two alternative generating-set configurations, with their ratio
/// constants 3/2 and 2.
std::vector<RemarkPair> remark_pairs();

/// Sign e in {+1,-1} such that z = xi^e maps u's trivial side into itself:
/// evaluate(z, split) >= split when u is trivial below the split, <= split
/// otherwise. Ties resolve to +1.
int choose_epsilon(const PLMap& xi, const Dyadic& split, bool u_trivial_below);

struct ConjugationWitness {
  LetterSeq xi_word;
  int epsilon;
  LetterSeq z_word;  // xi_word or its inverse
  PLMap xi;
  PLMap z;
  PLMap w;  // z * u * z^-1, verified to commute with v
  Dyadic split;
};

/// Builds and structurally verifies the conjugation witness. A commutation
/// failure here would mean the generator calibration is broken, so it
/// throws verification_error rather than returning.
ConjugationWitness conjugation_witness(const SupportPair& pair, const LetterSeq& xi_word);

/// Evaluates [[g x1 g^-1, v], [g^-1 x1 g, v]] with v = x0 x1 x0^-2 and
/// returns true iff it is the identity. Holds for every g; a false return
/// signals an implementation bug.
bool check_mixed_identity(const Alphabet& alpha, const LetterSeq& g_word);

/// The two-layer element set: S' = {v^p w^q : 0 <= p,q <= n}, S'' = S'z,
/// deduplicated union. Degenerate iff the layers collide.
struct GridSet {
  int n = 0;
  int N = 0;
  std::vector<PLMap> elements;   // S' in (p,q)-lex order, then the new elements of S''
  std::vector<LetterSeq> words;  // a defining word per element, parallel to elements
  std::unordered_map<std::string, int> index;
  bool degenerate = false;

  bool contains(const PLMap& g) const { return index.count(g.key()) != 0; }
  long card() const { return static_cast<long>(elements.size()); }
};

/// n must be even and >= 0. The base layer always has exactly N^2 distinct
/// elements; a smaller union sets the degenerate flag.
GridSet build_grid_set(const ConjugationWitness& lw, const SupportPair& pair, int n);

enum class EdgeKind { V, U, Z };

/// One conceptual move of a tour through the two-layer grid: the move kind,
/// direction, and the vertex it leaves from.
struct GridStep {
  EdgeKind kind;
  int dir;  // +1 forward / up, -1 backward / down
  int i, j, layer;
};

/// A closed tour, both as conceptual grid moves and as the expanded letter
/// sequence over the alphabet. Starts (and ends) at the identity.
struct TourPath {
  std::vector<GridStep> steps;
  LetterSeq letters;
};

/// Grid points on the bottom plane from which the tour ascends.
std::vector<std::pair<int, int>> z_ascent_points(const TourPath& path);

/// The boustrophedon closed tour of the two-layer grid: covers the bottom
/// plane first, then the top, with single turnaround edges between
/// ascents. Letter count is exactly |v|(Nn+n) + |u|(Nn+n) + (4n+2)|z|.
TourPath build_serpentine_path(int n, const LetterSeq& u_word, const LetterSeq& v_word,
                               const LetterSeq& z_word);

/// Single-plane boustrophedon tour over {u^p v^q : 0 <= p,q <= n}, n odd:
/// column runs of u-edges joined by single v-edges, closed by a v^-n tail.
/// Letter count is exactly (n^2+1)|u| + 2n|v|.
TourPath build_abelian_path(int n, const LetterSeq& u_word, const LetterSeq& v_word);

struct Verdicts {
  bool closure = false;
  bool coverage = false;
  bool xi_related = false;
  bool length_formula = false;
  bool all() const { return closure && coverage && xi_related && length_formula; }
};

struct WitnessReport {
  Alphabet alphabet;
  LetterSeq xi_word;
  int epsilon = +1;
  std::string branch;  // "generic" or "abelian"
  int n = 0;
  int N = 0;
  long card = 0;
  TourPath path;
  long path_length = 0;
  mpq_class ratio;
  mpq_class ratio_bound;
  Verdicts verdicts;
  std::vector<PLMap> set_elements;
  PLMap xi;
  long u_len = 0, v_len = 0, xi_len = 0;
};

/// Smallest N = n+1 with n even, n >= 2, and N > 2*xi_len/(lambda - c).
/// c is the ratio constant (|u|+|v|)/2; lambda <= c is rejected.
long minimal_N(const mpq_class& lambda, long xi_len, const mpq_class& c);

/// z = u^a v^b if such exponents exist with |a|,|b| <= cap.
struct PairDecomposition {
  long a = 0, b = 0;
};
std::optional<PairDecomposition> decompose_in_pair(const PLMap& z, const SupportPair& pair,
                                                   long cap);

/// Degenerate-branch construction over {u^p v^q}: requires z in <u,v>
/// (throws std::invalid_argument otherwise), prunes elements without
/// xi-neighbours to a fixpoint, reports ratio against the pruned set.
WitnessReport build_abelian_witness(const SupportPair& pair, const LetterSeq& xi_word, int n);

struct BuildOptions {
  std::optional<int> n_override;
  int n_max = 201;
};

/// End-to-end pipeline: conjugation witness, degeneracy detection by
/// cardinality, branch construction sized from lambda, and independent
/// verification. Throws verification_error if any verdict fails or the
/// ratio does not beat lambda.
WitnessReport build_witness(const SupportPair& pair, const LetterSeq& xi_word,
                            const mpq_class& lambda, const BuildOptions& opts = {});

/// Recomputes all four verdicts from scratch through map arithmetic only:
/// the path word multiplies to the identity, its vertex trace covers the
/// set, the set is xi-related, and the letter count matches the branch
/// formula.
Verdicts verify_witness(const WitnessReport& report, const PLMap& xi);

/// Pass counts of the deterministic and randomized checks backing the
/// construction, with the first counterexample when one fails.
struct CheckSummary {
  int relations_pass = 0, relations_total = 0;
  int support_pass = 0, support_total = 0;
  int family_pass = 0, family_total = 0;
  int conj_pass = 0, conj_total = 0;
  int mixed_pass = 0, mixed_total = 0;
  std::string first_failure;
  bool all_pass() const {
    return relations_pass == relations_total && support_pass == support_total &&
           family_pass == family_total && conj_pass == conj_total && mixed_pass == mixed_total;
  }
};

/// Runs the calibration suite (defining relations, support facts, the
/// generator-family relations) plus `samples` randomized conjugation and
/// mixed-identity checks over words of length <= 24.
CheckSummary run_check_suite(const SupportPair& pair, int samples, std::uint64_t seed);

/// DOT digraph of the two-layer grid: vertices b_i_j and t_i_j, edge
/// labels v (bottom), u (top), z (ascents).
std::string gamma_dot(int n);

}  // namespace ftsp
