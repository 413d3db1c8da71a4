#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "ftsp/errors.hpp"
#include "ftsp/words.hpp"

namespace ftsp {

/// Radius-bounded fragment of the right Cayley graph, with canonical
/// element indexing. Element 0 is the identity. adj[id][s] is the image of
/// element id under signed generator s (s = 2*gen for the generator,
/// 2*gen+1 for its inverse), or -1 when it falls outside the ball.
struct CayleyBall {
  Alphabet alphabet;
  int radius = 0;
  std::vector<PLMap> elements;
  std::vector<int> dist;
  std::vector<std::vector<int>> adj;
  std::unordered_map<std::string, int> index;

  int find(const PLMap& g) const {
    auto it = index.find(g.key());
    return it == index.end() ? -1 : it->second;
  }
  long sphere_size(int r) const;
};

/// Complete duplicate-free BFS out to `radius`. Throws cap_error beyond
/// `radius_cap`.
CayleyBall cayley_ball(const Alphabet& alphabet, int radius, int radius_cap = 14);

/// Exact word-metric distance |a^-1 b| by bidirectional BFS on canonical
/// forms. `hint` short-circuits pairs whose quotient lies inside a
/// precomputed ball. Throws cap_error when the distance exceeds max_radius.
long graph_distance(const PLMap& a, const PLMap& b, const Alphabet& alphabet, int max_radius,
                    const CayleyBall* hint = nullptr);

/// A finite point set with its exact pairwise graph metric.
struct TourInstance {
  Alphabet alphabet;
  std::vector<LetterSeq> words;  // optional labels, parallel to points when present
  std::vector<PLMap> points;
  std::vector<std::vector<long>> metric;
};

/// Computes the full metric matrix; points must be pairwise distinct.
TourInstance make_tour_instance(const Alphabet& alphabet, std::vector<PLMap> points,
                                std::vector<LetterSeq> words, int max_radius,
                                const CayleyBall* hint = nullptr);

/// Zero diagonal, positivity, symmetry, triangle inequality; throws
/// verification_error naming the violated axiom.
void check_metric_axioms(const TourInstance& inst);

struct TourResult {
  std::vector<int> order;  // visiting order, starting at point 0
  long length = 0;
  mpq_class tau;
};

/// Minimum closed walk visiting every point, as metric-closure TSP via
/// subset dynamic programming. Throws cap_error above max_points.
TourResult exact_tour(const TourInstance& inst, int max_points = 18);

/// Independent second oracle: exhaustive enumeration of cyclic orders.
TourResult brute_force_tour(const TourInstance& inst, int max_points = 8);

struct TreeTour {
  std::vector<int> walk;  // closed vertex sequence, starts and ends at 0
  long length = 0;        // edge count, exactly 2*(Card-1)
};

/// Double traversal of a spanning tree of the induced subgraph on the
/// points. Throws std::invalid_argument with the component breakdown when
/// the induced subgraph is disconnected.
TreeTour spanning_tree_tour(const Alphabet& alphabet, const std::vector<PLMap>& points);

/// Definition check: every g in S has g*xi or g*xi^-1 in S. Empty sets are
/// rejected.
bool is_xi_related(const std::vector<PLMap>& set, const PLMap& xi);

}  // namespace ftsp
