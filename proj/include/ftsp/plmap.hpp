#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ftsp/dyadic.hpp"

namespace ftsp {

struct Breakpoint {
  Dyadic in;
  Dyadic out;
  bool operator==(const Breakpoint&) const = default;
};

/// Canonical piecewise-linear bijection of [0,1]: dyadic breakpoints,
/// every segment slope an exact power of two, strictly increasing, and
/// no breakpoint whose adjacent slopes agree. Canonical form makes
/// structural equality coincide with equality as functions, so these
/// objects double as group elements.
class PLMap {
 public:
  /// Identity map, breakpoints {(0,0),(1,1)}.
  PLMap();

  /// Validates the invariants and drops redundant collinear breakpoints.
  /// Throws std::invalid_argument on malformed input.
  static PLMap from_breakpoints(std::vector<Breakpoint> pts);

  const std::vector<Breakpoint>& breakpoints() const { return pts_; }
  std::size_t segment_count() const { return pts_.size() - 1; }
  bool is_identity() const { return pts_.size() == 2; }

  /// Image of t under the map. Throws std::domain_error outside [0,1].
  Dyadic operator()(const Dyadic& t) const;

  /// Image of t under the inverse map.
  Dyadic inverse_at(const Dyadic& t) const;

  bool operator==(const PLMap&) const = default;

  /// Canonical string encoding; equal keys iff equal maps. Used as a
  /// hash-map key wherever elements are deduplicated or BFS-visited.
  std::string key() const;

 private:
  struct trusted {};
  PLMap(std::vector<Breakpoint> pts, trusted) : pts_(std::move(pts)) {}

  std::vector<Breakpoint> pts_;

  friend PLMap compose(const PLMap& f, const PLMap& g);
  friend PLMap inverse(const PLMap& f);
};

/// Group product f*g. Letters act with the leftmost factor outermost:
/// (f*g)(t) = f(g(t)). This orientation together with the standard
/// generator maps is what makes the defining relations hold; see the
/// calibration tests.
PLMap compose(const PLMap& f, const PLMap& g);

/// Group inverse: swaps the coordinates of every breakpoint.
PLMap inverse(const PLMap& f);

/// f^k for any integer k (square-and-multiply).
PLMap power(const PLMap& f, long k);

/// Slope of the segment a->b as the exponent e with slope = 2^e.
/// Throws std::invalid_argument if the slope is not a power of two.
long slope_exponent(const Breakpoint& a, const Breakpoint& b);

struct Interval {
  Dyadic lo;
  Dyadic hi;
  bool operator==(const Interval&) const = default;
};

/// Maximal open intervals outside the regions where the map is pointwise
/// the identity. Isolated fixed points interior to a moved region (which
/// need not be dyadic) do not split intervals. Empty iff f is the identity.
std::vector<Interval> support(const PLMap& f);

/// True iff f(t) = t for every t in [lo, hi]. Throws on lo > hi or an
/// interval not contained in [0,1].
bool is_identity_on(const PLMap& f, const Dyadic& lo, const Dyadic& hi);

}  // namespace ftsp
