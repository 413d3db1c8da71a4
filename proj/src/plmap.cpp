#include "ftsp/plmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftsp {

namespace {

// exponent of 2 in a positive dyadic, and its odd part
long exp2_of(const Dyadic& d, mpz_class& odd_part) {
  const mp_bitcnt_t tz = mpz_scan1(d.numerator().get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd_part.get_mpz_t(), d.numerator().get_mpz_t(), tz);
  return static_cast<long>(tz) - static_cast<long>(d.exponent());
}

}  // namespace

long slope_exponent(const Breakpoint& a, const Breakpoint& b) {
  const Dyadic dx = b.in - a.in;
  const Dyadic dy = b.out - a.out;
  if (dx <= Dyadic::zero() || dy <= Dyadic::zero())
    throw std::invalid_argument("breakpoints not strictly increasing");
  mpz_class ox, oy;
  const long ex = exp2_of(dx, ox);
  const long ey = exp2_of(dy, oy);
  if (ox != oy) throw std::invalid_argument("segment slope is not a power of two");
  return ey - ex;
}

PLMap::PLMap() {
  pts_.push_back({Dyadic::zero(), Dyadic::zero()});
  pts_.push_back({Dyadic::one(), Dyadic::one()});
}

PLMap PLMap::from_breakpoints(std::vector<Breakpoint> pts) {
  if (pts.size() < 2) throw std::invalid_argument("need at least two breakpoints");
  if (!(pts.front().in == Dyadic::zero()) || !(pts.front().out == Dyadic::zero()) ||
      !(pts.back().in == Dyadic::one()) || !(pts.back().out == Dyadic::one()))
    throw std::invalid_argument("map must fix 0 and 1");
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    slope_exponent(pts[k], pts[k + 1]);  // validates monotonicity + power-of-two slopes
  // canonical: drop interior points where the slope does not change
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  out.push_back(pts.front());
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    if (slope_exponent(out.back(), pts[k]) != slope_exponent(pts[k], pts[k + 1]))
      out.push_back(pts[k]);
  }
  out.push_back(pts.back());
  return PLMap(std::move(out), trusted{});
}

namespace {

// index of the segment containing t, searching on the chosen coordinate
template <typename Coord>
std::size_t find_segment(const std::vector<Breakpoint>& pts, const Dyadic& t, Coord coord) {
  std::size_t lo = 0, hi = pts.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (coord(pts[mid]) <= t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

void check_domain(const Dyadic& t) {
  if (t < Dyadic::zero() || t > Dyadic::one())
    throw std::domain_error("point outside [0,1]: " + t.str());
}

}  // namespace

Dyadic PLMap::operator()(const Dyadic& t) const {
  check_domain(t);
  const std::size_t k =
      find_segment(pts_, t, [](const Breakpoint& b) -> const Dyadic& { return b.in; });
  const long e = slope_exponent(pts_[k], pts_[k + 1]);
  return pts_[k].out + (t - pts_[k].in).shifted(e);
}

Dyadic PLMap::inverse_at(const Dyadic& t) const {
  check_domain(t);
  const std::size_t k =
      find_segment(pts_, t, [](const Breakpoint& b) -> const Dyadic& { return b.out; });
  const long e = slope_exponent(pts_[k], pts_[k + 1]);
  return pts_[k].in + (t - pts_[k].out).shifted(-e);
}

std::string PLMap::key() const {
  std::string s;
  s.reserve(pts_.size() * 16);
  for (const auto& p : pts_) {
    s += p.in.numerator().get_str(16);
    s += ',';
    s += std::to_string(p.in.exponent());
    s += ',';
    s += p.out.numerator().get_str(16);
    s += ',';
    s += std::to_string(p.out.exponent());
    s += ';';
  }
  return s;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // breakpoints of f∘g: breakpoints of g, plus g-preimages of breakpoints of f
  std::vector<Dyadic> xs;
  xs.reserve(f.pts_.size() + g.pts_.size());
  for (const auto& p : g.pts_) xs.push_back(p.in);
  for (std::size_t k = 1; k + 1 < f.pts_.size(); ++k) xs.push_back(g.inverse_at(f.pts_[k].in));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Dyadic y = f(g(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  // candidate set is exhaustive, so only collinear interior points remain to drop
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  out.push_back(std::move(pts.front()));
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    if (slope_exponent(out.back(), pts[k]) != slope_exponent(pts[k], pts[k + 1]))
      out.push_back(std::move(pts[k]));
  }
  out.push_back(std::move(pts.back()));
  return PLMap(std::move(out), PLMap::trusted{});
}

PLMap inverse(const PLMap& f) {
  std::vector<Breakpoint> pts;
  pts.reserve(f.pts_.size());
  for (const auto& p : f.pts_) pts.push_back({p.out, p.in});
  return PLMap(std::move(pts), PLMap::trusted{});
}

PLMap power(const PLMap& f, long k) {
  PLMap base = k < 0 ? inverse(f) : f;
  unsigned long m = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  PLMap acc;
  while (m != 0) {
    if (m & 1) acc = compose(acc, base);
    m >>= 1;
    if (m != 0) base = compose(base, base);
  }
  return acc;
}

namespace {

mpq_class pow2_mpq(long e) {
  mpz_class p = 1;
  p <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

}  // namespace

std::vector<Interval> support(const PLMap& f) {
  const auto& pts = f.breakpoints();
  const std::size_t nseg = pts.size() - 1;
  auto id_seg = [&](std::size_t k) {
    return pts[k].in == pts[k].out && pts[k + 1].in == pts[k + 1].out;
  };

  // complement components of the pointwise-identity segments
  std::vector<Interval> comps;
  std::size_t k = 0;
  while (k < nseg) {
    if (id_seg(k)) {
      ++k;
      continue;
    }
    const Dyadic lo = pts[k].in;
    while (k < nseg && !id_seg(k)) ++k;
    comps.push_back({lo, pts[k].in});
  }

  // isolated fixed points split a component: breakpoints on the diagonal,
  // and in-segment diagonal crossings when the crossing coordinate is
  // dyadic (a crossing of slope 2^e sits at (out - 2^e in)/(1 - 2^e),
  // which need not be dyadic; such points stay interior)
  std::vector<Dyadic> cuts;
  for (std::size_t s = 1; s + 1 < pts.size(); ++s)
    if (pts[s].in == pts[s].out) cuts.push_back(pts[s].in);
  for (std::size_t s = 0; s < nseg; ++s) {
    const Dyadic d0 = pts[s].out - pts[s].in;
    const Dyadic d1 = pts[s + 1].out - pts[s + 1].in;
    const Dyadic zero = Dyadic::zero();
    if ((d0 < zero && d1 > zero) || (d0 > zero && d1 < zero)) {
      const long e = slope_exponent(pts[s], pts[s + 1]);
      const mpq_class t =
          (pts[s].out.to_mpq() - pts[s].in.to_mpq() * pow2_mpq(e)) / (1 - pow2_mpq(e));
      if (mpz_popcount(t.get_den().get_mpz_t()) == 1)
        cuts.push_back(Dyadic(t.get_num(),
                              static_cast<unsigned>(mpz_scan1(t.get_den().get_mpz_t(), 0))));
    }
  }
  std::sort(cuts.begin(), cuts.end());

  std::vector<Interval> out;
  for (const Interval& comp : comps) {
    Dyadic lo = comp.lo;
    for (const Dyadic& cut : cuts) {
      if (lo < cut && cut < comp.hi) {
        out.push_back({lo, cut});
        lo = cut;
      }
    }
    out.push_back({lo, comp.hi});
  }
  return out;
}

bool is_identity_on(const PLMap& f, const Dyadic& lo, const Dyadic& hi) {
  if (lo > hi) throw std::invalid_argument("malformed interval");
  check_domain(lo);
  check_domain(hi);
  if (!(f(lo) == lo) || !(f(hi) == hi)) return false;
  for (const auto& p : f.breakpoints()) {
    if (lo < p.in && p.in < hi && !(p.in == p.out)) return false;
  }
  return true;
}

}  // namespace ftsp
