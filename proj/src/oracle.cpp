#include "ftsp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace ftsp {

namespace {

std::vector<PLMap> signed_generator_maps(const Alphabet& alphabet) {
  std::vector<PLMap> maps;
  maps.reserve(2 * alphabet.size());
  for (const Generator& g : alphabet.gens) {
    maps.push_back(g.map);
    maps.push_back(inverse(g.map));
  }
  return maps;
}

}  // namespace

long CayleyBall::sphere_size(int r) const {
  long count = 0;
  for (int d : dist)
    if (d == r) ++count;
  return count;
}

CayleyBall cayley_ball(const Alphabet& alphabet, int radius, int radius_cap) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  if (radius > radius_cap)
    throw cap_error("ball radius " + std::to_string(radius) + " exceeds cap " +
                    std::to_string(radius_cap));
  CayleyBall ball;
  ball.alphabet = alphabet;
  ball.radius = radius;
  const std::vector<PLMap> gens = signed_generator_maps(alphabet);
  const std::size_t degree = gens.size();

  ball.elements.emplace_back();
  ball.dist.push_back(0);
  ball.adj.emplace_back(degree, -1);
  ball.index.emplace(ball.elements[0].key(), 0);

  for (std::size_t head = 0; head < ball.elements.size(); ++head) {
    for (std::size_t s = 0; s < degree; ++s) {
      PLMap h = compose(ball.elements[head], gens[s]);
      const std::string key = h.key();
      auto it = ball.index.find(key);
      if (it != ball.index.end()) {
        ball.adj[head][s] = it->second;
        continue;
      }
      if (ball.dist[head] == radius) continue;  // image lies outside the ball; adj stays -1
      const int id = static_cast<int>(ball.elements.size());
      ball.index.emplace(key, id);
      ball.elements.push_back(std::move(h));
      ball.dist.push_back(ball.dist[head] + 1);
      ball.adj.emplace_back(degree, -1);
      ball.adj[head][s] = id;
    }
  }
  return ball;
}

long graph_distance(const PLMap& a, const PLMap& b, const Alphabet& alphabet, int max_radius,
                    const CayleyBall* hint) {
  const PLMap m = compose(inverse(a), b);
  if (m.is_identity()) return 0;
  if (hint != nullptr) {
    const int id = hint->find(m);
    if (id >= 0) return hint->dist[id];
  }

  const std::vector<PLMap> gens = signed_generator_maps(alphabet);
  struct Side {
    std::unordered_map<std::string, int> dist;
    std::vector<PLMap> frontier;
    int radius = 0;
  };
  Side fwd, bwd;
  fwd.dist.emplace(PLMap().key(), 0);
  fwd.frontier.emplace_back();
  bwd.dist.emplace(m.key(), 0);
  bwd.frontier.push_back(m);

  long best = std::numeric_limits<long>::max();
  while (fwd.radius + bwd.radius < best && fwd.radius + bwd.radius <= max_radius) {
    Side& self = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    Side& other = (&self == &fwd) ? bwd : fwd;
    std::vector<PLMap> next;
    for (const PLMap& g : self.frontier) {
      for (const PLMap& s : gens) {
        PLMap h = compose(g, s);
        const std::string key = h.key();
        if (self.dist.count(key)) continue;
        self.dist.emplace(key, self.radius + 1);
        auto hit = other.dist.find(key);
        if (hit != other.dist.end())
          best = std::min<long>(best, self.radius + 1 + hit->second);
        next.push_back(std::move(h));
      }
    }
    self.frontier = std::move(next);
    ++self.radius;
    if (self.frontier.empty()) break;
  }
  if (best <= max_radius) return best;
  throw cap_error("distance exceeds max radius " + std::to_string(max_radius));
}

TourInstance make_tour_instance(const Alphabet& alphabet, std::vector<PLMap> points,
                                std::vector<LetterSeq> words, int max_radius,
                                const CayleyBall* hint) {
  const std::size_t k = points.size();
  if (k == 0) throw std::invalid_argument("instance needs at least one point");
  if (!words.empty() && words.size() != k)
    throw std::invalid_argument("labels and points disagree in number");
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < k; ++i)
    if (!seen.emplace(points[i].key(), static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate point at index " + std::to_string(i));

  TourInstance inst;
  inst.alphabet = alphabet;
  inst.words = std::move(words);
  inst.points = std::move(points);
  inst.metric.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const long d = graph_distance(inst.points[i], inst.points[j], alphabet, max_radius, hint);
      inst.metric[i][j] = d;
      inst.metric[j][i] = d;
    }
  return inst;
}

void check_metric_axioms(const TourInstance& inst) {
  const std::size_t k = inst.points.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (inst.metric[i][i] != 0) throw verification_error("nonzero diagonal");
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && inst.metric[i][j] <= 0) throw verification_error("nonpositive distance");
      if (inst.metric[i][j] != inst.metric[j][i]) throw verification_error("asymmetric metric");
      for (std::size_t l = 0; l < k; ++l)
        if (inst.metric[i][j] > inst.metric[i][l] + inst.metric[l][j])
          throw verification_error("triangle inequality fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(l) + ")");
    }
  }
}

TourResult exact_tour(const TourInstance& inst, int max_points) {
  const int k = static_cast<int>(inst.points.size());
  if (k > max_points)
    throw cap_error("tour size " + std::to_string(k) + " exceeds cap " +
                    std::to_string(max_points));
  TourResult res;
  if (k == 1) {
    res.order = {0};
    res.tau = 0;
    return res;
  }

  // Held-Karp over the k-1 non-start points
  const int m = k - 1;
  const std::uint32_t full = (1u << m) - 1;
  const long INF = std::numeric_limits<long>::max() / 4;
  std::vector<long> dp(static_cast<std::size_t>(full + 1) * m, INF);
  std::vector<std::uint8_t> parent(dp.size(), 0xff);
  auto at = [m](std::uint32_t mask, int j) -> std::size_t {
    return static_cast<std::size_t>(mask) * m + j;
  };
  for (int j = 0; j < m; ++j) dp[at(1u << j, j)] = inst.metric[0][j + 1];
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (1u << j))) continue;
      const long cur = dp[at(mask, j)];
      if (cur >= INF) continue;
      for (int t = 0; t < m; ++t) {
        if (mask & (1u << t)) continue;
        const std::uint32_t nmask = mask | (1u << t);
        const long cand = cur + inst.metric[j + 1][t + 1];
        if (cand < dp[at(nmask, t)]) {
          dp[at(nmask, t)] = cand;
          parent[at(nmask, t)] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }
  long best = INF;
  int best_j = 0;
  for (int j = 0; j < m; ++j) {
    const long cand = dp[at(full, j)] + inst.metric[j + 1][0];
    if (cand < best) {
      best = cand;
      best_j = j;
    }
  }
  std::vector<int> rev;
  std::uint32_t mask = full;
  int j = best_j;
  while (true) {
    rev.push_back(j + 1);
    const std::uint8_t p = parent[at(mask, j)];
    mask &= ~(1u << j);
    if (p == 0xff) break;
    j = p;
  }
  res.order.push_back(0);
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) res.order.push_back(*it);
  res.length = best;
  res.tau = mpq_class(best, k);
  res.tau.canonicalize();
  return res;
}

TourResult brute_force_tour(const TourInstance& inst, int max_points) {
  const int k = static_cast<int>(inst.points.size());
  if (k > max_points)
    throw cap_error("brute force size " + std::to_string(k) + " exceeds cap " +
                    std::to_string(max_points));
  TourResult res;
  if (k == 1) {
    res.order = {0};
    res.tau = 0;
    return res;
  }
  std::vector<int> perm(k - 1);
  std::iota(perm.begin(), perm.end(), 1);
  long best = std::numeric_limits<long>::max();
  std::vector<int> best_perm;
  do {
    long len = inst.metric[0][perm.front()] + inst.metric[perm.back()][0];
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) len += inst.metric[perm[i]][perm[i + 1]];
    if (len < best) {
      best = len;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  res.order.push_back(0);
  res.order.insert(res.order.end(), best_perm.begin(), best_perm.end());
  res.length = best;
  res.tau = mpq_class(best, k);
  res.tau.canonicalize();
  return res;
}

TreeTour spanning_tree_tour(const Alphabet& alphabet, const std::vector<PLMap>& points) {
  const int k = static_cast<int>(points.size());
  if (k == 0) throw std::invalid_argument("empty point set");
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < k; ++i) index.emplace(points[i].key(), i);
  const std::vector<PLMap> gens = signed_generator_maps(alphabet);

  std::vector<std::vector<int>> nbrs(k);
  for (int i = 0; i < k; ++i) {
    for (const PLMap& s : gens) {
      auto it = index.find(compose(points[i], s).key());
      if (it != index.end() && it->second != i) nbrs[i].push_back(it->second);
    }
    std::sort(nbrs[i].begin(), nbrs[i].end());
    nbrs[i].erase(std::unique(nbrs[i].begin(), nbrs[i].end()), nbrs[i].end());
  }

  // BFS spanning tree from point 0
  std::vector<int> parent(k, -2);
  std::vector<int> order;
  parent[0] = -1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : nbrs[order[head]]) {
      if (parent[w] == -2) {
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != k) {
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int i = 0; i < k; ++i) {
      if (comp[i] >= 0) continue;
      std::vector<int> stack{i};
      comp[i] = ncomp;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : nbrs[u])
          if (comp[w] < 0) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }
    std::vector<int> sizes(ncomp, 0);
    for (int c : comp) ++sizes[c];
    std::string msg = "induced subgraph is disconnected: " + std::to_string(ncomp) +
                      " components of sizes";
    for (int s : sizes) msg += " " + std::to_string(s);
    throw std::invalid_argument(msg);
  }

  std::vector<std::vector<int>> children(k);
  for (int i = 1; i < k; ++i) children[parent[order[i]]].push_back(order[i]);

  TreeTour tour;
  // iterative Euler walk: append on entry and after each child returns
  struct Frame {
    int node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{0, 0}};
  tour.walk.push_back(0);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_child < children[f.node].size()) {
      const int c = children[f.node][f.next_child++];
      tour.walk.push_back(c);
      stack.push_back({c, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) tour.walk.push_back(stack.back().node);
    }
  }
  tour.length = static_cast<long>(tour.walk.size()) - 1;
  return tour;
}

bool is_xi_related(const std::vector<PLMap>& set, const PLMap& xi) {
  if (set.empty()) throw std::invalid_argument("xi-related sets must be nonempty");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < set.size(); ++i) index.emplace(set[i].key(), static_cast<int>(i));
  const PLMap xi_inv = inverse(xi);
  for (const PLMap& g : set) {
    if (!index.count(compose(g, xi).key()) && !index.count(compose(g, xi_inv).key()))
      return false;
  }
  return true;
}

}  // namespace ftsp
