#include "s2gn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stack>
#include <stdexcept>

namespace s2gn {

std::vector<int> k_shell(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling, O(n + m).
  const int n = g.node_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  int max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    max_deg = std::max(max_deg, deg[static_cast<std::size_t>(v)]);
  }
  std::vector<int> bucket_start(static_cast<std::size_t>(max_deg + 2), 0);
  for (int d : deg) ++bucket_start[static_cast<std::size_t>(d + 1)];
  for (std::size_t i = 1; i < bucket_start.size(); ++i) bucket_start[i] += bucket_start[i - 1];

  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n));
  {
    std::vector<int> fill = bucket_start;
    for (NodeId v = 0; v < n; ++v) {
      pos[static_cast<std::size_t>(v)] = fill[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])]++;
      order[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
    }
  }

  std::vector<int> core = deg;
  for (int i = 0; i < n; ++i) {
    NodeId v = order[static_cast<std::size_t>(i)];
    for (NodeId w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (core[wi] > core[static_cast<std::size_t>(v)]) {
        // Move w one bucket down: swap it with the first node of its bucket.
        const int dw = core[wi];
        const int pw = pos[wi];
        const int start = bucket_start[static_cast<std::size_t>(dw)];
        const NodeId u = order[static_cast<std::size_t>(start)];
        if (u != w) {
          std::swap(order[static_cast<std::size_t>(start)], order[static_cast<std::size_t>(pw)]);
          pos[wi] = start;
          pos[static_cast<std::size_t>(u)] = pw;
        }
        ++bucket_start[static_cast<std::size_t>(dw)];
        --core[wi];
      }
    }
  }
  return core;
}

namespace {

// One Brandes source sweep. Calls accumulate(v, w, contribution) for every
// predecessor edge v->w on a shortest path, after delta(w) is final.
template <typename EdgeAccumulate, typename NodeAccumulate>
void brandes_sweep(const Graph& g, NodeId s, std::vector<double>& sigma, std::vector<int>& dist,
                   std::vector<double>& delta, EdgeAccumulate&& on_edge, NodeAccumulate&& on_node) {
  const int n = g.node_count();
  std::fill(sigma.begin(), sigma.end(), 0.0);
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(delta.begin(), delta.end(), 0.0);
  std::vector<NodeId> visit_order;
  visit_order.reserve(static_cast<std::size_t>(n));

  sigma[static_cast<std::size_t>(s)] = 1.0;
  dist[static_cast<std::size_t>(s)] = 0;
  std::queue<NodeId> queue;
  queue.push(s);
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    visit_order.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (dist[wi] < 0) {
        dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push(w);
      }
      if (dist[wi] == dist[static_cast<std::size_t>(v)] + 1) {
        sigma[wi] += sigma[static_cast<std::size_t>(v)];
      }
    }
  }
  for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
    NodeId w = *it;
    for (NodeId v : g.neighbors(w)) {
      if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(w)] - 1) {
        const double c = sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
                         (1.0 + delta[static_cast<std::size_t>(w)]);
        on_edge(v, w, c);
        delta[static_cast<std::size_t>(v)] += c;
      }
    }
    if (w != s) on_node(w, delta[static_cast<std::size_t>(w)]);
  }
}

}  // namespace

NodeScores betweenness_nodes(const Graph& g) {
  const int n = g.node_count();
  NodeScores bc(static_cast<std::size_t>(n), 0.0);
  if (n <= 2) return bc;
  std::vector<double> sigma(static_cast<std::size_t>(n));
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<double> delta(static_cast<std::size_t>(n));
  for (NodeId s = 0; s < n; ++s) {
    brandes_sweep(
        g, s, sigma, dist, delta, [](NodeId, NodeId, double) {},
        [&](NodeId w, double d) { bc[static_cast<std::size_t>(w)] += d; });
  }
  // Each unordered pair is counted from both endpoints; halving plus the
  // 2/((n-1)(n-2)) convention collapses to 1/((n-1)(n-2)).
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& x : bc) x *= scale;
  return bc;
}

std::map<EdgeKey, double> edge_betweenness(const Graph& g) {
  const int n = g.node_count();
  std::map<EdgeKey, double> eb;
  for (const EdgeKey& e : g.edges()) eb.emplace(e, 0.0);
  std::vector<double> sigma(static_cast<std::size_t>(n));
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<double> delta(static_cast<std::size_t>(n));
  for (NodeId s = 0; s < n; ++s) {
    brandes_sweep(
        g, s, sigma, dist, delta,
        [&](NodeId v, NodeId w, double c) { eb[EdgeKey(v, w)] += c; }, [](NodeId, double) {});
  }
  return eb;
}

NodeScores closeness(const Graph& g) {
  const int n = g.node_count();
  NodeScores out(static_cast<std::size_t>(n), 0.0);
  if (n <= 1) return out;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<NodeId> queue;
    queue.push(s);
    long long sum = 0;
    int reached = 1;
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      for (NodeId w : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          sum += dist[static_cast<std::size_t>(w)];
          ++reached;
          queue.push(w);
        }
      }
    }
    if (sum > 0) {
      const double c = static_cast<double>(reached - 1);
      out[static_cast<std::size_t>(s)] = (c / static_cast<double>(sum)) * (c / static_cast<double>(n - 1));
    }
  }
  return out;
}

namespace {

// Power iteration with an optional diagonal shift (A + shift*I).
EigenResult power_iteration(const Graph& g, double tol, int max_iter, double shift) {
  const auto n = static_cast<std::size_t>(g.node_count());
  EigenResult res;
  res.values.assign(n, 0.0);
  if (n == 0 || g.edge_count() == 0) return res;  // zero matrix: all zeros, not converged

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  for (int it = 0; it < max_iter; ++it) {
    for (std::size_t v = 0; v < n; ++v) {
      double acc = shift * x[v];
      for (NodeId w : g.neighbors(static_cast<NodeId>(v))) acc += x[static_cast<std::size_t>(w)];
      next[v] = acc;
    }
    double norm = 0.0;
    for (double t : next) norm += t * t;
    norm = std::sqrt(norm);
    if (norm == 0.0) {  // start vector orthogonal to the range; nothing to normalize
      res.values = next;
      return res;
    }
    double l1_diff = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] /= norm;
      l1_diff += std::abs(next[v] - x[v]);
    }
    x.swap(next);
    if (l1_diff < tol) {
      res.converged = true;
      break;
    }
  }
  res.values = x;
  // Rayleigh quotient of the (unit) iterate against the unshifted adjacency.
  double r = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    double row = 0.0;
    for (NodeId w : g.neighbors(static_cast<NodeId>(v))) row += x[static_cast<std::size_t>(w)];
    r += x[v] * row;
  }
  res.eigenvalue = r;
  return res;
}

EigenResult adjacency_principal(const Graph& g, double tol, int max_iter) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  EigenResult res = power_iteration(g, tol, max_iter, 0.0);
  if (!res.converged && g.edge_count() > 0) {
    // Bipartite spectra are symmetric and make the raw iteration oscillate;
    // the A + I shift has the same eigenvectors and breaks the tie.
    EigenResult damped = power_iteration(g, tol, max_iter, 1.0);
    if (damped.converged) return damped;
  }
  return res;
}

}  // namespace

EigenResult eigenvector_centrality(const Graph& g, double tol, int max_iter) {
  return adjacency_principal(g, tol, max_iter);
}

EigenResult largest_adjacency_eigenvalue(const Graph& g, double tol, int max_iter) {
  return adjacency_principal(g, tol, max_iter);
}

NodeScores clustering_coefficients(const Graph& g) {
  const int n = g.node_count();
  NodeScores out(static_cast<std::size_t>(n), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const int d = static_cast<int>(nbrs.size());
    if (d < 2) continue;
    long long links = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) ++links;
      }
    }
    out[static_cast<std::size_t>(v)] =
        2.0 * static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return out;
}

double leaf_fraction(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  int leaves = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 1) ++leaves;
  }
  return static_cast<double>(leaves) / static_cast<double>(g.node_count());
}

}  // namespace s2gn
