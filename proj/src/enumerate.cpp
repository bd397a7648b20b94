#include "alphaidx/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "alphaidx/isomorphism.hpp"
#include "alphaidx/metrics.hpp"

namespace alphaidx {
namespace {

void check_enumeration_order(int n, bool allow_order8) {
  const int limit = allow_order8 ? kOverrideEnumerationLimit : kDefaultEnumerationLimit;
  if (n < 1 || n > limit) {
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside [1, " + std::to_string(limit) +
                                "]" + (allow_order8 ? "" : " (order 8 needs the explicit override)"));
  }
}

bool mask_connected(int n, const std::array<Row, kMaxOrder>& rows) {
  const Row all = (Row{1} << n) - 1;
  Row seen = 1, frontier = 1;
  while (frontier) {
    Row next = 0;
    for (Row f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

void rows_from_mask(int n, std::uint64_t mask, std::array<Row, kMaxOrder>& rows) {
  rows.fill(0);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1u) {
        rows[i] |= Row{1} << j;
        rows[j] |= Row{1} << i;
      }
    }
  }
}

using ClassMap = std::unordered_map<std::uint64_t, std::uint64_t>;  // canonical code -> min mask

void dedup_range(int n, std::uint64_t begin, std::uint64_t end, ClassMap& out) {
  for_each_connected(n, begin, end, [&](const Graph& g, std::uint64_t mask) {
    auto [it, inserted] = out.try_emplace(canonical_code(g), mask);
    if (!inserted && mask < it->second) it->second = mask;
  });
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > kMaxCanonicalOrder) throw std::invalid_argument("mask graphs support orders 1..11");
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::uint64_t mask_of(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw std::invalid_argument("mask graphs support orders up to 11");
  std::uint64_t mask = 0;
  int bit = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << bit;
    }
  }
  return mask;
}

void for_each_connected(int n, std::uint64_t begin, std::uint64_t end,
                        const std::function<void(const Graph&, std::uint64_t)>& visit) {
  if (n < 1 || n > kOverrideEnumerationLimit) throw std::invalid_argument("enumeration order outside [1, 8]");
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  end = std::min(end, total);
  std::array<Row, kMaxOrder> rows{};
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    rows_from_mask(n, mask, rows);
    if (!mask_connected(n, rows)) continue;
    visit(graph_from_mask(n, mask), mask);
  }
}

std::vector<Graph> enumerate_connected(int n, const EnumerationOptions& options) {
  check_enumeration_order(n, options.allow_order8);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  std::vector<Graph> out;
  if (!options.dedup) {
    for_each_connected(n, 0, total, [&](const Graph& g, std::uint64_t) { out.push_back(g); });
    return out;
  }
  const int workers = std::max(1, options.workers);
  std::vector<ClassMap> shards(static_cast<std::size_t>(workers));
  const std::uint64_t step = (total + workers - 1) / workers;
  if (workers == 1) {
    dedup_range(n, 0, total, shards[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = std::min(total, step * w), hi = std::min(total, step * (w + 1));
      pool.emplace_back([n, lo, hi, &shards, w] { dedup_range(n, lo, hi, shards[w]); });
    }
    for (auto& t : pool) t.join();
  }
  ClassMap merged;
  for (const auto& shard : shards) {
    for (auto [code, mask] : shard) {
      auto [it, inserted] = merged.try_emplace(code, mask);
      if (!inserted && mask < it->second) it->second = mask;
    }
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(merged.size());
  for (auto [code, mask] : merged) masks.push_back(mask);
  std::sort(masks.begin(), masks.end());
  out.reserve(masks.size());
  for (auto mask : masks) out.push_back(graph_from_mask(n, mask));
  return out;
}

Graph tree_from_pruefer(int n, const std::vector<int>& sequence) {
  if (n < 2 || n > kMaxOrder) throw std::invalid_argument("tree order outside [2, 32]");
  if (static_cast<int>(sequence.size()) != n - 2) throw std::invalid_argument("Pruefer sequence must have n-2 entries");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : sequence) {
    if (s < 0 || s >= n) throw std::invalid_argument("Pruefer entry out of range");
    ++degree[s];
  }
  std::vector<Edge> edges;
  for (int s : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

std::vector<Graph> enumerate_trees(int n, bool dedup) {
  if (n < 2 || n > kMaxTreeOrder) throw std::invalid_argument("tree enumeration order outside [2, 9]");
  if (!dedup && n > 8) throw std::invalid_argument("labeled tree lists are limited to order 8");
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Graph t = tree_from_pruefer(n, seq);
    if (!dedup || seen.insert(tree_canonical_form(t)).second) out.push_back(t);
    // Lexicographic increment.
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

std::vector<RootedTree> enumerate_rooted_trees(int m) {
  if (m < 1 || m > kMaxTreeOrder) throw std::invalid_argument("rooted tree order outside [1, 9]");
  if (m == 1) return {RootedTree{{-1}, 0}};
  std::vector<RootedTree> out;
  std::set<std::string> seen;
  for (const Graph& t : enumerate_trees(m, true)) {
    for (int root = 0; root < m; ++root) {
      if (!seen.insert(rooted_tree_canonical_form(t, root)).second) continue;
      RootedTree rt{std::vector<int>(static_cast<std::size_t>(m), -2), root};
      rt.parent[root] = -1;
      std::vector<int> queue{root};
      for (std::size_t k = 0; k < queue.size(); ++k) {
        int v = queue[k];
        for (Row r = t.neighbors(v); r; r &= r - 1) {
          int w = std::countr_zero(r);
          if (rt.parent[w] == -2) {
            rt.parent[w] = v;
            queue.push_back(w);
          }
        }
      }
      out.push_back(std::move(rt));
    }
  }
  return out;
}

}  // namespace alphaidx
