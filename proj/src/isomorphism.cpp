#include "alphaidx/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "alphaidx/metrics.hpp"

namespace alphaidx {
namespace {

struct Matcher {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& color_g;
  const std::vector<int>& color_h;
  std::vector<int> order;  // g vertices in match order
  std::vector<int> image;  // g vertex -> h vertex
  Row used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    int a = order[depth];
    for (int b = 0; b < h.order(); ++b) {
      if ((used >> b) & 1u || color_h[b] != color_g[a]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        int c = order[k];
        ok = g.adjacent(a, c) == h.adjacent(b, image[c]);
      }
      if (!ok) continue;
      image[a] = b;
      used |= Row{1} << b;
      if (extend(depth + 1)) return true;
      used &= ~(Row{1} << b);
    }
    return false;
  }
};

struct Canonizer {
  const Graph& g;
  int n;
  int width;                    // number of code bits
  std::vector<Row> cell_of_pos;  // candidates for each position
  std::vector<int> placed;
  Row used = 0;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  void search(int depth, std::uint64_t code, int bits) {
    if (depth == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    Row candidates = cell_of_pos[depth] & ~used;
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      std::uint64_t next = code;
      for (int i = 0; i < depth; ++i) {
        if (g.adjacent(placed[i], v)) next |= std::uint64_t{1} << (width - 1 - (bits + i));
      }
      int next_bits = bits + depth;
      if (have_best && next_bits > 0) {
        int shift = width - next_bits;
        std::uint64_t mine = next >> shift;
        std::uint64_t theirs = best >> shift;
        if (mine > theirs) continue;
      }
      placed[depth] = v;
      used |= Row{1} << v;
      search(depth + 1, next, next_bits);
      used &= ~(Row{1} << v);
    }
  }
};

std::string rooted_form(const Graph& t, int v, int parent) {
  std::vector<std::string> children;
  for (Row r = t.neighbors(v); r; r &= r - 1) {
    int w = std::countr_zero(r);
    if (w != parent) children.push_back(rooted_form(t, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("colour vector size mismatch");
  // Normalise the initial colours to dense ranks.
  {
    std::vector<int> values = colors;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto& c : colors) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = signature[v];
      s.push_back(colors[v]);
      std::vector<int> around;
      for (Row r = g.neighbors(v); r; r &= r - 1) around.push_back(colors[std::countr_zero(r)]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> unique = signature;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (int v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(unique.begin(), unique.end(), signature[v]) - unique.begin());
    }
    if (unique.size() == classes) break;
    classes = unique.size();
  }
  return colors;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw std::invalid_argument("is_isomorphic supports orders up to 10");
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  const int n = g.order();
  if (n == 0) return true;
  auto dg = g.degrees();
  auto dh = h.degrees();
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  // Refine the disjoint union so colours are comparable across g and h.
  Graph joint = g.with_vertices(n);
  for (auto [a, b] : h.edges()) joint = joint.with_edge(a + n, b + n);
  std::vector<int> initial = dg;
  initial.insert(initial.end(), dh.begin(), dh.end());
  auto colors = refine_colors(joint, initial);
  std::vector<int> cg(colors.begin(), colors.begin() + n);
  std::vector<int> ch(colors.begin() + n, colors.end());
  {
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::map<int, int> cell_size;
  for (int c : cg) ++cell_size[c];
  Matcher m{g, h, cg, ch, {}, std::vector<int>(static_cast<std::size_t>(n), -1)};
  for (int v = 0; v < n; ++v) m.order.push_back(v);
  std::stable_sort(m.order.begin(), m.order.end(),
                   [&](int a, int b) { return cell_size[cg[a]] < cell_size[cg[b]]; });
  return m.extend(0);
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw std::invalid_argument("canonical_code supports orders up to 11");
  if (n <= 1) return 0;
  auto colors = refine_colors(g, g.degrees());
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  Canonizer c{g, n, n * (n - 1) / 2, std::vector<Row>(static_cast<std::size_t>(n), 0),
              std::vector<int>(static_cast<std::size_t>(n), -1)};
  for (int pos = 0; pos < n; ++pos) {
    for (int v = 0; v < n; ++v) {
      if (colors[v] == sorted[pos]) c.cell_of_pos[pos] |= Row{1} << v;
    }
  }
  c.search(0, 0, 0);
  return c.best;
}

std::string rooted_tree_canonical_form(const Graph& tree, int root) {
  if (!is_tree(tree)) throw std::invalid_argument("not a tree");
  if (root < 0 || root >= tree.order()) throw std::out_of_range("root out of range");
  return rooted_form(tree, root, -1);
}

std::string tree_canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("not a tree");
  const int n = tree.order();
  if (n <= 2) return rooted_form(tree, 0, -1);
  // Strip leaves layer by layer; the last one or two vertices are the centers.
  auto degree = tree.degrees();
  Row remaining = n == 32 ? ~Row{0} : (Row{1} << n) - 1;
  int left = n;
  while (left > 2) {
    Row leaves = 0;
    for (Row r = remaining; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (degree[v] <= 1) leaves |= Row{1} << v;
    }
    for (Row r = leaves; r; r &= r - 1) {
      int v = std::countr_zero(r);
      for (Row s = tree.neighbors(v) & remaining; s; s &= s - 1) --degree[std::countr_zero(s)];
      --left;
    }
    remaining &= ~leaves;
  }
  std::string best;
  for (Row r = remaining; r; r &= r - 1) {
    auto form = rooted_form(tree, std::countr_zero(r), -1);
    if (best.empty() || form < best) best = form;
  }
  return best;
}

}  // namespace alphaidx
