#include "pdsort/oracles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace pdsort::oracle {

std::uint64_t bell(int m) {
  if (m < 0) throw std::invalid_argument("bell: negative argument");
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<std::vector<int>> set_partitions_by_filter(int m) {
  if (m < 0 || m > 7) throw std::invalid_argument("set_partitions_by_filter: m out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(m), 0);
  while (true) {
    // Keep f iff each label's first occurrence introduces labels in order.
    int next_fresh = 0;
    bool ok = true;
    for (int x : f) {
      if (x > next_fresh) {
        ok = false;
        break;
      }
      if (x == next_fresh) ++next_fresh;
    }
    if (ok) out.push_back(f);
    int i = m - 1;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == m - 1) f[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return out;
}

Word stack_sort(const Word& w) {
  std::vector<int> stack;
  std::vector<int> out;
  for (int x : w.letters()) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return Word(std::move(out));
}

bool contains_231(const Word& p) {
  const auto a = p.letters();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (std::size_t k = j + 1; k < a.size(); ++k)
        if (a[k] < a[i] && a[i] < a[j]) return true;
  return false;
}

Composite compose(const PartitionDiagram& d1, const PartitionDiagram& d2) {
  const int n = d1.order();
  // Vertex ids: row r in {0 top, 1 middle, 2 bottom}, index i -> r * n + i - 1.
  const int v = 3 * n;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(v));
  auto connect_block = [&](const Block& b, int top_row, int bottom_row) {
    std::vector<int> ids;
    for (int i : indices_of(b.top)) ids.push_back(top_row * n + i - 1);
    for (int i : indices_of(b.bottom)) ids.push_back(bottom_row * n + i - 1);
    for (int a : ids)
      for (int c : ids)
        if (a != c) adj[static_cast<std::size_t>(a)].push_back(c);
  };
  for (const Block& b : d1.blocks()) connect_block(b, 0, 1);
  for (const Block& b : d2.blocks()) connect_block(b, 1, 2);

  std::vector<int> comp(static_cast<std::size_t>(v), -1);
  std::vector<std::vector<NodeId>> raw;
  Composite out;
  for (int s = 0; s < v; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = s;
    std::vector<NodeId> kept;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      const int row = x / n;
      const int idx = x % n + 1;
      if (row == 0) kept.push_back(top(idx));
      if (row == 2) kept.push_back(bottom(idx));
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = s;
          q.push(y);
        }
      }
    }
    if (kept.empty()) {
      ++out.middle_count;
    } else {
      raw.push_back(std::move(kept));
    }
  }
  out.diagram = PartitionDiagram::from_nodes(n, raw);
  return out;
}

std::vector<SetComposition> set_compositions_of_subsets(int n) {
  std::vector<SetComposition> out;
  // Label each element 0 (unused) or 1..m with labels 1..m all used.
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  while (true) {
    const int m = n == 0 ? 0 : *std::max_element(label.begin(), label.end());
    std::vector<IndexMask> parts(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i) {
      const int l = label[static_cast<std::size_t>(i)];
      if (l > 0) parts[static_cast<std::size_t>(l - 1)] |= index_bit(i + 1);
    }
    if (std::all_of(parts.begin(), parts.end(), [](IndexMask p) { return p != 0; })) {
      out.emplace_back(std::move(parts));
    }
    int i = n - 1;
    while (i >= 0 && label[static_cast<std::size_t>(i)] == n) label[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++label[static_cast<std::size_t>(i)];
  }
  return out;
}

bool is_stretch_of_identity_by_search(const PartitionDiagram& d) {
  const int n = d.order();
  for (const SetComposition& alpha : set_compositions_of_subsets(n)) {
    if (stretch_map(alpha, n, identity_diagram(alpha.length())) == d) return true;
  }
  return false;
}

namespace {

std::uint64_t binomial(int n, int k) {
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

std::uint64_t two_stack_sortable(int n) {
  // 2(3n)! / ((n+1)! (2n+1)!) = 2 * C(3n, n) / ((n+1)(2n+1))
  const unsigned __int128 num = static_cast<unsigned __int128>(2) * binomial(3 * n, n);
  return static_cast<std::uint64_t>(num / static_cast<unsigned>((n + 1) * (2 * n + 1)));
}

}  // namespace pdsort::oracle
