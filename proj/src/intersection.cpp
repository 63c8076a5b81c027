#include "cagraph/intersection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cagraph
{

IntersectionType dual(IntersectionType t)
{
  switch (t) {
  case IntersectionType::cd:
    return IntersectionType::cs;
  case IntersectionType::cs:
    return IntersectionType::cd;
  default:
    return t;
  }
}

std::string_view to_string(IntersectionType t)
{
  switch (t) {
  case IntersectionType::di:
    return "di";
  case IntersectionType::ov:
    return "ov";
  case IntersectionType::cd:
    return "cd";
  case IntersectionType::cs:
    return "cs";
  case IntersectionType::cc:
    return "cc";
  }
  return "?";
}

IntersectionMatrix::IntersectionMatrix(int n)
    : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), IntersectionType::di)
{
  if (n < 0)
    throw std::invalid_argument("negative matrix size");
}

void IntersectionMatrix::set(Vertex u, Vertex v, IntersectionType t)
{
  if (u == v)
    throw std::invalid_argument("diagonal entries of an intersection matrix are undefined");
  cells_[index(u, v)] = t;
  cells_[index(v, u)] = dual(t);
}

bool IntersectionMatrix::contains(IntersectionType t) const
{
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (u != v && at(u, v) == t)
        return true;
  return false;
}

bool IntersectionMatrix::dual_symmetric() const
{
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (at(v, u) != dual(at(u, v)))
        return false;
  return true;
}

IntersectionMatrix IntersectionMatrix::permuted(std::span<const Vertex> perm) const
{
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size differs from matrix size");
  IntersectionMatrix out(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (u != v)
        out.cells_[out.index(perm[u], perm[v])] = at(u, v);
  return out;
}

IntersectionMatrix neighborhood_matrix(const Graph &g)
{
  const int n = g.size();
  IntersectionMatrix m(n);
  for (Vertex u = 0; u < n; ++u) {
    const Bitset &nu = g.closed_row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const Bitset &nv = g.closed_row(v);
      if (!nu.test(v)) {
        m.set(u, v, IntersectionType::di);
      } else if (nu.is_proper_subset_of(nv)) {
        m.set(u, v, IntersectionType::cd);
      } else if (nv.is_proper_subset_of(nu)) {
        m.set(u, v, IntersectionType::cs);
      } else {
        // Neither contains the other here, so N[u] and N[v] overlap.
        bool cover = (nu | nv).all();
        const auto pendant_side = [&](const Bitset &own, const Bitset &other) {
          const Bitset only = own - other;
          for (auto w = only.find_first(); w != Bitset::npos; w = only.find_next(w))
            if (!g.closed_row(static_cast<Vertex>(w)).is_subset_of(own))
              return false;
          return true;
        };
        cover = cover && pendant_side(nu, nv) && pendant_side(nv, nu);
        m.set(u, v, cover ? IntersectionType::cc : IntersectionType::ov);
      }
    }
  }
  return m;
}

namespace
{

enum FlipRow { flip_first = 0, flip_second = 1, flip_both = 2 };

// Columns follow the enum order di, ov, cd, cs, cc.
constexpr IntersectionType flip_table[3][5] = {
    // only the first arc flipped
    {IntersectionType::cs, IntersectionType::ov, IntersectionType::cc, IntersectionType::di,
     IntersectionType::cd},
    // only the second arc flipped
    {IntersectionType::cd, IntersectionType::ov, IntersectionType::di, IntersectionType::cc,
     IntersectionType::cs},
    // both flipped
    {IntersectionType::cc, IntersectionType::ov, IntersectionType::cs, IntersectionType::cd,
     IntersectionType::di},
};

} // namespace

IntersectionMatrix flip_matrix(const IntersectionMatrix &m, const VertexSet &x)
{
  const int n = m.size();
  const Bitset flipped = to_bitset(x, n);
  IntersectionMatrix out = m;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool fu = flipped.test(u), fv = flipped.test(v);
      if (!fu && !fv)
        continue;
      const FlipRow row = fu && fv ? flip_both : (fu ? flip_first : flip_second);
      out.set(u, v, flip_table[row][static_cast<int>(m.at(u, v))]);
    }
  return out;
}

namespace
{

// Joint color refinement on the disjoint union of a and b, so that colors of
// both sides are comparable.
std::vector<int> refine(const IntersectionMatrix &a, const IntersectionMatrix &b)
{
  const int n = a.size();
  const auto entry = [&](int u, int v) {
    return u < n ? a.at(u, v) : b.at(u - n, v - n);
  };
  std::vector<int> color(2 * n, 0);
  int classes = 1;
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(2 * n);
    for (int u = 0; u < 2 * n; ++u) {
      const int base = u < n ? 0 : n;
      std::vector<int> pairs;
      for (int v = base; v < base + n; ++v)
        if (v != u)
          pairs.push_back(static_cast<int>(entry(u, v)) * (2 * n + 1) + color[v]);
      std::sort(pairs.begin(), pairs.end());
      pairs.insert(pairs.begin(), color[u]);
      sig[u] = std::move(pairs);
      ids.emplace(sig[u], 0);
    }
    int next = 0;
    for (auto &[key, id] : ids)
      id = next++;
    for (int u = 0; u < 2 * n; ++u)
      color[u] = ids[sig[u]];
    if (next == classes)
      return color;
    classes = next;
  }
}

bool extend(const IntersectionMatrix &a, const IntersectionMatrix &b, const std::vector<int> &color,
            std::vector<Vertex> &pi, std::vector<bool> &used, int u)
{
  const int n = a.size();
  if (u == n)
    return true;
  for (Vertex cand = 0; cand < n; ++cand) {
    if (used[cand] || color[u] != color[n + cand])
      continue;
    bool ok = true;
    for (Vertex w = 0; w < u && ok; ++w)
      ok = a.at(u, w) == b.at(cand, pi[w]) && a.at(w, u) == b.at(pi[w], cand);
    if (!ok)
      continue;
    pi[u] = cand;
    used[cand] = true;
    if (extend(a, b, color, pi, used, u + 1))
      return true;
    used[cand] = false;
  }
  return false;
}

} // namespace

std::optional<std::vector<Vertex>> matrices_isomorphic(const IntersectionMatrix &a,
                                                       const IntersectionMatrix &b)
{
  if (a.size() != b.size())
    return std::nullopt;
  const int n = a.size();
  const std::vector<int> color = refine(a, b);
  std::vector<int> ca(color.begin(), color.begin() + n), cb(color.begin() + n, color.end());
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb)
    return std::nullopt;

  std::vector<Vertex> pi(n, -1);
  std::vector<bool> used(n, false);
  if (!extend(a, b, color, pi, used, 0))
    return std::nullopt;
  return pi;
}

} // namespace cagraph
