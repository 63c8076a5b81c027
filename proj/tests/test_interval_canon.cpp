#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "cagraph/interval_canon.hpp"
#include "fixtures.hpp"

using namespace cagraph;
using namespace cagraph::testing;
using IT = IntersectionType;

namespace
{

// Every linear event sequence with arcs numbered by their left events.
void linear_sequences(int n, std::vector<Event> &seq, int opened, std::vector<bool> &open,
                      std::vector<ArcModel> &out)
{
  if (static_cast<int>(seq.size()) == 2 * n) {
    out.emplace_back(seq);
    return;
  }
  if (opened < n) {
    open[opened] = true;
    seq.push_back({opened, Side::left});
    linear_sequences(n, seq, opened + 1, open, out);
    seq.pop_back();
    open[opened] = false;
  }
  for (int a = 0; a < opened; ++a)
    if (open[a]) {
      open[a] = false;
      seq.push_back({a, Side::right});
      linear_sequences(n, seq, opened, open, out);
      seq.pop_back();
      open[a] = true;
    }
}

// Smallest colored token string over all interval realizations of m.
std::optional<TokenString> brute_force_canonical(const IntersectionMatrix &m,
                                                 const std::vector<Color> &colors)
{
  const int n = m.size();
  std::vector<ArcModel> models;
  std::vector<Event> seq;
  std::vector<bool> open(n, false);
  linear_sequences(n, seq, 0, open, models);

  std::optional<TokenString> best;
  std::vector<int> assign(n);
  for (const ArcModel &model : models) {
    const IntersectionMatrix mu = matrix_of_model(model);
    std::iota(assign.begin(), assign.end(), 0);
    do {
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u)
        for (Vertex v = 0; v < n && ok; ++v)
          ok = u == v || mu.at(assign[u], assign[v]) == m.at(u, v);
      if (!ok)
        continue;
      std::vector<Color> arc_color(n);
      for (Vertex v = 0; v < n; ++v)
        arc_color[assign[v]] = colors[v];
      TokenString t;
      for (const Event &e : model.events())
        t.push_back({e.side, e.arc + 1,
                     e.side == Side::left ? std::optional<Color>(arc_color[e.arc]) : std::nullopt});
      if (!best || t < *best)
        best = t;
    } while (std::next_permutation(assign.begin(), assign.end()));
  }
  return best;
}

IntersectionMatrix random_matrix_without_cc(int n, std::mt19937_64 &rng)
{
  IntersectionMatrix m(n);
  const IT types[] = {IT::di, IT::ov, IT::cd, IT::cs};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      m.set(u, v, types[rng() % 4]);
  return m;
}

void check_sound(const IntersectionMatrix &m, const Representation &rep)
{
  REQUIRE(matrix_of_model(rep) == m);
  REQUIRE(has_hole(rep.model));
  // The anchor sits in a hole: no arc wraps.
  for (int a = 0; a < rep.model.arc_count(); ++a)
    REQUIRE(rep.model.left_position(a) < rep.model.right_position(a));
}

} // namespace

TEST_CASE("P4 flipped at its middle is an interval matrix")
{
  const IntersectionMatrix f = flip_matrix(neighborhood_matrix(path(4)), ids1({2, 3}));
  const auto rep = realize_interval(f);
  REQUIRE(rep);
  check_sound(f, *rep);
  // The model quoted for this matrix is one of its realizations.
  const auto [quoted, colors] = model_from_tokens(parse_tokens("l2 l4 r4 r2 l3 l1 r1 r3"));
  CHECK(matrix_of_model(Representation{quoted, {0, 1, 2, 3}}) == f);
}

TEST_CASE("matrices with cc entries are not interval matrices")
{
  CHECK_FALSE(realize_interval(neighborhood_matrix(path(4))));
  IntersectionMatrix m(2);
  m.set(0, 1, IT::cc);
  CHECK_FALSE(realize_interval(m));
  CHECK_FALSE(canonical_interval(m, {0, 0}));
}

TEST_CASE("small canonical intervals")
{
  const auto one = realize_interval(IntersectionMatrix(1));
  REQUIRE(one);
  CHECK(to_string(model_string(one->model).tokens) == "l1 r1");
  CHECK(to_string(canonical_interval(IntersectionMatrix(1), {7})->tokens) == "l1:7 r1");
  CHECK(to_string(canonical_interval(IntersectionMatrix(2), {0, 0})->tokens) == "l1:0 r1 l2:0 r2");
  CHECK(to_string(canonical_interval(IntersectionMatrix(2), {4, 1})->tokens) == "l1:1 r1 l2:4 r2");
  CHECK(canonical_interval(IntersectionMatrix(0), {})->tokens.empty());
  CHECK_THROWS(canonical_interval(IntersectionMatrix(2), {1}));
}

TEST_CASE("C4 is not an interval matrix")
{
  CHECK_FALSE(realize_interval(neighborhood_matrix(cycle(4))));
}

TEST_CASE("interval models are always realized")
{
  std::mt19937_64 rng(31);
  for (int round = 0; round < 400; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const IntersectionMatrix m = matrix_of_model(random_interval_model(n, rng));
    const auto rep = realize_interval(m);
    REQUIRE(rep);
    check_sound(m, *rep);
    std::vector<Color> colors(n);
    for (Color &c : colors)
      c = rng() % 3;
    const auto canon = canonical_interval(m, colors);
    REQUIRE(canon);
    check_sound(m, canon->representation);
  }
}

TEST_CASE("canonical intervals are minimal")
{
  std::mt19937_64 rng(37);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const IntersectionMatrix m = round % 2 ? matrix_of_model(random_interval_model(n, rng))
                                           : random_matrix_without_cc(n, rng);
    std::vector<Color> colors(n);
    for (Color &c : colors)
      c = rng() % 2;
    const auto expected = brute_force_canonical(m, colors);
    const auto got = canonical_interval(m, colors);
    REQUIRE(expected.has_value() == got.has_value());
    REQUIRE(realize_interval(m).has_value() == got.has_value());
    if (got) {
      REQUIRE(got->tokens == *expected);
      check_sound(m, got->representation);
    }
  }
}

TEST_CASE("canonical intervals ignore vertex labels")
{
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const IntersectionMatrix m = matrix_of_model(random_interval_model(n, rng));
    std::vector<Color> colors(n);
    for (Color &c : colors)
      c = rng() % 2;
    const auto base = canonical_interval(m, colors);
    REQUIRE(base);
    for (int k = 0; k < 5; ++k) {
      const std::vector<Vertex> perm = random_permutation(n, rng);
      std::vector<Color> moved(n);
      for (Vertex v = 0; v < n; ++v)
        moved[perm[v]] = colors[v];
      const auto other = canonical_interval(m.permuted(perm), moved);
      REQUIRE(other);
      REQUIRE(to_string(other->tokens) == to_string(base->tokens));
    }
  }
}
