/*
 * Copyright 2026 The bstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <set>

#include "doctest.h"
#include "svg.hpp"

using namespace bstab;

namespace {

const NSLattice k3 = NSLattice::rank_one(2, 1);
const SliceRegion small{RationalDivisor{{1}}, RationalDivisor{{1}}, Rational(-1, 2), 1, 1, 2};

// Sign of the wall polynomial at a grid vertex, or 2 where the side condition fails.
int vertex(const Wall& w, int n, int i, int j) {
  const Rational b = small.b0 + (small.b1 - small.b0) * Rational(i, n);
  const Rational t = small.t0 + (small.t1 - small.t0) * Rational(j, n);
  if (sgn(w.side(b, t)) <= 0) return 2;
  return sgn(w.poly(b, t));
}

}  // namespace

TEST_CASE("marked cells are exactly those with both signs among active corners") {
  const WallSet ws = compute_walls(k3, small, make_mukai(1, {0}, -1));
  REQUIRE_FALSE(ws.walls.empty());
  const int n = 24;
  std::size_t total = 0;
  for (const Wall& w : ws.walls) {
    std::set<std::pair<int, int>> expect;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool pos = false, neg = false;
        for (int di = 0; di <= 1; ++di)
          for (int dj = 0; dj <= 1; ++dj) {
            const int s = vertex(w, n, i + di, j + dj);
            pos |= s == 1;
            neg |= s < 0;
          }
        if (pos && neg) expect.insert({i, j});
      }
    const auto got = wall_cells(w, small, n);
    CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == expect);
    total += got.size();
    for (int i = 0; i <= n; i += 6)
      for (int j = 0; j <= n; j += 6) {
        const int s = wall_vertex_sign(w, small, n, i, j);
        const int e = vertex(w, n, i, j);
        CHECK(s == e);
      }
  }
  CHECK(total > 0);
  const std::string svg = render_walls_svg(ws.walls, small, n);
  CHECK(svg.find("data-vi") != std::string::npos);
}

TEST_CASE("an empty wall set renders a blank frame") {
  const std::string svg = render_walls_svg({}, small, 10);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("data-vi") == std::string::npos);
}
