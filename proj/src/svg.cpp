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

#include "svg.hpp"

#include <iomanip>
#include <sstream>

#include "errors.hpp"

namespace bstab {

namespace {

constexpr int kCanvas = 600;
constexpr int kMargin = 40;

std::vector<std::vector<int>> vertex_signs(const Wall& w, const SliceRegion& R, int n) {
  require(n >= 1 && n <= 4096, ErrorCode::InvalidArgument, "grid resolution must be in [1, 4096]");
  std::vector<std::vector<int>> s(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i <= n; ++i) {
    const Rational b = R.b0 + (R.b1 - R.b0) * Rational(i, n);
    const Rational c0 = w.c0(b), c2 = w.c2(b);
    const Rational s0 = w.side_t2[0](b), s1 = w.side_t2[1](b), s2 = w.side_t2[2](b);
    for (int j = 0; j <= n; ++j) {
      const Rational t = R.t0 + (R.t1 - R.t0) * Rational(j, n);
      const Rational t2 = t * t;
      const Rational side = s0 + t2 * (s1 + t2 * s2);
      s[i][j] = side > 0 ? sgn(Rational(c0 + c2 * t2)) : kInactive;
    }
  }
  return s;
}

std::vector<std::pair<int, int>> cells_from(const std::vector<std::vector<int>>& s, int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool pos = false, neg = false;
      for (int di = 0; di <= 1; ++di)
        for (int dj = 0; dj <= 1; ++dj) {
          pos = pos || s[i + di][j + dj] == 1;
          neg = neg || s[i + di][j + dj] == -1;
        }
      if (pos && neg) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

int wall_vertex_sign(const Wall& w, const SliceRegion& R, int n, int i, int j) {
  require(n >= 1 && i >= 0 && j >= 0 && i <= n && j <= n, ErrorCode::InvalidArgument, "vertex outside the grid");
  const Rational b = R.b0 + (R.b1 - R.b0) * Rational(i, n);
  const Rational t = R.t0 + (R.t1 - R.t0) * Rational(j, n);
  return w.side(b, t) > 0 ? sgn(w.poly(b, t)) : kInactive;
}

std::vector<std::pair<int, int>> wall_cells(const Wall& w, const SliceRegion& R, int n) {
  return cells_from(vertex_signs(w, R, n), n);
}

std::string render_walls_svg(const std::vector<Wall>& walls, const SliceRegion& R, int n) {
  const double side = kCanvas - 2 * kMargin;
  const double cell = side / n;
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";
  os << "<g stroke=\"#e0e0e0\" stroke-width=\"0.5\">\n";
  const int step = std::max(1, n / 10);
  for (int k = 0; k <= n; k += step) {
    const double x = kMargin + k * cell;
    os << "<line x1=\"" << x << "\" y1=\"" << kMargin << "\" x2=\"" << x << "\" y2=\"" << kCanvas - kMargin << "\"/>\n";
    os << "<line x1=\"" << kMargin << "\" y1=\"" << x << "\" x2=\"" << kCanvas - kMargin << "\" y2=\"" << x << "\"/>\n";
  }
  os << "</g>\n";
  os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << side << "\" height=\"" << side
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kMargin << "\" y=\"" << kCanvas - 12 << "\" font-size=\"12\">b = " << to_string(R.b0)
     << "</text>\n";
  os << "<text x=\"" << kCanvas - kMargin << "\" y=\"" << kCanvas - 12 << "\" font-size=\"12\" text-anchor=\"end\">b = "
     << to_string(R.b1) << "</text>\n";
  os << "<text x=\"4\" y=\"" << kCanvas - kMargin << "\" font-size=\"12\">t = " << to_string(R.t0) << "</text>\n";
  os << "<text x=\"4\" y=\"" << kMargin - 6 << "\" font-size=\"12\">t = " << to_string(R.t1) << "</text>\n";
  for (std::size_t k = 0; k < walls.size(); ++k) {
    const auto cells = wall_cells(walls[k], R, n);
    if (cells.empty()) continue;
    os << "<g fill=\"hsl(" << (k * 47) % 360 << ",70%,40%)\" data-vi=\"" << walls[k].vi.to_string() << "\" data-vj=\""
       << walls[k].vj.to_string() << "\">\n";
    for (const auto& [i, j] : cells)
      os << "<rect x=\"" << kMargin + i * cell << "\" y=\"" << kCanvas - kMargin - (j + 1) * cell << "\" width=\""
         << cell << "\" height=\"" << cell << "\"/>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bstab
