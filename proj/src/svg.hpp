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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "walls.hpp"

namespace bstab {

/// Grid value of a wall at vertex (i, j) of an n x n subdivision of the
/// region: sign of W where the side condition holds, 2 elsewhere.
int wall_vertex_sign(const Wall& w, const SliceRegion& R, int n, int i, int j);

/// Cells (i, j) of the n x n grid whose corners include both an active +1
/// and an active -1 vertex of w.
std::vector<std::pair<int, int>> wall_cells(const Wall& w, const SliceRegion& R, int n);

/// Region frame with the marked cells of every wall, b to the right and t
/// upwards.
std::string render_walls_svg(const std::vector<Wall>& walls, const SliceRegion& R, int n);

}  // namespace bstab
