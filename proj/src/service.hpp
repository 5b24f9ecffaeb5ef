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

#include "json_io.hpp"

namespace bstab {

/// Runs one command on a request object; see the README for the request
/// and response shapes. Unknown commands raise InvalidArgument.
Json run_command(const NSLattice& L, const std::string& command, const Json& request);

/// SVG for the walls request {"region", "class"} at grid resolution n.
std::string run_walls_svg(const NSLattice& L, const Json& request, int n);

}  // namespace bstab
