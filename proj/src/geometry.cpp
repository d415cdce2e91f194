// Copyright (c) 2026 readkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readkit/geometry.hpp"

#include <algorithm>

#include "readkit/errors.hpp"

namespace readkit {

Rect hull(const QuadBox& quad) {
    if (!quad.finite_nonnegative()) {
        throw validation_error("quad has non-finite or negative coordinates");
    }
    Rect r{quad.points[0].x, quad.points[0].y, quad.points[0].x, quad.points[0].y};
    for (const auto& p : quad.points) {
        r.x_min = std::min(r.x_min, p.x);
        r.y_min = std::min(r.y_min, p.y);
        r.x_max = std::max(r.x_max, p.x);
        r.y_max = std::max(r.y_max, p.y);
    }
    if (!(r.x_min < r.x_max) || !(r.y_min < r.y_max)) {
        throw validation_error("degenerate quad: hull has zero width or height");
    }
    return r;
}

QuadBox quad_from_rect(const Rect& r) {
    return QuadBox{{Vec2{r.x_min, r.y_min}, Vec2{r.x_max, r.y_min}, Vec2{r.x_max, r.y_max},
                    Vec2{r.x_min, r.y_max}}};
}

} // namespace readkit
