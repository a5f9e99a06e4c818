/**
 * Copyright 2026 The fcstrain Authors
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

#include "fcs/errors.hpp"

namespace fcs {

int exit_code(ErrorCategory category) noexcept {
    switch (category) {
        case ErrorCategory::parse: return 2;
        case ErrorCategory::validation: return 3;
        case ErrorCategory::numerical: return 4;
        case ErrorCategory::io: return 5;
        case ErrorCategory::capacity: return 6;
    }
    return 1;
}

}  // namespace fcs
