// Copyright 2026 The supertropical Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERTROPICAL_SUPERTROPICAL_HPP
#define SUPERTROPICAL_SUPERTROPICAL_HPP

#include "supertropical/bilinear.hpp"
#include "supertropical/dependence.hpp"
#include "supertropical/dual.hpp"
#include "supertropical/errors.hpp"
#include "supertropical/linalg.hpp"
#include "supertropical/matrix.hpp"
#include "supertropical/oracles.hpp"
#include "supertropical/rational.hpp"
#include "supertropical/scalar.hpp"
#include "supertropical/span.hpp"
#include "supertropical/text_format.hpp"

#endif  // SUPERTROPICAL_SUPERTROPICAL_HPP
