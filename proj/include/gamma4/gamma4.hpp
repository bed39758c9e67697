// Copyright 2026 The gamma4 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#pragma once

#include "gamma4/bounds.hpp"
#include "gamma4/cfk.hpp"
#include "gamma4/errors.hpp"
#include "gamma4/homology.hpp"
#include "gamma4/knot_expr.hpp"
#include "gamma4/nu_plus.hpp"
#include "gamma4/polynomial.hpp"
#include "gamma4/rational.hpp"
#include "gamma4/semigroup.hpp"
#include "gamma4/staircase2n.hpp"
#include "gamma4/surgery.hpp"
#include "gamma4/torus_knot.hpp"
#include "gamma4/verify.hpp"
#include "gamma4/vi_sequence.hpp"
