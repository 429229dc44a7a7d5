// Copyright 2026 The invset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "invset/bell_geometry.hpp"
#include "invset/ensemble_sim.hpp"
#include "invset/exact_arith.hpp"
#include "invset/hilbert_correspondence.hpp"
#include "invset/padic_geometry.hpp"
#include "invset/pi_angle.hpp"
#include "invset/polynomial.hpp"
#include "invset/quadratic.hpp"
#include "invset/rational.hpp"
