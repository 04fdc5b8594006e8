/*
 * Copyright 2026 The finzeta Authors
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

#include "finzeta/arith.hpp"
#include "finzeta/boundary.hpp"
#include "finzeta/exact.hpp"
#include "finzeta/finite_zeta.hpp"
#include "finzeta/limits.hpp"
#include "finzeta/parallel.hpp"
#include "finzeta/powerful.hpp"
#include "finzeta/qpoly.hpp"
#include "finzeta/stats.hpp"
