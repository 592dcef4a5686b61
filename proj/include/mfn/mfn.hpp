/*
 * Copyright 2026 The mfn authors
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

#include "census.hpp"
#include "document.hpp"
#include "factorization.hpp"
#include "fields.hpp"
#include "frobenius.hpp"
#include "graded.hpp"
#include "normal_forms.hpp"
#include "poly.hpp"
#include "poly_matrix.hpp"
#include "scalar_linalg.hpp"
#include "stable.hpp"
#include "truncated_oracle.hpp"
