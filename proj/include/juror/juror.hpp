// Copyright 2026 The Juror Authors.
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

#ifndef JUROR_JUROR_HPP_
#define JUROR_JUROR_HPP_

#include "juror/distribution.hpp"
#include "juror/dynamics.hpp"
#include "juror/equilibrium.hpp"
#include "juror/io.hpp"
#include "juror/model.hpp"
#include "juror/payment.hpp"
#include "juror/payment_design.hpp"
#include "juror/rng.hpp"
#include "juror/simplex.hpp"
#include "juror/sweep.hpp"
#include "juror/utility.hpp"

#endif  // JUROR_JUROR_HPP_
