// Copyright 2026 The qa Authors
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

#ifndef QA_PROVER_HPP
#define QA_PROVER_HPP

#include "qa/prover/cdcl.hpp"
#include "qa/prover/clause.hpp"
#include "qa/prover/clausify.hpp"
#include "qa/prover/herbrand.hpp"
#include "qa/prover/interpolate.hpp"
#include "qa/prover/proof.hpp"
#include "qa/prover/prove.hpp"
#include "qa/prover/saturation.hpp"
#include "qa/prover/tptp.hpp"

#endif  // QA_PROVER_HPP
