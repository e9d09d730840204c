// Copyright 2026 floqudit Contributors
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


#ifndef FLOQUDIT_FLOQUDIT_HPP
#define FLOQUDIT_FLOQUDIT_HPP

#include "floqudit/dense_oracle.hpp"
#include "floqudit/floquet_code.hpp"
#include "floqudit/gf_linear.hpp"
#include "floqudit/lattice.hpp"
#include "floqudit/logical_ops.hpp"
#include "floqudit/noise_syndrome.hpp"
#include "floqudit/pauli.hpp"
#include "floqudit/prime_field.hpp"
#include "floqudit/stabilizer.hpp"

#endif
