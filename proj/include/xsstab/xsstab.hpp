// Copyright 2026 The xsstab Authors
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


#ifndef XSSTAB_XSSTAB_HPP
#define XSSTAB_XSSTAB_HPP

#include "xsstab/circuits.hpp"
#include "xsstab/codespace.hpp"
#include "xsstab/dense.hpp"
#include "xsstab/entangle.hpp"
#include "xsstab/gf2.hpp"
#include "xsstab/hamiltonian.hpp"
#include "xsstab/models.hpp"
#include "xsstab/oracle.hpp"
#include "xsstab/pauli.hpp"
#include "xsstab/phase_polynomial.hpp"
#include "xsstab/xs_group.hpp"
#include "xsstab/xs_operator.hpp"
#include "xsstab/xsg_format.hpp"

#endif
