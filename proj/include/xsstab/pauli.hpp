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


#ifndef XSSTAB_PAULI_HPP
#define XSSTAB_PAULI_HPP

#include <stdexcept>
#include <string>

#include "xsstab/gf2.hpp"
#include "xsstab/xs_operator.hpp"

namespace xsstab {

/// i^phase X(x) Z(z), with Z acting first.
struct Pauli {
    int phase = 0;
    BitVector x;
    BitVector z;

    Pauli() = default;
    Pauli(int phase, BitVector x, BitVector z) : phase(((phase % 4) + 4) % 4), x(std::move(x)), z(std::move(z)) {
        if (this->x.size() != this->z.size()) {
            throw std::invalid_argument("Pauli: x and z masks differ in length");
        }
    }
    static Pauli identity(size_t n) {
        return Pauli(0, BitVector(n), BitVector(n));
    }

    size_t num_qubits() const {
        return x.size();
    }
    bool is_hermitian() const {
        return (phase + int(x.dot(z))) % 2 == 0;
    }
    XSOperator to_xs() const {
        XSOperator g(x.size());
        g.set_phase(2 * phase);
        g.xmask() = x;
        for (size_t k : z.ones()) {
            g.set_b(k, 2);
        }
        return g;
    }
    std::string str() const {
        return "s=" + std::to_string(phase) + " x=" + x.str() + " z=" + z.str();
    }
    bool operator==(const Pauli &other) const = default;
};

}  // namespace xsstab

#endif
