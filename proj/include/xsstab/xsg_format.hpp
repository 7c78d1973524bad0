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


#ifndef XSSTAB_XSG_FORMAT_HPP
#define XSSTAB_XSG_FORMAT_HPP

#include <array>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsstab/pauli.hpp"
#include "xsstab/xs_group.hpp"

namespace xsstab {

/// Raised for malformed text input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &msg)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

namespace detail {

inline std::string strip_comment(const std::string &line) {
    std::string s = line.substr(0, line.find('#'));
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Splits "k=v" tokens; every token must have the expected key in order.
inline std::vector<std::string> keyed_fields(size_t lineno, std::istringstream &in,
                                             const std::vector<std::string> &keys) {
    std::vector<std::string> out;
    for (const auto &k : keys) {
        std::string tok;
        if (!(in >> tok) || tok.rfind(k + "=", 0) != 0) {
            throw ParseError(lineno, "expected " + k + "=...");
        }
        out.push_back(tok.substr(k.size() + 1));
    }
    std::string extra;
    if (in >> extra) {
        throw ParseError(lineno, "unexpected token '" + extra + "'");
    }
    return out;
}

inline int parse_int(size_t lineno, const std::string &s, int lo, int hi) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(lineno, "not a number: '" + s + "'");
    }
    long v = std::stol(s);
    if (v < lo || v > hi) {
        throw ParseError(lineno, "value " + s + " out of range");
    }
    return int(v);
}

}  // namespace detail

/// Reads the generator format: a header `n=<int>` then lines `g s=<0..7> a=<bits> b=<0..3 digits>`.
inline GeneratingSet read_generating_set(std::istream &in) {
    std::string line;
    size_t lineno = 0;
    bool have_n = false;
    GeneratingSet S;
    while (std::getline(in, line)) {
        lineno++;
        std::string body = detail::strip_comment(line);
        if (body.empty()) {
            continue;
        }
        std::istringstream ls(body);
        if (!have_n) {
            auto f = detail::keyed_fields(lineno, ls, {"n"});
            S = GeneratingSet(size_t(detail::parse_int(lineno, f[0], 1, 1 << 20)));
            have_n = true;
            continue;
        }
        std::string tag;
        ls >> tag;
        if (tag != "g") {
            throw ParseError(lineno, "expected a generator line starting with 'g'");
        }
        auto f = detail::keyed_fields(lineno, ls, {"s", "a", "b"});
        int s = detail::parse_int(lineno, f[0], 0, 7);
        if (f[1].size() != S.n || f[2].size() != S.n) {
            throw ParseError(lineno, "expected " + std::to_string(S.n) + " qubits");
        }
        try {
            S.add(XSOperator::from_strings(s, f[1], f[2]));
        } catch (const std::invalid_argument &e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_n) {
        throw ParseError(0, "missing header line n=<int>");
    }
    return S;
}

inline GeneratingSet parse_generating_set(const std::string &text) {
    std::istringstream in(text);
    return read_generating_set(in);
}

inline std::string format_generating_set(const GeneratingSet &S) {
    std::string out = "n=" + std::to_string(S.n) + "\n";
    for (const auto &g : S.gens) {
        out += "g " + g.str() + "\n";
    }
    return out;
}

/// Clause file: one 1-based triple `i j k` per line. Returns 0-based triples.
inline std::vector<std::array<size_t, 3>> read_clauses(std::istream &in) {
    std::vector<std::array<size_t, 3>> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::string body = detail::strip_comment(line);
        if (body.empty()) {
            continue;
        }
        std::istringstream ls(body);
        std::array<size_t, 3> c{};
        for (auto &v : c) {
            std::string tok;
            if (!(ls >> tok)) {
                throw ParseError(lineno, "a clause needs three variables");
            }
            v = size_t(detail::parse_int(lineno, tok, 1, 1 << 20)) - 1;
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError(lineno, "a clause needs exactly three variables");
        }
        out.push_back(c);
    }
    return out;
}

/// Pauli string `s=<0..3> x=<bits> z=<bits>` meaning i^s X(x) Z(z).
inline Pauli parse_pauli(const std::string &text) {
    std::istringstream ls(detail::strip_comment(text));
    auto f = detail::keyed_fields(0, ls, {"s", "x", "z"});
    int s = detail::parse_int(0, f[0], 0, 3);
    if (f[1].size() != f[2].size()) {
        throw ParseError(0, "x and z masks differ in length");
    }
    try {
        return Pauli(s, BitVector::from_string(f[1]), BitVector::from_string(f[2]));
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace xsstab

#endif
