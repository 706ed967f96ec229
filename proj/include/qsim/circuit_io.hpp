// Copyright 2026 The qsim Authors
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

#pragma once

/**
 * @file circuit_io.hpp
 * Line-oriented circuit text format.
 *
 *   circuit  := header { gate | comment | blank }
 *   header   := "QUBITS" n | "DIM" N
 *   gate     := "WIRE" j u
 *             | "ROT" j alpha
 *             | "CTRL" target pattern u
 *             | "SUFFIX-CTRL" ell suffix u
 *             | "TWO-LEVEL" i j u
 *   u        := re00 im00 re01 im01 re10 im10 re11 im11 | "R" alpha
 *   pattern  := bits z_1..z_n without the target wire, or "-" when empty
 *   comment  := "#" anything
 *
 * Gates appear in application order. Numbers print with 17 significant
 * digits, so print followed by parse reproduces every double exactly.
 */

#include <iosfwd>
#include <string>
#include <string_view>

#include "qsim/gates.hpp"

namespace qsim {

std::string format_gate(const GateSpec &g);
std::string format_circuit(const Circuit &c);
void write_circuit(std::ostream &os, const Circuit &c);

/// Throws ParseError with the offending line number. Gate matrices must be
/// unitary within `tol`.
Circuit parse_circuit(std::string_view text, double tol = tol::kUnitary);
Circuit read_circuit(std::istream &is, double tol = tol::kUnitary);

/// %.17g; both signed zeros print as "0".
std::string format_double(double x);

}  // namespace qsim
