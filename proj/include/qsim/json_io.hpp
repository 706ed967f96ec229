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
 * @file json_io.hpp
 * JSON documents read and written by the command-line tool.
 *
 * Density:  {"segments": [{"lo": 0, "hi": 0.5, "coeffs": [0, 4]}, ...]}
 * Unitary:  {"dim": N, "entries": [[re, im], ...]}   (N*N entries, row-major)
 * Angles:   {"n": 3, "theta": t, "nodes": [[t], [a0, a1], ...],
 *            "angles": [{"suffix": "-", "angle": t}, {"suffix": "0", ...}, ...]}
 *
 * Malformed documents raise ParseError; well-formed densities that fail
 * validation raise DensityError.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include "qsim/density.hpp"
#include "qsim/errors.hpp"
#include "qsim/grover_rudolph.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

PiecewisePolyDensity parse_density(std::string_view text);
std::string density_to_json(const PiecewisePolyDensity &d);

ComplexMatrix parse_unitary(std::string_view text);
std::string unitary_to_json(const ComplexMatrix &u);

/// "nodes" is authoritative on parse; "angles" is the same data keyed by
/// control suffix z_{n-L+1} ... z_n for readability.
std::string angle_tree_to_json(const AngleTree &tree);
AngleTree parse_angle_tree(std::string_view text);

/// Whole-file helpers; throw IoError on open/read/write failure.
std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

}  // namespace qsim
