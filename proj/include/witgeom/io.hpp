// Copyright 2026 The witgeom Authors
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

#pragma once

#include <string>

#include "witgeom/decomposition.hpp"
#include "witgeom/matrix.hpp"
#include "witgeom/upb.hpp"
#include "witgeom/witness.hpp"

namespace witgeom::io {

/// {"dims": [...], "entries": [[re, im], ...]} with 17 significant digits.
std::string matrix_to_json(const CMatrix &m, const SystemShape &shape);
/// Parses the matrix document; throws InputError on malformed input.
CMatrix matrix_from_json(const std::string &text, SystemShape *shape_out = nullptr);

std::string decomposition_to_json(const WitnessDecomposition &dec);

/// {"shape": [...], "vectors": [[[[re, im], ...] per party] per vector]}
UpbSet upb_from_json(const std::string &text);
std::string upb_to_json(const UpbSet &upb);

/// Shortest round-trip decimal ("%.17g").
std::string format_double(double x);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

}  // namespace witgeom::io
