// Copyright 2026 The vqsm Authors
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

#include <iosfwd>
#include <string>

#include "vqsm/chem/mo_integrals.hpp"

namespace vqsm::chem {

/// Reads an FCIDUMP stream. Indices are 1-based in the file, chemists'
/// notation. A line with all four indices zero carries the nuclear repulsion.
/// Lines of the form "value i 0 0 0" (orbital energies) are ignored.
/// Throws ParseError with the offending line number.
MOIntegrals parse_fcidump(std::istream& in);
MOIntegrals parse_fcidump_string(const std::string& text);
MOIntegrals read_fcidump_file(const std::string& path);

/// Canonical writer: one unique entry per nonzero value with 17 significant
/// digits, so parse(write(x)) reproduces every double exactly.
std::string write_fcidump(const MOIntegrals& mo);
void write_fcidump_file(const MOIntegrals& mo, const std::string& path);

}  // namespace vqsm::chem
