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

#include "vqsm/chem/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace vqsm::chem {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::optional<int> header_int(const std::string& header, const std::string& key) {
  // Keys are matched on a word boundary so MS2 does not match inside ORBSYM etc.
  std::size_t pos = 0;
  while ((pos = header.find(key, pos)) != std::string::npos) {
    const bool boundary = pos == 0 || !std::isalnum(static_cast<unsigned char>(header[pos - 1]));
    std::size_t p = pos + key.size();
    while (p < header.size() && header[p] == ' ') ++p;
    if (boundary && p < header.size() && header[p] == '=') {
      ++p;
      while (p < header.size() && header[p] == ' ') ++p;
      int value = 0;
      const auto [ptr, ec] = std::from_chars(header.data() + p, header.data() + header.size(), value);
      if (ec != std::errc()) return std::nullopt;
      return value;
    }
    pos += key.size();
  }
  return std::nullopt;
}

double parse_value(std::string tok, int line) {
  std::replace(tok.begin(), tok.end(), 'D', 'E');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  if (!tok.empty() && tok.front() == '+') tok.erase(0, 1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("bad numeric value '" + tok + "'", line);
  }
  return v;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%24.16e", v);
  return buf;
}

}  // namespace

MOIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::string header;
  bool in_header = false;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++lineno;
    const std::string u = upper(line);
    if (!in_header) {
      if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (u.find("&FCI") == std::string::npos) throw ParseError("expected &FCIDUMP header", lineno);
      in_header = true;
    }
    header += u + " ";
    if (u.find("&END") != std::string::npos || u.find('/') != std::string::npos) header_done = true;
  }
  if (!header_done) throw ParseError("unterminated FCIDUMP header", lineno);

  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  if (!norb || *norb <= 0) throw ParseError("header lacks a positive NORB", lineno);
  if (!nelec || *nelec < 0) throw ParseError("header lacks NELEC", lineno);

  MOIntegrals mo;
  mo.n_orb = *norb;
  mo.n_elec = *nelec;
  mo.ms2 = header_int(header, "MS2").value_or(0);
  mo.h = RMatrix::Zero(mo.n_orb, mo.n_orb);
  mo.g = EriTensor(mo.n_orb);

  // Canonical slot -> (value, line first seen). One-electron slots are offset
  // past the two-electron range; the nuclear term uses a dedicated key.
  std::unordered_map<std::size_t, std::pair<double, int>> seen;
  const std::size_t one_body_base = mo.g.size();
  const std::size_t nuc_key = one_body_base + static_cast<std::size_t>(mo.n_orb) * mo.n_orb;
  const auto record = [&](std::size_t key, double v) {
    const auto [it, fresh] = seen.try_emplace(key, v, lineno);
    if (!fresh && std::abs(it->second.first - v) > 1e-12 * std::max(1.0, std::abs(v))) {
      throw ParseError("conflicting duplicate of entry first given on line " +
                           std::to_string(it->second.second),
                       lineno);
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    const double v = parse_value(tok, lineno);
    int idx[4];
    for (int& x : idx) {
      if (!(ls >> x)) throw ParseError("expected four integer indices", lineno);
    }
    if (ls >> tok) throw ParseError("trailing tokens after indices", lineno);
    for (int x : idx) {
      if (x < 0 || x > mo.n_orb) throw ParseError("index out of range", lineno);
    }
    const auto [i, j, k, l] = std::tuple{idx[0], idx[1], idx[2], idx[3]};
    if (i > 0 && j > 0 && k > 0 && l > 0) {
      record(mo.g.index(i - 1, j - 1, k - 1, l - 1), v);
      mo.g.set(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      const int a = std::max(i, j) - 1, b = std::min(i, j) - 1;
      record(one_body_base + static_cast<std::size_t>(a) * mo.n_orb + b, v);
      mo.h(a, b) = mo.h(b, a) = v;
    } else if (i == 0 && j == 0 && k == 0 && l == 0) {
      record(nuc_key, v);
      mo.e_nuc = v;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      continue;  // orbital energy
    } else {
      throw ParseError("unsupported index pattern", lineno);
    }
  }
  try {
    mo.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), lineno);
  }
  return mo;
}

MOIntegrals parse_fcidump_string(const std::string& text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

MOIntegrals read_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_fcidump(in);
}

std::string write_fcidump(const MOIntegrals& mo) {
  mo.validate();
  const int n = mo.n_orb;
  std::ostringstream out;
  out << " &FCIDUMP NORB=" << n << ",NELEC=" << mo.n_elec << ",MS2=" << mo.ms2 << ",\n";
  out << "  ORBSYM=";
  for (int i = 0; i < n; ++i) out << "1,";
  out << "\n  ISYM=1,\n &END\n";
  const auto emit = [&out](double v, int i, int j, int k, int l) {
    out << format_value(v) << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = mo.g(i, j, k, l);
          if (v != 0.0) emit(v, i + 1, j + 1, k + 1, l + 1);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (mo.h(i, j) != 0.0) emit(mo.h(i, j), i + 1, j + 1, 0, 0);
  emit(mo.e_nuc, 0, 0, 0, 0);
  return out.str();
}

void write_fcidump_file(const MOIntegrals& mo, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << write_fcidump(mo);
}

}  // namespace vqsm::chem
