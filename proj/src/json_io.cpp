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

#include "qsim/json_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace qsim {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char *what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const json &field(const json &obj, const char *key, const char *what) {
  if (!obj.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

double number(const json &v, const char *what) {
  if (!v.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return v.get<double>();
}

std::string suffix_label(std::size_t level, std::uint64_t s) {
  if (level == 0) return "-";
  std::string out(level, '0');
  for (std::size_t p = 0; p < level; ++p) out[p] = ((s >> p) & 1U) ? '1' : '0';
  return out;
}

}  // namespace

PiecewisePolyDensity parse_density(std::string_view text) {
  const json doc = parse_json(text, "density");
  const json &segs = field(doc, "segments", "density");
  if (!segs.is_array()) throw ParseError("density: \"segments\" must be an array");
  std::vector<PolySegment> out;
  for (const auto &s : segs) {
    PolySegment seg;
    seg.lo = number(field(s, "lo", "density segment"), "density segment lo");
    seg.hi = number(field(s, "hi", "density segment"), "density segment hi");
    const json &c = field(s, "coeffs", "density segment");
    if (!c.is_array()) throw ParseError("density segment: \"coeffs\" must be an array");
    for (const auto &x : c) seg.coeffs.push_back(number(x, "density coefficient"));
    out.push_back(std::move(seg));
  }
  return PiecewisePolyDensity(std::move(out));
}

std::string density_to_json(const PiecewisePolyDensity &d) {
  json segs = json::array();
  for (const auto &s : d.segments()) {
    segs.push_back({{"lo", s.lo}, {"hi", s.hi}, {"coeffs", s.coeffs}});
  }
  return json{{"segments", segs}}.dump(2) + "\n";
}

ComplexMatrix parse_unitary(std::string_view text) {
  const json doc = parse_json(text, "unitary");
  const json &dim_v = field(doc, "dim", "unitary");
  if (!dim_v.is_number_unsigned() || dim_v.get<std::size_t>() < 1) {
    throw ParseError("unitary: \"dim\" must be a positive integer");
  }
  const auto dim = dim_v.get<std::size_t>();
  const json &entries = field(doc, "entries", "unitary");
  if (!entries.is_array() || entries.size() != dim * dim) {
    throw ParseError("unitary: \"entries\" must hold dim*dim = " + std::to_string(dim * dim) +
                     " [re, im] pairs");
  }
  ComplexMatrix u(dim, dim);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json &e = entries[k];
    if (!e.is_array() || e.size() != 2) throw ParseError("unitary: each entry must be [re, im]");
    u(k / dim, k % dim) = Cplx(number(e[0], "unitary entry"), number(e[1], "unitary entry"));
  }
  return u;
}

std::string unitary_to_json(const ComplexMatrix &u) {
  json entries = json::array();
  for (const auto &x : u.entries()) entries.push_back({x.real(), x.imag()});
  return json{{"dim", u.rows()}, {"entries", entries}}.dump() + "\n";
}

std::string angle_tree_to_json(const AngleTree &tree) {
  json angles = json::array();
  for (std::size_t level = 0; level < tree.num_qubits(); ++level) {
    for (std::uint64_t s = 0; s < tree.nodes()[level].size(); ++s) {
      angles.push_back({{"suffix", suffix_label(level, s)}, {"angle", tree.node(level, s)}});
    }
  }
  json doc{{"n", tree.num_qubits()},
           {"theta", tree.theta()},
           {"nodes", tree.nodes()},
           {"angles", angles}};
  return doc.dump(2) + "\n";
}

AngleTree parse_angle_tree(std::string_view text) {
  const json doc = parse_json(text, "angle tree");
  const json &nodes = field(doc, "nodes", "angle tree");
  if (!nodes.is_array()) throw ParseError("angle tree: \"nodes\" must be an array");
  std::vector<std::vector<double>> out;
  for (const auto &level : nodes) {
    if (!level.is_array()) throw ParseError("angle tree: each level must be an array");
    std::vector<double> row;
    for (const auto &a : level) row.push_back(number(a, "angle"));
    out.push_back(std::move(row));
  }
  try {
    return AngleTree(std::move(out));
  } catch (const Error &e) {
    throw ParseError(std::string("angle tree: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string s{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return s;
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace qsim
