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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsim/circuit_io.hpp"
#include "qsim/errors.hpp"
#include "qsim/grover_rudolph.hpp"
#include "qsim/json_io.hpp"
#include "qsim/qpu.hpp"
#include "qsim/udecomp.hpp"

namespace qsim::cli {

namespace {

using nlohmann::json;

constexpr double kDefaultVerifyTol = 1e-10;
constexpr double kDefaultUnitaryTol = 1e-8;

void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    write_file(cfg.output_path, text);
  }
}

void require_n(const RunConfig &cfg, std::size_t max_n) {
  if (cfg.n < 1 || cfg.n > max_n) {
    throw ParseError("--n must be between 1 and " + std::to_string(max_n));
  }
}

PiecewisePolyDensity load_density(const RunConfig &cfg) {
  if (cfg.density_path.empty()) throw ParseError("--density is required");
  return parse_density(read_file(cfg.density_path));
}

// Per-label probabilities of the prepared state: either the synthesized
// circuit for the density, or the bare initial state with --identity.
std::vector<double> exact_probabilities(const RunConfig &cfg) {
  require_n(cfg, kMaxQubits);
  if (cfg.identity) {
    const Udqc q = make_udqc(cfg.n);
    return q.observable.basis_probabilities(q.rho0);
  }
  const auto d = load_density(cfg);
  return basis_probabilities(prepared_state(synthesize(angle_tree(d, cfg.n))));
}

std::string bits_of(std::uint64_t k, std::size_t n) { return encode(k, n).to_string(); }

int cmd_synth(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  require_n(cfg, kMaxQubits);
  const auto d = load_density(cfg);
  const AngleTree tree = angle_tree(d, cfg.n);
  const Circuit c = synthesize(tree, cfg.prune);

  std::string text = "# state preparation for n=" + std::to_string(cfg.n) + ", " +
                     std::to_string(c.gate_count()) + " gates" +
                     (cfg.prune ? ", identity rotations pruned" : "") + "\n";
  text += format_circuit(c);
  emit(cfg, out, text);

  std::string sidecar = cfg.angles_path;
  if (sidecar.empty() && !cfg.output_path.empty()) sidecar = cfg.output_path + ".angles.json";
  if (!sidecar.empty()) write_file(sidecar, angle_tree_to_json(tree));

  err << "synth: " << c.gate_count() << " gates";
  if (!sidecar.empty()) err << ", angles in " << sidecar;
  err << "\n";
  return kOk;
}

int cmd_law(const RunConfig &cfg, std::ostream &out, std::ostream &) {
  const auto p = exact_probabilities(cfg);
  std::string text;
  if (cfg.format == Format::kJson) {
    json rows = json::array();
    for (std::uint64_t k = 0; k < p.size(); ++k) {
      rows.push_back({{"k", k}, {"bits", bits_of(k, cfg.n)}, {"p", p[k]}});
    }
    text = rows.dump(2) + "\n";
  } else {
    text = "k,bits,p\n";
    for (std::uint64_t k = 0; k < p.size(); ++k) {
      text += std::to_string(k) + "," + bits_of(k, cfg.n) + "," + format_double(p[k]) + "\n";
    }
  }
  emit(cfg, out, text);
  return kOk;
}

int cmd_sample(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.shots < 1) throw ParseError("--shots must be >= 1");
  const auto p = exact_probabilities(cfg);
  const ShotResult r = sample(p, cfg.shots, cfg.seed);

  SampleTable t;
  t.shots = cfg.shots;
  t.seed = cfg.seed;
  const double shots = static_cast<double>(cfg.shots);
  for (std::uint64_t k = 0; k < p.size(); ++k) {
    SampleRow row;
    row.k = k;
    row.bits = bits_of(k, cfg.n);
    row.count = r.count(k);
    row.freq = static_cast<double>(row.count) / shots;
    row.exact = p[k];
    row.deviation = row.freq - row.exact;
    t.max_deviation = std::max(t.max_deviation, std::abs(row.deviation));
    t.rows.push_back(std::move(row));
  }

  std::string text;
  if (cfg.format == Format::kJson) {
    json rows = json::array();
    for (const auto &row : t.rows) {
      rows.push_back({{"k", row.k},
                      {"bits", row.bits},
                      {"count", row.count},
                      {"freq", row.freq},
                      {"exact", row.exact},
                      {"deviation", row.deviation}});
    }
    json doc{{"n", cfg.n},
             {"shots", t.shots},
             {"seed", t.seed},
             {"max_deviation", t.max_deviation},
             {"rows", rows}};
    text = doc.dump(2) + "\n";
  } else {
    text = "# shots=" + std::to_string(t.shots) + " seed=" + std::to_string(t.seed) +
           " max_deviation=" + format_double(t.max_deviation) + "\n";
    text += "k,bits,count,freq,exact,deviation\n";
    for (const auto &row : t.rows) {
      text += std::to_string(row.k) + "," + row.bits + "," + std::to_string(row.count) + "," +
              format_double(row.freq) + "," + format_double(row.exact) + "," +
              format_double(row.deviation) + "\n";
    }
  }
  emit(cfg, out, text);
  err << "sample: " << t.shots << " shots, seed " << t.seed << ", max |freq - exact| = "
      << format_double(t.max_deviation) << "\n";
  return kOk;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.unitary_path.empty()) throw ParseError("--unitary is required");
  const double tol = cfg.tol.value_or(kDefaultUnitaryTol);
  const ComplexMatrix u = parse_unitary(read_file(cfg.unitary_path));
  if (!u.is_square() || u.rows() < 2) throw RangeError("decompose: need N >= 2");
  if (!is_unitary(u, tol)) {
    throw NotUnitaryError("decompose: input is not unitary within " + format_double(tol));
  }
  const Decomposition d = decompose_unitary(u, tol);
  const double residual = hs_norm(reconstruct(d) - u) / hs_norm(u);

  std::string text = "# two-level factors: " + std::to_string(d.factors.size()) + "\n";
  text += "# residual " + format_double(residual) + "\n";
  text += format_circuit(to_circuit(d, tol));
  emit(cfg, out, text);
  err << "decompose: N=" << d.dim << " factors=" << d.factors.size()
      << " residual=" << format_double(residual) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &) {
  require_n(cfg, kMaxVerifyQubits);
  const auto d = load_density(cfg);
  const double tol = cfg.tol.value_or(kDefaultVerifyTol);
  const VerifyReport r = verify(d, cfg.n, tol);

  std::string text;
  if (cfg.format == Format::kJson) {
    json rows = json::array();
    for (const auto &row : r.rows) {
      rows.push_back({{"k", row.k},
                      {"bits", row.bits.to_string()},
                      {"exact", row.exact},
                      {"formula", row.formula},
                      {"circuit", row.circuit}});
    }
    json doc{{"n", r.n},
             {"tol", r.tol},
             {"max_circuit_vs_exact", r.max_circuit_vs_exact},
             {"max_formula_vs_exact", r.max_formula_vs_exact},
             {"max_circuit_vs_formula", r.max_circuit_vs_formula},
             {"formula_total", r.formula_total},
             {"passed", r.passed()},
             {"rows", rows}};
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "k bits exact formula circuit\n";
    for (const auto &row : r.rows) {
      os << row.k << " " << row.bits.to_string() << " " << format_double(row.exact) << " "
         << format_double(row.formula) << " " << format_double(row.circuit) << "\n";
    }
    os << "max |circuit - exact|   = " << format_double(r.max_circuit_vs_exact) << "\n"
       << "max |formula - exact|   = " << format_double(r.max_formula_vs_exact) << "\n"
       << "max |circuit - formula| = " << format_double(r.max_circuit_vs_formula) << "\n"
       << "formula total           = " << format_double(r.formula_total) << "\n"
       << (r.passed() ? "PASS" : "FAIL") << " (tol " << format_double(tol) << ")\n";
    text = os.str();
  }
  emit(cfg, out, text);
  return r.passed() ? kOk : kVerifyFailed;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

template <typename T>
T to_number(std::string_view s) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("bad number '" + std::string(s) + "'");
  }
  return v;
}

json parse_doc(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception &e) {
    throw ParseError(e.what());
  }
}

}  // namespace

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    if (cfg.command == "synth") return cmd_synth(cfg, out, err);
    if (cfg.command == "law") return cmd_law(cfg, out, err);
    if (cfg.command == "sample") return cmd_sample(cfg, out, err);
    if (cfg.command == "decompose") return cmd_decompose(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kParseFailure;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const IoError &e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error &e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  std::string format = "csv";
  double tol = 0.0;

  CLI::App app{"qsim: dense quantum circuit simulation and state preparation"};
  app.require_subcommand(1, 1);

  const auto add_n = [&](CLI::App *sc) {
    sc->add_option("--n", cfg.n, "Number of qubits")->required();
  };
  const auto add_density = [&](CLI::App *sc, bool required) {
    auto *o = sc->add_option("--density", cfg.density_path, "Density JSON file");
    if (required) o->required();
  };
  const auto add_out = [&](CLI::App *sc) {
    sc->add_option("--out", cfg.output_path, "Output file (default: stdout)");
  };
  const auto add_format = [&](CLI::App *sc) {
    sc->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };
  const auto add_tol = [&](CLI::App *sc, const char *what) {
    sc->add_option("--tol", tol, what);
  };

  auto *synth = app.add_subcommand("synth", "Synthesize the state-preparation circuit");
  add_n(synth);
  add_density(synth, true);
  add_out(synth);
  synth->add_flag("--prune", cfg.prune, "Drop identity rotations");
  synth->add_option("--angles", cfg.angles_path,
                    "Angle tree JSON (default: <out>.angles.json when --out is set)");

  auto *law = app.add_subcommand("law", "Exact per-outcome probabilities");
  add_n(law);
  add_density(law, false);
  law->add_flag("--identity", cfg.identity, "Use the empty circuit instead of a density");
  add_out(law);
  add_format(law);

  auto *smp = app.add_subcommand("sample", "Seeded shot experiment");
  add_n(smp);
  add_density(smp, false);
  smp->add_flag("--identity", cfg.identity, "Use the empty circuit instead of a density");
  smp->add_option("--shots", cfg.shots, "Number of shots")->capture_default_str();
  smp->add_option("--seed", cfg.seed, "SplitMix64 seed")->capture_default_str();
  add_out(smp);
  add_format(smp);

  auto *dec = app.add_subcommand("decompose", "Factor a unitary into two-level gates");
  dec->add_option("--unitary", cfg.unitary_path, "Unitary JSON file")->required();
  add_out(dec);
  add_tol(dec, "Unitarity tolerance (default 1e-8)");

  auto *ver = app.add_subcommand("verify", "Compare circuit law, angle formula and target");
  add_n(ver);
  add_density(ver, true);
  add_out(ver);
  add_format(ver);
  add_tol(ver, "Agreement tolerance (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::kJson : Format::kCsv;
  for (auto *sc : {dec, ver}) {
    if (sc->parsed() && sc->count("--tol") > 0) cfg.tol = tol;
  }
  if ((cfg.command == "law" || cfg.command == "sample") && !cfg.identity &&
      cfg.density_path.empty()) {
    err << "error: --density or --identity is required\n";
    return kParseFailure;
  }
  return run(cfg, out, err);
}

std::vector<LawRow> parse_law_output(std::string_view text, Format format) {
  std::vector<LawRow> rows;
  if (format == Format::kJson) {
    const json doc = parse_doc(text);
    if (!doc.is_array()) throw ParseError("law output: expected a JSON array");
    for (const auto &r : doc) {
      rows.push_back({r.at("k").get<std::uint64_t>(), r.at("bits").get<std::string>(),
                      r.at("p").get<double>()});
    }
    return rows;
  }
  const auto lines = data_lines(text);
  if (lines.empty() || lines.front() != "k,bits,p") throw ParseError("law output: bad header");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 3) throw ParseError("law output: expected 3 columns");
    rows.push_back({to_number<std::uint64_t>(f[0]), std::string(f[1]), to_number<double>(f[2])});
  }
  return rows;
}

SampleTable parse_sample_output(std::string_view text, Format format) {
  SampleTable t;
  if (format == Format::kJson) {
    const json doc = parse_doc(text);
    try {
      t.shots = doc.at("shots").get<std::uint64_t>();
      t.seed = doc.at("seed").get<std::uint64_t>();
      t.max_deviation = doc.at("max_deviation").get<double>();
      for (const auto &r : doc.at("rows")) {
        t.rows.push_back({r.at("k").get<std::uint64_t>(), r.at("bits").get<std::string>(),
                          r.at("count").get<std::uint64_t>(), r.at("freq").get<double>(),
                          r.at("exact").get<double>(), r.at("deviation").get<double>()});
      }
    } catch (const json::exception &e) {
      throw ParseError(std::string("sample output: ") + e.what());
    }
    return t;
  }

  for (auto line : split(text, '\n')) {
    if (!line.starts_with("# ")) continue;
    line.remove_prefix(2);
    for (auto kv : split(line, ' ')) {
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos) continue;
      const auto key = kv.substr(0, eq);
      const auto val = kv.substr(eq + 1);
      if (key == "shots") t.shots = to_number<std::uint64_t>(val);
      if (key == "seed") t.seed = to_number<std::uint64_t>(val);
      if (key == "max_deviation") t.max_deviation = to_number<double>(val);
    }
    break;
  }
  const auto lines = data_lines(text);
  if (lines.empty() || lines.front() != "k,bits,count,freq,exact,deviation") {
    throw ParseError("sample output: bad header");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 6) throw ParseError("sample output: expected 6 columns");
    t.rows.push_back({to_number<std::uint64_t>(f[0]), std::string(f[1]),
                      to_number<std::uint64_t>(f[2]), to_number<double>(f[3]),
                      to_number<double>(f[4]), to_number<double>(f[5])});
  }
  return t;
}

}  // namespace qsim::cli
