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

#include "qsim/circuit_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

std::string format_u(const GateSpec &g) {
  if (g.angle()) return "R " + format_double(*g.angle());
  std::string s;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      if (!s.empty()) s += ' ';
      s += format_double(g.v()(r, c).real());
      s += ' ';
      s += format_double(g.v()(r, c).imag());
    }
  }
  return s;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<std::string_view> tok, std::size_t lineno)
      : tok_(std::move(tok)), lineno_(lineno) {}

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("line " + std::to_string(lineno_) + ": " + msg);
  }

  std::string_view next(const char *what) {
    if (pos_ >= tok_.size()) fail(std::string("missing ") + what);
    return tok_[pos_++];
  }

  std::size_t index(const char *what) {
    const auto t = next(what);
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) {
      fail(std::string("bad ") + what + " '" + std::string(t) + "'");
    }
    return v;
  }

  double real(const char *what) {
    const auto t = next(what);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) {
      fail(std::string("bad ") + what + " '" + std::string(t) + "'");
    }
    return v;
  }

  BitString bits(const char *what) {
    const auto t = next(what);
    try {
      return BitString::from_string(t);
    } catch (const ParseError &e) {
      fail(e.what());
    }
  }

  /// The <u> production; the angle is set when the "R alpha" form is used.
  ComplexMatrix unitary(std::optional<double> &angle) {
    if (pos_ < tok_.size() && tok_[pos_] == "R") {
      ++pos_;
      angle = real("angle");
      return rotation(*angle);
    }
    ComplexMatrix v(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        const double re = real("matrix entry");
        const double im = real("matrix entry");
        v(r, c) = Cplx(re, im);
      }
    }
    return v;
  }

  void finish() const {
    if (pos_ != tok_.size()) fail("trailing tokens after gate");
  }

 private:
  std::vector<std::string_view> tok_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

GateSpec finalize(GateSpec g, const std::optional<double> &angle) {
  if (angle) g.with_angle(*angle);
  return g;
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_gate(const GateSpec &g) {
  switch (g.kind()) {
    case GateKind::kWire:
      if (g.angle()) return "ROT " + std::to_string(g.target()) + " " + format_double(*g.angle());
      return "WIRE " + std::to_string(g.target()) + " " + format_u(g);
    case GateKind::kControlled:
      return "CTRL " + std::to_string(g.target()) + " " + g.pattern().to_string() + " " +
             format_u(g);
    case GateKind::kSuffixControlled:
      return "SUFFIX-CTRL " + std::to_string(g.level()) + " " + g.pattern().to_string() + " " +
             format_u(g);
    case GateKind::kTwoLevel:
      return "TWO-LEVEL " + std::to_string(g.index_i()) + " " + std::to_string(g.index_j()) + " " +
             format_u(g);
  }
  return {};
}

std::string format_circuit(const Circuit &c) {
  std::string s;
  if (c.num_qubits() > 0) {
    s += "QUBITS " + std::to_string(c.num_qubits()) + "\n";
  } else {
    s += "DIM " + std::to_string(c.dim()) + "\n";
  }
  for (const auto &g : c.gates()) s += format_gate(g) + "\n";
  return s;
}

void write_circuit(std::ostream &os, const Circuit &c) { os << format_circuit(c); }

Circuit parse_circuit(std::string_view text, double tol) {
  std::optional<Circuit> circuit;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    const std::string_view op = tok[0];
    LineParser p(std::move(tok), lineno);
    p.next("keyword");
    try {
      if (!circuit) {
        if (op == "QUBITS") {
          circuit = Circuit::on_qubits(p.index("qubit count"));
        } else if (op == "DIM") {
          circuit = Circuit::on_dim(p.index("dimension"));
        } else {
          p.fail("expected QUBITS or DIM header, got '" + std::string(op) + "'");
        }
        p.finish();
        continue;
      }

      const std::size_t n = circuit->num_qubits();
      const auto need_qubits = [&] {
        if (n == 0) p.fail("qubit gate in a DIM circuit");
      };
      std::optional<double> angle;
      if (op == "WIRE") {
        need_qubits();
        const auto j = p.index("wire");
        auto v = p.unitary(angle);
        p.finish();
        circuit->add(finalize(GateSpec::wire(n, j, std::move(v), tol), angle));
      } else if (op == "ROT") {
        need_qubits();
        const auto j = p.index("wire");
        const double alpha = p.real("angle");
        p.finish();
        circuit->add(GateSpec::wire(n, j, rotation(alpha)).with_angle(alpha));
      } else if (op == "CTRL") {
        need_qubits();
        const auto t = p.index("target");
        auto z = p.bits("control pattern");
        auto v = p.unitary(angle);
        p.finish();
        circuit->add(finalize(GateSpec::controlled(n, t, std::move(z), std::move(v), tol), angle));
      } else if (op == "SUFFIX-CTRL") {
        need_qubits();
        const auto ell = p.index("level");
        auto z = p.bits("control suffix");
        auto v = p.unitary(angle);
        p.finish();
        circuit->add(
            finalize(GateSpec::suffix_controlled(n, ell, std::move(z), std::move(v), tol), angle));
      } else if (op == "TWO-LEVEL") {
        const auto i = p.index("index i");
        const auto j = p.index("index j");
        auto v = p.unitary(angle);
        p.finish();
        circuit->add(finalize(GateSpec::two_level(circuit->dim(), i, j, std::move(v), tol), angle));
      } else if (op == "QUBITS" || op == "DIM") {
        p.fail("duplicate header");
      } else {
        p.fail("unknown gate '" + std::string(op) + "'");
      }
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!circuit) throw ParseError("empty circuit: missing QUBITS or DIM header");
  return *std::move(circuit);
}

Circuit read_circuit(std::istream &is, double tol) {
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  return parse_circuit(text, tol);
}

}  // namespace qsim
