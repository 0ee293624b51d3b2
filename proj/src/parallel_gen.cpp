#include "rs3127/parallel_gen.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <regex>
#include <sstream>

namespace rs3127 {

namespace {

constexpr std::string_view kMatrixHeader = "# rs3127 parity-matrix prim=0x25 groots=1..4";

// A GF(32) symbol whose five bits are linear forms over the information bits.
using SymbolicSymbol = std::array<LinearForm, kSymbolBits>;

SymbolicSymbol operator+(const SymbolicSymbol& a, const SymbolicSymbol& b) {
  SymbolicSymbol r;
  for (int i = 0; i < kSymbolBits; ++i) r[i] = a[i] + b[i];
  return r;
}

// Multiplication by a constant is GF(2)-linear: bit i of the input
// contributes c * x^i to the product.
SymbolicSymbol scale(const SymbolicSymbol& v, GfElement c) {
  SymbolicSymbol r;
  for (int i = 0; i < kSymbolBits; ++i) {
    const GfElement image = c * GfElement(1U << i);
    for (int k = 0; k < kSymbolBits; ++k) {
      if (image.bit(k)) r[k] += v[i];
    }
  }
  return r;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_int(std::string_view s, int base = 10) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Rejects a "# rs3127 ... prim=0xNN ..." header built for a different field.
void check_header_comment(std::string_view comment, int line_no) {
  comment = trim(comment);
  if (!comment.starts_with("rs3127 ")) return;
  const auto pos = comment.find("prim=0x");
  if (pos == std::string_view::npos) return;
  auto rest = comment.substr(pos + 7);
  rest = rest.substr(0, rest.find(' '));
  const auto prim = parse_int(rest, 16);
  if (!prim || static_cast<unsigned>(*prim) != kPrimitivePoly) {
    throw FormatError(line_no, "header declares a different primitive polynomial");
  }
}

std::string signal_name(const Signal& s) {
  switch (s.kind) {
    case Signal::Kind::zero: return "ZERO";
    case Signal::Kind::input: return "d" + std::to_string(s.index);
    case Signal::Kind::gate: return "w" + std::to_string(s.index);
  }
  return {};
}

// Resolves a reference while parsing gate `defining` (-1 for outputs).
Signal parse_signal(std::string_view tok, int gates_defined, int defining, int line_no) {
  if (tok == "ZERO") return Signal::zero();
  if (tok.size() >= 2 && (tok[0] == 'd' || tok[0] == 'w')) {
    const auto n = parse_int(tok.substr(1));
    if (!n) throw FormatError(line_no, "malformed reference '" + std::string(tok) + "'");
    if (tok[0] == 'd') {
      if (*n < 0 || *n >= kInfoBits) throw FormatError(line_no, "information bit out of range: " + std::string(tok));
      return Signal::input(*n);
    }
    if (*n == defining) throw FormatError(line_no, "cyclic reference: " + std::string(tok) + " feeds itself");
    if (*n < 0 || *n >= gates_defined) throw FormatError(line_no, "reference to undefined wire " + std::string(tok));
    return Signal::gate(*n);
  }
  throw FormatError(line_no, "malformed reference '" + std::string(tok) + "'");
}

}  // namespace

std::vector<int> LinearForm::indices() const {
  std::vector<int> out;
  for (int c = 0; c < kInfoBits; ++c) {
    if (terms.test(static_cast<std::size_t>(c))) out.push_back(c);
  }
  return out;
}

ParityBits ParityMatrix::apply(const InfoBits& info) const noexcept {
  ParityBits p;
  for (int r = 0; r < kParityBits; ++r) p.set(static_cast<std::size_t>(r), rows_[r].evaluate(info));
  return p;
}

int ParityMatrix::rank() const noexcept {
  std::array<InfoBits, kParityBits> m;
  for (int r = 0; r < kParityBits; ++r) m[r] = rows_[r].terms;
  int rank = 0;
  for (int c = 0; c < kInfoBits && rank < kParityBits; ++c) {
    int pivot = rank;
    while (pivot < kParityBits && !m[pivot].test(static_cast<std::size_t>(c))) ++pivot;
    if (pivot == kParityBits) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = 0; r < kParityBits; ++r) {
      if (r != rank && m[r].test(static_cast<std::size_t>(c))) m[r] ^= m[rank];
    }
    ++rank;
  }
  return rank;
}

int ParityMatrix::max_fan_in() const noexcept {
  int best = 0;
  for (const auto& row : rows_) best = std::max(best, row.fan_in());
  return best;
}

FormatError::FormatError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

ParityMatrix derive_parity_matrix() {
  const GeneratorPoly& g = generator_poly();
  std::array<SymbolicSymbol, kParityLength> regs{};

  for (int j = 0; j < kMessageLength; ++j) {
    SymbolicSymbol in;
    for (int i = 0; i < kSymbolBits; ++i) in[i].terms.set(static_cast<std::size_t>(info_bit_index(j, i)));

    const SymbolicSymbol feedback = in + regs[kParityLength - 1];
    for (int d = kParityLength - 1; d > 0; --d) regs[d] = regs[d - 1] + scale(feedback, g[d]);
    regs[0] = scale(feedback, g[0]);
  }
  // Shift-out only unloads regs[3], regs[2], ... so no further cycles are needed.

  std::array<LinearForm, kParityBits> rows;
  for (int jp = 0; jp < kParityLength; ++jp) {
    for (int i = 0; i < kSymbolBits; ++i) rows[parity_bit_index(jp, i)] = regs[kParityLength - 1 - jp][i];
  }
  ParityMatrix m(rows);
  if (m.rank() != kParityBits) throw std::logic_error("derive_parity_matrix: matrix is rank deficient");
  return m;
}

const ParityMatrix& parity_matrix() {
  static const ParityMatrix m = derive_parity_matrix();
  return m;
}

std::string format_matrix(const ParityMatrix& m) {
  std::string out(kMatrixHeader);
  out += '\n';
  for (int r = 0; r < kParityBits; ++r) {
    for (int c = 0; c < kInfoBits; ++c) out += m.entry(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

ParityMatrix parse_matrix(std::string_view text) {
  std::array<LinearForm, kParityBits> rows;
  int row = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      check_header_comment(line.substr(1), line_no);
      continue;
    }
    if (row == kParityBits) throw FormatError(line_no, "more than 20 matrix rows");
    if (line.size() != static_cast<std::size_t>(kInfoBits)) {
      throw FormatError(line_no, "matrix row must have 135 columns, got " + std::to_string(line.size()));
    }
    for (int c = 0; c < kInfoBits; ++c) {
      if (line[c] == '1') {
        rows[row].terms.set(static_cast<std::size_t>(c));
      } else if (line[c] != '0') {
        throw FormatError(line_no, "matrix entries must be 0 or 1");
      }
    }
    ++row;
  }
  if (row != kParityBits) throw FormatError(0, "expected 20 matrix rows, got " + std::to_string(row));
  return ParityMatrix(rows);
}

int xor3_tree_depth(int fan_in) noexcept {
  int depth = 0;
  for (long long reach = 1; reach < fan_in; reach *= 3) ++depth;
  return depth;
}

int XorNetwork::max_depth() const noexcept { return *std::max_element(depth.begin(), depth.end()); }

NetworkTrace XorNetwork::evaluate_traced(const InfoBits& info) const {
  std::vector<bool> value(gates.size());
  std::vector<int> level(gates.size());
  const auto read = [&](const Signal& s) -> bool {
    switch (s.kind) {
      case Signal::Kind::zero: return false;
      case Signal::Kind::input: return info.test(static_cast<std::size_t>(s.index));
      case Signal::Kind::gate: return value.at(static_cast<std::size_t>(s.index));
    }
    return false;
  };
  const auto level_of = [&](const Signal& s) {
    return s.kind == Signal::Kind::gate ? level[static_cast<std::size_t>(s.index)] : 0;
  };

  NetworkTrace trace;
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const auto& in = gates[g].inputs;
    value[g] = read(in[0]) ^ read(in[1]) ^ read(in[2]);
    level[g] = 1 + std::max({level_of(in[0]), level_of(in[1]), level_of(in[2])});
    ++trace.gates_evaluated;
  }
  for (int k = 0; k < kParityBits; ++k) {
    trace.parity.set(static_cast<std::size_t>(k), read(outputs[k]));
    trace.max_depth = std::max(trace.max_depth, level_of(outputs[k]));
  }
  return trace;
}

ParityBits XorNetwork::evaluate(const InfoBits& info) const { return evaluate_traced(info).parity; }

ParityMatrix XorNetwork::to_matrix() const {
  std::vector<LinearForm> forms(gates.size());
  const auto form_of = [&](const Signal& s) {
    LinearForm f;
    if (s.kind == Signal::Kind::input) f.terms.set(static_cast<std::size_t>(s.index));
    if (s.kind == Signal::Kind::gate) f = forms.at(static_cast<std::size_t>(s.index));
    return f;
  };
  for (std::size_t g = 0; g < gates.size(); ++g) {
    for (const Signal& s : gates[g].inputs) forms[g] += form_of(s);
  }
  std::array<LinearForm, kParityBits> rows;
  for (int k = 0; k < kParityBits; ++k) rows[k] = form_of(outputs[k]);
  return ParityMatrix(rows);
}

std::array<int, kParityBits> compute_depths(const std::vector<XorGate>& gates,
                                            const std::array<Signal, kParityBits>& outputs) {
  std::vector<int> level(gates.size());
  const auto level_of = [&](const Signal& s) {
    return s.kind == Signal::Kind::gate ? level.at(static_cast<std::size_t>(s.index)) : 0;
  };
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const auto& in = gates[g].inputs;
    level[g] = 1 + std::max({level_of(in[0]), level_of(in[1]), level_of(in[2])});
  }
  std::array<int, kParityBits> depth{};
  for (int k = 0; k < kParityBits; ++k) depth[k] = level_of(outputs[k]);
  return depth;
}

XorNetwork build_xor3_network(const ParityMatrix& matrix) {
  XorNetwork net;
  for (int r = 0; r < kParityBits; ++r) {
    std::vector<Signal> level;
    for (int c : matrix.row(r).indices()) level.push_back(Signal::input(c));

    int depth = 0;
    while (level.size() > 1) {
      std::vector<Signal> next;
      for (std::size_t i = 0; i < level.size(); i += 3) {
        XorGate gate;
        for (std::size_t k = 0; k < 3; ++k) {
          gate.inputs[k] = i + k < level.size() ? level[i + k] : Signal::zero();
        }
        next.push_back(Signal::gate(static_cast<int>(net.gates.size())));
        net.gates.push_back(gate);
      }
      level = std::move(next);
      ++depth;
    }
    net.outputs[r] = level.empty() ? Signal::zero() : level.front();
    net.depth[r] = depth;
  }
  return net;
}

std::string emit_netlist(const XorNetwork& net) {
  std::ostringstream out;
  out << "# rs3127 parity netlist prim=0x" << std::hex << kPrimitivePoly << std::dec
      << " groots=" << kFirstRoot << ".." << kFirstRoot + kParityLength - 1
      << " maxdepth=" << net.max_depth() << '\n';
  for (std::size_t g = 0; g < net.gates.size(); ++g) {
    const auto& in = net.gates[g].inputs;
    out << "wire w" << g << " = XOR3(" << signal_name(in[0]) << ", " << signal_name(in[1]) << ", "
        << signal_name(in[2]) << ")\n";
  }
  for (int k = 0; k < kParityBits; ++k) out << "out p" << k << " = " << signal_name(net.outputs[k]) << '\n';
  return out.str();
}

XorNetwork parse_netlist(std::string_view text) {
  static const std::regex wire_re(R"(wire\s+w(\d+)\s*=\s*XOR3\(\s*(\w+)\s*,\s*(\w+)\s*,\s*(\w+)\s*\))");
  static const std::regex out_re(R"(out\s+p(\d+)\s*=\s*(\w+))");

  XorNetwork net;
  std::array<bool, kParityBits> have_output{};
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      check_header_comment(line.substr(hash + 1), line_no);
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::string stmt(line);
    std::smatch m;
    if (std::regex_match(stmt, m, wire_re)) {
      const auto id = parse_int(m[1].str());
      const int expected = static_cast<int>(net.gates.size());
      if (!id || *id > expected) {
        throw FormatError(line_no, "gate ids must be dense and ascending; expected w" + std::to_string(expected));
      }
      if (*id < expected) throw FormatError(line_no, "duplicate definition of w" + m[1].str());
      XorGate gate;
      for (int k = 0; k < 3; ++k) {
        gate.inputs[k] = parse_signal(m[2 + k].str(), expected, expected, line_no);
      }
      net.gates.push_back(gate);
    } else if (std::regex_match(stmt, m, out_re)) {
      const auto k = parse_int(m[1].str());
      if (!k || *k < 0 || *k >= kParityBits) throw FormatError(line_no, "output index out of range: p" + m[1].str());
      if (have_output[*k]) throw FormatError(line_no, "duplicate output p" + m[1].str());
      net.outputs[*k] = parse_signal(m[2].str(), static_cast<int>(net.gates.size()), -1, line_no);
      have_output[*k] = true;
    } else {
      throw FormatError(line_no, "syntax error: '" + stmt + "'");
    }
  }
  for (int k = 0; k < kParityBits; ++k) {
    if (!have_output[k]) throw FormatError(0, "missing output p" + std::to_string(k));
  }
  net.depth = compute_depths(net.gates, net.outputs);
  return net;
}

}  // namespace rs3127
