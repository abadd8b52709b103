// Copyright 2026 The Topomap Authors
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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "topomap/basis_maps.h"
#include "topomap/errors.h"
#include "topomap/io.h"
#include "topomap/pipeline.h"
#include "topomap/qubit_maps.h"
#include "topomap/simulate.h"
#include "topomap/tables.h"

namespace topomap::cli {
namespace {

constexpr double kUnitarityTolerance = 1e-12;
constexpr std::size_t kExhaustiveReplayQubits = 16;
constexpr std::size_t kRandomReplays = 10000;
constexpr std::size_t kExportCap = 20;

// A numerical check failed after the inputs were accepted.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

std::string num(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::vector<std::string> kOperatorKinds = {"bijection", "injection",
                                                 "surjection", "arbitrary"};

bool is_operator_kind(const std::string& k) {
  return std::find(kOperatorKinds.begin(), kOperatorKinds.end(), k) !=
         kOperatorKinds.end();
}

BasisMapOperator build_operator(const std::string& kind, const FiniteFunction& f) {
  if (kind == "bijection") return bijection_kernel(f);
  if (kind == "injection") return injection_unitary(f);
  if (kind == "surjection") return surjection_unitary(f);
  if (kind == "arbitrary") return arbitrary_unitary(f);
  throw PreconditionError("unknown operator kind '" + kind + "'");
}

std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ",";
    s += items[i];
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Artifacts

struct OperatorArtifact {
  std::string kind;
  std::optional<FunctionTable> table;
  BasisMapOperator op;
};

struct CircuitArtifact {
  std::string kind;
  ParsedCircuit parsed;
};

struct Artifact {
  std::optional<OperatorArtifact> op;
  std::optional<CircuitArtifact> circuit;
};

std::string operator_file_text(const std::string& kind, const FunctionTable* table,
                               const BasisMapOperator& op) {
  std::ostringstream ss;
  if (!kind.empty()) ss << "# kind " << kind << "\n";
  if (table != nullptr) ss << "# function " << function_table_json(*table, false) << "\n";
  write_operator_csv(ss, op);
  return ss.str();
}

std::string circuit_file_text(const std::string& kind, const GateCircuit& circuit,
                              const RegisterLayout* layout) {
  std::ostringstream ss;
  write_circuit(ss, circuit, layout);
  if (!kind.empty()) ss << "# kind " << kind << "\n";
  return ss.str();
}

std::map<std::string, std::string> comment_fields(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("# ", 0) != 0) continue;
    const auto rest = line.substr(2);
    const auto space = rest.find(' ');
    if (space == std::string::npos) continue;
    const auto key = rest.substr(0, space);
    if (key == "kind" || key == "function") fields[key] = rest.substr(space + 1);
  }
  return fields;
}

Artifact load_artifact(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto fields = comment_fields(text);
  std::istringstream probe(text);
  std::string line;
  while (std::getline(probe, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    break;
  }
  const std::string kind = fields.count("kind") ? fields.at("kind") : "";
  Artifact a;
  if (line.rfind("dims,", 0) == 0) {
    std::istringstream is(text);
    const OperatorTable t = read_operator_csv(is);
    std::optional<FunctionTable> table;
    Basis::Ptr in, out;
    if (fields.count("function")) {
      table = parse_function_table(fields.at("function"));
      if (!is_operator_kind(kind)) {
        throw ParseError("operator file names unknown kind '" + kind + "'");
      }
      const BasisMapOperator ref = build_operator(kind, as_unary(*table));
      in = ref.input_basis_ptr();
      out = ref.output_basis_ptr();
    } else {
      in = Basis::indexed("e", t.cols);
      out = Basis::indexed("e", t.rows);
    }
    a.op = OperatorArtifact{kind, table, operator_from_table(t, in, out)};
  } else if (line.rfind("qubits,", 0) == 0) {
    std::istringstream is(text);
    a.circuit = CircuitArtifact{kind, read_circuit(is)};
  } else {
    throw ParseError("'" + path + "' is neither an operator nor a circuit file");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Subcommands

struct Options {
  std::string kind;
  std::string fn;
  std::string out_path;
  std::string op;
  std::vector<std::string> inputs;
  std::string format = "csv";
  bool pad = false;
  std::size_t bits = 0;
  std::size_t k = 0;
  std::vector<std::size_t> layer;
  std::vector<std::size_t> inner;
  std::size_t n = 0;
  double lower = 0.0;
  double upper = 0.0;
  double step = 1.0;
  std::string spacing = "uniform";
  bool have_lower = false;
  bool have_upper = false;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) out << text;
  else write_text_file(o.out_path, text);
}

int cmd_compile(const Options& o, std::ostream& out) {
  const FunctionTable table = read_function_table(o.fn);
  if (is_operator_kind(o.kind)) {
    const FiniteFunction f = as_unary(table);
    const BasisMapOperator op = build_operator(o.kind, f);
    const FunctionTable stored = to_table(f);
    write_text_file(o.out_path, operator_file_text(o.kind, &stored, op));
    const double r = unitarity_residual(op);
    out << "kind " << o.kind << "\n"
        << "dims " << op.rows() << " " << op.cols() << "\n"
        << "nonzeros " << op.nonzeros().size() << "\n"
        << "unitarity_residual " << num(r) << "\n";
    if (r > kUnitarityTolerance) {
      throw NumericalFailure("unitarity residual " + num(r) + " exceeds 1e-12");
    }
    return kExitOk;
  }
  MapCircuit mc;
  if (o.kind == "qubit-unary") {
    FiniteFunction f = as_unary(table);
    if (o.pad) f = pad_to_square(f);
    mc = unary_map_circuit(f);
  } else if (o.kind == "qubit-binary") {
    mc = binary_map_circuit(as_binary(table));
  } else {
    throw PreconditionError("unknown kind '" + o.kind + "'");
  }
  write_text_file(o.out_path, circuit_file_text(o.kind, mc.circuit, &mc.layout));
  const auto& l = mc.layout;
  out << "kind " << o.kind << "\n"
      << "qubits " << mc.circuit.qubit_count() << "\n"
      << "gates " << mc.circuit.size() << "\n"
      << "input_map_qubits " << l.count(InputRole::input_map) << "\n"
      << "ancilla0_qubits " << l.count(InputRole::ancilla0) << "\n"
      << "ancilla1_qubits " << l.count(InputRole::ancilla1) << "\n"
      << "output_map_qubits " << l.count(OutputRole::output_map) << "\n"
      << "garbage_qubits " << l.count(OutputRole::garbage) << "\n"
      << "passthrough_qubits " << l.count(OutputRole::passthrough) << "\n";
  return kExitOk;
}

std::vector<std::string> labels_of(const Basis& b) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.dim(); ++i) out.push_back(b.label_text(i));
  return out;
}

std::set<std::size_t> resolve_set(const SetFile& s, const std::vector<std::string>& space,
                                  const char* what) {
  if (!s.space.empty() && s.space != space) {
    throw BasisError(std::string("set space does not match the ") + what);
  }
  const auto ords = member_ordinals(space, s.members);
  return {ords.begin(), ords.end()};
}

int apply_operator(const OperatorArtifact& a, const Options& o, std::ostream& out) {
  if (o.inputs.size() != 1) {
    throw PreconditionError("a basis-map operator takes exactly one --input");
  }
  const SetFile s = read_set_file(o.inputs[0]);
  std::optional<FiniteFunction> f;
  if (a.table) f = as_unary(*a.table);
  const Basis::Ptr space = f ? f->domain() : a.op.input_basis_ptr();
  const auto members = resolve_set(s, labels_of(*space), "operator domain");
  AmplitudeVector v = represent_set(members, space);
  if (f && a.kind == "injection") v = injection_input(*f, v);
  if (f && a.kind == "arbitrary") v = arbitrary_input(*f, v);
  if (v.dim() != a.op.cols()) {
    throw BasisError("input has dimension " + std::to_string(v.dim()) +
                     ", operator takes " + std::to_string(a.op.cols()));
  }
  const AmplitudeVector r = apply(a.op, v);
  std::vector<std::string> in_labels, out_labels;
  for (std::size_t x : members) in_labels.push_back(space->label_text(x));
  for (std::size_t y : extract_set(r)) {
    out_labels.push_back(f ? f->codomain()->label_text(y)
                           : r.basis().label_text(y));
  }
  if (!a.kind.empty()) out << "kind " << a.kind << "\n";
  out << "dims " << a.op.rows() << " " << a.op.cols() << "\n"
      << "input " << braces(in_labels) << "\n";
  for (std::size_t i = 0; i < r.dim(); ++i) {
    out << "amplitude " << r.basis().label_text(i) << " " << num(r[i].real())
        << " " << num(r[i].imag()) << "\n";
  }
  out << "output_set " << braces(out_labels) << "\n"
      << "garbage_norm " << num(garbage_norm(r)) << "\n";
  return kExitOk;
}

std::vector<std::vector<std::string>> argument_label_groups(const RegisterLayout& l) {
  const auto maps = l.qubits_with(InputRole::input_map);
  if (l.arguments == 0 || maps.size() % l.arguments != 0) {
    throw PreconditionError("input-map qubits do not split evenly into arguments");
  }
  const std::size_t width = maps.size() / l.arguments;
  std::vector<std::vector<std::string>> g(l.arguments);
  for (std::size_t i = 0; i < maps.size(); ++i) g[i / width].push_back(l.input_labels[maps[i]]);
  return g;
}

int apply_circuit(const CircuitArtifact& a, const Options& o, std::ostream& out) {
  if (!a.parsed.layout) {
    throw PreconditionError("circuit file carries no register layout");
  }
  const RegisterLayout& l = *a.parsed.layout;
  const auto groups = argument_label_groups(l);
  if (o.inputs.size() != groups.size()) {
    throw PreconditionError("circuit takes " + std::to_string(groups.size()) +
                            " --input sets, got " + std::to_string(o.inputs.size()));
  }
  std::vector<std::set<std::size_t>> args;
  std::vector<std::string> shown;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const SetFile s = read_set_file(o.inputs[i]);
    const auto set = resolve_set(s, groups[i], "circuit input map");
    std::vector<std::string> names;
    for (std::size_t x : set) names.push_back(groups[i][x]);
    shown.push_back(braces(names));
    args.push_back(set);
  }
  const BitString in = prepare_input(l, args);
  const BitString res = simulate_basis(a.parsed.circuit, in);
  std::vector<std::string> outputs;
  const auto carriers = l.output_qubits();
  for (std::size_t q : carriers) {
    if (res[q]) outputs.push_back(l.output_labels[q]);
  }
  std::size_t garbage_ones = 0;
  for (std::size_t q = 0; q < l.qubit_count(); ++q) {
    if (l.outputs[q] == OutputRole::garbage && res[q]) ++garbage_ones;
  }
  if (!a.kind.empty()) out << "kind " << a.kind << "\n";
  out << "qubits " << a.parsed.circuit.qubit_count() << "\n";
  for (std::size_t i = 0; i < shown.size(); ++i) out << "input " << shown[i] << "\n";
  out << "initial_state " << in.to_string() << "\n"
      << "final_state " << res.to_string() << "\n"
      << "output_set " << braces(outputs) << "\n"
      << "garbage_ones " << garbage_ones << "\n";
  return kExitOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const Artifact a = load_artifact(o.op);
  if (a.op) return apply_operator(*a.op, o, out);
  return apply_circuit(*a.circuit, o, out);
}

// Replays circuit then inverse; returns the number of inputs checked.
std::size_t check_reversible(const GateCircuit& c) {
  const GateCircuit round = c.then(c.inverse());
  const std::size_t q = c.qubit_count();
  auto check = [&](const BitString& s) {
    if (!(simulate_basis(round, s) == s)) {
      throw NumericalFailure("inverse replay does not restore " + s.to_string());
    }
  };
  if (q <= kExhaustiveReplayQubits) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << q); ++i) {
      BitString s(q);
      for (std::size_t b = 0; b < q; ++b) s.set(b, (i >> (q - 1 - b)) & 1);
      check(s);
    }
    return std::size_t{1} << q;
  }
  std::mt19937_64 rng(0x5eed);
  for (std::size_t t = 0; t < kRandomReplays; ++t) {
    BitString s(q);
    for (std::size_t b = 0; b < q; ++b) s.set(b, rng() & 1);
    check(s);
  }
  return kRandomReplays;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Artifact a = load_artifact(o.op);
  if (a.op) {
    const double r = unitarity_residual(a.op->op);
    if (!a.op->kind.empty()) out << "kind " << a.op->kind << "\n";
    out << "dims " << a.op->op.rows() << " " << a.op->op.cols() << "\n"
        << "unitarity_residual " << num(r) << "\n";
    if (r > kUnitarityTolerance) {
      out << "status fail\n";
      throw NumericalFailure("unitarity residual " + num(r) + " exceeds 1e-12");
    }
    out << "status ok\n";
    return kExitOk;
  }
  const GateCircuit& c = a.circuit->parsed.circuit;
  if (!a.circuit->kind.empty()) out << "kind " << a.circuit->kind << "\n";
  out << "qubits " << c.qubit_count() << "\n"
      << "gates " << c.size() << "\n";
  const std::size_t checked = check_reversible(c);
  out << "reversal_checks " << checked << "\n"
      << "status ok\n";
  return kExitOk;
}

void write_stats(const FiniteFunction& f, std::ostream& out) {
  const auto& s = f.stats();
  out << "n " << s.n << "\n"
      << "m " << s.m << "\n"
      << "image_size " << s.image_size << "\n"
      << "m_nr " << s.m_nr << "\n"
      << "n_b " << s.n_b << "\n"
      << "n_n " << s.n_n << "\n"
      << "m_n " << s.m_n << "\n";
  for (std::size_t y = 0; y < s.m; ++y) {
    out << "multiplicity " << f.codomain()->label_text(y) << " "
        << s.multiplicities[y] << "\n";
  }
  auto yes = [](bool b) { return b ? "" : " (not applicable)"; };
  out << "bijection_dims " << s.n << "x" << s.n << yes(f.is_bijective()) << "\n"
      << "injection_dims " << s.n * s.m << "x" << s.n * s.m
      << yes(f.is_injective() && s.n < s.m) << "\n"
      << "surjection_dims " << s.n << "x" << s.n << yes(f.is_surjective()) << "\n"
      << "arbitrary_dims " << (s.n + 1) * (s.m + 1) << "x" << (s.n + 1) * (s.m + 1)
      << "\n"
      << "qubit_unary_qubits " << unary_qubit_count(s) << yes(s.n == s.m) << "\n";
}

int cmd_stats(const Options& o, std::ostream& out) {
  const FunctionTable table = read_function_table(o.fn);
  if (table.arity == 2) {
    const BinaryFunction b = as_binary(table);
    const FiniteFunction flat = b.flatten();
    out << "arity 2\n";
    write_stats(flat, out);
    out << "qubit_binary_qubits " << binary_qubit_count(b.argument_size(), flat.stats().m_nr)
        << (b.codomain_size() == b.argument_size() ? "" : " (not applicable)") << "\n";
    return kExitOk;
  }
  write_stats(as_unary(table), out);
  return kExitOk;
}

int cmd_demux(const Options& o, std::ostream& out) {
  const MapCircuit mc = demux_circuit(o.bits);
  if (o.k >= (std::size_t{1} << o.bits)) {
    throw PreconditionError("k = " + std::to_string(o.k) + " does not fit in " +
                            std::to_string(o.bits) + " bits");
  }
  BitString in(mc.circuit.qubit_count());
  for (std::size_t b = 0; b < o.bits; ++b) in.set(b, (o.k >> (o.bits - 1 - b)) & 1);
  for (std::size_t q = 0; q < in.size(); ++q) {
    if (mc.layout.inputs[q] == InputRole::ancilla1) in.set(q, true);
  }
  const BitString res = simulate_basis(mc.circuit, in);
  std::vector<std::string> set;
  for (std::size_t p : read_output(mc.layout, res)) set.push_back(std::to_string(p));
  out << "bits " << o.bits << "\n"
      << "k " << o.k << "\n"
      << "qubits " << mc.circuit.qubit_count() << "\n"
      << "gates " << mc.circuit.size() << "\n"
      << "register " << res.to_string().substr(0, o.bits) << "\n"
      << "map_positions " << braces(set) << "\n";
  return kExitOk;
}

GridSpec grid_from(const Options& o) {
  if (o.n < 2) throw PreconditionError("--n must be at least 2");
  if (o.have_lower || o.have_upper) {
    const Spacing sp = o.spacing == "logarithmic" ? Spacing::logarithmic : Spacing::uniform;
    return GridSpec(o.n, o.lower, o.upper, sp);
  }
  return GridSpec::zero_based(o.n, o.step);
}

int cmd_estimate(const Options& o, std::ostream& out) {
  if (!o.layer.empty()) {
    write_estimate(out, estimate_layer(o.layer[0], o.layer[1], o.layer[2]));
    return kExitOk;
  }
  if (!o.inner.empty()) {
    const InnerProductPlan plan =
        inner_product_plan(o.inner[0], GridSpec::zero_based(o.inner[1], o.step));
    plan.write_manifest(out);
    return kExitOk;
  }
  throw CLI::ValidationError("estimate", "one of --layer or --inner is required");
}

int cmd_export(const Options& o, std::ostream& out) {
  const Artifact a = load_artifact(o.op);
  if (a.op) {
    if (o.format == "gates") {
      throw PreconditionError("a basis-map operator has no gate form");
    }
    const FunctionTable* t = a.op->table ? &*a.op->table : nullptr;
    emit(o, operator_file_text(a.op->kind, t, a.op->op), out);
    return kExitOk;
  }
  const auto& c = *a.circuit;
  const RegisterLayout* l = c.parsed.layout ? &*c.parsed.layout : nullptr;
  if (o.format == "gates") {
    emit(o, circuit_file_text(c.kind, c.parsed.circuit, l), out);
    return kExitOk;
  }
  // Permutation matrix over the full register.
  const std::size_t q = c.parsed.circuit.qubit_count();
  if (q > kExportCap) {
    throw CapacityError("matrix export of " + std::to_string(q) +
                        " qubits exceeds the cap of " + std::to_string(kExportCap));
  }
  const auto reg = Basis::qubit_register(q);
  std::vector<MatrixEntry> entries;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << q); ++i) {
    BitString s(q);
    for (std::size_t b = 0; b < q; ++b) s.set(b, (i >> (q - 1 - b)) & 1);
    const BitString r = simulate_basis(c.parsed.circuit, s);
    std::uint64_t j = 0;
    for (std::size_t b = 0; b < q; ++b) j = (j << 1) | (r[b] ? 1 : 0);
    entries.push_back({static_cast<std::size_t>(j), static_cast<std::size_t>(i), 1.0});
  }
  const auto op = BasisMapOperator::from_entries(reg, reg, entries, Storage::sparse);
  emit(o, operator_file_text("", nullptr, op), out);
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const GridSpec grid = grid_from(o);
  FunctionTable t;
  if (o.kind == "tanh-restricted" || o.kind == "truncation") {
    t = to_table(squash_table(parse_squash_kind(o.kind), grid));
  } else if (o.kind == "product") {
    t = to_table(product_table(grid));
  } else {
    t = to_table(sum_table(parse_sum_kind(o.kind), grid));
  }
  emit(o, function_table_json(t), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile finite functions into topographic basis-map operators "
               "and qubit-map circuits."};
  app.name("topomap");
  app.require_subcommand(1);
  Options o;

  auto* compile = app.add_subcommand("compile", "Build an operator or circuit from a function table");
  compile->add_option("--kind", o.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"bijection", "injection", "surjection", "arbitrary",
                             "qubit-unary", "qubit-binary"}));
  compile->add_option("--fn", o.fn, "Function table (JSON)")->required();
  compile->add_option("--out", o.out_path, "Output file")->required();
  compile->add_flag("--pad", o.pad, "qubit-unary: pad the smaller space to a square table");

  auto* apply_cmd = app.add_subcommand("apply", "Run an operator or circuit on a set");
  apply_cmd->add_option("--op", o.op, "Operator or circuit file")->required();
  apply_cmd->add_option("--input", o.inputs, "Set file (repeat once per circuit argument)")
      ->required();

  auto* verify = app.add_subcommand("verify", "Check unitarity or reversibility");
  verify->add_option("--op", o.op, "Operator or circuit file")->required();

  auto* stats = app.add_subcommand("stats", "Injectivity/surjectivity statistics");
  stats->add_option("--fn", o.fn, "Function table (JSON)")->required();

  auto* demux = app.add_subcommand("demux", "Route a token to map position k");
  demux->add_option("--bits", o.bits, "Binary register width")->required();
  demux->add_option("--k", o.k, "Value held by the register")->required();

  auto* estimate = app.add_subcommand("estimate", "Qubit budgets for inner products and layers");
  auto* layer_opt = estimate->add_option("--layer", o.layer, "M N n")->expected(3);
  auto* inner_opt = estimate->add_option("--inner", o.inner, "N n (stage manifest)")->expected(2);
  estimate->add_option("--step", o.step, "Grid spacing for --inner");
  layer_opt->excludes(inner_opt);

  auto* exp = app.add_subcommand("export", "Re-emit an artifact");
  exp->add_option("--op", o.op, "Operator or circuit file")->required();
  exp->add_option("--format", o.format, "csv or gates")
      ->check(CLI::IsMember({"csv", "gates"}));
  exp->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* table = app.add_subcommand("table", "Generate a function table on a value grid");
  table->add_option("--kind", o.kind, "Table")
      ->required()
      ->check(CLI::IsMember({"tanh-restricted", "truncation", "tsum", "hsum", "wide",
                             "product"}));
  table->add_option("--n", o.n, "Grid points")->required();
  auto* lo = table->add_option("--lower", o.lower, "Lower grid bound");
  auto* hi = table->add_option("--upper", o.upper, "Upper grid bound");
  table->add_option("--step", o.step, "Spacing of a grid starting at 0");
  table->add_option("--spacing", o.spacing, "uniform or logarithmic")
      ->check(CLI::IsMember({"uniform", "logarithmic"}));
  table->add_option("--out", o.out_path, "Output file (default: stdout)");
  lo->needs(hi);
  hi->needs(lo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    o.have_lower = lo->count() > 0;
    o.have_upper = hi->count() > 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "topomap: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compile->parsed()) return cmd_compile(o, out);
    if (apply_cmd->parsed()) return cmd_apply(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (demux->parsed()) return cmd_demux(o, out);
    if (estimate->parsed()) return cmd_estimate(o, out);
    if (exp->parsed()) return cmd_export(o, out);
    if (table->parsed()) return cmd_table(o, out);
  } catch (const CLI::ParseError& e) {
    err << "topomap: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalFailure& e) {
    err << "topomap: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "topomap: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace topomap::cli
