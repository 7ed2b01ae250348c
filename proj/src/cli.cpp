#include "lpalie/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpalie/families.hpp"
#include "lpalie/graph_format.hpp"
#include "lpalie/report.hpp"
#include "lpalie/selftest.hpp"

namespace lpalie {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::uint64_t parse_unsigned(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      s.size() > 19) {
    throw UsageError(what + " must be a non-negative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

std::vector<FieldSpec> parse_fields(const std::string& text) {
  std::vector<FieldSpec> out;
  for (const auto& item : split_list(text)) {
    const std::uint64_t c = parse_unsigned(item, "characteristic");
    if (c != 0 && (c > FieldSpec::max_characteristic || !is_prime(c))) {
      throw UsageError("characteristic must be 0 or a prime below 2^32, got " + item);
    }
    out.push_back(FieldSpec::of_characteristic(c));
  }
  return out;
}

struct Input {
  std::string name;
  Graph graph;
};

Input load(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return Input{path == "-" ? "<stdin>" : path, read_graph(text)};
  } catch (const ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

json envelope(const std::string& command) {
  json j;
  j["schema"] = report_schema;
  j["command"] = command;
  return j;
}

json chars_json(const std::vector<FieldSpec>& fields) {
  json a = json::array();
  for (const auto& f : fields) a.push_back(f.characteristic());
  return a;
}

std::string labels(const Graph& g, const std::vector<std::size_t>& vs) {
  if (vs.empty()) return "none";
  std::string s;
  for (std::size_t v : vs) {
    if (!s.empty()) s += ' ';
    s += g.vertex(v).label;
  }
  return s;
}

constexpr std::size_t shown_witnesses = 20;

void print_simplicity(std::ostream& out, const std::string& title, const SimplicityReport& r, const Graph& g) {
  out << title << ": " << (r.verdict ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < r.witnesses.size() && i < shown_witnesses; ++i) {
    out << "  - " << describe(r.witnesses[i], g) << "\n";
  }
  if (r.witnesses.size() > shown_witnesses) {
    out << "  ... " << r.witnesses.size() - shown_witnesses << " more\n";
  }
}

std::string unit_class_text(const K0Presentation& k0) {
  const IntVector c = visible_unit_class(k0);
  return c.empty() ? "0" : to_string(c);
}

std::string field_tag(const FieldSpec& f) { return "char " + std::to_string(f.characteristic()) + " (" + f.name() + ")"; }

void print_k0_line(std::ostream& out, const std::string& prefix, const K0Presentation& k0) {
  auto order = class_order(k0);
  out << prefix << format_group(k0) << "; unit class " << unit_class_text(k0) << ", order "
      << (order ? order->get_str() : std::string("infinite")) << "\n";
}

// --- analyze ---------------------------------------------------------------

int cmd_analyze(const std::string& path, const std::string& chars, bool as_json, std::istream& in, std::ostream& out) {
  const auto fields = parse_fields(chars);
  const Input input = load(path, in);
  const Graph& g = input.graph;

  const auto b = b_vectors(g);
  const SimplicityReport simple = is_simple_lpa(g);
  const SimplicityReport pis = is_purely_infinite_simple(g);
  std::optional<K0Presentation> k0;
  if (pis.verdict) k0 = cokernel(m_matrix(g));

  bool all_inapplicable = true;
  json verdicts = json::array();
  std::ostringstream text;
  for (const auto& f : fields) {
    const LieVerdict span = lie_simplicity(g, f);
    if (span.status != LieStatus::inapplicable) all_inapplicable = false;
    json row = verdict_json(span, &g);
    text << "  " << field_tag(f) << ": " << to_string(span.status) << " [" << describe(span) << "]\n";
    if (span.span_coefficients) {
      text << "    coefficients " << format_scalars(*span.span_coefficients) << " combine the B-vectors to (1, ..., 1)\n";
    }
    if (pis.verdict) {
      const LieVerdict via_k0 = lie_simplicity_via_k0(g, f);
      const bool agree = via_k0.status == span.status;
      row["k0_route"] = verdict_json(via_k0, &g);
      row["agreement"] = agree ? "AGREE" : "DISAGREE";
      text << "    k0 route: " << to_string(via_k0.status) << " [" << describe(via_k0) << "] "
           << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    verdicts.push_back(row);
  }

  if (as_json) {
    json j = envelope("analyze");
    j["input"] = input.name;
    j["characteristics"] = chars_json(fields);
    j["graph"] = graph_summary_json(g);
    json bj = json::array();
    for (std::size_t i = 0; i < b.size(); ++i) bj.push_back({{"vertex", g.vertex(i).label}, {"b", to_json(b[i])}});
    j["b_vectors"] = bj;
    j["simple"] = simplicity_json(simple, g);
    j["purely_infinite_simple"] = simplicity_json(pis, g);
    if (k0) j["k0"] = k0_json(*k0);
    j["verdicts"] = verdicts;
    j["exit_code"] = all_inapplicable ? exit_inapplicable : exit_ok;
    out << j.dump(2) << "\n";
  } else {
    out << "graph " << input.name << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    out << "sinks: " << labels(g, g.sinks()) << "\n";
    out << "regular vertices: " << labels(g, g.regular_vertices()) << "\n";
    out << "B-vectors:\n";
    for (std::size_t i = 0; i < b.size(); ++i) out << "  " << g.vertex(i).label << ": " << to_string(b[i]) << "\n";
    print_simplicity(out, "simple algebra", simple, g);
    print_simplicity(out, "purely infinite simple", pis, g);
    if (k0) print_k0_line(out, "K0: ", *k0);
    out << "Lie algebra [L, L]:\n" << text.str();
  }
  return all_inapplicable ? exit_inapplicable : exit_ok;
}

// --- k0 --------------------------------------------------------------------

int cmd_k0(const std::string& path, const std::string& chars, bool as_json, std::istream& in, std::ostream& out) {
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19};
  if (!chars.empty()) {
    for (const auto& f : parse_fields(chars)) {
      if (!f.is_rational() && std::find(primes.begin(), primes.end(), f.characteristic()) == primes.end()) {
        primes.push_back(f.characteristic());
      }
    }
  }
  const Input input = load(path, in);
  const Graph& g = input.graph;
  const IntMatrix m = m_matrix(g);
  const SmithDecomposition snf = smith_normal_form(m);
  const K0Presentation k0 = cokernel(m);
  const auto order = class_order(k0);

  if (as_json) {
    json j = envelope("k0");
    j["input"] = input.name;
    j["graph"] = graph_summary_json(g);
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    j["m_matrix"] = rows;
    j["smith_diagonal"] = to_json(snf.diagonal());
    j["k0"] = k0_json(k0);
    json div = json::array();
    for (std::uint64_t p : primes) div.push_back({{"p", p}, {"divisible", is_p_divisible(k0, p)}});
    j["p_divisibility"] = div;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "graph " << input.name << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  out << "M = I - A^t:\n";
  for (std::size_t i = 0; i < m.rows(); ++i) out << "  " << to_string(m.row(i)) << "\n";
  out << "Smith diagonal: " << to_string(snf.diagonal()) << "\n";
  out << "invariant factors: " << (k0.torsion_factors().empty() ? std::string("none") : to_string(k0.torsion_factors()))
      << ", free rank " << k0.free_rank() << "\n";
  out << "K0: " << format_group(k0) << "\n";
  out << "unit class: " << unit_class_text(k0) << "\n";
  out << "unit class order: " << (order ? order->get_str() : std::string("infinite")) << "\n";
  out << "p-divisible:";
  for (std::uint64_t p : primes) out << " " << p << (is_p_divisible(k0, p) ? ":yes" : ":no");
  out << "\n";
  return exit_ok;
}

// --- witness ---------------------------------------------------------------

int cmd_witness(const std::string& path, const std::string& coeffs, const std::string& chars, bool as_json,
                std::istream& in, std::ostream& out) {
  const auto fields = parse_fields(chars.empty() ? "0" : chars);
  if (fields.size() != 1) throw UsageError("witness takes exactly one characteristic");
  const FieldSpec field = fields.front();
  const Input input = load(path, in);
  const Graph& g = input.graph;

  ScalarVector k;
  for (const auto& item : split_list(coeffs)) k.push_back(parse_scalar(field, item));
  if (k.size() != g.vertex_count()) {
    throw UsageError("--coeffs has " + std::to_string(k.size()) + " entries, the graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  }

  json j = envelope("witness");
  j["input"] = input.name;
  j["characteristic"] = field.characteristic();
  j["field"] = field.name();
  j["k"] = to_json(k);

  const auto t = vertex_combination_in_commutator(g, k, field);
  if (!t) {
    const auto b = b_vectors(g);
    std::vector<ScalarVector> bs;
    for (const auto& v : b) bs.push_back(to_field(v, field));
    const std::size_t rank = span_rank(std::span<const ScalarVector>(bs), g.vertex_count(), field);
    auto augmented = bs;
    augmented.push_back(k);
    const std::size_t rank_with_k = span_rank(std::span<const ScalarVector>(augmented), g.vertex_count(), field);
    const auto functional = exclusion_functional(std::span<const ScalarVector>(bs), k, field);
    if (as_json) {
      j["member"] = false;
      j["rank_b_vectors"] = rank;
      j["rank_with_k"] = rank_with_k;
      if (functional) j["exclusion_functional"] = to_json(*functional);
      out << j.dump(2) << "\n";
    } else {
      out << "field: " << field.name() << "\n";
      out << "k = " << format_scalars(k) << "\n";
      out << "not a commutator combination: k is outside the span of the B-vectors over " << field.name() << "\n";
      out << "rank of B-vectors: " << rank << ", rank with k adjoined: " << rank_with_k << "\n";
      if (functional) {
        out << "functional y = " << format_scalars(*functional) << " has y.B_i = 0 for every i and y.k = 1\n";
      }
    }
    return exit_inapplicable;
  }

  const CommutatorWitness w = build_commutator_witness(g, *t, field);
  const bool verified = verify_witness(g, k, *t, field);
  std::string expression;
  json commutators = json::array();
  for (const auto& [c, e] : w.edge_commutators) {
    if (!expression.empty()) expression += " + ";
    const std::string& label = g.edge(e).label;
    expression += c.to_string() + " * [" + label + ", " + label + "^*]";
    commutators.push_back({{"coefficient", to_json(c)}, {"edge", label}});
  }
  if (expression.empty()) expression = "0";

  if (as_json) {
    j["member"] = true;
    j["t"] = to_json(*t);
    j["commutators"] = commutators;
    j["commutator_expression"] = expression;
    j["commutator_sum"] = to_string(w.commutator_sum, g);
    j["n_correction"] = to_string(w.correction, g);
    j["vertex_combination"] = to_string(w.vertex_combination, g);
    j["verified"] = verified;
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << field.name() << "\n";
    out << "k = " << format_scalars(k) << "\n";
    out << "t = " << format_scalars(*t) << "\n";
    out << "W = " << expression << "\n";
    out << "W expanded = " << to_string(w.commutator_sum, g) << "\n";
    out << "sum k_i v_i = " << to_string(w.vertex_combination, g) << "\n";
    out << "N-correction sum t_i y_i = " << to_string(w.correction, g) << "\n";
    out << "W == sum k_i v_i + sum t_i y_i: " << (verified ? "VERIFIED" : "FAILED") << "\n";
  }
  return verified ? exit_ok : exit_internal_check;
}

// --- family ----------------------------------------------------------------

int cmd_family(const std::string& name, const std::vector<std::string>& params, std::ostream& out) {
  std::vector<std::uint64_t> values;
  for (const auto& p : params) values.push_back(parse_unsigned(p, "family parameter"));
  out << serialize_graph(family(name, values));
  return exit_ok;
}

// --- kp-check --------------------------------------------------------------

int cmd_kp(const std::string& path_a, const std::string& path_b, const std::string& chars, std::uint64_t bound,
           bool as_json, std::istream& in, std::ostream& out) {
  const auto fields = parse_fields(chars);
  if (path_a == "-" && path_b == "-") throw UsageError("only one input can be read from standard input");
  const Input a = load(path_a, in);
  const Input b = load(path_b, in);
  const KpReport r = kp_consistency(a.graph, b.graph, fields, bound);

  if (as_json) {
    json j = envelope("kp-check");
    j["inputs"] = {a.name, b.name};
    j["characteristics"] = chars_json(fields);
    j["max_group_order"] = bound;
    j["applicable"] = r.applicable;
    j["first"] = {{"graph", graph_summary_json(a.graph)},
                  {"purely_infinite_simple", simplicity_json(r.first_pis, a.graph)},
                  {"k0", k0_json(r.first_k0)}};
    j["second"] = {{"graph", graph_summary_json(b.graph)},
                   {"purely_infinite_simple", simplicity_json(r.second_pis, b.graph)},
                   {"k0", k0_json(r.second_k0)}};
    if (r.applicable) {
      j["pointed_isomorphism"] = {{"result", to_string(r.iso.result)}, {"reason", r.iso.reason}};
      json rows = json::array();
      for (const auto& row : r.rows) {
        rows.push_back({{"characteristic", row.field.characteristic()},
                        {"first", verdict_json(row.first, &a.graph)},
                        {"second", verdict_json(row.second, &b.graph)},
                        {"agree", row.agree}});
      }
      j["verdicts"] = rows;
    }
    j["contradiction"] = r.contradiction;
    out << j.dump(2) << "\n";
  } else {
    print_k0_line(out, "first  (" + a.name + "): K0 = ", r.first_k0);
    print_k0_line(out, "second (" + b.name + "): K0 = ", r.second_k0);
    if (!r.applicable) {
      if (!r.first_pis.verdict) print_simplicity(out, "first purely infinite simple", r.first_pis, a.graph);
      if (!r.second_pis.verdict) print_simplicity(out, "second purely infinite simple", r.second_pis, b.graph);
      out << "inapplicable: the comparison needs both algebras purely infinite simple\n";
      return exit_ok;
    }
    out << "pointed isomorphism: " << to_string(r.iso.result) << " (" << r.iso.reason << ")\n";
    for (const auto& row : r.rows) {
      out << "  " << field_tag(row.field) << ": " << to_string(row.first.status) << " / "
          << to_string(row.second.status) << (row.agree ? "  agree" : "  differ") << "\n";
    }
    out << "consistency: " << (r.contradiction ? "CONTRADICTION" : "ok") << "\n";
  }
  return r.contradiction ? exit_internal_check : exit_ok;
}

// --- selftest --------------------------------------------------------------

int cmd_selftest(bool as_json, std::ostream& out) {
  const auto results = run_selftest();
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (as_json) {
    json j = envelope("selftest");
    json rows = json::array();
    for (const auto& r : results) rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["cases"] = rows;
    j["passed"] = ok;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
    }
    out << (ok ? "all passed" : "FAILURES") << "\n";
  }
  return ok ? exit_ok : exit_internal_check;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie simplicity of commutator algebras of Leavitt path algebras"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::string default_chars = "0,2,3,5,7";
  std::string input, input_b, chars, coeffs, family_name;
  std::vector<std::string> family_params;
  bool as_json = false;
  std::uint64_t bound = 1000000;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "machine-readable output"); };

  auto* analyze = app.add_subcommand("analyze", "B-vectors, simplicity and Lie verdicts");
  analyze->add_option("input", input, "graph file, or - for standard input")->required();
  analyze->add_option("--char", chars, "comma-separated characteristics (default 0,2,3,5,7)");
  add_json(analyze);

  auto* k0 = app.add_subcommand("k0", "K0 group and class of the unit");
  k0->add_option("input", input, "graph file, or - for standard input")->required();
  k0->add_option("--char", chars, "extra primes for the divisibility table");
  add_json(k0);

  auto* witness = app.add_subcommand("witness", "express a vertex combination through commutators");
  witness->add_option("input", input, "graph file, or - for standard input")->required();
  witness->add_option("--coeffs", coeffs, "comma-separated coefficients, one per vertex")
      ->required()
      ->allow_extra_args(false);
  witness->add_option("--char", chars, "characteristic (default 0)");
  add_json(witness);

  auto* fam = app.add_subcommand("family", "print a named graph family in the graph format");
  fam->add_option("name", family_name, "rose, line, matrix_rose, prime_set, two_vertex, example4")->required();
  fam->add_option("params", family_params, "non-negative integer parameters");

  auto* kp = app.add_subcommand("kp-check", "compare pointed K0 groups and Lie verdicts of two graphs");
  kp->add_option("first", input, "graph file, or -")->required();
  kp->add_option("second", input_b, "graph file, or -")->required();
  kp->add_option("--char", chars, "comma-separated characteristics (default 0,2,3,5,7)");
  kp->add_option("--max-group-order", bound, "torsion order above which the iso search is skipped");
  add_json(kp);

  auto* selftest = app.add_subcommand("selftest", "regression checks on the worked examples");
  add_json(selftest);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_input_error;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, chars.empty() ? default_chars : chars, as_json, in, out);
    if (k0->parsed()) return cmd_k0(input, chars, as_json, in, out);
    if (witness->parsed()) return cmd_witness(input, coeffs, chars, as_json, in, out);
    if (fam->parsed()) return cmd_family(family_name, family_params, out);
    if (kp->parsed()) return cmd_kp(input, input_b, chars.empty() ? default_chars : chars, bound, as_json, in, out);
    if (selftest->parsed()) return cmd_selftest(as_json, out);
  } catch (const InputError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace lpalie
