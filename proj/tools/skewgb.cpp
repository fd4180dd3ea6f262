// Command-line front end: loads a presentation file, parses expressions in
// it, and runs the Groebner, graded-transfer and module commands. Output is
// deterministic; --json emits a structured document instead of text.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "skewgb/skewgb.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace skewgb;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitInternal = 4;

struct Session {
  AlgebraRef algebra;
  MonomialOrder order{OrderKind::deglex, 0};
  std::optional<ModuleOrder> module_order;
  bool consistency_checked = false;
};

struct CommandResult {
  std::string text;
  json payload;
  int status = kExitOk;
};

struct CommonOptions {
  std::string algebra_file;
  std::string order_name = "deglex";
  std::string module_order_name;
  bool json_output = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_module_order = false) {
  cmd->add_option("--algebra", opts.algebra_file, "presentation file (.alg)")
      ->required();
  cmd->add_option("--order", opts.order_name,
                  "monomial order: deglex or degrevlex, optional :x>y priority");
  if (with_module_order)
    cmd->add_option("--module-order", opts.module_order_name,
                    "module order: top:<base> or pot:<base> (default top:<order>)");
  cmd->add_flag("--json", opts.json_output, "emit a JSON document");
}

Session open_session(const CommonOptions& opts, std::size_t rank = 0) {
  Session s;
  s.algebra = load_presentation_file(opts.algebra_file);
  s.order = parse_monomial_order(opts.order_name, s.algebra);
  if (rank > 0) {
    const std::string name = opts.module_order_name.empty()
                                 ? "top:" + opts.order_name
                                 : opts.module_order_name;
    s.module_order = parse_module_order(name, s.algebra, rank);
  }
  return s;
}

// Groebner commands refuse to run until the overlap check has passed.
void require_consistent(Session& s) {
  if (s.algebra->consistency_verified()) {
    s.consistency_checked = true;
    return;
  }
  const auto failures = consistency_check(s.algebra);
  if (!failures.empty())
    throw inconsistent_presentation_error(
        "presentation fails the overlap check on " + std::to_string(failures.size()) +
        " cubic overlap(s); run 'check' for details");
  s.consistency_checked = true;
}

json algebra_json(const Session& s) {
  json j;
  j["field"] = s.algebra->field().kind() == FieldKind::rationals
                   ? std::string("QQ")
                   : "GF " + std::to_string(s.algebra->field().characteristic());
  j["vars"] = s.algebra->var_names();
  j["quasi_commutative"] = is_quasi_commutative(s.algebra);
  return j;
}

json base_payload(const std::string& command, const Session& s) {
  json j;
  j["command"] = command;
  j["status"] = "ok";
  j["algebra"] = algebra_json(s);
  j["order"] = to_string(s.order, s.algebra);
  return j;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts,
                                  const AlgebraRef& a) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_polynomial(t, a));
  return out;
}

std::vector<std::string> basis_strings(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& o) {
  std::vector<std::string> out;
  out.reserve(gens.size());
  for (const Polynomial& g : gens) out.push_back(to_string(g, o));
  return out;
}

std::string joined_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

std::string word_name(const Session& s, std::initializer_list<unsigned> idx) {
  std::string out;
  for (unsigned k : idx) {
    if (!out.empty()) out += '*';
    out += s.algebra->var_name(k);
  }
  return out;
}

CommandResult run_check(Session& s) {
  CommandResult r;
  const auto failures = consistency_check(s.algebra);
  r.payload = base_payload("check", s);
  r.payload["consistent"] = failures.empty();
  r.payload["failures"] = json::array();
  if (failures.empty()) {
    r.text = "consistent\n";
    return r;
  }
  r.text = "INCONSISTENT: " + std::to_string(failures.size()) + " cubic overlap failure(s)\n";
  for (const OverlapFailure& f : failures) {
    const std::string word = word_name(s, {f.k, f.j, f.i});
    const std::string kj = to_string(f.resolve_kj_first, s.order);
    const std::string ji = to_string(f.resolve_ji_first, s.order);
    r.text += "overlap " + word + ": resolving (" +
              word_name(s, {f.k, f.j}) + ") first gives " + kj + "; resolving (" +
              word_name(s, {f.j, f.i}) + ") first gives " + ji + "\n";
    json jf;
    jf["triple"] = {s.algebra->var_name(f.i), s.algebra->var_name(f.j),
                    s.algebra->var_name(f.k)};
    jf["resolve_kj_first"] = kj;
    jf["resolve_ji_first"] = ji;
    r.payload["failures"].push_back(std::move(jf));
  }
  r.status = kExitInconsistent;
  return r;
}

CommandResult run_normalize(Session& s, const std::string& expr) {
  CommandResult r;
  const Polynomial p = parse_polynomial(expr, s.algebra);
  r.text = to_string(p, s.order) + "\n";
  r.payload = base_payload("normalize", s);
  r.payload["result"] = to_string(p, s.order);
  return r;
}

CommandResult run_mul(Session& s, const std::string& e1, const std::string& e2) {
  CommandResult r;
  const Polynomial p =
      poly_mul(parse_polynomial(e1, s.algebra), parse_polynomial(e2, s.algebra));
  r.text = to_string(p, s.order) + "\n";
  r.payload = base_payload("mul", s);
  r.payload["result"] = to_string(p, s.order);
  return r;
}

CommandResult run_gb(Session& s, const std::vector<std::string>& gens) {
  require_consistent(s);
  const GroebnerBasis red =
      autoreduce(buchberger(parse_all(gens, s.algebra), s.order));
  CommandResult r;
  const auto lines = basis_strings(red.generators(), s.order);
  r.text = joined_lines(lines);
  if (lines.empty()) r.text = "(zero ideal)\n";
  r.payload = base_payload("gb", s);
  r.payload["basis"] = lines;
  r.payload["verified"] = red.verified();
  r.payload["reduced"] = red.reduced();
  return r;
}

CommandResult run_reduce(Session& s, const std::string& expr,
                         const std::vector<std::string>& by, const std::string& mode) {
  if (mode != "top" && mode != "full")
    throw invalid_argument_error("--mode must be top or full");
  const Polynomial f = parse_polynomial(expr, s.algebra);
  const std::vector<Polynomial> g = parse_all(by, s.algebra);
  for (const Polynomial& gi : g)
    if (gi.is_zero()) throw invalid_argument_error("divisors must be nonzero");
  const ReductionTrace trace =
      reduce(f, g, s.order, mode == "top" ? ReduceMode::top : ReduceMode::full);
  CommandResult r;
  r.text = "remainder: " + to_string(trace.remainder, s.order) + "\n";
  r.payload = base_payload("reduce", s);
  r.payload["mode"] = mode;
  r.payload["remainder"] = to_string(trace.remainder, s.order);
  r.payload["cofactors"] = json::array();
  for (std::size_t t = 0; t < g.size(); ++t) {
    const std::string cof = to_string(trace.cofactors[t], s.order);
    r.text += "cofactor " + by[t] + ": " + cof + "\n";
    json jc;
    jc["divisor"] = by[t];
    jc["cofactor"] = cof;
    r.payload["cofactors"].push_back(std::move(jc));
  }
  return r;
}

CommandResult run_member(Session& s, const std::string& expr,
                         const std::vector<std::string>& in) {
  require_consistent(s);
  const Polynomial f = parse_polynomial(expr, s.algebra);
  const GroebnerBasis gb = autoreduce(buchberger(parse_all(in, s.algebra), s.order));
  const auto [member, trace] = ideal_membership(f, gb);
  CommandResult r;
  r.text = member ? "true\n" : "false\n";
  if (!member) r.text += "remainder: " + to_string(trace.remainder, s.order) + "\n";
  r.payload = base_payload("member", s);
  r.payload["member"] = member;
  r.payload["basis"] = basis_strings(gb.generators(), s.order);
  r.payload["remainder"] = to_string(trace.remainder, s.order);
  r.payload["cofactors"] = json::array();
  for (std::size_t t = 0; t < gb.generators().size(); ++t) {
    json jc;
    jc["divisor"] = to_string(gb.generators()[t], s.order);
    jc["cofactor"] = to_string(trace.cofactors[t], s.order);
    r.payload["cofactors"].push_back(std::move(jc));
  }
  return r;
}

CommandResult run_symbol(Session& s, const std::string& expr) {
  require_consistent(s);
  const GradedAlgebra gr = associated_graded(s.algebra);
  const Polynomial f = parse_polynomial(expr, s.algebra);
  const HomogeneousPolynomial eta = principal_symbol(gr, f);
  CommandResult r;
  r.text = to_string(eta.poly(), induce_graded_order(s.order)) + "\n";
  r.payload = base_payload("symbol", s);
  r.payload["result"] = to_string(eta.poly(), induce_graded_order(s.order));
  r.payload["degree"] =
      eta.degree() ? json(*eta.degree()) : json(nullptr);
  return r;
}

CommandResult run_gr_algebra(Session& s) {
  require_consistent(s);
  const GradedAlgebra gr = associated_graded(s.algebra);
  CommandResult r;
  r.text = to_presentation_text(gr.presentation());
  r.payload = base_payload("gr-algebra", s);
  r.payload["presentation"] = r.text;
  r.payload["quasi_commutative"] = is_quasi_commutative(gr.presentation());
  return r;
}

CommandResult run_gr_ideal(Session& s, const std::vector<std::string>& gens) {
  require_consistent(s);
  const GradedAlgebra gr = associated_graded(s.algebra);
  const GroebnerBasis red =
      autoreduce(buchberger(parse_all(gens, s.algebra), s.order));
  const GroebnerBasis graded = transfer_to_graded(gr, red);
  const MonomialOrder go = induce_graded_order(s.order);
  CommandResult r;
  const auto lines = basis_strings(graded.generators(), go);
  r.text = joined_lines(lines);
  if (lines.empty()) r.text = "(zero ideal)\n";
  r.payload = base_payload("gr-ideal", s);
  r.payload["basis"] = basis_strings(red.generators(), s.order);
  r.payload["graded_basis"] = lines;
  r.payload["verified"] = graded.verified();
  return r;
}

CommandResult run_transfer(Session& s, const std::string& direction,
                           const std::vector<std::string>& args,
                           const std::vector<std::string>& lift_texts) {
  require_consistent(s);
  const GradedAlgebra gr = associated_graded(s.algebra);
  const MonomialOrder go = induce_graded_order(s.order);
  CommandResult r;
  r.payload = base_payload("transfer", s);
  r.payload["direction"] = direction;
  if (direction == "to-graded") {
    if (!lift_texts.empty())
      throw invalid_argument_error("--lifts applies to --direction from-graded only");
    const GroebnerBasis red =
        autoreduce(buchberger(parse_all(args, s.algebra), s.order));
    const GroebnerBasis graded = transfer_to_graded(gr, red);
    const auto basis = basis_strings(red.generators(), s.order);
    const auto graded_basis = basis_strings(graded.generators(), go);
    r.text = "verified: true\n" + joined_lines(graded_basis);
    r.payload["basis"] = basis;
    r.payload["graded_basis"] = graded_basis;
    r.payload["verified"] = graded.verified();
    return r;
  }
  if (direction != "from-graded")
    throw invalid_argument_error("--direction must be to-graded or from-graded");
  const std::vector<Polynomial> gbar_gens = parse_all(args, gr.presentation());
  if (!is_groebner(gbar_gens, go))
    throw invalid_argument_error(
        "the given graded elements are not a Groebner basis under the induced order");
  const GroebnerBasis gbar(gbar_gens, go, true);
  const GroebnerBasis lifted =
      transfer_from_graded(gr, gbar, parse_all(lift_texts, s.algebra), s.order);
  const auto basis = basis_strings(lifted.generators(), s.order);
  r.text = std::string("verified: ") + (lifted.verified() ? "true" : "false") + "\n" +
           joined_lines(basis);
  r.payload["graded_basis"] = basis_strings(gbar_gens, go);
  r.payload["basis"] = basis;
  r.payload["verified"] = lifted.verified();
  return r;
}

CommandResult run_gap_demo(Session& s, const std::vector<std::string>& gens) {
  require_consistent(s);
  const GapReport report =
      naive_transfer_gap_demo(s.algebra, parse_all(gens, s.algebra), s.order);
  const MonomialOrder go = induce_graded_order(s.order);
  CommandResult r;
  r.payload = base_payload("gap-demo", s);
  r.payload["basis"] = basis_strings(report.basis.generators(), s.order);
  r.payload["graded_basis"] = basis_strings(report.graded_basis.generators(), go);
  r.payload["naive_generators"] = basis_strings(report.naive_generators, go);
  r.payload["gap_elements"] = json::array();
  r.payload["certificates"] = json::array();
  r.text = "ideal basis:\n" +
           joined_lines(basis_strings(report.basis.generators(), s.order));
  r.text += "graded ideal basis (symbols of the basis):\n" +
            joined_lines(basis_strings(report.graded_basis.generators(), go));
  r.text += "symbols of the generators:\n" +
            joined_lines(basis_strings(report.naive_generators, go));
  if (report.gap.empty()) {
    r.text += "no gap: the generators' symbols already generate the graded ideal\n";
  } else {
    r.text += "GAP: " + std::to_string(report.gap.size()) +
              " graded basis element(s) missing from the ideal of the generators' "
              "symbols\n";
    for (const GapCertificate& c : report.gap) {
      const std::string elem = to_string(c.element, go);
      const std::string rem = to_string(c.naive_remainder, go);
      r.text += "  " + elem + " (remainder " + rem + "; in the graded ideal: " +
                (c.in_graded_ideal ? "true" : "false") + ")\n";
      r.payload["gap_elements"].push_back(elem);
      json jc;
      jc["element"] = elem;
      jc["naive_remainder"] = rem;
      jc["in_graded_ideal"] = c.in_graded_ideal;
      r.payload["certificates"].push_back(std::move(jc));
    }
  }
  return r;
}

CommandResult run_module_gb(Session& s, const std::vector<std::string>& gens) {
  require_consistent(s);
  std::vector<VectorPoly> vecs;
  vecs.reserve(gens.size());
  for (const std::string& t : gens) vecs.push_back(parse_vector_poly(t, s.algebra));
  if (vecs.empty()) throw invalid_argument_error("module-gb needs at least one vector");
  const std::size_t rank = vecs.front().rank();
  for (const VectorPoly& v : vecs)
    if (v.rank() != rank)
      throw invalid_argument_error("all vectors must share one rank");
  const ModuleOrder mo = *s.module_order;
  const ModuleGroebnerBasis red = module_autoreduce(module_buchberger(vecs, mo));
  CommandResult r;
  std::vector<std::string> lines;
  for (const VectorPoly& v : red.generators()) lines.push_back(to_string(v, mo));
  r.text = joined_lines(lines);
  if (lines.empty()) r.text = "(zero module)\n";
  r.payload = base_payload("module-gb", s);
  r.payload["module_order"] = to_string(mo, s.algebra);
  r.payload["basis"] = lines;
  r.payload["verified"] = red.verified();
  r.payload["reduced"] = red.reduced();
  return r;
}

void emit(const CommandResult& r, bool json_output) {
  if (json_output)
    std::cout << r.payload.dump(2) << "\n";
  else
    std::cout << r.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Groebner bases for bijective skew PBW extensions over a field"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* check = app.add_subcommand("check", "run the cubic overlap consistency check");
  add_common(check, opts);

  std::string normalize_expr;
  auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
  normalize->add_option("expr", normalize_expr, "expression")->required();
  add_common(normalize, opts);

  std::vector<std::string> mul_args;
  auto* mul = app.add_subcommand("mul", "product of two expressions");
  mul->add_option("exprs", mul_args, "two expressions")->expected(2);
  add_common(mul, opts);

  std::vector<std::string> gb_args;
  auto* gb = app.add_subcommand("gb", "reduced left Groebner basis of an ideal");
  gb->add_option("generators", gb_args, "ideal generators")->required();
  add_common(gb, opts);

  std::string reduce_expr, reduce_mode = "full";
  std::vector<std::string> reduce_by;
  auto* red = app.add_subcommand("reduce", "left division with a cofactor trace");
  red->add_option("expr", reduce_expr, "element to reduce")->required();
  red->add_option("--by", reduce_by, "divisor list")->required();
  red->add_option("--mode", reduce_mode, "top or full (default full)");
  add_common(red, opts);

  std::string member_expr;
  std::vector<std::string> member_in;
  auto* member = app.add_subcommand("member", "left ideal membership with certificate");
  member->add_option("expr", member_expr, "element to test")->required();
  member->add_option("--in", member_in, "ideal generators")->required();
  add_common(member, opts);

  std::string symbol_expr;
  auto* symbol = app.add_subcommand("symbol", "principal symbol in the graded algebra");
  symbol->add_option("expr", symbol_expr, "expression")->required();
  add_common(symbol, opts);

  auto* gr_algebra = app.add_subcommand("gr-algebra", "associated graded presentation");
  add_common(gr_algebra, opts);

  std::vector<std::string> gr_ideal_args;
  auto* gr_ideal = app.add_subcommand("gr-ideal", "basis of the graded ideal");
  gr_ideal->add_option("generators", gr_ideal_args, "ideal generators")->required();
  add_common(gr_ideal, opts);

  std::string transfer_direction;
  std::vector<std::string> transfer_args, transfer_lifts;
  auto* transfer = app.add_subcommand("transfer", "move a basis between the algebra and "
                                                  "its graded algebra");
  transfer->add_option("--direction", transfer_direction, "to-graded or from-graded")
      ->required();
  transfer->add_option("elements", transfer_args, "source-side elements")->required();
  transfer->add_option("--lifts", transfer_lifts,
                       "lifts matching the graded basis (from-graded)");
  add_common(transfer, opts);

  std::vector<std::string> gap_args;
  auto* gap = app.add_subcommand("gap-demo", "show that symbols of generators need not "
                                             "generate the graded ideal");
  gap->add_option("generators", gap_args, "ideal generators")->required();
  add_common(gap, opts);

  // Vector literals contain commas and brackets, which CLI11 would otherwise
  // rewrite; collect them verbatim from the unparsed remainder instead.
  auto* module_gb = app.add_subcommand("module-gb", "reduced module Groebner basis");
  module_gb->allow_extras();
  module_gb->footer("vectors are positional literals: \"[f1, ..., fm]\"");
  add_common(module_gb, opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CommandResult result;
    if (*check) {
      Session s = open_session(opts);
      result = run_check(s);
    } else if (*normalize) {
      Session s = open_session(opts);
      result = run_normalize(s, normalize_expr);
    } else if (*mul) {
      Session s = open_session(opts);
      result = run_mul(s, mul_args[0], mul_args[1]);
    } else if (*gb) {
      Session s = open_session(opts);
      result = run_gb(s, gb_args);
    } else if (*red) {
      Session s = open_session(opts);
      result = run_reduce(s, reduce_expr, reduce_by, reduce_mode);
    } else if (*member) {
      Session s = open_session(opts);
      result = run_member(s, member_expr, member_in);
    } else if (*symbol) {
      Session s = open_session(opts);
      result = run_symbol(s, symbol_expr);
    } else if (*gr_algebra) {
      Session s = open_session(opts);
      result = run_gr_algebra(s);
    } else if (*gr_ideal) {
      Session s = open_session(opts);
      result = run_gr_ideal(s, gr_ideal_args);
    } else if (*transfer) {
      Session s = open_session(opts);
      result = run_transfer(s, transfer_direction, transfer_args, transfer_lifts);
    } else if (*gap) {
      Session s = open_session(opts);
      result = run_gap_demo(s, gap_args);
    } else if (*module_gb) {
      const std::vector<std::string> module_args = module_gb->remaining();
      if (module_args.empty())
        throw invalid_argument_error("module-gb needs at least one vector literal");
      std::size_t rank = 1;
      {
        // Peek the rank from the first vector literal to build the order.
        Session probe;
        probe.algebra = load_presentation_file(opts.algebra_file);
        rank = parse_vector_poly(module_args.front(), probe.algebra).rank();
      }
      Session s = open_session(opts, rank);
      result = run_module_gb(s, module_args);
    }
    emit(result, opts.json_output);
    return result.status;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const inconsistent_presentation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
