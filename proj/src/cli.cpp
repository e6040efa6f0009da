#include "pghopf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pghopf/families.hpp"
#include "pghopf/grammar.hpp"
#include "pghopf/json.hpp"
#include "pghopf/orders.hpp"

namespace pghopf::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "@path" reads the argument from a file.
std::string resolve(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatK matrix_arg(const std::string& name, const std::string& arg, const Field& field) {
  try {
    return parse_matrix(resolve(arg), field);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

IndexRange range_arg(const std::string& name, const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("--" + name + ": expected <lo..hi>, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  const IndexRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("--" + name + ": empty range '" + text + "'");
  return r;
}

std::string witness_text(const IntegralityWitness& w) {
  return "entry (" + std::to_string(w.row + 1) + "," + std::to_string(w.col + 1) + ") has valuation " +
         to_string(w.valuation);
}

std::string ranks_text(const std::vector<std::size_t>& ranks) {
  std::string s = "[";
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? ", " : "") + std::to_string(ranks[i]);
  return s + "]";
}

std::string fq_matrix_text(const std::vector<std::vector<FqElem>>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + to_string(m[i][j]);
  }
  return s + "]";
}

void print_fibre(std::ostream& out, const FibreReport& f) {
  out << "Abar = " << fq_matrix_text(f.reduced) << "\n";
  out << "F-power ranks: " << ranks_text(f.fpower_ranks) << "\n";
  out << "etale rank: " << f.etale_rank << "\n";
  out << "kind: " << f.kind() << "\n";
}

std::string record_line(const OrderRecord& r) {
  std::string line = "family=" + to_string(r.family) + " p=" + std::to_string(r.theta.field().characteristic()) +
                     " i=" + std::to_string(r.i) + " j=" + std::to_string(r.j) + " theta=" + format(r.theta);
  if (const auto mono = monogenic_flag(r)) line += std::string(" monogenic=") + (*mono ? "yes" : "no");
  const OrderOutcome o = oracle_outcome(r);
  if (const auto* ok = std::get_if<OrderResult>(&o)) {
    const FibreReport f = special_fibre(ok->A);
    line += " fibre=" + f.kind() + ranks_text(f.fpower_ranks);
  }
  return line;
}

struct Options {
  std::string field;
  std::string B, theta, theta2, A;
  std::string family, i_range, j_range, b;
  std::int64_t i = 0;
  std::optional<int> depth;
  bool json = false;
  bool printed_bound = false;
};

int cmd_check(const Options& o, const Field& f, std::ostream& out) {
  const MatK B = matrix_arg("B", o.B, f);
  const MatK theta = matrix_arg("theta", o.theta, f);
  const OrderOutcome outcome = order_from_theta(B, theta);
  if (o.json) {
    out << to_json(outcome).dump(2) << "\n";
    return is_order(outcome) ? kYes : kNo;
  }
  if (const auto* bad = std::get_if<NotIntegral>(&outcome)) {
    out << "A = " << format(bad->A) << "\n";
    out << "integral: no (" << witness_text(bad->witness) << ")\n";
    return kNo;
  }
  const auto& ok = std::get<OrderResult>(outcome);
  out << "A = " << format(ok.A) << "\n";
  out << "integral: yes\n";
  out << "presentation: " << ok.presentation.to_text() << "\n";
  out << "embedding:\n";
  const auto images = embedding_generators(ok.embedding);
  for (std::size_t i = 0; i < images.size(); ++i) {
    out << "  " << ok.embedding.source_gens[i] << " = " << images[i] << "\n";
  }
  const FibreReport fib = special_fibre(ok.A);
  out << "fibre: " << fib.kind() << ", F-power ranks " << ranks_text(fib.fpower_ranks) << "\n";
  return kYes;
}

int cmd_verify(const Options& o, const Field& f, std::ostream& out) {
  const bool ok = verify_twisted_equation(matrix_arg("theta", o.theta, f), matrix_arg("A", o.A, f),
                                          matrix_arg("B", o.B, f));
  if (o.json) {
    out << json{{"holds", ok}}.dump(2) << "\n";
  } else {
    out << (ok ? "true" : "false") << "\n";
  }
  return ok ? kYes : kNo;
}

int cmd_normalize(const Options& o, const Field& f, std::ostream& out) {
  const MatK theta = matrix_arg("theta", o.theta, f);
  const DdlResult r = ddl_normalize(theta);
  const bool certified = is_unit(r.U) && theta * r.U == r.theta && same_order(theta, r.theta);
  if (o.json) {
    out << json{{"theta", to_json(r.theta)}, {"U", to_json(r.U)}, {"ddl", is_ddl(r.theta)}, {"same_order", certified}}
               .dump(2)
        << "\n";
  } else {
    out << "theta = " << format(r.theta) << "\n";
    out << "U = " << format(r.U) << "\n";
    out << "ddl: " << (is_ddl(r.theta) ? "true" : "false") << "\n";
    out << "same order: " << (certified ? "true" : "false") << "\n";
  }
  return certified ? kYes : kNo;
}

int cmd_same_order(const Options& o, const Field& f, std::ostream& out) {
  const bool same = same_order(matrix_arg("theta", o.theta, f), matrix_arg("theta2", o.theta2, f));
  if (o.json) {
    out << json{{"same_order", same}}.dump(2) << "\n";
  } else {
    out << (same ? "true" : "false") << "\n";
  }
  return same ? kYes : kNo;
}

int cmd_fibre(const Options& o, const Field& f, std::ostream& out) {
  const FibreReport r = special_fibre(matrix_arg("A", o.A, f));
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    print_fibre(out, r);
  }
  return kYes;
}

int cmd_present(const Options& o, const Field& f, std::ostream& out) {
  const HopfPresentation h = presentation_from_matrix(matrix_arg("A", o.A, f));
  if (o.json) {
    out << to_json(h).dump(2) << "\n";
  } else {
    out << h.to_text() << "\n";
  }
  return kYes;
}

Family family_arg(const Options& o) {
  try {
    const Family fam = parse_family(o.family);
    if (!is_rank_p2(fam)) throw UsageError("--family " + o.family + " is rank p; use the rank1 command");
    return fam;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--family: ") + e.what());
  }
}

int cmd_enumerate(const Options& o, const Field& f, std::ostream& out) {
  const Family fam = family_arg(o);
  const auto records = enumerate_orders(fam, f, range_arg("i", o.i_range), range_arg("j", o.j_range),
                                        o.depth.value_or(default_depth(f)));
  if (o.json) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : records) out << record_line(r) << "\n";
    out << "# " << records.size() << " orders\n";
  }
  return records.empty() ? kNo : kYes;
}

int cmd_oracle_check(const Options& o, const Field& f, std::ostream& out) {
  const Family fam = family_arg(o);
  const auto variant = o.printed_bound ? PredicateVariant::printed_simplification : PredicateVariant::implemented;
  const AgreementReport r = oracle_check_family(fam, f, range_arg("i", o.i_range), range_arg("j", o.j_range),
                                                o.depth.value_or(default_depth(f)), variant);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "family=" << to_string(r.family) << " p=" << r.p << " predicate="
        << (variant == PredicateVariant::implemented ? "implemented" : "printed_simplification") << "\n";
    out << "grid points: " << r.total << ", agreements: " << r.agreements
        << ", disagreements: " << r.disagreements.size() << "\n";
    for (const auto& d : r.disagreements) {
      out << "  i=" << d.record.i << " j=" << d.record.j << " theta=" << format(d.record.theta)
          << " v(theta)=" << to_string(d.record.theta.valuation()) << " predicate=" << (d.predicate ? "true" : "false")
          << " oracle=" << (d.oracle ? "true" : "false");
      if (d.witness) out << " (" << witness_text(*d.witness) << ")";
      out << "\n";
    }
  }
  return r.all_agree() ? kYes : kNo;
}

int cmd_rank1(const Options& o, const Field& f, std::ostream& out) {
  RatFunc b(f);
  try {
    b = parse_element(resolve(o.b), f);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--b: ") + e.what());
  }
  const Rank1Result r = rank1_orders(b, o.i);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    if (r.shift != 0) out << "normalized b = " << format(r.normalized_b) << " (t -> T^" << r.shift << "*t)\n";
    out << r.description << "\n";
  }
  return r.is_order ? kYes : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf orders in primitively generated Hopf algebras over F_q((T))", "pghopf"};
  app.require_subcommand(1);
  Options o;

  auto field_opt = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "field spec, e.g. p=3 or p=2;k=2;mod=a^2+a+1")->required();
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto mat = [&](CLI::App* sub, const std::string& name, std::string& dst) {
    sub->add_option("--" + name, dst, "matrix [..;..] or @file")->required();
  };

  auto* check = app.add_subcommand("check", "build the order A = Theta^-1 B Theta^(p)");
  field_opt(check);
  mat(check, "B", o.B);
  mat(check, "theta", o.theta);

  auto* verify = app.add_subcommand("verify", "test Theta A = B Theta^(p)");
  field_opt(verify);
  mat(verify, "theta", o.theta);
  mat(verify, "A", o.A);
  mat(verify, "B", o.B);

  auto* normalize = app.add_subcommand("normalize", "DDL normal form of Theta");
  field_opt(normalize);
  mat(normalize, "theta", o.theta);

  auto* same = app.add_subcommand("same-order", "do Theta and Theta2 give the same order");
  field_opt(same);
  mat(same, "theta", o.theta);
  mat(same, "theta2", o.theta2);

  auto* fibre = app.add_subcommand("fibre", "special fibre of the order with matrix A");
  field_opt(fibre);
  mat(fibre, "A", o.A);

  auto* present = app.add_subcommand("present", "presentation of the order with matrix A");
  field_opt(present);
  mat(present, "A", o.A);

  std::vector<CLI::App*> grid_cmds;
  for (const char* name : {"enumerate", "oracle-check"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "enumerate" ? "list orders H_{i,j,theta} in a grid"
                                                                            : "compare closed forms with the oracle");
    field_opt(sub);
    sub->add_option("--family", o.family, "alpha_p_n, alpha_p2, zp_x_ap, zp_squared, mono_p2")->required();
    sub->add_option("--i", o.i_range, "i range lo..hi")->required();
    sub->add_option("--j", o.j_range, "j range lo..hi")->required();
    sub->add_option("--depth", o.depth, "theta depth D (default 2(p+2))");
    grid_cmds.push_back(sub);
  }
  grid_cmds[1]->add_flag("--printed-bound", o.printed_bound,
                         "alpha_p2: use i-(p-1)j <= v(theta) <= j instead of the per-entry bounds");

  auto* rank1 = app.add_subcommand("rank1", "rank p orders R[T^i t] in K[t]/(t^p - b t)");
  field_opt(rank1);
  rank1->add_option("--b", o.b, "element b")->required();
  rank1->add_option("--i", o.i, "exponent i")->required()->allow_extra_args(false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Field field = Field::prime(2);
    try {
      field = parse_field_spec(o.field);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
    if (check->parsed()) return cmd_check(o, field, out);
    if (verify->parsed()) return cmd_verify(o, field, out);
    if (normalize->parsed()) return cmd_normalize(o, field, out);
    if (same->parsed()) return cmd_same_order(o, field, out);
    if (fibre->parsed()) return cmd_fibre(o, field, out);
    if (present->parsed()) return cmd_present(o, field, out);
    if (grid_cmds[0]->parsed()) return cmd_enumerate(o, field, out);
    if (grid_cmds[1]->parsed()) return cmd_oracle_check(o, field, out);
    if (rank1->parsed()) return cmd_rank1(o, field, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // singular or non-integral inputs, dimension and field mismatches
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace pghopf::cli
