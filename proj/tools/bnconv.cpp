// bnconv: command-line front end for the convolution-ring calculator.
//
//   bnconv --genus G [--hyperelliptic] [--format table|json] [--out PATH]
//          {eval EXPR | decompose EXPR | poincare sym D | ih D | verify}
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include "bnconv/bn_ring.hpp"
#include "bnconv/curve.hpp"
#include "bnconv/expr.hpp"
#include "bnconv/json_io.hpp"
#include "bnconv/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using bnconv::BNClass;
using bnconv::CurveContext;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kGenusCap = 12;

struct Options {
  int genus = 0;
  bool hyperelliptic = false;
  bool allow_large = false;
  std::string format = "table";
  std::string out_path;
  std::string expression;
  std::string space;
  int degree = 0;
};

json header(const std::string& command, const CurveContext& ctx) {
  return {{"schema", bnconv::kSchemaVersion},
          {"command", command},
          {"genus", ctx.genus()},
          {"hyperelliptic", ctx.hyperelliptic()},
          {"group", ctx.group().to_string()}};
}

std::string weight_string(const bnconv::IrrepLabel& l) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < l.weight().size(); ++i) os << (i ? "," : "") << l.weight()[i];
  os << ']';
  return os.str();
}

void print_class_table(std::ostream& os, const BNClass& c) {
  os << std::left << std::setw(6) << "mult" << std::setw(10) << "dim" << std::setw(20) << "label" << std::setw(34)
     << "weight"
     << "name\n";
  for (const auto& t : c.terms()) {
    os << std::left << std::setw(6) << t.mult << std::setw(10) << t.dim.get_str() << std::setw(20)
       << t.label.to_string() << std::setw(34) << weight_string(t.label) << t.name.value_or("-") << '\n';
  }
}

int cmd_eval(const Options& opt, const CurveContext& ctx, bool detailed, std::ostream& os) {
  const bnconv::ExprPtr e = bnconv::parse(opt.expression);
  const BNClass c = bnconv::eval(*e, ctx);
  const std::string expr_text = bnconv::print(*e);
  if (opt.format == "json") {
    json j = header(detailed ? "decompose" : "eval", ctx);
    j["expression"] = expr_text;
    j["class"] = bnconv::to_json(c);
    j["dim"] = bnconv::big_to_json(c.rep().dimension());
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  if (!detailed) {
    if (c.rep().is_zero()) os << "0\n";
    for (const auto& t : c.terms()) {
      os << (t.mult == 1 ? "" : std::to_string(t.mult) + "*") << t.label.to_string() << "  dim " << t.dim.get_str();
      if (t.name) os << "  " << *t.name;
      os << '\n';
    }
    return kExitOk;
  }
  os << ctx.group().to_string() << ", genus " << ctx.genus() << (ctx.hyperelliptic() ? ", hyperelliptic" : "")
     << "\nexpression: " << expr_text << "\n\n";
  print_class_table(os, c);
  os << "\nsummands: " << c.rep().size() << "\ntotal dim: " << c.rep().dimension().get_str() << '\n';
  return kExitOk;
}

int cmd_poincare(const Options& opt, const CurveContext& ctx, std::ostream& os) {
  if (opt.space != "sym") throw CLI::ValidationError("poincare", "only 'sym' is supported");
  const bnconv::GradedDim b = bnconv::sym_product_cohomology(ctx, opt.degree);
  const bnconv::LaurentPoly s = bnconv::signed_poincare(bnconv::Space::sym_product(opt.degree), ctx);
  if (opt.format == "json") {
    json j = header("poincare", ctx);
    j["space"] = "sym_product";
    j["d"] = opt.degree;
    j["betti"] = bnconv::to_json(b);
    j["poincare"] = bnconv::to_json(b.to_laurent());
    j["signed_poincare"] = bnconv::to_json(s);
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  os << "H^*(C^(" << opt.degree << ")), genus " << ctx.genus() << '\n';
  for (const auto& [k, d] : b.dims()) os << "  b_" << k << " = " << d.get_str() << '\n';
  os << "signed: " << s.to_string() << '\n';
  return kExitOk;
}

int cmd_ih(const Options& opt, const CurveContext& ctx, std::ostream& os) {
  const bnconv::GradedDim ih = bnconv::ih_brill_noether(ctx, opt.degree);
  if (opt.format == "json") {
    json j = header("ih", ctx);
    j["d"] = opt.degree;
    j["degrees"] = "absolute";
    j["relative_shift"] = opt.degree;
    j["betti"] = bnconv::to_json(ih);
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  os << "IH^*(W_" << opt.degree << "), genus " << ctx.genus() << " (absolute degrees; IH^{d+j} is row d+j)\n";
  for (const auto& [k, d] : ih.dims()) os << "  " << k << ": " << d.get_str() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& opt, const CurveContext& ctx, std::ostream& os) {
  const bnconv::VerifyReport r = bnconv::verify_all(ctx);
  if (opt.format == "json") {
    json j = header("verify", ctx);
    j["passed"] = r.passed();
    json steps = json::array();
    for (const auto& s : r.steps)
      steps.push_back({{"id", s.id}, {"title", s.title}, {"status", to_string(s.status)}, {"details", s.details}});
    j["steps"] = steps;
    os << j.dump(2) << '\n';
  } else {
    for (const auto& s : r.steps) {
      os << std::left << std::setw(10) << ("[" + to_string(s.status) + "]") << std::setw(26) << s.id << s.title;
      if (s.status == bnconv::StepStatus::Skipped) os << "\n          " << s.details.value("reason", "");
      if (s.status == bnconv::StepStatus::Fail) os << "\n          " << s.details.dump();
      os << '\n';
    }
    os << (r.passed() ? "all checks passed\n" : "verification FAILED\n");
  }
  return r.passed() ? kExitOk : kExitVerifyFailed;
}

void report_error(const Options& opt, const std::string& message, std::ostream& os) {
  std::cerr << "bnconv: " << message << '\n';
  if (opt.format == "json") os << json{{"schema", bnconv::kSchemaVersion}, {"error", message}}.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Convolution-ring calculator for theta divisors of Jacobians"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--genus,-g", opt.genus, "genus of the curve")->required();
  app.add_flag("--hyperelliptic", opt.hyperelliptic, "treat the curve as hyperelliptic");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--allow-large", opt.allow_large, "permit genus above the default cap");
  app.add_option("--out", opt.out_path, "write output to this file instead of stdout");

  auto* eval = app.add_subcommand("eval", "evaluate an expression and print its summands");
  eval->add_option("expr", opt.expression, "expression, e.g. \"theta * theta\"")->required();
  auto* decompose = app.add_subcommand("decompose", "evaluate an expression and print a full decomposition table");
  decompose->add_option("expr", opt.expression, "expression")->required();
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a symmetric product");
  poincare->add_option("space", opt.space, "space kind (sym)")->required();
  poincare->add_option("d", opt.degree, "symmetric power")->required();
  auto* ih = app.add_subcommand("ih", "intersection cohomology of W_d");
  ih->add_option("d", opt.degree, "Brill-Noether index")->required();
  auto* verify = app.add_subcommand("verify", "run the full chain of checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int code = kExitOk;
  try {
    if (opt.genus > kGenusCap && !opt.allow_large)
      throw std::invalid_argument("genus " + std::to_string(opt.genus) + " exceeds the cap of " +
                                  std::to_string(kGenusCap) + "; pass --allow-large to override");
    const CurveContext ctx(opt.genus, opt.hyperelliptic);
    if (eval->parsed()) code = cmd_eval(opt, ctx, false, out);
    else if (decompose->parsed()) code = cmd_eval(opt, ctx, true, out);
    else if (poincare->parsed()) code = cmd_poincare(opt, ctx, out);
    else if (ih->parsed()) code = cmd_ih(opt, ctx, out);
    else if (verify->parsed()) code = cmd_verify(opt, ctx, out);
  } catch (const bnconv::ParseError& e) {
    report_error(opt, e.what(), out);
    code = kExitUsage;
  } catch (const std::exception& e) {
    report_error(opt, e.what(), out);
    code = kExitUsage;
  }

  if (opt.out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(opt.out_path);
    if (!f) {
      std::cerr << "bnconv: cannot open " << opt.out_path << '\n';
      return kExitUsage;
    }
    f << out.str();
  }
  return code;
}
