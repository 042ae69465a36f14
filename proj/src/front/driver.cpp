// driver.cpp
// Copyright (c) 2026, the tt authors
// Licensed under the Apache License Version 2.0.

#include "tt/front/driver.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tt/front/parse.hpp"
#include "tt/front/pretty.hpp"
#include "tt/front/relfile.hpp"
#include "tt/mltt/kernel.hpp"
#include "tt/set_model/model.hpp"
#include "tt/stlc/nbe.hpp"
#include "tt/stlc/oracle.hpp"
#include "tt/stlc/syntax.hpp"
#include "tt/sysf/systemf.hpp"

namespace tt::front {

namespace {

using nlohmann::json;

struct Options {
  std::string calculus = "stlc";
  std::size_t fuel = stlc::kDefaultFuel;
  std::size_t max_size = 3;
  std::string format = "text";
  std::string type;
  std::string rel_file;
  bool type_given = false;
  bool calculus_given = false;

  bool json_output() const { return format == "json"; }
};

struct UsageError : Error {
  explicit UsageError(const std::string& message)
      : Error(Category::Parse, "Usage", message) {}
};

int exit_code(Error::Category cat) {
  switch (cat) {
    case Error::Category::Parse:
      return 2;
    case Error::Category::Type:
      return 3;
    case Error::Category::Fuel:
      return 4;
    case Error::Category::Internal:
      return 5;
  }
  return 5;
}

json span_json(const Span& s) {
  return json{{"start", s.start}, {"end", s.end}, {"line", s.line}, {"col", s.col}};
}

void emit_error(const Options& opts, const std::string& command, const Error& e,
                std::ostream& out, std::ostream& err) {
  if (opts.json_output()) {
    json j;
    j["status"] = "error";
    j["command"] = command;
    json ej;
    ej["kind"] = e.kind();
    ej["message"] = e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e))
      ej["span"] = span_json(pe->span());
    else
      ej["span"] = nullptr;
    j["error"] = ej;
    out << j.dump() << "\n";
  } else {
    err << "error[" << e.kind() << "]: " << e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e))
      err << " (line " << pe->span().line << ", column " << pe->span().col << ")";
    err << "\n";
  }
}

void emit_ok(const Options& opts, const std::string& command,
             const std::vector<std::pair<std::string, json>>& fields, std::ostream& out) {
  if (opts.json_output()) {
    json j;
    j["status"] = "ok";
    j["command"] = command;
    for (const auto& [key, value] : fields) j[key] = value;
    out << j.dump() << "\n";
  } else {
    // The first field carries the human-readable payload.
    const json& payload = fields.front().second;
    if (payload.is_string())
      out << payload.get<std::string>() << "\n";
    else
      out << payload.dump() << "\n";
  }
}

std::string read_term_arg(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_calculus(const Options& opts, std::initializer_list<const char*> allowed,
                      const std::string& command) {
  for (const char* a : allowed)
    if (opts.calculus == a) return;
  throw UsageError("subcommand '" + command + "' does not support --calculus " +
                   opts.calculus);
}

// ---------------------------------------------------------------------------
// Subcommand implementations; each returns the exit code.
// ---------------------------------------------------------------------------

bool is_mltt_type_expr(const mltt::TermPtr& t) {
  using namespace mltt;
  return as<Ans>(t) || as<U>(t) || as<Pi>(t) || as<Sigma>(t) || as<El>(t);
}

int run_check(const Options& opts, const std::string& term_src, std::ostream& out) {
  if (opts.calculus == "stlc") {
    stlc::TermPtr t = parse_stlc_term(term_src);
    stlc::TypePtr ty = stlc::infer({}, t);
    if (opts.type_given && !stlc::type_equal(ty, parse_stlc_type(opts.type)))
      throw type_error("ArgumentMismatch", "term has type " + pretty(ty) + ", not " + opts.type);
    emit_ok(opts, "check", {{"result", pretty(ty)}}, out);
    return 0;
  }
  if (opts.calculus == "mltt") {
    mltt::TermPtr t = parse_mltt_term(term_src);
    mltt::Ctx ctx;
    mltt::ValuePtr tyv;
    if (opts.type_given) {
      tyv = mltt::check_type(ctx, parse_mltt_term(opts.type));
      mltt::check(ctx, t, tyv);
    } else if (is_mltt_type_expr(t)) {
      tyv = mltt::check_type(ctx, t);
    } else {
      tyv = mltt::infer(ctx, t);
    }
    emit_ok(opts, "check",
            {{"result", pretty(mltt::embed_nf(mltt::d_reify_ty(tyv, 0), 0))}}, out);
    return 0;
  }
  sysf::TermPtr t = parse_sysf_term(term_src);
  sysf::TypePtr ty = sysf::f_infer(0, {}, t);
  if (opts.type_given && !sysf::type_equal(ty, parse_sysf_type(opts.type)))
    throw type_error("ArgumentMismatch", "term has type " + pretty(ty) + ", not " + opts.type);
  emit_ok(opts, "check", {{"result", pretty(ty)}}, out);
  return 0;
}

int run_normalize(const Options& opts, const std::string& term_src, std::ostream& out) {
  if (opts.calculus == "stlc") {
    stlc::TermPtr t = parse_stlc_term(term_src);
    stlc::NfPtr nf = stlc::normalize({}, t);
    emit_ok(opts, "normalize", {{"normal_form", pretty(stlc::embed_nf(nf, 0))}}, out);
    return 0;
  }
  if (opts.calculus == "mltt") {
    mltt::TermPtr t = parse_mltt_term(term_src);
    mltt::Ctx ctx;
    mltt::NfPtr nf;
    if (opts.type_given) {
      nf = mltt::d_normalize(ctx, t, parse_mltt_term(opts.type));
    } else if (is_mltt_type_expr(t)) {
      nf = mltt::d_reify_ty(mltt::check_type(ctx, t), 0);
    } else if (const auto* asc = mltt::as<mltt::Ascribe>(t)) {
      nf = mltt::d_normalize(ctx, asc->term, asc->type);
    } else {
      // Inferable term (eliminator- or ascription-headed).
      mltt::ValuePtr tyv = mltt::infer(ctx, t);
      nf = mltt::d_reify(tyv, mltt::d_eval(ctx.env(), t, 0), 0);
    }
    emit_ok(opts, "normalize", {{"normal_form", pretty(mltt::embed_nf(nf, 0))}}, out);
    return 0;
  }
  sysf::TermPtr t = parse_sysf_term(term_src);
  sysf::f_infer(0, {}, t);
  emit_ok(opts, "normalize", {{"normal_form", pretty(sysf::f_normalize(t, opts.fuel))}}, out);
  return 0;
}

int run_canonicity(const Options& opts, const std::string& term_src, std::ostream& out) {
  std::string verdict;
  if (opts.calculus == "stlc") {
    stlc::TermPtr t = parse_stlc_term(term_src);
    verdict = stlc::canonicity(t) == stlc::Canonicity::IsYes ? "yes" : "no";
  } else {
    mltt::TermPtr t = parse_mltt_term(term_src);
    verdict = mltt::d_canonicity(t) == mltt::Canonicity::IsYes ? "yes" : "no";
  }
  emit_ok(opts, "canonicity", {{"verdict", verdict}}, out);
  return 0;
}

int run_consistency(const Options& opts, std::ostream& out) {
  bool model_ok = set_model::consistency_check();
  bool oracle_ok = !stlc::oracle_equal({}, stlc::yes(), stlc::no(), stlc::Fuel{opts.fuel});
  bool nbe_ok = !stlc::nf_equal(stlc::normalize({}, stlc::yes()), stlc::normalize({}, stlc::no()));
  bool ok = model_ok && oracle_ok && nbe_ok;
  if (opts.json_output()) {
    emit_ok(opts, "consistency", {{"result", ok}}, out);
  } else {
    out << (ok ? "consistent" : "inconsistent") << "\n";
  }
  return ok ? 0 : 1;
}

int run_oracle_eq(const Options& opts, const std::string& lhs_src, const std::string& rhs_src,
                  std::ostream& out) {
  require_calculus(opts, {"stlc"}, "oracle-eq");
  stlc::TermPtr lhs = parse_stlc_term(lhs_src);
  stlc::TermPtr rhs = parse_stlc_term(rhs_src);
  bool equal = stlc::oracle_equal({}, lhs, rhs, stlc::Fuel{opts.fuel});
  if (opts.json_output()) {
    emit_ok(opts, "oracle-eq", {{"result", equal}}, out);
  } else {
    out << (equal ? "true" : "false") << "\n";
  }
  return equal ? 0 : 1;
}

int run_enumerate(const Options& opts, std::ostream& out) {
  if (!opts.type_given) throw UsageError("enumerate needs --type");
  std::vector<std::string> terms;
  if (opts.calculus == "stlc") {
    for (const stlc::TermPtr& t :
         stlc::enumerate_terms({}, parse_stlc_type(opts.type), opts.max_size))
      terms.push_back(pretty(t));
  } else if (opts.calculus == "mltt") {
    for (const mltt::TermPtr& t :
         mltt::enumerate_checked(parse_mltt_term(opts.type), opts.max_size))
      terms.push_back(pretty(t));
  } else {
    for (const sysf::TermPtr& t :
         sysf::enumerate_normal_inhabitants(parse_sysf_type(opts.type), opts.max_size))
      terms.push_back(pretty(t));
  }
  if (opts.json_output()) {
    emit_ok(opts, "enumerate",
            {{"result", json{{"count", terms.size()}, {"terms", terms}}}}, out);
  } else {
    for (const std::string& s : terms) out << s << "\n";
  }
  return 0;
}

int run_free_theorem(const Options& opts, const std::string& term_src, bool term_given,
                     std::ostream& out, std::ostream& err) {
  if (!term_given) {
    if (!opts.type_given) throw UsageError("free-theorem needs --type or a term");
    sysf::TypePtr ty = parse_sysf_type(opts.type);
    emit_ok(opts, "free-theorem", {{"result", sysf::free_theorem_print(ty)}}, out);
    return 0;
  }
  sysf::TermPtr t = parse_sysf_term(term_src);
  sysf::TypePtr ty =
      opts.type_given ? parse_sysf_type(opts.type) : sysf::f_infer(0, {}, t);
  if (opts.rel_file.empty())
    throw UsageError("free-theorem with a term needs --rel FILE");
  std::ifstream in(opts.rel_file);
  if (!in) throw UsageError("cannot open " + opts.rel_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<sysf::Instantiation> insts = parse_rel_file(buf.str());
  sysf::Verdict verdict = sysf::free_theorem_check(t, ty, insts, opts.fuel);
  // The checker verifies the supplied finite instances; function-type
  // membership quantifies over the listed candidate pairs only.
  static const char* kNote =
      "checked the supplied instances; function domains quantify over listed pairs only";
  if (opts.json_output()) {
    json j;
    j["status"] = "ok";
    j["command"] = "free-theorem";
    j["verdict"] = verdict.pass ? "pass" : "fail";
    j["note"] = kNote;
    if (!verdict.pass) {
      j["witness"] = json{{"left", pretty(verdict.witness->left)},
                          {"right", pretty(verdict.witness->right)},
                          {"at", pretty(verdict.witness->at)}};
    }
    out << j.dump() << "\n";
  } else if (verdict.pass) {
    out << "pass\n";
    err << "note: " << kNote << "\n";
  } else {
    out << "fail: (" << pretty(verdict.witness->left) << ", "
        << pretty(verdict.witness->right) << ") not related\n";
    err << "note: " << kNote << "\n";
  }
  return verdict.pass ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"type-theory workbench: normalization, canonicity, parametricity"};
  app.require_subcommand(1);

  Options opts;
  std::string term_arg;
  std::string term_arg2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--calculus", opts.calculus, "stlc, mltt, or sysf")
        ->check(CLI::IsMember({"stlc", "mltt", "sysf"}));
    cmd->add_option("--fuel", opts.fuel, "rewrite step budget");
    cmd->add_option("--format", opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--type", opts.type, "type argument or ascription");
    cmd->add_option("--max-size", opts.max_size, "AST node bound for enumeration");
    cmd->add_option("--rel", opts.rel_file, "relation-instance file");
  };

  CLI::App* check_cmd = app.add_subcommand("check", "typecheck a term");
  check_cmd->add_option("term", term_arg, "the term (or - for stdin)")->required();
  add_common(check_cmd);

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "compute the normal form");
  normalize_cmd->add_option("term", term_arg, "the term (or - for stdin)")->required();
  add_common(normalize_cmd);

  CLI::App* canonicity_cmd =
      app.add_subcommand("canonicity", "decide yes/no for a closed term of Ans");
  canonicity_cmd->add_option("term", term_arg, "the term (or - for stdin)")->required();
  add_common(canonicity_cmd);

  CLI::App* consistency_cmd =
      app.add_subcommand("consistency", "confirm yes and no are distinguished");
  add_common(consistency_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle-eq", "beta-eta equality via rewriting");
  oracle_cmd->add_option("lhs", term_arg, "left term")->required();
  oracle_cmd->add_option("rhs", term_arg2, "right term")->required();
  add_common(oracle_cmd);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "well-typed terms up to a size");
  add_common(enumerate_cmd);

  CLI::App* free_cmd =
      app.add_subcommand("free-theorem", "print or check a parametricity statement");
  free_cmd->add_option("term", term_arg, "the term to check (or - for stdin)");
  add_common(free_cmd);

  std::vector<std::string> argv = args;
  argv.insert(argv.begin(), "tt");
  std::vector<char*> raw;
  raw.reserve(argv.size());
  for (std::string& s : argv) raw.push_back(s.data());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  opts.calculus_given = app.get_subcommands().front()->count("--calculus") > 0;
  opts.type_given = app.get_subcommands().front()->count("--type") > 0;

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (check_cmd->parsed()) return run_check(opts, read_term_arg(term_arg, in), out);
    if (normalize_cmd->parsed()) return run_normalize(opts, read_term_arg(term_arg, in), out);
    if (canonicity_cmd->parsed()) {
      require_calculus(opts, {"stlc", "mltt"}, "canonicity");
      return run_canonicity(opts, read_term_arg(term_arg, in), out);
    }
    if (consistency_cmd->parsed()) {
      require_calculus(opts, {"stlc"}, "consistency");
      return run_consistency(opts, out);
    }
    if (oracle_cmd->parsed())
      return run_oracle_eq(opts, read_term_arg(term_arg, in), term_arg2, out);
    if (enumerate_cmd->parsed()) return run_enumerate(opts, out);
    if (free_cmd->parsed()) {
      if (!opts.calculus_given) opts.calculus = "sysf";
      require_calculus(opts, {"sysf"}, "free-theorem");
      return run_free_theorem(opts, read_term_arg(term_arg, in),
                              free_cmd->count("term") > 0, out, err);
    }
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    emit_error(opts, command, e, out, err);
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 5;
  }
}

}  // namespace tt::front
