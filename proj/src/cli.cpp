/* Copyright 2026 The adjcalc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "adjcalc/cli.hpp"

#include <cstdlib>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "adjcalc/diagrams.hpp"
#include "adjcalc/textio.hpp"
#include "adjcalc/theories.hpp"
#include "adjcalc/translate.hpp"
#include "json.hpp"

namespace adjcalc::cli {

namespace {

using Json = nlohmann::ordered_json;

// Diagnostic for an error tied to one input argument. Errors without a
// span of their own point at the whole argument.
std::string diagnostic(const Error& e, const std::string& arg_name, const std::string& text) {
  const SourceSpan span = e.span().value_or(SourceSpan{0, text.size()});
  std::ostringstream os;
  os << "error: " << e.kind() << ": " << e.what() << " (" << arg_name << " bytes " << span.start
     << ".." << span.end << ")";
  return os.str();
}

struct ArgError {
  std::string line;
};

void report(std::ostream& err, const Error& e, const std::string& arg_name,
            const std::string& text) {
  err << diagnostic(e, arg_name, text) << '\n';
}

Signature sig_of(const std::string& name) { return *signature_from_string(name); }

Term parse_arg(Signature sig, const std::string& text, const std::string& arg_name) {
  try {
    return parse(sig, text);
  } catch (const Error& e) {
    throw ArgError{diagnostic(e, arg_name, text)};
  }
}

std::size_t default_budget() {
  const char* env = std::getenv("ADJCALC_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || *env == '-') {
    throw std::invalid_argument(std::string("ADJCALC_BUDGET is not a natural number: ") + env);
  }
  return static_cast<std::size_t>(v);
}

struct Options {
  std::string sig = "self";
  std::string theory;
  std::string mode = "count";
  std::string to;
  std::string format = "ascii";
  std::optional<std::size_t> budget;
  bool emit_proof = false;
  bool with_proof = false;
  bool json = false;
  bool from_stdin = false;
  std::vector<std::string> terms;
};

CircleMode mode_of(const std::string& m) {
  return m == "drop" ? CircleMode::Drop : CircleMode::Count;
}

Json diagram_json(const TLDiagram& d) { return Json::parse(to_json(d)); }

// Each single-term command maps one term to one output line (or block).
using TermCommand = std::function<std::string(const Term&)>;

int run_single(const Options& o, Signature sig, const TermCommand& cmd, std::istream& in,
               std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, text)
  if (o.from_stdin) {
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      inputs.emplace_back("line " + std::to_string(n), line);
    }
  } else {
    if (o.terms.size() != 1) {
      err << "error: usage: expected exactly one TERM argument\n";
      return kError;
    }
    inputs.emplace_back("TERM", o.terms[0]);
  }
  int code = kOk;
  for (const auto& [name, text] : inputs) {
    try {
      out << cmd(parse(sig, text)) << '\n';
    } catch (const Error& e) {
      report(err, e, name, text);
      code = kError;
    }
  }
  return code;
}

int run_eq(const Options& o, Signature sig, std::ostream& out, std::ostream& err) {
  if (o.terms.size() != 2) {
    err << "error: usage: eq expects two TERM arguments\n";
    return kError;
  }
  const Theory th{sig, *level_from_string(o.theory)};
  const Term t1 = parse_arg(sig, o.terms[0], "TERM1");
  const Term t2 = parse_arg(sig, o.terms[1], "TERM2");
  const std::size_t budget = o.budget ? *o.budget : default_budget();
  EqVerdict v;
  try {
    v = eq_search(th, t1, t2, budget, EqOptions{o.with_proof});
  } catch (const TypeMismatch& e) {
    throw ArgError{diagnostic(e, "TERM2", o.terms[1])};
  }
  if (v.kind == EqVerdict::Kind::Equal && v.proof && !verify_proof(th, *v.proof)) {
    err << "error: internal: produced proof does not verify\n";
    return kError;
  }
  if (o.json) {
    Json j;
    j["verdict"] = std::string(to_string(v.kind));
    j["expanded"] = v.expanded;
    if (v.by_preorder) j["by_preorder"] = true;
    if (v.proof) {
      j["proof_length"] = v.proof->length();
      if (o.emit_proof) j["proof"] = serialize_proof(*v.proof);
    }
    if (v.witness) j["witness"] = Json::array({diagram_json(v.witness->first), diagram_json(v.witness->second)});
    if (v.kind == EqVerdict::Kind::Unknown) j["exhausted"] = v.exhausted;
    out << j.dump() << '\n';
  } else {
    out << to_string(v.kind) << '\n';
    if (o.emit_proof && v.kind == EqVerdict::Kind::Equal) {
      if (v.proof) {
        out << serialize_proof(*v.proof);
      } else {
        out << "by-preorder\n";
      }
    }
    if (v.witness) {
      out << "lhs " << to_json(v.witness->first) << '\n';
      out << "rhs " << to_json(v.witness->second) << '\n';
    }
  }
  switch (v.kind) {
    case EqVerdict::Kind::Equal: return kOk;
    case EqVerdict::Kind::Distinct: return kDistinct;
    case EqVerdict::Kind::Unknown: return kUnknown;
  }
  return kError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Arrow terms of the free self-adjunction and the free involutive adjunction",
               "adjcalc"};
  app.require_subcommand(1);
  Options o;
  const auto sigs = CLI::IsMember({"self", "inv"});

  auto add_sig = [&](CLI::App* sub) { sub->add_option("--sig", o.sig, "self | inv")->check(sigs); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
  auto add_stdin = [&](CLI::App* sub) {
    sub->add_flag("--stdin", o.from_stdin, "read one term per line from standard input");
  };

  CLI::App* check = app.add_subcommand("check", "typecheck a term");
  add_sig(check);
  add_json(check);
  add_stdin(check);
  check->add_option("TERM", o.terms);

  CLI::App* eq = app.add_subcommand("eq", "decide equality of two terms");
  add_sig(eq);
  add_json(eq);
  eq->add_option("--theory", o.theory, "plain | k | j | triv")
      ->required()
      ->check(CLI::IsMember({"plain", "k", "j", "triv"}));
  eq->add_option("--budget", o.budget, "expanded-state budget");
  eq->add_flag("--emit-proof", o.emit_proof, "print the rewrite proof");
  eq->add_flag("--with-proof", o.with_proof, "search for a proof in the trivial theory");
  eq->add_option("TERM", o.terms);

  CLI::App* normalize = app.add_subcommand("normalize", "print the diagram of a term");
  add_sig(normalize);
  add_stdin(normalize);
  add_json(normalize);
  normalize->add_option("--mode", o.mode, "count | drop")->check(CLI::IsMember({"count", "drop"}));
  normalize->add_option("TERM", o.terms);

  CLI::App* translate_cmd = app.add_subcommand("translate", "translate to the other signature");
  add_stdin(translate_cmd);
  add_json(translate_cmd);
  translate_cmd->add_option("--to", o.to, "inv | self")->required()->check(sigs);
  translate_cmd->add_option("TERM", o.terms);

  CLI::App* render = app.add_subcommand("render", "draw the diagram of a term");
  add_sig(render);
  render->add_option("--format", o.format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--mode", o.mode, "count | drop")->check(CLI::IsMember({"count", "drop"}));
  render->add_option("TERM", o.terms);

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    err << "error: usage: " << msg << '\n';
    return kError;
  }

  try {
    const Signature sig = sig_of(o.sig);
    if (check->parsed()) {
      return run_single(o, sig, [&](const Term& t) {
        const ArrowType ty = type_of(sig, t);
        if (o.json) return Json{{"src", ty.src}, {"tgt", ty.tgt}}.dump();
        return to_string(ty);
      }, in, out, err);
    }
    if (eq->parsed()) return run_eq(o, sig, out, err);
    if (normalize->parsed()) {
      return run_single(o, sig, [&](const Term& t) {
        return to_json(interp(sig, t, mode_of(o.mode)));
      }, in, out, err);
    }
    if (translate_cmd->parsed()) {
      const Signature to = sig_of(o.to);
      const Signature from = to == Signature::Self ? Signature::Inv : Signature::Self;
      return run_single(o, from, [&](const Term& t) {
        const std::string s = print(translate(from, t));
        if (o.json) return Json{{"sig", std::string(to_string(to))}, {"term", s}}.dump();
        return s;
      }, in, out, err);
    }
    if (render->parsed()) {
      return run_single(o, sig, [&](const Term& t) {
        const TLDiagram d = interp(sig, t, mode_of(o.mode));
        std::string s = o.format == "svg" ? render_svg(d) : render_ascii(d);
        if (!s.empty() && s.back() == '\n') s.pop_back();
        return s;
      }, in, out, err);
    }
  } catch (const ArgError& a) {
    err << a.line << '\n';
    return kError;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace adjcalc::cli
