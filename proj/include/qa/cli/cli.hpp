// Copyright 2026 The qa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `qa` command line. run() is the whole program minus process plumbing,
// so tests drive it in-process.

#ifndef QA_CLI_CLI_HPP
#define QA_CLI_CLI_HPP

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qa/answerhood.hpp"
#include "qa/development.hpp"
#include "qa/error.hpp"
#include "qa/prover/tptp.hpp"
#include "qa/semantics.hpp"
#include "qa/syntax.hpp"

namespace qa::cli {

enum ExitCode : int {
  kPositive = 0,
  kNegative = 1,
  kUnknown = 2,
  kUsage = 3,
  kInput = 4,
  kInternal = 5,
};

struct RunResult {
  int exit_code = kPositive;
  std::string out;
  std::string err;
};

namespace detail {

struct Shared {
  std::string sig_path;
  std::string context = "true";
  int worlds = 2;
  int domain = 3;
  std::uint64_t budget = 50000;
  int grounding_depth = 1;
  std::vector<std::string> variants;
  bool json = false;
  bool deterministic = false;
  bool cross_check = false;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Signature load_signature(const std::string& path) {
  const nlohmann::json j = read_json(path);
  try {
    return signature_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// `@path` reads the formula from a file; anything else is the formula itself.
/// Parse positions are prefixed with the file or option they came from.
inline Formula load_formula(const std::string& arg, const std::string& option, const Signature& sig) {
  const bool indirect = !arg.empty() && arg[0] == '@';
  const std::string origin = indirect ? arg.substr(1) : option;
  const std::string text = indirect ? read_file(arg.substr(1)) : arg;
  try {
    return parse_formula(text, sig);
  } catch (const ParseError& e) {
    throw InputError(origin + ":" + e.what());
  }
}

inline std::vector<Formula> load_formulas(const std::vector<std::string>& args, const std::string& option,
                                          const Signature& sig) {
  std::vector<Formula> out;
  for (const auto& a : args) out.push_back(load_formula(a, option, sig));
  return out;
}

inline QuestionSet as_questions(const std::vector<Formula>& fs) {
  QuestionSet qs;
  for (const auto& f : fs) qs.push_back(Question{f});
  return qs;
}

inline DevelopmentVariant parse_variant(const std::vector<std::string>& names) {
  DevelopmentVariant v;
  for (const auto& n : names) {
    if (n == "no-existential") {
      v.allow_existential = false;
    } else if (n == "no-varvar-identity") {
      v.allow_var_var_identity = false;
    } else if (n == "no-equality") {
      v.allow_equality = false;
    } else if (n != "full") {
      throw InputError("unknown variant '" + n + "'");
    }
  }
  return v;
}

inline nlohmann::json variant_json(const DevelopmentVariant& v) {
  return {{"allow_existential", v.allow_existential},
          {"allow_var_var_identity", v.allow_var_var_identity},
          {"allow_equality", v.allow_equality}};
}

inline EngineConfig engine_config(const Shared& s) {
  EngineConfig cfg;
  cfg.bounds = Bounds(s.worlds, s.domain);
  cfg.prover_budget = s.budget;
  cfg.grounding_depth = s.grounding_depth;
  cfg.variant = parse_variant(s.variants);
  cfg.cross_check = s.cross_check;
  cfg.validate();
  return cfg;
}

inline nlohmann::json strings_json(const std::vector<Formula>& fs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : fs) j.push_back(to_string(f));
  return j;
}

inline nlohmann::json countermodel_json(const Countermodel& c) {
  return {{"model", model_to_json(c.model)},
          {"w", c.model.world_names()[static_cast<std::size_t>(c.w)]},
          {"v", c.model.world_names()[static_cast<std::size_t>(c.v)]}};
}

inline nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = verdict_name(v.kind);
  j["bounds"] = {{"worlds", v.bounds.max_worlds}, {"domain", v.bounds.max_domain}};
  j["budget_used"] = v.budget_used;
  j["proof_steps"] = v.proof ? nlohmann::json(v.proof->steps.size()) : nlohmann::json(nullptr);
  j["countermodel"] = v.countermodel ? countermodel_json(*v.countermodel) : nlohmann::json(nullptr);
  return j;
}

inline void print_countermodel(std::ostream& out, const Countermodel& c) {
  out << "countermodel: " << c.model.world_names()[static_cast<std::size_t>(c.w)] << " ~ "
      << c.model.world_names()[static_cast<std::size_t>(c.v)] << "\n"
      << model_to_json(c.model).dump(2) << "\n";
}

inline void print_verdict(std::ostream& out, const Verdict& v, const char* yes, const char* no) {
  switch (v.kind) {
    case VerdictKind::kEntailed:
      out << yes << "\n";
      break;
    case VerdictKind::kNotEntailed:
      out << no << "\n";
      print_countermodel(out, *v.countermodel);
      break;
    case VerdictKind::kUnknown:
      out << "UNKNOWN\n"
          << "no countermodel with at most " << v.bounds.max_worlds << " worlds and " << v.bounds.max_domain
          << " entities; no proof within " << v.budget_used << " clauses\n";
      break;
  }
}

inline int verdict_exit(VerdictKind k) {
  switch (k) {
    case VerdictKind::kEntailed:
      return kPositive;
    case VerdictKind::kNotEntailed:
      return kNegative;
    case VerdictKind::kUnknown:
      break;
  }
  return kUnknown;
}

inline void print_tree(std::ostream& out, const DevelopmentTree& t, int depth) {
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << node_kind_name(t.kind);
  if (t.kind == DevelopmentNodeKind::kInstance) {
    out << " " << to_string(replay(t)) << "  [pattern " << t.pattern_index;
    for (const auto& [v, term] : t.sigma) out << ", " << v << " := " << to_string(term);
    out << "]";
  } else if (t.kind == DevelopmentNodeKind::kIdentity) {
    out << " " << to_string(t.identity);
  } else if (!t.var.empty()) {
    out << " " << t.var;
  }
  out << "\n";
  for (const auto& k : t.kids) print_tree(out, k, depth + 1);
}

inline void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

// --- commands ---------------------------------------------------------------

inline int check_entailment(const Shared& s, const std::vector<std::string>& questions, const std::string& target,
                            std::ostream& out) {
  const Signature sig = load_signature(s.sig_path);
  const EngineConfig cfg = engine_config(s);
  const auto qs = load_formulas(questions, "--question", sig);
  const Formula tgt = load_formula(target, "--target", sig);
  const Formula chi = load_formula(s.context, "--context", sig);
  const Verdict v = decide_entailment(as_questions(qs), chi, Question{tgt}, sig, cfg);
  if (s.json) {
    nlohmann::json j = verdict_json(v);
    j["command"] = "check-entailment";
    j["questions"] = strings_json(qs);
    j["target"] = to_string(tgt);
    j["context"] = to_string(chi);
    emit_json(out, j);
  } else {
    print_verdict(out, v, "ENTAILED", "NOT ENTAILED");
  }
  return verdict_exit(v.kind);
}

inline int check_answer(const Shared& s, const std::string& question, const std::string& answer, std::ostream& out) {
  const Signature sig = load_signature(s.sig_path);
  const EngineConfig cfg = engine_config(s);
  const Formula q = load_formula(question, "--question", sig);
  const Formula psi = load_formula(answer, "--answer", sig);
  const Formula chi = load_formula(s.context, "--context", sig);
  const Verdict v = is_answer(psi, Question{q}, chi, sig, cfg);
  if (s.json) {
    nlohmann::json j = verdict_json(v);
    j["command"] = "check-answer";
    j["question"] = to_string(q);
    j["answer"] = to_string(psi);
    j["context"] = to_string(chi);
    emit_json(out, j);
  } else {
    print_verdict(out, v, "ANSWER", "NOT AN ANSWER");
  }
  return verdict_exit(v.kind);
}

inline int check_development_cmd(const Shared& s, const std::vector<std::string>& of, const std::string& candidate,
                                 bool classify, std::ostream& out) {
  const Signature sig = load_signature(s.sig_path);
  const DevelopmentVariant variant = parse_variant(s.variants);
  const auto phis = load_formulas(of, "--of", sig);
  const Formula psi = load_formula(candidate, "--candidate", sig);
  const auto tree = check_development(psi, phis, sig, variant);
  std::optional<AnswerClassification> cls;
  if (tree && classify) cls = classify_answer(psi, *tree, sig);
  if (s.json) {
    nlohmann::json j;
    j["command"] = "check-development";
    j["of"] = strings_json(phis);
    j["candidate"] = to_string(psi);
    j["variant"] = variant_json(variant);
    j["development"] = tree.has_value();
    j["tree"] = tree ? tree_to_json(*tree) : nlohmann::json(nullptr);
    if (cls) {
      j["classification"] = {{"tautology", tri_name(cls->is_tautology)},
                             {"contradiction", tri_name(cls->is_contradiction)},
                             {"atomic", cls->is_atomic},
                             {"existential_free", cls->existential_free}};
    } else {
      j["classification"] = nullptr;
    }
    emit_json(out, j);
  } else if (tree) {
    out << "DEVELOPMENT\n";
    print_tree(out, *tree, 1);
    if (cls) {
      out << "tautology: " << tri_name(cls->is_tautology) << "\n"
          << "contradiction: " << tri_name(cls->is_contradiction) << "\n"
          << "atomic: " << (cls->is_atomic ? "true" : "false") << "\n"
          << "existential-free: " << (cls->existential_free ? "true" : "false") << "\n";
    }
  } else {
    out << "NOT A DEVELOPMENT\n";
  }
  return tree ? kPositive : kNegative;
}

inline int extract_cmd(const Shared& s, const std::string& question, const std::string& answer, bool show_trace,
                       std::ostream& out) {
  const Signature sig = load_signature(s.sig_path);
  const EngineConfig cfg = engine_config(s);
  const Question q{load_formula(question, "--question", sig)};
  const Formula psi = load_formula(answer, "--answer", sig);
  const Formula chi = load_formula(s.context, "--context", sig);

  nlohmann::json j;
  j["command"] = "extract";
  j["question"] = to_string(q.body);
  j["answer"] = to_string(psi);
  j["context"] = to_string(chi);

  // An open answer is read as the question ?psi, as in decide_entailment.
  const Verdict v = decide_entailment({q}, chi, Question{psi}, sig, cfg);
  if (v.kind != VerdictKind::kEntailed) {
    if (s.json) {
      j.update(verdict_json(v));
      j["development"] = nullptr;
      j["failed_step"] = nullptr;
      emit_json(out, j);
    } else {
      print_verdict(out, v, "ANSWER", "NOT AN ANSWER");
    }
    return verdict_exit(v.kind);
  }

  std::optional<ExtractionResult> r;
  std::string failed_step, failure;
  try {
    r = extract_development(psi, q, chi, sig, cfg);
  } catch (const ExtractionFailure& e) {
    failed_step = e.step();
    failure = e.what();
  }
  const bool verified = r && verify_extraction(*r, psi, q, chi, sig, cfg);
  if (r && !verified) throw InternalError("extracted development failed re-verification");

  if (s.json) {
    j.update(verdict_json(v));
    j["verdict"] = r ? "Extracted" : "Unknown";
    j["development"] = r ? nlohmann::json(to_string(r->development)) : nlohmann::json(nullptr);
    j["tree"] = r ? tree_to_json(r->tree) : nlohmann::json(nullptr);
    j["verified"] = verified;
    j["failed_step"] = r ? nlohmann::json(nullptr) : nlohmann::json(failed_step);
    nlohmann::json trace = nlohmann::json::array();
    if (r) {
      for (const auto& t : r->trace) trace.push_back({{"step", t.step}, {"detail", t.detail}});
    }
    j["trace"] = trace;
    emit_json(out, j);
  } else if (r) {
    out << "EXTRACTED\n" << "development: " << to_string(r->development) << "\n";
    if (show_trace) {
      for (const auto& t : r->trace) out << "  " << t.step << ": " << t.detail << "\n";
    }
  } else {
    out << "UNKNOWN\n" << "extraction failed at " << failure << "\n";
  }
  return r ? kPositive : kUnknown;
}

inline int partition_cmd(const Shared& s, const std::string& model_path, const std::vector<std::string>& questions,
                         std::ostream& out) {
  const Signature sig = load_signature(s.sig_path);
  const nlohmann::json mj = read_json(model_path);
  ModalStructure m = [&] {
    try {
      return model_from_json(mj, sig);
    } catch (const InputError& e) {
      throw InputError(model_path + ": " + e.what());
    }
  }();
  const auto qs = load_formulas(questions, "--question", sig);
  const Partition p = questions_partition(m, as_questions(qs));
  if (s.json) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks()) {
      nlohmann::json names = nlohmann::json::array();
      for (int w : b) names.push_back(m.world_names()[static_cast<std::size_t>(w)]);
      blocks.push_back(names);
    }
    emit_json(out, {{"command", "partition"}, {"questions", strings_json(qs)}, {"blocks", blocks}});
  } else {
    for (const auto& b : p.blocks()) {
      out << "{";
      for (std::size_t i = 0; i < b.size(); ++i) {
        out << (i ? ", " : "") << m.world_names()[static_cast<std::size_t>(b[i])];
      }
      out << "}\n";
    }
  }
  return kPositive;
}

inline int enumerate_cmd(const Shared& s, const std::vector<std::string>& of, std::size_t max_size, int term_depth,
                         std::uint64_t cap, bool verify, std::ostream& out) {
  const Signature sig = load_signature(s.sig_path);
  const EngineConfig cfg = engine_config(s);
  const auto phis = load_formulas(of, "--of", sig);
  const Formula chi = load_formula(s.context, "--context", sig);
  DevelopmentEnumerationOptions opts;
  opts.term_depth = term_depth;
  opts.cap = cap;
  const auto all = enumerate_developments(phis, sig, max_size, cfg.variant, opts);

  bool refuted = false, unknown = false;
  nlohmann::json answers = nlohmann::json::array();
  for (const auto& psi : all) {
    if (!is_closed(psi)) continue;
    std::optional<VerdictKind> k;
    if (verify) {
      k = decide_entailment(as_questions(phis), chi, Question{psi}, sig, cfg).kind;
      refuted |= *k == VerdictKind::kNotEntailed;
      unknown |= *k == VerdictKind::kUnknown;
    }
    if (s.json) {
      nlohmann::json a = {{"formula", to_string(psi)}};
      a["verdict"] = k ? nlohmann::json(verdict_name(*k)) : nlohmann::json(nullptr);
      answers.push_back(a);
    } else {
      out << to_string(psi);
      if (k) out << "\t" << verdict_name(*k);
      out << "\n";
    }
  }
  if (s.json) {
    emit_json(out, {{"command", "enumerate-answers"},
                    {"of", strings_json(phis)},
                    {"max_size", max_size},
                    {"variant", variant_json(cfg.variant)},
                    {"answers", answers}});
  }
  if (refuted) return kNegative;
  return unknown ? kUnknown : kPositive;
}

inline int translate_cmd(const Shared& s, const std::vector<std::string>& questions, const std::string& target,
                         bool tptp, std::ostream& out) {
  const Signature sig = load_signature(s.sig_path);
  const auto qs = load_formulas(questions, "--question", sig);
  const Formula tgt = load_formula(target, "--target", sig);
  const Formula chi = load_formula(s.context, "--context", sig);
  const FOSequent seq = translate_entailment(as_questions(qs), chi, Question{tgt}, sig);
  if (tptp) {
    out << to_tptp(seq);
  } else if (s.json) {
    emit_json(out, {{"command", "translate"},
                    {"premises", strings_json(seq.premises)},
                    {"conclusion", to_string(seq.conclusion)},
                    {"signature", signature_to_json(seq.signature)}});
  } else {
    for (const auto& p : seq.premises) out << "premise: " << to_string(p) << "\n";
    out << "goal: " << to_string(seq.conclusion) << "\n";
  }
  return kPositive;
}

inline void add_shared(CLI::App* sub, Shared& s, bool engine) {
  sub->add_option("--sig", s.sig_path, "signature JSON file")->required();
  sub->add_flag("--json", s.json, "machine-readable output");
  sub->add_flag("--deterministic", s.deterministic, "sequential, reproducible execution (always on)");
  if (!engine) return;
  sub->add_option("--context", s.context, "context formula or @file (default: true)");
  sub->add_option("--worlds", s.worlds, "countermodel search: maximum worlds")->capture_default_str();
  sub->add_option("--domain", s.domain, "countermodel search: maximum domain size")->capture_default_str();
  sub->add_option("--budget", s.budget, "prover clause budget")->capture_default_str();
  sub->add_option("--grounding-depth", s.grounding_depth, "extraction grounding term depth")->capture_default_str();
  sub->add_option("--variant", s.variants, "grammar restriction (repeatable)")
      ->check(CLI::IsMember({"full", "no-existential", "no-varvar-identity", "no-equality"}));
  sub->add_flag("--cross-check", s.cross_check, "run the prover even after a countermodel");
}

}  // namespace detail

/// argv[0] is the program name. Never throws.
inline RunResult run(const std::vector<std::string>& argv) {
  using namespace detail;
  std::ostringstream out, err;
  RunResult res;

  CLI::App app{"Question entailment and answerhood engine", "qa"};
  app.require_subcommand(1);
  Shared s;
  std::vector<std::string> questions, of;
  std::string question, target, answer, candidate, model;
  bool classify = false, show_trace = false, verify = false, tptp = false;
  std::size_t max_size = 0;
  int term_depth = 1;
  std::uint64_t cap = DevelopmentEnumerationOptions{}.cap;
  std::function<int()> action;

  auto* ce = app.add_subcommand("check-entailment", "decide ?Phi |=_chi ?target");
  add_shared(ce, s, true);
  ce->add_option("--question", questions, "question body (repeatable)");
  ce->add_option("--target", target, "target question body")->required();
  ce->callback([&] { action = [&] { return check_entailment(s, questions, target, out); }; });

  auto* ca = app.add_subcommand("check-answer", "decide whether a closed formula answers ?question");
  add_shared(ca, s, true);
  ca->add_option("--question", question, "question body")->required();
  ca->add_option("--answer", answer, "closed candidate answer")->required();
  ca->callback([&] { action = [&] { return check_answer(s, question, answer, out); }; });

  auto* cd = app.add_subcommand("check-development", "check the development grammar");
  add_shared(cd, s, true);
  cd->add_option("--of", of, "pattern formula (repeatable)")->required();
  cd->add_option("--candidate", candidate, "candidate development")->required();
  cd->add_flag("--classify", classify, "report tautology/contradiction/atomic/existential-free");
  cd->callback([&] { action = [&] { return check_development_cmd(s, of, candidate, classify, out); }; });

  auto* ex = app.add_subcommand("extract", "build a development equivalent to an answer");
  add_shared(ex, s, true);
  ex->add_option("--question", question, "question body")->required();
  ex->add_option("--answer", answer, "answer formula")->required();
  ex->add_flag("--trace", show_trace, "print the pipeline trace");
  ex->callback([&] { action = [&] { return extract_cmd(s, question, answer, show_trace, out); }; });

  auto* pa = app.add_subcommand("partition", "print the partition a set of questions induces on a model");
  add_shared(pa, s, false);
  pa->add_option("--model", model, "model JSON file")->required();
  pa->add_option("--question", questions, "question body (repeatable)");
  pa->callback([&] { action = [&] { return partition_cmd(s, model, questions, out); }; });

  auto* en = app.add_subcommand("enumerate-answers", "list closed developments up to a size");
  add_shared(en, s, true);
  en->add_option("--of", of, "question body (repeatable)")->required();
  en->add_option("--max-size", max_size, "maximum formula size")->required()->check(CLI::PositiveNumber);
  en->add_option("--term-depth", term_depth, "rigid ground term depth")->capture_default_str();
  en->add_option("--cap", cap, "enumeration cap")->capture_default_str();
  en->add_flag("--verify", verify, "decide each answer with the engine");
  en->callback([&] { action = [&] { return enumerate_cmd(s, of, max_size, term_depth, cap, verify, out); }; });

  auto* tr = app.add_subcommand("translate", "print the first-order sequent for an entailment");
  add_shared(tr, s, true);
  tr->add_option("--question", questions, "question body (repeatable)");
  tr->add_option("--target", target, "target question body")->required();
  tr->add_flag("--tptp", tptp, "emit TPTP FOF");
  tr->callback([&] { action = [&] { return translate_cmd(s, questions, target, tptp, out); }; });

  // CLI11 consumes a vector back to front.
  std::vector<std::string> args;
  for (std::size_t i = argv.size(); i-- > 1;) args.push_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    res.exit_code = code == 0 ? kPositive : kUsage;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  try {
    res.exit_code = action();
  } catch (const InternalError& e) {
    err << "qa: internal error: " << e.what() << "\n";
    res.exit_code = kInternal;
  } catch (const EnumerationOverflow& e) {
    err << "qa: error: " << e.what() << " (raise --cap or lower the bounds)\n";
    res.exit_code = kInput;
  } catch (const Error& e) {
    err << "qa: error: " << e.what() << "\n";
    res.exit_code = kInput;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace qa::cli

#endif  // QA_CLI_CLI_HPP
