#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "descq/checker.hpp"
#include "descq/corpus.hpp"
#include "descq/cutelim.hpp"
#include "descq/enumerate.hpp"
#include "descq/parser.hpp"
#include "descq/proof_io.hpp"
#include "descq/tableau.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

struct Options {
  int max_size = 3;
  int max_gamma = 64;
  int max_fresh = 16;
  int jobs = 1;
  std::string format = "text";
  std::string out_path;
  bool trace = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

int cmd_parse(const Options& opt, const std::string& text) {
  descq::Signature sig;
  descq::Formula f = descq::parse_formula_infer(text, sig);
  if (json_mode(opt)) {
    json j{{"ok", true}, {"canonical", descq::to_string(f)}};
    emit(opt.out_path, j.dump(2) + "\n");
  } else {
    emit(opt.out_path, descq::to_string(f) + "\n");
  }
  return kExitValid;
}

int cmd_check(const Options& opt, const std::string& path) {
  descq::Signature sig;
  descq::ProofPtr p = descq::read_proof(slurp(path), sig);
  auto failure = descq::check_proof(*p);
  if (json_mode(opt)) {
    json j{{"ok", !failure.has_value()}};
    if (failure) j["error"] = descq::to_string(*failure);
    emit(opt.out_path, j.dump(2) + "\n");
  } else {
    emit(opt.out_path, failure ? "FAIL " + descq::to_string(*failure) + "\n" : "OK\n");
  }
  return failure ? kExitRefuted : kExitValid;
}

int cmd_prove(const Options& opt, const std::string& text) {
  descq::Signature sig;
  descq::Sequent q = descq::parse_sequent_infer(text, sig);
  descq::Budget budget{opt.max_gamma, opt.max_fresh};
  descq::TableauResult r = descq::prove(q, budget);
  std::ostringstream os;
  int code = kExitUnknown;
  switch (r.kind) {
    case descq::TableauResult::Kind::Proof:
      code = kExitValid;
      if (json_mode(opt)) {
        json j{{"result", "proof"},
               {"gamma_used", r.report.gamma_used},
               {"fresh_used", r.report.fresh_used},
               {"branches_closed", r.report.branches_closed},
               {"tableau", descq::render_tree(*r.tree)}};
        os << j.dump(2) << "\n";
      } else {
        os << "proof (closed tableau)\n" << descq::render_tree(*r.tree);
      }
      break;
    case descq::TableauResult::Kind::Countermodel:
      code = kExitRefuted;
      if (json_mode(opt)) {
        json j{{"result", "countermodel"},
               {"model", descq::to_string(r.model->structure, r.model->assignment)}};
        os << j.dump(2) << "\n";
      } else {
        os << "countermodel\n"
           << descq::to_string(r.model->structure, r.model->assignment);
      }
      break;
    case descq::TableauResult::Kind::Unknown:
      code = kExitUnknown;
      if (json_mode(opt)) {
        json j{{"result", "unknown"},
               {"gamma_used", r.report.gamma_used},
               {"fresh_used", r.report.fresh_used}};
        os << j.dump(2) << "\n";
      } else {
        os << "unknown (budget exhausted: gamma=" << r.report.gamma_used
           << " fresh=" << r.report.fresh_used << ")\n";
      }
      break;
  }
  emit(opt.out_path, os.str());
  return code;
}

int cmd_countermodel(const Options& opt, const std::string& text) {
  descq::Signature sig;
  descq::Sequent q = descq::parse_sequent_infer(text, sig);
  auto cm = descq::find_countermodel(q, sig, opt.max_size, opt.jobs);
  std::ostringstream os;
  if (cm) {
    if (json_mode(opt)) {
      json j{{"found", true},
             {"outer", cm->structure.outer_size},
             {"model", descq::to_string(cm->structure, cm->assignment)}};
      os << j.dump(2) << "\n";
    } else {
      os << descq::to_string(cm->structure, cm->assignment);
    }
    emit(opt.out_path, os.str());
    return kExitRefuted;
  }
  if (json_mode(opt)) {
    json j{{"found", false}, {"max_size", opt.max_size}};
    os << j.dump(2) << "\n";
  } else {
    os << "no countermodel up to outer size " << opt.max_size << "\n";
  }
  emit(opt.out_path, os.str());
  return kExitValid;
}

int cmd_eval(const Options& opt, const std::string& model_path, const std::string& text) {
  descq::Assignment s;
  descq::Structure m = descq::parse_structure_text(slurp(model_path), &s);
  descq::Signature sig;
  bool value;
  if (text.find("|-") != std::string::npos) {
    descq::Sequent q = descq::parse_sequent_infer(text, sig);
    value = descq::satisfies_sequent(m, s, q);
  } else {
    descq::Formula f = descq::parse_formula_infer(text, sig);
    value = descq::satisfies(m, s, f);
  }
  if (json_mode(opt)) {
    json j{{"value", value}};
    emit(opt.out_path, j.dump(2) + "\n");
  } else {
    emit(opt.out_path, value ? "true\n" : "false\n");
  }
  return value ? kExitValid : kExitRefuted;
}

int cmd_cutelim(const Options& opt, const std::string& path) {
  descq::Signature sig;
  descq::ProofPtr p = descq::read_proof(slurp(path), sig);
  if (auto f = descq::check_proof(*p)) {
    std::cerr << "input proof does not check: " << descq::to_string(*f) << "\n";
    return kExitInputError;
  }
  int steps = 0;
  descq::TraceFn tracer = nullptr;
  if (opt.trace) {
    tracer = [&steps](const descq::TraceStep& st) {
      ++steps;
      std::cerr << st.label << "  cut formula: " << descq::to_string(st.cut_formula)
                << "  degree: " << st.degree << "\n";
    };
  }
  descq::ProofPtr out = descq::eliminate_cuts(p, tracer);
  emit(opt.out_path, descq::write_proof(*out));
  return kExitValid;
}

int cmd_corpus(const Options& opt, const std::string& name, const std::string& emit_dir) {
  struct Item {
    std::string name;
    std::string kind;
    bool ok;
    std::string detail;
  };
  std::vector<Item> items;
  auto selected = [&](const std::string& n) { return name.empty() || name == n; };

  auto corpus = descq::derivation_corpus();
  for (const auto& [n, p] : corpus) {
    if (!selected(n)) continue;
    auto f = descq::check_proof(*p);
    items.push_back({n, "derivation", !f.has_value(),
                     f ? descq::to_string(*f) : descq::to_string(p->conclusion)});
    if (!emit_dir.empty()) {
      std::ofstream out(emit_dir + "/" + n + ".proof");
      out << descq::write_proof(*p);
    }
  }

  for (const auto& [n, p] : descq::cut_fixtures()) {
    if (!selected(n)) continue;
    bool ok = false;
    std::string detail;
    try {
      if (!descq::checks(*p)) {
        detail = "fixture does not check";
      } else {
        descq::ProofPtr out = descq::eliminate_cuts(p);
        if (descq::contains_cut(*out))
          detail = "cut remains";
        else if (!(out->conclusion == p->conclusion))
          detail = "endsequent changed";
        else if (!descq::checks(*out))
          detail = "output does not check";
        else
          ok = true;
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    items.push_back({n, "cut-elimination", ok, detail});
  }

  for (const auto& claim : descq::non_derivability_claims()) {
    if (!selected(claim.name)) continue;
    descq::Signature sig;
    descq::Sequent q = descq::parse_sequent_infer(claim.sequent, sig);
    auto cm = descq::find_countermodel(q, sig, claim.max_outer);
    bool ok = cm.has_value() &&
              !descq::satisfies_sequent(cm->structure, cm->assignment, q);
    items.push_back({claim.name, "countermodel", ok,
                     ok ? "outer size " + std::to_string(cm->structure.outer_size)
                        : "no witness found"});
  }

  bool all_ok = true;
  for (const auto& it : items) all_ok = all_ok && it.ok;

  std::ostringstream os;
  if (json_mode(opt)) {
    json j;
    j["ok"] = all_ok;
    j["items"] = json::array();
    for (const auto& it : items)
      j["items"].push_back(
          {{"name", it.name}, {"kind", it.kind}, {"ok", it.ok}, {"detail", it.detail}});
    os << j.dump(2) << "\n";
  } else {
    for (const auto& it : items)
      os << (it.ok ? "PASS" : "FAIL") << "  " << it.kind << "  " << it.name
         << (it.detail.empty() ? "" : "  (" + it.detail + ")") << "\n";
    os << (all_ok ? "all passed" : "failures present") << "\n";
  }
  emit(opt.out_path, os.str());
  return all_ok ? kExitValid : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequent calculus, countermodel search and tableau proving for a "
               "positive free logic with a binary description quantifier"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o", opt.out_path, "write output to FILE");
  app.add_option("--jobs", opt.jobs, "worker threads for model enumeration")
      ->check(CLI::PositiveNumber);

  std::string arg_formula, arg_file, arg_sequent, arg_model, arg_name, arg_emit;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula, print its core form");
  parse_cmd->add_option("formula", arg_formula)->required();

  auto* check_cmd = app.add_subcommand("check", "check a proof file");
  check_cmd->add_option("file", arg_file)->required();

  auto* prove_cmd = app.add_subcommand("prove", "bounded tableau proof search");
  prove_cmd->add_option("sequent", arg_sequent)->required();
  prove_cmd->add_option("--max-gamma", opt.max_gamma, "instantiation budget");
  prove_cmd->add_option("--max-fresh", opt.max_fresh, "fresh parameter budget");

  auto* cm_cmd = app.add_subcommand("countermodel", "exhaustive finite refutation search");
  cm_cmd->add_option("sequent", arg_sequent)->required();
  cm_cmd->add_option("--max-size", opt.max_size, "outer domain bound (default 3)");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula or sequent in a model");
  eval_cmd->add_option("model", arg_model)->required();
  eval_cmd->add_option("input", arg_sequent)->required();

  auto* ce_cmd = app.add_subcommand("cutelim", "eliminate cuts from a proof file");
  ce_cmd->add_option("file", arg_file)->required();
  ce_cmd->add_flag("--trace", opt.trace, "log each reduction step to stderr");

  auto* corpus_cmd =
      app.add_subcommand("corpus", "run the stock derivations, cut fixtures and claims");
  corpus_cmd->add_option("name", arg_name, "run a single item");
  corpus_cmd->add_option("--emit", arg_emit, "write derivations as .proof files to DIR");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse_cmd) return cmd_parse(opt, arg_formula);
    if (*check_cmd) return cmd_check(opt, arg_file);
    if (*prove_cmd) return cmd_prove(opt, arg_sequent);
    if (*cm_cmd) return cmd_countermodel(opt, arg_sequent);
    if (*eval_cmd) return cmd_eval(opt, arg_model, arg_sequent);
    if (*ce_cmd) return cmd_cutelim(opt, arg_file);
    if (*corpus_cmd) return cmd_corpus(opt, arg_name, arg_emit);
  } catch (const descq::ParseError& e) {
    std::cerr << "parse error at byte " << e.offset << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
