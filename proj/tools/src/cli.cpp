#include "alcnr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "alcnr/encodings.hpp"
#include "alcnr/semantics.hpp"
#include "alcnr/services.hpp"
#include "alcnr/syntax.hpp"

namespace alcnr::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::string located(const std::string& where, const ParseError& e) {
  return where + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
         e.detail();
}

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  Guards guards;
  int oracle_bound = 0;
  std::string trace_file;

  int check_sat(const std::string& kb_path) {
    return verdict_exit(decide(load_kb(kb_path)), true);
  }

  int concept_sat(const std::string& kb_path, const std::string& c) {
    KnowledgeBase kb = load_kb(kb_path);
    return verdict_exit(decide(concept_query(kb, load_concept(c))), true);
  }

  int subsumes(const std::string& kb_path, const std::string& c, const std::string& d) {
    KnowledgeBase kb = load_kb(kb_path);
    return answer_exit(decide(subsumption_query(kb, load_concept(c), load_concept(d))));
  }

  int instance(const std::string& kb_path, const std::string& a, const std::string& c) {
    KnowledgeBase kb = load_kb(kb_path);
    Concept query = load_concept(c);
    if (!kb.individuals().count(a)) throw InputError("unknown individual: " + a);
    return answer_exit(decide(instance_query(kb, a, query)));
  }

  int instances(const std::string& kb_path, const std::string& c) {
    KnowledgeBase kb = load_kb(kb_path);
    Concept query = load_concept(c);
    std::vector<std::string> unknown;
    for (const auto& a : kb.individuals()) {
      traces_ += "# instance " + a + "\n";
      Verdict v = decide(instance_query(kb, a, query));
      if (failed_) return kCheckFailed;
      if (v.status == Satisfiability::kUnsat) out_ << a << '\n';
      if (v.status == Satisfiability::kUnknown) {
        unknown.push_back(a);
        err_ << "unknown: " << a << " (" << v.guard << ")\n";
      }
    }
    flush_trace();
    return unknown.empty() ? kPositive : kUnknown;
  }

  int transform(const std::string& kb_path) {
    out_ << render_kb(inclusions_to_introduction(load_kb(kb_path)));
    return kPositive;
  }

  int model(const std::string& kb_path) {
    Verdict v = decide(load_kb(kb_path));
    if (failed_) return kCheckFailed;
    if (v.status == Satisfiability::kSat) {
      out_ << format_model(v.model->interpretation);
      flush_trace();
      return kPositive;
    }
    return verdict_exit(std::move(v), true);
  }

  int trace(const std::string& kb_path) {
    Verdict v = decide(load_kb(kb_path));
    if (failed_) return kCheckFailed;
    out_ << v.trace.str();
    return verdict_exit(std::move(v), false);
  }

  int check_model(const std::string& kb_path, const std::string& model_path) {
    KnowledgeBase kb = load_kb(kb_path);
    Interpretation interp;
    try {
      interp = parse_model(read_source(model_path, in_));
    } catch (const ParseError& e) {
      throw InputError(located(model_path, e));
    }
    bool ok = false;
    try {
      ok = is_model(interp, kb);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("model does not interpret the knowledge base: ") + e.what());
    }
    out_ << (ok ? "valid" : "invalid") << '\n';
    return ok ? kPositive : kNegative;
  }

  // Tracing everything is only worth it when someone reads the trace.
  bool full_trace = false;

 private:
  KnowledgeBase load_kb(const std::string& path) {
    try {
      return parse_kb(read_source(path, in_));
    } catch (const ParseError& e) {
      throw InputError(located(path == "-" ? "<stdin>" : path, e));
    }
  }

  Concept load_concept(const std::string& text) {
    try {
      return parse_concept(text);
    } catch (const ParseError& e) {
      throw InputError(located("<concept>", e));
    }
  }

  Verdict decide(const KnowledgeBase& kb) {
    ServiceOptions options;
    options.search.guards = guards;
    if (full_trace || !trace_file.empty()) options.search.trace_limit = 0;
    Verdict v = kb_satisfiable(kb, options);
    traces_ += v.trace.str();
    if (oracle_bound > 0) {
      if (auto problem = oracle_contradiction(v, oracle_bound)) {
        err_ << "oracle-check failed: " << *problem << '\n';
        failed_ = true;
      }
    }
    return v;
  }

  void flush_trace() {
    if (trace_file.empty()) return;
    std::ofstream file(trace_file, std::ios::binary);
    if (!file) throw InputError("cannot write " + trace_file);
    file << traces_;
  }

  int verdict_exit(Verdict v, bool print) {
    if (failed_) return kCheckFailed;
    flush_trace();
    if (print) out_ << to_string(v.status) << '\n';
    switch (v.status) {
      case Satisfiability::kSat:
        return kPositive;
      case Satisfiability::kUnsat:
        return kNegative;
      case Satisfiability::kUnknown:
        err_ << "guard exhausted: " << v.guard << '\n';
        return kUnknown;
    }
    return kUnknown;
  }

  // Entailment queries are true exactly when the reduced KB is UNSAT.
  int answer_exit(Verdict v) {
    if (failed_) return kCheckFailed;
    flush_trace();
    switch (v.status) {
      case Satisfiability::kUnsat:
        out_ << "true\n";
        return kPositive;
      case Satisfiability::kSat:
        out_ << "false\n";
        return kNegative;
      case Satisfiability::kUnknown:
        out_ << "unknown\n";
        err_ << "guard exhausted: " << v.guard << '\n';
        return kUnknown;
    }
    return kUnknown;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::string traces_;
  bool failed_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reasoner for ALCNR knowledge bases", args.empty() ? "alcnr" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();

  Session session(in, out, err);
  app.add_option("--max-vars", session.guards.max_variables, "Variable guard")
      ->capture_default_str();
  app.add_option("--max-constraints", session.guards.max_constraints, "Constraint guard")
      ->capture_default_str();
  app.add_option("--max-branches", session.guards.max_branches, "Branch-point guard")
      ->capture_default_str();
  app.add_option("--oracle-check", session.oracle_bound,
                 "Cross-check the verdict with a bounded model search up to this domain size")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--trace-file", session.trace_file, "Write the derivation trace to PATH");

  std::string kb_path, x, y, z;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("KB", kb_path, "Knowledge base file, - for standard input")->required();
    return sub;
  };
  auto* check_sat = add("check-sat", "Decide satisfiability of the knowledge base");
  auto* concept_sat = add("concept-sat", "Decide satisfiability of a concept w.r.t. the KB");
  concept_sat->add_option("CONCEPT", x)->required();
  auto* subsumes = add("subsumes", "Decide whether C is subsumed by D w.r.t. the KB");
  subsumes->add_option("C", x)->required();
  subsumes->add_option("D", y)->required();
  auto* instance = add("instance", "Decide whether the KB entails C(a)");
  instance->add_option("INDIVIDUAL", z)->required();
  instance->add_option("CONCEPT", x)->required();
  auto* instances = add("instances", "List the individuals entailed to be instances of C");
  instances->add_option("CONCEPT", x)->required();
  auto* transform = add("transform", "Rewrite the TBox into a single introduction");
  auto* model = add("model", "Print the canonical model of a satisfiable KB");
  auto* trace = add("trace", "Print the derivation log of the satisfiability check");
  auto* check_model = add("check-model", "Check a model file against the KB");
  check_model->add_option("MODEL", y)->required();
  check_model->group("");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("alcnr");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPositive : kInputError;
  }

  try {
    if (check_sat->parsed()) return session.check_sat(kb_path);
    if (concept_sat->parsed()) return session.concept_sat(kb_path, x);
    if (subsumes->parsed()) return session.subsumes(kb_path, x, y);
    if (instance->parsed()) return session.instance(kb_path, z, x);
    if (instances->parsed()) return session.instances(kb_path, x);
    if (transform->parsed()) return session.transform(kb_path);
    if (model->parsed()) return session.model(kb_path);
    if (trace->parsed()) {
      session.full_trace = true;
      return session.trace(kb_path);
    }
    if (check_model->parsed()) return session.check_model(kb_path, y);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace alcnr::cli
