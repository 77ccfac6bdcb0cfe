#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aicrepair/aic.hpp"
#include "aicrepair/frontend.hpp"
#include "aicrepair/query.hpp"
#include "aicrepair/revision.hpp"
#include "aicrepair/transforms.hpp"
#include "aicrepair/update.hpp"

namespace aicrepair {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for usage problems found after option parsing; exit code 2.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string file;
  std::string format = "text";
  unsigned jobs = 1;
  std::optional<std::size_t> max_atoms;
  std::optional<std::uint64_t> max_candidates;
  std::optional<std::uint64_t> time_limit_ms;
  bool stats = false;
  std::string cls;
  std::string set;
  std::string to;
  std::string by;
  std::string query;
  bool verify = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

EnumerationLimits limits_of(const Options& o) {
  EnumerationLimits l = EnumerationLimits::from_env();
  if (o.max_atoms) l.max_atoms = *o.max_atoms;
  l.jobs = std::max(1u, o.jobs);
  l.max_candidates = o.max_candidates;
  if (o.time_limit_ms)
    l.time_budget = std::chrono::milliseconds(*o.time_limit_ms);
  return l;
}

template <class T>
const T& program_as(const Instance& inst, std::string_view what) {
  if (auto p = std::get_if<T>(&inst.program)) return *p;
  throw UsageError(std::string(what));
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err) {}

  int run(const std::string& command) {
    inst_ = parse_instance(read_input(o_.file));
    for (const auto& w : inst_.warnings) err_ << "warning: " << w << "\n";
    if (command == "repair") return repair();
    if (command == "revise") return revise();
    if (command == "check") return check_set();
    if (command == "translate") return translate();
    if (command == "normalize") return normalize();
    if (command == "properize") return do_properize();
    if (command == "shift") return do_shift();
    if (command == "answer-sets") return do_answer_sets();
    if (command == "cqa") return do_cqa();
    if (command == "lattice") return do_lattice();
    throw UsageError("unknown command " + command);
  }

 private:
  bool json() const { return o_.format == "json"; }
  const Universe& u() const { return *inst_.universe; }

  void report_stats(const EnumerationStats& s) {
    if (o_.stats)
      err_ << "candidates: " << s.candidates << "\nelapsed-ms: "
           << std::chrono::duration<double, std::milli>(s.elapsed).count()
           << "\n";
  }

  int finish(const EnumerationStats& s) {
    report_stats(s);
    if (s.interrupted) {
      err_ << "error: enumeration budget exhausted, results are partial\n";
      return 1;
    }
    return 0;
  }

  template <class Set>
  void emit_sets(const std::string& command, std::string_view cls,
                 const std::string& key, const std::vector<Set>& sets,
                 bool complete) {
    if (json()) {
      Json j;
      j["schema"] = 1;
      j["command"] = command;
      j["class"] = cls;
      j["complete"] = complete;
      j[key] = Json::array();
      for (const auto& s : sets) j[key].push_back(to_strings(u(), s));
      out_ << j.dump() << "\n";
      return;
    }
    for (const auto& s : sets) out_ << to_string(u(), s) << "\n";
  }

  RepairClass repair_class() const {
    auto c = parse_repair_class(o_.cls);
    if (!c) throw UsageError("unknown repair class '" + o_.cls + "'");
    return *c;
  }
  RevisionClass revision_class() const {
    auto c = parse_revision_class(o_.cls);
    if (!c) throw UsageError("unknown revision class '" + o_.cls + "'");
    return *c;
  }

  int repair() {
    const auto& eta = program_as<AicProgram>(inst_, "repair needs an aic: program");
    auto r = enumerate(inst_.db, eta, repair_class(), limits_of(o_));
    emit_sets("repair", class_name(r.cls), "repairs", r.sets,
              !r.stats.interrupted);
    return finish(r.stats);
  }

  int revise() {
    const auto& p = program_as<RevisionProgram>(inst_, "revise needs a rev: program");
    auto r = enumerate_rev(p, inst_.db, revision_class(), limits_of(o_));
    emit_sets("revise", class_name(r.cls), "revisions", r.sets,
              !r.stats.interrupted);
    return finish(r.stats);
  }

  int emit_bool(bool v) {
    if (json()) {
      Json j;
      j["schema"] = 1;
      j["command"] = "check";
      j["class"] = o_.cls;
      j["result"] = v;
      out_ << j.dump() << "\n";
    } else {
      out_ << (v ? "true" : "false") << "\n";
    }
    return 0;
  }

  int check_set() {
    if (auto eta = std::get_if<AicProgram>(&inst_.program)) {
      UpdateSet s = parse_update_set(u(), o_.set);
      if (o_.cls == "founded") return emit_bool(is_founded(inst_.db, *eta, s));
      if (o_.cls == "closed") return emit_bool(is_closed(s, *eta));
      if (o_.cls == "justified-action-set")
        return emit_bool(check_justified_action_set(inst_.db, *eta, s));
      return emit_bool(check(repair_class(), inst_.db, *eta, s));
    }
    const auto& p = program_as<RevisionProgram>(
        inst_, "check needs an aic: or rev: program");
    RevisionSet s = parse_revision_set(u(), o_.set);
    if (o_.cls == "closed") return emit_bool(is_closed_rev(s, p));
    if (o_.cls == "supported-update")
      return emit_bool(s.consistent() && check_supported_update(p, inst_.db, s));
    if (o_.cls == "justified-update")
      return emit_bool(check_justified_update(p, inst_.db, s));
    return emit_bool(check(revision_class(), inst_.db, p, s));
  }

  int translate() {
    if (o_.to == "aic") {
      const auto& p = program_as<RevisionProgram>(
          inst_, "translate --to aic needs a rev: program");
      out_ << print_instance(u(), inst_.db, to_aic(properize(p)));
      return 0;
    }
    const auto& eta = program_as<AicProgram>(
        inst_, "translate --to rev needs an aic: program");
    out_ << print_instance(u(), inst_.db, to_rev(eta));
    return 0;
  }

  int normalize() {
    if (auto eta = std::get_if<AicProgram>(&inst_.program))
      out_ << print_instance(u(), inst_.db, normalize_aic(*eta));
    else
      out_ << print_instance(
          u(), inst_.db,
          normalize_rev(program_as<RevisionProgram>(
              inst_, "normalize needs an aic: or rev: program")));
    return 0;
  }

  int do_properize() {
    const auto& p = program_as<RevisionProgram>(inst_, "properize needs a rev: program");
    out_ << print_instance(u(), inst_.db, properize(p));
    return 0;
  }

  template <class P>
  int shift_program(const P& p, const AtomSet& w) {
    auto s = shift_instance(inst_.db, p, w);
    out_ << print_instance(u(), s.shifted_db, s.shifted);
    if (!o_.verify) return 0;
    bool ok = true;
    for (const auto& c : verify_shift(s, limits_of(o_))) {
      out_ << "% " << c.cls << ": " << (c.ok ? "transported" : "MISMATCH")
           << " (" << c.count << ")\n";
      ok = ok && c.ok;
    }
    return ok ? 0 : 1;
  }

  int do_shift() {
    AtomSet w = parse_atom_set(u(), o_.by);
    if (auto eta = std::get_if<AicProgram>(&inst_.program))
      return shift_program(*eta, w);
    return shift_program(
        program_as<RevisionProgram>(inst_, "shift needs an aic: or rev: program"),
        w);
  }

  int do_answer_sets() {
    const auto& p = program_as<LogicProgram>(inst_, "answer-sets needs an lp: program");
    auto sets = answer_sets(p, limits_of(o_));
    if (json()) {
      Json j;
      j["schema"] = 1;
      j["command"] = "answer-sets";
      j["answer_sets"] = Json::array();
      for (const auto& m : sets) j["answer_sets"].push_back(to_strings(u(), m));
      out_ << j.dump() << "\n";
    } else {
      for (const auto& m : sets) out_ << to_string(u(), m) << "\n";
    }
    return 0;
  }

  int do_cqa() {
    LiteralSet q = parse_literal_set(u(), o_.query);
    CqaVerdict v;
    std::string cls = o_.cls;
    if (auto eta = std::get_if<AicProgram>(&inst_.program)) {
      v = cqa(inst_.db, *eta, repair_class(), q, limits_of(o_));
    } else {
      const auto& p = program_as<RevisionProgram>(
          inst_, "cqa needs an aic: or rev: program");
      v = cqa(inst_.db, p, revision_class(), q, limits_of(o_));
    }
    if (json()) {
      Json j;
      j["schema"] = 1;
      j["command"] = "cqa";
      j["class"] = cls;
      j["query"] = Json::array();
      for (auto l : q.elements()) j["query"].push_back(to_string(u(), l));
      j["status"] = status_name(v.status);
      j["complete"] = !v.interrupted;
      j["witness_count"] = v.witness_count;
      j["witnesses"] = Json::array();
      for (const auto& d : v.witnesses) j["witnesses"].push_back(to_strings(u(), d));
      out_ << j.dump() << "\n";
    } else {
      out_ << status_name(v.status) << "\n";
      out_ << "% repaired databases: " << v.witness_count << "\n";
      for (const auto& d : v.witnesses) out_ << "% " << to_string(u(), d) << "\n";
    }
    if (v.interrupted) {
      err_ << "error: enumeration budget exhausted, verdict is partial\n";
      return 1;
    }
    return 0;
  }

  int do_lattice() {
    Lattice l;
    if (auto eta = std::get_if<AicProgram>(&inst_.program))
      l = lattice(inst_.db, *eta, limits_of(o_));
    else
      l = lattice(inst_.db,
                  program_as<RevisionProgram>(inst_, "lattice needs an aic: or rev: program"),
                  limits_of(o_));
    if (json()) {
      Json j;
      j["schema"] = 1;
      j["command"] = "lattice";
      j["sizes"] = Json::object();
      for (const auto& [n, k] : l.sizes) j["sizes"][n] = k;
      if (o_.verify) {
        j["relations"] = Json::array();
        for (const auto& r : l.relations)
          j["relations"].push_back({{"relation", r.name}, {"holds", r.holds}});
      }
      out_ << j.dump() << "\n";
    } else {
      for (const auto& [n, k] : l.sizes) out_ << n << ": " << k << "\n";
      if (o_.verify)
        for (const auto& r : l.relations)
          out_ << (r.holds ? "ok    " : "FAIL  ") << r.name << "\n";
    }
    return o_.verify && !l.all_hold() ? 1 : 0;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  Instance inst_{nullptr, {}, AicProgram(nullptr), {}};
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Database repair under active integrity constraints and "
               "revision programs"};
  app.name("aicrepair");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration");
  app.add_option("--max-atoms", o.max_atoms,
                 "Exhaustive enumeration bound (at most 20)");
  app.add_option("--max-candidates", o.max_candidates,
                 "Stop after this many candidates");
  app.add_option("--time-limit-ms", o.time_limit_ms,
                 "Stop enumerating after this many milliseconds");
  app.add_flag("--stats", o.stats, "Print enumeration statistics to stderr");

  auto file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Instance file, '-' for stdin")->required();
  };
  auto cls = [&](CLI::App* sub, bool required = true) {
    auto opt = sub->add_option("--class", o.cls, "Semantics");
    if (required) opt->required();
  };

  auto* repair = app.add_subcommand("repair", "Enumerate repairs of an aic: instance");
  file(repair);
  cls(repair);
  auto* revise = app.add_subcommand("revise", "Enumerate revisions of a rev: instance");
  file(revise);
  cls(revise);
  auto* check = app.add_subcommand("check", "Test one set against a semantics");
  file(check);
  cls(check);
  check->add_option("--set", o.set, "Update actions or revision literals")
      ->required();
  auto* translate = app.add_subcommand("translate", "Translate between aic: and rev:");
  file(translate);
  translate->add_option("--to", o.to, "Target formalism")
      ->required()
      ->check(CLI::IsMember({"aic", "rev"}));
  auto* normalize = app.add_subcommand("normalize", "Split disjunctive heads");
  file(normalize);
  auto* properize = app.add_subcommand("properize", "Make a rev: program proper");
  file(properize);
  auto* shift = app.add_subcommand("shift", "Shift an instance by a set of atoms");
  file(shift);
  shift->add_option("--by", o.by, "Atoms to shift by")->required();
  shift->add_flag("--verify", o.verify, "Check that every class is transported");
  auto* as = app.add_subcommand("answer-sets", "Answer sets of an lp: program");
  file(as);
  auto* cq = app.add_subcommand("cqa", "Consistent query answering");
  file(cq);
  cls(cq);
  cq->add_option("--query", o.query, "Conjunction of literals")->required();
  auto* lat = app.add_subcommand("lattice", "Sizes of all classes");
  file(lat);
  lat->add_flag("--verify", o.verify, "Check the inclusions between classes");

  std::vector<const char*> argv{"aicrepair"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Runner r(o, out, err);
    return r.run(app.get_subcommands().front()->get_name());
  } catch (const UniverseTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotNormalProgram& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotProperProgram& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotSimpleRule& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace aicrepair
