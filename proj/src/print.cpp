#include <algorithm>

#include "aicrepair/frontend.hpp"

namespace aicrepair {

namespace {

template <class Xs, class F>
std::string join(const Xs& xs, std::string_view sep, F&& f) {
  std::string out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out += sep;
    first = false;
    out += f(x);
  }
  return out;
}

auto namer(const Universe& u) {
  return [&u](const auto& x) { return to_string(u, x); };
}

std::string atoms_text(const Universe& u, const AtomSet& s) {
  return join(s.atoms(), ", ", [&](Atom a) { return u.name(a); });
}

// The universe a parser would infer from mentioned atoms: sorted names.
bool universe_implied(const Universe& u, const AtomSet& mentioned) {
  std::vector<std::string> names;
  mentioned.for_each([&](Atom a) { names.push_back(u.name(a)); });
  std::sort(names.begin(), names.end());
  return names == u.names();
}

template <class P>
std::string render(const Universe& u, const Database& db, const P& p,
                   std::string_view header) {
  AtomSet mentioned = db;
  for (const auto& r : p) mentioned |= r.atoms();
  std::string out;
  if (u.declared() || !universe_implied(u, mentioned))
    out += "universe: " + join(u.names(), ", ", [](const std::string& s) {
             return s;
           }) + ".\n";
  out += "db: " + atoms_text(u, db) + ".\n";
  out += std::string(header) + ":\n";
  for (const auto& r : p) out += print_rule(u, r) + "\n";
  return out;
}

}  // namespace

std::string print_rule(const Universe& u, const AicRule& r) {
  std::string body = join(r.body().elements(), ", ", namer(u));
  std::string head = r.head().empty()
                         ? "false"
                         : join(r.head().elements(), " | ", namer(u));
  return (body.empty() ? "" : body + " ") + "-> " + head + ".";
}

std::string print_rule(const Universe& u, const RevisionRule& r) {
  std::string head = r.head().empty()
                         ? "false"
                         : join(r.head().elements(), " | ", namer(u));
  std::string body = join(r.body().elements(), ", ", namer(u));
  return head + " <-" + (body.empty() ? "" : " " + body) + ".";
}

std::string print_rule(const Universe& u, const LpRule& r) {
  std::string head = r.head.empty()
                         ? "false"
                         : join(r.head.atoms(), " | ",
                                [&](Atom a) { return u.name(a); });
  std::string body =
      join(LiteralSet(r.pos, r.neg).elements(), ", ", namer(u));
  return head + " :-" + (body.empty() ? "" : " " + body) + ".";
}

std::string print_instance(const Universe& u, const Database& db,
                           const AicProgram& p) {
  return render(u, db, p, "aic");
}

std::string print_instance(const Universe& u, const Database& db,
                           const RevisionProgram& p) {
  return render(u, db, p, "rev");
}

std::string print_instance(const Universe& u, const Database& db,
                           const LogicProgram& p) {
  return render(u, db, p, "lp");
}

std::string print_instance(const Instance& inst) {
  return std::visit(
      [&](const auto& p) { return print_instance(*inst.universe, inst.db, p); },
      inst.program);
}

std::vector<std::string> to_strings(const Universe& u, const UpdateSet& s) {
  std::vector<std::string> out;
  for (auto a : s.elements()) out.push_back(to_string(u, a));
  return out;
}

std::vector<std::string> to_strings(const Universe& u, const RevisionSet& s) {
  std::vector<std::string> out;
  for (auto a : s.elements()) out.push_back(to_string(u, a));
  return out;
}

std::vector<std::string> to_strings(const Universe& u, const AtomSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Atom a) { out.push_back(u.name(a)); });
  return out;
}

}  // namespace aicrepair
