#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "rrs/rrs.hpp"

namespace rrs::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

json envelope(std::string_view command) {
  json j;
  j["tool"] = "rrs";
  j["version"] = std::string(version());
  j["command"] = std::string(command);
  return j;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": malformed JSON: " + e.what());
  }
}

json elements(const std::vector<Element>& v) {
  json a = json::array();
  for (Element e : v) a.push_back(static_cast<int>(e));
  return a;
}

json table(const OpTable& t) {
  json a = json::array();
  for (Element e : t.entries()) a.push_back(static_cast<int>(e));
  return a;
}

std::vector<Element> parse_set(const std::string& text, std::size_t n) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || static_cast<std::size_t>(v) >= n) {
      throw Error("element '" + item + "' outside the carrier");
    }
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

/// The directoid to work with: the model's own join table, or the k-th
/// quasi-directoid built from a pre-ordered system.
QuasiDirectoid pick_directoid(const Model& m, std::size_t k) {
  if (m.join) return QuasiDirectoid(m);
  const auto all = build_quasi_directoids(m);
  if (k >= all.size()) {
    throw Error("directoid index " + std::to_string(k) + " out of range (" +
                std::to_string(all.size()) + " available)");
  }
  return all[k];
}

struct Counts {
  std::size_t holds = 0, fails = 0, skipped = 0;
};

Counts tally(const PropertyReport& r) {
  Counts c;
  for (const auto& item : r.items()) {
    switch (item.status) {
      case Status::holds:
        ++c.holds;
        break;
      case Status::fails:
        ++c.fails;
        break;
      case Status::not_applicable:
        ++c.skipped;
        break;
    }
  }
  return c;
}

void print_failures(const PropertyReport& r, std::ostream& err) {
  for (const auto& item : r.items()) {
    if (item.status != Status::fails) continue;
    err << "  fails: " << item.id;
    if (!item.witness.empty()) {
      err << " at (";
      for (std::size_t i = 0; i < item.witness.size(); ++i) {
        err << (i ? "," : "") << static_cast<int>(item.witness[i]);
      }
      err << ")";
    }
    if (!item.note.empty()) err << " [" << item.note << "]";
    err << "\n";
  }
}

struct Options {
  std::string input;
  std::string model_class;
  std::string property;
  std::string set;
  std::size_t size = 0;
  std::size_t max_size = 0;
  std::size_t min_size = 1;
  std::size_t directoid = 0;
  std::optional<int> zero;
  unsigned jobs = 1;
  bool labelled = false;
  bool count_only = false;
  bool collapse_ties = false;
};

Model with_zero_flag(Model m, const Options& o) {
  if (o.zero) {
    if (*o.zero < 0 || static_cast<std::size_t>(*o.zero) >= m.size) {
      throw Error("--zero " + std::to_string(*o.zero) + " outside the carrier");
    }
    m.zero = static_cast<Element>(*o.zero);
  }
  return m;
}

Model load_input(const Options& o) { return with_zero_flag(load_model(o.input), o); }


int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const json raw = read_json(o.input);
  const Model m = with_zero_flag(model_from_json(raw), o);
  std::string cls = o.model_class;
  if (cls.empty()) cls = raw.contains("class") ? raw.at("class").get<std::string>() : "rrs";
  const ModelClass c = parse_model_class(cls);
  const PropertyReport r = class_report(m, c);
  const bool valid = r.all_hold();
  json j = envelope("validate");
  j["input"] = o.input;
  j["class"] = std::string(to_string(c));
  j["valid"] = valid;
  j["report"] = to_json(r);
  out << j.dump(2) << "\n";
  err << o.input << ": " << (valid ? "valid " : "not a valid ") << to_string(c) << "\n";
  print_failures(r, err);
  return valid ? kOk : kFound;
}

int cmd_props(const Options& o, std::ostream& out, std::ostream& err) {
  const Model m = load_input(o);
  const PropertyReport r = run_all_statements(m);
  const Counts c = tally(r);
  json j = envelope("props");
  j["input"] = o.input;
  j["report"] = to_json(r);
  j["summary"] = {{"holds", c.holds}, {"fails", c.fails}, {"not_applicable", c.skipped}};
  out << j.dump(2) << "\n";
  err << o.input << ": " << c.holds << " hold, " << c.fails << " fail, " << c.skipped
      << " not applicable\n";
  print_failures(r, err);
  return c.fails == 0 ? kOk : kFound;
}

int cmd_directoids(const Options& o, std::ostream& out, std::ostream& err) {
  const Model m = load_input(o);
  const auto qs = build_quasi_directoids(m);
  json list = json::array();
  for (const auto& q : qs) {
    list.push_back({{"join", table(q.join())},
                    {"residuated", is_residuated_quasi_directoid(q).all_hold()}});
  }
  json j = envelope("directoids");
  j["input"] = o.input;
  j["count"] = qs.size();
  j["directoids"] = list;
  out << j.dump(2) << "\n";
  err << o.input << ": " << qs.size() << " quasi-directoid(s)\n";
  return kOk;
}

int cmd_induce(const Options& o, std::ostream& out, std::ostream& err) {
  const Model m = load_input(o);
  const QuasiDirectoid q = pick_directoid(m, o.directoid);
  const Model induced = induced_system(q);
  json j = envelope("induce");
  j["input"] = o.input;
  j["model"] = to_json(induced);
  j["preordered_rrs"] = is_preordered_rrs(induced);
  out << j.dump(2) << "\n";
  err << o.input << ": induced system of size " << induced.size << "\n";
  return kOk;
}

int cmd_quotient(const Options& o, std::ostream& out, std::ostream& err) {
  const Model m = load_input(o);
  const QuasiDirectoid q = pick_directoid(m, o.directoid);
  const Model sys = induced_system(q);
  const QuasiDirectoid qs(sys);
  const PropertyReport congruence = is_theta_congruence(qs);
  const ThetaPartition p = theta(sys);
  json classes = json::array();
  for (const auto& cls : p.classes()) classes.push_back(elements(cls));

  json j = envelope("quotient");
  j["input"] = o.input;
  j["theta"] = classes;
  j["classes"] = json(p.class_of);
  j["congruence"] = to_json(congruence);
  if (congruence.status("theta.join_compatible") != Status::holds) {
    j["quotient"] = nullptr;
    j["is_pocrim"] = false;
    out << j.dump(2) << "\n";
    err << o.input << ": theta is not a congruence of the join; no quotient\n";
    return kFound;
  }
  const Model qm = quotient(qs, p);
  const PropertyReport pocrim = is_pocrim(qm);
  j["quotient"] = to_json(qm);
  j["pocrim"] = to_json(pocrim);
  j["is_pocrim"] = pocrim.all_hold();
  out << j.dump(2) << "\n";
  err << o.input << ": " << p.count << " theta class(es); quotient "
      << (pocrim.all_hold() ? "is" : "is not") << " a pocrim\n";
  print_failures(pocrim, err);
  return pocrim.all_hold() ? kOk : kFound;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  spec.size = o.size;
  spec.model_class = parse_model_class(o.model_class);
  spec.up_to_iso = !o.labelled;
  const auto start = std::chrono::steady_clock::now();
  std::size_t count = 0;
  if (o.count_only) {
    count = count_models(spec, {o.jobs, std::nullopt, o.collapse_ties});
  } else {
    for_each_model(
        spec,
        [&](const Model& m) {
          out << to_json(m).dump() << "\n";
          ++count;
          return true;
        },
        {o.jobs, std::nullopt, o.collapse_ties});
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  json summary;
  summary["class"] = std::string(to_string(spec.model_class));
  summary["size"] = spec.size;
  summary["count"] = count;
  summary["elapsed_ms"] = ms;
  out << summary.dump() << "\n";
  err << count << " model(s) of class " << to_string(spec.model_class) << " at size " << spec.size
      << (spec.up_to_iso ? " up to isomorphism" : "") << "\n";
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  spec.size = o.max_size;
  spec.model_class = parse_model_class(o.model_class);
  spec.up_to_iso = !o.labelled;
  spec.property = o.property;

  json vars = json::array();
  if (const StatementInfo* s = find_statement(o.property)) {
    std::stringstream ss{std::string(s->variables)};
    std::string v;
    while (std::getline(ss, v, ',')) vars.push_back(v);
  } else {
    const Property parsed = Property::parse(o.property);
    for (char c : parsed.variables()) vars.push_back(std::string(1, c));
  }

  const auto found = counterexample_search(spec, {o.jobs, o.min_size, std::nullopt});
  json j = envelope("search");
  j["class"] = std::string(to_string(spec.model_class));
  j["property"] = o.property;
  j["min_size"] = o.min_size;
  j["max_size"] = o.max_size;
  j["up_to_iso"] = spec.up_to_iso;
  j["found"] = found.has_value();
  if (found) {
    j["counterexample"] = {{"model", to_json(found->model)},
                           {"variables", vars},
                           {"witness", elements(found->witness)}};
  } else {
    j["counterexample"] = nullptr;
  }
  out << j.dump(2) << "\n";
  if (found) {
    err << "counterexample of size " << found->model.size << " to '" << o.property << "'\n";
  } else {
    err << "no counterexample to '" << o.property << "' up to size " << o.max_size << "\n";
  }
  return found ? kFound : kOk;
}

int cmd_galois(const Options& o, std::ostream& out, std::ostream& err) {
  const BinRel r = load_relation(o.input);
  const std::size_t n = r.size();
  json j = envelope("galois");
  j["input"] = o.input;
  const bool polarity = is_polarity_pair(r);
  j["polarity"] = polarity;
  if (!o.set.empty()) {
    const SubsetMask x = SubsetMask::of(n, parse_set(o.set, n));
    j["set"] = to_json(x);
    j["star"] = to_json(star(r, x));
    j["dagger"] = to_json(dagger(r, x));
  }
  // Closed sets of the closure X -> dagger(star(X)), in subset order.
  json closed = json::array();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    SubsetMask x(n);
    for (Element e = 0; e < n; ++e) {
      if (((bits >> e) & 1U) != 0) x.insert(e);
    }
    if (dagger(r, star(r, x)) == x) closed.push_back(to_json(x));
  }
  j["closed_sets"] = closed;
  out << j.dump(2) << "\n";
  err << o.input << ": polarity pair " << (polarity ? "verified" : "FAILED") << ", "
      << closed.size() << " closed set(s)\n";
  return polarity ? kOk : kFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model workbench for residuated relational systems", "rrs"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  Options o;

  const std::string classes = [] {
    std::string s;
    for (ModelClass c : all_model_classes()) s += (s.empty() ? "" : ", ") + std::string(to_string(c));
    return s;
  }();

  auto* validate = app.add_subcommand("validate", "Check a model against its class axioms");
  validate->add_option("model", o.input, "Model JSON file")->required();
  validate->add_option("--zero", o.zero, "Designate the constant 0 when the file has none");
  validate->add_option("--class", o.model_class,
                       "Class to check (default: the file's \"class\" field, else rrs): " + classes);

  auto* props = app.add_subcommand("props", "Run every applicable statement checker");
  props->add_option("model", o.input, "Model JSON file")->required();
  props->add_option("--zero", o.zero, "Designate the constant 0 when the file has none");

  auto* directoids = app.add_subcommand("directoids", "List the quasi-directoids of a pre-ordered system");
  directoids->add_option("model", o.input, "Model JSON file")->required();
  directoids->add_option("--zero", o.zero, "Designate the constant 0 when the file has none");

  auto* induce = app.add_subcommand("induce", "Model induced by a residuated quasi-directoid");
  induce->add_option("model", o.input, "Model JSON file")->required();
  induce->add_option("--zero", o.zero, "Designate the constant 0 when the file has none");
  induce->add_option("--directoid", o.directoid, "Index of the built directoid when the model has no join");

  auto* quot = app.add_subcommand("quotient", "Quotient by theta and the pocrim verdict");
  quot->add_option("model", o.input, "Model JSON file")->required();
  quot->add_option("--zero", o.zero, "Designate the constant 0 when the file has none");
  quot->add_option("--directoid", o.directoid, "Index of the built directoid when the model has no join");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every model of a class at one size");
  enumerate_cmd->add_option("--class", o.model_class, classes)->required();
  enumerate_cmd->add_option("--size", o.size, "Carrier size")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--labelled", o.labelled, "Emit every labelled model, not one per isomorphism class");
  enumerate_cmd->add_flag("--count", o.count_only, "Print only the summary record");
  enumerate_cmd->add_flag("--collapse-ties", o.collapse_ties,
                          "Keep only the least residuum where several are admissible");
  enumerate_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Smallest model of a class violating a property");
  search->add_option("--class", o.model_class, classes)->required();
  auto* negate = search->add_option("--negate,--property", o.property,
                                    "Statement id or identity, e.g. \"(x|y)|x = x|y\"");
  negate->required();
  search->add_option("--max-size", o.max_size, "Largest carrier size")->required()->check(CLI::PositiveNumber);
  search->add_option("--min-size", o.min_size, "Smallest carrier size")->check(CLI::PositiveNumber);
  search->add_flag("--labelled", o.labelled, "Search labelled models, not isomorphism classes");
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* galois = app.add_subcommand("galois", "Polarity utilities on a bare relation");
  galois->add_option("relation", o.input, "JSON file with \"size\" and \"rel\"")->required();
  galois->add_option("--set", o.set, "Comma-separated subset for star and dagger");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream diag;
    const int code = app.exit(e, out, diag);
    err << diag.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*props) return cmd_props(o, out, err);
    if (*directoids) return cmd_directoids(o, out, err);
    if (*induce) return cmd_induce(o, out, err);
    if (*quot) return cmd_quotient(o, out, err);
    if (*enumerate_cmd) return cmd_enumerate(o, out, err);
    if (*search) return cmd_search(o, out, err);
    if (*galois) return cmd_galois(o, out, err);
  } catch (const std::exception& e) {
    err << "rrs: error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rrs::cli
