// Command-line front end: parses generator files, dispatches the toolkit's
// operations and prints deterministic text (default) or JSON (--json).
// Exit codes: 0 success, 1 malformed input files, 2 precondition violations,
// 3 resource limits or unfinished searches.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shortwords/shortwords.hpp"

namespace sw = shortwords;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 1;
constexpr int exit_precondition = 2;
constexpr int exit_limit = 3;

struct Settings {
  std::string group_file;
  std::string target_file;
  std::string subgroup_file;
  std::string exclude_file;
  std::string two_step_file;
  std::string element_text;
  std::vector<long long> order_restriction;
  long long limit = 0;  // word-tree levels
  std::uint64_t element_limit = sw::default_element_limit;
  bool conjugate = false;
  bool no_reduce = false;
  bool with_words = false;
  bool as_json = false;
  bool verbose = false;
  long long seed = 0;

  std::ostream* trace() const { return verbose ? &std::cerr : nullptr; }
};

void emit(const Settings& s, const json& record, const std::string& text) {
  if (s.as_json)
    std::cout << record.dump(2) << "\n";
  else
    std::cout << text;
}

json words_to_json(const std::vector<sw::PoweredWord>& words,
                   const std::vector<std::string>& rendered) {
  json out = json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    json w;
    w["indices"] = words[i].word;
    w["exponent"] = words[i].exponent;
    w["rendered"] = rendered[i];
    out.push_back(std::move(w));
  }
  return out;
}

const char* status_name(sw::SearchStatus s) {
  switch (s) {
    case sw::SearchStatus::complete: return "complete";
    case sw::SearchStatus::unfinished: return "unfinished";
    case sw::SearchStatus::single_generator_exhausted:
      return "single_generator_exhausted";
  }
  return "unknown";
}

const char* status_name(sw::LookupStatus s) {
  switch (s) {
    case sw::LookupStatus::found_exact: return "found";
    case sw::LookupStatus::found_conjugate: return "found_conjugate";
    case sw::LookupStatus::unfinished: return "unfinished";
  }
  return "unknown";
}

json subgroup_to_json(const sw::PermGroup& g) {
  json out;
  out["order"] = g.order();
  json gens = json::array();
  for (const auto& p : g.generators().gens) gens.push_back(sw::format_perm(p));
  out["generators"] = std::move(gens);
  return out;
}

std::string subgroup_to_text(const sw::PermGroup& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (const auto& p : g.generators().gens) out += sw::format_perm(p) + "\n";
  return out;
}

int run_order(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  json record;
  record["order"] = g.order();
  emit(s, record, std::to_string(g.order()) + "\n");
  return exit_ok;
}

int run_shortgens(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup target = [&] {
    auto t = sw::load_generator_file(s.target_file);
    return sw::PermGroup::from_perms(t.degree, t.gens);
  }();

  sw::ShortGensOptions opts;
  opts.reduce_first = !s.no_reduce;
  opts.reduce_more = !s.no_reduce;
  opts.order_restriction = s.order_restriction;
  opts.iteration_limit = s.limit;
  opts.element_limit = s.element_limit;
  opts.trace = s.trace();
  if (!s.exclude_file.empty()) {
    auto e = sw::load_generator_file(s.exclude_file);
    opts.exclude = sw::PermGroup::from_perms(e.degree, e.gens);
  }

  json record;
  std::string text;
  sw::SearchStatus status;
  if (!s.two_step_file.empty()) {
    auto m = sw::load_generator_file(s.two_step_file);
    sw::PermGroup mid = sw::PermGroup::from_perms(m.degree, m.gens);
    auto res = sw::two_step_get_short_gens(gens, mid, target, opts);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    status = res.status;
    record["status"] = status_name(status);
    record["step1"] = words_to_json(res.step1.powered_words, res.step1.rendered);
    record["nested"] = words_to_json(res.nested.powered_words, res.nested.rendered);
    record["words"] = words_to_json(res.flattened, res.rendered);
    for (const auto& r : res.rendered) text += r + "\n";
  } else {
    auto res = sw::get_short_gens(gens, target, opts);
    status = res.status;
    record["status"] = status_name(status);
    record["kept_generators"] = res.kept_generator_indices;
    record["words"] = words_to_json(res.powered_words, res.rendered);
    for (const auto& r : res.rendered) text += r + "\n";
  }
  emit(s, record, text);
  if (status != sw::SearchStatus::complete) {
    std::cerr << "couldn't generate the target within the given limits ("
              << status_name(status) << ")\n";
    return exit_limit;
  }
  return exit_ok;
}

int run_lookup(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::Perm x = sw::parse_perm(s.element_text, gens.degree);

  sw::LookupOptions opts;
  opts.conjugate_check = s.conjugate;
  opts.reduce_first = !s.no_reduce;
  opts.iteration_limit = s.limit;
  opts.element_limit = s.element_limit;
  opts.trace = s.trace();

  json record;
  std::string text;
  sw::LookupStatus status;
  if (!s.two_step_file.empty()) {
    auto m = sw::load_generator_file(s.two_step_file);
    sw::PermGroup mid = sw::PermGroup::from_perms(m.degree, m.gens);
    auto res = sw::two_step_lookup_word(gens, mid, x, opts);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    status = res.status;
    record["status"] = status_name(status);
    if (status != sw::LookupStatus::unfinished) {
      record["indices"] = res.flattened.word;
      record["exponent"] = res.flattened.exponent;
      record["rendered"] = res.rendered;
      text = res.rendered + "\n";
    }
  } else {
    auto res = sw::lookup_word(gens, x, opts);
    status = res.status;
    record["status"] = status_name(status);
    if (status != sw::LookupStatus::unfinished) {
      record["indices"] = res.word.word;
      record["exponent"] = res.word.exponent;
      record["rendered"] = res.rendered;
      text = res.rendered + "\n";
    }
  }
  emit(s, record, text);
  if (status == sw::LookupStatus::unfinished) {
    std::cerr << "couldn't find a word within the given limits\n";
    return exit_limit;
  }
  return exit_ok;
}

int run_reduce(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  std::pair<std::vector<int>, sw::GeneratorSet> reduced = [&] {
    if (!s.target_file.empty()) {
      auto t = sw::load_generator_file(s.target_file);
      return sw::reduce_gens_for_group(
          gens, sw::PermGroup::from_perms(t.degree, t.gens));
    }
    if (s.element_text.empty())
      throw sw::PreconditionError(sw::errc::element_not_contained,
                                  "reduce needs --target or --element");
    return sw::reduce_gens_for_elt(gens,
                                   sw::parse_perm(s.element_text, gens.degree));
  }();

  json record;
  record["kept_indices"] = reduced.first;
  record["kept_names"] = reduced.second.names;
  std::string text;
  for (const auto& n : reduced.second.names) text += n + "\n";
  emit(s, record, text);
  return exit_ok;
}

int run_classes(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  sw::ClassTable table = sw::conjugacy_classes(g, s.element_limit);

  std::vector<std::string> rep_words;
  if (s.with_words) {
    sw::LookupOptions opts;
    opts.conjugate_check = true;
    opts.element_limit = s.element_limit;
    opts.trace = s.trace();
    for (const auto& c : table.classes())
      rep_words.push_back(sw::lookup_word(gens, c.representative, opts).rendered);
  }

  emit(s, sw::class_table_to_json(table, rep_words),
       sw::format_class_table(table, rep_words));
  return exit_ok;
}

int run_cosetaction(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  auto u = sw::load_generator_file(s.subgroup_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  sw::PermGroup sub = sw::PermGroup::from_perms(u.degree, u.gens);
  auto res = sw::coset_action(g, sub, s.element_limit);

  json record;
  record["degree"] = res.image.degree();
  record["image_order"] = res.image.order();
  record["kernel_order"] = res.kernel_order;
  record["faithful"] = res.kernel_order == 1;
  std::string text = "degree " + std::to_string(res.image.degree()) + "\n" +
                     "image_order " + std::to_string(res.image.order()) + "\n" +
                     "kernel_order " + std::to_string(res.kernel_order) + "\n" +
                     "faithful " + (res.kernel_order == 1 ? "true" : "false") +
                     "\n";
  emit(s, record, text);
  return exit_ok;
}

int run_sylow2(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  sw::PermGroup p = sw::sylow2(g, s.element_limit);
  emit(s, subgroup_to_json(p), subgroup_to_text(p));
  return exit_ok;
}

int run_center(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  sw::PermGroup z = sw::center(g, s.element_limit);
  emit(s, subgroup_to_json(z), subgroup_to_text(z));
  return exit_ok;
}

int run_centralizer(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  sw::Perm x = sw::parse_perm(s.element_text, gens.degree);
  sw::PermGroup c = sw::centralizer(g, x, s.element_limit);
  emit(s, subgroup_to_json(c), subgroup_to_text(c));
  return exit_ok;
}

int run_normalizer(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  auto h = sw::load_generator_file(s.subgroup_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  sw::PermGroup sub = sw::PermGroup::from_perms(h.degree, h.gens);
  sw::PermGroup n = sw::normalizer(g, sub, s.element_limit);
  emit(s, subgroup_to_json(n), subgroup_to_text(n));
  return exit_ok;
}

int run_twocentral(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  sw::ClassTable table = sw::conjugacy_classes(g, s.element_limit);
  auto indices = sw::two_central_involutions(table);
  auto labels = table.labels();

  json record;
  record["group_order"] = table.group_order();
  json classes = json::array();
  std::string text = "order " + std::to_string(table.group_order()) + "\n";
  for (int i : indices) {
    const auto& c = table.classes()[static_cast<std::size_t>(i)];
    json jc;
    jc["label"] = labels[static_cast<std::size_t>(i)];
    jc["representative"] = sw::format_perm(c.representative);
    jc["size"] = c.size;
    jc["centralizer_order"] = c.centralizer_order;
    classes.push_back(std::move(jc));
    text += labels[static_cast<std::size_t>(i)] + " | " +
            sw::format_perm(c.representative) + " | " +
            std::to_string(c.centralizer_order) + "\n";
  }
  record["classes"] = std::move(classes);
  emit(s, record, text);
  return exit_ok;
}

int run_maxelab(const Settings& s) {
  auto gens = sw::load_generator_file(s.group_file);
  sw::PermGroup g = sw::PermGroup::from_perms(gens.degree, gens.gens);
  auto subs = sw::maximal_elementary_abelian_normals(g, s.element_limit);

  json record;
  json list = json::array();
  std::string text;
  for (const auto& w : subs) {
    list.push_back(subgroup_to_json(w));
    text += "order " + std::to_string(w.order()) + ":";
    if (w.generators().gens.empty()) {
      text += " ()";
    } else {
      for (std::size_t i = 0; i < w.generators().gens.size(); ++i)
        text += std::string(i ? "," : "") + " " +
                sw::format_perm(w.generators().gens[i]);
    }
    text += "\n";
  }
  record["subgroups"] = std::move(list);
  emit(s, record, text);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation-group short-word toolkit"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* cmd, bool needs_group = true) {
    if (needs_group)
      cmd->add_option("group", s.group_file, "generator file of the cover group")
          ->required();
    cmd->add_flag("--json", s.as_json, "emit JSON instead of text");
    cmd->add_flag("--verbose", s.verbose, "progress chatter on stderr");
    cmd->add_option("--seed", s.seed,
                    "seed for randomized internals (reserved; every command "
                    "is deterministic)");
    cmd->add_option("--element-limit", s.element_limit,
                    "brute-force guard on enumerated elements / coset index");
  };

  int (*runner)(const Settings&) = nullptr;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Settings&)) {
    cmd->callback([&runner, fn] { runner = fn; });
  };

  auto* order = app.add_subcommand("order", "order of the generated group");
  add_common(order);
  bind(order, run_order);

  auto* shortgens =
      app.add_subcommand("shortgens", "short-word generating set for a subgroup");
  add_common(shortgens);
  shortgens->add_option("--target", s.target_file, "generator file of the target")
      ->required();
  shortgens->add_option("--exclude", s.exclude_file,
                        "subgroup assumed already available");
  shortgens->add_option("--order-restriction", s.order_restriction,
                        "only adjoin elements of these orders")
      ->delimiter(',');
  shortgens->add_option("--limit", s.limit, "word-tree level limit (0 = none)");
  shortgens->add_flag("--no-reduce", s.no_reduce,
                      "skip generator reduction and the post-hoc shrink");
  shortgens->add_option("--two-step", s.two_step_file,
                        "route the search through this intermediate subgroup");
  bind(shortgens, run_shortgens);

  auto* lookup = app.add_subcommand("lookup", "short word for an element");
  add_common(lookup);
  lookup->add_option("--element", s.element_text, "element in cycle notation")
      ->required();
  lookup->add_flag("--conjugate", s.conjugate,
                   "accept words conjugate to the element");
  lookup->add_option("--limit", s.limit, "word-tree level limit (0 = none)");
  lookup->add_flag("--no-reduce", s.no_reduce, "skip generator reduction");
  lookup->add_option("--two-step", s.two_step_file,
                     "route the search through this intermediate subgroup");
  bind(lookup, run_lookup);

  auto* reduce = app.add_subcommand("reduce", "drop redundant generators");
  add_common(reduce);
  reduce->add_option("--target", s.target_file, "subgroup that must stay covered");
  reduce->add_option("--element", s.element_text, "element that must stay covered");
  bind(reduce, run_reduce);

  auto* classes = app.add_subcommand("classes", "conjugacy classes and power maps");
  add_common(classes);
  classes->add_flag("--words", s.with_words,
                    "find word representatives (lookup up to conjugacy)");
  bind(classes, run_classes);

  auto* cosetaction =
      app.add_subcommand("cosetaction", "action on the cosets of a subgroup");
  add_common(cosetaction);
  cosetaction->add_option("--subgroup", s.subgroup_file, "generator file of U")
      ->required();
  bind(cosetaction, run_cosetaction);

  auto* sylow = app.add_subcommand("sylow2", "a Sylow 2-subgroup");
  add_common(sylow);
  bind(sylow, run_sylow2);

  auto* center_cmd = app.add_subcommand("center", "center of the group");
  add_common(center_cmd);
  bind(center_cmd, run_center);

  auto* centralizer_cmd =
      app.add_subcommand("centralizer", "centralizer of an element");
  add_common(centralizer_cmd);
  centralizer_cmd
      ->add_option("--element", s.element_text, "element in cycle notation")
      ->required();
  bind(centralizer_cmd, run_centralizer);

  auto* normalizer_cmd =
      app.add_subcommand("normalizer", "normalizer of a subgroup");
  add_common(normalizer_cmd);
  normalizer_cmd->add_option("--subgroup", s.subgroup_file, "generator file of H")
      ->required();
  bind(normalizer_cmd, run_normalizer);

  auto* twocentral =
      app.add_subcommand("twocentral", "classes of 2-central involutions");
  add_common(twocentral);
  bind(twocentral, run_twocentral);

  auto* maxelab = app.add_subcommand(
      "maxelab", "maximal elementary abelian normal subgroups of a 2-group");
  add_common(maxelab);
  bind(maxelab, run_maxelab);

  try {
    app.parse(argc, argv);
    return runner ? runner(s) : exit_precondition;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_parse;
  } catch (const sw::ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0)
      std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << " [" << sw::errc_name(e.code()) << "]\n";
    return exit_parse;
  } catch (const sw::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << " ["
              << sw::errc_name(e.code()) << "]\n";
    return exit_limit;
  } catch (const sw::Error& e) {
    std::cerr << "error: " << e.what() << " [" << sw::errc_name(e.code())
              << "]\n";
    return exit_precondition;
  }
}
