#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "supernil/catalog.hpp"
#include "supernil/corpus.hpp"
#include "supernil/errors.hpp"
#include "supernil/invariants.hpp"
#include "supernil/io.hpp"
#include "supernil/param_algebra.hpp"
#include "supernil/superalgebra.hpp"

namespace supernil::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

void emit(std::ostream& out, const ordered_json& report) { out << report.dump(2) << "\n"; }

ordered_json blocks_json(const NilpotentProfile& p) {
  ordered_json arr = ordered_json::array();
  for (unsigned b : p.blocks) arr.push_back(b);
  return arr;
}

std::string blocks_text(const NilpotentProfile& p) {
  std::string out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.blocks[i]);
  }
  return out;
}

ordered_json violations_json(const std::vector<IdentityViolation>& violations) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : violations) {
    arr.push_back(ordered_json{{"x", v.x.name()},
                               {"y", v.y.name()},
                               {"z", v.z.name()},
                               {"residual", v.residual.str()}});
  }
  return arr;
}

/// Key=value pairs separated by commas, e.g. "a4=1/2,theta=z^2".
std::vector<std::pair<std::string, std::string>> split_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("parameter item '" + item + "' is not of the form key=value");
    }
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

/// The catalog's canonical odd dimension, for families where --m is redundant.
unsigned resolve_m(const std::string& name, unsigned n, bool has_m, unsigned m) {
  if (has_m) return m;
  if (name == "Thm21-even") return 0;
  if (name == "Leibn1") return 1;
  if (name == "Leib22-a" || name == "Leib22-b") return 2;
  if (name == "L" || name == "G") return n - 1;
  if (name == "M" || name == "H") return n;
  throw DomainError("family " + name + " needs an explicit --m");
}

int do_check(std::ostream& out, const std::string& file) {
  const SuperAlgebra a = load_algebra(file);
  const std::vector<IdentityViolation> violations = a.check_superidentity();
  emit(out, ordered_json{{"command", "check"},
                         {"file", file},
                         {"violations", violations_json(violations)}});
  return violations.empty() ? 0 : 1;
}

int do_series(std::ostream& out, const std::string& file) {
  const SeriesReport report = central_series(load_algebra(file));
  ordered_json j{{"command", "series"}, {"file", file}, {"dims", report.dims()},
                 {"nilpotent", report.nilpotent}};
  if (report.nilpotent) j["nilindex"] = report.nilindex;
  emit(out, j);
  return 0;
}

int do_nilindex(std::ostream& out, const std::string& file) {
  const SeriesReport report = central_series(load_algebra(file));
  ordered_json j{{"command", "nilindex"}, {"file", file}, {"nilpotent", report.nilpotent}};
  if (report.nilpotent) j["nilindex"] = report.nilindex;
  emit(out, j);
  return report.nilpotent ? 0 : 1;
}

int do_charseq(std::ostream& out, const std::string& file, const std::string& strategy,
               std::uint64_t seed, unsigned samples) {
  static const std::map<std::string, CharSeqStrategy> kStrategies = {
      {"basis", CharSeqStrategy::BasisCandidates},
      {"random", CharSeqStrategy::SeededRandom},
      {"combined", CharSeqStrategy::Combined}};
  CharSeqOptions opts;
  opts.strategy = kStrategies.at(strategy);
  opts.seed = seed;
  opts.random_candidates = samples;
  const CharSequence cs = char_sequence(load_algebra(file), opts);
  emit(out, ordered_json{{"command", "charseq"},
                         {"file", file},
                         {"strategy", strategy},
                         {"seed", seed},
                         {"samples", samples},
                         {"c0", blocks_json(cs.c0)},
                         {"c1", blocks_json(cs.c1)},
                         {"text", "(" + blocks_text(cs.c0) + " | " + blocks_text(cs.c1) + ")"},
                         {"witness0", cs.witness0.str()},
                         {"witness1", cs.witness1.str()}});
  return 0;
}

int do_gradation(std::ostream& out, const std::string& file) {
  const GradedAlgebra g = natural_gradation(load_algebra(file));
  emit(out, ordered_json{{"command", "gradation"},
                         {"file", file},
                         {"layers", g.layers},
                         {"layerOfEven", g.layer_of_even},
                         {"layerOfOdd", g.layer_of_odd}});
  return 0;
}

int do_annihilator(std::ostream& out, const std::string& file) {
  const SuperAlgebra a = load_algebra(file);
  emit(out, ordered_json{{"command", "annihilator"},
                         {"file", file},
                         {"dim", a.right_annihilator().dim()},
                         {"total", a.even_dim() + a.odd_dim()}});
  return 0;
}

int do_family(std::ostream& out, const std::string& name, unsigned n, unsigned m,
              const std::string& params_text, unsigned conductor, bool has_conductor,
              bool no_verify) {
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw ParseError("unknown family '" + name + "'");
  }
  const auto pairs = split_pairs(params_text);
  if (!has_conductor) {
    for (const auto& [key, value] : pairs) {
      if (value.find('z') != std::string::npos) {
        throw ParseError("parameter '" + key + "' uses the root z; pass --conductor");
      }
    }
  }
  FamilySpec spec{name, n, m, {}};
  for (const auto& [key, value] : pairs) {
    spec.params.emplace(key, Scalar::parse(value, conductor));
  }
  try {
    emit(out, ordered_json::parse(algebra_to_json(make_family(spec, !no_verify))));
  } catch (const DomainError& err) {
    emit(out, ordered_json{{"command", "family"}, {"error", err.what()}});
    return 1;
  }
  return 0;
}

int do_constraints(std::ostream& out, const std::string& name, unsigned n, unsigned m) {
  const ParamAlgebra a = make_param_family(name, n, m);
  const std::vector<Constraint> constraints = emit_constraints(a);
  ordered_json arr = ordered_json::array();
  for (const auto& c : constraints) {
    arr.push_back(ordered_json{{"x", c.x.name()},
                               {"y", c.y.name()},
                               {"z", c.z.name()},
                               {"coordinate", c.coordinate.name()},
                               {"poly", c.poly.str()}});
  }
  emit(out, ordered_json{{"command", "constraints"},
                         {"family", name},
                         {"n", n},
                         {"m", m},
                         {"variables", a.variables()},
                         {"constraints", arr}});
  return constraints.empty() ? 0 : 1;
}

int do_corpus_verify(std::ostream& out, const std::string& theorem,
                     const std::string& config_text) {
  CorpusConfig config;
  for (const auto& [key, value] : split_pairs(config_text)) {
    unsigned long parsed = 0;
    try {
      parsed = std::stoul(value);
    } catch (const std::exception&) {
      throw ParseError("config value '" + value + "' for " + key + " is not an integer");
    }
    if (key == "max_n") {
      config.max_n = static_cast<unsigned>(parsed);
    } else if (key == "seed") {
      config.seed = parsed;
    } else if (key == "mutations") {
      config.mutation_count = static_cast<unsigned>(parsed);
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  const Corpus corpus = build_corpus(config);
  const TheoremReport report = verify_theorem(theorem, corpus);
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back(ordered_json{{"label", v.label}, {"details", v.details}});
  }
  emit(out, ordered_json{{"command", "corpus-verify"},
                         {"theoremId", report.theorem_id},
                         {"scope", report.scope},
                         {"config", ordered_json{{"max_n", config.max_n},
                                                 {"seed", config.seed},
                                                 {"mutations", config.mutation_count}}},
                         {"entries", corpus.entries.size()},
                         {"instancesChecked", report.instances_checked},
                         {"violations", violations}});
  return report.pass() ? 0 : 1;
}

int do_fingerprint(std::ostream& out, const std::string& file) {
  const Fingerprint fp = invariant_fingerprint(load_algebra(file));
  emit(out, ordered_json{{"command", "fingerprint"},
                         {"file", file},
                         {"seriesDims", fp.series_dims},
                         {"nilindex", fp.nilindex},
                         {"c0", blocks_json(fp.char_seq.c0)},
                         {"c1", blocks_json(fp.char_seq.c1)},
                         {"annihilatorDim", fp.annihilator_dim},
                         {"lie", fp.lie}});
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for nilpotent Leibniz superalgebras"};
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string params_text;
  std::string config_text;
  std::string strategy = "combined";
  std::uint64_t seed = 0;
  unsigned samples = 16;
  unsigned n = 0;
  unsigned m = 0;
  unsigned conductor = 1;
  bool no_verify = false;

  CLI::App* check = app.add_subcommand("check", "verify the defining identity of an algebra file");
  check->add_option("file", file)->required();

  CLI::App* series = app.add_subcommand("series", "descending central series dimensions");
  series->add_option("file", file)->required();

  CLI::App* nilindex = app.add_subcommand("nilindex", "nilindex of a nilpotent algebra file");
  nilindex->add_option("file", file)->required();

  CLI::App* charseq = app.add_subcommand("charseq", "characteristic sequence of an algebra file");
  charseq->add_option("file", file)->required();
  charseq->add_option("--strategy", strategy, "candidate strategy")
      ->check(CLI::IsMember({"basis", "random", "combined"}));
  charseq->add_option("--seed", seed, "seed for random candidates");
  charseq->add_option("--samples", samples, "number of random candidates");

  CLI::App* gradation = app.add_subcommand("gradation", "natural gradation layer dimensions");
  gradation->add_option("file", file)->required();

  CLI::App* annihilator = app.add_subcommand("annihilator", "right annihilator dimension");
  annihilator->add_option("file", file)->required();

  CLI::App* family = app.add_subcommand("family", "emit a catalog family as an algebra file");
  family->add_option("--name", name, "family name")->required();
  family->add_option("--n", n, "even dimension")->required();
  CLI::Option* family_m = family->add_option("--m", m, "odd dimension");
  family->add_option("--params", params_text, "parameter values, e.g. \"a4=1/2,theta=z^2\"");
  CLI::Option* family_conductor =
      family->add_option("--conductor", conductor, "cyclotomic conductor for the root z");
  family->add_flag("--no-verify", no_verify, "skip the defining-identity check");

  CLI::App* constraints =
      app.add_subcommand("constraints", "polynomial identity constraints of a parametric family");
  constraints->add_option("--name", name, "family name")->required();
  constraints->add_option("--n", n, "even dimension")->required();
  CLI::Option* constraints_m = constraints->add_option("--m", m, "odd dimension");

  CLI::App* corpus_verify =
      app.add_subcommand("corpus-verify", "check one theorem over the built-in corpus");
  corpus_verify->add_option("--theorem", name, "Thm2.1, Lemma3.2, Cor3.1, Thm3.3 or Eq1-adapted")
      ->required();
  corpus_verify->add_option("--config", config_text, "corpus config, e.g. \"max_n=5,seed=1,mutations=2\"");

  CLI::App* fingerprint = app.add_subcommand("fingerprint", "isomorphism-invariant summary");
  fingerprint->add_option("file", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << "run with --help for usage\n";
    return 2;
  }

  try {
    if (check->parsed()) return do_check(out, file);
    if (series->parsed()) return do_series(out, file);
    if (nilindex->parsed()) return do_nilindex(out, file);
    if (charseq->parsed()) return do_charseq(out, file, strategy, seed, samples);
    if (gradation->parsed()) return do_gradation(out, file);
    if (annihilator->parsed()) return do_annihilator(out, file);
    if (family->parsed()) {
      const unsigned resolved = resolve_m(name, n, family_m->count() > 0, m);
      return do_family(out, name, n, resolved, params_text, conductor,
                       family_conductor->count() > 0, no_verify);
    }
    if (constraints->parsed()) {
      return do_constraints(out, name, n, resolve_m(name, n, constraints_m->count() > 0, m));
    }
    if (corpus_verify->parsed()) return do_corpus_verify(out, name, config_text);
    if (fingerprint->parsed()) return do_fingerprint(out, file);
  } catch (const NotNilpotentError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no command selected\n";
  return 2;
}

}  // namespace supernil::cli
