#include "chaincov/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "chaincov/cover.hpp"
#include "chaincov/generators.hpp"
#include "chaincov/ideal_embed.hpp"
#include "chaincov/incgraph.hpp"
#include "chaincov/patterns.hpp"
#include "chaincov/poset_io.hpp"
#include "chaincov/reduction.hpp"
#include "chaincov/selftest.hpp"
#include "chaincov/symbolic.hpp"

namespace chaincov::cli {

namespace {

using nlohmann::json;

json envelope(const std::string& verb) { return json{{"schema", 1}, {"verb", verb}}; }

void print_indices(std::ostream& out, const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << '\n';
}

void print_labeled(std::ostream& out, const char* label, const std::vector<std::size_t>& v) {
  out << label;
  for (auto x : v) out << ' ' << x;
  out << '\n';
}

LabeledPoset load(const std::string& path, std::istream& in) {
  if (path == "-") return read_poset(in);
  return read_poset_file(path);
}

std::string search_status(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not_found";
    case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

int exit_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return success;
    case SearchStatus::not_found: return negative;
    case SearchStatus::unknown: return unknown;
  }
  return input_error;
}

Poset parse_part(const std::string& spec, std::istream& in) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto kind = spec.substr(0, colon);
    const auto size = static_cast<std::size_t>(std::stoull(spec.substr(colon + 1)));
    if (kind == "grid") return grid_upper(size).poset;
    if (kind == "chain") return chain(size);
    if (kind == "antichain") return antichain(size);
  }
  return load(spec, in).poset;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain covers, antichains and grid embeddings of finite posets"};
  app.name("chaincov");
  app.require_subcommand(1);

  bool as_json = false;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Machine-readable output"); };

  std::string file;
  std::size_t x = 0, y = 0;

  auto* cov_cmd = app.add_subcommand("cov", "Chain covering number");
  bool witness = false;
  cov_cmd->add_option("file", file, "Poset file, - for stdin")->required();
  cov_cmd->add_flag("--witness", witness, "Print the chains and an antichain certificate");
  add_json(cov_cmd);

  auto* antichain_cmd = app.add_subcommand("antichain", "Maximum antichain");
  antichain_cmd->add_option("file", file)->required();
  add_json(antichain_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "Incomparability components, bottom part first");
  decompose_cmd->add_option("file", file)->required();
  add_json(decompose_cmd);

  auto* dist_cmd = app.add_subcommand("dist", "Shortest incomparability path");
  dist_cmd->add_option("file", file)->required();
  dist_cmd->add_option("x", x)->required();
  dist_cmd->add_option("y", y)->required();
  add_json(dist_cmd);

  auto* metric_cmd = app.add_subcommand("check-metric", "Check the shortest-path lemma for x < y");
  metric_cmd->add_option("file", file)->required();
  metric_cmd->add_option("x", x)->required();
  metric_cmd->add_option("y", y)->required();
  add_json(metric_cmd);

  auto* find_cmd = app.add_subcommand("find-grid", "Search for an induced copy of grid_upper(k)");
  std::size_t k = 0;
  bool want_dual = false;
  std::optional<std::uint64_t> budget;
  find_cmd->add_option("file", file)->required();
  find_cmd->add_option("-k", k, "Grid size")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  find_cmd->add_flag("--dual", want_dual, "Search for the dual grid");
  find_cmd->add_option("--budget", budget, "Search-node limit");
  add_json(find_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Threshold reduction");
  std::size_t threshold = 0;
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("-t", threshold, "Threshold")->required();
  add_json(reduce_cmd);

  auto* ideal_cmd = app.add_subcommand("ideal-embed", "Embed grid_upper(m) from a chain of m ideals");
  std::string ideals_file;
  std::uint64_t ideal_budget = IdealEmbedOptions{}.budget;
  ideal_cmd->add_option("file", file)->required();
  ideal_cmd->add_option("--ideals", ideals_file, "One ideal per line")->required();
  ideal_cmd->add_option("--budget", ideal_budget, "Search-node limit");
  add_json(ideal_cmd);

  auto* sym_cmd = app.add_subcommand("sym-cov", "Chain covering number of a symbolic term");
  std::string text;
  sym_cmd->add_option("term", text)->required();
  add_json(sym_cmd);

  auto* obs_cmd = app.add_subcommand("obstructions", "Obstruction list of an uncountable cardinal");
  obs_cmd->add_option("cardinal", text)->required();
  add_json(obs_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a poset in text format");
  gen_cmd->require_subcommand(1);
  std::size_t gen_n = 0;
  double gen_p = 0.1;
  std::uint64_t gen_seed = 1;
  std::vector<std::string> gen_parts;
  auto* gen_grid = gen_cmd->add_subcommand("grid", "grid_upper(n) with coordinate labels");
  gen_grid->add_option("-n", gen_n)->required();
  auto* gen_chain = gen_cmd->add_subcommand("chain", "chain of n elements");
  gen_chain->add_option("-n", gen_n)->required();
  auto* gen_antichain = gen_cmd->add_subcommand("antichain", "antichain of n elements");
  gen_antichain->add_option("-n", gen_n)->required();
  auto* gen_random = gen_cmd->add_subcommand("random", "random order from index-ordered pairs");
  gen_random->add_option("-n", gen_n)->required();
  gen_random->add_option("-p", gen_p)->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", gen_seed);
  auto* gen_lexsum = gen_cmd->add_subcommand("lexsum", "lexicographic sum, bottom part first");
  gen_lexsum->add_option("parts", gen_parts, "grid:N, chain:N, antichain:N or a poset file")->required();

  auto* dot_cmd = app.add_subcommand("dot", "Hasse diagram in DOT");
  bool with_inc = false;
  dot_cmd->add_option("file", file)->required();
  dot_cmd->add_flag("--inc", with_inc, "Add incomparable pairs as dashed edges");

  auto* self_cmd = app.add_subcommand("selftest", "Run the invariant suite on random instances");
  SelftestOptions self_opts;
  self_cmd->add_option("--instances", self_opts.instances);
  self_cmd->add_option("-n", self_opts.elements);
  self_cmd->add_option("--seed", self_opts.seed);
  add_json(self_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::ParseError& e) {
    err << "chaincov: " << e.what() << '\n';
    return input_error;
  }

  try {
    if (cov_cmd->parsed()) {
      const auto p = load(file, in).poset;
      const auto c = min_chain_cover(p);
      if (as_json) {
        auto j = envelope("cov");
        j["width"] = c.width();
        if (witness) {
          j["chains"] = c.chains;
          j["certificate"] = c.certificate;
        }
        out << j.dump() << '\n';
      } else {
        out << c.width() << '\n';
        if (witness) {
          for (const auto& ch : c.chains) print_indices(out, ch);
          out << "certificate: ";
          print_indices(out, c.certificate);
        }
      }
      return success;
    }

    if (antichain_cmd->parsed()) {
      const auto a = max_antichain(load(file, in).poset);
      if (as_json) {
        auto j = envelope("antichain");
        j["size"] = a.size();
        j["antichain"] = a;
        out << j.dump() << '\n';
      } else {
        print_indices(out, a);
      }
      return success;
    }

    if (decompose_cmd->parsed()) {
      const auto d = inc_components(load(file, in).poset);
      if (as_json) {
        auto j = envelope("decompose");
        j["parts"] = d.parts;
        out << j.dump() << '\n';
      } else {
        for (const auto& part : d.parts) print_indices(out, part);
      }
      return success;
    }

    if (dist_cmd->parsed()) {
      const auto r = inc_distance_path(load(file, in).poset, x, y);
      if (as_json) {
        auto j = envelope("dist");
        j["reachable"] = r.has_value();
        if (r) {
          j["distance"] = r->distance;
          j["path"] = r->path;
        }
        out << j.dump() << '\n';
      } else if (r) {
        out << r->distance << '\n';
        print_indices(out, r->path);
      } else {
        out << "unreachable\n";
      }
      return r ? success : negative;
    }

    if (metric_cmd->parsed()) {
      const auto r = check_metric_lemma(load(file, in).poset, x, y);
      if (as_json) {
        auto j = envelope("check-metric");
        j["distance"] = r.distance;
        j["path"] = r.path;
        j["item1"] = r.item1_ok;
        j["item2"] = r.item2_ok;
        j["violations"] = r.violations;
        out << j.dump() << '\n';
      } else {
        out << "distance " << r.distance << "\npath ";
        print_indices(out, r.path);
        out << "item1 " << (r.item1_ok ? "ok" : "FAIL") << "\nitem2 " << (r.item2_ok ? "ok" : "FAIL") << '\n';
        for (const auto& v : r.violations) out << "violation: " << v << '\n';
      }
      return r.item1_ok && r.item2_ok ? success : negative;
    }

    if (find_cmd->parsed()) {
      const auto p = load(file, in).poset;
      const auto r = embeds_grid(p, k, want_dual, EmbedOptions{budget});
      const auto grid = grid_upper(k);
      if (as_json) {
        auto j = envelope("find-grid");
        j["status"] = search_status(r.status);
        j["nodes"] = r.nodes;
        if (r.embedding) {
          json pairs = json::array();
          for (std::size_t i = 0; i < r.embedding->map.size(); ++i)
            pairs.push_back({grid.labels[i].alpha, grid.labels[i].beta, r.embedding->map[i]});
          j["map"] = pairs;
        }
        out << j.dump() << '\n';
      } else {
        out << search_status(r.status) << '\n';
        if (r.embedding) {
          for (std::size_t i = 0; i < r.embedding->map.size(); ++i)
            out << grid.labels[i].alpha << ' ' << grid.labels[i].beta << " -> " << r.embedding->map[i] << '\n';
        }
      }
      return exit_for(r.status);
    }

    if (reduce_cmd->parsed()) {
      const auto r = reduce(load(file, in).poset, threshold);
      if (as_json) {
        auto j = envelope("reduce");
        j["case"] = to_string(r.kind);
        j["threshold"] = r.threshold;
        j["antichain"] = r.antichain;
        j["claim1_elements"] = r.claim1_elements;
        j["components"] = r.components;
        j["component_covs"] = r.component_covs;
        j["component"] = r.component ? json(*r.component) : json(nullptr);
        j["x0"] = r.x0 ? json(*r.x0) : json(nullptr);
        j["index_map"] = r.index_map;
        j["subadditive"] = r.subadditive;
        json profiles = json::array();
        for (const auto& e : r.profiles)
          profiles.push_back({{"element", e.element},
                              {"cov_down", e.cov_down},
                              {"cov_up", e.cov_up},
                              {"cov_inc", e.cov_inc},
                              {"cov_outside", e.cov_outside}});
        j["profiles"] = profiles;
        j["reduced_profile"] = r.reduced_profile;
        out << j.dump() << '\n';
      } else {
        out << "case " << to_string(r.kind) << '\n';
        print_labeled(out, "antichain", r.antichain);
        if (r.x0) out << "x0 " << *r.x0 << '\n';
        print_labeled(out, "kept", r.index_map);
        for (const auto& e : r.profiles)
          out << "element " << e.element << " down " << e.cov_down << " up " << e.cov_up << " inc " << e.cov_inc
              << " outside " << e.cov_outside << '\n';
      }
      return success;
    }

    if (ideal_cmd->parsed()) {
      const auto p = load(file, in).poset;
      std::ifstream ideals_in(ideals_file);
      if (!ideals_in) throw Error("cannot open '" + ideals_file + "'");
      IdealChain chain{p, read_ideals(ideals_in, p.size())};
      const auto r = embed_from_ideal_chain(chain, IdealEmbedOptions{ideal_budget});
      const auto m = chain.ideals.size();
      const auto grid = grid_upper(m);
      if (as_json) {
        auto j = envelope("ideal-embed");
        j["status"] = r.status == IdealEmbedStatus::found    ? "found"
                      : r.status == IdealEmbedStatus::failed ? "failed"
                                                             : "budget_exhausted";
        j["nodes"] = r.nodes;
        if (r.embedding) {
          json pairs = json::array();
          for (std::size_t i = 0; i < r.embedding->map.size(); ++i)
            pairs.push_back({grid.labels[i].alpha, grid.labels[i].beta, r.embedding->map[i]});
          j["map"] = pairs;
        } else {
          j["blocked"] = {r.blocked_alpha, r.blocked_beta};
          j["required_above"] = r.required_above;
          j["required_not_below"] = r.required_not_below;
        }
        out << j.dump() << '\n';
      } else if (r.embedding) {
        for (std::size_t i = 0; i < r.embedding->map.size(); ++i)
          out << grid.labels[i].alpha << ' ' << grid.labels[i].beta << " -> " << r.embedding->map[i] << '\n';
      } else {
        out << (r.status == IdealEmbedStatus::failed ? "failed" : "budget exhausted") << " at " << r.blocked_alpha
            << ' ' << r.blocked_beta << '\n';
      }
      switch (r.status) {
        case IdealEmbedStatus::found: return success;
        case IdealEmbedStatus::failed: return negative;
        case IdealEmbedStatus::budget_exhausted: return unknown;
      }
    }

    if (sym_cmd->parsed()) {
      const auto value = cov_symbolic(parse_term(text));
      if (as_json) {
        auto j = envelope("sym-cov");
        j["cov"] = value.to_string();
        out << j.dump() << '\n';
      } else {
        out << value.to_string() << '\n';
      }
      return success;
    }

    if (obs_cmd->parsed()) {
      const auto list = obstruction_list(parse_cardinal(text));
      if (as_json) {
        auto j = envelope("obstructions");
        j["terms"] = json::array();
        for (const auto& t : list) j["terms"].push_back(t.to_string());
        out << j.dump() << '\n';
      } else {
        for (const auto& t : list) out << t.to_string() << '\n';
      }
      return success;
    }

    if (gen_cmd->parsed()) {
      if (gen_grid->parsed()) {
        const auto g = grid_upper(gen_n);
        write_poset(out, g.poset, g.label_strings());
      } else if (gen_chain->parsed()) {
        write_poset(out, chain(gen_n));
      } else if (gen_antichain->parsed()) {
        write_poset(out, antichain(gen_n));
      } else if (gen_random->parsed()) {
        write_poset(out, random_poset(gen_n, gen_p, gen_seed));
      } else {
        std::vector<Poset> parts;
        for (const auto& spec : gen_parts) parts.push_back(parse_part(spec, in));
        write_poset(out, lex_sum(parts));
      }
      return success;
    }

    if (dot_cmd->parsed()) {
      const auto lp = load(file, in);
      write_dot(out, lp.poset, lp.labels, DotOptions{with_inc});
      return success;
    }

    if (self_cmd->parsed()) {
      const auto report = run_selftest(self_opts);
      if (as_json) {
        auto j = envelope("selftest");
        j["ok"] = report.ok();
        j["checks"] = json::array();
        for (const auto& c : report.checks)
          j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
        out << j.dump() << '\n';
      } else {
        for (const auto& c : report.checks)
          out << (c.failed ? "FAIL " : "ok   ") << c.name << ": " << c.passed << " passed, " << c.failed
              << " failed\n";
      }
      return report.ok() ? success : negative;
    }
  } catch (const std::exception& e) {
    err << "chaincov: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"chaincov"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace chaincov::cli
