// Command-line front end: check, search, classify, construct,
// verify-lemmas, verify-theorem, plot. All reports are JSON on stdout
// (or --out). Exit codes: 0 = property holds / search succeeded,
// 1 = property fails / nothing found, 2 = usage or format error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crescent/constructors.hpp"
#include "crescent/json_io.hpp"
#include "crescent/search.hpp"
#include "crescent/svg.hpp"
#include "crescent/typecalc.hpp"

using json = nlohmann::json;
using namespace crescent;

namespace {

void emit(const json &report, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << std::endl;
  } else {
    std::ofstream out(out_path);
    if (!out.good())
      throw std::runtime_error("cannot write " + out_path);
    out << report.dump(2) << std::endl;
  }
}

Configuration load_configuration(const std::string &path,
                                 const std::string &norm_flag) {
  std::ifstream in(path);
  if (!in.good())
    throw std::invalid_argument("cannot read " + path);
  json j = json::parse(in);
  Configuration cfg = configuration_from_json(j);
  if (!norm_flag.empty())
    return Configuration(cfg.points, norm_from_flag(norm_flag));
  return cfg;
}

int cmd_check(const std::string &file, const std::string &norm_flag,
              const std::string &out_path) {
  Configuration cfg = load_configuration(file, norm_flag);
  json report;
  report["norm"] = norm_to_json(cfg.norm);
  report["size"] = cfg.size();
  const auto multiset = distance_multiset(cfg);
  report["distinct_distances"] = multiset.size();
  report["multiset"] = multiset_to_json(multiset);
  report["crescent_multiplicity"] = is_crescent_multiplicity(cfg);
  Violation v;
  const bool sgp = in_strong_general_position(cfg, &v);
  report["strong_general_position"] = sgp;
  if (!sgp)
    report["violation"] = violation_to_json(v);
  const bool strong = sgp && is_crescent_multiplicity(cfg);
  report["strong_crescent"] = strong;
  if (auto ord = is_linelike(cfg)) {
    report["linelike"] = true;
    report["linelike_ordering"] = *ord;
  } else {
    report["linelike"] = false;
  }
  emit(report, out_path);
  return strong ? 0 : 1;
}

int cmd_classify(const std::string &file, const std::string &out_path) {
  Configuration cfg = load_configuration(file, "");
  json report;
  report["norm"] = norm_to_json(cfg.norm);
  report["size"] = cfg.size();

  auto ord = is_linelike(cfg);
  report["linelike"] = ord.has_value();
  if (ord) {
    std::vector<Point> ordered;
    if (is_linelike_ordered(cfg.norm, cfg.points)) {
      // keep the stored order when it is itself line-like
      ordered = cfg.points;
      std::vector<int> ident(cfg.size());
      for (size_t i = 0; i < cfg.size(); ++i)
        ident[i] = static_cast<int>(i);
      report["ordering"] = ident;
    } else {
      report["ordering"] = *ord;
      for (int i : *ord)
        ordered.push_back(cfg.points[i]);
    }
    if (cfg.norm.kind() == NormKind::Linf)
      report["type"] = type_to_string(type_of_config(ordered));
    Configuration ordered_cfg(ordered, cfg.norm);
    json dist = json::array();
    for (const auto &d : order_distances(ordered_cfg))
      dist.push_back(distance_to_json(d));
    report["order_distances"] = dist;
    report["linelike_crescent"] = is_linelike_crescent(cfg).has_value();
  }
  if (auto w = is_perpendicular_perturbation(cfg)) {
    report["perpendicular_perturbation"] = true;
    report["axis"] = w->axis == Axis::horizontal ? "horizontal" : "vertical";
    report["spacing"] = w->spacing.to_string();
  } else {
    report["perpendicular_perturbation"] = false;
  }
  emit(report, out_path);
  return ord ? 0 : 1;
}

int cmd_search(const SearchParams &params, const std::string &out_path,
               const std::string &svg_dir) {
  if (params.mode == SearchMode::exhaustive_absence) {
    const bool square = params.lattice.kind == LatticeKind::square;
    const NormKind k = params.norm.kind();
    const bool fast =
        (square && (k == NormKind::Linf || k == NormKind::L1 ||
                    k == NormKind::L2)) ||
        (!square && k == NormKind::L2);
    if (!fast)
      throw CLI::ValidationError(
          "absence mode supports square lattices with l1/l2/linf and "
          "triangular lattices with l2 only");
  }
  SearchResult res = search(params);
  json report;
  report["lattice"] = {{"kind", params.lattice.kind == LatticeKind::square
                                    ? "square"
                                    : "triangular"},
                       {"width", params.lattice.width},
                       {"height", params.lattice.height}};
  report["norm"] = norm_to_json(params.norm);
  report["size"] = params.target_size;
  report["raw_hits"] = res.raw_hits;
  report["nodes_expanded"] = res.nodes_expanded;
  report["units_done"] = res.units_done;
  report["units_total"] = res.units_total;
  report["complete"] = res.complete;
  report["wall_seconds"] = res.wall_seconds;
  report["prunes"] = {{"collinear", res.prunes.collinear},
                      {"multiplicity", res.prunes.multiplicity},
                      {"linelike_four", res.prunes.linelike_four},
                      {"concyclic", res.prunes.concyclic},
                      {"symmetry", res.prunes.symmetry}};
  json found = json::array();
  for (size_t i = 0; i < res.configurations.size(); ++i) {
    json entry = configuration_to_json(res.configurations[i]);
    json latpts = json::array();
    for (const auto &pt : res.canonical[i])
      latpts.push_back({pt[0], pt[1]});
    entry["lattice_points"] = latpts;
    found.push_back(entry);
    if (!svg_dir.empty()) {
      std::ostringstream name;
      name << svg_dir << "/config_" << i << ".svg";
      std::ofstream svg(name.str());
      svg << render_distance_graph_svg(res.configurations[i]);
    }
  }
  report["configurations"] = found;
  emit(report, out_path);
  if (params.mode == SearchMode::exhaustive_absence)
    return res.canonical.empty() ? 0 : 1;
  return res.canonical.empty() ? 1 : 0;
}

int cmd_verify_lemmas(int grid_den, const std::string &out_path) {
  LemmaReport rep = verify_forbidden_types(make_rational(1, grid_den));
  json claims = json::array();
  for (const auto &c : rep.claims) {
    json cj = {{"claim", c.name},
               {"expect_witnesses", c.expect_witnesses},
               {"strings_checked", c.strings_checked},
               {"witnesses", c.witnesses},
               {"holds", c.holds}};
    if (!c.counterexample_type.empty())
      cj["witness_type"] = c.counterexample_type;
    claims.push_back(cj);
  }
  json report = {{"grid_step", "1/" + std::to_string(grid_den)},
                 {"claims", claims},
                 {"all_hold", rep.all_hold}};
  emit(report, out_path);
  return rep.all_hold ? 0 : 1;
}

int cmd_verify_theorem(int n, int grid_den, const std::string &alphabet,
                       const std::string &out_path) {
  std::vector<TypeSymbol> alpha;
  for (char c : alphabet)
    alpha.push_back(symbol_from_char(c));
  ClassificationReport rep =
      verify_classification(n, make_rational(1, grid_den), alpha);
  json strings = json::array();
  for (const auto &v : rep.realizable) {
    json sj = {{"type", type_to_string(v.type)},
               {"family_shortcut", v.family_shortcut},
               {"witnesses", v.witnesses},
               {"nonperturbation_witnesses", v.nonperturbation_witnesses}};
    if (v.sample_nonperturbation) {
      json f = json::array();
      for (const auto &q : *v.sample_nonperturbation)
        f.push_back(rational_to_string(q));
      sj["nonperturbation_example"] = f;
    }
    strings.push_back(sj);
  }
  json report = {{"n", n},
                 {"grid_step", "1/" + std::to_string(grid_den)},
                 {"symmetry_reduced", rep.symmetry_reduced},
                 {"strings_enumerated", rep.strings_enumerated},
                 {"strings_pruned", rep.strings_pruned},
                 {"strings_realizable", rep.strings_realizable},
                 {"nonperturbation_witnesses", rep.total_nonperturbation},
                 {"realizable", strings}};
  const bool expected = n >= 7 ? rep.total_nonperturbation == 0
                               : rep.total_nonperturbation > 0;
  report["verdict"] =
      n >= 7 ? (expected ? "all witnesses are perpendicular perturbations"
                         : "non-perturbation witness found")
             : (expected ? "non-perturbation witnesses exist as expected"
                         : "no non-perturbation witnesses found");
  emit(report, out_path);
  return expected ? 0 : 1;
}

int cmd_plot(const std::string &file, const std::string &out_svg) {
  Configuration cfg = load_configuration(file, "");
  std::ofstream out(out_svg);
  if (!out.good())
    throw std::runtime_error("cannot write " + out_svg);
  out << render_distance_graph_svg(cfg);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"crescent: exact discrete geometry for crescent-type point "
               "configurations in planar norms"};
  app.require_subcommand(1);

  std::string file, out_path, norm_flag, svg_dir, checkpoint, choices_str,
      alphabet;
  std::string lattice_kind = "square", mode_str = "first", kind;
  int width = 0, height = 0, size = 0, threads = 1, grid_den = 8, n = 0;
  int segment_index = 0, type_len = 0, grid_resolution = 0;
  long long max_units = 0, seed = 0;
  bool no_symmetry = false;
  double p = 0, eps = 0, theta1 = 0, theta2 = 0, radius = 1.0;
  std::string a_str = "1/4", b_str = "1/2";

  auto *check = app.add_subcommand("check", "run all predicates on a file");
  check->add_option("file", file)->required();
  check->add_option("--norm", norm_flag, "override the configuration's norm");
  check->add_option("--out", out_path);

  auto *srch = app.add_subcommand("search", "lattice backtracking search");
  srch->add_option("--norm", norm_flag, "norm flag (default linf)");
  srch->add_option("--lattice", lattice_kind)
      ->check(CLI::IsMember({"square", "triangular"}));
  srch->add_option("--width", width)->required();
  srch->add_option("--height", height)->required();
  srch->add_option("--size", size)->required();
  srch->add_option("--mode", mode_str)
      ->check(CLI::IsMember({"first", "all", "absence"}));
  srch->add_option("--threads", threads);
  srch->add_option("--checkpoint", checkpoint);
  srch->add_option("--max-units", max_units,
                   "stop after this many work units (resumable)");
  srch->add_flag("--no-symmetry", no_symmetry);
  srch->add_option("--out", out_path);
  srch->add_option("--svg-dir", svg_dir);

  auto *cls = app.add_subcommand("classify", "type and structure report");
  cls->add_option("file", file)->required();
  cls->add_option("--out", out_path);

  auto *con = app.add_subcommand("construct", "builders and Lp searches");
  con->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"perturbed-line", "staircase", "counterexample",
                             "crescent4", "segment", "arc", "lp-search",
                             "lp-search-free"}));
  con->add_option("--n", n);
  con->add_option("--len", type_len);
  con->add_option("--a", a_str);
  con->add_option("--b", b_str);
  con->add_option("--norm", norm_flag);
  con->add_option("--seed", seed);
  con->add_option("--choices", choices_str,
                  "comma-separated rationals in [0,1]");
  con->add_option("--segment", segment_index);
  con->add_option("--p", p);
  con->add_option("--eps", eps);
  con->add_option("--theta1", theta1);
  con->add_option("--theta2", theta2);
  con->add_option("--radius", radius);
  con->add_option("--grid", grid_resolution);
  con->add_option("--threads", threads);
  con->add_option("--out", out_path);

  auto *lem = app.add_subcommand("verify-lemmas",
                                 "sample the forbidden-type catalogue");
  lem->add_option("--grid", grid_den, "grid step denominator (power of two)");
  lem->add_option("--out", out_path);

  auto *thm = app.add_subcommand("verify-theorem",
                                 "classification sampling harness");
  thm->add_option("--n", n)->required();
  thm->add_option("--grid", grid_den);
  thm->add_option("--alphabet", alphabet,
                  "restrict symbols, e.g. xAD (default: all eight)");
  thm->add_option("--out", out_path);

  auto *plt = app.add_subcommand("plot", "render a distance graph as SVG");
  plt->add_option("file", file)->required();
  plt->add_option("out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(check))
      return cmd_check(file, norm_flag, out_path);
    if (app.got_subcommand(cls))
      return cmd_classify(file, out_path);
    if (app.got_subcommand(srch)) {
      SearchParams params;
      params.lattice.kind = lattice_kind == "square" ? LatticeKind::square
                                                     : LatticeKind::triangular;
      params.lattice.width = width;
      params.lattice.height = height;
      params.norm = norm_from_flag(norm_flag.empty() ? "linf" : norm_flag);
      params.target_size = size;
      params.mode = mode_str == "first"
                        ? SearchMode::first
                        : (mode_str == "all" ? SearchMode::all
                                             : SearchMode::exhaustive_absence);
      params.symmetry_reduction = !no_symmetry;
      params.thread_count = threads;
      params.checkpoint_path = checkpoint;
      params.max_units = max_units;
      return cmd_search(params, out_path, svg_dir);
    }
    if (app.got_subcommand(lem))
      return cmd_verify_lemmas(grid_den, out_path);
    if (app.got_subcommand(thm))
      return cmd_verify_theorem(n, grid_den, alphabet, out_path);
    if (app.got_subcommand(plt))
      return cmd_plot(file, out_path);
    if (app.got_subcommand(con)) {
      json report;
      if (kind == "perturbed-line") {
        report = configuration_to_json(example_perturbed_line(n));
      } else if (kind == "staircase") {
        report = configuration_to_json(
            example_staircase(n, parse_rational(a_str)));
      } else if (kind == "counterexample") {
        report = configuration_to_json(example_counterexample(
            type_len, parse_rational(a_str), parse_rational(b_str)));
      } else if (kind == "crescent4") {
        NormSpec norm = norm_from_flag(norm_flag);
        if (norm.kind() == NormKind::Lp) {
          json pts = json::array();
          for (const auto &q : build_crescent4_numeric(norm.p()))
            pts.push_back({q[0], q[1]});
          report = {{"norm", norm_to_json(norm)}, {"points_numeric", pts}};
        } else {
          report = configuration_to_json(build_crescent4(norm));
        }
      } else if (kind == "segment") {
        NormSpec norm = norm_from_flag(norm_flag);
        if (!choices_str.empty()) {
          std::vector<Rational> choices;
          std::stringstream ss(choices_str);
          std::string tok;
          while (std::getline(ss, tok, ','))
            choices.push_back(parse_rational(tok));
          report = configuration_to_json(build_segment_norm_linelike(
              norm, n, choices, segment_index));
        } else {
          report = configuration_to_json(build_segment_norm_linelike(
              norm, n, static_cast<std::uint64_t>(seed)));
        }
      } else if (kind == "arc") {
        json pts = json::array();
        for (const auto &q :
             build_arc_linelike(n, eps, theta1, theta2, radius))
          pts.push_back({q[0], q[1]});
        report = {{"norm", "l2"}, {"points_numeric", pts}};
      } else if (kind == "lp-search") {
        auto res = lp_linelike_search(
            p, n, grid_resolution > 0 ? grid_resolution : 720, threads);
        report = {{"p", res.p},
                  {"n", res.n},
                  {"min_discrepancy", res.min_discrepancy},
                  {"params", {res.t1, res.t2}}};
      } else if (kind == "lp-search-free") {
        auto res = lp_linelike_search_free(
            p, n, grid_resolution > 0 ? grid_resolution : 24);
        report = {{"p", res.p},
                  {"n", res.n},
                  {"min_discrepancy", res.coarse_min},
                  {"params", res.coarse_angles},
                  {"refined_min", res.refined_min},
                  {"refined_params", res.refined_angles}};
      }
      emit(report, out_path);
      return 0;
    }
  } catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckpointFormatError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
