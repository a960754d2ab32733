#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "tropgroups/constructors.hpp"
#include "tropgroups/errors.hpp"
#include "tropgroups/io.hpp"
#include "tropgroups/spaces.hpp"
#include "tropgroups/stabilizer.hpp"

namespace tropgroups::cli {

namespace {

struct Common {
  std::uint64_t max_nodes = kDefaultSearchNodes;
  std::uint64_t max_order = kDefaultOrderCap;
  unsigned threads = 1;
  bool timing = false;
  bool json = false;

  SearchLimits limits() const { return {max_nodes, max_order, threads}; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--max-nodes", c.max_nodes, "Search node budget")->capture_default_str();
  sub->add_option("--max-order", c.max_order, "Largest group enumerated element by element")
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads for the unit search")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_flag("--timing", c.timing, "Print elapsed time to stderr");
  sub->add_flag("--json", c.json, "Print the report as JSON");
}

Json command_echo(const std::vector<std::string>& args) {
  Json a = Json::array();
  for (const auto& s : args) a.push_back(s);
  return a;
}

void write_matrix(const TropMatrix& a, const std::string& path, std::ostream& out) {
  const bool as_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  const std::string body = as_json ? matrix_to_json(a).dump(2) + "\n" : a.to_string();
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << body;
}

void print_description(const GroupDescription& d, std::ostream& out) {
  out << (d.kind == DescriptionKind::maximal ? "maximal subgroup: " : "Schutzenberger group: ")
      << d.formula() << "\n";
  out << "real rank: " << d.real_rank() << "\n";
  out << "components: " << d.partition.components.size()
      << ", classes: " << d.partition.classes.size() << "\n";
  for (std::size_t k = 0; k < d.factors.size(); ++k) {
    const auto& f = d.factors[k];
    out << "factor " << k + 1 << ": " << (f.name.empty() ? "?" : f.name) << ", order " << f.order
        << ", on " << f.n << " rows and " << f.m << " columns, multiplicity " << f.multiplicity
        << "\n";
    for (const auto& g : f.row_action.generators()) out << "  " << g.to_string() << "\n";
  }
}

// Invariant suites for one matrix.  Each flag is true iff every check of
// that suite passed.
Json verify_matrix(const TropMatrix& a, const SearchLimits& limits) {
  Json flags = Json::object();
  const Reduction red = reduce_full_rank(a);
  flags["reduction_full_rank"] = is_full_rank(red.z);

  const GroupDescription d = group_description(a, limits);
  bool eigen = true, closure = true, agreement = true;
  for (const auto& f : d.factors) {
    const TropMatrix& b = f.normalized;
    const Sigma s = stabilizer_pairs(b, limits);
    for (const auto& e : s.elements) {
      if (!e.eigenvalue.is_zero() || monomial_eigenvalue(e.p) != e.eigenvalue) eigen = false;
      if (e.p.left_apply(b) != e.q.right_apply(b)) eigen = false;
      if (!e.p.is_permutation() || !e.q.is_permutation()) agreement = false;
    }
    if (s.complete()) {
      auto in_sigma = [&](const MonomialMatrix& p, const MonomialMatrix& q) {
        for (const auto& e : s.elements)
          if (e.p == p && e.q == q) return true;
        return false;
      };
      for (const auto& x : s.elements)
        for (const auto& y : s.generators)
          if (!in_sigma(x.p * y.p, x.q * y.q)) closure = false;
    }
    if (s.order != f.order) closure = false;
  }
  flags["single_eigenvalue"] = eigen;
  flags["sigma_closed"] = closure;
  flags["position_agreement"] = agreement;
  flags["classification_conditions"] = classification_conditions(d, red.z.rows(), red.z.cols());

  if (a.is_square() && is_idempotent(a) && is_full_rank(a)) {
    const Sigma general = stabilizer_pairs(a, limits);
    const Sigma commuting = commuting_units(a, limits);
    flags["commuting_units"] = general.elements == commuting.elements &&
                               general.order == commuting.order;
    bool approx = true;
    TropMatrix prev = finite_approximant(a, 1);
    for (std::int64_t m = 1; m <= 5 && approx; ++m) {
      if (!is_full_rank(prev)) approx = false;
      const TropMatrix next = finite_approximant(a, m + 1);
      for (std::size_t j = 0; j < prev.cols() && approx; ++j)
        if (!member(prev.column(j), next)) approx = false;
      prev = next;
    }
    flags["finite_approximants"] = approx;
    flags["maximal_subgroup_matches"] =
        maximal_subgroup(a, limits).formula() == group_description(a, limits).formula();
  }
  return flags;
}

int timed(const Common& c, std::ostream& err, const std::function<int()>& body) {
  const auto start = std::chrono::steady_clock::now();
  const int code = body();
  if (c.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    err << "elapsed: " << ms.count() << " ms\n";
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groups of tropical (max-plus) matrices"};
  app.require_subcommand(1);

  Common common;

  std::string analyze_path;
  bool assume_idempotent = false;
  auto* analyze = app.add_subcommand("analyze", "Describe the Schutzenberger group of a matrix");
  analyze->add_option("matrix", analyze_path, "Matrix file (text rows or JSON)")->required();
  analyze->add_flag("--assume-idempotent", assume_idempotent,
                    "Treat the input as an idempotent and describe its maximal subgroup");
  add_common(analyze, common);

  std::vector<std::string> gens;
  std::size_t degree = 0;
  std::string bidegree;
  auto* closure = app.add_subcommand("closure", "2-closure of a permutation group");
  closure->add_option("--gens", gens, "Generators in cycle notation")->required();
  auto* deg_opt = closure->add_option("--degree", degree, "Number of points");
  auto* bideg_opt = closure->add_option("--bidegree", bidegree, "n,m for a paired group");
  deg_opt->excludes(bideg_opt);
  add_common(closure, common);

  std::string construct_path, construct_out;
  auto* construct = app.add_subcommand("construct", "Build a matrix realizing a group or graph");
  construct->add_option("spec", construct_path, "JSON spec")->required();
  construct->add_option("-o,--output", construct_out, "Matrix output (.json for JSON)");
  add_common(construct, common);

  std::string approx_path, approx_out;
  std::int64_t approx_m = 1;
  auto* approximate = app.add_subcommand("approximate", "Finite approximant of an idempotent");
  approximate->add_option("matrix", approx_path, "Idempotent matrix file")->required();
  approximate->add_option("--m", approx_m, "Approximant index")->required()->check(CLI::PositiveNumber);
  approximate->add_option("-o,--output", approx_out, "Matrix output (.json for JSON)");
  add_common(approximate, common);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites on a matrix");
  verify->add_option("matrix", verify_path, "Matrix file")->required();
  add_common(verify, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  try {
    if (analyze->parsed()) {
      return timed(common, err, [&] {
        const std::string text = read_file(analyze_path);
        const TropMatrix a = parse_matrix(text);
        const GroupDescription d = assume_idempotent ? maximal_subgroup(a, common.limits())
                                                     : group_description(a, common.limits());
        if (common.json) {
          Json report{{"command", command_echo(args)}, {"input_digest", fnv1a64(text)}};
          report["partition"] = partition_to_json(d.partition, &d.reduction);
          report["description"] = description_to_json(d);
          out << report.dump(2) << "\n";
        } else {
          print_description(d, out);
        }
        return kOk;
      });
    }
    if (closure->parsed()) {
      return timed(common, err, [&] {
        Json report{{"command", command_echo(args)}};
        AutomorphismGroup c;
        std::uint64_t order = 0;
        bool closed = false;
        if (!bidegree.empty()) {
          std::size_t n = 0, m = 0;
          char comma = 0;
          std::istringstream in(bidegree);
          if (!(in >> n >> comma >> m) || comma != ',' || !in.eof())
            throw ParseError("--bidegree expects n,m");
          const PermGroup g = PermGroup::paired(n, m, PermGroup::parse(gens, n + m).generators());
          order = group_order(g, common.max_order);
          c = paired_two_closure(g, common.max_order);
          closed = c.order == order;
        } else {
          if (degree == 0) throw ParseError("closure needs --degree or --bidegree");
          const PermGroup g = PermGroup::parse(gens, degree);
          order = group_order(g, common.max_order);
          c = two_closure(g);
          closed = c.order == order;
        }
        if (common.json) {
          report["order"] = order;
          report["closure"] = perm_group_to_json(c.group);
          report["closure_order"] = c.order;
          report["two_closed"] = closed;
          out << report.dump(2) << "\n";
        } else {
          out << "order: " << order << "\nclosure order: " << c.order
              << "\n2-closed: " << (closed ? "true" : "false") << "\nclosure generators:\n";
          for (const auto& p : c.group.generators()) out << "  " << p.to_string() << "\n";
        }
        return kOk;
      });
    }
    if (construct->parsed()) {
      return timed(common, err, [&] {
        const std::string text = read_file(construct_path);
        Json spec;
        try {
          spec = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(e.what());
        }
        const Tag first_tag = spec.value("first_tag", Tag{1});
        Construction built;
        if (spec.contains("generators")) {
          std::vector<std::string> cycles;
          for (const auto& s : spec.at("generators")) cycles.push_back(s.get<std::string>());
          built = construct_idempotent(PermGroup::parse(cycles, spec.at("degree").get<std::size_t>()),
                                       first_tag);
        } else {
          const GraphSpec g = graph_from_json(spec);
          if (const auto* d = std::get_if<ColouredDigraph>(&g))
            built = construct_idempotent(*d, first_tag);
          else
            built = construct_from_bipartite(std::get<BipartiteDigraph>(g), first_tag);
        }
        if (!construct_out.empty()) write_matrix(built.matrix, construct_out, out);
        if (common.json) {
          Json report{{"command", command_echo(args)}, {"input_digest", fnv1a64(text)}};
          report["matrix"] = matrix_to_json(built.matrix);
          report["row_orbits"] = built.plan.row_orbits;
          report["column_orbits"] = built.plan.column_orbits;
          report["transposed"] = built.plan.transposed;
          out << report.dump(2) << "\n";
        } else if (construct_out.empty()) {
          out << built.matrix.to_string();
        }
        return kOk;
      });
    }
    if (approximate->parsed()) {
      return timed(common, err, [&] {
        const TropMatrix f = finite_approximant(read_matrix_file(approx_path), approx_m);
        if (common.json)
          out << matrix_to_json(f).dump(2) << "\n";
        if (!approx_out.empty() || !common.json) write_matrix(f, approx_out, out);
        return kOk;
      });
    }
    if (verify->parsed()) {
      return timed(common, err, [&] {
        const std::string text = read_file(verify_path);
        const Json flags = verify_matrix(parse_matrix(text), common.limits());
        bool all = true;
        for (const auto& [name, ok] : flags.items()) all = all && ok.get<bool>();
        if (common.json) {
          Json report{{"command", command_echo(args)}, {"input_digest", fnv1a64(text)}};
          report["verification"] = flags;
          report["passed"] = all;
          out << report.dump(2) << "\n";
        } else {
          for (const auto& [name, ok] : flags.items())
            out << name << ": " << (ok.get<bool>() ? "true" : "false") << "\n";
        }
        return all ? kOk : kFailure;
      });
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const SearchBudgetExceeded& e) {
    err << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const OrderCapExceeded& e) {
    err << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace tropgroups::cli
