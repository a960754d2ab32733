#include "tropgroups/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "tropgroups/errors.hpp"

namespace tropgroups {

namespace {

Json one_based(const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

TropScalar scalar_from_json(const Json& j) {
  if (j.is_string()) return TropScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  throw ParseError("matrix entries must be strings or integers");
}

}  // namespace

TropMatrix parse_matrix(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && text[k] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    return matrix_from_json(j);
  }
  return TropMatrix::parse(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TropMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

TropMatrix matrix_from_json(const Json& j) {
  try {
    const auto& entries = j.at("entries");
    std::vector<std::vector<TropScalar>> rows;
    for (const auto& r : entries) {
      std::vector<TropScalar> row;
      for (const auto& x : r) row.push_back(scalar_from_json(x));
      rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix has no rows");
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) throw ParseError("rows have different lengths");
    TropMatrix a = TropMatrix::from_rows(rows);
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != a.rows())
      throw ParseError("'rows' does not match the entries");
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != a.cols())
      throw ParseError("'cols' does not match the entries");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const TropMatrix& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

GraphSpec graph_from_json(const Json& j) {
  try {
    std::map<std::string, std::uint32_t> names;
    auto colour_id = [&](const Json& c) -> std::uint32_t {
      const std::string key = c.is_string() ? "s:" + c.get<std::string>() : "n:" + c.dump();
      return names.try_emplace(key, static_cast<std::uint32_t>(names.size())).first->second;
    };
    auto index = [](const Json& v, std::size_t bound, const char* what) {
      const auto i = v.get<std::int64_t>();
      if (i < 1 || static_cast<std::size_t>(i) > bound)
        throw ParseError(std::string(what) + " index out of range");
      return static_cast<std::size_t>(i - 1);
    };
    if (j.contains("vertices")) {
      const auto n = j.at("vertices").get<std::size_t>();
      ColouredDigraph d(n);
      std::vector<bool> set(n * n, false);
      for (const auto& e : j.at("edges")) {
        const auto u = index(e.at(0), n, "vertex"), v = index(e.at(1), n, "vertex");
        if (u == v) throw ParseError("loops are not allowed");
        d.set(u, v, colour_id(e.at(2)));
        set[u * n + v] = true;
      }
      const auto rest = static_cast<std::uint32_t>(names.size());
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (u != v && !set[u * n + v]) d.set(u, v, rest);
      return d;
    }
    const auto n = j.at("omega").get<std::size_t>();
    const auto m = j.at("theta").get<std::size_t>();
    BipartiteDigraph d(n, m);
    for (const auto& e : j.at("edges"))
      d.set(index(e.at(0), n, "omega"), index(e.at(1), m, "theta"), colour_id(e.at(2)));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json perm_group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_string());
  Json out{{"degree", g.degree()}};
  if (g.is_paired()) {
    out["omega"] = g.omega_size();
    out["gamma"] = g.gamma_size();
  }
  out["generators"] = std::move(gens);
  return out;
}

Json partition_to_json(const ComponentPartition& p, const Reduction* labels) {
  auto relabel = [](std::vector<std::size_t> idx, const std::vector<std::size_t>* keep) {
    if (keep)
      for (auto& i : idx) i = (*keep)[i];
    return one_based(idx);
  };
  Json comps = Json::array();
  for (std::size_t k = 0; k < p.components.size(); ++k)
    comps.push_back({{"omega", relabel(p.components[k].rows, labels ? &labels->row_keep : nullptr)},
                     {"theta", relabel(p.components[k].cols, labels ? &labels->col_keep : nullptr)},
                     {"class", p.class_of[k] + 1}});
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json members = Json::array(), witnesses = Json::array();
    for (auto m : c.members) members.push_back(m + 1);
    for (const auto& w : c.witnesses) witnesses.push_back(matrix_to_json(w.to_matrix()).at("entries"));
    classes.push_back({{"representative", c.members.front() + 1},
                       {"members", std::move(members)},
                       {"witnesses", std::move(witnesses)}});
  }
  return Json{{"components", std::move(comps)}, {"classes", std::move(classes)}};
}

Json description_to_json(const GroupDescription& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    Json row_gens = Json::array(), col_gens = Json::array();
    for (const auto& g : f.generators) {
      std::vector<Perm::Point> r(g.p.sigma().begin(), g.p.sigma().end());
      std::vector<Perm::Point> c(g.q.sigma().begin(), g.q.sigma().end());
      row_gens.push_back(Perm(r).to_string());
      col_gens.push_back(Perm(c).to_string());
    }
    factors.push_back({{"name", f.name},
                       {"order", f.order},
                       {"degree", f.n},
                       {"columns", f.m},
                       {"multiplicity", f.multiplicity},
                       {"representative_component", f.representative + 1},
                       {"generators", std::move(row_gens)},
                       {"column_generators", std::move(col_gens)},
                       {"normalized_representative", matrix_to_json(f.normalized).at("entries")}});
  }
  return Json{{"kind", d.kind == DescriptionKind::maximal ? "maximal_subgroup" : "schutzenberger_group"},
              {"formula", d.formula()},
              {"real_rank", d.real_rank()},
              {"reduction", {{"row_keep", one_based(d.reduction.row_keep)},
                             {"col_keep", one_based(d.reduction.col_keep)}}},
              {"factors", std::move(factors)}};
}

}  // namespace tropgroups
