// JSON artifacts behind the command-line front end, their text and DOT
// renderings, and the triple notation M=<gens>,H=<gens>,B=<index>.
// Text is always rendered from the JSON form, so cached and recomputed
// output agree byte for byte.

#ifndef HOPFCAT_ARTIFACTS_HPP_
#define HOPFCAT_ARTIFACTS_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "category.hpp"
#include "chartable.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "json_io.hpp"
#include "verify.hpp"

namespace hopfcat {

using nlohmann::json;

// "e" (trivial), "G" (whole group) or '.'-separated element indices.
inline Subgroup parse_generators(const Group& g, const std::string& s, std::size_t offset = 0) {
  if (s == "e")
    return trivial_subgroup();
  if (s == "G")
    return whole_group(g);
  std::vector<int> gens;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("expected an element index", offset + pos);
    int x = std::stoi(tok);
    if (x >= g.order())
      throw ParseError("element index " + tok + " out of range", offset + pos);
    gens.push_back(x);
    if (dot == std::string::npos)
      break;
    pos = dot + 1;
  }
  return closure(g, gens);
}

inline std::string generators_label(const Group& g, const Subgroup& s) {
  if (s.order() == 1)
    return "e";
  if (s.order() == g.order())
    return "G";
  return impl::gens_label(g, s);
}

// "M=<gens>,H=<gens>,B=<index|triv>"; B defaults to triv.
inline Triple parse_triple(const Group& g, const std::string& s) {
  std::string m, h, b = "triv";
  bool have_m = false, have_h = false;
  std::size_t pos = 0;
  std::size_t m_off = 0, h_off = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.size() < 3 || part[1] != '=')
      throw ParseError("expected M=, H= or B=", pos);
    std::string val = part.substr(2);
    switch (part[0]) {
      case 'M': m = val; have_m = true; m_off = pos + 2; break;
      case 'H': h = val; have_h = true; h_off = pos + 2; break;
      case 'B': b = val; break;
      default: throw ParseError("unknown triple component", pos);
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  if (!have_m || !have_h)
    throw ParseError("triple needs both M= and H=", s.size());
  Subgroup ms = parse_generators(g, m, m_off), hs = parse_generators(g, h, h_off);
  if (!is_normal(g, ms) || !is_normal(g, hs))
    throw PreconditionViolated("M and H must be normal subgroups");
  if (!commute_elementwise(g, ms, hs))
    throw PreconditionViolated("M and H must commute elementwise");
  auto bis = enumerate_invariant_bicharacters(g, ms, hs);
  if (b.empty() || (b != "triv" && !std::all_of(b.begin(), b.end(), [](unsigned char c) { return std::isdigit(c); })))
    throw ParseError("B must be an index or 'triv'", s.find("B=") + 2);
  int bi = 0;
  if (b == "triv") {
    for (std::size_t k = 0; k < bis.size(); ++k)
      if (std::all_of(bis[k].exps.begin(), bis[k].exps.end(), [](int e) { return e == 0; }))
        bi = static_cast<int>(k);
  } else {
    bi = std::stoi(b);
  }
  if (bi < 0 || static_cast<std::size_t>(bi) >= bis.size())
    throw PreconditionViolated("B must be in [0, " + std::to_string(bis.size()) + ")");
  return Triple{ms, hs, bis[bi], bi};
}

inline std::string triple_label(const Group& g, const Subgroup& m, const Subgroup& h, int b) {
  return "M=" + generators_label(g, m) + ",H=" + generators_label(g, h) + ",B=" + std::to_string(b);
}

inline std::string set_label(const std::vector<int>& v) { return impl::set_str(v); }

// ---------------------------------------------------------------------------
// artifacts

inline json group_info_json(const Group& g) {
  json classes = json::array();
  for (const auto& c : conjugacy_classes(g))
    classes.push_back({{"representative", c.representative}, {"size", c.size()}, {"members", c.members}});
  json normals = json::array();
  for (const auto& s : normal_subgroups(g))
    normals.push_back({{"generators", generators_label(g, s)}, {"members", s.members}});
  return {{"name", g.name()}, {"order", g.order()}, {"exponent", g.exponent()}, {"abelian", g.is_abelian()},
          {"classes", classes}, {"normal_subgroups", normals}};
}

inline json irreps_json(const Group& g, const std::vector<SimpleObject>& simples) {
  json out = json::array();
  for (const auto& s : simples)
    out.push_back({{"index", s.index}, {"class", s.class_index}, {"char", s.char_index}, {"a", s.rep},
                   {"dim", s.dim}, {"centralizer", generators_label(g, s.centralizer)},
                   {"centralizer_order", s.centralizer.order()}});
  return out;
}

inline json smatrix_json(const Instance& in) {
  json rows = json::array();
  for (std::size_t i = 0; i < in.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < in.rank(); ++j)
      row.push_back(cyclo_to_json(in.s(i, j)));
    rows.push_back(row);
  }
  return {{"rank", in.rank()}, {"dims", in.dims}, {"dual", in.dual}, {"s", rows}};
}

// Nonzero N_ij^k as [i, j, k, N].
inline json fusion_json(const Instance& in) {
  json out = json::array();
  for (std::size_t i = 0; i < in.rank(); ++i)
    for (std::size_t j = 0; j < in.rank(); ++j)
      for (std::size_t k = 0; k < in.rank(); ++k)
        if (in.n[i][j][k])
          out.push_back({i, j, k, in.n[i][j][k]});
  return {{"rank", in.rank()}, {"dims", in.dims}, {"rules", out}};
}

inline json coideals_json(const Instance& in) {
  json out = json::array();
  for (std::size_t i = 0; i < in.coideals.size(); ++i) {
    const auto& c = in.coideals[i];
    out.push_back({{"index", i}, {"label", impl::coideal_label(in, c.coideal)}, {"dim", c.coideal.dim()},
                   {"quotient", c.quotient}});
  }
  return out;
}

// Sparse integral: [[basis index, value]].
inline json integral_json(const Vec& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      out.push_back({i, cyclo_to_json(v[i])});
  return out;
}

inline std::string subcat_label(const Instance& in, const FusionSubcategory& d) {
  if (d.triple)
    return "S(" + generators_label(in.group, d.triple->m) + "," + generators_label(in.group, d.triple->h) + "," +
           std::to_string(d.triple->b) + ")";
  int ci = in.coideal_for(d.simples);
  if (ci >= 0)
    return "Rep(A//" + impl::coideal_label(in, in.coideals[ci].coideal) + ")";
  return set_label(d.simples);
}

// Nodes, covering relations (i below j) and the centralizer involution.
inline json lattice_json(const Instance& in) {
  json nodes = json::array();
  const auto& lat = in.lattice;
  for (std::size_t i = 0; i < lat.size(); ++i)
    nodes.push_back({{"index", i}, {"label", subcat_label(in, lat[i])}, {"fpdim", lat[i].fpdim},
                     {"simples", lat[i].simples}});
  auto below = [&](std::size_t i, std::size_t j) {
    return i != j && std::includes(lat[j].simples.begin(), lat[j].simples.end(), lat[i].simples.begin(),
                                   lat[i].simples.end());
  };
  json covers = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = 0; j < lat.size(); ++j) {
      if (!below(i, j))
        continue;
      bool cover = true;
      for (std::size_t k = 0; k < lat.size() && cover; ++k)
        if (below(i, k) && below(k, j))
          cover = false;
      if (cover)
        covers.push_back({i, j});
    }
  json cents = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    cents.push_back({i, in.subcat_index(centralizer_by_smatrix(in.s, in.dims, lat[i].simples))});
  return {{"nodes", nodes}, {"covers", covers}, {"centralizer", cents}};
}

inline std::string lattice_dot(const json& lat) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& n : lat.at("nodes"))
    os << "  n" << n.at("index").get<int>() << " [label=\"" << n.at("label").get<std::string>()
       << " fpdim=" << n.at("fpdim").get<std::int64_t>() << "\"];\n";
  for (const auto& e : lat.at("covers"))
    os << "  n" << e[0].get<int>() << " -> n" << e[1].get<int>() << ";\n";
  for (const auto& e : lat.at("centralizer")) {
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (b >= 0 && a <= b)
      os << "  n" << a << " -> n" << b << " [color=red, style=dashed, dir=both, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// text renderings

inline std::string cyclo_text(const json& j) { return cyclo_from_json(j).str(); }

inline std::string table_text(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> w;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (w.size() <= c)
        w.push_back(0);
      w[c] = std::max(w[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size())
        os << std::string(w[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

inline std::string group_info_text(const json& j) {
  std::ostringstream os;
  os << j.at("name").get<std::string>() << ": order " << j.at("order") << ", exponent " << j.at("exponent")
     << (j.at("abelian").get<bool>() ? ", abelian" : ", non-abelian") << "\n";
  os << "classes:\n";
  for (const auto& c : j.at("classes"))
    os << "  rep " << c.at("representative") << " size " << c.at("size") << " " << c.at("members").dump() << "\n";
  os << "normal subgroups:\n";
  for (const auto& s : j.at("normal_subgroups"))
    os << "  <" << s.at("generators").get<std::string>() << "> " << s.at("members").dump() << "\n";
  return os.str();
}

inline std::string chartable_text(const json& j) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"", "rep"};
  std::vector<std::string> sizes{"", "size"};
  for (const auto& r : j.at("representatives"))
    head.push_back(std::to_string(r.get<int>()));
  for (const auto& s : j.at("classes"))
    sizes.push_back(std::to_string(s.get<int>()));
  cells.push_back(head);
  cells.push_back(sizes);
  int i = 0;
  for (const auto& row : j.at("chars")) {
    std::vector<std::string> r{"chi" + std::to_string(i++), ""};
    for (const auto& x : row)
      r.push_back(cyclo_text(x));
    cells.push_back(r);
  }
  return table_text(cells);
}

inline std::string irreps_text(const json& j) {
  std::vector<std::vector<std::string>> cells{{"index", "a", "class", "char", "dim", "C_G(a)"}};
  for (const auto& s : j)
    cells.push_back({std::to_string(s.at("index").get<int>()), std::to_string(s.at("a").get<int>()),
                     std::to_string(s.at("class").get<int>()), std::to_string(s.at("char").get<int>()),
                     std::to_string(s.at("dim").get<int>()),
                     "<" + s.at("centralizer").get<std::string>() + "> order " +
                         std::to_string(s.at("centralizer_order").get<int>())});
  return table_text(cells);
}

inline std::string smatrix_text(const json& j) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : j.at("s")) {
    std::vector<std::string> r;
    for (const auto& x : row)
      r.push_back(cyclo_text(x));
    cells.push_back(r);
  }
  return table_text(cells);
}

inline std::string fusion_text(const json& j) {
  std::ostringstream os;
  for (const auto& r : j.at("rules"))
    os << "V" << r[0] << " x V" << r[1] << " -> " << r[3] << " V" << r[2] << "\n";
  return os.str();
}

inline std::string coideals_text(const json& j) {
  std::vector<std::vector<std::string>> cells{{"index", "coideal", "dim", "Rep(A//L)"}};
  for (const auto& c : j)
    cells.push_back({std::to_string(c.at("index").get<int>()), c.at("label").get<std::string>(),
                     std::to_string(c.at("dim").get<int>()), c.at("quotient").dump()});
  return table_text(cells);
}

inline std::string lattice_text(const json& j) {
  std::vector<std::vector<std::string>> cells{{"index", "subcategory", "fpdim", "simples", "centralizer"}};
  const auto& cents = j.at("centralizer");
  for (const auto& n : j.at("nodes")) {
    int i = n.at("index").get<int>();
    cells.push_back({std::to_string(i), n.at("label").get<std::string>(),
                     std::to_string(n.at("fpdim").get<std::int64_t>()), n.at("simples").dump(),
                     std::to_string(cents[i][1].get<int>())});
  }
  return table_text(cells);
}

inline std::string integral_text(const json& j) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : j) {
    os << (first ? "" : " + ") << "(" << cyclo_text(t[1]) << ")*e" << t[0].get<int>();
    first = false;
  }
  if (first)
    os << "0";
  os << "\n";
  return os.str();
}

} // namespace hopfcat

#endif
