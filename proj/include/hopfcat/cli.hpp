// The hopfcat command-line front end as a callable function, so tests can
// drive it without spawning processes.
//
// Exit codes: 0 success, 1 failed check or internal error, 2 usage error
// (bad flags, unknown group name, parse error, invalid triple), 3 bound
// exceeded.

#ifndef HOPFCAT_CLI_HPP_
#define HOPFCAT_CLI_HPP_

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "artifacts.hpp"
#include "cache.hpp"
#include "category.hpp"
#include "chartable.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "verify.hpp"

namespace hopfcat {

struct RunConfig {
  std::string group;
  int max_dim = kDefaultMaxAlgebraDim;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "text";
  std::string suite = "full";
  std::uint64_t seed = 0;
  std::string instance;
  std::string triple;
  std::string simples;
  std::string method = "all";
  int index = -1;
};

namespace impl {

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("usage: " + msg) {}
};

inline std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("expected a simple index", pos);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), cache_(cfg.cache_dir) {
    cache_.set_warning_stream(err);
  }

  const Group& group() {
    if (!group_) {
      if (cfg_.group.empty())
        throw UsageError("--group is required");
      group_ = parse_group_spec(cfg_.group);
    }
    return *group_;
  }

  bool triangular() const { return cfg_.instance == "triangular"; }

  const Instance& instance() {
    if (!instance_) {
      InstanceOptions opt;
      opt.max_dim = cfg_.max_dim;
      instance_ = triangular() ? analyze_triangular(group(), opt) : analyze_double(group(), opt);
    }
    return *instance_;
  }

  // Cached artifact: kind identifies it, make computes it on a miss.
  template <typename F>
  json cached(const std::string& kind, F make) {
    if (!cfg_.no_cache)
      if (auto hit = cache_.get(group(), kind))
        return *hit;
    json v = make();
    if (!cfg_.no_cache)
      cache_.put(group(), kind, v);
    return v;
  }

  // Emits j as JSON, or as text via render; DOT only where dot is given.
  template <typename Text>
  void emit(const json& j, Text render, const std::string* dot = nullptr) {
    if (cfg_.format == "json")
      out_ << j.dump(2) << "\n";
    else if (cfg_.format == "dot") {
      if (!dot)
        throw UsageError("--format dot is only available for 'subcats lattice'");
      out_ << *dot;
    } else
      out_ << render(j);
  }

  const RunConfig& cfg() const { return cfg_; }
  std::ostream& out() { return out_; }
  const Cache& cache() const { return cache_; }

 private:
  RunConfig cfg_;
  std::ostream& out_;
  Cache cache_;
  std::optional<Group> group_;
  std::optional<Instance> instance_;
};

inline std::string instance_suffix(const Session& s) { return s.triangular() ? "triangular" : "double"; }

inline int cmd_group_info(Session& s) {
  s.emit(group_info_json(s.group()), group_info_text);
  return 0;
}

inline int cmd_chartab(Session& s) {
  json j = s.cached("chartab", [&] { return chartable_to_json(character_table(s.group())); });
  s.emit(j, chartable_text);
  return 0;
}

inline int cmd_irreps(Session& s) {
  const Group& g = s.group();
  s.emit(irreps_json(g, double_irreps(g, std::max(kDefaultIrrepGroupBound, g.order()))), irreps_text);
  return 0;
}

inline int cmd_smatrix(Session& s) {
  json j = s.cached("smatrix-" + instance_suffix(s), [&] { return smatrix_json(s.instance()); });
  s.emit(j, smatrix_text);
  return 0;
}

inline int cmd_fusion(Session& s) {
  s.emit(fusion_json(s.instance()), fusion_text);
  return 0;
}

inline int cmd_coideals_list(Session& s) {
  s.emit(coideals_json(s.instance()), coideals_text);
  return 0;
}

inline int cmd_coideals_integral(Session& s) {
  const Instance& in = s.instance();
  int idx = s.cfg().index;
  if (!s.cfg().triple.empty()) {
    if (in.kind != InstanceKind::Double)
      throw UsageError("--triple names a coideal of the double");
    Triple t = parse_triple(in.group, s.cfg().triple);
    idx = -1;
    for (std::size_t i = 0; i < in.coideals.size(); ++i) {
      const auto& tag = in.coideals[i].coideal.tag;
      if (tag && tag->m == t.m && tag->h == t.h && tag->index == t.index)
        idx = static_cast<int>(i);
    }
    if (idx < 0) {
      // distinct triples can give the same subspace; match by subspace
      CoidealSubalgebra c = build_coideal(in.a(), in.group, t);
      idx = in.coideal_index(c.space);
    }
  }
  if (idx < 0 || static_cast<std::size_t>(idx) >= in.coideals.size())
    throw UsageError("coideals integral needs --index in [0, " + std::to_string(in.coideals.size()) +
                     ") or a valid --triple");
  const auto& c = in.coideals[idx];
  json j{{"index", idx}, {"label", impl::coideal_label(in, c.coideal)}, {"dim", c.coideal.dim()},
         {"integral", integral_json(c.coideal.integral)}};
  s.emit(j, [](const json& x) {
    return x.at("label").get<std::string>() + " dim " + std::to_string(x.at("dim").get<int>()) + "\n" +
           integral_text(x.at("integral"));
  });
  return 0;
}

inline json lattice_artifact(Session& s) {
  return s.cached("lattice-" + instance_suffix(s), [&] { return lattice_json(s.instance()); });
}

inline int cmd_subcats_list(Session& s) {
  json lat = lattice_artifact(s);
  s.emit(lat.at("nodes"), [&](const json&) { return lattice_text(lat); });
  return 0;
}

inline int cmd_subcats_lattice(Session& s) {
  json lat = lattice_artifact(s);
  std::string dot = lattice_dot(lat);
  s.emit(lat, lattice_text, &dot);
  return 0;
}

inline int cmd_centralizer(Session& s) {
  const RunConfig& cfg = s.cfg();
  if (cfg.triple.empty() == cfg.simples.empty())
    throw UsageError("centralizer needs exactly one of --triple and --simples");
  const Instance& in = s.instance();
  std::vector<int> d;
  if (!cfg.triple.empty()) {
    if (in.kind != InstanceKind::Double)
      throw UsageError("--triple names a subcategory of the double");
    Triple t = parse_triple(in.group, cfg.triple);
    d = subcat_from_triple(in.group, in.simples, in.n, in.dual, TripleTag{t.m, t.h, t.index, t.lambda}).simples;
  } else {
    d = parse_index_list(cfg.simples);
    if (d.back() >= static_cast<int>(in.rank()))
      throw UsageError("simple index out of range (rank " + std::to_string(in.rank()) + ")");
    if (!is_fusion_closed(in.n, in.dual, d))
      throw UsageError(impl::set_str(d) + " is not a fusion subcategory");
  }
  std::vector<CentralizerMethod> methods;
  if (cfg.method == "all")
    methods = {CentralizerMethod::SMatrix, CentralizerMethod::Phi, CentralizerMethod::Classes};
  else if (cfg.method == "smatrix")
    methods = {CentralizerMethod::SMatrix};
  else if (cfg.method == "phi")
    methods = {CentralizerMethod::Phi};
  else
    methods = {CentralizerMethod::Classes};

  int didx = in.subcat_index(d);
  json results = json::array();
  std::optional<std::vector<int>> first;
  bool agree = true;
  for (auto m : methods) {
    FusionSubcategory c = centralizer(in, d, m);
    int ci = in.subcat_index(c.simples);
    results.push_back({{"method", method_name(m)},
                       {"simples", c.simples},
                       {"fpdim", c.fpdim},
                       {"label", ci >= 0 ? subcat_label(in, in.lattice[ci]) : impl::set_str(c.simples)}});
    if (!first)
      first = c.simples;
    else if (*first != c.simples)
      agree = false;
  }
  json j{{"subcat", d},
         {"label", didx >= 0 ? subcat_label(in, in.lattice[didx]) : impl::set_str(d)},
         {"fpdim", fpdim_of(d, in.dims)},
         {"results", results},
         {"agree", agree}};
  s.emit(j, [](const json& x) {
    std::ostringstream os;
    os << "D = " << x.at("label").get<std::string>() << " " << x.at("subcat").dump() << " fpdim "
       << x.at("fpdim") << "\n";
    for (const auto& r : x.at("results"))
      os << "  " << r.at("method").get<std::string>() << ": D' = " << r.at("label").get<std::string>() << " "
         << r.at("simples").dump() << " fpdim " << r.at("fpdim") << "\n";
    os << (x.at("agree").get<bool>() ? "methods agree\n" : "methods DISAGREE\n");
    return os.str();
  });
  return agree ? 0 : 1;
}

inline int cmd_verify(Session& s) {
  const RunConfig& cfg = s.cfg();
  Suite suite = cfg.suite == "smoke" ? Suite::Smoke : Suite::Full;
  const Group& g = s.group();
  std::vector<std::string> kinds;
  if (cfg.instance.empty() || cfg.instance == "both")
    kinds = {"double", "triangular"};
  else
    kinds = {cfg.instance};

  Report all;
  all.group = g.name();
  all.instance = kinds.size() == 1 ? kinds[0] : "both";
  std::string text;
  for (const auto& kind : kinds) {
    long dim = kind == "double" ? static_cast<long>(g.order()) * g.order() : g.order();
    Report r;
    if (dim > cfg.max_dim) {
      r = skipped_report(g.name(), kind, suite,
                         "dim bound (" + std::to_string(dim) + " > " + std::to_string(cfg.max_dim) + ")");
    } else {
      InstanceOptions opt;
      opt.max_dim = cfg.max_dim;
      Instance in = kind == "double" ? analyze_double(g, opt) : analyze_triangular(g, opt);
      r = verify_identities(in, suite, cfg.seed);
    }
    text += r.summary();
    for (const auto& c : r.checks)
      if (!c.pass)
        text += "  FAILED " + c.id + " " + c.subject.dump() + ": " + c.detail + "\n";
    for (auto c : r.checks) {
      c.subject["instance"] = kind;
      all.checks.push_back(std::move(c));
    }
  }
  all.sort();
  text += all.all_pass() ? "all checks pass\n" : "some checks FAILED\n";
  s.emit(all.to_json(), [&](const json&) { return text; });
  return all.all_pass() ? 0 : 1;
}

} // namespace impl

// Runs the CLI on args (without the program name). Output goes to out,
// diagnostics to err.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Drinfeld doubles of finite groups: fusion subcategories and Mueger centralizers", "hopfcat"};
  app.set_version_flag("--version", std::string(HOPFCAT_VERSION));
  app.require_subcommand(1);

  auto common = [&](CLI::App* c, bool needs_group = true) {
    if (needs_group)
      c->add_option("-g,--group", cfg.group, "group spec: catalog name, perm:<cycles> or cayley:<path>")
          ->required();
    c->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    c->add_option("--max-dim", cfg.max_dim, "largest algebra dimension to build")->check(CLI::PositiveNumber);
    c->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $HOPFCAT_CACHE or ~/.cache/hopfcat)");
    c->add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");
  };
  auto instance_opt = [&](CLI::App* c, bool both) {
    std::vector<std::string> allowed{"double", "triangular"};
    if (both)
      allowed.push_back("both");
    c->add_option("--instance", cfg.instance, "quasitriangular instance: D(kG) or the triangular kG")
        ->check(CLI::IsMember(allowed));
  };

  std::string action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->callback([&action, c, parent] { action = parent->get_name() + " " + c->get_name(); });
    return c;
  };

  CLI::App* group = app.add_subcommand("group", "group data");
  group->require_subcommand(1);
  common(leaf(group, "info", "order, classes and normal subgroups"));

  CLI::App* chartab = app.add_subcommand("chartab", "character table");
  common(chartab);

  CLI::App* dbl = app.add_subcommand("double", "simples, S-matrix and fusion rules of D(kG)");
  dbl->require_subcommand(1);
  common(leaf(dbl, "irreps", "simple D(kG)-modules"));
  CLI::App* sm = leaf(dbl, "smatrix", "exact S-matrix");
  common(sm);
  CLI::App* fu = leaf(dbl, "fusion", "nonzero fusion coefficients");
  common(fu);

  CLI::App* coi = app.add_subcommand("coideals", "coideal subalgebras");
  coi->require_subcommand(1);
  CLI::App* cl = leaf(coi, "list", "the coideal family with Rep(A//L)");
  common(cl);
  instance_opt(cl, false);
  CLI::App* ci = leaf(coi, "integral", "normalized integral of one coideal");
  common(ci);
  instance_opt(ci, false);
  ci->add_option("--index", cfg.index, "coideal index from 'coideals list'");
  ci->add_option("--triple", cfg.triple, "M=<gens>,H=<gens>,B=<index|triv>");

  CLI::App* sub = app.add_subcommand("subcats", "fusion subcategories");
  sub->require_subcommand(1);
  CLI::App* sl = leaf(sub, "list", "all fusion subcategories");
  common(sl);
  instance_opt(sl, false);
  CLI::App* sla = leaf(sub, "lattice", "the lattice with covers and centralizers");
  common(sla);
  instance_opt(sla, false);

  CLI::App* cen = app.add_subcommand("centralizer", "Mueger centralizer of a subcategory");
  common(cen);
  instance_opt(cen, false);
  cen->add_option("--triple", cfg.triple, "subcategory S(M,H,B) as M=<gens>,H=<gens>,B=<index|triv>");
  cen->add_option("--simples", cfg.simples, "subcategory as comma-separated simple indices");
  cen->add_option("--method", cfg.method, "centralizer method")
      ->check(CLI::IsMember({"smatrix", "phi", "classes", "all"}));
  cen->callback([&] { action = "centralizer"; });

  CLI::App* ver = app.add_subcommand("verify", "run the identity checks");
  common(ver);
  instance_opt(ver, true);
  ver->add_option("--suite", cfg.suite, "check suite")->check(CLI::IsMember({"smoke", "full"}));
  ver->add_option("--seed", cfg.seed, "seed for the sampled checks");
  ver->callback([&] { action = "verify"; });

  CLI::App* cache = app.add_subcommand("cache", "cache maintenance");
  cache->require_subcommand(1);
  CLI::App* purge = leaf(cache, "purge", "delete all cache entries");
  purge->add_option("--cache-dir", cfg.cache_dir, "cache directory");

  chartab->callback([&] { action = "chartab"; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << HOPFCAT_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    impl::Session s(cfg, out, err);
    if (action == "group info") return impl::cmd_group_info(s);
    if (action == "chartab") return impl::cmd_chartab(s);
    if (action == "double irreps") return impl::cmd_irreps(s);
    if (action == "double smatrix") return impl::cmd_smatrix(s);
    if (action == "double fusion") return impl::cmd_fusion(s);
    if (action == "coideals list") return impl::cmd_coideals_list(s);
    if (action == "coideals integral") return impl::cmd_coideals_integral(s);
    if (action == "subcats list") return impl::cmd_subcats_list(s);
    if (action == "subcats lattice") return impl::cmd_subcats_lattice(s);
    if (action == "centralizer") return impl::cmd_centralizer(s);
    if (action == "verify") return impl::cmd_verify(s);
    if (action == "cache purge") {
      std::size_t n = s.cache().purge();
      out << "removed " << n << " cache entr" << (n == 1 ? "y" : "ies") << " from " << s.cache().dir().string()
          << "\n";
      return 0;
    }
    err << "error: no command\n";
    return 2;
  } catch (const impl::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MethodPreconditionViolated& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace hopfcat

#endif
