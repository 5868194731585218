// twistlab command line front end
#include "twistlab/algebra.hpp"
#include "twistlab/families.hpp"
#include "twistlab/json_io.hpp"
#include "twistlab/quasistd.hpp"
#include "twistlab/standard.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace twistlab;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

TwistingFamily load(const std::string& path) { return family_from_string(read_input(path)); }

std::vector<size_t> parse_indices(const std::string& s, size_t count, const std::string& what) {
  std::vector<size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size() || v < 1) throw InputError("");
      out.push_back(size_t(v - 1));
    } catch (...) {
      throw InputError(what + ": expected positive integers, got '" + s + "'");
    }
  }
  if (out.size() != count) throw InputError(what + ": expected " + std::to_string(count) + " comma separated indices");
  return out;
}

Vec parse_vec(const std::string& s) {
  Vec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(parse_rat(tok));
  return v;
}

std::string ranks_str(const std::vector<std::vector<size_t>>& g) {
  std::string s;
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) s += " ";
    for (size_t v : g[i]) s += std::to_string(v);
  }
  return s;
}

json ranks_json(const std::vector<std::vector<size_t>>& g) { return json(g); }

// one line: rows of the grid separated by '/', then the arrows
std::string quiver_compact(const StandardQuiver& q) {
  std::string s;
  for (size_t j = 0; j < q.n; ++j) {
    if (j) s += "/";
    for (size_t l = 0; l < q.m; ++l) s += q.vertex[j][l] ? "•" : "o";
  }
  for (const auto& a : q.arrows) {
    s += " a" + std::to_string(a.j + 1) + std::to_string(a.l + 1) + ":" + std::to_string(a.j + 1) + std::to_string(a.i + 1) +
         "->" + std::to_string(a.k + 1) + std::to_string(a.l + 1);
  }
  return s;
}

json quiver_json(const StandardQuiver& q) {
  json v = json::array(), a = json::array();
  for (size_t j = 0; j < q.n; ++j)
    for (size_t l = 0; l < q.m; ++l)
      if (q.vertex[j][l]) v.push_back({j + 1, l + 1});
  for (const auto& ar : q.arrows)
    a.push_back({{"cell", {ar.j + 1, ar.l + 1}}, {"source", {ar.j + 1, ar.i + 1}}, {"target", {ar.k + 1, ar.l + 1}}});
  return {{"m", q.m}, {"n", q.n}, {"vertices", v}, {"arrows", a}};
}

std::string site_str(const Site& s) {
  auto p = [](size_t a, size_t b) { return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")"; };
  return p(s.k, s.u) + p(s.d, s.v) + p(s.ck, s.l);
}

json site_json(const Site& s) { return json{s.k + 1, s.u + 1, s.d + 1, s.v + 1, s.ck + 1, s.l + 1}; }

// every deformation chain below a class representative, one entry per node
std::vector<std::string> chain_strings(const TwistingFamily& rep, const Rat& lambda) {
  std::vector<std::string> out;
  auto nodes = explore_chains(rep, lambda);
  for (size_t i = 1; i < nodes.size(); ++i) {
    std::string s;
    for (size_t p = 0; p < nodes[i].path.size(); ++p) s += (p ? " > " : "") + site_str(nodes[i].path[p]);
    out.push_back(s);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) r += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

void print_classes(const ClassificationReport& r, const std::string& format, const Rat& lambda) {
  std::vector<std::vector<std::string>> chains(r.classes.size());
  bool any_chain = false;
  for (size_t c = 0; c < r.classes.size(); ++c) {
    chains[c] = chain_strings(r.classes[c].rep, lambda);
    any_chain = any_chain || !chains[c].empty();
  }
  if (format == "json") {
    json out = json::array();
    for (size_t c = 0; c < r.classes.size(); ++c) {
      const auto& ci = r.classes[c];
      json row = {{"index", c + 1},
                  {"sum_tr", to_string(ci.sum_tr)},
                  {"gamma", ranks_json(ci.ranks.gamma)},
                  {"gamma_tilde", ranks_json(ci.ranks.gamma_tilde)},
                  {"equiv", ci.orbit_size},
                  {"representative", family_to_json(ci.rep)}};
      if (ci.quiver) row["quiver"] = quiver_json(*ci.quiver);
      if (any_chain) row["quasi_st"] = chains[c];
      out.push_back(row);
    }
    std::cout << json{{"total", r.total}, {"classes", out}}.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "index,sum_tr,quiver,gamma,gamma_tilde,equiv" << (any_chain ? ",quasi_st" : "") << "\n";
    for (size_t c = 0; c < r.classes.size(); ++c) {
      const auto& ci = r.classes[c];
      std::cout << c + 1 << "," << to_string(ci.sum_tr) << "," << csv_quote(ci.quiver ? quiver_compact(*ci.quiver) : "")
                << "," << csv_quote(ranks_str(ci.ranks.gamma)) << "," << csv_quote(ranks_str(ci.ranks.gamma_tilde)) << ","
                << ci.orbit_size;
      if (any_chain) {
        std::string s;
        for (size_t i = 0; i < chains[c].size(); ++i) s += (i ? "; " : "") + chains[c][i];
        std::cout << "," << csv_quote(s);
      }
      std::cout << "\n";
    }
    return;
  }
  if (format != "md") throw InputError("unknown format " + format);
  std::cout << "| # | ΣTr | quiver | Γ | Γ̃ | # equiv |" << (any_chain ? " quasi-st. |" : "") << "\n";
  std::cout << "|---|---|---|---|---|---|" << (any_chain ? "---|" : "") << "\n";
  for (size_t c = 0; c < r.classes.size(); ++c) {
    const auto& ci = r.classes[c];
    std::cout << "| " << c + 1 << " | " << to_string(ci.sum_tr) << " | `" << (ci.quiver ? quiver_compact(*ci.quiver) : "")
              << "` | " << ranks_str(ci.ranks.gamma) << " | " << ranks_str(ci.ranks.gamma_tilde) << " | "
              << ci.orbit_size << " |";
    if (any_chain) {
      std::string s;
      for (size_t i = 0; i < chains[c].size(); ++i) s += (i ? "<br>" : "") + chains[c][i];
      std::cout << " " << s << " |";
    }
    std::cout << "\n";
  }
  std::cout << "\ntotal: " << r.total << " maps in " << r.classes.size() << " classes\n";
}

TwistingFamily make_family(const std::string& name, size_t m, size_t n, const std::string& a, const std::string& x,
                           const std::string& y, const std::string& z, int variant, const std::vector<std::string>& vecs) {
  if (name == "flip") return family_flip(m, n);
  if (name == "two_by_two_a" || name == "2x2") return family_2x2(parse_rat(a));
  if (name == "sumtr6_222") return family_sumtr6_222(parse_rat(a), variant);
  if (name == "sumtr3_allones") return family_sumtr3_allones(parse_rat(a));
  if (name == "sumtr3_mixed") return family_sumtr3_mixed(parse_rat(a), parse_rat(x), parse_rat(y));
  if (name == "sumtr5") return family_sumtr5(parse_rat(a), parse_rat(z));
  if (name == "crossproduct_xi") {
    std::vector<Vec> vs;
    for (const auto& v : vecs) vs.push_back(parse_vec(v));
    return crossproduct_xi(vs).family;
  }
  throw InputError("unknown family '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistlab: twisting maps of K^m with K^n"};
  app.require_subcommand(1);

  std::string file = "-", format = "json", lambda_s = "1", site_s, side = "A", name;
  size_t m = 0, n = 0, index = 1;
  bool do_classify = false, dot = false, grid = false;
  std::string a_s = "2", x_s = "1", y_s = "1", z_s = "1", alpha_s = "2";
  int variant = 1;
  std::vector<std::string> vecs;

  auto* verify_cmd = app.add_subcommand("verify", "check the twisting conditions");
  verify_cmd->add_option("file", file, "family JSON, - for stdin");

  auto* enum_cmd = app.add_subcommand("enumerate-standard", "list every standard twisting map");
  enum_cmd->add_option("--m", m)->required();
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_flag("--classify", do_classify);
  enum_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "md", "csv"}));

  auto* table_cmd = app.add_subcommand("classify-table", "standard maps up to isomorphism");
  table_cmd->add_option("--m", m)->required();
  table_cmd->add_option("--n", n)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "md", "csv"}));
  table_cmd->add_option("--lambda", lambda_s, "value used for the deformation chains");

  auto* quiver_cmd = app.add_subcommand("quiver", "quiver of a standard or quasi-standard map");
  quiver_cmd->add_option("file", file);
  quiver_cmd->add_flag("--dot", dot);
  quiver_cmd->add_flag("--grid", grid);
  quiver_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "grid"}));

  auto* radical_cmd = app.add_subcommand("radical", "Jacobson radical of the twisted tensor product");
  radical_cmd->add_option("file", file);

  auto* deform_cmd = app.add_subcommand("deform", "apply a deformation at a site");
  deform_cmd->add_option("file", file);
  deform_cmd->add_option("--site", site_s, "k,u,d,v,ck,l (1-based)")->required();
  deform_cmd->add_option("--lambda", lambda_s)->required();

  auto* sites_cmd = app.add_subcommand("sites", "deformation sites of a quasi-standard map");
  sites_cmd->add_option("file", file);
  sites_cmd->add_option("--lambda", lambda_s, "value used for the admissibility test");

  auto* family_cmd = app.add_subcommand("family", "print one of the built-in families");
  family_cmd->add_option("name", name)->required();
  family_cmd->add_option("--m", m);
  family_cmd->add_option("--n", n);
  family_cmd->add_option("--a", a_s);
  family_cmd->add_option("--x", x_s);
  family_cmd->add_option("--y", y_s);
  family_cmd->add_option("--z", z_s);
  family_cmd->add_option("--alpha", alpha_s);
  family_cmd->add_option("--variant", variant)->check(CLI::IsMember({1, 2}));
  family_cmd->add_option("--vector", vecs, "v_2..v_n for crossproduct_xi, comma separated");

  auto* rep_cmd = app.add_subcommand("rep", "matrix representation of the algebra");
  rep_cmd->add_option("file", file);
  rep_cmd->add_option("--index", index, "1-based column (A side) or row (B side)");
  rep_cmd->add_option("--side", side)->check(CLI::IsMember({"A", "B"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify_cmd->parsed()) {
      std::cout << report_to_json(verify(load(file))).dump() << "\n";
    } else if (enum_cmd->parsed() || table_cmd->parsed()) {
      Rat lambda = parse_rat(lambda_s);
      auto fams = enumerate_standard(m, n);
      if (table_cmd->parsed() || do_classify) {
        if (table_cmd->parsed() && format == "json" && table_cmd->count("--format") == 0) format = "md";
        print_classes(classify(fams), format, lambda);
      } else if (format == "json") {
        json out = json::array();
        for (const auto& f : fams) out.push_back(family_to_json(f));
        std::cout << out.dump() << "\n";
      } else {
        bool md = format == "md";
        std::cout << (md ? "| # | ΣTr | quiver | Γ | Γ̃ |\n|---|---|---|---|---|\n" : "index,sum_tr,quiver,gamma,gamma_tilde\n");
        for (size_t i = 0; i < fams.size(); ++i) {
          auto q = quiver_of(fams[i]);
          auto rk = rank_matrices(fams[i]);
          if (md)
            std::cout << "| " << i + 1 << " | " << to_string(sum_trace(fams[i])) << " | `" << quiver_compact(q) << "` | "
                      << ranks_str(rk.gamma) << " | " << ranks_str(rk.gamma_tilde) << " |\n";
          else
            std::cout << i + 1 << "," << to_string(sum_trace(fams[i])) << "," << csv_quote(quiver_compact(q)) << ","
                      << csv_quote(ranks_str(rk.gamma)) << "," << csv_quote(ranks_str(rk.gamma_tilde)) << "\n";
        }
      }
    } else if (quiver_cmd->parsed()) {
      auto q = quiver_of(load(file));
      if (dot || format == "dot")
        std::cout << quiver_to_dot(q);
      else if (grid || quiver_cmd->count("--format") == 0 || format == "grid")
        std::cout << quiver_to_grid(q);
      else
        std::cout << quiver_json(q).dump() << "\n";
    } else if (radical_cmd->parsed()) {
      auto f = load(file);
      auto r = jacobson_radical(build_algebra(f));
      json basis = json::array();
      for (auto [j, l] : r.basis) basis.push_back({j + 1, l + 1});
      std::cout << json{{"radical_basis", basis},
                        {"dim", r.dim},
                        {"square_zero", r.square_zero},
                        {"nilpotency_index", r.nilpotency_index},
                        {"quotient_dim", r.quotient_dim}}
                       .dump()
                << "\n";
    } else if (deform_cmd->parsed()) {
      auto f = load(file);
      auto ix = parse_indices(site_s, 6, "--site");
      Site s{ix[0], ix[1], ix[2], ix[3], ix[4], ix[5]};
      std::cout << family_to_json(deform(f, s, parse_rat(lambda_s))).dump() << "\n";
    } else if (sites_cmd->parsed()) {
      auto f = load(file);
      Rat lambda = parse_rat(lambda_s);
      if (!is_quasi_standard(f)) throw DomainError("sites: the map is not quasi-standard");
      json out = json::array();
      for (const auto& s : deformation_sites(f)) {
        auto r = try_deform(f, s, lambda);
        out.push_back({{"site", site_json(s)}, {"admissible", bool(r.family)}, {"obstruction", r.obstruction}});
      }
      std::cout << out.dump() << "\n";
    } else if (family_cmd->parsed()) {
      if (name == "non_quasi_column") {
        auto col = non_quasi_column(parse_rat(alpha_s), parse_rat(z_s));
        json out = json::array();
        for (const auto& M : col) out.push_back(mat_to_json(M));
        std::cout << out.dump() << "\n";
      } else {
        if (name == "flip" && (m == 0 || n == 0)) throw InputError("flip needs --m and --n");
        std::cout << family_to_json(make_family(name, m, n, a_s, x_s, y_s, z_s, variant, vecs)).dump() << "\n";
      }
    } else if (rep_cmd->parsed()) {
      auto f = load(file);
      if (index == 0) throw InputError("--index is 1-based");
      auto r = representation(f, index - 1, side == "A" ? RepSide::A : RepSide::B);
      TwistedAlgebra alg(f);
      json images = json::array();
      for (size_t b = 0; b < r.images.size(); ++b) {
        auto [j, l] = alg.label(b);
        images.push_back({{"x", {j + 1, l + 1}}, {"matrix", mat_to_json(r.images[b])}});
      }
      std::cout << json{{"size", r.size},
                        {"images", images},
                        {"image_dim", rep_image_dim(r)},
                        {"multiplicative", is_multiplicative(alg, r)}}
                       .dump()
                << "\n";
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
