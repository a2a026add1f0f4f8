#include "cli.hpp"

#include "msym/error.hpp"
#include "msym/json_io.hpp"
#include "msym/msf.hpp"
#include "msym/oracle.hpp"
#include "msym/relations.hpp"
#include "msym/rewrite.hpp"
#include "msym/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace msym::cli {

using nlohmann::json;

namespace {

MsfElement read_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return element_from_string(buf.str());
}

Multidegree read_bound(const std::vector<Exponent>& entries, std::size_t m) {
  if (entries.size() != m) {
    throw ParseError("--max-degree needs " + std::to_string(m) + " comma-separated entries");
  }
  return Multidegree(entries);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::vector<std::string> files;
  bool text = false;
  bool check = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string ring = "Z";
  std::vector<Exponent> max_degree;
  std::uint64_t max_total_degree = 4;
};

int cmd_product(const Options& o, std::ostream& out) {
  const MsfElement x = read_element(o.files.at(0));
  const MsfElement y = read_element(o.files.at(1));
  const MsfElement z = product(x, y);
  if (o.text) {
    out << z.to_string() << '\n';
  } else {
    emit(out, to_json(z));
  }
  return kOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const MsfElement x = read_element(o.files.at(0));
  if (!x.ambient().is_finite()) throw ParseError("expand needs a finite n");
  const NPoly p = expand(x);
  if (o.text) {
    out << p.to_string() << '\n';
  } else {
    emit(out, to_json(p));
  }
  return kOk;
}

// Compares x with the evaluation of its rewrite through expansions in
// A(N,m), N = n or, for the infinite ambient, the largest total degree.
bool rewrite_round_trips(const MsfElement& x, const GenPoly& g) {
  const MsfElement back = evaluate(g, x.ambient());
  if (x.ambient().is_finite()) return expand(back) == expand(x) && back == x;
  std::uint64_t top = 1;
  for (const auto& [alpha, c] : x.terms()) top = std::max<std::uint64_t>(top, alpha.multidegree().total());
  for (const auto& [alpha, c] : back.terms()) top = std::max<std::uint64_t>(top, alpha.multidegree().total());
  const Ambient faithful = Ambient::finite(top);
  return back == x && expand(truncate(back, faithful)) == expand(truncate(x, faithful));
}

int cmd_rewrite(const Options& o, std::ostream& out) {
  const MsfElement x = read_element(o.files.at(0));
  const GenPoly g = rewrite(x);
  std::optional<bool> ok;
  if (o.check) ok = rewrite_round_trips(x, g);
  if (o.text) {
    out << g.to_string() << '\n';
    if (ok) out << (*ok ? "PASS" : "FAIL") << '\n';
  } else {
    const json n = x.ambient().is_finite() ? json(x.ambient().size()) : json("inf");
    json j = {{"genpoly", to_json(g)}, {"n", n}};
    if (ok) j["check"] = *ok ? "PASS" : "FAIL";
    emit(out, j);
  }
  return ok && !*ok ? kCheckFailed : kOk;
}

int cmd_relations(const Options& o, std::ostream& out) {
  const Ring ring = Ring::parse(o.ring);
  if (o.n < 1 || o.m < 1) throw ParseError("--n and --m must be positive");
  const Multidegree bound = read_bound(o.max_degree, o.m);

  Rewriter rewriter(Ambient::infinite(), o.m, ring);
  json groups = json::array();
  std::size_t total = 0;
  bool all_ok = true;
  for (const auto& a : multidegrees_up_to(bound)) {
    const auto rels = relations_in_multidegree(o.n, a, rewriter);
    if (rels.empty()) continue;
    json items = json::array();
    bool group_ok = true;
    for (const auto& rel : rels) {
      const bool ok = !rel.poly.is_zero() && relation_vanishes(rel.poly, o.n);
      group_ok = group_ok && ok;
      items.push_back({{"alpha", to_json(rel.alpha)}, {"genpoly", rel.poly.to_string()}, {"verified", ok}});
      if (o.text) {
        out << a.to_string() << " " << rel.alpha.to_string() << ": " << rel.poly.to_string()
            << (ok ? "" : "  [FAILED]") << '\n';
      }
    }
    total += rels.size();
    all_ok = all_ok && group_ok;
    groups.push_back({{"multidegree", to_json(a)}, {"count", rels.size()}, {"verified", group_ok}, {"relations", items}});
  }
  if (!o.text) {
    emit(out, {{"n", o.n},
               {"m", o.m},
               {"ring", ring.to_string()},
               {"max_degree", to_json(bound)},
               {"count", total},
               {"verified", all_ok},
               {"multidegrees", groups}});
  }
  return all_ok ? kOk : kRelationFailed;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const Ring ring = Ring::parse(o.ring);
  if (o.n < 1 || o.m < 1) throw ParseError("--n and --m must be positive");
  const Multidegree bound = read_bound(o.max_degree, o.m);
  json groups = json::array();
  for (const auto& a : multidegrees_up_to(bound)) {
    json alphas = json::array();
    std::size_t count = 0;
    for (const auto& alpha : enumerate_alpha(a)) {
      if (alpha.weight() > o.n) continue;
      ++count;
      alphas.push_back(to_json(alpha));
      if (o.text) out << a.to_string() << " " << alpha.to_string() << '\n';
    }
    const std::size_t orbits = oracle::invariant_basis(o.n, o.m, a, ring).size();
    groups.push_back({{"multidegree", to_json(a)}, {"count", count}, {"orbits", orbits}, {"basis", alphas}});
  }
  if (!o.text) emit(out, {{"n", o.n}, {"m", o.m}, {"ring", ring.to_string()}, {"multidegrees", groups}});
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Ring ring = Ring::parse(o.ring);
  const VerifyReport report = verify(o.n, o.m, o.max_total_degree, ring);
  if (o.text) {
    for (const auto& p : report.properties) {
      out << p.name << ": " << (p.pass ? "PASS" : "FAIL") << " (" << p.checked << " checked)";
      if (!p.pass) out << " first failure: " << p.first_failure;
      out << '\n';
    }
  } else {
    json props = json::array();
    for (const auto& p : report.properties) {
      json j = {{"name", p.name}, {"pass", p.pass}, {"checked", p.checked}};
      if (!p.pass) j["first_failure"] = p.first_failure;
      props.push_back(j);
    }
    emit(out, {{"n", o.n},
               {"m", o.m},
               {"ring", ring.to_string()},
               {"max_total_degree", o.max_total_degree},
               {"properties", props},
               {"pass", report.pass()}});
  }
  return report.pass() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in rings of multisymmetric functions", "msym"};
  app.require_subcommand(1);
  Options o;

  auto add_text = [&](CLI::App* sub) { sub->add_flag("--text", o.text, "Print human-readable text instead of JSON"); };
  auto add_ambient = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of slots n")->required();
    sub->add_option("--m", o.m, "Number of variables m")->required();
    sub->add_option("--ring", o.ring, "Coefficient ring: Z, Q or Zmod:<p>");
  };

  auto* product_cmd = app.add_subcommand("product", "Multiply two elements");
  product_cmd->add_option("files", o.files, "Two element files")->required()->expected(2);
  add_text(product_cmd);

  auto* expand_cmd = app.add_subcommand("expand", "Expand an element into A(n,m)");
  expand_cmd->add_option("file", o.files, "Element file")->required()->expected(1);
  add_text(expand_cmd);

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Rewrite an element in the generators e_{i,nu}");
  rewrite_cmd->add_option("file", o.files, "Element file")->required()->expected(1);
  rewrite_cmd->add_flag("--check", o.check, "Re-evaluate the rewrite and compare");
  add_text(rewrite_cmd);

  auto* relations_cmd = app.add_subcommand("relations", "Relations of A(n,m)^{S_n} up to a multidegree");
  add_ambient(relations_cmd);
  relations_cmd->add_option("--max-degree", o.max_degree, "Multidegree bound d1,...,dm")->required()->delimiter(',');
  add_text(relations_cmd);

  auto* basis_cmd = app.add_subcommand("basis", "List the e_alpha basis up to a multidegree");
  add_ambient(basis_cmd);
  basis_cmd->add_option("--max-degree", o.max_degree, "Multidegree bound d1,...,dm")->required()->delimiter(',');
  add_text(basis_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the differential property suite");
  add_ambient(verify_cmd);
  verify_cmd->add_option("--max-total-degree", o.max_total_degree, "Total degree bound");
  add_text(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (product_cmd->parsed()) return cmd_product(o, out);
    if (expand_cmd->parsed()) return cmd_expand(o, out);
    if (rewrite_cmd->parsed()) return cmd_rewrite(o, out);
    if (relations_cmd->parsed()) return cmd_relations(o, out);
    if (basis_cmd->parsed()) return cmd_basis(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const AmbientMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kAmbientMismatch;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace msym::cli
