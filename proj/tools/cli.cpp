#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "asc/coefficients.hpp"
#include "asc/eg.hpp"
#include "asc/involution.hpp"

namespace asc::cli {

namespace {

using nlohmann::json;

int max_degree() {
  const char* env = std::getenv("CRYSTAL_MAX_DEGREE");
  if (!env) return 12;
  return std::atoi(env);
}

void check_degree(long long degree) {
  if (degree > max_degree())
    throw DomainError("degree " + std::to_string(degree) +
                      " exceeds CRYSTAL_MAX_DEGREE (" +
                      std::to_string(max_degree()) + ")");
}

struct ElementInput {
  std::string window_text;
  std::string word_text;
  int n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--window", window_text,
                    "window, e.g. \"[-2,0,1,4,12]\"");
    cmd->add_option("--word", word_text, "reduced word, e.g. 3,4,1,2");
    cmd->add_option("--n", n, "rank (required with --word)");
  }

  AffinePermutation get() const {
    if (!window_text.empty() && !word_text.empty())
      throw DomainError("give exactly one of --window / --word");
    if (!window_text.empty())
      return AffinePermutation::from_window(parse_window(window_text));
    if (!word_text.empty()) {
      if (n <= 0) throw DomainError("--word requires --n");
      return AffinePermutation::from_reduced_word(parse_int_list(word_text),
                                                  n);
    }
    throw DomainError("give one of --window / --word");
  }
};

json expansion_json(const SchurExpansion& e) {
  json coeffs = json::object();
  for (const auto& [p, c] : e.terms) coeffs[p.to_string()] = c;
  return json{{"basis", basis_name(e.basis)},
              {"coefficients", coeffs},
              {"method", method_name(e.method)},
              {"hypotheses_met", e.hypotheses_met}};
}

Method parse_method(const std::string& s) {
  if (s == "crystal") return Method::Crystal;
  if (s == "alternating") return Method::Alternating;
  if (s == "oracle") return Method::Oracle;
  if (s == "auto" || s.empty()) return Method::Auto;
  throw DomainError("unknown method: " + s);
}

std::vector<std::pair<int, long long>> parse_rect_ops(
    const std::string& text) {
  // "4" or "4^2,3^-1": R_4^2 R_3^{-1}
  std::vector<std::pair<int, long long>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    if (caret == std::string::npos)
      out.emplace_back(std::stoi(item), 1);
    else
      out.emplace_back(std::stoi(item.substr(0, caret)),
                       std::stoll(item.substr(caret + 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounded self-test suites, one per subcommand.
// ---------------------------------------------------------------------------

bool selftest_expand(std::ostream& out) {
  bool ok = true;
  for (auto word : std::vector<std::vector<int>>{
           {3, 4, 1, 2}, {1, 2, 1}, {2, 1, 3, 2}, {0, 3}}) {
    AffinePermutation w = AffinePermutation::from_reduced_word(word, 5);
    ok &= stanley_schur_expansion(w, Method::Crystal).terms ==
          stanley_schur_expansion(w, Method::Alternating).terms;
  }
  out << (ok ? "PASS" : "FAIL") << " crystal/alternating agreement\n";
  return ok;
}

bool selftest_crystal(std::ostream& out) {
  AffinePermutation w = AffinePermutation::from_reduced_word({3, 4, 1, 2}, 5);
  CrystalGraph g = build_crystal(w, 3);
  bool ok = g.vertices.size() == 9 && g.edges.size() == 8 &&
            g.num_components() == 2;
  out << (ok ? "PASS" : "FAIL") << " figure-one counts\n";
  bool ax = verify_stembridge(g).all_pass();
  out << (ax ? "PASS" : "FAIL") << " stembridge axioms\n";
  return ok && ax;
}

bool selftest_highest_weights(std::ostream& out) {
  AffinePermutation sigma =
      AffinePermutation::from_reduced_word({6, 2, 3, 4, 3, 1, 2, 0}, 7);
  auto hw = highest_weight_factorizations(sigma, Partition{3, 3, 2});
  bool ok = hw.size() == 1 && hw[0].to_string(5) == "(26)(310)(432)";
  out << (ok ? "PASS" : "FAIL") << " highest weight golden\n";
  return ok;
}

bool selftest_count(std::ostream& out) {
  AffinePermutation sigma =
      AffinePermutation::from_reduced_word({6, 2, 3, 4, 3, 1, 2, 0}, 7);
  bool ok = true;
  for (Composition a : {Composition{3, 3, 2}, Composition{2, 3, 3},
                        Composition{3, 2, 3}})
    ok &= count_factorizations(sigma, a) == 4;
  out << (ok ? "PASS" : "FAIL") << " weight-rearrangement symmetry\n";
  bool par = enumerate_factorizations(sigma, {3, 3, 2}) ==
             enumerate_factorizations_serial(sigma, {3, 3, 2});
  out << (par ? "PASS" : "FAIL") << " parallel matches serial\n";
  return ok && par;
}

bool selftest_lr(std::ostream& out) {
  bool ok = true;
  int n = 4;
  for (int d = 0; d <= 2; ++d) {
    for (const Partition& lam : partitions_of(d, n - 1)) {
      AffinePermutation w = w_lambda(lam, n);
      for (const Partition& mu :
           std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}}) {
        for (const Partition& nu :
             partitions_of(d + mu.size(), n - 1)) {
          long long a = affine_lr(mu, w, w_lambda(nu, n)).value;
          long long b =
              affine_lr(mu, w, w_lambda(nu, n), {}, Method::Oracle).value;
          ok &= a == b;
        }
      }
    }
  }
  out << (ok ? "PASS" : "FAIL") << " crystal equals oracle (n=4 sweep)\n";
  return ok;
}

bool selftest_gw(std::ostream& out) {
  AffinePermutation u = AffinePermutation::from_window({1, 2, 4, 7, 3, 5, 6});
  AffinePermutation w = AffinePermutation::from_window({3, 1, 5, 4, 2, 6, 7});
  AffinePermutation v = AffinePermutation::from_window({4, 2, 5, 7, 1, 3, 6});
  GwResult r = gw_invariant(u, w, v, {0, 0, 0, 0, 0, 0});
  bool ok = r.value == 1 && r.mu == Partition{3, 3, 2};
  out << (ok ? "PASS" : "FAIL") << " flag GW golden\n";
  return ok;
}

bool selftest_fusion(std::ostream& out) {
  bool ok =
      fusion_coefficient(Partition{1}, Partition{1}, Partition{2}, 2, 2)
              .value == 1 &&
      fusion_coefficient(Partition{1}, Partition{1}, Partition{}, 2, 2)
              .value == 1;
  out << (ok ? "PASS" : "FAIL") << " su(2) level-2 fusion\n";
  return ok;
}

bool selftest_positroid(std::ostream& out) {
  AffinePermutation w = AffinePermutation::from_window({4, 6, 3, 7, 5});
  SchurExpansion e = positroid_schubert_decomposition(w, 2, 5);
  bool ok =
      e.terms == std::map<Partition, long long>{{Partition{2, 2}, 1}};
  out << (ok ? "PASS" : "FAIL") << " bounded-element decomposition\n";
  return ok;
}

bool selftest_stembridge(std::ostream& out) {
  bool ok = true;
  for (auto word : std::vector<std::vector<int>>{
           {1, 2}, {2, 1, 3}, {3, 4, 1, 2}, {1, 2, 3, 2}})
    ok &= verify_stembridge(
              build_crystal(
                  AffinePermutation::from_reduced_word(word, 5), 3))
              .all_pass();
  out << (ok ? "PASS" : "FAIL") << " axioms on sample crystals\n";
  return ok;
}

bool selftest_involution(std::ostream& out) {
  AffinePermutation sigma =
      AffinePermutation::from_reduced_word({6, 2, 3, 4, 3, 1, 2, 0}, 7);
  CancellationResult r = verify_cancellation(sigma, Partition{3, 3, 2}, 5, 3);
  bool ok = r.match() && r.signed_sum == 1;
  for (const SignedPair& p :
       enumerate_signed_pairs(sigma, Partition{3, 3, 2}, 3)) {
    SignedPair q = theta(p, 5);
    SignedPair b = theta(q, 5);
    ok &= b.sigma == p.sigma && b.fact == p.fact;
  }
  out << (ok ? "PASS" : "FAIL") << " theta involution and cancellation\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"affine Schubert calculus crystal toolkit"};
  app.require_subcommand(1);

  ElementInput elem;
  bool selftest = false;
  int factors = 0;
  int x_override = -1;
  std::string format = "json", method_text = "auto";
  std::string mu_text, weight_text, rect_text;
  bool list_factorizations = false;

  std::string basis_text = "schur";
  auto* expand = app.add_subcommand("expand-stanley",
                                    "Schur or monomial expansion of F_w");
  elem.attach(expand);
  expand->add_option("--method", method_text,
                     "crystal | alternating | auto");
  expand->add_option("--basis", basis_text, "schur | m");
  expand->add_option("--factors", factors,
                     "variable count for the m basis (default: length)");
  expand->add_flag("--selftest", selftest);

  auto* graph = app.add_subcommand("crystal-graph",
                                   "crystal B(w) as DOT or JSON");
  elem.attach(graph);
  graph->add_option("--factors", factors, "number of factors (>= 2)");
  graph->add_option("--x", x_override, "order residue override");
  graph->add_option("--format", format, "dot | json");
  graph->add_flag("--selftest", selftest);

  auto* hw = app.add_subcommand("highest-weights",
                                "highest weight factorizations");
  elem.attach(hw);
  hw->add_option("--weight", mu_text, "weight partition, e.g. 3,3,2");
  hw->add_option("--factors", factors, "factor count (pads with trivial)");
  hw->add_option("--x", x_override, "order residue override");
  hw->add_flag("--selftest", selftest);

  auto* count = app.add_subcommand("count-factorizations",
                                   "|W_{w,alpha}|");
  elem.attach(count);
  count->add_option("--weight", weight_text, "weight composition");
  count->add_flag("--list", list_factorizations, "include the list");
  count->add_flag("--selftest", selftest);

  std::string w_text, v_text, wl_text, vl_text;
  int rank = 0;
  auto* lr = app.add_subcommand("lr-coeff", "affine LR coefficient");
  lr->add_option("--mu", mu_text, "Schur factor partition");
  lr->add_option("--w", w_text, "w window (affine Grassmannian)");
  lr->add_option("--v", v_text, "v window (affine Grassmannian)");
  lr->add_option("--w-lambda", wl_text, "w as a partition (needs --n)");
  lr->add_option("--v-lambda", vl_text, "v as a partition (needs --n)");
  lr->add_option("--n", rank, "rank for the -lambda forms");
  lr->add_option("--R", rect_text, "rectangle ops, e.g. 4 or 4^2,3^-1");
  lr->add_option("--method", method_text, "crystal | oracle | auto");
  lr->add_flag("--selftest", selftest);

  std::string u_text, d_text;
  auto* gw = app.add_subcommand("gw-invariant",
                                "flag Gromov-Witten invariant <u,w,w0 v>_d");
  gw->add_option("--u", u_text, "Grassmannian permutation, one-line");
  gw->add_option("--w", w_text, "permutation, one-line");
  gw->add_option("--v", v_text, "permutation, one-line");
  gw->add_option("--d", d_text, "degree vector (n-1 entries, default 0)");
  gw->add_option("--method", method_text, "crystal | oracle | auto");
  gw->add_flag("--selftest", selftest);

  std::string lambda_text, nu_text;
  int ell = 0, level = 0;
  auto* fusion = app.add_subcommand("fusion", "WZW fusion coefficient");
  fusion->add_option("--lambda", lambda_text, "partition");
  fusion->add_option("--mu", mu_text, "partition");
  fusion->add_option("--nu", nu_text, "partition");
  fusion->add_option("--ell", ell, "number of rows bound + 1 (su(ell))");
  fusion->add_option("--level", level, "level (n = ell + level)");
  fusion->add_option("--method", method_text, "crystal | oracle | auto");
  fusion->add_flag("--selftest", selftest);

  int bound_r = 0;
  auto* positroid = app.add_subcommand(
      "positroid", "Schubert decomposition of a positroid class");
  elem.attach(positroid);
  positroid->add_option("--r", bound_r, "shift r of Bound(r,n)");
  positroid->add_flag("--selftest", selftest);

  auto* stem = app.add_subcommand("verify-stembridge",
                                  "check the axioms on B(w)");
  elem.attach(stem);
  stem->add_option("--factors", factors, "number of factors (>= 2)");
  stem->add_option("--x", x_override, "order residue override");
  stem->add_flag("--selftest", selftest);

  int m_param = -1;
  auto* invol = app.add_subcommand("verify-involution",
                                   "signed sum vs highest weight count");
  elem.attach(invol);
  invol->add_option("--mu", mu_text, "weight partition");
  invol->add_option("--m", m_param, "symmetric group size (default len(mu))");
  invol->add_option("--x", x_override, "order residue override");
  invol->add_flag("--selftest", selftest);

  // CLI11's vector overload consumes arguments back to front.
  std::vector<std::string> argv_copy(args.rbegin(), args.rend());
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (expand->parsed()) {
      if (selftest) return selftest_expand(out) ? 0 : 1;
      AffinePermutation w = elem.get();
      check_degree(w.length());
      SchurExpansion e;
      if (basis_text == "m") {
        int parts = factors > 0 ? factors : static_cast<int>(w.length());
        e = stanley_monomial_expansion(w, parts);
      } else {
        e = stanley_schur_expansion(w, parse_method(method_text));
      }
      out << expansion_json(e).dump() << "\n";
      return 0;
    }
    if (graph->parsed()) {
      if (selftest) return selftest_crystal(out) ? 0 : 1;
      AffinePermutation w = elem.get();
      check_degree(w.length());
      if (factors < 2) throw DomainError("--factors must be >= 2");
      CrystalGraph g = build_crystal(w, factors, x_override);
      if (format == "dot")
        out << to_dot(g);
      else
        out << to_json_string(g) << "\n";
      return 0;
    }
    if (hw->parsed()) {
      if (selftest) return selftest_highest_weights(out) ? 0 : 1;
      AffinePermutation w = elem.get();
      check_degree(w.length());
      json j;
      j["element"] = w.to_string();
      int dx = x_override >= 0 ? x_override
               : w.missing_residues().empty()
                   ? -1
                   : *w.missing_residues().begin();
      if (!mu_text.empty()) {
        Partition mu = parse_partition(mu_text);
        auto fs = highest_weight_factorizations(w, mu, x_override, factors);
        j["weight"] = mu.to_string();
        j["count"] = fs.size();
        json lst = json::array();
        for (const auto& f : fs)
          lst.push_back(dx >= 0 ? f.to_string(dx) : f.to_string(0));
        j["factorizations"] = lst;
      } else {
        if (factors < 2) throw DomainError("--weight or --factors required");
        CrystalGraph g = build_crystal(w, factors, x_override);
        json hwj = json::object();
        for (const auto& [p, c] : g.highest_weight_multiplicities())
          hwj[p.to_string()] = c;
        j["highest_weights"] = hwj;
      }
      out << j.dump() << "\n";
      return 0;
    }
    if (count->parsed()) {
      if (selftest) return selftest_count(out) ? 0 : 1;
      AffinePermutation w = elem.get();
      check_degree(w.length());
      Composition alpha = parse_int_list(weight_text);
      json j;
      j["element"] = w.to_string();
      j["weight"] = weight_text;
      if (list_factorizations) {
        auto fs = enumerate_factorizations(w, alpha);
        j["count"] = fs.size();
        int dx = w.missing_residues().empty()
                     ? 0
                     : *w.missing_residues().begin();
        json lst = json::array();
        for (const auto& f : fs) lst.push_back(f.to_string(dx));
        j["factorizations"] = lst;
      } else {
        j["count"] = count_factorizations(w, alpha);
      }
      out << j.dump() << "\n";
      return 0;
    }
    if (lr->parsed()) {
      if (selftest) return selftest_lr(out) ? 0 : 1;
      Partition mu = parse_partition(mu_text);
      AffinePermutation w =
          !w_text.empty()
              ? AffinePermutation::from_window(parse_window(w_text))
              : w_lambda(parse_partition(wl_text), rank);
      AffinePermutation v =
          !v_text.empty()
              ? AffinePermutation::from_window(parse_window(v_text))
              : w_lambda(parse_partition(vl_text), rank);
      check_degree(v.length());
      CoeffResult r =
          affine_lr(mu, w, v, parse_rect_ops(rect_text),
                    parse_method(method_text));
      out << json{{"value", r.value},
                  {"method", method_name(r.method)},
                  {"hypotheses_met", r.hypotheses_met}}
                 .dump()
          << "\n";
      return 0;
    }
    if (gw->parsed()) {
      if (selftest) return selftest_gw(out) ? 0 : 1;
      AffinePermutation u =
          AffinePermutation::from_window(parse_window(u_text));
      AffinePermutation w =
          AffinePermutation::from_window(parse_window(w_text));
      AffinePermutation v =
          AffinePermutation::from_window(parse_window(v_text));
      int n = u.rank();
      std::vector<long long> d(n - 1, 0);
      if (!d_text.empty()) {
        auto parsed = parse_int_list(d_text);
        d.assign(parsed.begin(), parsed.end());
      }
      check_degree(u.length() + w.length());
      GwResult r = gw_invariant(u, w, v, d, parse_method(method_text));
      out << json{{"value", r.value},
                  {"mu", r.mu.to_string()},
                  {"descent", r.descent},
                  {"z", r.z.to_string()},
                  {"method", method_name(r.method)},
                  {"hypotheses_met", r.hypotheses_met}}
                 .dump()
          << "\n";
      return 0;
    }
    if (fusion->parsed()) {
      if (selftest) return selftest_fusion(out) ? 0 : 1;
      CoeffResult r = fusion_coefficient(
          parse_partition(lambda_text), parse_partition(mu_text),
          parse_partition(nu_text), ell, level, parse_method(method_text));
      out << json{{"value", r.value},
                  {"method", method_name(r.method)},
                  {"hypotheses_met", r.hypotheses_met}}
                 .dump()
          << "\n";
      return 0;
    }
    if (positroid->parsed()) {
      if (selftest) return selftest_positroid(out) ? 0 : 1;
      AffinePermutation w = elem.get();
      check_degree(w.length());
      SchurExpansion e =
          positroid_schubert_decomposition(w, bound_r, w.rank());
      out << expansion_json(e).dump() << "\n";
      return 0;
    }
    if (stem->parsed()) {
      if (selftest) return selftest_stembridge(out) ? 0 : 1;
      AffinePermutation w = elem.get();
      check_degree(w.length());
      if (factors < 2) throw DomainError("--factors must be >= 2");
      AxiomReport rep =
          verify_stembridge(build_crystal(w, factors, x_override));
      auto cj = [](const AxiomCheck& c) {
        return json{{"pass", c.pass}, {"witness", c.witness}};
      };
      out << json{{"P1", cj(rep.p1)},     {"P2", cj(rep.p2)},
                  {"P3", cj(rep.p3)},     {"P4", cj(rep.p4)},
                  {"P5", cj(rep.p5)},     {"P6", cj(rep.p6)},
                  {"P5'", cj(rep.p5_dual)}, {"P6'", cj(rep.p6_dual)},
                  {"all_pass", rep.all_pass()}}
                 .dump()
          << "\n";
      return 0;
    }
    if (invol->parsed()) {
      if (selftest) return selftest_involution(out) ? 0 : 1;
      AffinePermutation w = elem.get();
      check_degree(w.length());
      Partition mu = parse_partition(mu_text);
      int x = x_override >= 0 ? x_override
              : w.missing_residues().empty()
                  ? -1
                  : *w.missing_residues().begin();
      if (x < 0 && mu.num_parts() > 2)
        throw NoMissingResidue();
      int m = m_param > 0 ? m_param : std::max(mu.num_parts(), 1);
      CancellationResult r = verify_cancellation(w, mu, x, m);
      out << json{{"signed_sum", r.signed_sum},
                  {"hw_count", r.hw_count},
                  {"match", r.match()}}
                 .dump()
          << "\n";
      return 0;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace asc::cli
