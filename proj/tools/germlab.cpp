// Command-line surface for the germ-classification library: one subcommand
// per computation, JSON reports, deterministic output.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "germlab/classify.hpp"
#include "germlab/corpus.hpp"
#include "germlab/detinv.hpp"
#include "germlab/quasihom.hpp"
#include "germlab/realsig.hpp"
#include "germlab/unimodular.hpp"
#include "germlab/witness.hpp"

using nlohmann::json;
using namespace germlab;

namespace {

constexpr int kOk = 0;          // computation finished with a definite answer
constexpr int kUnresolved = 1;  // ran fine but could not certify a result
constexpr int kInputError = 2;  // bad flags or malformed documents

struct CliError {
  std::string message;
};

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  try {
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw CliError{"flag " + flag + " needs a rational number, got '" + text + "'"};
  }
}

struct Document {
  SymMatrixGerm germ{1, 1};
  std::string field = "real";
  std::string name;
};

Document load_document(const std::string& path) {
  if (path.empty()) throw CliError{"this subcommand needs --in <germ.json>"};
  std::ifstream in(path);
  if (!in) throw CliError{"cannot open '" + path + "'"};
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw CliError{"'" + path + "' is not valid JSON: " + e.what()};
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("r") ||
      !doc.contains("entries"))
    throw CliError{"germ document needs fields n, r, entries"};
  if (!doc["n"].is_number_integer() || !doc["r"].is_number_integer())
    throw CliError{"n and r must be integers"};
  long n = doc["n"].get<long>(), r = doc["r"].get<long>();
  if (n < 1 || n > 6 || r < 1 || r > 6)
    throw CliError{"n and r must lie in 1..6"};

  Document out;
  if (doc.contains("field")) {
    out.field = doc["field"].get<std::string>();
    if (out.field != "real" && out.field != "complex")
      throw CliError{"field must be 'real' or 'complex'"};
  }
  if (doc.contains("metadata") && doc["metadata"].is_object() &&
      doc["metadata"].contains("name"))
    out.name = doc["metadata"]["name"].get<std::string>();

  const json& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw CliError{"entries must be an array of n rows"};
  SymMatrixGerm a(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
  auto parse_entry = [&](const json& cell, long i, long j) {
    if (!cell.is_string())
      throw CliError{"entry (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ") must be a polynomial string"};
    try {
      return parse_polynomial(cell.get<std::string>(), static_cast<std::size_t>(r));
    } catch (const std::exception& e) {
      throw CliError{"entry (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + "): " + e.what()};
    }
  };
  for (long i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw CliError{"entries row " + std::to_string(i + 1) + " must have n cells"};
    for (long j = i; j < n; ++j)
      a.set_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                  parse_entry(row[static_cast<std::size_t>(j)], i, j));
    for (long j = 0; j < i; ++j) {
      const json& cell = row[static_cast<std::size_t>(j)];
      if (cell.is_null()) continue;  // lower triangle is implied by symmetry
      Polynomial lower = parse_entry(cell, i, j);
      if (!(lower - a.entry(static_cast<std::size_t>(j), static_cast<std::size_t>(i)))
               .terms()
               .empty())
        throw CliError{"entry (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ") breaks symmetry"};
    }
  }
  out.germ = std::move(a);
  return out;
}

json germ_to_json(const SymMatrixGerm& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j < i)
        row.push_back(nullptr);
      else
        row.push_back(a.entry(i, j).str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json poly_matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json triple_json(const SignatureTriple& t) {
  return json{{"pos", t.pos}, {"zero", t.zero}, {"neg", t.neg}};
}

int finish(json& report, const std::string& command, const std::string& summary,
           const std::string& out_path, int code) {
  report["command"] = command;
  report["exit_code"] = code;
  std::cout << summary << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw CliError{"cannot write '" + out_path + "'"};
    out << report.dump(2) << "\n";
  }
  return code;
}

void require_real(const Document& doc, const std::string& command) {
  if (doc.field != "real")
    throw CliError{command + " works over the reals; document declares field '" +
                   doc.field + "'"};
}

int run_tables(const std::string& suite, const std::string& out_path) {
  json items = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& item, bool ok, const json& expected,
                    const json& got) {
    items.push_back({{"item", item}, {"ok", ok}, {"expected", expected}, {"got", got}});
    all_ok = all_ok && ok;
  };

  if (suite == "sym2" || suite == "sym3" || suite == "all") {
    for (const CorpusEntry& e : builtin_corpus()) {
      if (suite != "all" && e.table != suite) continue;
      CodimReport c = ge_codimension(e.germ, 14);
      record(e.name + ": codimension", c.stabilized && c.codim == e.codim,
             e.codim, c.codim);
      ClassifyReport r = classify_germ(e.germ);
      bool match = r.resolved && r.match.table == e.table &&
                   r.match.class_id == e.class_id && r.match.l1 == e.l1 &&
                   r.match.l2 == e.l2;
      record(e.name + ": classify round-trip", match,
             json{{"class_id", e.class_id}, {"l1", e.l1}, {"l2", e.l2}},
             r.resolved ? json{{"class_id", r.match.class_id},
                               {"l1", r.match.l1},
                               {"l2", r.match.l2}}
                        : json(r.reason));
    }
  }
  if (suite == "table4" || suite == "all") {
    auto fam = [](const std::vector<Rational>& c) { return bordered_two_jet_family(c); };
    auto disc = [](const std::vector<Rational>& c) -> Rational {
      return 4 * c[1] * c[3] - c[2] * c[2];
    };
    struct Stratum {
      std::string name;
      long dim;
      std::function<bool(const std::vector<Rational>&)> cond;
      std::vector<std::vector<Rational>> samples;
      std::vector<std::vector<Rational>> dirs;
    };
    std::vector<Stratum> strata = {
        {"generic (c2 disc != 0)", 11,
         [&](const std::vector<Rational>& c) { return sgn(c[1] * disc(c)) != 0; },
         {{1, 1, 1, 1}, {0, 1, 0, -1}},
         {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
        {"disc = 0, c2 != 0", 10,
         [&](const std::vector<Rational>& c) {
           return sgn(disc(c)) == 0 && sgn(c[1]) != 0;
         },
         {{1, 1, 2, 1}, {0, 1, 0, 0}},
         {{1, 0, 0, 0}}},
        {"c2 = 0, c1 c3 != 0", 10,
         [&](const std::vector<Rational>& c) {
           return sgn(c[1]) == 0 && sgn(c[0] * c[2]) != 0;
         },
         {{1, 0, 1, 0}, {2, 0, 3, 5}},
         {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
        {"c1 = c2 = 0, c3 != 0", 9,
         [&](const std::vector<Rational>& c) {
           return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) != 0;
         },
         {{0, 0, 1, 0}, {0, 0, -1, 1}},
         {{0, 0, 1, 0}, {0, 0, 0, 1}}},
        {"c2 = c3 = 0, c1 c4 != 0", 9,
         [&](const std::vector<Rational>& c) {
           return sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[0] * c[3]) != 0;
         },
         {{1, 0, 0, 1}, {3, 0, 0, -2}},
         {{1, 0, 0, 0}, {0, 0, 0, 1}}},
        {"c1 = c2 = c3 = 0, c4 != 0", 8,
         [&](const std::vector<Rational>& c) {
           return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 &&
                  sgn(c[3]) != 0;
         },
         {{0, 0, 0, 1}, {0, 0, 0, -2}},
         {{0, 0, 0, 1}}},
        {"c2 = c3 = c4 = 0, c1 != 0", 8,
         [&](const std::vector<Rational>& c) {
           return sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0 &&
                  sgn(c[0]) != 0;
         },
         {{1, 0, 0, 0}, {-3, 0, 0, 0}},
         {{1, 0, 0, 0}}},
        {"origin", 7,
         [&](const std::vector<Rational>& c) {
           return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 &&
                  sgn(c[3]) == 0;
         },
         {{0, 0, 0, 0}},
         {}},
    };
    for (const Stratum& s : strata) {
      StratumCheckReport r = mather_stratum_check(fam, s.cond, s.samples, s.dirs, 2);
      record("two-jet stratum " + s.name, r.holds() && r.dim == s.dim, s.dim, r.dim);
    }
  }
  if (items.empty()) throw CliError{"unknown suite '" + suite + "'"};

  json report{{"suite", suite}, {"items", items}, {"all_ok", all_ok}};
  long ok = 0;
  for (const json& it : items) ok += it["ok"].get<bool>() ? 1 : 0;
  std::string summary = "suite " + suite + ": " + std::to_string(ok) + "/" +
                        std::to_string(items.size()) + " checks passed";
  for (const json& it : items)
    if (!it["ok"].get<bool>())
      summary += "\n  FAIL " + it["item"].get<std::string>();
  return finish(report, "tables", summary, out_path, all_ok ? kOk : kUnresolved);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of germs of symmetric matrix families"};
  app.require_subcommand(1);

  std::string in_path, out_path, suite = "all", field_override;
  std::string grid_step = "1/100", radius = "1";
  int dmax = 12, degree = 2;
  long max_codim = 8;

  auto add_common = [&](CLI::App* cmd, bool needs_in) {
    if (needs_in)
      cmd->add_option("--in", in_path, "germ document (JSON)");
    cmd->add_option("--out", out_path, "write the JSON report here");
    cmd->add_option("--field", field_override, "override the document's field");
    return cmd;
  };
  auto with_dmax = [&](CLI::App* cmd) {
    cmd->add_option("--dmax", dmax, "truncation-degree budget");
    return cmd;
  };
  auto with_degree = [&](CLI::App* cmd, const std::string& what) {
    cmd->add_option("--degree", degree, what);
    return cmd;
  };

  CLI::App* c_classify = with_dmax(add_common(
      app.add_subcommand("classify", "match a germ against the normal-form tables"),
      true));
  c_classify->add_option("--max-codim", max_codim, "codimension budget");
  CLI::App* c_codim = with_dmax(add_common(
      app.add_subcommand("codim", "extended-group codimension with certificate"),
      true));
  CLI::App* c_tangent = with_degree(
      add_common(app.add_subcommand("tangent-dim", "jet-group orbit tangent dimension"),
                 true),
      "jet order");
  CLI::App* c_transversal = with_degree(
      add_common(app.add_subcommand("transversal",
                                    "complete transversal at the next jet order"),
                 true),
      "jet order");
  CLI::App* c_qh = add_common(
      app.add_subcommand("qh", "search for diagonal quasi-homogeneous weights"), true);
  CLI::App* c_sqh = with_dmax(add_common(
      app.add_subcommand("sqh-obstruct", "quasi-homogeneity certificate or obstruction"),
      true));
  CLI::App* c_lda = with_degree(
      add_common(app.add_subcommand("lda", "liftable vector fields at a jet order"),
                 true),
      "jet order");
  CLI::App* c_divmod = with_degree(
      add_common(app.add_subcommand("divmod",
                                    "divergence module and volume-moduli dimension"),
                 true),
      "function-jet order");
  CLI::App* c_witness = add_common(
      app.add_subcommand("witness", "constructive one-jet congruence witness"), true);
  CLI::App* c_orient = add_common(
      app.add_subcommand("orient-search",
                         "search for an orientation-reversing self-equivalence"),
      true);
  CLI::App* c_split = with_dmax(add_common(
      app.add_subcommand("split", "volume-preserving splitting data for the matched class"),
      true));
  CLI::App* c_det = add_common(app.add_subcommand("det", "determinant germ"), true);
  CLI::App* c_milnor = with_dmax(add_common(
      app.add_subcommand("milnor", "Milnor number of the determinant"), true));
  CLI::App* c_koszul = with_dmax(add_common(
      app.add_subcommand("koszul", "Koszul homology of the adjugate minors"), true));
  CLI::App* c_thm27 = with_dmax(add_common(
      app.add_subcommand("thm27", "index identity mu = codim - beta1 + beta0"), true));
  CLI::App* c_signature = add_common(
      app.add_subcommand("signature", "signature field on a grid, with CSV/SVG"), true);
  c_signature->add_option("--grid-step", grid_step, "grid spacing (rational)");
  c_signature->add_option("--radius", radius, "grid half-width (rational)");
  CLI::App* c_tables = add_common(
      app.add_subcommand("tables", "regression run over the built-in tables"), false);
  c_tables->add_option("--suite", suite, "sym2, sym3, table4, or all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_tables->parsed()) return run_tables(suite, out_path);

    Document doc = load_document(in_path);
    if (!field_override.empty()) doc.field = field_override;
    const SymMatrixGerm& a = doc.germ;
    json report{{"input", in_path}, {"n", a.size()}, {"r", a.nvars()},
                {"field", doc.field}};
    if (!doc.name.empty()) report["name"] = doc.name;

    if (c_classify->parsed()) {
      require_real(doc, "classify");
      ClassifyReport r = classify_germ(a, max_codim, dmax);
      report["codim"] = r.invariants.codim;
      report["codim_stabilized"] = r.invariants.codim_stabilized;
      report["resolved"] = r.resolved;
      if (r.resolved) {
        report["match"] = {{"table", r.match.table}, {"class_id", r.match.class_id},
                           {"l1", r.match.l1},       {"l2", r.match.l2},
                           {"s1", r.match.s1},       {"s2", r.match.s2},
                           {"name", r.match.name},   {"codim", r.match.codim}};
        return finish(report, "classify", "matched " + r.match.name, out_path, kOk);
      }
      report["reason"] = r.reason;
      return finish(report, "classify", "unresolved: " + r.reason, out_path,
                    kUnresolved);
    }
    if (c_codim->parsed()) {
      CodimReport r = ge_codimension(a, dmax);
      report["codim"] = r.codim;
      report["stabilized"] = r.stabilized;
      report["degree_used"] = r.degree_used;
      report["trace"] = r.trace;
      std::string s = "codimension " + std::to_string(r.codim) +
                      (r.stabilized ? " (stabilized at degree " +
                                          std::to_string(r.degree_used) + ")"
                                    : " (lower bound only; raise --dmax)");
      return finish(report, "codim", s, out_path, r.stabilized ? kOk : kUnresolved);
    }
    if (c_tangent->parsed()) {
      long d = orbit_tangent_dim_jet(a, degree);
      report["degree"] = degree;
      report["orbit_tangent_dim"] = d;
      return finish(report, "tangent-dim",
                    "orbit tangent dimension " + std::to_string(d) + " at jet order " +
                        std::to_string(degree),
                    out_path, kOk);
    }
    if (c_transversal->parsed()) {
      std::vector<PolyMatrix> gens = complete_transversal(a, degree);
      json out = json::array();
      for (const PolyMatrix& g : gens)
        out.push_back(germ_to_json(SymMatrixGerm::from_matrix(g)));
      report["degree"] = degree;
      report["count"] = gens.size();
      report["generators"] = std::move(out);
      return finish(report, "transversal",
                    std::to_string(gens.size()) + " transversal generators at order " +
                        std::to_string(degree + 1),
                    out_path, kOk);
    }
    if (c_qh->parsed()) {
      std::optional<WeightSystem> w = qh_find_diagonal(a);
      report["found"] = w.has_value();
      if (w) {
        report["lambda"] = w->lambda;
        report["delta"] = w->delta;
        report["verified"] = qh_check(a, *w);
        return finish(report, "qh", "diagonal weight system found", out_path, kOk);
      }
      return finish(report, "qh", "no diagonal weight system", out_path, kOk);
    }
    if (c_sqh->parsed()) {
      SqhCertificate r = sqh_obstruction(a, dmax);
      const char* verdict = r.verdict == SqhCertificate::Verdict::SQH ? "SQH"
                            : r.verdict == SqhCertificate::Verdict::NotSQH
                                ? "NotSQH"
                                : "Inconclusive";
      report["verdict"] = verdict;
      report["degree_used"] = r.degree_used;
      report["trace_history"] = r.trace_history;
      if (r.weights) {
        report["lambda"] = r.weights->lambda;
        report["delta"] = r.weights->delta;
      }
      return finish(report, "sqh-obstruct", std::string("verdict: ") + verdict,
                    out_path,
                    r.verdict == SqhCertificate::Verdict::Inconclusive ? kUnresolved
                                                                       : kOk);
    }
    if (c_lda->parsed()) {
      LdaJets jets = lda_jets(a, degree);
      report["degree"] = degree;
      report["basis_dim"] = jets.basis.size();
      report["linear_part_dim"] = jets.linear_part_span().size();
      return finish(report, "lda",
                    "liftable-field jet space has dimension " +
                        std::to_string(jets.basis.size()) + " at order " +
                        std::to_string(degree),
                    out_path, kOk);
    }
    if (c_divmod->parsed()) {
      JetSubspace sub = divergence_module(a, degree);
      long moduli = static_cast<long>(sub.ambient_dim()) - static_cast<long>(sub.dim());
      report["degree"] = degree;
      report["divergence_dim"] = sub.dim();
      report["ambient_dim"] = sub.ambient_dim();
      report["moduli_dim"] = moduli;
      return finish(report, "divmod",
                    "divergence module dimension " + std::to_string(sub.dim()) +
                        ", volume-moduli dimension " + std::to_string(moduli) +
                        " at order " + std::to_string(degree),
                    out_path, kOk);
    }
    if (c_witness->parsed()) {
      if (a.size() != 2 || a.nvars() != 2)
        throw CliError{"witness covers 2x2 germs of two variables"};
      RationalMatrix c0(2, 2), d0(2, 2);
      Monomial m1(2), m2(2);
      m1.exp[0] = 1;
      m2.exp[1] = 1;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          c0.at(i, j) = a.entry(i, j).coeff(m1);
          d0.at(i, j) = a.entry(i, j).coeff(m2);
        }
      OneJetClass cls = classify_one_jet(c0, d0);
      SymMatrixGerm lin(2, 2);
      Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = i; j < 2; ++j)
          lin.set_entry(i, j, c0.at(i, j) * x1 + d0.at(i, j) * x2);
      WitnessCheck chk =
          verify_congruence_witness(lin, cls.representative(), cls.witness, 4);
      report["class_id"] = cls.class_id;
      report["sign"] = cls.sign;
      report["canonical"] = cls.witness.canonical;
      report["holds"] = chk.holds;
      report["orientation_sign"] = chk.orientation_sign;
      json phi = json::array();
      for (const Polynomial& p : cls.witness.phi) phi.push_back(p.str());
      report["phi"] = std::move(phi);
      report["x"] = poly_matrix_to_json(cls.witness.x);
      report["representative"] = germ_to_json(cls.representative());
      return finish(report, "witness",
                    "one-jet class " + std::to_string(cls.class_id) +
                        (chk.holds ? ", witness verified" : ", witness FAILED"),
                    out_path, chk.holds ? kOk : kUnresolved);
    }
    if (c_orient->parsed()) {
      OrientationSearchResult r = orientation_reversing_search(a);
      report["found"] = r.found;
      report["candidates_checked"] = r.candidates_checked;
      if (r.found) {
        json phi = json::array();
        for (const Polynomial& p : r.witness.phi) phi.push_back(p.str());
        report["phi"] = std::move(phi);
        report["x"] = poly_matrix_to_json(r.witness.x);
        return finish(report, "orient-search",
                      "orientation-reversing self-equivalence found", out_path, kOk);
      }
      return finish(report, "orient-search",
                    "not found within budget (" + std::to_string(r.candidates_checked) +
                        " candidates)",
                    out_path, kUnresolved);
    }
    if (c_split->parsed()) {
      require_real(doc, "split");
      ClassifyReport r = classify_germ(a, max_codim, dmax);
      if (!r.resolved) {
        report["resolved"] = false;
        report["reason"] = r.reason;
        return finish(report, "split", "unresolved: " + r.reason, out_path,
                      kUnresolved);
      }
      SplittingRecord s = unimodular_splitting(r.match.table == "sym2" ? 2 : 3,
                                               r.match.class_id, r.match.l1,
                                               r.match.l2);
      report["resolved"] = true;
      report["match"] = r.match.name;
      report["splits"] = s.splits;
      report["weights"] = s.weights;
      return finish(report, "split",
                    r.match.name + (s.splits ? " splits" : " does not split") +
                        " under the volume-preserving group",
                    out_path, kOk);
    }
    if (c_det->parsed()) {
      Polynomial d = det_germ(a);
      report["det"] = d.str();
      return finish(report, "det", "det = " + d.str(), out_path, kOk);
    }
    if (c_milnor->parsed()) {
      LocalAlgebraReport r = milnor_number(det_germ(a), dmax);
      report["mu"] = r.dimension;
      report["stabilized"] = r.stabilized;
      report["degree_used"] = r.degree_used;
      report["trace"] = r.trace;
      std::string s = "mu(det) " + std::string(r.stabilized ? "= " : ">= ") +
                      std::to_string(r.dimension);
      return finish(report, "milnor", s, out_path, r.stabilized ? kOk : kUnresolved);
    }
    if (c_koszul->parsed()) {
      KoszulReport r = koszul_betti(corank_minors(a), dmax);
      report["beta0"] = r.beta0;
      report["beta1"] = r.beta1;
      report["stabilized"] = r.stabilized;
      report["degree_used"] = r.degree_used;
      return finish(report, "koszul",
                    "beta0 = " + std::to_string(r.beta0) +
                        ", beta1 = " + std::to_string(r.beta1) +
                        (r.stabilized ? "" : " (not stabilized; raise --dmax)"),
                    out_path, r.stabilized ? kOk : kUnresolved);
    }
    if (c_thm27->parsed()) {
      IndexIdentityReport r = theorem27_check(a, dmax);
      report["mu"] = r.mu;
      report["codim"] = r.codim;
      report["beta0"] = r.beta0;
      report["beta1"] = r.beta1;
      report["stabilized"] = r.stabilized;
      report["holds"] = r.holds;
      if (!r.stabilized)
        return finish(report, "thm27", "not stabilized; raise --dmax", out_path,
                      kUnresolved);
      return finish(report, "thm27",
                    std::string("mu = codim - beta1 + beta0 ") +
                        (r.holds ? "holds" : "FAILS") + " (mu=" +
                        std::to_string(r.mu) + ", codim=" + std::to_string(r.codim) +
                        ", beta0=" + std::to_string(r.beta0) + ", beta1=" +
                        std::to_string(r.beta1) + ")",
                    out_path, kOk);
    }
    if (c_signature->parsed()) {
      require_real(doc, "signature");
      GridSpec g{parse_rational_flag(radius, "--radius"),
                 parse_rational_flag(grid_step, "--grid-step"), 0};
      SignatureField f = signature_field(a, g);
      json counts = json::array();
      for (int p = static_cast<int>(a.size()); p >= 0; --p) {
        SignatureTriple t{p, 0, static_cast<int>(a.size()) - p};
        counts.push_back({{"signature", triple_json(t)},
                          {"components", component_count(f, t)}});
      }
      report["radius"] = radius;
      report["step"] = grid_step;
      report["region_components"] = std::move(counts);
      std::string summary = "signature field sampled on a " +
                            std::to_string(2 * f.half + 1) + "x" +
                            std::to_string(2 * f.half + 1) + " grid";
      if (!out_path.empty()) {
        std::string base = out_path;
        if (base.size() > 5 && base.substr(base.size() - 5) == ".json")
          base = base.substr(0, base.size() - 5);
        std::ofstream csv(base + ".csv");
        csv << signature_csv(f);
        std::ofstream svg(base + ".svg");
        svg << signature_svg(f);
        report["csv"] = base + ".csv";
        report["svg"] = base + ".svg";
        summary += "; wrote " + base + ".csv and " + base + ".svg";
      }
      return finish(report, "signature", summary, out_path, kOk);
    }
    throw CliError{"unknown subcommand"};
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUnresolved;
  }
}
