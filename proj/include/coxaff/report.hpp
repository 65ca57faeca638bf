#pragma once

// The full analysis pipeline and its machine-readable report. JSON output is
// float-free: every field element serializes as its exact vector of rational
// coordinate strings, with the minimal polynomial carried once per report.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "coxaff/forms.hpp"
#include "coxaff/graph_io.hpp"
#include "coxaff/translation.hpp"

namespace coxaff {

struct AnalysisOptions {
  int max_word_len = -1;  // -1: 12 for n <= 4, 10 for larger ranks; 0 disables
  unsigned seed = 0;      // drives the sampled self-checks
  std::optional<std::vector<std::size_t>> s0_override;  // pinned split, 0-based

  int effective_word_len(int n) const {
    if (max_word_len >= 0) return max_word_len;
    return n <= 4 ? 12 : 10;
  }
};

struct TranslationSummary {
  int max_word_len = 0;
  std::size_t ball_elements = 0;
  std::size_t count = 0;
  int shortest_word = 0;  // 0 when none found
  std::size_t lattice_rank = 0;
};

struct SelfCheck {
  int words = 0;
  bool ok = true;
};

struct AnalysisReport {
  DecoratedGraph graph;
  Family family = Family::Unclassified;
  CartanMatrix cartan;
  FieldElement delta;
  bool irreducible = false;
  SubsystemSplit split;
  std::vector<std::vector<FieldElement>> b_vectors;
  std::vector<BlockForm> generator_blocks;
  std::vector<std::vector<std::size_t>> principal_minor_violations;
  std::optional<TranslationSummary> translations;
  FormSolution form;
  std::vector<CircuitConstraint> constraints;
  std::string identification;  // empty when no catalog pattern matches
  AnalysisOptions options;
  SelfCheck self_check;
};

// ---- identification of the named catalog cases -----------------------------

namespace detail {

// labels along a path graph starting from vertex `from`; empty if not a path
inline std::vector<const GraphEdge*> path_edges(const DecoratedGraph& g, int from) {
  std::vector<const GraphEdge*> out;
  std::vector<bool> used(g.edges.size(), false);
  int cur = from, prev = -1;
  for (int step = 0; step + 1 < g.n; ++step) {
    const GraphEdge* next = nullptr;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (used[i]) continue;
      const GraphEdge& e = g.edges[i];
      int other = e.u == cur ? e.v : (e.v == cur ? e.u : -1);
      if (other >= 0 && other != prev) {
        if (next) return {};  // branching
        next = &e;
        used[i] = true;
        prev = cur;
        cur = other;
      }
    }
    if (!next) return {};
    out.push_back(next);
  }
  return out;
}

inline bool is_path_with(const DecoratedGraph& g, const std::vector<int>& labels,
                         const std::vector<FieldElement>& alphas) {
  if (static_cast<std::size_t>(g.n) != labels.size() + 1) return false;
  if (g.edges.size() != labels.size()) return false;
  for (int endpoint = 0; endpoint < g.n; ++endpoint) {
    if (g.degree(endpoint) != 1) continue;
    auto chain = path_edges(g, endpoint);
    if (chain.size() != labels.size()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < chain.size() && ok; ++i)
      ok = chain[i]->label == labels[i] && chain[i]->alpha == alphas[i];
    if (ok) return true;
  }
  return false;
}

inline bool is_star_with(const DecoratedGraph& g, std::vector<std::pair<int, FieldElement>> rays) {
  if (g.n != static_cast<int>(rays.size()) + 1 || g.edges.size() != rays.size()) return false;
  int center = -1;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == static_cast<int>(rays.size())) center = v;
  if (center < 0) return false;
  std::vector<bool> taken(rays.size(), false);
  for (const auto& e : g.edges) {
    if (e.u != center && e.v != center) return false;
    bool matched = false;
    for (std::size_t i = 0; i < rays.size() && !matched; ++i)
      if (!taken[i] && rays[i].first == e.label && rays[i].second == e.alpha) {
        taken[i] = true;
        matched = true;
      }
    if (!matched) return false;
  }
  return true;
}

}  // namespace detail

// Pattern match against the named degenerate cases; group isomorphism testing
// is out of scope, this is a shape-and-parameters table.
inline std::string identify(const DecoratedGraph& g, const FieldElement& delta) {
  if (!delta.is_zero()) return "";
  const FieldElement one(1), two(2), three(3);
  auto tau = [&]() -> std::optional<FieldElement> {
    if (g.field->minimal_polynomial() == edge_root_polynomial(5))
      return FieldElement::theta(*g.field);
    return std::nullopt;
  }();
  if (detail::is_path_with(g, {4, 3, 4}, {two, one, two})) return "W(C~3)";
  if (detail::is_star_with(g, {{3, one}, {3, one}, {4, two}})) return "W(B~3)";
  if (tau &&
      detail::is_star_with(g, {{5, *tau}, {5, three - *tau}, {3, one}}))
    return "W(H~3)";
  if (detail::is_path_with(g, {4, 3, 3, 4}, {two, one, one, two})) return "W(C~4)";
  if (tau) {
    FieldElement t = *tau, t2 = three - *tau;
    if (detail::is_path_with(g, {3, 5, 5, 3}, {one, t, t2, one}) ||
        detail::is_path_with(g, {3, 5, 5, 3}, {one, t2, t, one}) ||
        detail::is_path_with(g, {5, 3, 3, 5}, {t, one, one, t2}) ||
        detail::is_path_with(g, {5, 3, 3, 5}, {t2, one, one, t}))
      return "affine extension of W(H4)";
  }
  // square with all labels 3 and unit bold parameters
  if (classify_family(g) == Family::SquareIV) {
    bool all3 = true;
    for (const auto& e : g.edges)
      all3 = all3 && e.label == 3 && e.alpha == one && (!e.l || (*e.l == one && *e.m == one));
    if (all3) return "W(A~3)";
  }
  return "";
}

// ---- the pipeline -----------------------------------------------------------

inline AnalysisReport analyze(const DecoratedGraph& g, const AnalysisOptions& opts = {}) {
  g.validate();
  AnalysisReport r;
  r.graph = g;
  r.options = opts;
  r.family = classify_family(g);
  r.cartan = build_cartan(g);
  r.delta = discriminant(r.cartan);
  r.irreducible = !r.delta.is_zero();
  r.split = opts.s0_override ? split_from_s0(r.cartan, *opts.s0_override) : choose_S1(r.cartan);
  AdaptedBasis basis = adapted_basis(r.cartan, r.split);
  r.b_vectors = basis.b_vectors;
  for (int i = 0; i < g.n; ++i)
    r.generator_blocks.push_back(block_decompose(generator_matrix(r.cartan, i), basis));
  r.principal_minor_violations = principal_submatrix_violations(r.cartan);

  const int wl = opts.effective_word_len(g.n);
  if (wl > 0) {
    BallStats stats;
    auto found = bfs_translations(r.cartan, basis, wl, &stats);
    TranslationSummary ts;
    ts.max_word_len = wl;
    ts.ball_elements = stats.elements;
    ts.count = found.size();
    for (const auto& t : found)
      ts.shortest_word = ts.shortest_word == 0
                             ? static_cast<int>(t.element.word.size())
                             : std::min(ts.shortest_word, static_cast<int>(t.element.word.size()));
    if (!found.empty()) ts.lattice_rank = lattice_rank(found, *g.field).z_rank;
    r.translations = ts;
  }

  r.form = solve_invariant_form(r.cartan);
  r.constraints = circuit_constraints(g);
  r.identification = identify(g, r.delta);

  // sampled self-checks: block reassembly, quotient multiplicativity, form
  // invariance on random words; deterministic for a fixed seed
  std::mt19937_64 rng(opts.seed);
  r.self_check.words = 25;
  for (int t = 0; t < r.self_check.words && r.self_check.ok; ++t) {
    Word w1, w2;
    for (int k = 0; k < 6; ++k) {
      w1.push_back(static_cast<int>(rng() % g.n));
      w2.push_back(static_cast<int>(rng() % g.n));
    }
    GroupElement a = evaluate_word(r.cartan, w1), b = evaluate_word(r.cartan, w2);
    BlockForm ba = block_decompose(a, basis), bb = block_decompose(b, basis);
    BlockForm bab = block_decompose(a * b, basis);
    r.self_check.ok = bab.p == ba.p * bb.p && bab.a == bb.a + ba.a * bb.p;
    if (r.self_check.ok && r.form.status == FormSolution::Status::Unique)
      r.self_check.ok = a.mat.transpose() * r.form.phi * a.mat == r.form.phi;
  }
  return r;
}

inline AnalysisReport analyze_file_text(const std::string& text, const AnalysisOptions& opts = {}) {
  return analyze(parse_graph(text), opts);
}

// ---- JSON ------------------------------------------------------------------

namespace jsonio {

using nlohmann::json;

inline json element(const FieldElement& x, const FieldContext& ctx) {
  json a = json::array();
  const auto& c = x.coordinates();
  for (int i = 0; i < ctx.degree(); ++i)
    a.push_back(i < static_cast<int>(c.size()) ? c[i].to_string() : "0");
  return a;
}
inline FieldElement element_from(const json& j, const FieldContext& ctx) {
  std::vector<Rational> c;
  for (const auto& s : j) c.push_back(Rational::from_string(s.get<std::string>()));
  return FieldElement(&ctx, std::move(c));
}
inline json matrix(const Matrix<FieldElement>& m, const FieldContext& ctx) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element(m(i, j), ctx));
    rows.push_back(row);
  }
  return rows;
}
inline Matrix<FieldElement> matrix_from(const json& j, const FieldContext& ctx,
                                        std::size_t cols_hint = 0) {
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : cols_hint;
  Matrix<FieldElement> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t jj = 0; jj < cols; ++jj) m(i, jj) = element_from(j[i][jj], ctx);
  return m;
}
inline json index_list(const std::vector<std::size_t>& v) {  // 1-based for humans
  json a = json::array();
  for (std::size_t i : v) a.push_back(i + 1);
  return a;
}
inline std::vector<std::size_t> index_list_from(const json& j) {
  std::vector<std::size_t> v;
  for (const auto& x : j) v.push_back(x.get<std::size_t>() - 1);
  return v;
}

}  // namespace jsonio

inline nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  const FieldContext& K = *r.graph.field;
  json j;
  j["schema"] = 1;
  j["options"] = {{"max_word_len", r.options.effective_word_len(r.graph.n)},
                  {"seed", r.options.seed}};
  json mp = json::array();
  for (const BigInt& c : K.minimal_polynomial().coeffs) {
    if (!c.fits_int64()) throw error("minimal polynomial coefficient exceeds int64 for JSON");
    mp.push_back(c.to_int64());
  }
  j["field"] = {{"minpoly", mp}};
  json edges = json::array();
  for (const auto& e : r.graph.edges) {
    json je = {{"u", e.u + 1},
               {"v", e.v + 1},
               {"p", e.label},
               {"alpha", jsonio::element(e.alpha, K)},
               {"tree", e.in_tree}};
    if (e.l) je["l"] = jsonio::element(*e.l, K);
    if (e.m) je["m"] = jsonio::element(*e.m, K);
    edges.push_back(je);
  }
  j["graph"] = {{"n", r.graph.n}, {"root", r.graph.root + 1}, {"names", r.graph.names},
                {"edges", edges}};
  j["family"] = family_name(r.family);
  j["cartan"] = jsonio::matrix(r.cartan.entries, K);
  j["delta"] = jsonio::element(r.delta, K);
  j["irreducible"] = r.irreducible;
  j["n0"] = r.split.n0();
  j["n1"] = r.split.n1();
  j["s0"] = jsonio::index_list(r.split.s0);
  j["s1"] = jsonio::index_list(r.split.s1);
  json bs = json::array();
  for (const auto& b : r.b_vectors) {
    json row = json::array();
    for (const auto& x : b) row.push_back(jsonio::element(x, K));
    bs.push_back(row);
  }
  j["b_vectors"] = bs;
  json gens = json::array();
  for (const auto& bf : r.generator_blocks)
    gens.push_back({{"a", jsonio::matrix(bf.a, K)}, {"p", jsonio::matrix(bf.p, K)}});
  j["generators"] = gens;
  json viol = json::array();
  for (const auto& v : r.principal_minor_violations) viol.push_back(jsonio::index_list(v));
  j["principal_minor_violations"] = viol;
  if (r.translations) {
    j["translations"] = {{"max_word_len", r.translations->max_word_len},
                         {"ball_elements", r.translations->ball_elements},
                         {"count", r.translations->count},
                         {"shortest_word", r.translations->shortest_word},
                         {"lattice_rank", r.translations->lattice_rank}};
  } else {
    j["translations"] = nullptr;
  }
  json form;
  switch (r.form.status) {
    case FormSolution::Status::None: form["status"] = "none"; break;
    case FormSolution::Status::Unique:
      form["status"] = "unique";
      form["normalized"] = r.form.normalized;
      form["matrix"] = jsonio::matrix(r.form.phi, K);
      break;
    case FormSolution::Status::Ambiguous: {
      form["status"] = "ambiguous";
      json basis = json::array();
      for (const auto& b : r.form.basis) basis.push_back(jsonio::matrix(b, K));
      form["basis"] = basis;
      break;
    }
  }
  j["form"] = form;
  json cons = json::array();
  for (const auto& cc : r.constraints)
    cons.push_back({{"lhs", jsonio::element(cc.lhs, K)},
                    {"rhs", jsonio::element(cc.rhs, K)},
                    {"holds", cc.holds()},
                    {"description", cc.description}});
  j["constraints"] = cons;
  j["identification"] = r.identification.empty() ? json(nullptr) : json(r.identification);
  j["self_check"] = {{"words", r.self_check.words}, {"ok", r.self_check.ok}};
  return j;
}

// Rebuilds a report from its JSON image; to_json(report_from_json(j)) == j.
inline AnalysisReport report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != 1) throw error("unsupported report schema");
  AnalysisReport r;
  std::vector<BigInt> mp;
  for (const auto& c : j.at("field").at("minpoly")) mp.emplace_back(c.get<long long>());
  FieldRef K = make_field(MinimalPolynomial{std::move(mp)});
  const FieldContext& ctx = *K;
  r.graph.field = K;
  r.graph.n = j.at("graph").at("n").get<int>();
  r.graph.root = j.at("graph").at("root").get<int>() - 1;
  r.graph.names = j.at("graph").at("names").get<std::vector<std::string>>();
  for (const auto& je : j.at("graph").at("edges")) {
    GraphEdge e;
    e.u = je.at("u").get<int>() - 1;
    e.v = je.at("v").get<int>() - 1;
    e.label = je.at("p").get<int>();
    e.alpha = jsonio::element_from(je.at("alpha"), ctx);
    e.in_tree = je.at("tree").get<bool>();
    if (je.contains("l")) e.l = jsonio::element_from(je.at("l"), ctx);
    if (je.contains("m")) e.m = jsonio::element_from(je.at("m"), ctx);
    r.graph.edges.push_back(std::move(e));
  }
  r.options.max_word_len = j.at("options").at("max_word_len").get<int>();
  r.options.seed = j.at("options").at("seed").get<unsigned>();
  r.family = classify_family(r.graph);
  r.cartan = CartanMatrix{jsonio::matrix_from(j.at("cartan"), ctx), r.graph};
  r.delta = jsonio::element_from(j.at("delta"), ctx);
  r.irreducible = j.at("irreducible").get<bool>();
  r.split.s0 = jsonio::index_list_from(j.at("s0"));
  r.split.s1 = jsonio::index_list_from(j.at("s1"));
  for (const auto& row : j.at("b_vectors")) {
    std::vector<FieldElement> b;
    for (const auto& x : row) b.push_back(jsonio::element_from(x, ctx));
    r.b_vectors.push_back(std::move(b));
  }
  for (const auto& jg : j.at("generators"))
    r.generator_blocks.push_back(BlockForm{
        jsonio::matrix_from(jg.at("a"), ctx, r.split.n1()),
        jsonio::matrix_from(jg.at("p"), ctx)});
  for (const auto& v : j.at("principal_minor_violations"))
    r.principal_minor_violations.push_back(jsonio::index_list_from(v));
  if (!j.at("translations").is_null()) {
    TranslationSummary ts;
    ts.max_word_len = j.at("translations").at("max_word_len").get<int>();
    ts.ball_elements = j.at("translations").at("ball_elements").get<std::size_t>();
    ts.count = j.at("translations").at("count").get<std::size_t>();
    ts.shortest_word = j.at("translations").at("shortest_word").get<int>();
    ts.lattice_rank = j.at("translations").at("lattice_rank").get<std::size_t>();
    r.translations = ts;
  }
  const auto& jf = j.at("form");
  if (jf.at("status") == "unique") {
    r.form.status = FormSolution::Status::Unique;
    r.form.normalized = jf.at("normalized").get<bool>();
    r.form.phi = jsonio::matrix_from(jf.at("matrix"), ctx);
  } else if (jf.at("status") == "ambiguous") {
    r.form.status = FormSolution::Status::Ambiguous;
    for (const auto& b : jf.at("basis")) r.form.basis.push_back(jsonio::matrix_from(b, ctx));
    if (!r.form.basis.empty()) r.form.phi = r.form.basis.front();
  }
  for (const auto& jc : j.at("constraints"))
    r.constraints.push_back(CircuitConstraint{jsonio::element_from(jc.at("lhs"), ctx),
                                              jsonio::element_from(jc.at("rhs"), ctx),
                                              jc.at("description").get<std::string>()});
  if (!j.at("identification").is_null())
    r.identification = j.at("identification").get<std::string>();
  r.self_check.words = j.at("self_check").at("words").get<int>();
  r.self_check.ok = j.at("self_check").at("ok").get<bool>();
  return r;
}

// ---- text rendering ---------------------------------------------------------

inline std::string to_text(const AnalysisReport& r) {
  std::string s;
  auto line = [&s](const std::string& x) { s += x + "\n"; };
  line("graph: n=" + std::to_string(r.graph.n) + ", root " + r.graph.names[r.graph.root] +
       ", family " + family_name(r.family));
  line("field: degree " + std::to_string(r.graph.field->degree()));
  std::string cart = "cartan:";
  for (std::size_t i = 0; i < r.cartan.entries.rows(); ++i) {
    cart += "\n  [";
    for (std::size_t j = 0; j < r.cartan.entries.cols(); ++j) {
      if (j) cart += ", ";
      cart += r.cartan.entries(i, j).to_string();
    }
    cart += "]";
  }
  line(cart);
  line("delta: " + r.delta.to_string());
  if (r.irreducible) {
    line("representation: irreducible (delta != 0, fixed space is trivial)");
  } else {
    line("representation: reducible (affine); n0=" + std::to_string(r.split.n0()) +
         ", n1=" + std::to_string(r.split.n1()));
    std::string s0 = "s0: {";
    for (std::size_t i = 0; i < r.split.s0.size(); ++i)
      s0 += (i ? ", " : "") + r.graph.names[r.split.s0[i]];
    line(s0 + "}");
    for (std::size_t k = 0; k < r.b_vectors.size(); ++k) {
      std::string b = "b(" + r.graph.names[r.split.s0[k]] + ") =";
      bool first = true;
      for (int i = 0; i < r.graph.n; ++i) {
        const FieldElement& x = r.b_vectors[k][i];
        if (x.is_zero()) continue;
        b += (first ? " " : " + ");
        first = false;
        b += "(" + x.to_string() + ")a" + std::to_string(i + 1);
      }
      line(b);
    }
  }
  if (!r.principal_minor_violations.empty())
    line("WARNING: " + std::to_string(r.principal_minor_violations.size()) +
         " principal submatrices above the rank are nonsingular");
  if (r.translations) {
    line("translations: " + std::to_string(r.translations->count) + " found at word length <= " +
         std::to_string(r.translations->max_word_len) + " (ball " +
         std::to_string(r.translations->ball_elements) + " elements)");
    if (r.translations->count)
      line("  shortest word " + std::to_string(r.translations->shortest_word) +
           ", lattice rank " + std::to_string(r.translations->lattice_rank));
  }
  switch (r.form.status) {
    case FormSolution::Status::None: line("invariant form: none"); break;
    case FormSolution::Status::Unique: {
      std::string f = "invariant form (phi_11 = 2):";
      for (std::size_t i = 0; i < r.form.phi.rows(); ++i) {
        f += "\n  [";
        for (std::size_t j = 0; j < r.form.phi.cols(); ++j) {
          if (j) f += ", ";
          f += r.form.phi(i, j).to_string();
        }
        f += "]";
      }
      line(f);
      break;
    }
    case FormSolution::Status::Ambiguous:
      line("invariant form: solution space of dimension " + std::to_string(r.form.basis.size()));
      break;
  }
  for (const auto& cc : r.constraints)
    line("constraint " + cc.description + ": " + (cc.holds() ? "holds" : "fails") + " (" +
         cc.lhs.to_string() + " vs " + cc.rhs.to_string() + ")");
  if (!r.identification.empty()) line("identification: " + r.identification);
  line(std::string("self-check: ") + (r.self_check.ok ? "ok" : "FAILED") + " (" +
       std::to_string(r.self_check.words) + " sampled words)");
  return s;
}

}  // namespace coxaff
