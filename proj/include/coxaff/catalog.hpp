#pragma once

// Fixture catalog: every degenerate example the library reproduces, with the
// expected values and a provenance note per value (the mathematical fact the
// expectation rests on). The graph sources live under fixtures/ and double as
// CLI examples.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coxaff/report.hpp"

namespace coxaff {

struct FixtureCheck {
  enum class Kind {
    DeltaZero,
    DeltaEquals,     // expect: field expression
    N0,              // expect: integer
    BVector,         // expect: "k:(e1,e2,...)" with k the S0 position (1-based)
    Identification,  // expect: tag
    FormUnique,
    FormNone,
    TranslationsAtLeast,  // expect: integer (needs max_word_len > 0)
    Relation,             // expect: "i1.i2...ik^e" word and exponent, 1-based
    Irreducible
  };
  Kind kind;
  std::string expect;
  std::string provenance;
};

struct Fixture {
  std::string name;
  std::string file;
  int max_word_len = 0;                                 // 0: skip the BFS section
  std::optional<std::vector<std::size_t>> s0;           // pinned split, 0-based
  std::vector<FixtureCheck> checks;
};

inline std::vector<Fixture> standard_fixtures() {
  using K = FixtureCheck::Kind;
  std::vector<Fixture> f;
  f.push_back(
      {"c3tilde", "c3tilde.graph", 0, std::nullopt,
       {{K::DeltaZero, "", "determinant of the degenerate 4,3,4 path Cartan matrix"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::BVector, "1:(1,1,1,1/2)", "kernel vector by exact elimination"},
        {K::Identification, "W(C~3)", "affine Weyl group of type C~3"},
        {K::FormUnique, "", "tree diagram always carries an invariant form"}}});
  f.push_back(
      {"b3tilde", "b3tilde.graph", 0, std::nullopt,
       {{K::DeltaZero, "", "star parameters summing to 4"},
        {K::N0, "1", "corank of the Cartan matrix; n0=2 is impossible here"},
        {K::BVector, "1:(1,1/2,1/2,1/2)", "kernel vector by exact elimination"},
        {K::Identification, "W(B~3)", "affine Weyl group of type B~3"},
        {K::FormUnique, "", "tree diagram always carries an invariant form"}}});
  f.push_back(
      {"h3tilde", "h3tilde.graph", 0, std::nullopt,
       {{K::DeltaZero, "", "tau + (3-tau) + 1 = 4"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::BVector, "1:(1,1/2,1/2,1/2)", "kernel vector by exact elimination"},
        {K::Identification, "W(H~3)", "affine reflection group of type H3"}}});
  f.push_back(
      {"c2tilde", "c2tilde.graph", 10, std::nullopt,
       {{K::DeltaZero, "", "determinant of the degenerate 4,4 path Cartan matrix"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::BVector, "1:(1,1,1/2)", "kernel vector by exact elimination"},
        {K::TranslationsAtLeast, "1",
         "rank-3 affine group with an even label: nontrivial translations in the 10-ball"}}});
  f.push_back(
      {"c4tilde", "c4tilde.graph", 0, std::nullopt,
       {{K::DeltaZero, "", "path discriminant vanishes at (2,1,1,2)"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::BVector, "1:(1,1,1,1,1/2)", "kernel vector by exact elimination"},
        {K::Identification, "W(C~4)", "affine Weyl group of type C~4"}}});
  f.push_back(
      {"h4ext_3553", "h4ext_3553.graph", 0, std::vector<std::size_t>{4},
       {{K::DeltaZero, "", "path discriminant vanishes since tau + (3-tau) = 3"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::Relation, "2.3.4.3^3",
         "the product s2 (s3 s4 s3) has order 3 in this representation"},
        {K::Identification, "affine extension of W(H4)",
         "the four-generator block is a 14400-element group"}}});
  f.push_back(
      {"h4ext_5335", "h4ext_5335.graph", 0, std::vector<std::size_t>{4},
       {{K::DeltaZero, "", "path discriminant vanishes since tau + (3-tau) = 3"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::Identification, "affine extension of W(H4)",
         "the four-generator block carries the 5,3,3 diagram"}}});
  f.push_back(
      {"a3tilde", "a3tilde.graph", 0, std::nullopt,
       {{K::DeltaZero, "", "all-threes square: the affine A~3 Cartan matrix"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::BVector, "1:(1,1,1,1)", "kernel vector by exact elimination"},
        {K::Identification, "W(A~3)", "affine Weyl group of type A~3"},
        {K::FormUnique, "", "circuit constraint 1*1 = 1*1*1 holds"}}});
  f.push_back(
      {"square_n02", "square_n02.graph", 0, std::vector<std::size_t>{0, 2},
       {{K::N0, "2", "rank of the Cartan matrix drops to 2 at l=-2, m=-1"},
        {K::BVector, "1:(1,1/2,0,1/2)", "kernel vector anchored at s1"},
        {K::BVector, "2:(0,-1,1,1)", "kernel vector anchored at s3: a3 + (l a2 + alpha3 a4)/2"},
        {K::FormUnique, "", "circuit constraint l alpha1 = m alpha3 alpha4 holds (-4 = -4)"}}});
  f.push_back(
      {"twocirc_n02", "twocirc_n02.graph", 0, std::vector<std::size_t>{0, 2},
       {{K::N0, "2", "rank of the Cartan matrix drops to 2 at these circuit parameters"},
        {K::BVector, "1:(1,1/2,0,1/2)", "kernel vector anchored at s1"},
        {K::BVector, "2:(0,1/2,1,-1/2)",
         "kernel vector anchored at s3: a3 + (l1 a2 + m2 a4)/2"},
        {K::FormUnique, "", "both circuit constraints hold (1=1 and -3=-3)"}}});
  f.push_back(
      {"circuit3", "circuit3.graph", 0, std::nullopt,
       {{K::DeltaZero, "", "triangle-plus-pendant parameters tuned to corank 1"},
        {K::N0, "1", "corank of the Cartan matrix"},
        {K::BVector, "1:(1,1/2,0,1/2)",
         "closed form: a1 + (l+2)/(4-alpha3) a2 + (m+2)/(4-alpha3) a3 + 1/2 a4"},
        {K::FormNone, "", "circuit constraint l alpha1 = m alpha2 fails (-1 != -2)"}}});
  // one-parameter family of inequivalent reducible representations on the
  // two-circuit graph: three rational sample points
  f.push_back({"vfree_l1", "vfree_l1.graph", 0, std::nullopt,
               {{K::DeltaZero, "", "two-circuit discriminant vanishes at l1=1, l2=-1"},
                {K::N0, "1", "rank stays 3: only one kernel vector"}}});
  f.push_back({"vfree_l2", "vfree_l2.graph", 0, std::nullopt,
               {{K::DeltaZero, "", "two-circuit discriminant vanishes at l1=2, l2=-1/2"},
                {K::N0, "1", "rank stays 3: only one kernel vector"}}});
  f.push_back({"vfree_l3", "vfree_l3.graph", 0, std::nullopt,
               {{K::DeltaZero, "", "two-circuit discriminant vanishes at l1=-1, l2=1"},
                {K::N0, "1", "rank stays 3: only one kernel vector"}}});
  f.push_back(
      {"a4finite", "a4finite.graph", 6, std::nullopt,
       {{K::DeltaEquals, "5", "determinant of the A4 Cartan matrix"},
        {K::Irreducible, "", "nonzero discriminant forces a trivial fixed space"},
        {K::TranslationsAtLeast, "0", "finite group: the 6-ball contains no translation"}}});
  return f;
}

struct CatalogRow {
  std::string fixture;
  std::string check;
  std::string provenance;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::vector<FieldElement> parse_tuple(const std::string& s, const FieldContext& ctx) {
  // "(e1,e2,...)"
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw error("bad tuple " + s);
  std::vector<FieldElement> out;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ',')) out.push_back(parse_field_expression(piece, ctx));
  return out;
}

}  // namespace detail

inline CatalogRow run_check(const Fixture& fx, const FixtureCheck& ck, const AnalysisReport& rep,
                            const CartanMatrix& cartan) {
  using K = FixtureCheck::Kind;
  CatalogRow row{fx.name, "", ck.provenance, false, ""};
  const FieldContext& ctx = *rep.graph.field;
  switch (ck.kind) {
    case K::DeltaZero:
      row.check = "delta = 0";
      row.pass = rep.delta.is_zero();
      if (!row.pass) row.detail = "delta = " + rep.delta.to_string();
      break;
    case K::DeltaEquals: {
      row.check = "delta = " + ck.expect;
      FieldElement want = parse_field_expression(ck.expect, ctx);
      row.pass = rep.delta == want;
      if (!row.pass) row.detail = "delta = " + rep.delta.to_string();
      break;
    }
    case K::N0:
      row.check = "n0 = " + ck.expect;
      row.pass = rep.split.n0() == static_cast<std::size_t>(std::stoi(ck.expect));
      if (!row.pass) row.detail = "n0 = " + std::to_string(rep.split.n0());
      break;
    case K::BVector: {
      auto colon = ck.expect.find(':');
      std::size_t k = static_cast<std::size_t>(std::stoi(ck.expect.substr(0, colon))) - 1;
      row.check = "b vector " + ck.expect.substr(0, colon) + " = " + ck.expect.substr(colon + 1);
      auto want = detail::parse_tuple(ck.expect.substr(colon + 1), ctx);
      row.pass = k < rep.b_vectors.size() && rep.b_vectors[k] == want;
      break;
    }
    case K::Identification:
      row.check = "identification = " + ck.expect;
      row.pass = rep.identification == ck.expect;
      if (!row.pass) row.detail = "got '" + rep.identification + "'";
      break;
    case K::FormUnique:
      row.check = "invariant form exists (unique up to scale)";
      row.pass = rep.form.status == FormSolution::Status::Unique;
      break;
    case K::FormNone:
      row.check = "no invariant form";
      row.pass = rep.form.status == FormSolution::Status::None;
      break;
    case K::TranslationsAtLeast: {
      std::size_t want = static_cast<std::size_t>(std::stoul(ck.expect));
      row.check = want == 0
                      ? "no translations at depth " + std::to_string(fx.max_word_len)
                      : "translations >= " + ck.expect + " at depth " +
                            std::to_string(fx.max_word_len);
      row.pass = rep.translations && (want == 0 ? rep.translations->count == 0
                                                : rep.translations->count >= want);
      if (rep.translations) row.detail = "found " + std::to_string(rep.translations->count);
      break;
    }
    case K::Relation: {
      auto caret = ck.expect.find('^');
      row.check = "relation (" + ck.expect.substr(0, caret) + ")^" + ck.expect.substr(caret + 1) +
                  " = 1";
      Word w;
      std::istringstream in(ck.expect.substr(0, caret));
      std::string piece;
      while (std::getline(in, piece, '.')) w.push_back(std::stoi(piece) - 1);
      row.pass = verify_group_relation(cartan, w, std::stoi(ck.expect.substr(caret + 1)));
      break;
    }
    case K::Irreducible:
      row.check = "representation irreducible";
      row.pass = rep.irreducible;
      break;
  }
  return row;
}

inline std::vector<CatalogRow> run_catalog(const std::string& fixtures_dir) {
  std::vector<CatalogRow> rows;
  for (const Fixture& fx : standard_fixtures()) {
    std::ifstream in(fixtures_dir + "/" + fx.file);
    if (!in) {
      rows.push_back({fx.name, "load " + fx.file, "", false, "cannot open file"});
      continue;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      AnalysisOptions opts;
      opts.max_word_len = fx.max_word_len;
      opts.s0_override = fx.s0;
      DecoratedGraph g = parse_graph(buf.str());
      AnalysisReport rep = analyze(g, opts);
      CartanMatrix cm = build_cartan(g);
      for (const FixtureCheck& ck : fx.checks) rows.push_back(run_check(fx, ck, rep, cm));
    } catch (const std::exception& e) {
      rows.push_back({fx.name, "analyze", "", false, e.what()});
    }
  }
  return rows;
}

// ---- the n=5 path sweep ------------------------------------------------------

struct SweepRow {
  std::array<int, 4> labels;
  std::vector<FieldElement> alphas;  // over Q(tau)
};

// All degenerate label/parameter choices for the five-vertex path with labels
// in {3,4,5,6}; exhaustive over the root choices of each label.
inline std::vector<SweepRow> sweep_path5(const FieldContext& K) {
  std::vector<SweepRow> out;
  const int labels[4] = {3, 4, 5, 6};
  std::array<int, 4> p{};
  for (int i0 = 0; i0 < 4; ++i0)
    for (int i1 = 0; i1 < 4; ++i1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int i3 = 0; i3 < 4; ++i3) {
          p = {labels[i0], labels[i1], labels[i2], labels[i3]};
          std::vector<std::vector<FieldElement>> roots;
          for (int k = 0; k < 4; ++k) roots.push_back(edge_root_values(p[k], K));
          std::vector<std::size_t> pick(4, 0);
          while (true) {
            std::vector<FieldElement> a;
            for (int k = 0; k < 4; ++k) a.push_back(roots[k][pick[k]]);
            if (delta_path5(a[0], a[1], a[2], a[3]).is_zero()) out.push_back({p, a});
            int k = 3;
            while (k >= 0 && ++pick[k] == roots[k].size()) pick[k--] = 0;
            if (k < 0) break;
          }
        }
  return out;
}

}  // namespace coxaff
