#include <stdexcept>

#include "verify_internal.hpp"

namespace steinermat {

VerificationReport verify_rank_formula(const Tree& t) {
  if (t.num_vertices() < 2) throw std::invalid_argument("rank formula needs at least two vertices");
  if (!is_caterpillar(t)) throw std::invalid_argument("rank formula applies to caterpillars only");
  const int num = t.num_vertices();
  const int pendants = pendant_count(t);
  nlohmann::ordered_json params{{"N", num}, {"p", pendants}};
  auto rec = caterpillar_spec_of(t);
  if (rec) params["spec"] = detail::spec_json(rec->spec);

  return detail::timed("rank", std::move(params), [&](VerificationReport& report) {
    const long formula = 2L * num - pendants - 1;
    const long r = static_cast<long>(rank(build_dk(t, 2).matrix()));
    report.details["rank"] = r;
    report.details["formula"] = formula;
    if (r != formula) {
      report.fail({"rank", "2N-p-1", Rational(formula), Rational(r)});
      return;
    }
    if (rec) {
      const long x_size = static_cast<long>(canonical_x(rec->spec).size());
      if (x_size != r) report.fail({"rank", "|X|", Rational(x_size), Rational(r)});
    }
  });
}

VerificationReport verify_graham_lovasz(const Tree& t) {
  const int num = t.num_vertices();
  if (num < 2) throw std::invalid_argument("Graham-Lovasz formula needs at least two vertices");
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : t.edges()) edges.push_back({e.u, e.v});
  nlohmann::ordered_json params{{"N", num}, {"edges", std::move(edges)}};
  return detail::timed("graham-lovasz", std::move(params), [&](VerificationReport& report) {
    const auto n = static_cast<std::size_t>(num);
    RationalMatrix d = RationalMatrix::from_integers(n, n, all_pairs_distances(t));
    std::vector<Rational> tau;
    for (int v = 0; v < num; ++v) tau.emplace_back(2 - t.degree(v));
    RationalVector tv(std::move(tau));
    RationalMatrix formula = add(scale(Rational(-1, 2), laplacian(t)),
                                 scale(Rational(1, 2L * (num - 1)), outer(tv, tv)));
    // D F = I with F square proves F = D^{-1}.
    detail::first_mismatch(report, RationalMatrix::identity(n), multiply(d, formula),
                           detail::positional("row"), detail::positional("col"));
  });
}

std::vector<VerificationReport> verify_all(const CaterpillarSpec& spec) {
  const Tree t = make_caterpillar(spec);
  return {
      verify_path_rows(spec.n()),   verify_ld_identity(spec.n()), verify_path_inverse(spec.n()),
      verify_block_form(spec),      verify_lm_rows(spec),         verify_mlm_columns(spec),
      verify_n_plus_mlm(spec),      verify_schur(spec),           verify_column_combos(spec),
      verify_rank_formula(t),       verify_graham_lovasz(t),
  };
}

}  // namespace steinermat
