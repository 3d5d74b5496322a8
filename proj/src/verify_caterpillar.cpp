// Block structure of D_2(C)[X,X] = [[D, M], [M', N]] for a caterpillar C in
// canonical labeling. Leaf columns are ordered by leaf label, so the leaves
// of spine vertex a occupy a contiguous run.

#include <stdexcept>

#include "verify_internal.hpp"

namespace steinermat {

RationalMatrix caterpillar_dx(const CaterpillarSpec& spec) {
  return build_dk(make_caterpillar(spec), 2, canonical_x(spec)).matrix();
}

BlockPartition partition_blocks(const CaterpillarSpec& spec) {
  if (spec.total_leaves() == 0) throw std::invalid_argument("block partition needs at least one leaf");
  const RationalMatrix dx = caterpillar_dx(spec);
  const std::size_t s = 2 * static_cast<std::size_t>(spec.n()) - 1;
  const std::size_t t = static_cast<std::size_t>(spec.total_leaves());
  return {dx.block(0, 0, s, s), dx.block(0, s, s, t), dx.block(s, 0, t, s), dx.block(s, s, t, t)};
}

namespace {

using detail::from_labels;
using detail::positional;

// Spine vertex carrying the m-th leaf (1-based): the k with
// i_1 + ... + i_{k-1} < m <= i_1 + ... + i_k.
int governing_spine(const CaterpillarSpec& spec, int m) {
  return spec.attachment(spec.n() + m);
}

std::vector<VertexSet> leaf_labels(const CaterpillarSpec& spec) {
  std::vector<VertexSet> out;
  for (int leaf = spec.n() + 1; leaf < spec.num_vertices(); ++leaf) out.push_back(VertexSet{0, leaf});
  return out;
}

// Appends `count` copies of value.
void repeat(std::vector<Rational>& v, int count, long value) {
  for (int c = 0; c < count; ++c) v.emplace_back(value);
}

int leaves_up_to(const CaterpillarSpec& spec, int k) {
  int total = 0;
  for (int a = 1; a <= k; ++a) total += spec.leaves_at(a);
  return total;
}

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<Rational> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return RationalMatrix(rows.size(), rows.front().size(), std::move(flat));
}

RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols) {
  return transpose(from_rows(cols));
}

// M[m] = (m+1,...,m+1, i_{m+1} x (m+2), ..., i_{n-1} x n) for m < n, and
// (n+1) 1' for m >= n.
RationalMatrix expected_m(const CaterpillarSpec& spec) {
  const int n = spec.n();
  std::vector<std::vector<Rational>> rows;
  for (int m = 1; m <= 2 * n - 1; ++m) {
    std::vector<Rational> row;
    if (m <= n - 1) {
      repeat(row, leaves_up_to(spec, m), m + 1);
      for (int a = m + 1; a <= n - 1; ++a) repeat(row, spec.leaves_at(a), a + 1);
    } else {
      repeat(row, spec.total_leaves(), n + 1);
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

// Column m of N: k+2 over the leaves of spine vertices <= k with the dip
// k+1 at position m, then i_a copies of a+2 for a > k.
RationalMatrix expected_n(const CaterpillarSpec& spec) {
  const int n = spec.n();
  std::vector<std::vector<Rational>> cols;
  for (int m = 1; m <= spec.total_leaves(); ++m) {
    const int k = governing_spine(spec, m);
    std::vector<Rational> col;
    repeat(col, leaves_up_to(spec, k), k + 2);
    col[m - 1] = Rational(k + 1);
    for (int a = k + 1; a <= n - 1; ++a) repeat(col, spec.leaves_at(a), a + 2);
    cols.push_back(std::move(col));
  }
  return from_columns(cols);
}

RationalMatrix expected_lm(const CaterpillarSpec& spec) {
  const int n = spec.n();
  const std::size_t t = static_cast<std::size_t>(spec.total_leaves());
  RationalMatrix out(2 * static_cast<std::size_t>(n) - 1, t);
  for (int m = 1; m <= n - 1; ++m) {
    for (int c = leaves_up_to(spec, m - 1); c < leaves_up_to(spec, m); ++c) out(m - 1, c) = -1;
  }
  for (std::size_t c = 0; c < t; ++c) out(n - 1, c) = 1;
  return out;
}

// Column m of M'LM: n-k over the leaves of spine vertices <= k, then i_a
// copies of n-a for a > k.
RationalMatrix expected_mlm(const CaterpillarSpec& spec) {
  const int n = spec.n();
  std::vector<std::vector<Rational>> cols;
  for (int m = 1; m <= spec.total_leaves(); ++m) {
    const int k = governing_spine(spec, m);
    std::vector<Rational> col;
    repeat(col, leaves_up_to(spec, k), n - k);
    for (int a = k + 1; a <= n - 1; ++a) repeat(col, spec.leaves_at(a), n - a);
    cols.push_back(std::move(col));
  }
  return from_columns(cols);
}

VerificationReport block_check(const char* name, const CaterpillarSpec& spec,
                               const std::function<void(VerificationReport&, const BlockPartition&)>& body) {
  return detail::timed(name, detail::spec_json(spec), [&](VerificationReport& report) {
    if (spec.total_leaves() == 0) {
      report.details["vacuous"] = true;
      return;
    }
    body(report, partition_blocks(spec));
  });
}

}  // namespace

VerificationReport verify_block_form(const CaterpillarSpec& spec) {
  return block_check("block", spec, [&](VerificationReport& report, const BlockPartition& b) {
    const auto x = canonical_x(spec);
    const auto spine = path_x(spec.n());
    const auto leaves = leaf_labels(spec);
    if (detail::first_mismatch(report, path_dx(spec.n()), b.d, from_labels(spine), from_labels(spine))) return;
    if (detail::first_mismatch(report, expected_m(spec), b.m, from_labels(spine), from_labels(leaves))) return;
    if (detail::first_mismatch(report, transpose(b.m), b.mt, from_labels(leaves), from_labels(spine))) return;
    detail::first_mismatch(report, expected_n(spec), b.n, from_labels(leaves), from_labels(leaves));
  });
}

VerificationReport verify_lm_rows(const CaterpillarSpec& spec) {
  return block_check("lm", spec, [&](VerificationReport& report, const BlockPartition& b) {
    const auto leaves = leaf_labels(spec);
    RationalMatrix lm = multiply(path_laplacian(b.d.rows()), b.m);
    detail::first_mismatch(report, expected_lm(spec), lm, positional("row"), from_labels(leaves));
  });
}

VerificationReport verify_mlm_columns(const CaterpillarSpec& spec) {
  return block_check("mlm", spec, [&](VerificationReport& report, const BlockPartition& b) {
    const auto leaves = leaf_labels(spec);
    RationalMatrix mlm = multiply(transpose(b.m), multiply(path_laplacian(b.d.rows()), b.m));
    detail::first_mismatch(report, expected_mlm(spec), mlm, from_labels(leaves), from_labels(leaves));
  });
}

VerificationReport verify_n_plus_mlm(const CaterpillarSpec& spec) {
  return block_check("nmlm", spec, [&](VerificationReport& report, const BlockPartition& b) {
    const auto leaves = leaf_labels(spec);
    const std::size_t t = b.n.rows();
    RationalMatrix lhs = add(b.n, multiply(transpose(b.m), multiply(path_laplacian(b.d.rows()), b.m)));
    RationalMatrix rhs = subtract(scale(Rational(spec.n() + 2), RationalMatrix::ones(t, t)),
                                  RationalMatrix::identity(t));
    detail::first_mismatch(report, rhs, lhs, from_labels(leaves), from_labels(leaves));
  });
}

VerificationReport verify_schur(const CaterpillarSpec& spec) {
  return block_check("schur", spec, [&](VerificationReport& report, const BlockPartition& b) {
    const auto leaves = leaf_labels(spec);
    const std::size_t t = b.n.rows();
    const RationalMatrix dx = caterpillar_dx(spec);
    RationalMatrix p = schur_complement(dx, b.d.rows());
    RationalMatrix expected = subtract(scale(Rational(-1, spec.n()), RationalMatrix::ones(t, t)),
                                       RationalMatrix::identity(t));
    if (detail::first_mismatch(report, expected, p, from_labels(leaves), from_labels(leaves))) return;

    const Rational det_full = det(dx);
    const Rational det_product = det(b.d) * det(p);
    report.details["det"] = det_full.to_string();
    if (det_full.is_zero()) {
      report.fail({"det", "D2[X,X]", Rational(1), det_full});
    } else if (det_full != det_product) {
      report.fail({"det", "det(D)det(P)", det_product, det_full});
    }
  });
}

VerificationReport verify_column_combos(const CaterpillarSpec& spec) {
  return detail::timed("columns", detail::spec_json(spec), [&](VerificationReport& report) {
    const int n = spec.n();
    const LabeledMatrix d2 = build_dk(make_caterpillar(spec), 2);
    const auto x = canonical_x(spec);
    const auto xc = complement_pairs(spec.num_vertices(), x);
    auto col = [&](int a, int b) { return *d2.col_index(VertexSet{a, b}); };

    long counts[4] = {0, 0, 0, 0};
    for (const VertexSet& pair : xc) {
      const int k = pair.front();
      const int j = pair.back();
      // (sign, column) terms of the lemma that applies to {k, j}
      std::vector<std::pair<int, std::size_t>> terms;
      int lemma = 0;
      if (j < n) {
        lemma = 1;
        terms = {{1, col(0, j)}, {-1, col(0, n)}, {1, col(k, n)}};
      } else if (k <= n) {
        const int i = spec.attachment(j);
        if (k < i) {
          lemma = 2;
          terms = {{1, col(0, j)}, {-1, col(0, n)}, {1, col(k, n)}};
        } else {
          lemma = 3;
          terms = {{1, col(0, j)}, {-1, col(0, n)}, {1, col(i, n)}, {1, col(0, k)}, {-1, col(0, i)}};
        }
      } else {
        lemma = 4;
        const int k_spine = spec.attachment(k);
        terms = {{1, col(0, j)}, {-1, col(0, n)}, {1, col(k_spine, n)}, {1, col(0, k)}, {-1, col(0, k_spine)}};
      }
      ++counts[lemma - 1];

      const std::size_t target = col(k, j);
      for (std::size_t r = 0; r < d2.matrix().rows(); ++r) {
        Rational combo;
        for (const auto& [sign, c] : terms) {
          combo += sign > 0 ? d2.matrix()(r, c) : -d2.matrix()(r, c);
        }
        if (combo != d2.matrix()(r, target)) {
          report.fail({"{" + d2.row_labels()[r].to_string() + "}",
                       "{" + pair.to_string() + "} (l" + std::to_string(lemma) + ")", combo,
                       d2.matrix()(r, target)});
          break;
        }
      }
      if (!report.pass) break;
    }
    report.details["l1"] = counts[0];
    report.details["l2"] = counts[1];
    report.details["l3"] = counts[2];
    report.details["l4"] = counts[3];
    report.details["complement_size"] = xc.size();
    if (report.pass && counts[0] + counts[1] + counts[2] + counts[3] != static_cast<long>(xc.size())) {
      report.fail({"coverage", "", Rational(static_cast<long>(xc.size())),
                   Rational(counts[0] + counts[1] + counts[2] + counts[3])});
    }
  });
}

VerificationReport verify_column_combos(const Tree& t) {
  auto rec = caterpillar_spec_of(t);
  if (!rec) throw std::invalid_argument("column lemmas need a caterpillar with spine length >= 2");
  return verify_column_combos(rec->spec);
}

}  // namespace steinermat
