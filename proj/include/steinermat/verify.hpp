#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "steinermat/dk.hpp"
#include "steinermat/matrix.hpp"
#include "steinermat/tree.hpp"

namespace steinermat {

/// First disagreement found by a check.
struct Witness {
  std::string row;
  std::string col;
  Rational expected;
  Rational actual;
};

/// Outcome of one mechanical check. pass is true exactly when witness is
/// empty.
struct VerificationReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = true;
  std::optional<Witness> witness;
  /// Check-specific extras, e.g. per-lemma case counts.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;

  void fail(Witness w) {
    pass = false;
    witness = std::move(w);
  }
};

/// {check, params, pass, witness?, details?, elapsed_ms?}
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = true);

/// The four blocks of D_2(C)[X,X] split after the 2n-1 spine pairs.
struct BlockPartition {
  RationalMatrix d;
  RationalMatrix m;
  RationalMatrix mt;
  RationalMatrix n;
};

/// Requires at least one leaf.
BlockPartition partition_blocks(const CaterpillarSpec& spec);

/// D_2(P_n)[X,X] for the bare path, X = path_x(n).
RationalMatrix path_dx(int n);
/// D_2(C)[X,X] for X = canonical_x(spec).
RationalMatrix caterpillar_dx(const CaterpillarSpec& spec);

// Path identities, n >= 1.
VerificationReport verify_path_rows(int n);
VerificationReport verify_ld_identity(int n);
VerificationReport verify_path_inverse(int n);

// Caterpillar block structure. Specs without leaves pass vacuously.
VerificationReport verify_block_form(const CaterpillarSpec& spec);
VerificationReport verify_lm_rows(const CaterpillarSpec& spec);
VerificationReport verify_mlm_columns(const CaterpillarSpec& spec);
VerificationReport verify_n_plus_mlm(const CaterpillarSpec& spec);
VerificationReport verify_schur(const CaterpillarSpec& spec);

/// Every column of D_2 indexed outside canonical X equals the lemma's
/// combination of X-columns. The tree is recognized and relabeled first;
/// throws std::invalid_argument if it is not a caterpillar.
VerificationReport verify_column_combos(const Tree& t);
VerificationReport verify_column_combos(const CaterpillarSpec& spec);

/// rank(D_2(t)) == 2N - p - 1 (and == |canonical X|). Throws
/// std::invalid_argument if t is not a caterpillar.
VerificationReport verify_rank_formula(const Tree& t);

/// D^{-1} = -L/2 + tau tau' / (2(N-1)) for the ordinary distance matrix.
/// Throws std::invalid_argument on a single vertex.
VerificationReport verify_graham_lovasz(const Tree& t);

/// All eleven checks for a caterpillar spec: the path identities on its
/// spine length, the block identities, the column lemmas, the rank formula
/// and Graham-Lovasz on make_caterpillar(spec).
std::vector<VerificationReport> verify_all(const CaterpillarSpec& spec);

}  // namespace steinermat
