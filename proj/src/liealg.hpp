#pragma once

#include "admissible.hpp"
#include "linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace maxsolv {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
using Subalgebra = Span<Rational>;

// A real Lie algebra given by structure constants in a fixed basis, with the
// data certification needs: a maximal split toral part, the restricted weights
// of the simple restricted roots of the paired index, and designated
// anisotropic Cartan subalgebras of derived Levis.
class LieRealization {
public:
  LieRealization() = default;
  LieRealization(std::string form_id, std::vector<std::string> basis_labels);

  std::string form_id;
  std::vector<std::string> basis_labels;
  Mat<Rational> split_cartan;    // vectors in basis coordinates
  SatakeIndex index;             // the index this realization is paired with
  Mat<Rational> simple_weights;  // row k = eigenvalues of simple restricted root k on split_cartan
  Mat<Rational> involution;      // empty, or row i = theta(b_i)
  std::map<ThetaSubset, Mat<Rational>> aniso;  // anisotropic Cartan of the derived Levi
  Mat<Rational> compact_cartan;  // empty unless equal rank

  std::size_t dim() const { return basis_labels.size(); }
  std::optional<std::size_t> find_label(const std::string& label) const;

  // Sets [b_i,b_j] = v and [b_j,b_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec<Rational>& v);
  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec<Rational> bracket(const Vec<Rational>& u, const Vec<Rational>& v) const;
  Mat<Rational> ad(const Vec<Rational>& x) const;  // (ad x)[k][j] = coeff of b_k in [x, b_j]
  Vec<Rational> apply_involution(const Vec<Rational>& v) const;

private:
  std::vector<SparseVec> table_;
};

std::string format_vector(const LieRealization& lr, const Vec<Rational>& v);
Vec<Rational> parse_vector(const LieRealization& lr, const std::string& text);

// Antisymmetry, Jacobi over all basis triples, commuting diagonalizable split
// part, involution is an automorphism. Throws realization_invalid.
void validate_realization(const LieRealization& lr);
bool jacobi_holds(const LieRealization& lr, std::string* witness = nullptr);

struct WeightSpace {
  IntVec restricted;     // coordinates in the simple restricted roots
  Vec<Rational> eigen;   // eigenvalues on split_cartan
  Subalgebra space;
};

// Simultaneous eigenspaces of ad(split_cartan), sorted by height descending.
std::vector<WeightSpace> weight_decomposition(const LieRealization& lr);

Subalgebra generated_subalgebra(const LieRealization& lr, const Mat<Rational>& vectors);
Subalgebra bracket_span(const LieRealization& lr, const Subalgebra& a, const Subalgebra& b);
bool is_subalgebra(const LieRealization& lr, const Subalgebra& s);
std::vector<Subalgebra> derived_series(const LieRealization& lr, const Subalgebra& s);
bool is_solvable(const LieRealization& lr, const Subalgebra& s);
Subalgebra normalizer(const LieRealization& lr, const Subalgebra& v);
Subalgebra center(const LieRealization& lr, const Subalgebra& s);

struct BTheta {
  ThetaSubset theta;
  Subalgebra levi;      // sum of weight spaces supported in Theta
  Subalgebra torus;     // designated anisotropic Cartan of the derived Levi
  Subalgebra center;    // center of the Levi
  Subalgebra nilrad;    // positive weight spaces outside span(Theta)
  Subalgebra b;
};

// Lie algebra of B_{Theta,T}; theta must be admissible for idx.
BTheta build_b_theta(const LieRealization& lr, const SatakeIndex& idx, const ThetaSubset& theta,
                     const AdmissibilityContext& ctx = {});
BTheta build_b_theta(const LieRealization& lr, const SatakeIndex& idx, const ThetaSubset& theta,
                     const std::vector<WeightSpace>& weights, const AdmissibilityContext& ctx = {});

struct AdjunctionTest {
  Vec<Rational> x;
  std::string source;  // "weight <coords>", "normalizer", "normalizer of [s,s]"
  std::size_t generated_dim = 0;
  bool solvable = false;
};

struct MaximalityCertificate {
  bool maximal = true;
  std::vector<AdjunctionTest> tests;
  std::optional<Vec<Rational>> witness;
};

// s must be solvable. Adjoins every weight-space basis vector outside s, every
// normalizer vector, and every weight vector normalizing [s,s]; each must
// generate a non-solvable algebra.
MaximalityCertificate certify_maximal_solvable(const LieRealization& lr, const Subalgebra& s);
MaximalityCertificate certify_maximal_solvable(const LieRealization& lr, const Subalgebra& s,
                                               const std::vector<WeightSpace>& weights);

enum class Lemma1Verdict { holds, inconclusive };

struct Lemma1Piece {
  std::vector<Gaussian> eigen;  // eigenvalues of ad(t) on this piece
  std::size_t real_dim = 0;
  std::optional<Vec<Rational>> non_nilpotent;  // element of the piece with ad not nilpotent
};

struct Lemma1Result {
  Lemma1Verdict verdict = Lemma1Verdict::holds;
  std::vector<Lemma1Piece> pieces;  // zero piece first
  std::string reason;
};

// No nonzero ad(t)-stable subspace consisting of ad-nilpotent elements.
// Throws not_anisotropic when ad(t) does not diagonalize with imaginary
// eigenvalues (e.g. t split).
Lemma1Result lemma1_check(const LieRealization& lr, const Mat<Rational>& t);
Lemma1Result lemma1_check(const LieRealization& lr);  // uses lr.compact_cartan

// Split form from the Chevalley basis; rank <= 4. Basis h_i, e_<root>, f_<root>.
LieRealization chevalley_realization(const CartanMatrix& cartan);

// Built-in realizations (all of dimension <= 24).
const std::vector<LieRealization>& realization_catalog();
// Realization matching idx (split indices use the Chevalley form of idx's
// own Cartan matrix); returned copy carries idx as its index.
LieRealization find_realization(const SatakeIndex& idx);

std::string serialize_realization(const LieRealization& lr);
LieRealization parse_realization(const std::string& text);
LieRealization load_realization(const std::string& path);

// Everything `verify` checks for one index.
struct ThetaVerification {
  ThetaSubset theta;
  int dim_B_expected = 0;
  std::size_t dim_b = 0;
  std::vector<std::size_t> derived_dims;
  bool solvable = false;
  MaximalityCertificate certificate;
  bool ok() const { return solvable && certificate.maximal && dim_b == std::size_t(dim_B_expected); }
};

struct VerificationReport {
  std::string form_id;
  std::size_t dim = 0;
  bool jacobi = false;
  bool multiplicities_match = false;
  std::vector<WeightSpace> weights;
  std::vector<ThetaVerification> thetas;
  std::optional<Lemma1Result> lemma1;
  bool ok() const;
};

VerificationReport verify_index(const SatakeIndex& idx, const AdmissibilityContext& ctx = {});
// Same checks against a caller-supplied realization paired with idx.
VerificationReport verify_realization(const LieRealization& lr, const SatakeIndex& idx,
                                      const AdmissibilityContext& ctx = {});

}  // namespace maxsolv
