#pragma once

#include "scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace maxsolv {

using IntVec = std::vector<int>;
using NodeList = std::vector<std::size_t>;

// Connected Dynkin type in Bourbaki numbering.
struct SimpleType {
  char family = 'A';  // A..G
  int rank = 0;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

// Square integer matrix with entry (i,j) = <alpha_i^vee, alpha_j>, so that
// s_i(v) = v - (sum_j a_ij v_j) alpha_i.
class CartanMatrix {
public:
  CartanMatrix() = default;
  CartanMatrix(std::vector<IntVec> entries, std::vector<std::string> labels);

  // Bourbaki matrix of a connected type; labels are "<prefix>.<k>".
  static CartanMatrix of_type(SimpleType type, const std::string& prefix);
  static CartanMatrix of_type(SimpleType type) { return of_type(type, type.str()); }
  // Accepts "A2", "A2+A1", "B3 + G2". Repeated summands get prefixes A1, A1_2, ...
  static CartanMatrix parse_type(const std::string& text);
  static CartanMatrix direct_sum(const std::vector<CartanMatrix>& parts);

  std::size_t size() const { return labels_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<IntVec>& entries() const { return a_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find_label(const std::string& label) const;

  CartanMatrix sub(const NodeList& nodes) const;
  std::vector<NodeList> components() const;
  bool connected() const { return components().size() <= 1; }

  // d_i = (alpha_i, alpha_i)/2 with d_i a_ij symmetric; throws not_symmetrizable.
  std::vector<Rational> symmetrizer() const;
  // Throws not_finite_type with a witness vector of nonpositive norm.
  void check_finite_type() const;
  Rational inner(const IntVec& u, const IntVec& v) const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.a_ == b.a_; }

private:
  std::vector<IntVec> a_;
  std::vector<std::string> labels_;
};

// All bijections p from the nodes of a onto those of b with a(i,j) = b(p[i],p[j]).
std::vector<NodeList> cartan_isomorphisms(const CartanMatrix& a, const CartanMatrix& b,
                                          std::size_t limit = 0);

struct TypeMatch {
  SimpleType type;
  NodeList to_node;  // Bourbaki position k -> node index of the input matrix
};

// Identify a connected finite-type matrix; canonical ranges A1+, B2+, C3+, D4+.
TypeMatch identify_type(const CartanMatrix& connected);
// All Bourbaki identifications (one per diagram automorphism).
std::vector<TypeMatch> identify_type_all(const CartanMatrix& connected);
std::string type_string(const CartanMatrix& m);  // e.g. "A2+A1", "" for empty

class Root {
public:
  Root() = default;
  explicit Root(IntVec coords);  // rejects zero and mixed-sign vectors
  const IntVec& coords() const { return c_; }
  bool positive() const;
  int height() const;
  Root operator-() const;
  std::string str(const std::vector<std::string>& names) const;
  friend auto operator<=>(const Root&, const Root&) = default;

private:
  IntVec c_;
};

class RootSystem;

// Word in the simple reflections together with its induced root permutation.
class WeylElement {
public:
  WeylElement() = default;
  WeylElement(const RootSystem& rs, std::vector<std::size_t> word);

  const std::vector<std::size_t>& word() const { return word_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  IntVec apply(const IntVec& v) const;

private:
  const RootSystem* rs_ = nullptr;
  std::vector<std::size_t> word_;
  std::vector<std::size_t> perm_;
};

class RootSystem {
public:
  // Closure of the simple roots under simple reflections.
  static RootSystem generate(const CartanMatrix& cartan);
  // Arbitrary (possibly non-reduced) root set given in simple-root
  // coordinates; the unit vectors must be the simple roots. The Cartan
  // matrix is read off root strings and closure under reflections checked.
  static RootSystem from_roots(const std::vector<IntVec>& roots,
                               std::vector<std::string> simple_labels);

  const CartanMatrix& cartan() const { return cartan_; }
  std::size_t rank() const { return cartan_.size(); }
  bool reduced() const { return reduced_; }
  // Positive roots first (by height, then coordinates), then their negatives.
  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positives() const;
  std::vector<Root> simples() const;
  std::size_t num_positive() const { return roots_.size() / 2; }
  std::optional<std::size_t> index_of(const IntVec& coords) const;
  bool contains(const IntVec& coords) const { return index_of(coords).has_value(); }

  int pairing(std::size_t i, const IntVec& v) const;  // <alpha_i^vee, v>
  IntVec reflect(std::size_t i, const IntVec& v) const;

  // Longest element of the parabolic subgroup generated by `nodes`.
  WeylElement longest_element(const NodeList& nodes) const;

private:
  void index_roots();

  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::map<IntVec, std::size_t> lookup_;
  bool reduced_ = true;
};

// Subsets of simple roots are sorted index lists.
using SimpleSubset = std::vector<std::size_t>;

// Orders subsets by (size, lexicographic indices).
bool subset_less(const SimpleSubset& a, const SimpleSubset& b);
std::vector<SimpleSubset> all_subsets(std::size_t n);

// Subsets Theta' with w(Theta) = Theta' for some Weyl element w.
std::vector<SimpleSubset> weyl_orbit_subsets(const RootSystem& rs, const SimpleSubset& theta);
bool subsets_conjugate(const RootSystem& rs, const SimpleSubset& a, const SimpleSubset& b);

}  // namespace maxsolv
