#pragma once

#include "error.hpp"
#include "rootsys.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace maxsolv {

enum class FieldMode { algebraically_closed, real, oracle };
enum class Color { white, black };

const char* field_mode_name(FieldMode m);  // "closed", "real", "oracle"

// A semisimple group over k, encoded by its Dynkin diagram, the anisotropic
// kernel (black nodes) and the *-involution tau on nodes.
struct SatakeIndex {
  CartanMatrix absolute;
  std::vector<Color> color;
  std::vector<std::size_t> tau;  // tau[i] = image of node i
  FieldMode mode = FieldMode::real;
  std::string name;  // optional, carried for reports only

  std::size_t rank() const { return absolute.size(); }
  bool black(std::size_t i) const { return color[i] == Color::black; }
  NodeList white_nodes() const;
  NodeList black_nodes() const;
  bool split() const;  // all white, tau = id

  // Sub-index on `nodes` (sorted); nodes must be tau-stable.
  SatakeIndex sub(const NodeList& nodes) const;

  static SatakeIndex split_of(const CartanMatrix& cartan, FieldMode mode);

  // Deterministic text form (independent of input line order).
  std::string canonical() const;
  std::string digest() const;  // 16 hex digits of FNV-1a over canonical()
  std::string coloring_string() const;  // 'w'/'b' per node
  std::string tau_cycles() const;       // "(A2.1 A2.2)" or "id"
};

struct ValidationReport {
  bool valid = true;
  ErrorCode code = ErrorCode::ok;
  std::string message;
  std::string witness;
};

ValidationReport validate_index(const SatakeIndex& idx);
void require_valid(const SatakeIndex& idx);  // throws the first violation

// Index text format: `type:`, `black:`, `tau:`, `field:` (and optional `name:`).
SatakeIndex parse_index(const std::string& text);
SatakeIndex load_index(const std::string& path);
std::string format_index(const SatakeIndex& idx);

// Resolve a node reference: either a label ("A2.1") or a 1-based position.
std::size_t resolve_node(const CartanMatrix& m, const std::string& ref);

struct RestrictedRootSystem {
  RootSystem absolute;
  RootSystem base;  // restricted roots in the basis of simple restricted roots
  // classes[k] = white nodes restricting to the k-th simple restricted root.
  std::vector<NodeList> classes;
  std::vector<int> node_class;  // -1 for black nodes
  std::vector<std::string> simple_labels;  // "a1", "a2", ...
  std::map<IntVec, int> multiplicity;      // every restricted root (both signs)

  std::size_t rank() const { return classes.size(); }
  // Class-wise coordinate image; all zeros for black-supported roots.
  IntVec restrict(const IntVec& absolute_coords) const;
  std::optional<std::size_t> find_simple(const std::string& label) const;
};

RestrictedRootSystem restricted_system(const SatakeIndex& idx);

struct IndexFactor {
  SatakeIndex index;
  NodeList nodes;  // node indices in the parent index
  bool complex_type = false;  // tau swaps two isomorphic components
};

// Connected components grouped into tau-orbits.
std::vector<IndexFactor> components(const SatakeIndex& idx);

}  // namespace maxsolv
