#pragma once

// Exact root-system arithmetic over simple-root coordinates.
//
// Nodes are numbered 1..n following Bourbaki.  A Root is the vector of its
// coefficients over the simple roots; positive roots are generated by closure
// under simple reflections, so any finite Cartan matrix without 6-term braid
// relations is handled by the same code.  Types A_n, B_n, C_n, D_n have
// named constructors.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbw {

using Node = int;
using Count = std::int64_t;
using RootId = std::uint32_t;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct TypeRank {
  Family family = Family::A;
  int rank = 1;

  // Throws pbw::Error unless A: n>=1, B/C: n>=2, D: n>=3.
  static TypeRank make(char letter, int rank);
  // "A4", "d5", ...
  static TypeRank parse(std::string_view text);

  char letter() const { return static_cast<char>(family); }
  std::string name() const;
  bool simply_laced() const { return family == Family::A || family == Family::D; }

  auto operator<=>(const TypeRank&) const = default;
};

class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  static Root zero(int rank) { return Root(std::vector<int>(rank, 0)); }
  static Root simple(int rank, Node i);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  int coeff(Node i) const { return coeffs_[i - 1]; }
  std::span<const int> coeffs() const { return coeffs_; }

  int height() const;
  bool is_zero() const;
  // All coefficients >= 0 and at least one > 0.
  bool is_positive() const;

  Root& operator+=(const Root& other);
  Root& operator-=(const Root& other);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator-(Root a);
  friend Root operator*(int k, Root a);

  auto operator<=>(const Root&) const = default;

 private:
  std::vector<int> coeffs_;
};

// "1.2.1.1"
std::string to_dotted(const Root& root);
// Digit multiset, e.g. "12234" for a1+2a2+a3+a4.  Falls back to the dotted
// form when the rank exceeds 9 or a coefficient is negative.
std::string to_compact(const Root& root);
// Accepts either rendering.  Throws pbw::Error on malformed text.
Root parse_root(std::string_view text, int rank);

struct CartanData {
  int rank = 0;
  std::vector<int> matrix;       // row-major, matrix[(i-1)*rank + (j-1)] = a_ij
  std::vector<int> symmetrizer;  // d_1..d_n with min d_i = 1

  int a(Node i, Node j) const { return matrix[(i - 1) * rank + (j - 1)]; }
  int d(Node i) const { return symmetrizer[i - 1]; }
};

CartanData cartan_data(TypeRank tr);

class RootSystem {
 public:
  explicit RootSystem(TypeRank tr);
  // Generic finite type; `label` is only used for display.
  RootSystem(std::string label, CartanData cartan);

  // Shared, immutable instance per type.
  static std::shared_ptr<const RootSystem> get(TypeRank tr);

  const std::string& label() const { return label_; }
  const std::optional<TypeRank>& type() const { return type_; }
  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }

  std::size_t num_positive() const { return positive_.size(); }
  std::span<const Root> positive_roots() const { return positive_; }
  const Root& root(RootId id) const { return positive_[id]; }
  std::optional<RootId> find(const Root& root) const;
  RootId simple_id(Node i) const { return simple_ids_[i - 1]; }
  bool is_simple(RootId id) const { return root(id).height() == 1; }

  // <alpha_i^vee, beta>
  int pairing(Node i, const Root& beta) const;
  // (beta|gamma) with (alpha_i|alpha_j) = d_i a_ij
  int bilinear(const Root& beta, const Root& gamma) const;
  Root reflect(Node i, const Root& beta) const;

  // Tables over positive roots.
  int bilinear(RootId a, RootId b) const { return gram_[a * num_positive() + b]; }
  int norm2(RootId a) const { return bilinear(a, a); }
  // Id of a+b when it is a positive root.
  std::optional<RootId> sum(RootId a, RootId b) const;

 private:
  void build();

  std::string label_;
  std::optional<TypeRank> type_;
  CartanData cartan_;
  std::vector<Root> positive_;
  std::map<Root, RootId> index_;
  std::vector<RootId> simple_ids_;
  std::vector<int> gram_;
  std::vector<std::int32_t> sums_;
};

// Closed-form |Phi^+| per type.
std::size_t expected_num_positive(TypeRank tr);

}  // namespace pbw
