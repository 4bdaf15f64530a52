#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/dst.hpp"
#include "dnt/errors.hpp"
#include "dnt/fuzzy.hpp"

namespace dnt {

/// Frame for D numbers: an ordered set of labels F1..FN that are NOT required
/// to be mutually exclusive, plus the reserved incompleteness symbol X.
/// X absorbs whatever mass a source fails to commit and may itself be
/// non-exclusive with frame elements.
class DFrame {
 public:
  static constexpr std::size_t kMaxLabels = 16;
  static constexpr std::string_view kXLabel = "X";

  explicit DFrame(std::vector<std::string> theta);

  /// Number of theta labels (X not counted).
  std::size_t size() const { return theta_->size(); }
  const std::vector<std::string>& theta() const { return *theta_; }
  const std::string& label(std::size_t i) const { return (*theta_)[i]; }
  std::size_t index_of(std::string_view label) const;

  /// Bit reserved for X, one past the last theta bit.
  std::uint32_t x_bit() const { return 1u << size(); }
  std::uint32_t theta_mask() const { return (1u << size()) - 1u; }
  std::uint32_t full_mask() const { return theta_mask() | x_bit(); }

  bool operator==(const DFrame& other) const { return *theta_ == *other.theta_; }

 private:
  std::shared_ptr<const std::vector<std::string>> theta_;
};

/// A non-empty focal set: subset of theta plus an optional X membership.
class DFocalSet {
 public:
  DFocalSet(DFrame frame, std::uint32_t bits);
  /// Builds from labels; "X" names the incompleteness symbol.
  static DFocalSet of(DFrame frame, std::initializer_list<std::string_view> labels);
  static DFocalSet of(DFrame frame, const std::vector<std::string>& labels);
  static DFocalSet full(DFrame frame);

  const DFrame& frame() const { return frame_; }
  std::uint32_t bits() const { return bits_; }
  bool contains_x() const { return (bits_ & frame_.x_bit()) != 0; }
  std::size_t cardinality_over_theta() const;
  bool intersects(const DFocalSet& other) const;
  bool contains(const DFocalSet& other) const;

  /// Members in theta order with X last, e.g. "{MG, G, VG}" or "{a, X}".
  std::string to_string() const;

  bool operator==(const DFocalSet& other) const {
    return frame_ == other.frame_ && bits_ == other.bits_;
  }

 private:
  DFrame frame_;
  std::uint32_t bits_;
};

/// A D number: mass assignment over subsets of theta whose total may fall
/// short of 1; the deficit is carried explicitly on {X}, so a stored D number
/// always sums to 1 over the augmented frame. Q() is the theta-only total;
/// Q = 1 means information-complete.
class DNumber {
 public:
  DNumber(DFrame frame,
          const std::vector<std::pair<std::vector<std::string>, double>>& focals);
  DNumber(DFrame frame, std::map<std::uint32_t, double> masses);

  const DFrame& frame() const { return frame_; }
  /// Focal sets keyed by bitset, ascending; X appears as the highest bit.
  const std::map<std::uint32_t, double>& masses() const { return masses_; }
  double mass(const DFocalSet& a) const;
  double mass_bits(std::uint32_t bits) const;
  std::size_t focal_count() const { return masses_.size(); }

  /// Total mass on X-free focal sets.
  double q() const;
  bool information_complete(double tol = 1e-9) const;

 private:
  Frame to_frame() const;
  DFrame frame_;
  std::map<std::uint32_t, double> masses_;
};

/// Completes a partial assignment over subsets of theta by moving the missing
/// mass onto {X}. Throws MassOverflow past 1 + 1e-9 and NegativeMass below 0.
DNumber augment_with_x(const DFrame& frame,
                       const std::vector<std::pair<std::vector<std::string>, double>>& partial);

/// Symmetric matrix of pairwise non-exclusive degrees over the N+1 singletons
/// of theta plus X: entries in [0, 1], unit diagonal.
class NonExclusivityMatrix {
 public:
  NonExclusivityMatrix(DFrame frame, std::vector<std::vector<double>> base);

  /// Fully exclusive frame: zero everywhere off the diagonal. With this
  /// matrix every D-number operation degenerates to its classical form.
  static NonExclusivityMatrix exclusive(DFrame frame);

  const DFrame& frame() const { return frame_; }
  /// Singleton degree; index frame().size() addresses X.
  double base(std::size_t i, std::size_t j) const { return base_[i][j]; }
  double base(std::string_view a, std::string_view b) const;
  /// Derived exclusive degree u_E = 1 - u.
  double exclusive_degree(std::size_t i, std::size_t j) const { return 1.0 - base_[i][j]; }
  const std::vector<std::vector<double>>& rows() const { return base_; }

 private:
  std::size_t resolve(std::string_view label) const;
  DFrame frame_;
  std::vector<std::vector<double>> base_;
};

/// Power-set extension of the base degrees: 1 whenever the sets intersect
/// (X counts as a shared member), otherwise the max over singleton pairs.
double extend_nonexcl(const NonExclusivityMatrix& m, const DFocalSet& b, const DFocalSet& c);

/// Belief: total mass on focal sets contained in A.
double d_bel(const DNumber& d, const DFocalSet& a);

/// Plausibility: mass-weighted sum of extended non-exclusive degrees against
/// A. Always >= d_bel; degenerates to classical pl under a zero matrix.
double d_pl(const DNumber& d, const NonExclusivityMatrix& m, const DFocalSet& a);

/// One routed product of the combination table: the mass product of a focal
/// pair and where it lands. Intersecting pairs route the whole product to the
/// intersection; disjoint pairs route u * product to the union and the rest
/// to conflict.
struct EcrProduct {
  std::uint32_t left;
  std::uint32_t right;
  std::uint32_t target;
  double value;     // contribution routed to target
  double conflict;  // contribution routed to the conflict coefficient
};

/// Exclusive conflict's redistribution rule. Commutative, NOT associative.
/// Throws TotalExclusiveConflict when the exclusive conflict reaches 1.
DNumber ecr_combine(const DNumber& d1, const DNumber& d2, const NonExclusivityMatrix& m);

/// Exclusive conflict coefficient K_D of the ECR rule, without combining.
double exclusive_conflict(const DNumber& d1, const DNumber& d2, const NonExclusivityMatrix& m);

/// The full routed product table of ecr_combine, row-major over the focal
/// sets of d1 and d2 in ascending bitset order.
std::vector<EcrProduct> ecr_product_table(const DNumber& d1, const DNumber& d2,
                                          const NonExclusivityMatrix& m);

/// Weighted average combination: average the inputs by weight, then ECR-fold
/// n copies of the average (n - 1 applications, left associated). Weights
/// must sum to 1.
DNumber wac_combine(std::span<const DNumber> ds, std::span<const double> ws,
                    const NonExclusivityMatrix& m);

/// Pignistic transformation over theta: X-bearing focal sets carry no betting
/// mass, so they are excluded and the distribution is renormalized by Q.
/// Throws NoInformation when Q = 0. Returned in theta order; sums to 1.
std::vector<std::pair<std::string, double>> d_ppt(const DNumber& d);

/// Builds a D number from one linguistic vote per decision maker:
/// singleton focal sets with relative-frequency masses. Information-complete.
DNumber from_linguistic_votes(const std::vector<std::string>& votes, const DFrame& frame);

/// Weighted variant: vote i carries weight ws[i] >= 0; masses are the
/// normalized weight totals per label.
DNumber from_linguistic_votes(const std::vector<std::string>& votes, std::span<const double> ws,
                              const DFrame& frame);

/// Derives the base matrix from a linguistic scale: the area ratio of each
/// label pair, zero against X, unit diagonal.
NonExclusivityMatrix build_nonexcl_from_scale(const LinguisticScale& scale);

/// Bridges to the classical machinery: a BPA viewed as an information-
/// complete D number over the same labels, and back. as_bpa requires Q = 1
/// within 1e-9 and throws NoInformation otherwise.
DNumber as_dnumber(const BasicProbabilityAssignment& m);
BasicProbabilityAssignment as_bpa(const DNumber& d);

}  // namespace dnt
