#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/errors.hpp"

namespace dnt {

/// Frame of discernment: an ordered set of mutually exclusive hypothesis
/// labels. Immutable and cheap to copy; equality is label-sequence equality.
class Frame {
 public:
  static constexpr std::size_t kMaxLabels = 16;

  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  /// Throws UnknownLabel for labels outside the frame.
  std::size_t index_of(std::string_view label) const;

  /// Bit mask selecting every element.
  std::uint32_t full_mask() const { return (1u << size()) - 1u; }

  bool operator==(const Frame& other) const { return *labels_ == *other.labels_; }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A proposition: subset of a frame, stored as a bitset in frame order.
class Subset {
 public:
  Subset(Frame frame, std::uint32_t bits);
  static Subset empty(Frame frame) { return {std::move(frame), 0u}; }
  static Subset full(Frame frame);
  static Subset of(Frame frame, std::initializer_list<std::string_view> labels);
  static Subset of(Frame frame, const std::vector<std::string>& labels);

  const Frame& frame() const { return frame_; }
  std::uint32_t bits() const { return bits_; }
  std::size_t cardinality() const;
  bool is_empty() const { return bits_ == 0; }
  bool contains(const Subset& other) const;
  bool intersects(const Subset& other) const;
  Subset complement() const { return {frame_, ~bits_ & frame_.full_mask()}; }

  /// Member labels in frame order, e.g. "{a, b}".
  std::string to_string() const;

  bool operator==(const Subset& other) const {
    return frame_ == other.frame_ && bits_ == other.bits_;
  }

 private:
  Frame frame_;
  std::uint32_t bits_;
};

/// Mass function over a frame: positive masses on non-empty subsets (the
/// focal elements) summing to 1.
class BasicProbabilityAssignment {
 public:
  BasicProbabilityAssignment(Frame frame,
                             const std::vector<std::pair<std::vector<std::string>, double>>& focals);
  BasicProbabilityAssignment(Frame frame, std::map<std::uint32_t, double> masses);

  const Frame& frame() const { return frame_; }
  /// Focal elements keyed by bitset, ascending. Deterministic iteration order.
  const std::map<std::uint32_t, double>& masses() const { return masses_; }
  double mass(const Subset& a) const;
  std::size_t focal_count() const { return masses_.size(); }

 private:
  Frame frame_;
  std::map<std::uint32_t, double> masses_;
};

/// Total mass committed to subsets of A.
double bel(const BasicProbabilityAssignment& m, const Subset& a);

/// Total mass not committed against A: sum over focal sets meeting A.
/// Satisfies pl(A) = 1 - bel(complement(A)) and pl >= bel.
double pl(const BasicProbabilityAssignment& m, const Subset& a);

/// Dempster's rule: normalized intersection products. Commutative and
/// associative. Throws TotalConflict when the conflict coefficient reaches 1.
BasicProbabilityAssignment dempster_combine(const BasicProbabilityAssignment& m1,
                                            const BasicProbabilityAssignment& m2);

/// Conflict coefficient K of Dempster's rule, without combining.
double conflict_coefficient(const BasicProbabilityAssignment& m1,
                            const BasicProbabilityAssignment& m2);

/// Pignistic probability transformation: each focal mass is split equally
/// among its members. Returned in frame order; sums to 1.
std::vector<std::pair<std::string, double>> ppt(const BasicProbabilityAssignment& m);

}  // namespace dnt
