#include "dnt/dst.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace dnt {

namespace {

constexpr double kMassSumTolerance = 1e-9;
constexpr double kPruneThreshold = 1e-12;
constexpr double kConflictCeiling = 1.0 - 1e-12;

void check_same_frame(const Frame& a, const Frame& b, const char* where) {
  if (!(a == b)) throw FrameMismatch(std::string(where) + ": operands on different frames");
}

}  // namespace

Frame::Frame(std::vector<std::string> labels)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {
  if (labels_->empty()) throw EmptyInput("frame must contain at least one label");
  if (labels_->size() > kMaxLabels)
    throw DomainError("frame exceeds " + std::to_string(kMaxLabels) + " labels");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : *labels_) {
    if (l.empty()) throw DomainError("frame labels must not be empty");
    if (!seen.insert(l).second) throw DomainError("duplicate frame label: " + l);
  }
}

std::size_t Frame::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i)
    if ((*labels_)[i] == label) return i;
  throw UnknownLabel("label not in frame: " + std::string(label));
}

Subset::Subset(Frame frame, std::uint32_t bits) : frame_(std::move(frame)), bits_(bits) {
  if (bits_ & ~frame_.full_mask()) throw DomainError("subset bits outside the frame");
}

Subset Subset::full(Frame frame) {
  const std::uint32_t mask = frame.full_mask();
  return {std::move(frame), mask};
}

Subset Subset::of(Frame frame, std::initializer_list<std::string_view> labels) {
  std::uint32_t bits = 0;
  for (const auto l : labels) bits |= 1u << frame.index_of(l);
  return {std::move(frame), bits};
}

Subset Subset::of(Frame frame, const std::vector<std::string>& labels) {
  std::uint32_t bits = 0;
  for (const auto& l : labels) bits |= 1u << frame.index_of(l);
  return {std::move(frame), bits};
}

std::size_t Subset::cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool Subset::contains(const Subset& other) const {
  return frame_ == other.frame_ && (other.bits_ & ~bits_) == 0;
}

bool Subset::intersects(const Subset& other) const {
  return frame_ == other.frame_ && (bits_ & other.bits_) != 0;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (bits_ & (1u << i)) {
      if (!first) s += ", ";
      s += frame_.label(i);
      first = false;
    }
  }
  return s + "}";
}

BasicProbabilityAssignment::BasicProbabilityAssignment(
    Frame frame, const std::vector<std::pair<std::vector<std::string>, double>>& focals)
    : BasicProbabilityAssignment(frame, [&] {
        std::map<std::uint32_t, double> masses;
        for (const auto& [labels, mass] : focals) {
          const std::uint32_t bits = Subset::of(frame, labels).bits();
          masses[bits] += mass;
        }
        return masses;
      }()) {}

BasicProbabilityAssignment::BasicProbabilityAssignment(Frame frame,
                                                       std::map<std::uint32_t, double> masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  double total = 0.0;
  for (const auto& [bits, mass] : masses_) {
    if (bits == 0) throw EmptyFocal("mass on the empty set is not allowed");
    if (bits & ~frame_.full_mask()) throw DomainError("focal element outside the frame");
    if (mass < 0.0) throw NegativeMass("focal masses must be positive");
    if (mass <= 0.0) throw DomainError("focal masses must be positive");
    total += mass;
  }
  if (std::abs(total - 1.0) > kMassSumTolerance)
    throw DomainError("mass function must sum to 1, got " + std::to_string(total));
}

double BasicProbabilityAssignment::mass(const Subset& a) const {
  check_same_frame(frame_, a.frame(), "mass");
  const auto it = masses_.find(a.bits());
  return it == masses_.end() ? 0.0 : it->second;
}

double bel(const BasicProbabilityAssignment& m, const Subset& a) {
  check_same_frame(m.frame(), a.frame(), "bel");
  double total = 0.0;
  for (const auto& [bits, mass] : m.masses())
    if ((bits & ~a.bits()) == 0) total += mass;
  return total;
}

double pl(const BasicProbabilityAssignment& m, const Subset& a) {
  check_same_frame(m.frame(), a.frame(), "pl");
  double total = 0.0;
  for (const auto& [bits, mass] : m.masses())
    if ((bits & a.bits()) != 0) total += mass;
  return total;
}

double conflict_coefficient(const BasicProbabilityAssignment& m1,
                            const BasicProbabilityAssignment& m2) {
  check_same_frame(m1.frame(), m2.frame(), "conflict_coefficient");
  double k = 0.0;
  for (const auto& [b, mb] : m1.masses())
    for (const auto& [c, mc] : m2.masses())
      if ((b & c) == 0) k += mb * mc;
  return k;
}

BasicProbabilityAssignment dempster_combine(const BasicProbabilityAssignment& m1,
                                            const BasicProbabilityAssignment& m2) {
  check_same_frame(m1.frame(), m2.frame(), "dempster_combine");
  std::map<std::uint32_t, double> acc;
  double k = 0.0;
  for (const auto& [b, mb] : m1.masses()) {
    for (const auto& [c, mc] : m2.masses()) {
      const std::uint32_t inter = b & c;
      const double p = mb * mc;
      if (inter == 0)
        k += p;
      else
        acc[inter] += p;
    }
  }
  if (k >= kConflictCeiling)
    throw TotalConflict("dempster_combine: conflict coefficient K = " + std::to_string(k));
  std::map<std::uint32_t, double> result;
  double total = 0.0;
  for (const auto& [bits, mass] : acc) {
    const double v = mass / (1.0 - k);
    if (v >= kPruneThreshold) {
      result[bits] = v;
      total += v;
    }
  }
  for (auto& [bits, mass] : result) mass /= total;
  return {m1.frame(), std::move(result)};
}

std::vector<std::pair<std::string, double>> ppt(const BasicProbabilityAssignment& m) {
  std::vector<double> prob(m.frame().size(), 0.0);
  for (const auto& [bits, mass] : m.masses()) {
    const double share = mass / static_cast<double>(std::popcount(bits));
    for (std::size_t i = 0; i < prob.size(); ++i)
      if (bits & (1u << i)) prob[i] += share;
  }
  std::vector<std::pair<std::string, double>> out;
  out.reserve(prob.size());
  for (std::size_t i = 0; i < prob.size(); ++i) out.emplace_back(m.frame().label(i), prob[i]);
  return out;
}

}  // namespace dnt
