#include "dnt/dnumbers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace dnt {

namespace {

constexpr double kMassSumTolerance = 1e-9;
constexpr double kPruneThreshold = 1e-12;
constexpr double kConflictCeiling = 1.0 - 1e-12;

void check_same_frame(const DFrame& a, const DFrame& b, const char* where) {
  if (!(a == b)) throw FrameMismatch(std::string(where) + ": operands on different frames");
}

/// Normalizes accumulated products into a unit-sum D number, pruning dust.
std::map<std::uint32_t, double> normalize_pruned(std::map<std::uint32_t, double> acc,
                                                 double scale) {
  std::map<std::uint32_t, double> out;
  double total = 0.0;
  for (const auto& [bits, mass] : acc) {
    const double v = mass * scale;
    if (v >= kPruneThreshold) {
      out[bits] = v;
      total += v;
    }
  }
  for (auto& [bits, mass] : out) mass /= total;
  return out;
}

}  // namespace

DFrame::DFrame(std::vector<std::string> theta)
    : theta_(std::make_shared<const std::vector<std::string>>(std::move(theta))) {
  if (theta_->empty()) throw EmptyInput("frame must contain at least one label");
  if (theta_->size() > kMaxLabels)
    throw DomainError("frame exceeds " + std::to_string(kMaxLabels) + " labels");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : *theta_) {
    if (l.empty()) throw DomainError("frame labels must not be empty");
    if (l == kXLabel) throw DomainError("label X is reserved for the incompleteness symbol");
    if (!seen.insert(l).second) throw DomainError("duplicate frame label: " + l);
  }
}

std::size_t DFrame::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < theta_->size(); ++i)
    if ((*theta_)[i] == label) return i;
  throw UnknownLabel("label not in frame: " + std::string(label));
}

DFocalSet::DFocalSet(DFrame frame, std::uint32_t bits) : frame_(std::move(frame)), bits_(bits) {
  if (bits_ & ~frame_.full_mask()) throw DomainError("focal set bits outside the frame");
  if (bits_ == 0) throw EmptyFocal("focal set must not be empty");
}

DFocalSet DFocalSet::of(DFrame frame, std::initializer_list<std::string_view> labels) {
  std::uint32_t bits = 0;
  for (const auto l : labels)
    bits |= (l == DFrame::kXLabel) ? frame.x_bit() : (1u << frame.index_of(l));
  return {std::move(frame), bits};
}

DFocalSet DFocalSet::of(DFrame frame, const std::vector<std::string>& labels) {
  std::uint32_t bits = 0;
  for (const auto& l : labels)
    bits |= (l == DFrame::kXLabel) ? frame.x_bit() : (1u << frame.index_of(l));
  return {std::move(frame), bits};
}

DFocalSet DFocalSet::full(DFrame frame) {
  const std::uint32_t mask = frame.full_mask();
  return {std::move(frame), mask};
}

std::size_t DFocalSet::cardinality_over_theta() const {
  return static_cast<std::size_t>(std::popcount(bits_ & frame_.theta_mask()));
}

bool DFocalSet::intersects(const DFocalSet& other) const {
  return frame_ == other.frame_ && (bits_ & other.bits_) != 0;
}

bool DFocalSet::contains(const DFocalSet& other) const {
  return frame_ == other.frame_ && (other.bits_ & ~bits_) == 0;
}

std::string DFocalSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (bits_ & (1u << i)) {
      if (!first) s += ", ";
      s += frame_.label(i);
      first = false;
    }
  }
  if (contains_x()) {
    if (!first) s += ", ";
    s += DFrame::kXLabel;
  }
  return s + "}";
}

DNumber::DNumber(DFrame frame,
                 const std::vector<std::pair<std::vector<std::string>, double>>& focals)
    : DNumber(frame, [&] {
        std::map<std::uint32_t, double> masses;
        for (const auto& [labels, mass] : focals)
          masses[DFocalSet::of(frame, labels).bits()] += mass;
        return masses;
      }()) {}

DNumber::DNumber(DFrame frame, std::map<std::uint32_t, double> masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  double total = 0.0;
  double theta_total = 0.0;
  for (const auto& [bits, mass] : masses_) {
    if (bits == 0) throw EmptyFocal("mass on the empty set is not allowed");
    if (bits & ~frame_.full_mask()) throw DomainError("focal set outside the frame");
    if (mass < 0.0) throw NegativeMass("focal masses must be positive");
    if (mass == 0.0) throw DomainError("focal masses must be positive");
    total += mass;
    if ((bits & frame_.x_bit()) == 0) theta_total += mass;
  }
  if (theta_total > 1.0 + kMassSumTolerance)
    throw MassOverflow("mass over theta exceeds 1: " + std::to_string(theta_total));
  if (std::abs(total - 1.0) > kMassSumTolerance)
    throw DomainError("augmented D number must sum to 1, got " + std::to_string(total) +
                      "; use augment_with_x for partial assignments");
}

double DNumber::mass(const DFocalSet& a) const {
  check_same_frame(frame_, a.frame(), "mass");
  return mass_bits(a.bits());
}

double DNumber::mass_bits(std::uint32_t bits) const {
  const auto it = masses_.find(bits);
  return it == masses_.end() ? 0.0 : it->second;
}

double DNumber::q() const {
  double theta_total = 0.0;
  for (const auto& [bits, mass] : masses_)
    if ((bits & frame_.x_bit()) == 0) theta_total += mass;
  return theta_total;
}

bool DNumber::information_complete(double tol) const { return std::abs(q() - 1.0) <= tol; }

DNumber augment_with_x(const DFrame& frame,
                       const std::vector<std::pair<std::vector<std::string>, double>>& partial) {
  std::map<std::uint32_t, double> masses;
  double total = 0.0;
  for (const auto& [labels, mass] : partial) {
    const std::uint32_t bits = DFocalSet::of(frame, labels).bits();
    if (bits & frame.x_bit())
      throw DomainError("augment_with_x expects an assignment over theta only");
    if (mass < 0.0) throw NegativeMass("focal masses must be non-negative");
    if (mass == 0.0) continue;
    masses[bits] += mass;
    total += mass;
  }
  if (total > 1.0 + kMassSumTolerance)
    throw MassOverflow("mass over theta exceeds 1: " + std::to_string(total));
  const double deficit = 1.0 - total;
  if (deficit > kMassSumTolerance) masses[frame.x_bit()] = deficit;
  if (masses.empty()) masses[frame.x_bit()] = 1.0;
  return {frame, std::move(masses)};
}

NonExclusivityMatrix::NonExclusivityMatrix(DFrame frame, std::vector<std::vector<double>> base)
    : frame_(std::move(frame)), base_(std::move(base)) {
  const std::size_t n = frame_.size() + 1;
  if (base_.size() != n)
    throw DomainError("non-exclusivity matrix must have one row per label plus X");
  for (std::size_t i = 0; i < n; ++i) {
    if (base_[i].size() != n) throw DomainError("non-exclusivity matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(base_[i][j] >= 0.0 && base_[i][j] <= 1.0))
        throw DomainError("non-exclusive degrees must lie in [0, 1]");
      if (base_[i][j] != base_[j][i]) throw DomainError("non-exclusivity matrix must be symmetric");
    }
    if (base_[i][i] != 1.0) throw DomainError("non-exclusivity matrix diagonal must be 1");
  }
}

NonExclusivityMatrix NonExclusivityMatrix::exclusive(DFrame frame) {
  const std::size_t n = frame.size() + 1;
  std::vector<std::vector<double>> base(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) base[i][i] = 1.0;
  return {std::move(frame), std::move(base)};
}

std::size_t NonExclusivityMatrix::resolve(std::string_view label) const {
  return label == DFrame::kXLabel ? frame_.size() : frame_.index_of(label);
}

double NonExclusivityMatrix::base(std::string_view a, std::string_view b) const {
  return base_[resolve(a)][resolve(b)];
}

double extend_nonexcl(const NonExclusivityMatrix& m, const DFocalSet& b, const DFocalSet& c) {
  check_same_frame(m.frame(), b.frame(), "extend_nonexcl");
  check_same_frame(m.frame(), c.frame(), "extend_nonexcl");
  if (b.bits() & c.bits()) return 1.0;
  const std::size_t n = m.frame().size();
  double best = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (!(b.bits() & (1u << i))) continue;
    for (std::size_t j = 0; j <= n; ++j) {
      if (!(c.bits() & (1u << j))) continue;
      best = std::max(best, m.base(i, j));
    }
  }
  return best;
}

double d_bel(const DNumber& d, const DFocalSet& a) {
  check_same_frame(d.frame(), a.frame(), "d_bel");
  double total = 0.0;
  for (const auto& [bits, mass] : d.masses())
    if ((bits & ~a.bits()) == 0) total += mass;
  return total;
}

double d_pl(const DNumber& d, const NonExclusivityMatrix& m, const DFocalSet& a) {
  check_same_frame(d.frame(), a.frame(), "d_pl");
  check_same_frame(d.frame(), m.frame(), "d_pl");
  double total = 0.0;
  for (const auto& [bits, mass] : d.masses())
    total += extend_nonexcl(m, DFocalSet(d.frame(), bits), a) * mass;
  return total;
}

namespace {

/// Routed product masses and the exclusive conflict of one combination.
/// Iterates unordered focal pairs and adds both cross terms at once, so the
/// result is bitwise identical under operand swap.
std::pair<std::map<std::uint32_t, double>, double> route_products(const DNumber& d1,
                                                                  const DNumber& d2,
                                                                  const NonExclusivityMatrix& m) {
  const DFrame& frame = d1.frame();
  std::vector<std::uint32_t> keys;
  keys.reserve(d1.focal_count() + d2.focal_count());
  for (const auto& [bits, mass] : d1.masses()) keys.push_back(bits);
  for (const auto& [bits, mass] : d2.masses()) keys.push_back(bits);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::map<std::uint32_t, double> acc;
  double k = 0.0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i; j < keys.size(); ++j) {
      const std::uint32_t b = keys[i], c = keys[j];
      const double p = i == j ? d1.mass_bits(b) * d2.mass_bits(b)
                              : d1.mass_bits(b) * d2.mass_bits(c) +
                                    d1.mass_bits(c) * d2.mass_bits(b);
      if (p == 0.0) continue;
      const std::uint32_t inter = b & c;
      if (inter != 0) {
        acc[inter] += p;
      } else {
        const double u = extend_nonexcl(m, DFocalSet(frame, b), DFocalSet(frame, c));
        acc[b | c] += u * p;
        k += (1.0 - u) * p;
      }
    }
  }
  return {std::move(acc), k};
}

}  // namespace

double exclusive_conflict(const DNumber& d1, const DNumber& d2, const NonExclusivityMatrix& m) {
  check_same_frame(d1.frame(), d2.frame(), "exclusive_conflict");
  check_same_frame(d1.frame(), m.frame(), "exclusive_conflict");
  return route_products(d1, d2, m).second;
}

DNumber ecr_combine(const DNumber& d1, const DNumber& d2, const NonExclusivityMatrix& m) {
  check_same_frame(d1.frame(), d2.frame(), "ecr_combine");
  check_same_frame(d1.frame(), m.frame(), "ecr_combine");

  // Every mass product routes whole to B∩C when the sets meet; otherwise it
  // splits between B∪C (weighted by the extended non-exclusive degree) and
  // the exclusive conflict.
  auto [acc, k] = route_products(d1, d2, m);
  if (k >= kConflictCeiling)
    throw TotalExclusiveConflict("ecr_combine: exclusive conflict K_D = " + std::to_string(k));
  return {d1.frame(), normalize_pruned(std::move(acc), 1.0 / (1.0 - k))};
}

std::vector<EcrProduct> ecr_product_table(const DNumber& d1, const DNumber& d2,
                                          const NonExclusivityMatrix& m) {
  check_same_frame(d1.frame(), d2.frame(), "ecr_product_table");
  check_same_frame(d1.frame(), m.frame(), "ecr_product_table");
  const DFrame& frame = d1.frame();
  std::vector<EcrProduct> table;
  table.reserve(d1.focal_count() * d2.focal_count());
  for (const auto& [b, mb] : d1.masses()) {
    for (const auto& [c, mc] : d2.masses()) {
      const double p = mb * mc;
      const std::uint32_t inter = b & c;
      if (inter != 0) {
        table.push_back({b, c, inter, p, 0.0});
      } else {
        const double u = extend_nonexcl(m, DFocalSet(frame, b), DFocalSet(frame, c));
        table.push_back({b, c, b | c, u * p, (1.0 - u) * p});
      }
    }
  }
  return table;
}

DNumber wac_combine(std::span<const DNumber> ds, std::span<const double> ws,
                    const NonExclusivityMatrix& m) {
  if (ds.empty()) throw EmptyInput("wac_combine: no D numbers given");
  if (ds.size() != ws.size())
    throw LengthMismatch("wac_combine: D numbers and weights differ in length");
  double wsum = 0.0;
  for (const double w : ws) {
    if (w < 0.0) throw NegativeMass("wac_combine: negative weight");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > kMassSumTolerance)
    throw WeightSumInvalid("wac_combine: weights must sum to 1, got " + std::to_string(wsum));
  for (const auto& d : ds) check_same_frame(ds.front().frame(), d.frame(), "wac_combine");
  check_same_frame(ds.front().frame(), m.frame(), "wac_combine");

  std::map<std::uint32_t, double> avg;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (const auto& [bits, mass] : ds[i].masses())
      if (ws[i] > 0.0) avg[bits] += ws[i] * mass;
  DNumber averaged(ds.front().frame(), std::move(avg));

  DNumber result = averaged;
  for (std::size_t i = 1; i < ds.size(); ++i) result = ecr_combine(result, averaged, m);
  return result;
}

std::vector<std::pair<std::string, double>> d_ppt(const DNumber& d) {
  const double q = d.q();
  if (q <= kPruneThreshold)
    throw NoInformation("d_ppt: the D number carries no mass over theta");
  std::vector<double> prob(d.frame().size(), 0.0);
  for (const auto& [bits, mass] : d.masses()) {
    if (bits & d.frame().x_bit()) continue;  // no betting mass on not-knowing
    const double share = mass / static_cast<double>(std::popcount(bits));
    for (std::size_t i = 0; i < prob.size(); ++i)
      if (bits & (1u << i)) prob[i] += share;
  }
  std::vector<std::pair<std::string, double>> out;
  out.reserve(prob.size());
  for (std::size_t i = 0; i < prob.size(); ++i)
    out.emplace_back(d.frame().label(i), prob[i] / q);
  return out;
}

DNumber from_linguistic_votes(const std::vector<std::string>& votes, const DFrame& frame) {
  const std::vector<double> ws(votes.size(), 1.0);
  return from_linguistic_votes(votes, ws, frame);
}

DNumber from_linguistic_votes(const std::vector<std::string>& votes, std::span<const double> ws,
                              const DFrame& frame) {
  if (votes.empty()) throw EmptyVotes("no votes given");
  if (votes.size() != ws.size())
    throw LengthMismatch("votes and decision-maker weights differ in length");
  double wsum = 0.0;
  std::map<std::uint32_t, double> masses;
  for (std::size_t i = 0; i < votes.size(); ++i) {
    if (ws[i] < 0.0) throw NegativeMass("negative decision-maker weight");
    const std::uint32_t bit = 1u << frame.index_of(votes[i]);
    masses[bit] += ws[i];
    wsum += ws[i];
  }
  if (wsum <= 0.0) throw DegenerateWeight("decision-maker weights are all zero");
  std::map<std::uint32_t, double> out;
  for (const auto& [bits, w] : masses)
    if (w > 0.0) out[bits] = w / wsum;
  return {frame, std::move(out)};
}

NonExclusivityMatrix build_nonexcl_from_scale(const LinguisticScale& scale) {
  DFrame frame(scale.labels());
  const std::size_t n = frame.size();
  std::vector<std::vector<double>> base(n + 1, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i <= n; ++i) base[i][i] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u =
          non_exclusive_degree(scale.entries()[i].second, scale.entries()[j].second);
      base[i][j] = base[j][i] = u;
    }
  }
  // The X row and column stay zero: not-knowing shares no area with any grade.
  return {std::move(frame), std::move(base)};
}

DNumber as_dnumber(const BasicProbabilityAssignment& m) {
  DFrame frame(m.frame().labels());
  std::map<std::uint32_t, double> masses(m.masses().begin(), m.masses().end());
  return {std::move(frame), std::move(masses)};
}

BasicProbabilityAssignment as_bpa(const DNumber& d) {
  if (!d.information_complete())
    throw NoInformation("as_bpa: D number is information-incomplete (Q < 1)");
  Frame frame(d.frame().theta());
  std::map<std::uint32_t, double> masses(d.masses().begin(), d.masses().end());
  return {std::move(frame), std::move(masses)};
}

}  // namespace dnt
