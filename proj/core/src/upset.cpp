#include <algorithm>
#include <numeric>

#include "ocrank/counterset.hpp"

namespace ocrank {

UPSet::UPSet() = default;

UPSet UPSet::of(std::span<const std::uint64_t> members) {
  std::uint64_t top = 0;
  for (auto m : members) top = std::max(top, m + 1);
  std::vector<bool> below(top, false);
  for (auto m : members) below[m] = true;
  return from_pattern(top, std::move(below), 1, {false});
}

UPSet UPSet::of(std::initializer_list<std::uint64_t> members) {
  return of(std::span<const std::uint64_t>(members.begin(), members.size()));
}

UPSet UPSet::progression(std::uint64_t first, std::uint64_t period) {
  if (period == 0) return of({first});
  std::vector<bool> residues(period, false);
  residues[first % period] = true;
  return from_pattern(first, std::vector<bool>(first, false), period, std::move(residues));
}

UPSet UPSet::naturals() { return from_pattern(0, {}, 1, {true}); }

UPSet UPSet::from_pattern(std::uint64_t threshold, std::vector<bool> below, std::uint64_t period,
                          std::vector<bool> residues) {
  if (period == 0 || residues.size() != period || below.size() != threshold) {
    throw PreconditionError("UPSet pattern sizes do not match threshold and period");
  }
  UPSet s;
  s.threshold_ = threshold;
  s.below_ = std::move(below);
  s.period_ = period;
  s.residues_ = std::move(residues);
  s.normalize();
  return s;
}

void UPSet::normalize() {
  for (std::uint64_t d = 1; d <= period_; ++d) {
    if (period_ % d != 0) continue;
    bool ok = true;
    for (std::uint64_t r = d; r < period_ && ok; ++r) ok = residues_[r] == residues_[r % d];
    if (ok) {
      residues_.resize(d);
      period_ = d;
      break;
    }
  }
  while (threshold_ > 0 && below_[threshold_ - 1] == residues_[(threshold_ - 1) % period_]) {
    --threshold_;
    below_.pop_back();
  }
}

bool UPSet::contains(std::uint64_t n) const {
  return n < threshold_ ? below_[n] : residues_[n % period_];
}

bool UPSet::finite() const { return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; }); }

bool UPSet::empty() const {
  return finite() && std::none_of(below_.begin(), below_.end(), [](bool b) { return b; });
}

std::vector<std::uint64_t> UPSet::finite_part() const {
  std::vector<std::uint64_t> r;
  for (std::uint64_t n = 0; n < threshold_; ++n)
    if (below_[n]) r.push_back(n);
  return r;
}

std::vector<std::uint64_t> UPSet::tail_representatives() const {
  std::vector<std::uint64_t> r;
  for (std::uint64_t n = threshold_; n < threshold_ + period_; ++n)
    if (residues_[n % period_]) r.push_back(n);
  return r;
}

std::vector<std::uint64_t> UPSet::remainders() const {
  auto r = finite_part();
  auto t = tail_representatives();
  r.insert(r.end(), t.begin(), t.end());
  return r;
}

std::vector<std::uint64_t> UPSet::members_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> r;
  for (std::uint64_t n = 0; n < bound; ++n)
    if (contains(n)) r.push_back(n);
  return r;
}

namespace {

template <typename Op>
UPSet combine(const UPSet& a, const UPSet& b, Op op) {
  std::uint64_t threshold = std::max(a.threshold(), b.threshold());
  std::uint64_t period = std::lcm(a.period(), b.period());
  std::vector<bool> below(threshold), residues(period);
  for (std::uint64_t n = 0; n < threshold; ++n) below[n] = op(a.contains(n), b.contains(n));
  for (std::uint64_t n = threshold; n < threshold + period; ++n)
    residues[n % period] = op(a.contains(n), b.contains(n));
  return UPSet::from_pattern(threshold, std::move(below), period, std::move(residues));
}

std::string progression_text(std::uint64_t first, std::uint64_t period) {
  std::string step = period == 1 ? "t" : std::to_string(period) + "t";
  return first == 0 ? step : std::to_string(first) + "+" + step;
}

}  // namespace

UPSet UPSet::intersect(const UPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && y; });
}

UPSet UPSet::unite(const UPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x || y; });
}

std::string UPSet::to_string() const {
  if (empty()) return "∅";
  // Each tail class starts at its least member m with m, m+P, ... all present.
  auto starts = tail_representatives();
  std::vector<bool> covered(threshold_, false);
  for (auto& r : starts) {
    while (r >= period_ && contains(r - period_)) {
      r -= period_;
      covered[r] = true;
    }
  }
  std::sort(starts.begin(), starts.end());
  std::vector<std::string> parts;
  std::string fin;
  for (auto n : finite_part()) {
    if (!covered[n]) fin += (fin.empty() ? "" : ",") + std::to_string(n);
  }
  if (!fin.empty()) parts.push_back("{" + fin + "}");
  for (auto r : starts) parts.push_back("{" + progression_text(r, period_) + "}");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ∪ " : "") + parts[i];
  return out;
}

}  // namespace ocrank
