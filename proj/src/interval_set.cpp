#include "finsupp/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finsupp {

IntervalSet::IntervalSet(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (const Interval& iv : intervals_) {
    if (!std::isfinite(iv.a) || !std::isfinite(iv.b) || !(iv.a < iv.b))
      throw std::invalid_argument("IntervalSet: intervals must be finite with a < b");
  }
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });
  std::vector<Interval> merged;
  for (const Interval& iv : intervals_) {
    if (!merged.empty() && iv.a <= merged.back().b)
      merged.back().b = std::max(merged.back().b, iv.b);
    else
      merged.push_back(iv);
  }
  intervals_ = std::move(merged);
}

IntervalSet IntervalSet::single(double a, double b) {
  return IntervalSet(std::vector<Interval>{{a, b}});
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const Interval& iv : intervals_) m += iv.length();
  return m;
}

bool IntervalSet::contains(double x) const {
  // First interval with a > x; the candidate is its predecessor.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.a; });
  if (it == intervals_.begin()) return false;
  --it;
  return x < it->b;
}

double IntervalSet::hull_end() const {
  return intervals_.empty() ? 0.0 : intervals_.back().b;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& x = intervals_[i];
    const Interval& y = other.intervals_[j];
    double lo = std::max(x.a, y.a);
    double hi = std::min(x.b, y.b);
    if (lo < hi) out.push_back({lo, hi});
    if (x.b < y.b)
      ++i;
    else
      ++j;
  }
  IntervalSet result;
  result.intervals_ = std::move(out);  // already disjoint and sorted
  return result;
}

bool IntervalSet::contains_set(const IntervalSet& other) const {
  for (const Interval& iv : other.intervals_) {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), iv.a,
                               [](double v, const Interval& w) { return v < w.a; });
    if (it == intervals_.begin()) return false;
    --it;
    if (!(it->a <= iv.a && iv.b <= it->b)) return false;
  }
  return true;
}

bool IntervalSet::operator==(const IntervalSet& other) const {
  if (intervals_.size() != other.intervals_.size()) return false;
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    if (intervals_[i].a != other.intervals_[i].a || intervals_[i].b != other.intervals_[i].b)
      return false;
  return true;
}

}  // namespace finsupp
