#pragma once

#include <cstddef>
#include <vector>

namespace finsupp {

// Half-open interval [a, b) with a < b.
struct Interval {
  double a = 0.0;
  double b = 0.0;
  double length() const { return b - a; }
};

// Finite union of disjoint half-open intervals, kept sorted by left
// endpoint.  Adjacent intervals ([0,1) followed by [1,2)) are merged on
// construction, so the representation is canonical: equal sets compare
// equal member-wise.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Normalizes: sorts, merges overlapping and touching intervals.
  // Throws std::invalid_argument if any interval is empty, inverted or
  // non-finite.
  explicit IntervalSet(std::vector<Interval> intervals);

  static IntervalSet single(double a, double b);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  double measure() const;
  bool contains(double x) const;

  // Largest right endpoint, 0 for the empty set.
  double hull_end() const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;

  // True if every interval of `other` is covered by this set.  Exact
  // endpoint arithmetic; intended for data with representable endpoints.
  bool contains_set(const IntervalSet& other) const;

  bool operator==(const IntervalSet& other) const;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace finsupp
