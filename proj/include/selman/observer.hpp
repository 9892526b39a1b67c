#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selman/error.hpp"
#include "selman/tolerance.hpp"

namespace selman {

/// Finite ordered set of distinct point labels.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);

  size_t size() const { return labels_.size(); }
  const std::string& label(size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<size_t> find(const std::string& label) const;
  size_t index_of(const std::string& label) const;  // raises UnresolvedReference

  bool operator==(const Carrier& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> labels);

/// Total map carrier -> [0,1]^m. Values are stored point-major and are
/// immutable after construction.
class Observer {
 public:
  Observer(CarrierPtr carrier, size_t dim, std::vector<double> values);

  static Observer zero(CarrierPtr carrier, size_t dim);

  const CarrierPtr& carrier() const { return carrier_; }
  size_t dim() const { return dim_; }
  size_t points() const { return carrier_->size(); }
  double value(size_t point, size_t coord) const {
    return values_[point * dim_ + coord];
  }
  std::vector<double> value_at(size_t point) const;
  const std::vector<double>& raw() const { return values_; }

  /// Exact lexicographic order on the value table; used to keep closure
  /// sets canonical. Tolerance plays no role here.
  bool before(const Observer& other) const { return values_ < other.values_; }

 private:
  CarrierPtr carrier_;
  size_t dim_;
  std::vector<double> values_;
};

/// Observer whose coordinates do not depend on the point. The paper only
/// demands one constant coordinate; bounds r < s need all of them, so the
/// stronger form is implemented.
struct ConstantObserver {
  std::vector<double> coords;

  ConstantObserver() = default;
  explicit ConstantObserver(std::vector<double> c);
  ConstantObserver(size_t dim, double v) : ConstantObserver(std::vector<double>(dim, v)) {}

  size_t dim() const { return coords.size(); }
  Observer materialize(CarrierPtr carrier) const;
  /// Strict order in every coordinate (the r < s premise of level preimages).
  bool strictly_below(const ConstantObserver& other) const;
};

// Lattice operations (pointwise, coordinatewise). All raise CarrierMismatch /
// DimensionMismatch on incompatible operands.
Observer sup_union(const Observer& a, const Observer& b);
Observer inf_intersection(const Observer& a, const Observer& b);
bool leq(const Observer& a, const Observer& b, const TolerancePolicy& tol = {});
bool strictly_less(const Observer& a, const Observer& b, const TolerancePolicy& tol = {});
bool observers_equal(const Observer& a, const Observer& b, const TolerancePolicy& tol = {});

/// Deduplicated (within eq_tol) value vectors attained on the carrier,
/// sorted lexicographically.
std::vector<std::vector<double>> image(const Observer& a, const TolerancePolicy& tol = {});

/// Image restricted to a point subset (empty subset yields the empty set).
std::vector<std::vector<double>> image_on(const Observer& a,
                                          const std::vector<size_t>& points,
                                          const TolerancePolicy& tol = {});

bool vectors_equal(const std::vector<double>& a, const std::vector<double>& b,
                   double tol);
bool value_sets_equal(const std::vector<std::vector<double>>& a,
                      const std::vector<std::vector<double>>& b, double tol);

std::string format_value_set(const std::vector<std::vector<double>>& s);

}  // namespace selman
