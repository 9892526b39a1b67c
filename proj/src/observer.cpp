#include "selman/observer.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "selman/format.hpp"

namespace selman {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) raise(ErrorKind::InvalidArgument, "carrier must be non-empty");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      raise(ErrorKind::InvalidArgument, "duplicate carrier label '" + l + "'");
}

std::optional<size_t> Carrier::find(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

size_t Carrier::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) raise(ErrorKind::UnresolvedReference, "unknown carrier point '" + label + "'");
  return *i;
}

CarrierPtr make_carrier(std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(std::move(labels));
}

Observer::Observer(CarrierPtr carrier, size_t dim, std::vector<double> values)
    : carrier_(std::move(carrier)), dim_(dim), values_(std::move(values)) {
  if (!carrier_) raise(ErrorKind::InvalidArgument, "observer without carrier");
  if (dim_ < 1) raise(ErrorKind::InvalidArgument, "observer dimension must be >= 1");
  if (values_.size() != carrier_->size() * dim_)
    raise(ErrorKind::NonTotalTable,
          "observer table has " + std::to_string(values_.size()) +
              " entries, expected " + std::to_string(carrier_->size() * dim_));
  for (double v : values_)
    if (!(v >= 0.0 && v <= 1.0))
      raise(ErrorKind::InvalidArgument,
            "observer value " + format_double(v) + " outside [0,1]");
}

Observer Observer::zero(CarrierPtr carrier, size_t dim) {
  size_t n = carrier->size();
  return Observer(std::move(carrier), dim, std::vector<double>(n * dim, 0.0));
}

std::vector<double> Observer::value_at(size_t point) const {
  return std::vector<double>(values_.begin() + point * dim_,
                             values_.begin() + (point + 1) * dim_);
}

ConstantObserver::ConstantObserver(std::vector<double> c) : coords(std::move(c)) {
  if (coords.empty())
    raise(ErrorKind::InvalidArgument, "constant observer dimension must be >= 1");
  for (double v : coords)
    if (!(v >= 0.0 && v <= 1.0))
      raise(ErrorKind::InvalidArgument,
            "constant observer value " + format_double(v) + " outside [0,1]");
}

Observer ConstantObserver::materialize(CarrierPtr carrier) const {
  size_t n = carrier->size();
  std::vector<double> values;
  values.reserve(n * coords.size());
  for (size_t p = 0; p < n; ++p)
    values.insert(values.end(), coords.begin(), coords.end());
  return Observer(std::move(carrier), coords.size(), std::move(values));
}

bool ConstantObserver::strictly_below(const ConstantObserver& other) const {
  if (coords.size() != other.coords.size())
    raise(ErrorKind::DimensionMismatch, "constant observer dimensions differ");
  for (size_t j = 0; j < coords.size(); ++j)
    if (!(coords[j] < other.coords[j])) return false;
  return true;
}

namespace {

void check_compatible(const Observer& a, const Observer& b) {
  if (a.dim() != b.dim())
    raise(ErrorKind::DimensionMismatch,
          "observer dimensions " + std::to_string(a.dim()) + " and " +
              std::to_string(b.dim()) + " differ");
  if (a.carrier() != b.carrier() && !(*a.carrier() == *b.carrier()))
    raise(ErrorKind::CarrierMismatch, "observers live on different carriers");
}

}  // namespace

Observer sup_union(const Observer& a, const Observer& b) {
  check_compatible(a, b);
  std::vector<double> v(a.raw().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.raw()[i], b.raw()[i]);
  return Observer(a.carrier(), a.dim(), std::move(v));
}

Observer inf_intersection(const Observer& a, const Observer& b) {
  check_compatible(a, b);
  std::vector<double> v(a.raw().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::min(a.raw()[i], b.raw()[i]);
  return Observer(a.carrier(), a.dim(), std::move(v));
}

bool leq(const Observer& a, const Observer& b, const TolerancePolicy& tol) {
  check_compatible(a, b);
  for (size_t i = 0; i < a.raw().size(); ++i)
    if (a.raw()[i] > b.raw()[i] + tol.eq_tol) return false;
  return true;
}

bool strictly_less(const Observer& a, const Observer& b, const TolerancePolicy& tol) {
  if (!leq(a, b, tol)) return false;
  for (size_t i = 0; i < a.raw().size(); ++i)
    if (a.raw()[i] < b.raw()[i] - tol.eq_tol) return true;
  return false;
}

bool observers_equal(const Observer& a, const Observer& b, const TolerancePolicy& tol) {
  check_compatible(a, b);
  for (size_t i = 0; i < a.raw().size(); ++i)
    if (std::fabs(a.raw()[i] - b.raw()[i]) > tol.eq_tol) return false;
  return true;
}

bool vectors_equal(const std::vector<double>& a, const std::vector<double>& b,
                   double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

std::vector<std::vector<double>> image_on(const Observer& a,
                                          const std::vector<size_t>& points,
                                          const TolerancePolicy& tol) {
  std::vector<std::vector<double>> vals;
  vals.reserve(points.size());
  for (size_t p : points) vals.push_back(a.value_at(p));
  std::sort(vals.begin(), vals.end());
  std::vector<std::vector<double>> out;
  for (auto& v : vals) {
    bool dup = false;
    for (const auto& kept : out)
      if (vectors_equal(v, kept, tol.eq_tol)) { dup = true; break; }
    if (!dup) out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<double>> image(const Observer& a, const TolerancePolicy& tol) {
  std::vector<size_t> all(a.points());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return image_on(a, all, tol);
}

bool value_sets_equal(const std::vector<std::vector<double>>& a,
                      const std::vector<std::vector<double>>& b, double tol) {
  auto covered = [tol](const std::vector<std::vector<double>>& xs,
                       const std::vector<std::vector<double>>& ys) {
    for (const auto& x : xs) {
      bool found = false;
      for (const auto& y : ys)
        if (vectors_equal(x, y, tol)) { found = true; break; }
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

std::string format_value_set(const std::vector<std::vector<double>>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += "(" + format_point(s[i], ", ") + ")";
  }
  out += "}";
  return out;
}

}  // namespace selman
