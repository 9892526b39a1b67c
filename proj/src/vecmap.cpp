#include "selman/vecmap.hpp"

#include <algorithm>
#include <cmath>

#include "selman/format.hpp"

namespace selman {

Box::Box(std::vector<double> l, std::vector<double> h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo.size() != hi.size())
    raise(ErrorKind::InvalidArgument, "box bound arity mismatch");
  for (size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i]))
      raise(ErrorKind::InvalidArgument,
            "box axis " + std::to_string(i + 1) + " is empty");
}

Box Box::cube(size_t dim, double l, double h) {
  return Box(std::vector<double>(dim, l), std::vector<double>(dim, h));
}

bool Box::contains(const std::vector<double>& x) const {
  if (x.size() != lo.size()) return false;
  for (size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < x[i] && x[i] < hi[i])) return false;
  return true;
}

Box box_product(const Box& a, const Box& b) {
  std::vector<double> lo = a.lo, hi = a.hi;
  lo.insert(lo.end(), b.lo.begin(), b.lo.end());
  hi.insert(hi.end(), b.hi.begin(), b.hi.end());
  return Box(std::move(lo), std::move(hi));
}

std::vector<std::vector<double>> grid_points(const Box& box, int per_axis) {
  size_t k = box.dim();
  size_t total = 1;
  for (size_t j = 0; j < k; ++j) total *= static_cast<size_t>(per_axis);
  std::vector<std::vector<double>> pts;
  pts.reserve(total);
  std::vector<int> idx(k, 0);
  for (size_t c = 0; c < total; ++c) {
    std::vector<double> p(k);
    for (size_t j = 0; j < k; ++j)
      p[j] = box.lo[j] + box.width(j) * (idx[j] + 1) / (per_axis + 1);
    pts.push_back(std::move(p));
    for (size_t j = k; j-- > 0;) {
      if (++idx[j] < per_axis) break;
      idx[j] = 0;
    }
  }
  return pts;
}

VecMap::VecMap(size_t in_dim, size_t out_dim, std::vector<Expr> components, Box box)
    : in_dim_(in_dim), out_dim_(out_dim), comps_(std::move(components)),
      box_(std::move(box)) {
  if (comps_.size() != out_dim_)
    raise(ErrorKind::InvalidArgument, "component count differs from output dimension");
  if (box_.dim() != in_dim_)
    raise(ErrorKind::InvalidArgument, "domain box dimension differs from input dimension");
  for (const auto& c : comps_)
    if (c.max_var() >= static_cast<int>(in_dim_))
      raise(ErrorKind::InvalidArgument,
            "component uses variable x" + std::to_string(c.max_var() + 1) +
                " beyond input dimension " + std::to_string(in_dim_));
}

VecMap VecMap::identity(size_t dim, Box box) {
  std::vector<Expr> comps;
  for (size_t i = 0; i < dim; ++i) comps.push_back(Expr::var(static_cast<int>(i)));
  return VecMap(dim, dim, std::move(comps), std::move(box));
}

VecMap VecMap::constant(std::vector<double> value, Box box) {
  std::vector<Expr> comps;
  for (double v : value) comps.push_back(Expr::constant(v));
  size_t n = value.size();
  return VecMap(box.dim(), n, std::move(comps), std::move(box));
}

bool VecMap::contains_abs() const {
  for (const auto& c : comps_)
    if (c.contains_abs()) return true;
  return false;
}

std::vector<double> VecMap::eval(const std::vector<double>& x) const {
  if (!box_.contains(x))
    raise(ErrorKind::DomainViolation,
          "point (" + format_point(x, ", ") + ") outside the domain box");
  std::vector<double> y(out_dim_);
  for (size_t i = 0; i < out_dim_; ++i) y[i] = comps_[i].eval(x);
  return y;
}

Matrix VecMap::jacobian_symbolic(const std::vector<double>& x) const {
  if (!box_.contains(x))
    raise(ErrorKind::DomainViolation,
          "point (" + format_point(x, ", ") + ") outside the domain box");
  Matrix j(out_dim_, in_dim_);
  for (size_t i = 0; i < out_dim_; ++i)
    for (size_t k = 0; k < in_dim_; ++k)
      j.at(i, k) = comps_[i].derivative(static_cast<int>(k)).eval(x);
  return j;
}

std::string VecMap::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string();
  }
  out += "]";
  return out;
}

Matrix jacobian_fd(const VecMap& m, const std::vector<double>& x,
                   int order_of_accuracy) {
  if (order_of_accuracy != 2 && order_of_accuracy != 4)
    raise(ErrorKind::InvalidArgument, "order_of_accuracy must be 2 or 4");
  if (!m.box().contains(x))
    raise(ErrorKind::DomainViolation, "differentiation point outside the domain box");
  size_t n = m.out_dim(), k = m.in_dim();

  auto central = [&](size_t j, double h) {
    std::vector<double> xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    if (!m.box().contains(xp) || !m.box().contains(xm))
      raise(ErrorKind::DomainViolation, "difference stencil leaves the domain box");
    std::vector<double> fp = m.eval(xp), fm = m.eval(xm);
    std::vector<double> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = (fp[i] - fm[i]) / (2.0 * h);
    return d;
  };

  Matrix jac(n, k);
  for (size_t j = 0; j < k; ++j) {
    double h = 1e-3 * m.box().width(j);
    std::vector<double> col = central(j, h);
    if (order_of_accuracy == 4) {
      std::vector<double> fine = central(j, h / 2.0);
      for (size_t i = 0; i < n; ++i) col[i] = (4.0 * fine[i] - col[i]) / 3.0;
    }
    for (size_t i = 0; i < n; ++i) jac.at(i, j) = col[i];
  }
  return jac;
}

namespace {

// Finite-difference weights for the d-th derivative on nodes offsets[i]*h
// (offsets in step units): solve sum_i w_i o_i^p = d! * [p == d], p = 0..m.
std::vector<double> fd_weights(int d, const std::vector<double>& offsets) {
  size_t m = offsets.size();
  Matrix v(m, m);
  std::vector<double> rhs(m, 0.0);
  double fact = 1.0;
  for (int i = 2; i <= d; ++i) fact *= i;
  for (size_t p = 0; p < m; ++p) {
    for (size_t i = 0; i < m; ++i) v.at(p, i) = std::pow(offsets[i], static_cast<double>(p));
    if (p == static_cast<size_t>(d)) rhs[p] = fact;
  }
  return v.solve(std::move(rhs));
}

struct SideEstimates {
  std::vector<double> d;     // estimates at steps h, h/2, h/4
  double noise_floor = 0.0;  // rounding amplification at the finest step
};

// One-sided d-th derivative estimates of g along direction sign at steps
// h0, h0/2, h0/4, using a (d+2)-point second-order stencil.
template <typename F>
SideEstimates one_sided(F&& g, int d, double h0, int sign) {
  std::vector<double> offsets(static_cast<size_t>(d) + 2);
  for (size_t i = 0; i < offsets.size(); ++i)
    offsets[i] = sign * static_cast<double>(i);
  std::vector<double> w = fd_weights(d, offsets);
  double wsum = 0.0;
  for (double c : w) wsum += std::fabs(c);

  SideEstimates out;
  double fscale = 1.0;
  for (int lvl = 0; lvl < 3; ++lvl) {
    double h = h0 / std::pow(2.0, lvl);
    double acc = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
      double fv = g(offsets[i] * h);
      fscale = std::max(fscale, std::fabs(fv));
      acc += w[i] * fv;
    }
    out.d.push_back(acc / std::pow(h, d));
  }
  double h_min = h0 / 4.0;
  out.noise_floor = wsum * fscale * 5e-14 / std::pow(h_min, d);
  return out;
}

bool side_converged(const SideEstimates& s, double floor_tol) {
  double e1 = std::fabs(s.d[0] - s.d[1]);
  double e2 = std::fabs(s.d[1] - s.d[2]);
  double floor_all = std::max(floor_tol, 8.0 * s.noise_floor);
  if (e2 <= floor_all) return true;
  if (e1 <= floor_all) return false;  // error grew out of the floor: no trend
  return std::log2(e1 / e2) >= 0.75;
}

}  // namespace

ProbeReport smoothness_probe(const VecMap& m, const std::vector<double>& x,
                             int r, const TolerancePolicy& tol) {
  if (r < 1) raise(ErrorKind::InvalidArgument, "smoothness order must be >= 1");
  if (r > 6) raise(ErrorKind::InvalidArgument, "smoothness probe capped at order 6");
  ProbeReport rep;
  if (!m.box().contains(x)) {
    rep.detail = "probe point outside the domain box";
    return rep;
  }
  if (!m.contains_abs()) {
    rep.passes = true;
    rep.estimated_order = r;
    rep.detail = "abs-free: symbolically differentiable to every order";
    return rep;
  }

  for (int d = 1; d <= r; ++d) {
    for (size_t j = 0; j < m.in_dim(); ++j) {
      // Base step 1e-3 of the axis width, shrunk so the (d+2)-step stencil
      // stays strictly inside the open box.
      double h0 = 1e-3 * m.box().width(j);
      double margin = std::min(x[j] - m.box().lo[j], m.box().hi[j] - x[j]);
      if ((d + 2) * h0 > margin) h0 = margin / (d + 2);

      for (size_t c = 0; c < m.out_dim(); ++c) {
        auto g = [&](double s) {
          std::vector<double> p = x;
          p[j] += s;
          return m.component(c).eval(p);
        };
        SideEstimates fwd, bwd;
        try {
          fwd = one_sided(g, d, h0, +1);
          bwd = one_sided(g, d, h0, -1);
        } catch (const Error& e) {
          rep.detail = "order " + std::to_string(d) + " axis " +
                       std::to_string(j + 1) + ": evaluation failed (" +
                       e.what() + ")";
          return rep;
        }
        double scale = std::max({1.0, std::fabs(fwd.d[2]), std::fabs(bwd.d[2])});
        double floor_tol = tol.deriv_tol * scale;
        bool ok_f = side_converged(fwd, floor_tol);
        bool ok_b = side_converged(bwd, floor_tol);
        double e2f = std::fabs(fwd.d[1] - fwd.d[2]);
        double e2b = std::fabs(bwd.d[1] - bwd.d[2]);
        double match_tol = std::max(
            {floor_tol, 16.0 * (fwd.noise_floor + bwd.noise_floor),
             32.0 * (e2f + e2b)});
        bool matched = std::fabs(fwd.d[2] - bwd.d[2]) <= match_tol;
        if (!(ok_f && ok_b && matched)) {
          rep.detail = "order " + std::to_string(d) + " axis " +
                       std::to_string(j + 1) + " component " +
                       std::to_string(c + 1) + ": " +
                       (!matched ? "one-sided estimates disagree ("
                        : "divided differences do not converge (") +
                       format_double(fwd.d[2]) + " vs " +
                       format_double(bwd.d[2]) + ")";
          return rep;
        }
      }
    }
    rep.estimated_order = d;
  }
  rep.passes = true;
  rep.detail = "verified by divided differences";
  return rep;
}

VecMap compose_maps(const VecMap& outer, const VecMap& inner) {
  if (outer.in_dim() != inner.out_dim())
    raise(ErrorKind::DimensionMismatch, "composition arity mismatch");
  std::vector<Expr> comps;
  comps.reserve(outer.out_dim());
  for (size_t i = 0; i < outer.out_dim(); ++i)
    comps.push_back(outer.component(i).substitute(inner.components()));
  return VecMap(inner.in_dim(), outer.out_dim(), std::move(comps), inner.box());
}

VecMap pair_map(const VecMap& a, const VecMap& b) {
  std::vector<Expr> shift;
  for (size_t i = 0; i < b.in_dim(); ++i)
    shift.push_back(Expr::var(static_cast<int>(a.in_dim() + i)));
  std::vector<Expr> comps = a.components();
  for (const auto& c : b.components()) comps.push_back(c.substitute(shift));
  return VecMap(a.in_dim() + b.in_dim(), a.out_dim() + b.out_dim(),
                std::move(comps), box_product(a.box(), b.box()));
}

std::optional<std::vector<double>> newton_preimage(const VecMap& h,
                                                   const std::vector<double>& target,
                                                   std::vector<double> y0,
                                                   double tol, int max_iter) {
  if (h.in_dim() != h.out_dim()) return std::nullopt;
  std::vector<double> y = std::move(y0);
  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> r;
    try {
      r = h.eval(y);
    } catch (const Error&) {
      return std::nullopt;
    }
    double rn = 0.0;
    for (size_t i = 0; i < r.size(); ++i) {
      r[i] -= target[i];
      rn = std::max(rn, std::fabs(r[i]));
    }
    if (rn <= tol) return y;
    Matrix j;
    std::vector<double> step;
    try {
      j = h.jacobian_symbolic(y);
      step = j.solve(r);
    } catch (const Error&) {
      return std::nullopt;
    }
    bool inside = true;
    for (size_t i = 0; i < y.size(); ++i) {
      y[i] -= step[i];
      if (!(h.box().lo[i] < y[i] && y[i] < h.box().hi[i])) inside = false;
    }
    if (!inside) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace selman
