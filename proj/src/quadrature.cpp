#include "qlmc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace qlmc {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (positive half, QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Maps a finite parameter interval onto the requested domain.
struct Transform {
  Domain::Kind kind;
  double a;  // half-line origin

  double t_lo, t_hi;

  double x(double t) const {
    switch (kind) {
      case Domain::Kind::FullLine:
        return t / (1.0 - t * t);
      case Domain::Kind::HalfLineFrom:
        return a + t / (1.0 - t);
      default:
        return t;
    }
  }
  double weight(double t) const {
    switch (kind) {
      case Domain::Kind::FullLine: {
        const double d = 1.0 - t * t;
        return (1.0 + t * t) / (d * d);
      }
      case Domain::Kind::HalfLineFrom: {
        const double d = 1.0 - t;
        return 1.0 / (d * d);
      }
      default:
        return 1.0;
    }
  }
  double t_of_x(double x_) const {
    switch (kind) {
      case Domain::Kind::FullLine:
        if (x_ == 0.0) return 0.0;
        return (std::sqrt(1.0 + 4.0 * x_ * x_) - 1.0) / (2.0 * x_);
      case Domain::Kind::HalfLineFrom: {
        const double u = x_ - a;
        return u <= 0.0 ? 0.0 : u / (1.0 + u);
      }
      default:
        return x_;
    }
  }
};

Transform make_transform(const Domain& d) {
  Transform tr{d.kind, d.a, 0.0, 0.0};
  switch (d.kind) {
    case Domain::Kind::FullLine:
      tr.t_lo = -1.0;
      tr.t_hi = 1.0;
      break;
    case Domain::Kind::HalfLineFrom:
      tr.t_lo = 0.0;
      tr.t_hi = 1.0;
      break;
    default:
      tr.t_lo = d.a;
      tr.t_hi = d.b;
      break;
  }
  return tr;
}

struct Segment {
  double lo, hi;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

class Evaluator {
 public:
  Evaluator(const std::function<double(double)>& f, const Transform& tr, long budget)
      : f_(f), tr_(tr), budget_(budget) {}

  double operator()(double t) {
    if (++count_ > budget_) {
      throw NoConvergence("integrate: evaluation budget exhausted");
    }
    const double x = tr_.x(t);
    const double fx = f_(x);
    if (std::isnan(fx) || std::isinf(fx)) {
      throw NonFiniteIntegrand("integrate: integrand non-finite at x = " +
                               std::to_string(x));
    }
    if (fx == 0.0) return 0.0;  // avoid 0 * inf at mapped endpoints
    const double g = fx * tr_.weight(t);
    if (std::isnan(g) || std::isinf(g)) {
      throw NonFiniteIntegrand("integrate: mapped integrand non-finite at x = " +
                               std::to_string(x));
    }
    return g;
  }

  long count() const { return count_; }

 private:
  const std::function<double(double)>& f_;
  const Transform& tr_;
  long budget_;
  long count_ = 0;
};

Segment gk15(Evaluator& eval, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = eval(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double fa = eval(c - h * kXgk[j]);
    const double fb = eval(c + h * kXgk[j]);
    kronrod += kWgk[j] * (fa + fb);
    resabs += kWgk[j] * (std::abs(fa) + std::abs(fb));
    if (j % 2 == 1) gauss += kWg[j / 2] * (fa + fb);
  }
  kronrod *= h;
  gauss *= h;
  resabs *= h;
  double err = std::abs(kronrod - gauss);
  // QUADPACK-style error sharpening.
  if (resabs != 0.0 && err != 0.0) {
    const double scale = std::pow(200.0 * err / resabs, 1.5);
    if (scale < 1.0) err = resabs * scale;
  }
  return Segment{lo, hi, kronrod, err};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, const Domain& domain,
                     const QuadOptions& opts) {
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be positive");
  }
  const Transform tr = make_transform(domain);
  Evaluator eval(f, tr, opts.max_evaluations);

  // Initial boundaries: a uniform grid plus the mapped split hints.
  std::vector<double> bounds;
  const int kBaseSegments = 16;
  for (int i = 0; i <= kBaseSegments; ++i) {
    bounds.push_back(tr.t_lo + (tr.t_hi - tr.t_lo) * i / kBaseSegments);
  }
  for (double hx : opts.split_hints) {
    const double t = tr.t_of_x(hx);
    if (t > tr.t_lo && t < tr.t_hi) bounds.push_back(t);
  }
  std::sort(bounds.begin(), bounds.end());
  const double span = tr.t_hi - tr.t_lo;
  bounds.erase(std::unique(bounds.begin(), bounds.end(),
                           [span](double p, double q) {
                             return std::abs(q - p) < 1e-14 * span;
                           }),
               bounds.end());

  std::priority_queue<Segment> queue;
  double total = 0.0, total_err = 0.0;
  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    Segment s = gk15(eval, bounds[i], bounds[i + 1]);
    total += s.value;
    total_err += s.error;
    queue.push(s);
  }

  const double min_width = 1e-15 * span;
  int stuck = 0;  // segments too narrow to split further
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (queue.empty() || static_cast<size_t>(stuck) == queue.size()) {
      throw NoConvergence("integrate: error target unreachable (" +
                          std::to_string(total_err) + " residual)");
    }
    Segment worst = queue.top();
    queue.pop();
    if (worst.hi - worst.lo < min_width) {
      queue.push(worst);
      ++stuck;
      continue;
    }
    stuck = 0;
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gk15(eval, worst.lo, mid);
    Segment right = gk15(eval, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  return QuadResult{total, total_err, eval.count()};
}

Interval effective_support(const std::function<double(double)>& f, double center,
                           double threshold) {
  constexpr double kStart = 1.0 / 1024.0;
  constexpr double kLimit = 1e6;
  const bool center_above = f(center) >= threshold;

  auto edge = [&](double dir) -> double {
    bool seen_above = center_above;
    for (double w = kStart; w <= kLimit; w *= 2.0) {
      if (f(center + dir * w) >= threshold) {
        seen_above = true;
      } else if (seen_above) {
        return w;
      } else {
        return 0.0;  // nothing above threshold on this side
      }
    }
    throw SupportNotFound("effective_support: f >= threshold out to |x - center| = 1e6");
  };

  const double wl = edge(-1.0);
  const double wr = edge(+1.0);
  return Interval{center - wl, center + wr};
}

}  // namespace qlmc
