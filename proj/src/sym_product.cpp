#include "braidnorm/sym_product.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace braidnorm {

namespace {

constexpr double kPi = std::numbers::pi;

double det3(double a, double b, double c, double d, double e, double f,
            double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

double det4(const double m[4][4]) {
  double det = 0.0;
  for (int c = 0; c < 4; ++c) {
    double sub[9];
    int w = 0;
    for (int r = 1; r < 4; ++r)
      for (int cc = 0; cc < 4; ++cc)
        if (cc != c) sub[w++] = m[r][cc];
    const double minor =
        det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
    det += ((c % 2) ? -1.0 : 1.0) * m[0][c] * minor;
  }
  return det;
}

// Principal rotation from `from` to `to`, in (-pi, pi].
double arg_increment(Complex from, Complex to) {
  const double cross = from.real() * to.imag() - from.imag() * to.real();
  const double dot = from.real() * to.real() + from.imag() * to.imag();
  return std::atan2(cross, dot);
}

}  // namespace

ChartPoint to_chart(Complex x_minus, Complex x_plus) {
  return {x_minus + x_plus, x_minus * x_plus};
}

Complex discriminant(const ChartPoint& pt) { return pt.a * pt.a - 4.0 * pt.b; }

int transversality_sign(const ChartTangent& du_s, const ChartTangent& du_t,
                        Complex a) {
  const Complex half_a = a / 2.0;
  const Complex i_unit(0.0, 1.0);
  const Complex i_half_a = i_unit * half_a;
  const double m[4][4] = {
      {du_s.da.real(), du_t.da.real(), 1.0, 0.0},
      {du_s.da.imag(), du_t.da.imag(), 0.0, 1.0},
      {du_s.db.real(), du_t.db.real(), half_a.real(), i_half_a.real()},
      {du_s.db.imag(), du_t.db.imag(), half_a.imag(), i_half_a.imag()},
  };
  double scale = 1.0;
  for (int c = 0; c < 4; ++c) {
    double norm2 = 0.0;
    for (int r = 0; r < 4; ++r) norm2 += m[r][c] * m[r][c];
    scale *= std::sqrt(norm2);
  }
  const double det = det4(m);
  // Hadamard bound: |det| <= product of column norms.
  if (!(std::abs(det) > 1e-10 * scale)) return 0;
  return det > 0.0 ? 1 : -1;
}

void validate(const Homotopy& h) {
  if (h.m < 1 || h.n < 1) throw std::invalid_argument("grid needs m, n >= 1");
  const std::size_t expect =
      static_cast<std::size_t>(h.m + 1) * static_cast<std::size_t>(h.n + 1);
  if (h.grid.size() != expect)
    throw std::invalid_argument("grid must hold (m+1)*(n+1) chart points");
}

ChartPoint Homotopy::sample(double s, double t) const {
  s = std::clamp(s, 0.0, 1.0);
  t = std::clamp(t, 0.0, 1.0);
  const int i = std::min(static_cast<int>(s * m), m - 1);
  const int j = std::min(static_cast<int>(t * n), n - 1);
  const double u = s * m - i;
  const double v = t * n - j;
  const ChartPoint& p00 = at(i, j);
  const ChartPoint& p10 = at(i + 1, j);
  const ChartPoint& p01 = at(i, j + 1);
  const ChartPoint& p11 = at(i + 1, j + 1);
  const double w00 = (1 - u) * (1 - v), w10 = u * (1 - v);
  const double w01 = (1 - u) * v, w11 = u * v;
  return {w00 * p00.a + w10 * p10.a + w01 * p01.a + w11 * p11.a,
          w00 * p00.b + w10 * p10.b + w01 * p01.b + w11 * p11.b};
}

namespace {

// Raised when a sampled point lies on the diagonal; callers either record
// the zero or re-split away from it.
struct ZeroOnSample {
  double s;
  double t;
};

struct Rect {
  double s0, t0, s1, t1;

  double width() const { return s1 - s0; }
  double height() const { return t1 - t0; }
};

class IntersectionFinder {
 public:
  IntersectionFinder(const Homotopy& h, double tol)
      : h_(h), tol_(tol), nodes_(h.grid.size()) {
    validate(h);
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    tol_ = std::max(tol, 1e-12);
    double scale = 0.0;
    for (std::size_t idx = 0; idx < h.grid.size(); ++idx) {
      nodes_[idx] = discriminant(h.grid[idx]);
      scale = std::max(scale, std::abs(nodes_[idx]));
    }
    if (scale == 0.0)
      throw std::runtime_error("discriminant vanishes on the whole grid");
    eps_zero_ = 1e-13 * scale;
    eps_guard_ = 1e-11 * scale;
  }

  IntersectionCount run() {
    check_boundary_nodes();
    std::vector<char> node_zero(nodes_.size(), 0);
    for (int i = 1; i < h_.m; ++i) {
      for (int j = 1; j < h_.n; ++j) {
        if (std::abs(node_at(i, j)) <= eps_zero_) {
          node_zero[node_index(i, j)] = 1;
          record_zero(static_cast<double>(i) / h_.m, static_cast<double>(j) / h_.n);
        }
      }
    }
    for (int i = 0; i < h_.m; ++i) {
      for (int j = 0; j < h_.n; ++j) {
        if (node_zero[node_index(i, j)] || node_zero[node_index(i + 1, j)] ||
            node_zero[node_index(i, j + 1)] || node_zero[node_index(i + 1, j + 1)])
          continue;  // the zero at the shared node already accounts for it
        const Rect cell{static_cast<double>(i) / h_.m, static_cast<double>(j) / h_.n,
                        static_cast<double>(i + 1) / h_.m,
                        static_cast<double>(j + 1) / h_.n};
        int w;
        try {
          w = winding(cell);
        } catch (const ZeroOnSample& z) {
          // A zero sits exactly on a grid line; both neighbouring cells see
          // it, record_zero deduplicates.
          record_zero(z.s, z.t);
          continue;
        }
        process_rect(cell, w, 0);
      }
    }
    std::sort(records_.begin(), records_.end(),
              [](const IntersectionRecord& x, const IntersectionRecord& y) {
                return std::tie(x.cell_i, x.cell_j, x.s, x.t) <
                       std::tie(y.cell_i, y.cell_j, y.s, y.t);
              });
    IntersectionCount out;
    out.records = std::move(records_);
    for (const IntersectionRecord& r : out.records) out.total += r.sign;
    return out;
  }

 private:
  std::size_t node_index(int i, int j) const {
    return static_cast<std::size_t>(i) * (h_.n + 1) + j;
  }
  Complex node_at(int i, int j) const { return nodes_[node_index(i, j)]; }

  Complex field(double s, double t) const { return discriminant(h_.sample(s, t)); }

  void check_boundary_nodes() const {
    auto guard = [this](int i, int j) {
      if (std::abs(node_at(i, j)) <= eps_guard_) {
        std::ostringstream os;
        os << "diagonal intersection on or too near the grid boundary at node ("
           << i << ", " << j << ")";
        throw std::runtime_error(os.str());
      }
    };
    for (int i = 0; i <= h_.m; ++i) {
      guard(i, 0);
      guard(i, h_.n);
    }
    for (int j = 0; j <= h_.n; ++j) {
      guard(0, j);
      guard(h_.m, j);
    }
  }

  Complex checked_value(double s, double t) const {
    const Complex f = field(s, t);
    if (std::abs(f) <= eps_zero_) throw ZeroOnSample{s, t};
    return f;
  }

  double edge_arg(double s0, double t0, Complex f0, double s1, double t1,
                  Complex f1, int depth) const {
    const double inc = arg_increment(f0, f1);
    if (std::abs(inc) <= kPi / 2) return inc;
    if (depth >= 48)
      throw std::runtime_error(
          "cannot resolve the discriminant argument along a cell edge "
          "(degenerate or undersampled field)");
    const double sm = 0.5 * (s0 + s1), tm = 0.5 * (t0 + t1);
    const Complex fm = checked_value(sm, tm);
    return edge_arg(s0, t0, f0, sm, tm, fm, depth + 1) +
           edge_arg(sm, tm, fm, s1, t1, f1, depth + 1);
  }

  int winding(const Rect& r) const {
    const Complex f00 = checked_value(r.s0, r.t0);
    const Complex f10 = checked_value(r.s1, r.t0);
    const Complex f11 = checked_value(r.s1, r.t1);
    const Complex f01 = checked_value(r.s0, r.t1);
    const double total = edge_arg(r.s0, r.t0, f00, r.s1, r.t0, f10, 0) +
                         edge_arg(r.s1, r.t0, f10, r.s1, r.t1, f11, 0) +
                         edge_arg(r.s1, r.t1, f11, r.s0, r.t1, f01, 0) +
                         edge_arg(r.s0, r.t1, f01, r.s0, r.t0, f00, 0);
    const double turns = total / (2 * kPi);
    const int w = static_cast<int>(std::lround(turns));
    if (std::abs(turns - w) > 0.1)
      throw std::runtime_error("winding accumulation failed to close up");
    return w;
  }

  void process_rect(const Rect& r, int w, int depth) {
    if (w == 0) return;
    if (std::max(r.width(), r.height()) < tol_) {
      if (w == 1 || w == -1) {
        emit(0.5 * (r.s0 + r.s1), 0.5 * (r.t0 + r.t1));
        return;
      }
      std::ostringstream os;
      os << "winding " << w << " cell of diameter < tol near ("
         << 0.5 * (r.s0 + r.s1) << ", " << 0.5 * (r.t0 + r.t1)
         << "): non-transverse or clustered intersection";
      throw std::runtime_error(os.str());
    }
    if (depth > 80)
      throw std::runtime_error("subdivision depth exhausted (degenerate field)");

    // A zero can sit exactly on a candidate split line (model grids put it
    // at the cell centre); move the split until the line misses it. When
    // every candidate hits, the sampled point is the zero itself.
    static constexpr double kFractions[] = {0.5, 0.421875, 0.578125, 1.0 / 3.0};
    ZeroOnSample last_hit{};
    bool have_hit = false;
    for (const double frac : kFractions) {
      const double sm = r.s0 + frac * r.width();
      const double tm = r.t0 + frac * r.height();
      const Rect sub[4] = {{r.s0, r.t0, sm, tm},
                           {sm, r.t0, r.s1, tm},
                           {r.s0, tm, sm, r.t1},
                           {sm, tm, r.s1, r.t1}};
      int ws[4];
      try {
        for (int q = 0; q < 4; ++q) ws[q] = winding(sub[q]);
      } catch (const ZeroOnSample& z) {
        last_hit = z;
        have_hit = true;
        continue;
      }
      if (ws[0] + ws[1] + ws[2] + ws[3] != w)
        throw std::runtime_error(
            "winding not conserved under subdivision (degenerate field)");
      for (int q = 0; q < 4; ++q) process_rect(sub[q], ws[q], depth + 1);
      return;
    }
    if (have_hit) {
      record_zero(last_hit.s, last_hit.t);
      return;
    }
    throw std::runtime_error("subdivision kept hitting the diagonal");
  }

  void record_zero(double s, double t) {
    if (s <= 1e-12 || 1.0 - s <= 1e-12 || t <= 1e-12 || 1.0 - t <= 1e-12) {
      std::ostringstream os;
      os << "diagonal intersection on or too near the grid boundary at (" << s
         << ", " << t << ")";
      throw std::runtime_error(os.str());
    }
    // Duplicates come from the two cells sharing the grid line a zero sits
    // on; distinct zeros are never merged across more than a fraction of a
    // cell.
    const double radius =
        std::min(4 * tol_, 0.125 * std::min(1.0 / h_.m, 1.0 / h_.n));
    for (const IntersectionRecord& r : records_)
      if (std::hypot(r.s - s, r.t - t) <= radius) return;
    emit(s, t);
  }

  void emit(double s, double t) {
    const double ds = 1.0 / (h_.m * 1024.0);
    const double dt = 1.0 / (h_.n * 1024.0);
    const Complex fs = (field(s + ds, t) - field(s - ds, t)) / (2 * ds);
    const Complex ft = (field(s, t + dt) - field(s, t - dt)) / (2 * dt);
    const double det = fs.real() * ft.imag() - fs.imag() * ft.real();
    if (!(std::abs(det) > 1e-10 * (std::abs(fs) * std::abs(ft)))) {
      std::ostringstream os;
      os << "degenerate (non-transverse) intersection at (" << s << ", " << t << ")";
      throw std::runtime_error(os.str());
    }
    const int jac_sign = det > 0 ? 1 : -1;

    const ChartPoint base = h_.sample(s, t);
    const ChartTangent du_s{(h_.sample(s + ds, t).a - h_.sample(s - ds, t).a) / (2 * ds),
                            (h_.sample(s + ds, t).b - h_.sample(s - ds, t).b) / (2 * ds)};
    const ChartTangent du_t{(h_.sample(s, t + dt).a - h_.sample(s, t - dt).a) / (2 * dt),
                            (h_.sample(s, t + dt).b - h_.sample(s, t - dt).b) / (2 * dt)};
    const int det_sign = transversality_sign(du_s, du_t, base.a);
    if (det_sign == 0) {
      std::ostringstream os;
      os << "degenerate tangent data at (" << s << ", " << t << ")";
      throw std::runtime_error(os.str());
    }
    if (det_sign != jac_sign)
      throw std::logic_error(
          "internal error: Jacobian sign and 4x4 determinant sign disagree");

    // A simple transverse zero winds exactly once, with the Jacobian's
    // sign; anything else (a multiple zero, a cluster below grid scale)
    // must be reported.
    const double hw = std::min(std::max(2 * tol_, std::min(ds, dt)), 0.25);
    const double ps = std::clamp(s, hw, 1.0 - hw);
    const double pt = std::clamp(t, hw, 1.0 - hw);
    int local_winding;
    try {
      local_winding = winding({ps - hw, pt - hw, ps + hw, pt + hw});
    } catch (const ZeroOnSample&) {
      std::ostringstream os;
      os << "clustered intersections near (" << s << ", " << t << ")";
      throw std::runtime_error(os.str());
    }
    if (local_winding != jac_sign) {
      std::ostringstream os;
      os << "non-transverse or clustered intersection at (" << s << ", " << t
         << "): local winding " << local_winding;
      throw std::runtime_error(os.str());
    }

    IntersectionRecord rec;
    rec.cell_i = std::min(static_cast<int>(s * h_.m), h_.m - 1);
    rec.cell_j = std::min(static_cast<int>(t * h_.n), h_.n - 1);
    rec.s = s;
    rec.t = t;
    rec.sign = jac_sign;
    records_.push_back(rec);
  }

  const Homotopy& h_;
  double tol_;
  std::vector<Complex> nodes_;
  double eps_zero_ = 0.0;
  double eps_guard_ = 0.0;
  std::vector<IntersectionRecord> records_;
};

}  // namespace

IntersectionCount signed_intersections(const Homotopy& h, double tol) {
  return IntersectionFinder(h, tol).run();
}

int boundary_winding(const Homotopy& h) {
  validate(h);
  double scale = 0.0;
  std::vector<Complex> nodes(h.grid.size());
  for (std::size_t idx = 0; idx < h.grid.size(); ++idx) {
    nodes[idx] = discriminant(h.grid[idx]);
    scale = std::max(scale, std::abs(nodes[idx]));
  }
  if (scale == 0.0)
    throw std::runtime_error("discriminant vanishes on the whole grid");
  const double eps = 1e-11 * scale;
  auto value = [&](int i, int j) {
    const Complex f = nodes[static_cast<std::size_t>(i) * (h.n + 1) + j];
    if (std::abs(f) <= eps) {
      std::ostringstream os;
      os << "diagonal intersection on or too near the grid boundary at node ("
         << i << ", " << j << ")";
      throw std::runtime_error(os.str());
    }
    return f;
  };
  std::vector<Complex> loop;
  loop.reserve(2 * (h.m + h.n));
  for (int i = 0; i <= h.m; ++i) loop.push_back(value(i, 0));
  for (int j = 1; j <= h.n; ++j) loop.push_back(value(h.m, j));
  for (int i = h.m - 1; i >= 0; --i) loop.push_back(value(i, h.n));
  for (int j = h.n - 1; j >= 1; --j) loop.push_back(value(0, j));
  double total = 0.0;
  for (std::size_t idx = 0; idx < loop.size(); ++idx) {
    const double inc = arg_increment(loop[idx], loop[(idx + 1) % loop.size()]);
    if (std::abs(inc) > kPi / 2 + 1e-9)
      throw std::runtime_error(
          "boundary undersampled: argument increment exceeds pi/2");
    total += inc;
  }
  const double turns = total / (2 * kPi);
  const int w = static_cast<int>(std::lround(turns));
  if (std::abs(turns - w) > 1e-6)
    throw std::runtime_error("boundary winding failed to close up");
  return w;
}

Homotopy elementary_model(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("model grids need m, n >= 2");
  Homotopy h;
  h.m = m;
  h.n = n;
  h.grid.resize(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int i = 0; i <= m; ++i) {
    const double sigma = 2.0 * i / m - 1.0;
    for (int j = 0; j <= n; ++j) {
      const double tau = 2.0 * j / n - 1.0;
      h.at(i, j) = {Complex(0.0, 0.0), -Complex(sigma, tau)};
    }
  }
  return h;
}

Homotopy sigma_contraction_model(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("model grids need m, n >= 2");
  Homotopy h;
  h.m = m;
  h.n = n;
  h.grid.resize(static_cast<std::size_t>(m + 1) * (n + 1));
  for (int i = 0; i <= m; ++i) {
    const double s = static_cast<double>(i) / m;
    for (int j = 0; j <= n; ++j) {
      const double t = static_cast<double>(j) / n;
      const Complex c = (1.0 - s) * std::polar(1.0, 2 * kPi * t) + (s - 0.5);
      h.at(i, j) = {Complex(0.0, 0.0), -c};
    }
  }
  return h;
}

Rational action_difference(const LinkParams& params, const WeightPair& pair,
                           long long n_delta, const std::vector<long long>& m) {
  validate(params);
  validate(params, pair);
  if (static_cast<long>(m.size()) != params.p)
    throw std::invalid_argument("disc winding vector must have p entries");
  Rational acc = eta_diff(params, pair) * rational_from(n_delta);
  for (long j = 0; j < params.p; ++j)
    acc += rational_from(m[j]) * (pair.v2.s[j] - pair.v1.s[j]);
  return acc / (params.k + params.g);
}

}  // namespace braidnorm
