#include "symsteer/lorentz.hpp"

#include <cmath>
#include <random>

#include <Eigen/Geometry>

namespace symsteer {

namespace {

using Vec12 = Eigen::Matrix<double, 12, 1>;
using Vec16 = Eigen::Matrix<double, 16, 1>;

struct Evaluation {
  Vec16 r = Vec16::Constant(1e3);
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  double scale = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
};

Eigen::Matrix4d template_matrix(double a0, double a1) {
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  t(0, 0) = 1.0;
  t(1, 1) = a1;
  t(2, 2) = -a1;
  t(3, 0) = 1.0 - a0;
  t(3, 3) = a0;
  return t;
}

class Problem {
 public:
  Problem(const Eigen::Matrix4d& lambda, const Eigen::Matrix4d& la, const Eigen::Matrix4d& lb)
      : lambda_(lambda), la_(la), lb_(lb) {}

  Eigen::Matrix4d alice(const Vec12& p) const {
    return lorentz_boost(p.segment<3>(0)) * lorentz_rotation(p.segment<3>(3)) * la_;
  }
  Eigen::Matrix4d bob(const Vec12& p) const {
    return lorentz_boost(p.segment<3>(6)) * lorentz_rotation(p.segment<3>(9)) * lb_;
  }

  Evaluation evaluate(const Vec12& p) const {
    Evaluation e;
    const Eigen::Matrix4d m = alice(p) * lambda_ * bob(p).transpose();
    e.scale = m(0, 0);
    if (!(e.scale > 1e-300) || !m.allFinite()) return e;
    e.m = m / e.scale;
    e.a1 = 0.5 * (e.m(1, 1) - e.m(2, 2));
    e.a0 = 0.5 * ((1.0 - e.m(3, 0)) + e.m(3, 3));
    const Eigen::Matrix4d d = e.m - template_matrix(e.a0, e.a1);
    e.r = Eigen::Map<const Vec16>(d.data());
    return e;
  }

 private:
  Eigen::Matrix4d lambda_;
  Eigen::Matrix4d la_;
  Eigen::Matrix4d lb_;
};

// Levenberg-Marquardt with a central-difference Jacobian.
Vec12 polish(const Problem& prob, Vec12 p, double& cost_out) {
  Evaluation cur = prob.evaluate(p);
  double cost = cur.r.squaredNorm();
  double mu = 1e-3;
  for (int iter = 0; iter < 300 && cost > 1e-28; ++iter) {
    Eigen::Matrix<double, 16, 12> jac;
    for (int j = 0; j < 12; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(p[j]));
      Vec12 hi = p, lo = p;
      hi[j] += h;
      lo[j] -= h;
      jac.col(j) = (prob.evaluate(hi).r - prob.evaluate(lo).r) / (2.0 * h);
    }
    const Eigen::Matrix<double, 12, 12> jtj = jac.transpose() * jac;
    const Vec12 g = jac.transpose() * cur.r;
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::Matrix<double, 12, 12> a = jtj;
      a.diagonal().array() += mu * (jtj.diagonal().array() + 1e-12);
      const Vec12 step = a.ldlt().solve(-g);
      const Vec12 trial = p + step;
      const Evaluation next = prob.evaluate(trial);
      const double c = next.r.squaredNorm();
      if (c < cost) {
        p = trial;
        cur = next;
        const double gain = cost - c;
        cost = c;
        mu = std::max(mu / 3.0, 1e-12);
        improved = true;
        if (step.norm() < 1e-15 || gain < 1e-32) iter = 1 << 20;
        break;
      }
      mu *= 4.0;
    }
    if (!improved) break;
  }
  cost_out = cost;
  return p;
}

}  // namespace

Eigen::Matrix4d lorentz_rotation(const Eigen::Vector3d& w) {
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  const double angle = w.norm();
  if (angle > 0.0) l.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, w / angle).toRotationMatrix();
  return l;
}

Eigen::Matrix4d lorentz_boost(const Eigen::Vector3d& eta) {
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  const double r = eta.norm();
  if (r == 0.0) return l;
  const Eigen::Vector3d n = eta / r;
  const double ch = std::cosh(r), sh = std::sinh(r);
  l(0, 0) = ch;
  l.block<1, 3>(0, 1) = sh * n.transpose();
  l.block<3, 1>(1, 0) = sh * n;
  l.block<3, 3>(1, 1) += (ch - 1.0) * n * n.transpose();
  return l;
}

Eigen::Matrix4d boost_to_rest(const Eigen::Vector3d& b) {
  const double b2 = b.squaredNorm();
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  if (b2 == 0.0) return l;
  const double g = 1.0 / std::sqrt(1.0 - b2);
  l(0, 0) = g;
  l.block<1, 3>(0, 1) = -g * b.transpose();
  l.block<3, 1>(1, 0) = -g * b;
  l.block<3, 3>(1, 1) += (g - 1.0) * b * b.transpose() / b2;
  return l;
}

TypeTwoFit fit_type_two(const Eigen::Matrix4d& lambda, const Eigen::Vector4d& x0) {
  // Seed: the null direction goes to (1, 0, 0, -1), Bob is boosted to rest,
  // then the polar factor of the spatial block is rotated away.
  Eigen::Vector4d x = x0[0] < 0.0 ? Eigen::Vector4d(-x0) : x0;
  Eigen::Vector3d n = x.tail<3>();
  Eigen::Matrix4d la = Eigen::Matrix4d::Identity();
  if (n.norm() > 0.0) {
    la.block<3, 3>(1, 1) =
        Eigen::Quaterniond::FromTwoVectors(n.normalized(), -Eigen::Vector3d::UnitZ())
            .toRotationMatrix();
  }
  Eigen::Matrix4d m = la * lambda;
  Eigen::Matrix4d lb = Eigen::Matrix4d::Identity();
  if (m(0, 0) > 0.0) {
    const Eigen::Vector3d b = m.block<1, 3>(0, 1).transpose() / m(0, 0);
    if (b.squaredNorm() < 1.0 - 1e-12) lb = boost_to_rest(b);
  }
  m = m * lb.transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m.block<3, 3>(1, 1),
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d w = svd.matrixU() * svd.matrixV().transpose();
  Eigen::Matrix3d rb = Eigen::Vector3d(1.0, -1.0, 1.0).asDiagonal() * w;
  if (rb.determinant() < 0.0) rb = w;
  Eigen::Matrix4d rb4 = Eigen::Matrix4d::Identity();
  rb4.block<3, 3>(1, 1) = rb;
  lb = rb4 * lb;

  const Problem prob(lambda, la, lb);
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> jitter(0.0, 0.5);

  Vec12 best = Vec12::Zero();
  double best_cost = prob.evaluate(best).r.squaredNorm();
  if (best_cost > 1e-26) {
    for (int attempt = 0; attempt < 10; ++attempt) {
      Vec12 start = Vec12::Zero();
      if (attempt > 0) {
        for (int j = 0; j < 12; ++j) start[j] = jitter(rng);
      }
      double cost = 0.0;
      Vec12 p = polish(prob, start, cost);
      if (cost < best_cost) {
        best_cost = cost;
        best = p;
      }
      if (best_cost < 1e-26) break;
    }
  }

  const Evaluation e = prob.evaluate(best);
  TypeTwoFit fit;
  fit.alice = prob.alice(best);
  fit.bob = prob.bob(best);
  fit.normalised = e.m;
  fit.scale = e.scale;
  fit.a0 = e.a0;
  fit.a1 = e.a1;
  fit.residual = e.r.norm();
  return fit;
}

}  // namespace symsteer
